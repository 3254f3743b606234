//! List packing of graph triples.
//!
//! A triple `(G1, G2, G3)` has two `n`-vertex graphs `G1` on `V1` and `G2` on
//! `V2` plus a bipartite "yellow" graph `G3` between `V1` and `V2`. A list
//! packing is a bijection `f: V1 → V2` such that no edge `uv` of `G1` lands
//! on an edge `f(u)f(v)` of `G2` and no vertex `u` is sent to a yellow
//! neighbor. The crate checks packings, finds them (exhaustively, by
//! backtracking, or by the constructive reductions behind the known
//! sufficient conditions), generates the extremal families, and verifies the
//! sufficient conditions empirically over enumerated triples.

pub mod cli;
pub mod conditions;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod solver;
pub mod structure;
pub mod triple;
pub mod verifier;

pub use conditions::{HypothesisReport, Prediction, TheoremId};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_VERTICES};
pub use solver::{backtrack_pack, brute_force_pack, Method};
pub use triple::{Conflict, Counts, DegreeSummary, PackingMap, Relabel, Triple};
