//! Line-oriented text formats.
//!
//! Triple file:
//!
//! ```text
//! # comment
//! triple 4
//! g1 0 1
//! g2 1 2
//! g3 0 3
//! ```
//!
//! `g1`/`g2` lines are white edges, `g3` lines are yellow pairs
//! `(V1 vertex, V2 vertex)`. Witness: `packing p0 p1 ... p(n-1)`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::triple::{PackingMap, Triple};

/// Renders a triple; edges in lexicographic order, `g1`, then `g2`, then `g3`.
pub fn write_triple(t: &Triple) -> String {
    let mut out = format!("triple {}\n", t.n());
    for (u, v) in t.g1().edges() {
        let _ = writeln!(out, "g1 {u} {v}");
    }
    for (u, v) in t.g2().edges() {
        let _ = writeln!(out, "g2 {u} {v}");
    }
    for (u, w) in t.yellow_pairs() {
        let _ = writeln!(out, "g3 {u} {w}");
    }
    out
}

/// Column (1-based) of the `i`-th whitespace-separated token of `line`.
fn token_column(line: &str, index: usize) -> usize {
    let mut col = 0;
    let mut seen = 0;
    let mut in_token = false;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            in_token = false;
        } else if !in_token {
            in_token = true;
            if seen == index {
                col = i;
                break;
            }
            seen += 1;
        }
    }
    col + 1
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_triple(text: &str) -> Result<Triple> {
    let mut header: Option<usize> = None;
    let mut white1 = Vec::new();
    let mut white2 = Vec::new();
    let mut yellow = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let number = |i: usize| -> Result<usize> {
            let tok = tokens
                .get(i)
                .ok_or_else(|| Error::parse(line_no, line.trim_end().len() + 1, "missing number"))?;
            tok.parse::<usize>()
                .map_err(|_| Error::parse(line_no, token_column(line, i), format!("expected a non-negative integer, found `{tok}`")))
        };
        let arity = |want: usize| -> Result<()> {
            if tokens.len() > want {
                Err(Error::parse(line_no, token_column(line, want), "unexpected trailing token"))
            } else {
                Ok(())
            }
        };

        match (header, tokens[0]) {
            (None, "triple") => {
                let n = number(1)?;
                arity(2)?;
                if n == 0 || n > crate::MAX_VERTICES {
                    return Err(Error::parse(
                        line_no,
                        token_column(line, 1),
                        format!("vertex count must be in 1..={}", crate::MAX_VERTICES),
                    ));
                }
                header = Some(n);
            }
            (None, _) => {
                return Err(Error::parse(line_no, token_column(line, 0), "expected header `triple <n>`"));
            }
            (Some(_), "triple") => {
                return Err(Error::parse(line_no, token_column(line, 0), "duplicate header"));
            }
            (Some(n), tag @ ("g1" | "g2" | "g3")) => {
                let a = number(1)?;
                let b = number(2)?;
                arity(3)?;
                for (i, x) in [(1, a), (2, b)] {
                    if x >= n {
                        return Err(Error::parse(
                            line_no,
                            token_column(line, i),
                            format!("vertex {x} out of range for n = {n}"),
                        ));
                    }
                }
                match tag {
                    "g1" | "g2" if a == b => {
                        return Err(Error::parse(line_no, token_column(line, 1), format!("self-loop at vertex {a} in {tag}")));
                    }
                    "g1" => white1.push((a, b)),
                    "g2" => white2.push((a, b)),
                    _ => yellow.push((a, b)),
                }
            }
            (Some(_), other) => {
                return Err(Error::parse(line_no, token_column(line, 0), format!("unknown line tag `{other}`")));
            }
        }
    }

    let n = header.ok_or_else(|| Error::parse(1, 1, "missing header `triple <n>`"))?;
    Triple::new(Graph::from_edges(n, &white1)?, Graph::from_edges(n, &white2)?, &yellow)
}

pub fn write_witness(f: &PackingMap) -> String {
    let mut out = String::from("packing");
    for &w in f.as_slice() {
        let _ = write!(out, " {w}");
    }
    out
}

pub fn parse_witness(text: &str) -> Result<PackingMap> {
    let line = text
        .lines()
        .map(strip_comment)
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty());
    let Some((idx, line)) = line else {
        return Err(Error::parse(1, 1, "missing `packing` line"));
    };
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("packing") {
        return Err(Error::parse(idx + 1, token_column(line, 0), "expected `packing`"));
    }
    let perm = tokens
        .enumerate()
        .map(|(i, t)| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(idx + 1, token_column(line, i + 1), format!("bad image `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    PackingMap::new(perm)
}
