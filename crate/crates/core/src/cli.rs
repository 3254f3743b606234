//! The `packtriple` command line.
//!
//! Exit codes: 0 on success (a witness for `solve`, no counterexamples for
//! `verify`), 1 for `no-packing` or when `verify` finds counterexamples, 2
//! for any error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::conditions::{check, TheoremId};
use crate::error::{Error, Result};
use crate::format::{parse_triple, write_triple, write_witness};
use crate::generators::{be_bad_triple, generate, FamilyParams, FamilyTag};
use crate::solver::{solve, Method};
use crate::triple::Triple;
use crate::verifier::{default_max_edge_sum, verify_theorem, EnumSpec, Mode, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "packtriple", version, about = "List packing of graph triples")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a packing; prints `packing ...` or `no-packing`.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "backtrack", value_parser = parse_method)]
        method: Method,
    },
    /// Report which sufficient conditions hold, one line per condition.
    Check { file: PathBuf },
    /// Write a named family as a triple file.
    Gen(GenArgs),
    /// Enumerate triples and check a condition's prediction on each.
    Verify(VerifyArgs),
    /// Write the seven exceptional pairs as triple files.
    Badpairs {
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: FamilyTag,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub mp: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_theorem)]
    pub theorem: TheoremId,
    #[arg(long)]
    pub n: usize,
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    #[arg(long, requires = "seed")]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Defaults to the largest edge sum the condition allows.
    #[arg(long)]
    pub max_edge_sum: Option<usize>,
    /// Degree caps `d1,d2,d3`.
    #[arg(long, value_parser = parse_caps)]
    pub caps: Option<(usize, usize, usize)>,
    /// Also run the condition's constructive algorithm.
    #[arg(long)]
    pub constructive: bool,
    /// Print only the single-line summary.
    #[arg(long)]
    pub summary: bool,
    /// Directory for counterexample triple files.
    #[arg(long)]
    pub counterexamples: Option<PathBuf>,
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<FamilyTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorem(s: &str) -> std::result::Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_caps(s: &str) -> std::result::Result<(usize, usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("expected d1,d2,d3, got `{s}`"));
    };
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad cap `{x}`"));
    Ok((num(a)?, num(b)?, num(c)?))
}

fn read_triple(path: &Path) -> Result<Triple> {
    let text = fs::read_to_string(path)?;
    parse_triple(&text).map_err(|e| match e {
        Error::Parse { line, column, message } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

/// Runs a parsed command, writing normal output to `out`. Returns the exit
/// code; errors are returned for the caller to print.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Solve { file, method } => {
            let t = read_triple(&file)?;
            match solve(&t, method)? {
                Some(f) => {
                    writeln!(out, "{}", write_witness(&f))?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "no-packing")?;
                    Ok(1)
                }
            }
        }
        Command::Check { file } => {
            let t = read_triple(&file)?;
            for theorem in TheoremId::ALL {
                match check(theorem, &t) {
                    Ok(r) => writeln!(out, "{r}")?,
                    Err(Error::Precondition(msg)) => writeln!(out, "{theorem} unavailable ({msg})")?,
                    Err(e) => return Err(e),
                }
            }
            Ok(0)
        }
        Command::Gen(g) => {
            let params = FamilyParams {
                m: g.m,
                mp: g.mp,
                k: g.k,
            };
            let text = write_triple(&generate(g.family, g.n, params)?);
            match g.out {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Verify(v) => {
            let mode = match (v.exhaustive, v.samples, v.seed) {
                (_, Some(count), Some(seed)) => Mode::Sample { count, seed },
                (_, None, _) => Mode::Exhaustive,
                (_, Some(_), None) => return Err(Error::InvalidParams("--samples needs --seed".into())),
            };
            let spec = EnumSpec {
                n: v.n,
                max_edge_sum: v.max_edge_sum.unwrap_or_else(|| default_max_edge_sum(v.theorem, v.n)),
                degree_caps: v.caps,
                mode,
                range: None,
            };
            let opts = VerifyOptions {
                workers: v.workers,
                constructive: v.constructive,
                drop_be_exception: false,
                counterexample_dir: v.counterexamples,
            };
            let report = verify_theorem(v.theorem, &spec, &opts)?;
            if v.summary {
                writeln!(out, "{}", report.summary_line())?;
            } else {
                out.write_all(report.render().as_bytes())?;
            }
            Ok(if report.counterexamples.is_empty() { 0 } else { 1 })
        }
        Command::Badpairs { out: dir } => {
            fs::create_dir_all(&dir)?;
            for i in 1..=7 {
                let path = dir.join(format!("be{i}.triple"));
                fs::write(&path, write_triple(&be_bad_triple(i)?))?;
                writeln!(out, "{}", path.display())?;
            }
            Ok(0)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    main_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
