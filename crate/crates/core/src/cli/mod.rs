//! Command-line front end: file format, reports and the random generator.

mod file;
mod random;
mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use file::{parse_algebra, render_algebra, AlgebraFile, AlgebraJson};
pub use random::{random_algebra, MAX_RANDOM_DIM};
pub use report::{
    absorption_section, analyze, centroid_section, decomposition_section, format_combination, prime_ideals_section,
    render_human, to_json, AbsorptionJson, CentroidJson, DecompositionJson, EngineJson, PrimeIdealsJson, RejectedJson,
    Report, Section, VerdictJson, WitnessJson,
};

use crate::algebra::Element;
use crate::analysis::{self, AnalysisConfig, DegeneracyEngine};
use crate::error::Error;
use crate::exactla::{format_rat, parse_rat, Rat};
use crate::graph::DiGraph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "evolalg",
    version,
    about = "Exact analysis of evolution algebras over the rationals"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Degeneracy engine.
    #[arg(long, value_enum, default_value_t = EngineArg::Linear)]
    engine: EngineArg,
    /// Largest height tried in the rational witness search.
    #[arg(long, default_value_t = 50)]
    height_cap: u32,
    /// Largest dimension for which supports are enumerated.
    #[arg(long, default_value_t = 16)]
    support_bound: usize,
}

impl Opts {
    fn config(&self) -> AnalysisConfig {
        let mut cfg = AnalysisConfig {
            support_bound: self.support_bound,
            engine: match self.engine {
                EngineArg::Linear => DegeneracyEngine::Linear,
                EngineArg::Groebner => DegeneracyEngine::Groebner,
            },
            ..AnalysisConfig::default()
        };
        cfg.points.height_cap = self.height_cap;
        cfg
    }
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum EngineArg {
    Linear,
    Groebner,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum CheckArg {
    /// von Neumann regularity: find y with (xy)x = x.
    Vn,
    /// Absolute zero divisor: (x e_i) x = 0 for all i.
    Azd,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every engine and print a full report.
    Analyze {
        /// Algebra file, or `-` for standard input.
        file: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Print the graph of the natural basis in DOT format.
    Graph { file: PathBuf },
    /// List the prime ideals.
    PrimeIdeals {
        file: PathBuf,
        #[command(flatten)]
        opts: Opts,
    },
    /// Compute a basis of the centroid.
    Centroid {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Split a zero-annihilator algebra into indecomposable summands.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Sink strata, upper annihilating series and absorption radical.
    Series {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check a single element.
    Element {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. `1,-1/2,0`.
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
        #[arg(long, value_enum)]
        check: CheckArg,
        #[arg(long)]
        json: bool,
    },
    /// Print a seeded random algebra file.
    Random {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        density: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Serialize)]
struct ElementJson {
    element: Vec<String>,
    check: &'static str,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse: Option<Vec<String>>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundExceeded { .. } | Error::EngineLimit(_) => EXIT_UNDETERMINED,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

fn read_file(path: &PathBuf) -> Result<AlgebraFile, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| input_failure(format!("standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
    }
    parse_algebra(&text).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn parse_coords(s: &str, n: usize) -> Result<Element, Failure> {
    let coords = s
        .split(',')
        .enumerate()
        .map(|(i, t)| parse_rat(t).ok_or_else(|| input_failure(format!("--coords entry {i}: {t:?} is not a rational"))))
        .collect::<Result<Vec<Rat>, Failure>>()?;
    if coords.len() != n {
        return Err(input_failure(format!(
            "--coords has {} entries but the algebra has dimension {n}",
            coords.len()
        )));
    }
    Ok(Element::new(coords))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let write = |out: &mut dyn Write, s: &str| {
        out.write_all(s.as_bytes())
            .map_err(|e| input_failure(format!("writing output: {e}")))
    };
    match command {
        Command::Analyze { file, opts } => {
            let f = read_file(&file)?;
            let r = analyze(&f.algebra, f.description.as_deref(), &opts.config());
            write(out, &if opts.json { to_json(&r) } else { render_human(&r) })?;
            Ok(if r.engine.undetermined {
                EXIT_UNDETERMINED
            } else {
                EXIT_OK
            })
        }
        Command::Graph { file } => {
            let f = read_file(&file)?;
            write(out, &DiGraph::from_algebra(&f.algebra).to_dot(f.algebra.labels()))?;
            Ok(EXIT_OK)
        }
        Command::PrimeIdeals { file, opts } => {
            let f = read_file(&file)?;
            let p = prime_ideals_section(&f.algebra, &opts.config())?;
            let undetermined = !p.undetermined.is_empty();
            if opts.json {
                write(out, &to_json(&p))?;
            } else {
                let mut s = String::new();
                report::render_prime_ideals(&mut s, &Section::Value(p));
                write(out, &s)?;
            }
            Ok(if undetermined { EXIT_UNDETERMINED } else { EXIT_OK })
        }
        Command::Centroid { file, json } => {
            let f = read_file(&file)?;
            let c = centroid_section(&f.algebra)?;
            if json {
                write(out, &to_json(&c))?;
            } else {
                let mut s = String::new();
                report::render_centroid(&mut s, &Section::Value(c));
                write(out, &s)?;
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { file, json } => {
            let f = read_file(&file)?;
            let d = decomposition_section(&f.algebra)?;
            if json {
                write(out, &to_json(&d))?;
            } else {
                let mut s = String::new();
                report::render_decomposition(&mut s, &Section::Value(d));
                write(out, &s)?;
            }
            Ok(EXIT_OK)
        }
        Command::Series { file, json } => {
            let f = read_file(&file)?;
            let a = absorption_section(&f.algebra)?;
            if json {
                write(out, &to_json(&a))?;
            } else {
                let mut s = String::new();
                report::render_absorption(&mut s, &Section::Value(a));
                write(out, &s)?;
            }
            Ok(EXIT_OK)
        }
        Command::Element {
            file,
            coords,
            check,
            json,
        } => {
            let f = read_file(&file)?;
            let x = parse_coords(&coords, f.algebra.dim())?;
            let (name, holds, inverse) = match check {
                CheckArg::Azd => ("azd", analysis::is_absolute_zero_divisor(&f.algebra, &x)?, None),
                CheckArg::Vn => {
                    let y = analysis::vn_element(&f.algebra, &x)?;
                    let inv = y.map(|y| y.coords().iter().map(format_rat).collect::<Vec<_>>());
                    ("vn", inv.is_some(), inv)
                }
            };
            let e = ElementJson {
                element: x.coords().iter().map(format_rat).collect(),
                check: name,
                holds,
                inverse,
            };
            if json {
                write(out, &to_json(&e))?;
            } else {
                let labels = f.algebra.labels();
                let mut s = format!(
                    "{}: {} {}\n",
                    format_combination(labels, &e.element),
                    match name {
                        "azd" => "absolute zero divisor:",
                        _ => "von Neumann regular:",
                    },
                    if holds { "yes" } else { "no" }
                );
                if let Some(inv) = &e.inverse {
                    s.push_str(&format!("inverse: {}\n", format_combination(labels, inv)));
                }
                write(out, &s)?;
            }
            Ok(EXIT_OK)
        }
        Command::Random { dim, density, seed } => {
            let a = random_algebra(dim, density, seed).map_err(|e| input_failure(e.to_string()))?;
            let desc = format!("random dim={dim} density={density} seed={seed}");
            write(out, &render_algebra(&a, Some(&desc)))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Caps the global thread pool from `EVOLALG_THREADS`, if set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("EVOLALG_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("EVOLALG_THREADS={v:?} is not a positive integer"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}
