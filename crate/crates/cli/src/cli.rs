//! Command-line frontend.
//!
//! Exit codes: 0 for success and positive verdicts, 1 for negative verdicts
//! (not Gotzmann, theorem counterexample), 2 for bad input.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand};
use gotzmann_core::{
    certify, check_edge_bound, f_vector, is_valid_f_vector, kruskal_katona_pseudopower,
    lex_segment_ideal, macaulay_pseudopower, macaulay_rep, stanley_reisner_complex, BigUint,
    MonomialIdeal, SimplicialComplex,
};
use gotzmann_core::{hilbert_ideal, hilbert_quotient, hilbert_ring};
use thiserror::Error;

use crate::formats::{self, FormatError};
use crate::parallel::verify_star_theorem_parallel;
use crate::report::{self, Mode, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "gotzmann",
    version,
    about = "Hilbert functions of monomial ideals, f-vectors and Gotzmann certification"
)]
struct Cli {
    /// Print one key=value pair per line instead of human-readable text.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

fn parse_natural(s: &str) -> Result<BigUint, String> {
    s.parse::<BigUint>()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Macaulay representation of A at degree D.
    MacaulayRep {
        #[arg(value_parser = parse_natural)]
        a: BigUint,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
    },
    /// Macaulay (A^<D>) or Kruskal-Katona (A^(D)) pseudo-power.
    #[command(group(ArgGroup::new("kind").required(true).args(["macaulay", "kk"])))]
    Pseudopower {
        #[arg(long)]
        macaulay: bool,
        #[arg(long)]
        kk: bool,
        #[arg(value_parser = parse_natural)]
        a: BigUint,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
    },
    /// Hilbert functions H(P,K), H(I,K) and H(P/I,K) of an ideal file.
    Hilbert {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// f-vector of a complex file, or of the Stanley-Reisner complex of a
    /// square-free ideal file.
    #[command(group(ArgGroup::new("input").required(true).args(["ideal", "complex"])))]
    Fvector {
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        complex: Option<PathBuf>,
    },
    /// Decide whether an ideal, or the edge ideal of a graph, is Gotzmann.
    #[command(group(ArgGroup::new("input").required(true).args(["ideal", "graph"])))]
    Gotzmann {
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Generation degree; needed for a zero ideal, checked otherwise.
        #[arg(long, requires = "ideal", value_parser = clap::value_parser!(u32).range(1..))]
        degree: Option<u32>,
    },
    /// Check "Gotzmann edge ideal iff star" on every labelled graph.
    VerifyStarTheorem {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=11))]
        max_vertices: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
    },
    /// Ideal generated by the first COUNT degree-D monomials in lex order.
    LexIdeal {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        count: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: FormatError },
    #[error("{0}")]
    Input(String),
}

fn read_with<T>(
    path: &Path,
    parse: impl FnOnce(&str) -> Result<T, FormatError>,
) -> Result<T, CliError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: name.clone(),
        source,
    })?;
    parse(&text).map_err(|source| CliError::Parse { path: name, source })
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

/// Output text plus exit code.
type Outcome = Result<(String, i32), CliError>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mode = if cli.machine {
        Mode::Machine
    } else {
        Mode::Human
    };
    match execute(cli.command, mode) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "gotzmann: error: {e}");
            EXIT_INPUT
        }
    }
}

fn execute(command: Command, mode: Mode) -> Outcome {
    match command {
        Command::MacaulayRep { a, d } => {
            let rep = macaulay_rep(&a, d as usize);
            let text = match mode {
                Mode::Human => format!("{rep}\n"),
                Mode::Machine => {
                    let coeffs: Vec<String> =
                        rep.coefficients().iter().map(ToString::to_string).collect();
                    Report::new()
                        .field("a", "a", &a)
                        .field("d", "d", d)
                        .field("coefficients", "coefficients", coeffs.join(" "))
                        .render(mode)
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Pseudopower { kk, a, d, .. } => {
            let (kind, value) = if kk {
                ("kruskal-katona", kruskal_katona_pseudopower(&a, d as usize))
            } else {
                ("macaulay", macaulay_pseudopower(&a, d as usize))
            };
            let text = match mode {
                Mode::Human => format!("{value}\n"),
                Mode::Machine => Report::new()
                    .field("a", "a", &a)
                    .field("d", "d", d)
                    .field("kind", "kind", kind)
                    .field("value", "value", &value)
                    .render(mode),
            };
            Ok((text, EXIT_OK))
        }
        Command::Hilbert { ideal, degree: k } => {
            let ideal = read_with(&ideal, formats::parse_ideal)?;
            let n = ideal.num_vars();
            let text = Report::new()
                .field("ideal", "ideal", &ideal)
                .field("num_vars", "variables", n)
                .field("degree", "degree", k)
                .field("h_ring", &format!("H(P,{k})"), hilbert_ring(n, k))
                .field("h_ideal", &format!("H(I,{k})"), hilbert_ideal(&ideal, k))
                .field(
                    "h_quotient",
                    &format!("H(P/I,{k})"),
                    hilbert_quotient(&ideal, k),
                )
                .render(mode);
            Ok((text, EXIT_OK))
        }
        Command::Fvector { ideal, complex } => {
            let complex: SimplicialComplex = match (ideal, complex) {
                (Some(path), _) => {
                    let ideal = read_with(&path, formats::parse_ideal)?;
                    stanley_reisner_complex(&ideal)
                        .map_err(|e| input(format!("{}: {e}", path.display())))?
                }
                (None, Some(path)) => read_with(&path, formats::parse_complex)?,
                (None, None) => unreachable!("clap requires one input"),
            };
            let fv = f_vector(&complex);
            let text = match mode {
                Mode::Human => format!("{fv}\n"),
                Mode::Machine => Report::new()
                    .field("f_vector", "f-vector", &fv)
                    .field("dimension", "dimension", complex.dimension())
                    .field("kk_valid", "Kruskal-Katona valid", is_valid_f_vector(&fv))
                    .render(mode),
            };
            Ok((text, EXIT_OK))
        }
        Command::Gotzmann {
            ideal,
            graph,
            degree,
        } => {
            let (ideal, graph) = match (ideal, graph) {
                (Some(path), _) => {
                    let mut ideal: MonomialIdeal = read_with(&path, formats::parse_ideal)?;
                    if let Some(d) = degree {
                        ideal = ideal.with_degree(d).map_err(input)?;
                    }
                    (ideal, None)
                }
                (None, Some(path)) => {
                    let g = read_with(&path, formats::parse_graph)?;
                    (g.edge_ideal(), Some(g))
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            let report = certify(&ideal)
                .map_err(|e| input(format!("{e}; pass --degree for a zero ideal")))?;
            let mut rep = Report::new().field("ideal", "ideal", &ideal);
            if let Some(g) = &graph {
                rep = rep
                    .field("edges", "edges", g.edge_count())
                    .field("is_star", "is_star", g.is_star())
                    .field("edge_bound", "edges < vertices", check_edge_bound(g));
            }
            let mut text = rep.render(mode);
            text.push_str(&report::gotzmann(&report).render(mode));
            let code = if report.is_gotzmann {
                EXIT_OK
            } else {
                EXIT_FALSE
            };
            Ok((text, code))
        }
        Command::VerifyStarTheorem {
            max_vertices,
            workers,
        } => {
            let start = Instant::now();
            let result = verify_star_theorem_parallel(max_vertices as usize, workers as usize);
            let elapsed = (mode == Mode::Human).then(|| start.elapsed());
            match result {
                Ok(summary) => Ok((report::summary(&summary, elapsed).render(mode), EXIT_OK)),
                Err(c) => {
                    let edges: Vec<String> = c
                        .graph
                        .edges()
                        .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
                        .collect();
                    let mut text = Report::new()
                        .field("max_vertices", "max vertices", max_vertices)
                        .field("mismatches", "mismatches", 1)
                        .field("violation", "violation", &c.violation)
                        .field(
                            "counterexample_vertices",
                            "counterexample vertices",
                            c.graph.vertex_count(),
                        )
                        .field(
                            "counterexample_edges",
                            "counterexample edges",
                            edges.join(" "),
                        )
                        .render(mode);
                    if mode == Mode::Human {
                        text.push_str("counterexample graph file:\n");
                        text.push_str(&formats::write_graph(&c.graph));
                    }
                    Ok((text, EXIT_FALSE))
                }
            }
        }
        Command::LexIdeal { n, d, count } => {
            let ideal = lex_segment_ideal(n as usize, d, count).map_err(input)?;
            let text = match mode {
                Mode::Human => formats::write_ideal(&ideal),
                Mode::Machine => {
                    let mut rep = Report::new()
                        .field("n", "n", n)
                        .field("degree", "degree", d)
                        .field("count", "count", count);
                    for g in ideal.generators() {
                        rep = rep.field("generator", "generator", formats::monomial_tokens(g));
                    }
                    rep.render(mode)
                }
            };
            Ok((text, EXIT_OK))
        }
    }
}
