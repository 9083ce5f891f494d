//! `pcomp`: build, verify and realize p-edge clique covers of cycles and
//! their complements from the command line.
//!
//! Exit codes: 0 success (valid / yes), 1 invalid cover or negative
//! decision, 2 usage, I/O, parse or scale errors, 3 infeasible parameters.

mod survey;

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use pcomp_core::oracle::{
    exact_theta_e_p_with_guard, exact_theta_e_with_guard, is_p_competition_with_guard,
    DEFAULT_THETA_E_GUARD, DEFAULT_THETA_E_P_GUARD,
};
use pcomp_core::{
    complement, complement_cycle_cover, cycle_cover, lift_cover, make_cycle, p_competition_graph,
    realize, realize_acyclic, verify_p_ecc, CliqueCover, Digraph, Graph,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "pcomp",
    version,
    about = "p-competition graphs of cycles and their complements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cycle,
    CoCycle,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Tsv,
    Dot,
}

/// `a..b` (inclusive) or a single integer.
#[derive(Clone, Debug)]
pub struct Span(RangeInclusive<usize>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad integer {t:?}: {e}"))
        };
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if a > b {
            return Err(format!("empty range {s}"));
        }
        Ok(Span(a..=b))
    }
}

#[derive(clap::Args)]
struct Output {
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit C_n or its complement.
    Gen {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Emit the cover construction for a family, lifted to p when asked.
    Cover {
        family: Family,
        #[arg(long)]
        n: usize,
        /// Cover parameter; cycles default to 1, complements are lifted
        /// only when it is given.
        #[arg(long)]
        p: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Check that COVER is a p-edge clique cover of GRAPH.
    Verify {
        graph: PathBuf,
        cover: PathBuf,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Build the digraph with an arc (x, j) for every x in set j.
    Realize {
        cover: PathBuf,
        /// Attach set j to the j-th vertex of --order; requires the
        /// ordering condition and yields an acyclic digraph.
        #[arg(long, requires = "order")]
        acyclic: bool,
        /// Comma-separated permutation of 0..n.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Compute the p-competition graph of a digraph.
    Compete {
        digraph: PathBuf,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Exact edge clique cover number.
    #[command(name = "theta-e")]
    ThetaE {
        graph: PathBuf,
        /// Stop at this many cliques and report exceeds-bound.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_THETA_E_GUARD)]
        guard: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Exact p-edge clique cover number up to a budget.
    #[command(name = "theta-e-p")]
    ThetaEP {
        graph: PathBuf,
        #[arg(long)]
        p: usize,
        /// Defaults to the vertex count.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_THETA_E_P_GUARD)]
        guard: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Decide whether GRAPH is a p-competition graph (exit 0 yes, 1 no).
    Decide {
        graph: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = DEFAULT_THETA_E_P_GUARD)]
        guard: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Tabulate decisions over ranges of n and p.
    Survey {
        family: Family,
        /// Range a..b of vertex counts.
        #[arg(long, alias = "range")]
        n: Span,
        #[arg(long)]
        p: Span,
        #[arg(long, default_value_t = DEFAULT_THETA_E_P_GUARD)]
        guard: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(message: impl fmt::Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<pcomp_core::Error> for Failure {
    fn from(e: pcomp_core::Error) -> Self {
        let code = match e {
            pcomp_core::Error::Infeasible(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("pcomp: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Gen {
            family,
            n,
            format,
            out,
        } => {
            let g = family_graph(family, n)?;
            emit_graph(&g, format, &out)?;
            Ok(0)
        }
        Command::Cover { family, n, p, out } => {
            let cover = match family {
                Family::Cycle => cycle_cover(n, p.unwrap_or(1))?,
                Family::CoCycle => {
                    let base = complement_cycle_cover(n)?;
                    match p {
                        Some(p) => lift_cover(&base, p)?,
                        None => base,
                    }
                }
            };
            if cover.len() > n {
                eprintln!(
                    "pcomp: note: {} sets exceed n = {n}; the cover cannot be realized",
                    cover.len()
                );
            }
            write_json(&cover, &out)?;
            Ok(0)
        }
        Command::Verify {
            graph,
            cover,
            p,
            out,
        } => {
            let g: Graph = read_json(&graph)?;
            let f: CliqueCover = read_json(&cover)?;
            let verdict = verify_p_ecc(&g, &f, p)?;
            write_json(&verdict, &out)?;
            match verdict.witness() {
                None => Ok(0),
                Some(w) => {
                    eprintln!("pcomp: invalid: {w}");
                    Ok(1)
                }
            }
        }
        Command::Realize {
            cover,
            acyclic,
            order,
            format,
            out,
        } => {
            let f: CliqueCover = read_json(&cover)?;
            let d = match (acyclic, order) {
                (true, Some(order)) => realize_acyclic(&f, &order)?,
                _ => realize(&f)?,
            };
            emit_digraph(&d, format, &out)?;
            Ok(0)
        }
        Command::Compete {
            digraph,
            p,
            format,
            out,
        } => {
            let d: Digraph = read_json(&digraph)?;
            emit_graph(&p_competition_graph(&d, p)?, format, &out)?;
            Ok(0)
        }
        Command::ThetaE {
            graph,
            budget,
            guard,
            out,
        } => {
            let g: Graph = read_json(&graph)?;
            write_json(&exact_theta_e_with_guard(&g, budget, guard)?, &out)?;
            Ok(0)
        }
        Command::ThetaEP {
            graph,
            p,
            budget,
            guard,
            out,
        } => {
            let g: Graph = read_json(&graph)?;
            let budget = budget.unwrap_or(g.n());
            write_json(&exact_theta_e_p_with_guard(&g, p, budget, guard)?, &out)?;
            Ok(0)
        }
        Command::Decide {
            graph,
            p,
            guard,
            out,
        } => {
            let g: Graph = read_json(&graph)?;
            let decision = is_p_competition_with_guard(&g, p, guard)?;
            write_json(&decision, &out)?;
            Ok(if decision.answer { 0 } else { 1 })
        }
        Command::Survey {
            family,
            n,
            p,
            guard,
            format,
            out,
        } => {
            let rows = survey::survey(family, n.0, p.0, guard);
            let text = match format {
                Format::Json => to_json_line(&rows)?,
                Format::Tsv | Format::Dot => survey::to_tsv(&rows),
            };
            write_text(&text, &out)?;
            Ok(0)
        }
    }
}

pub fn family_graph(family: Family, n: usize) -> Result<Graph, pcomp_core::Error> {
    let c = make_cycle(n)?;
    Ok(match family {
        Family::Cycle => c,
        Family::CoCycle => {
            if n < 5 {
                return Err(pcomp_core::Error::InvalidParameter(format!(
                    "co-cycle needs n >= 5, got n = {n}"
                )));
            }
            complement(&c)
        }
    })
}

fn emit_graph(g: &Graph, format: Format, out: &Output) -> Result<(), Failure> {
    match format {
        Format::Dot => write_text(&g.to_dot(), out),
        _ => write_json(g, out),
    }
}

fn emit_digraph(d: &Digraph, format: Format, out: &Output) -> Result<(), Failure> {
    match format {
        Format::Dot => write_text(&d.to_dot(), out),
        _ => write_json(d, out),
    }
}

/// Reads JSON from a file, or standard input for `-`.
fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(Failure::io)?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
}

fn to_json_line<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut text = serde_json::to_string(value).map_err(Failure::io)?;
    text.push('\n');
    Ok(text)
}

fn write_json<T: Serialize>(value: &T, out: &Output) -> Result<(), Failure> {
    write_text(&to_json_line(value)?, out)
}

fn write_text(text: &str, out: &Output) -> Result<(), Failure> {
    match &out.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
        }
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(Failure::io),
    }
}
