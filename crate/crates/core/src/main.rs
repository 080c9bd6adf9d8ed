use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stl_core::closed_forms::{ExactValue, Quantity};
use stl_core::cycles::find_cycle_of_length;
use stl_core::io::{parse_arclist, render_arclist, render_dot, to_json, DigraphJson};
use stl_core::search::{search_extremal, Objective, Scope, SearchConfig, TheoremTag, VerifyBounds};
use stl_core::{Digraph, FamilySpec, InvariantBundle};

/// Extremal Laplacian energy of digraphs avoiding a directed cycle length.
///
/// Exit codes: 0 success, 1 verification failure (a FAIL row, or a cycle
/// found by `free`), 2 usage or input error.
#[derive(Parser, Debug)]
#[command(name = "stl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a family member, e.g. `fnk:n=5,k=3,s=2`, `bk:parts=4+2+3`, `tt:n=7`, `kd:n=5`.
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Arcs)]
        format: Format,
    },
    /// Print energy, Zagreb index, c2, arc count and degree sequence as JSON.
    Measure {
        /// Family spec, arclist file, or `-` for an arclist on stdin.
        input: String,
    },
    /// Check for a directed cycle of exactly the given length.
    Free {
        input: String,
        #[arg(long)]
        len: usize,
    },
    /// Evaluate a closed-form extremal value.
    Formula {
        #[arg(long, value_enum)]
        quantity: QuantityArg,
        #[arg(long)]
        n: usize,
        /// Block size; the forbidden cycle has length k+1. Ignored by ex_m1.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Exhaustive extremal search over all digraphs of order n.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long = "forbid-cycle")]
        forbid_cycle: usize,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(long)]
        connected_only: bool,
        #[arg(long, env = "STL_JOBS")]
        jobs: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report elapsed_ms as 0 so reports are byte-reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Compare closed form, generator and oracle row by row.
    ///
    /// Tags: turan-ck, le-ck, le-c2, le-c3, m1-c3, fnk-order. Short numbered
    /// aliases are also accepted.
    Verify {
        tag: String,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        /// Largest order checked by exhaustive enumeration; rows past the
        /// enumeration cap are reported as SKIPPED.
        #[arg(long, default_value_t = 5)]
        oracle_n_max: usize,
        #[arg(long, env = "STL_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Arcs,
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum QuantityArg {
    ExLe,
    ExArcs,
    ExM1,
    ExClique,
    ExKd,
    ExTournament,
}

impl From<QuantityArg> for Quantity {
    fn from(q: QuantityArg) -> Self {
        match q {
            QuantityArg::ExLe => Quantity::ExLe,
            QuantityArg::ExArcs => Quantity::ExArcs,
            QuantityArg::ExM1 => Quantity::ExM1,
            QuantityArg::ExClique => Quantity::ExClique,
            QuantityArg::ExKd => Quantity::ExCompleteDigraph,
            QuantityArg::ExTournament => Quantity::ExTournament,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ObjectiveArg {
    Le,
    M1,
    Arcs,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Le => Objective::Le,
            ObjectiveArg::M1 => Objective::M1,
            ObjectiveArg::Arcs => Objective::Arcs,
        }
    }
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<stl_core::Error> for Failure {
    fn from(e: stl_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn default_jobs(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// A family spec string, an arclist path, or `-` for stdin.
fn load(input: &str) -> Result<Digraph, Failure> {
    if input.contains(':') && !std::path::Path::new(input).exists() {
        let spec: FamilySpec = input.parse()?;
        return Ok(spec.build()?);
    }
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?
    };
    Ok(parse_arclist(&text)?)
}

#[derive(Serialize)]
struct FormulaJson {
    quantity: String,
    n: usize,
    k: Option<usize>,
    #[serde(flatten)]
    value: ExactValue,
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen { spec, format } => {
            let spec: FamilySpec = spec.parse()?;
            let g = spec.build()?;
            let blocks = spec.blocks()?;
            let text = match format {
                Format::Arcs => render_arclist(&g),
                Format::Dot => render_dot(&g, Some(&blocks)),
                Format::Json => to_json(&DigraphJson::new(&g, Some(&blocks))),
            };
            print!("{text}");
        }
        Command::Measure { input } => {
            let g = load(&input)?;
            print!("{}", to_json(&InvariantBundle::of(&g)));
        }
        Command::Free { input, len } => {
            let g = load(&input)?;
            match find_cycle_of_length(&g, len)? {
                None => println!("free"),
                Some(cycle) => {
                    for (u, v) in cycle.arcs() {
                        println!("{u} {v}");
                    }
                    return Err(Failure::Verification);
                }
            }
        }
        Command::Formula { quantity, n, k } => {
            let q = Quantity::from(quantity);
            let k_value = match (q, k) {
                (Quantity::ExM1, _) => 2,
                (_, Some(k)) => k,
                (_, None) => {
                    return Err(Failure::Usage("--k is required for this quantity".into()))
                }
            };
            let value = q.evaluate(n, k_value)?;
            let doc = FormulaJson {
                quantity: quantity
                    .to_possible_value()
                    .expect("no skipped variants")
                    .get_name()
                    .to_owned(),
                n,
                k: if matches!(q, Quantity::ExM1) {
                    None
                } else {
                    Some(k_value)
                },
                value,
            };
            print!("{}", to_json(&doc));
        }
        Command::Search {
            n,
            forbid_cycle,
            objective,
            connected_only,
            jobs,
            out,
            no_timing,
        } => {
            let scope = if connected_only {
                Scope::ConnectedOnly
            } else {
                Scope::All
            };
            let config = SearchConfig::new(n, forbid_cycle, objective.into())
                .scope(scope)
                .jobs(default_jobs(jobs));
            let mut report = search_extremal(&config)?;
            if no_timing {
                report.elapsed_ms = 0;
            }
            let text = to_json(&report);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            eprintln!(
                "n={n} forbid={forbid_cycle} objective={}: max {} with {} witness class(es)",
                config.objective,
                report.max_value,
                report.witnesses.len()
            );
        }
        Command::Verify {
            tag,
            n_max,
            k_max,
            oracle_n_max,
            jobs,
        } => {
            let tag: TheoremTag = tag.parse()?;
            let bounds = VerifyBounds {
                n_max,
                k_max,
                oracle_n_max,
                jobs: default_jobs(jobs),
            };
            let table = stl_core::search::verify_theorem(tag, &bounds)?;
            println!("{table}");
            if !table.all_pass() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
