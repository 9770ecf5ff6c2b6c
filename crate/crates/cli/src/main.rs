use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pvgkit::blocker::{phi, phi_embedding};
use pvgkit::domination::min_degree_dominating;
use pvgkit::family::{Case, Family};
use pvgkit::graph::Diameter;
use pvgkit::grid::{bounds_csv, bounds_table, grid_min_dominating, grid_pvg, GridSpec};
use pvgkit::harness::{all_small_graphs, seeded_graphs, verify_reduction};
use pvgkit::io;
use pvgkit::reductions::{self, Instance, Problem, ReducedInstance};
use pvgkit::visibility::{hamiltonian_cycle, realizes, visibility_graph};
use serde_json::{json, Value};

/// Exact point visibility graph toolkit.
///
/// Exit codes: 0 success or "yes", 1 "no", 2 invalid input.
#[derive(Parser)]
#[command(name = "pvg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Visibility graph of a point document.
    Build {
        points: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Grid visibility graph of {1..n} x {1..m}.
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Graph transformations.
    Transform {
        #[command(subcommand)]
        kind: Transform,
    },
    /// Reduce an instance to one on a point visibility graph.
    Reduce {
        problem: ReducibleProblem,
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Decide an instance exactly. Exits 0 on yes, 1 on no.
    Solve {
        problem: SolvableProblem,
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Compare oracle answers before and after a reduction. Exits 0 iff all agree.
    VerifyReduction {
        problem: ReducibleProblem,
        /// Largest source vertex count.
        #[arg(long)]
        nmax: usize,
        /// Random graphs with 1..=nmax vertices instead of every small graph.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Dominating sets.
    Dominate {
        #[command(subcommand)]
        kind: Dominate,
    },
    /// Structural checks.
    Check {
        #[command(subcommand)]
        kind: Check,
    },
}

#[derive(Subcommand)]
enum Transform {
    /// Add a universal blocker for every non-edge.
    Phi {
        graph: PathBuf,
        /// Write a certified visibility embedding of the result here.
        #[arg(long)]
        embed: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Dominate {
    /// Minimum dominating set of the n x n grid, or a bounds table.
    Grid {
        #[arg(long, required_unless_present = "table")]
        n: Option<usize>,
        /// Tabulate f(n) and the logarithmic bounds for n = 2..=TABLE.
        #[arg(long)]
        table: Option<usize>,
        /// Write the table here instead of standard output.
        #[arg(long, requires = "table")]
        csv: Option<PathBuf>,
    },
    /// Dominating set from the lines through a minimum-degree point.
    Embed { points: PathBuf },
}

#[derive(Subcommand)]
enum Check {
    /// Diameter of a graph document.
    Diameter { graph: PathBuf },
    /// Hamiltonian cycle of the visibility graph of a point document.
    Hamiltonian { points: PathBuf },
    /// Whether a point document realizes a graph document. Exits 1 if not.
    Realizes { points: PathBuf, graph: PathBuf },
}

#[derive(Args)]
struct FamilyArgs {
    /// Family document for ffvd.
    #[arg(long)]
    family: Option<PathBuf>,
    #[arg(long, value_parser = parse_case)]
    case: Option<Case>,
}

fn parse_case(s: &str) -> Result<Case, String> {
    s.parse().map_err(|e: pvgkit::Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum ReducibleProblem {
    Fvs,
    Lip,
    Bisection,
    Ffvd,
}

impl From<ReducibleProblem> for Problem {
    fn from(p: ReducibleProblem) -> Self {
        match p {
            ReducibleProblem::Fvs => Problem::Fvs,
            ReducibleProblem::Lip => Problem::Lip,
            ReducibleProblem::Bisection => Problem::Bisection,
            ReducibleProblem::Ffvd => Problem::Ffvd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SolvableProblem {
    Fvs,
    Lip,
    Bisection,
    Maxcut,
    Ffvd,
    Domset,
}

impl From<SolvableProblem> for Problem {
    fn from(p: SolvableProblem) -> Self {
        match p {
            SolvableProblem::Fvs => Problem::Fvs,
            SolvableProblem::Lip => Problem::Lip,
            SolvableProblem::Bisection => Problem::Bisection,
            SolvableProblem::Maxcut => Problem::MaxCut,
            SolvableProblem::Ffvd => Problem::Ffvd,
            SolvableProblem::Domset => Problem::DomSet,
        }
    }
}

enum Failure {
    /// A well-formed "no" answer.
    No(String),
    Input(String),
}

impl From<pvgkit::Error> for Failure {
    fn from(e: pvgkit::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn line(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize") + "\n"
}

fn family_arg(family: &FamilyArgs) -> Result<Option<(Family, Case)>, Failure> {
    match (&family.family, family.case) {
        (Some(path), Some(case)) => Ok(Some((io::parse_family(&read(path)?)?, case))),
        (None, None) => Ok(None),
        _ => Err(Failure::Input("--family and --case go together".into())),
    }
}

fn need_family(problem: Problem, family: Option<(Family, Case)>) -> Result<Option<(Family, Case)>, Failure> {
    match (problem, &family) {
        (Problem::Ffvd, None) => Err(Failure::Input("ffvd needs --family and --case".into())),
        (Problem::Ffvd, Some(_)) | (_, None) => Ok(family),
        (p, Some(_)) => Err(Failure::Input(format!("{p} takes no family"))),
    }
}

fn instance_value(inst: &Instance) -> Value {
    let mut v = json!({
        "problem": inst.problem,
        "k": inst.k,
        "graph": io::graph_value(&inst.graph),
    });
    if let Some(f) = &inst.family {
        v["family"] = serde_json::from_str(&io::emit_family(f)).expect("emitted JSON parses");
    }
    v
}

fn reduced_value(r: &ReducedInstance) -> Value {
    let mut v = instance_value(&r.instance);
    v["provenance"] = serde_json::to_value(&r.provenance).expect("provenance serializes");
    v
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Build { points, dot } => {
            let emb = io::parse_points(&read(&points)?)?;
            let g = visibility_graph(&emb);
            if let Some(path) = dot {
                write(&path, &io::emit_dot(&g, None))?;
            }
            Ok(io::emit_graph(&g))
        }
        Command::Grid { n, m, dot } => {
            let g = grid_pvg(GridSpec::new(n, m)?);
            if let Some(path) = dot {
                write(&path, &io::emit_dot(&g, None))?;
            }
            Ok(io::emit_graph(&g))
        }
        Command::Transform {
            kind: Transform::Phi { graph, embed, dot },
        } => {
            let g = io::parse_graph(&read(&graph)?)?;
            let r = phi(&g);
            if let Some(path) = embed {
                let emb = phi_embedding(&g);
                if !realizes(&emb, &r.graph)? {
                    return Err(Failure::Input("embedding failed certification".into()));
                }
                write(&path, &io::emit_points(&emb))?;
            }
            if let Some(path) = dot {
                write(&path, &io::emit_dot(&r.graph, Some(&r)))?;
            }
            Ok(io::emit_graph(&r.graph))
        }
        Command::Reduce { problem, graph, k, family } => {
            let problem = Problem::from(problem);
            let g = io::parse_graph(&read(&graph)?)?;
            let reduced = match (problem, need_family(problem, family_arg(&family)?)?) {
                (Problem::Fvs, _) => reductions::reduce_fvs(&g, k)?,
                (Problem::Lip, _) => reductions::reduce_lip(&g, k)?,
                (Problem::Bisection, _) => reductions::reduce_bisection(&g, k)?,
                (_, Some((f, case))) => reductions::reduce_ffvd(&g, k, &f, case)?,
                (_, None) => unreachable!("need_family checked this"),
            };
            Ok(line(&reduced_value(&reduced)))
        }
        Command::Solve { problem, graph, k, family } => {
            let problem = Problem::from(problem);
            let g = io::parse_graph(&read(&graph)?)?;
            let family = match (problem, family) {
                (Problem::Ffvd, Some(path)) => Some(io::parse_family(&read(&path)?)?),
                (Problem::Ffvd, None) => return Err(Failure::Input("ffvd needs --family".into())),
                (_, Some(_)) => return Err(Failure::Input(format!("{problem} takes no family"))),
                (_, None) => None,
            };
            let w = Instance::new(problem, g, k, family)?.solve()?;
            let out = line(&serde_json::to_value(&w).expect("witness serializes"));
            if w.answer {
                Ok(out)
            } else {
                Err(Failure::No(out))
            }
        }
        Command::VerifyReduction {
            problem,
            nmax,
            samples,
            seed,
            family,
        } => {
            let problem = Problem::from(problem);
            let family = need_family(problem, family_arg(&family)?)?;
            let graphs = match samples {
                Some(s) => seeded_graphs(s, 1, nmax.max(1), seed),
                None => all_small_graphs(nmax),
            };
            let report = verify_reduction(problem, &graphs, family.as_ref().map(|(f, c)| (f, *c)))?;
            let out = line(&serde_json::to_value(&report).expect("report serializes"));
            if report.all_agree() {
                Ok(out)
            } else {
                Err(Failure::No(out))
            }
        }
        Command::Dominate {
            kind: Dominate::Grid { n, table, csv },
        } => match (table, n) {
            (Some(n_max), _) => {
                let text = bounds_csv(&bounds_table(n_max)?);
                match csv {
                    Some(path) => {
                        write(&path, &text)?;
                        Ok(String::new())
                    }
                    None => Ok(text),
                }
            }
            (None, Some(n)) => {
                let d = grid_min_dominating(n)?;
                Ok(line(&serde_json::to_value(&d).expect("result serializes")))
            }
            (None, None) => Err(Failure::Input("--n or --table is required".into())),
        },
        Command::Dominate {
            kind: Dominate::Embed { points },
        } => {
            let emb = io::parse_points(&read(&points)?)?;
            let d = min_degree_dominating(&emb)?;
            Ok(line(&serde_json::to_value(&d).expect("result serializes")))
        }
        Command::Check {
            kind: Check::Diameter { graph },
        } => {
            let g = io::parse_graph(&read(&graph)?)?;
            let d = match g.diameter()? {
                Diameter::Finite(d) => json!(d),
                Diameter::Infinite => json!("infinite"),
            };
            Ok(line(&json!({ "diameter": d, "path": g.is_path() })))
        }
        Command::Check {
            kind: Check::Hamiltonian { points },
        } => {
            let emb = io::parse_points(&read(&points)?)?;
            let cycle = hamiltonian_cycle(&emb)?;
            Ok(line(&json!({ "cycle": cycle })))
        }
        Command::Check {
            kind: Check::Realizes { points, graph },
        } => {
            let emb = io::parse_points(&read(&points)?)?;
            let g = io::parse_graph(&read(&graph)?)?;
            let ok = realizes(&emb, &g)?;
            let out = line(&json!({ "realizes": ok }));
            if ok {
                Ok(out)
            } else {
                Err(Failure::No(out))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::No(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
