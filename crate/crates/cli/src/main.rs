use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cbo_core::construct::construct;
use cbo_core::density::{density, is_uniformly_dense};
use cbo_core::dot::export_dot;
use cbo_core::families::{generate, random_max2deg_trace, FamilySpec};
use cbo_core::fixtures;
use cbo_core::io::{graph_to_string, ordering_to_string, parse_graph, parse_ordering};
use cbo_core::search::{find_cbo, SearchBudget, SearchOutcome};
use cbo_core::verify::{verify_lct, verify_naive};
use cbo_core::{EdgeOrdering, Graph};

#[derive(Parser)]
#[command(
    name = "cbo",
    version,
    about = "Construct, verify, and search cyclic base orderings of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and write it as a graph file.
    Gen {
        #[command(subcommand)]
        family: FamilyCmd,
        /// Output file (stdout when omitted).
        #[arg(long, short = 'o', global = true)]
        out: Option<PathBuf>,
    },
    /// Construct a cyclic base ordering; writes <prefix>.graph and
    /// <prefix>.ord.
    Cbo {
        #[command(subcommand)]
        family: FamilyCmd,
        /// Output path prefix (derived from the family when omitted).
        #[arg(long, global = true)]
        prefix: Option<String>,
    },
    /// Check whether an ordering is a cyclic base ordering. Exits 0 when
    /// it is, 1 when it is not.
    Verify {
        graph: PathBuf,
        ordering: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Lct)]
        engine: Engine,
    },
    /// Print the exact density |E|/(|V|-1), optionally with a uniform
    /// density check.
    Density {
        graph: PathBuf,
        #[arg(long)]
        uniform: bool,
    },
    /// Exhaustively search for a cyclic base ordering. Exits 0 when one is
    /// found, 1 when none exists, 3 when the node budget ran out.
    Search {
        graph: PathBuf,
        #[arg(long, default_value_t = 100_000_000)]
        node_limit: u64,
    },
    /// Render a graph (optionally with ordering labels) in DOT format.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        ordering: Option<PathBuf>,
    },
    /// Write every bundled reference graph/ordering pair into a directory.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        dir: PathBuf,
    },
}

#[derive(Subcommand, Clone)]
enum FamilyCmd {
    /// Cycle C_n.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Square of a cycle, C_n^2.
    SquareCycle {
        #[arg(long)]
        n: usize,
    },
    /// Wheel W_n (hub plus rim cycle).
    Wheel {
        #[arg(long)]
        n: usize,
    },
    /// Double wheel: two hubs joined to a common rim, no hub-hub edge.
    DoubleWheel {
        #[arg(long)]
        n: usize,
    },
    /// Fan F_n (hub plus path).
    Fan {
        #[arg(long)]
        n: usize,
    },
    /// Broken fan F_n(t): spokes every t path vertices, n = (r-1)t + 2.
    BrokenFan {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: usize,
    },
    /// Wheel missing exactly one spoke.
    BrokenWheelOneSpoke {
        #[arg(long)]
        n: usize,
    },
    /// Broken wheel W(n, r) with r uniformly placed spokes.
    BrokenWheelUniform {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Prism Y_n: two n-cycles joined by rungs.
    Prism {
        #[arg(long)]
        n: usize,
    },
    /// Random maximal 2-degenerate graph from a seeded construction trace.
    Max2deg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args, Clone)]
struct NoArgs {}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Naive,
    Lct,
}

impl FamilyCmd {
    fn to_spec(&self) -> Result<FamilySpec, String> {
        Ok(match *self {
            FamilyCmd::Cycle { n } => FamilySpec::Cycle { n },
            FamilyCmd::SquareCycle { n } => FamilySpec::SquareCycle { n },
            FamilyCmd::Wheel { n } => FamilySpec::Wheel { n },
            FamilyCmd::DoubleWheel { n } => FamilySpec::DoubleWheel { n },
            FamilyCmd::Fan { n } => FamilySpec::Fan { n },
            FamilyCmd::BrokenFan { t, r } => FamilySpec::BrokenFan { t, r },
            FamilyCmd::BrokenWheelOneSpoke { n } => FamilySpec::BrokenWheelOneSpoke { n },
            FamilyCmd::BrokenWheelUniform { n, r } => FamilySpec::BrokenWheelUniform { n, r },
            FamilyCmd::Prism { n } => FamilySpec::Prism { n },
            FamilyCmd::Max2deg { n, seed } => {
                if n < 3 {
                    return Err("max2deg requires n >= 3".into());
                }
                FamilySpec::Max2Deg(random_max2deg_trace(n, seed))
            }
        })
    }

    fn default_prefix(&self) -> String {
        match *self {
            FamilyCmd::Cycle { n } => format!("cycle_n{n}"),
            FamilyCmd::SquareCycle { n } => format!("square_cycle_n{n}"),
            FamilyCmd::Wheel { n } => format!("wheel_n{n}"),
            FamilyCmd::DoubleWheel { n } => format!("double_wheel_n{n}"),
            FamilyCmd::Fan { n } => format!("fan_n{n}"),
            FamilyCmd::BrokenFan { t, r } => format!("broken_fan_t{t}_r{r}"),
            FamilyCmd::BrokenWheelOneSpoke { n } => format!("broken_wheel_one_spoke_n{n}"),
            FamilyCmd::BrokenWheelUniform { n, r } => format!("broken_wheel_uniform_n{n}_r{r}"),
            FamilyCmd::Prism { n } => format!("prism_n{n}"),
            FamilyCmd::Max2deg { n, seed } => format!("max2deg_n{n}_s{seed}"),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Gen { family, out } => {
            let spec = family.to_spec()?;
            let (g, _) = generate(&spec).map_err(|e| e.to_string())?;
            let text = graph_to_string(&g, &[spec.describe()]);
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                    println!("{}", path.display());
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cbo { family, prefix } => {
            let spec = family.to_spec()?;
            let (g, _, o) = construct(&spec).map_err(|e| e.to_string())?;
            let prefix = prefix.unwrap_or_else(|| family.default_prefix());
            let graph_path = PathBuf::from(format!("{prefix}.graph"));
            let ord_path = PathBuf::from(format!("{prefix}.ord"));
            fs::write(&graph_path, graph_to_string(&g, &[spec.describe()]))
                .map_err(|e| format!("{}: {e}", graph_path.display()))?;
            fs::write(&ord_path, ordering_to_string(&o))
                .map_err(|e| format!("{}: {e}", ord_path.display()))?;
            println!("{}", graph_path.display());
            println!("{}", ord_path.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            graph,
            ordering,
            engine,
        } => {
            let g = read_graph(&graph)?;
            let o = read_ordering(&ordering)?;
            let report = match engine {
                Engine::Naive => verify_naive(&g, &o),
                Engine::Lct => verify_lct(&g, &o),
            }
            .map_err(|e| e.to_string())?;
            if report.is_cbo {
                println!("CBO");
                Ok(ExitCode::SUCCESS)
            } else {
                let reason = report.reason.expect("failing report carries a reason");
                match report.failing_start {
                    Some(start) => println!("NOT-CBO start={start} reason={}", reason.as_str()),
                    None => println!("NOT-CBO reason={}", reason.as_str()),
                }
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Density { graph, uniform } => {
            let g = read_graph(&graph)?;
            let d = density(&g).map_err(|e| e.to_string())?;
            println!("{d}");
            if uniform {
                let (ok, witness) = is_uniformly_dense(&g).map_err(|e| e.to_string())?;
                if ok {
                    println!("uniformly-dense");
                } else {
                    let witness = witness.expect("non-uniform graphs carry a witness");
                    let verts: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
                    println!("not-uniformly-dense witness={}", verts.join(","));
                    return Ok(ExitCode::FAILURE);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { graph, node_limit } => {
            let g = read_graph(&graph)?;
            let outcome = find_cbo(&g, SearchBudget { node_limit }).map_err(|e| e.to_string())?;
            match outcome {
                SearchOutcome::Found(o) => {
                    print!("{}", ordering_to_string(&o));
                    Ok(ExitCode::SUCCESS)
                }
                SearchOutcome::Exhausted => {
                    println!("NONE");
                    Ok(ExitCode::FAILURE)
                }
                SearchOutcome::Inconclusive => {
                    println!("INCONCLUSIVE");
                    Ok(ExitCode::from(3))
                }
            }
        }
        Command::Dot { graph, ordering } => {
            let g = read_graph(&graph)?;
            let o = match ordering {
                Some(path) => Some(read_ordering(&path)?),
                None => None,
            };
            print!("{}", export_dot(&g, o.as_ref()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { dir } => {
            fs::create_dir_all(&dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            for f in fixtures::ALL {
                let g = f.graph();
                let graph_path = dir.join(format!("{}.graph", f.name));
                let ord_path = dir.join(format!("{}.ord", f.name));
                let header = format!("fixture: {}", f.description);
                fs::write(&graph_path, graph_to_string(&g, &[header]))
                    .map_err(|e| format!("{}: {e}", graph_path.display()))?;
                fs::write(&ord_path, ordering_to_string(&f.ordering()))
                    .map_err(|e| format!("{}: {e}", ord_path.display()))?;
                println!("{}", graph_path.display());
                println!("{}", ord_path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_ordering(path: &Path) -> Result<EdgeOrdering, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_ordering(&text).map_err(|e| format!("{}: {e}", path.display()))
}
