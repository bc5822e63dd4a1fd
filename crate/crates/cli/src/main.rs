//! Command-line frontend for the flip-graph library.
//!
//! Every subcommand prints to stdout (or `--out`) and uses exit codes to
//! signal what happened: 0 for success, 1 when a requested check ran and
//! failed, 2 when bad input or a refused guard prevented the run.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use miura_ofg::claims::run_verification;
use miura_ofg::coloring::GridColoring;
use miura_ofg::flip_graph::{
    build_from_assignments_with, build_from_colorings_with, BuildOptions, ExportFormat, FlipGraph,
};
use miura_ofg::forest::DegreeForest;
use miura_ofg::heights::{diameter_formula, ofg_distance};
use miura_ofg::miura::MvAssignment;

/// Column counts above this need `--force` before BFS-heavy work runs.
const BFS_GUARD: usize = 9;

#[derive(Parser)]
#[command(
    name = "miura-ofg",
    version,
    about = "Flip graphs of two-row Miura-ori mountain-valley assignments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads (default: MIURA_OFG_THREADS, then all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List the locally valid assignments on n columns.
    Enumerate {
        /// Number of columns.
        #[arg(long)]
        n: usize,
        /// Print only how many there are.
        #[arg(long)]
        count_only: bool,
    },
    /// Vertex count, edge count, and degree distribution of a flip graph.
    Stats {
        /// Number of columns.
        #[arg(long)]
        n: usize,
        /// Number of rows (2 builds from assignments, otherwise from
        /// colorings).
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Build a flip graph and export it.
    Graph {
        /// Number of columns.
        #[arg(long)]
        n: usize,
        /// Number of rows.
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// Refuse graphs with more states than this.
        #[arg(long, default_value_t = BuildOptions::default().max_states)]
        max_states: u64,
    },
    /// Shortest flip distance between two assignments.
    Distance {
        /// Start assignment, e.g. MMVM.
        #[arg(long)]
        from: String,
        /// End assignment, e.g. MVMM.
        #[arg(long)]
        to: String,
        /// How to compute it.
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Run BFS even on sizes where it is slow.
        #[arg(long)]
        force: bool,
    },
    /// Diameter of the flip graph on n columns.
    Diameter {
        /// Number of columns.
        #[arg(long)]
        n: usize,
        /// How to compute it.
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Run BFS even on sizes where it is slow.
        #[arg(long)]
        force: bool,
    },
    /// Degree tables of the extension forest.
    Forest {
        /// How many generations to evolve.
        #[arg(long)]
        generations: usize,
        /// Output shape.
        #[arg(long, value_enum, default_value_t = ForestEmit::Table)]
        emit: ForestEmit,
    },
    /// Run the built-in verification suite.
    Verify {
        /// Largest column count to exercise.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Emit the full report as JSON instead of one line per claim.
        #[arg(long)]
        json: bool,
    },
    /// Translate between assignments and canonical grid colorings.
    Bijection {
        /// Assignment to translate into a coloring, e.g. MMVM.
        #[arg(long, conflicts_with = "coloring")]
        mv: Option<String>,
        /// Coloring to translate into an assignment; rows joined by '/' or
        /// newlines, e.g. 01/10.
        #[arg(long)]
        coloring: Option<String>,
        /// Accept a non-canonical coloring by rotating it first.
        #[arg(long, requires = "coloring", conflicts_with = "mv")]
        canonicalize: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Bfs,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ForestEmit {
    Table,
    Csv,
    Json,
}

struct Outcome {
    text: String,
    pass: bool,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, pass: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads(cli.threads) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(&cli.command) {
        Ok(outcome) => {
            let text = if outcome.text.ends_with('\n') || outcome.text.is_empty() {
                outcome.text
            } else {
                format!("{}\n", outcome.text)
            };
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads(flag: Option<usize>) -> Result<()> {
    let threads = match flag {
        Some(t) => Some(t),
        None => match std::env::var("MIURA_OFG_THREADS") {
            Ok(raw) => Some(
                raw.parse::<usize>()
                    .with_context(|| format!("MIURA_OFG_THREADS={raw} is not a thread count"))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(threads) = threads {
        if threads == 0 {
            bail!("thread count must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("initializing the thread pool")?;
    }
    Ok(())
}

fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Enumerate { n, count_only } => enumerate(*n, *count_only),
        Command::Stats { n, m } => stats(*m, *n),
        Command::Graph {
            n,
            m,
            format,
            max_states,
        } => graph(*m, *n, *format, *max_states),
        Command::Distance {
            from,
            to,
            method,
            force,
        } => distance(from, to, *method, *force),
        Command::Diameter { n, method, force } => diameter(*n, *method, *force),
        Command::Forest { generations, emit } => forest(*generations, *emit),
        Command::Verify { n_max, json } => verify(*n_max, *json),
        Command::Bijection {
            mv,
            coloring,
            canonicalize,
        } => bijection(mv.as_deref(), coloring.as_deref(), *canonicalize),
    }
}

fn enumerate(n: usize, count_only: bool) -> Result<Outcome> {
    let states = MvAssignment::enumerate_valid(n)?;
    if count_only {
        return Ok(Outcome::ok(states.len().to_string()));
    }
    let lines: Vec<String> = states.iter().map(|s| s.to_string()).collect();
    Ok(Outcome::ok(lines.join("\n")))
}

#[derive(Serialize)]
struct StatsJson {
    vertices: u64,
    edges: u64,
    degrees: BTreeMap<usize, u64>,
}

fn build_graph(m: usize, n: usize, max_states: u64) -> Result<FlipGraph> {
    let options = BuildOptions { max_states };
    let graph = if m == 2 {
        build_from_assignments_with(n, options)?
    } else {
        build_from_colorings_with(m, n, options)?
    };
    Ok(graph)
}

fn stats(m: usize, n: usize) -> Result<Outcome> {
    let graph = build_graph(m, n, BuildOptions::default().max_states)?;
    let stats = StatsJson {
        vertices: graph.vertex_count() as u64,
        edges: graph.edge_count(),
        degrees: graph.degree_distribution(),
    };
    Ok(Outcome::ok(serde_json::to_string(&stats)?))
}

fn graph(m: usize, n: usize, format: GraphFormat, max_states: u64) -> Result<Outcome> {
    let graph = build_graph(m, n, max_states)?;
    let format = match format {
        GraphFormat::Dot => ExportFormat::Dot,
        GraphFormat::Json => ExportFormat::Json,
        GraphFormat::Edges => ExportFormat::EdgeList,
    };
    Ok(Outcome::ok(graph.export(format)?))
}

fn guard_bfs(n: usize, force: bool) -> Result<()> {
    if n > BFS_GUARD && !force {
        bail!(
            "BFS over {n} columns visits 2*3^{} states; pass --force to run it anyway",
            n - 1
        );
    }
    Ok(())
}

#[derive(Serialize)]
struct DistanceJson {
    from: String,
    to: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bfs: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn distance(from: &str, to: &str, method: Method, force: bool) -> Result<Outcome> {
    let from: MvAssignment = from.parse()?;
    let to: MvAssignment = to.parse()?;
    let formula = match method {
        Method::Formula | Method::Both => Some(ofg_distance(&from, &to)?),
        Method::Bfs => None,
    };
    let bfs = match method {
        Method::Bfs | Method::Both => {
            guard_bfs(from.cols().max(to.cols()), force)?;
            let graph = build_from_assignments_with(from.cols(), BuildOptions::default())?;
            let start = graph
                .find_assignment(&from)
                .ok_or_else(|| anyhow!("{from} is not a state of the graph"))?;
            let end = graph
                .find_assignment(&to)
                .ok_or_else(|| anyhow!("{to} is not a state of the graph"))?;
            let distances = graph.bfs_distances(start)?;
            Some(distances[end] as u64)
        }
        Method::Formula => None,
    };
    match method {
        Method::Formula => Ok(Outcome::ok(formula.unwrap().to_string())),
        Method::Bfs => Ok(Outcome::ok(bfs.unwrap().to_string())),
        Method::Both => {
            let agree = formula == bfs;
            let json = DistanceJson {
                from: from.to_string(),
                to: to.to_string(),
                formula,
                bfs,
                agree: Some(agree),
            };
            Ok(Outcome {
                text: serde_json::to_string(&json)?,
                pass: agree,
            })
        }
    }
}

#[derive(Serialize)]
struct DiameterJson {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bfs: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn diameter(n: usize, method: Method, force: bool) -> Result<Outcome> {
    let formula = match method {
        Method::Formula | Method::Both => Some(diameter_formula(n)?),
        Method::Bfs => None,
    };
    let bfs = match method {
        Method::Bfs | Method::Both => {
            guard_bfs(n, force)?;
            let graph = build_from_assignments_with(n, BuildOptions::default())?;
            Some(graph.diameter_bfs()?.0 as u64)
        }
        Method::Formula => None,
    };
    match method {
        Method::Formula => Ok(Outcome::ok(formula.unwrap().to_string())),
        Method::Bfs => Ok(Outcome::ok(bfs.unwrap().to_string())),
        Method::Both => {
            let agree = formula == bfs;
            let json = DiameterJson {
                n,
                formula,
                bfs,
                agree: Some(agree),
            };
            Ok(Outcome {
                text: serde_json::to_string(&json)?,
                pass: agree,
            })
        }
    }
}

fn forest(generations: usize, emit: ForestEmit) -> Result<Outcome> {
    let forest = DegreeForest::generate(generations)?;
    let text = match emit {
        ForestEmit::Json => serde_json::to_string_pretty(forest.tables())?,
        ForestEmit::Csv => forest_csv(&forest),
        ForestEmit::Table => forest_table(&forest),
    };
    Ok(Outcome::ok(text))
}

/// One row per label, one column per generation; cells above the label
/// ceiling `2n` stay empty.
fn forest_csv(forest: &DegreeForest) -> String {
    let max = forest.max_generation();
    let mut out = String::from("d");
    for n in 1..=max {
        out.push_str(&format!(",v_{n}"));
    }
    out.push('\n');
    for d in 2..=(2 * max as u32) {
        out.push_str(&d.to_string());
        for n in 1..=max {
            out.push(',');
            if d <= 2 * n as u32 {
                out.push_str(&forest.count(n, d).unwrap().to_string());
            }
        }
        out.push('\n');
    }
    out
}

fn forest_table(forest: &DegreeForest) -> String {
    let max = forest.max_generation();
    let labels: Vec<u32> = (2..=(2 * max as u32)).collect();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["d".to_string()];
    header.extend((1..=max).map(|n| format!("n={n}")));
    rows.push(header);
    for &d in &labels {
        let mut row = vec![d.to_string()];
        for n in 1..=max {
            row.push(if d <= 2 * n as u32 {
                forest.count(n, d).unwrap().to_string()
            } else {
                ".".to_string()
            });
        }
        rows.push(row);
    }
    let widths: Vec<usize> = (0..=max)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    rows.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(c, cell)| format!("{cell:>width$}", width = widths[c]))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn verify(n_max: usize, json: bool) -> Result<Outcome> {
    let report = run_verification(n_max)?;
    if json {
        return Ok(Outcome {
            text: serde_json::to_string_pretty(&report)?,
            pass: report.pass,
        });
    }
    let mut lines: Vec<String> = report
        .claims
        .iter()
        .map(|claim| {
            if claim.pass {
                format!(
                    "[PASS] {} — {} ({})",
                    claim.id, claim.expected, claim.params
                )
            } else {
                format!("[FAIL] {} — {} ({})", claim.id, claim.actual, claim.params)
            }
        })
        .collect();
    let passed = report.claims.iter().filter(|c| c.pass).count();
    lines.push(format!("{passed}/{} claims passed", report.claims.len()));
    Ok(Outcome {
        text: lines.join("\n"),
        pass: report.pass,
    })
}

fn bijection(mv: Option<&str>, coloring: Option<&str>, canonicalize: bool) -> Result<Outcome> {
    match (mv, coloring) {
        (Some(mv), None) => {
            let assignment: MvAssignment = mv.parse()?;
            let coloring = GridColoring::from_assignment(&assignment)?;
            Ok(Outcome::ok(coloring.to_text()))
        }
        (None, Some(text)) => {
            let coloring = if text.contains('/') {
                GridColoring::from_compact(text)?
            } else {
                GridColoring::parse(text)?
            };
            let coloring = if canonicalize {
                coloring.canonicalize()
            } else if !coloring.is_canonical() {
                bail!(
                    "coloring is not canonical (top-left cell must be 0); \
                     pass --canonicalize to rotate it"
                );
            } else {
                coloring
            };
            let assignment = coloring.to_assignment()?;
            Ok(Outcome::ok(assignment.to_string()))
        }
        _ => bail!("pass exactly one of --mv or --coloring"),
    }
}
