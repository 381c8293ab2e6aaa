//! Command-line front end: solve, decide, construct, reduce, verify,
//! export-dot.
//!
//! Results go to stdout as stable line-oriented text; human commentary and
//! statistics go to stderr. Exit codes: 0 success/yes, 1 certified no,
//! 2 input error, 3 resource cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use proporient::constructions::{self, ClassLabel};
use proporient::graph::{Graph, Orientation};
use proporient::reduction;
use proporient::solver::{self, SolveOptions};
use proporient::{bounds, io as formats};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "proporient",
    version,
    about = "Proper orientation numbers: exact solving, constructions, and SAT reductions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the proper orientation number exactly and write a witness file.
    Solve {
        /// Edge-list file ("n m" header, then "u v" lines).
        graph: PathBuf,
        /// Edge cap for exhaustive certification.
        #[arg(long, default_value_t = solver::DEFAULT_SOLVE_EDGE_CAP)]
        cap: usize,
        /// Explore search branches in parallel (same value, witness may vary).
        #[arg(long)]
        parallel: bool,
        /// Witness path (default: INPUT.witness).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a proper orientation with maximum indegree <= K exists.
    Decide {
        graph: PathBuf,
        k: usize,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run one of the constructive procedures and write its witness.
    Construct {
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build the reduction graph of a 3-CNF formula; optionally solve it.
    Reduce {
        /// DIMACS CNF file with exactly three literals per clause.
        cnf: PathBuf,
        /// Also decide value <= 2 and report SAT/UNSAT with an assignment.
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        parallel: bool,
        /// Output prefix (default: the CNF path).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that an orientation file is proper with maximum indegree <= K.
    Verify {
        graph: PathBuf,
        orientation: PathBuf,
        k: usize,
    },
    /// Print the graph (optionally oriented, optionally role-labeled) as DOT.
    ExportDot {
        graph: PathBuf,
        orientation: Option<PathBuf>,
        /// JSON role sidecar produced by `reduce`.
        #[arg(long)]
        roles: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    /// Lemma-style orientation of a bipartite odd-regular graph.
    BipartiteOddRegular,
    /// Orient the line graph via an optimal edge coloring (Class 1 inputs).
    LineGraph,
    /// Greedy max-degree-first approximation.
    Greedy,
    /// Polynomial-time exact value for 3-regular graphs.
    Cubic,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }

    fn cap(message: impl Into<String>) -> Self {
        Failure { code: EXIT_CAP, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Solve { graph, cap, parallel, output } => cmd_solve(&graph, cap, parallel, output),
        Command::Decide { graph, k, parallel, output } => cmd_decide(&graph, k, parallel, output),
        Command::Construct { graph, mode, output } => cmd_construct(&graph, mode, output),
        Command::Reduce { cnf, solve, parallel, output } => cmd_reduce(&cnf, solve, parallel, output),
        Command::Verify { graph, orientation, k } => cmd_verify(&graph, &orientation, k),
        Command::ExportDot { graph, orientation, roles } => {
            cmd_export_dot(&graph, orientation.as_deref(), roles.as_deref())
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    formats::parse_edge_list(&read_file(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn report_input(command: &str, g: &Graph) {
    eprintln!(
        "{command}: n={} m={} regular={} bipartite={}",
        g.vertex_count(),
        g.edge_count(),
        g.regularity().map_or_else(|| "no".to_string(), |r| r.to_string()),
        g.is_bipartite().is_some()
    );
}

fn suffixed(path: &Path, suffix: &str) -> PathBuf {
    PathBuf::from(format!("{}{suffix}", path.display()))
}

fn write_witness(path: &Path, g: &Graph, orientation: &Orientation) -> Result<(), Failure> {
    write_file(path, &formats::render_orientation(g, orientation))?;
    eprintln!("witness: {}", path.display());
    Ok(())
}

fn cmd_solve(
    path: &Path,
    cap: usize,
    parallel: bool,
    output: Option<PathBuf>,
) -> Result<u8, Failure> {
    let g = load_graph(path)?;
    report_input("solve", &g);
    let report = bounds::bounds(&g);
    eprintln!("bounds: [{}, {}]", report.lower, report.upper);
    let result = solver::solve_with(&g, &SolveOptions { edge_cap: cap, parallel })
        .map_err(|e| Failure::cap(e.to_string()))?;
    eprintln!(
        "nodes: {} elapsed: {:?}",
        result.nodes_explored, result.elapsed
    );
    let witness_path = output.unwrap_or_else(|| suffixed(path, ".witness"));
    write_witness(&witness_path, &g, &result.witness)?;
    println!("{}", result.value);
    Ok(0)
}

fn cmd_decide(
    path: &Path,
    k: usize,
    parallel: bool,
    output: Option<PathBuf>,
) -> Result<u8, Failure> {
    let g = load_graph(path)?;
    report_input("decide", &g);
    let started = Instant::now();
    let witness = if parallel { solver::decide_parallel(&g, k) } else { solver::decide(&g, k) };
    eprintln!("elapsed: {:?}", started.elapsed());
    match witness {
        Some(w) => {
            let witness_path = output.unwrap_or_else(|| suffixed(path, ".witness"));
            write_witness(&witness_path, &g, &w)?;
            println!("yes");
            Ok(0)
        }
        None => {
            println!("no");
            Ok(EXIT_NO)
        }
    }
}

fn construction_failure(e: constructions::ConstructionError) -> Failure {
    match e {
        constructions::ConstructionError::ColoringCapExceeded { .. } => Failure::cap(e.to_string()),
        _ => Failure::input(format!("precondition failed: {e}")),
    }
}

fn cmd_construct(path: &Path, mode: Mode, output: Option<PathBuf>) -> Result<u8, Failure> {
    let g = load_graph(path)?;
    report_input("construct", &g);
    let started = Instant::now();
    match mode {
        Mode::BipartiteOddRegular => {
            let o = constructions::orient_bipartite_odd_regular(&g).map_err(construction_failure)?;
            eprintln!("elapsed: {:?}", started.elapsed());
            let witness_path = output.unwrap_or_else(|| suffixed(path, ".witness"));
            write_witness(&witness_path, &g, &o)?;
            println!("max_indegree {}", o.max_indegree());
        }
        Mode::LineGraph => {
            let (coloring, label) = constructions::edge_coloring_exact(&g).map_err(construction_failure)?;
            if label == ClassLabel::Class2 {
                return Err(Failure::input(
                    "precondition failed: graph is Class 2, the line-graph orientation needs a \
                     max-degree edge coloring",
                ));
            }
            let (lg, o) = constructions::orient_line_graph(&g, &coloring).map_err(construction_failure)?;
            eprintln!("elapsed: {:?}", started.elapsed());
            let base = output.unwrap_or_else(|| path.to_path_buf());
            let colors_path = suffixed(&base, ".colors");
            write_file(&colors_path, &formats::render_edge_coloring(&coloring))?;
            eprintln!("edge coloring: {}", colors_path.display());
            let lg_path = suffixed(&base, ".line");
            write_file(&lg_path, &formats::render_edge_list(&lg))?;
            eprintln!("line graph: {}", lg_path.display());
            write_witness(&suffixed(&base, ".line.witness"), &lg, &o)?;
            println!("max_indegree {}", o.max_indegree());
        }
        Mode::Greedy => {
            let (o, report) = constructions::greedy_orientation(&g);
            eprintln!("elapsed: {:?}", started.elapsed());
            let witness_path = output.unwrap_or_else(|| suffixed(path, ".witness"));
            write_witness(&witness_path, &g, &o)?;
            println!("max_indegree {}", report.max_indegree);
            if let (Some(ratio), Some(theta)) = (report.ratio, report.theta) {
                println!("ratio {ratio}");
                println!("theta {theta}");
            }
        }
        Mode::Cubic => {
            let result = constructions::cubic_proper_orientation_number(&g).map_err(construction_failure)?;
            eprintln!("elapsed: {:?}", started.elapsed());
            let witness_path = output.unwrap_or_else(|| suffixed(path, ".witness"));
            write_witness(&witness_path, &g, &result.witness)?;
            println!("value {}", result.value);
            println!("max_indegree {}", result.witness.max_indegree());
        }
    }
    Ok(0)
}

fn cmd_reduce(
    path: &Path,
    solve: bool,
    parallel: bool,
    output: Option<PathBuf>,
) -> Result<u8, Failure> {
    let text = read_file(path)?;
    let phi = reduction::parse_cnf(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let rg = reduction::build_reduction(&phi);
    report_input("reduce", &rg.graph);
    let base = output.unwrap_or_else(|| path.to_path_buf());
    let graph_path = suffixed(&base, ".graph");
    write_file(&graph_path, &formats::render_edge_list(&rg.graph))?;
    let roles_path = suffixed(&base, ".roles.json");
    write_file(&roles_path, &formats::render_role_sidecar(&rg.roles))?;
    eprintln!("reduction graph: {}", graph_path.display());
    eprintln!("role sidecar: {}", roles_path.display());
    println!("vertices {}", rg.graph.vertex_count());
    println!("edges {}", rg.graph.edge_count());
    if !solve {
        return Ok(0);
    }
    let started = Instant::now();
    let witness = if parallel {
        solver::decide_parallel(&rg.graph, 2)
    } else {
        solver::decide(&rg.graph, 2)
    };
    eprintln!("elapsed: {:?}", started.elapsed());
    match witness {
        Some(w) => {
            let gamma = reduction::orientation_to_assignment(&phi, &w)
                .map_err(|e| Failure::input(format!("witness translation failed: {e}")))?;
            write_witness(&suffixed(&base, ".witness"), &rg.graph, &w)?;
            println!("SAT");
            let bits: Vec<String> =
                gamma.values().iter().map(|&b| usize::from(b).to_string()).collect();
            println!("assignment {}", bits.join(" "));
            Ok(0)
        }
        None => {
            println!("UNSAT");
            Ok(EXIT_NO)
        }
    }
}

fn cmd_verify(graph_path: &Path, orientation_path: &Path, k: usize) -> Result<u8, Failure> {
    let g = load_graph(graph_path)?;
    let orientation = formats::parse_orientation(&g, &read_file(orientation_path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", orientation_path.display())))?;
    report_input("verify", &g);
    let indegrees = orientation.indegrees();
    for &(u, v) in g.edges() {
        if indegrees[u] == indegrees[v] {
            println!("violation edge ({u},{v}): {} = {}", indegrees[u], indegrees[v]);
            return Ok(EXIT_NO);
        }
    }
    let max = orientation.max_indegree();
    if max > k {
        println!("violation max indegree {max} > {k}");
        return Ok(EXIT_NO);
    }
    println!("ok");
    Ok(0)
}

fn cmd_export_dot(
    graph_path: &Path,
    orientation_path: Option<&Path>,
    roles_path: Option<&Path>,
) -> Result<u8, Failure> {
    let g = load_graph(graph_path)?;
    let orientation = orientation_path
        .map(|p| {
            formats::parse_orientation(&g, &read_file(p)?)
                .map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        })
        .transpose()?;
    let roles = roles_path
        .map(|p| {
            let roles = formats::parse_role_sidecar(&read_file(p)?)
                .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
            if roles.len() != g.vertex_count() {
                return Err(Failure::input(format!(
                    "{}: sidecar covers {} vertices, graph has {}",
                    p.display(),
                    roles.len(),
                    g.vertex_count()
                )));
            }
            Ok(roles)
        })
        .transpose()?;
    print!("{}", formats::render_dot(&g, orientation.as_ref(), roles.as_deref()));
    Ok(0)
}
