//! Single entry point binding the library: parse graphs, compute, print JSON.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition violation,
//! 4 size cap or timeout, 5 verification failure.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lmdim_core::{
    all_pairs_distances, cartesian_product, cycle_balpha, emit_graph6, grid_metric_dim,
    is_adjacency_k_resolved, is_connected, is_local_generator, is_metric_generator,
    k_resolved_generator, local_metric_dimension_with_cap, max_adjacency_resolution,
    metric_dimension_with_cap, parse_edge_list, parse_graph6, path_balpha, path_path_triple,
    preset, render_report, run_sweep, strong_product, strong_product_interval_with_cap,
    twin_partition, union_generator, ConstructedGenerator, Error, Graph, ProductGraph,
    ReportFormat, SweepOptions, SweepSpec, DEFAULT_SOLVER_CAP, PRESET_NAMES,
};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_CAP: u8 = 4;
const EXIT_VERIFICATION: u8 = 5;

#[derive(Parser)]
#[command(
    name = "lmdim",
    version,
    about = "Local metric dimension toolkit for strong product graphs",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Exact-solver order cap.
    #[arg(long, global = true, default_value_t = DEFAULT_SOLVER_CAP)]
    cap: usize,

    /// Worker threads (default: LMDIM_WORKERS or all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Treat graph files as this format instead of sniffing the extension.
    #[arg(long, global = true, value_enum)]
    input_format: Option<InputFormat>,

    /// Also print a human-readable summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    G6,
    Edgelist,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file (.g6 or .txt).
    file: Option<PathBuf>,

    /// Build the strong product of two factor files on the fly.
    #[arg(long, num_args = 2, value_names = ["G", "H"], conflicts_with = "file")]
    strong: Option<Vec<PathBuf>>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact local metric dimension with its canonical basis.
    Ldim(GraphInput),
    /// Exact metric dimension with its canonical basis.
    Mdim(GraphInput),
    /// Check a vertex set against the generator contract.
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated 0-based vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        /// Check the local (adjacent pairs) contract; the default.
        #[arg(long, conflicts_with = "metric")]
        local: bool,
        /// Check the full metric (all pairs) contract.
        #[arg(long)]
        metric: bool,
    },
    /// Build a strong (default) or Cartesian product and print it.
    Product {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        cartesian: bool,
    },
    /// True-twin equivalence classes and the maximum adjacency resolution.
    Twins(GraphInput),
    /// Adjacency k-resolvedness: test one k, or report the maximum.
    Kresolved {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Emit a constructive local metric generator.
    Construct {
        /// One of: union, k-resolved, path-triple, path-balpha, cycle-balpha.
        #[arg(long)]
        recipe: String,
        /// Path or cycle length for the first factor.
        #[arg(long)]
        t: Option<usize>,
        /// Second path length for path-triple.
        #[arg(long)]
        tp: Option<usize>,
        /// Second factor file for path-balpha / cycle-balpha.
        #[arg(long)]
        factor: Option<PathBuf>,
        /// First factor file for union / k-resolved.
        #[arg(long)]
        g: Option<PathBuf>,
        /// Second factor file for union / k-resolved.
        #[arg(long)]
        h: Option<PathBuf>,
        /// Local basis of the first factor (default: solve for one).
        #[arg(long, value_delimiter = ',')]
        s1: Option<Vec<usize>>,
        /// Local basis of the second factor (default: solve for one).
        #[arg(long, value_delimiter = ',')]
        s2: Option<Vec<usize>>,
    },
    /// Certified interval for the local metric dimension of a strong product.
    Bounds { g: PathBuf, h: PathBuf },
    /// Metric dimension of a path-by-path strong product, by formula.
    Grid {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        tp: usize,
    },
    /// Run a verification sweep and emit the report.
    Sweep {
        /// Built-in preset: paper-core, grids, cycles, twin-families.
        #[arg(long, conflicts_with = "spec")]
        preset: Option<String>,
        /// JSON sweep description file.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append-only results file for resumable runs.
        #[arg(long)]
        results: Option<PathBuf>,
        /// Report format.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } | Error::Graph6(_) => EXIT_PARSE,
            Error::Disconnected
            | Error::VertexOutOfRange { .. }
            | Error::InvalidArgument(_)
            | Error::Precondition(_) => EXIT_PRECONDITION,
            Error::UnsupportedSize { .. } | Error::Timeout => EXIT_CAP,
            Error::InvalidBasis(_) | Error::VerificationFailed(_) => EXIT_VERIFICATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    configure_workers(cli.workers);
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn configure_workers(flag: Option<usize>) {
    let count = flag.or_else(|| {
        std::env::var("LMDIM_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(count) = count {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build_global();
    }
}

fn load_graph(path: &Path, format: Option<InputFormat>) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let format = match format {
        Some(f) => f,
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => InputFormat::G6,
            Some("txt") => InputFormat::Edgelist,
            _ => {
                return Err(Failure::usage(format!(
                    "cannot infer format of {}; pass --input-format",
                    path.display()
                )))
            }
        },
    };
    let graph = match format {
        InputFormat::G6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Failure::from(Error::Graph6("empty file".into())))?;
            parse_graph6(line)?
        }
        InputFormat::Edgelist => parse_edge_list(&text)?,
    };
    Ok(graph)
}

enum LoadedGraph {
    Plain(Graph),
    Product(ProductGraph),
}

impl LoadedGraph {
    fn graph(&self) -> &Graph {
        match self {
            LoadedGraph::Plain(g) => g,
            LoadedGraph::Product(p) => p.graph(),
        }
    }
}

fn load_input(input: &GraphInput, format: Option<InputFormat>) -> Result<LoadedGraph, Failure> {
    match (&input.file, &input.strong) {
        (Some(file), None) => Ok(LoadedGraph::Plain(load_graph(file, format)?)),
        (None, Some(factors)) => {
            let g = load_graph(&factors[0], format)?;
            let h = load_graph(&factors[1], format)?;
            Ok(LoadedGraph::Product(strong_product(&g, &h)?))
        }
        _ => Err(Failure::usage(
            "provide either a graph file or --strong G H",
        )),
    }
}

fn emit(payload: &Value, pretty_summary: Option<String>, pretty: bool) {
    println!("{payload}");
    if pretty {
        if let Some(summary) = pretty_summary {
            eprintln!("{summary}");
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Ldim(input) => {
            let loaded = load_input(input, cli.input_format)?;
            let r = local_metric_dimension_with_cap(loaded.graph(), cli.cap)?;
            let payload = json!({
                "value": r.value,
                "basis": r.basis,
                "kind": "local",
                "checked_pairs": r.checked_pairs,
            });
            let summary = format!(
                "local metric dimension {} with basis {}",
                r.value,
                render_vertex_set(loaded.graph(), &r.basis)
            );
            emit(&payload, Some(summary), cli.pretty);
            Ok(())
        }
        Command::Mdim(input) => {
            let loaded = load_input(input, cli.input_format)?;
            let r = metric_dimension_with_cap(loaded.graph(), cli.cap)?;
            let payload = json!({
                "value": r.value,
                "basis": r.basis,
                "kind": "metric",
                "checked_pairs": r.checked_pairs,
            });
            let summary = format!(
                "metric dimension {} with basis {}",
                r.value,
                render_vertex_set(loaded.graph(), &r.basis)
            );
            emit(&payload, Some(summary), cli.pretty);
            Ok(())
        }
        Command::Check {
            input,
            set,
            local: _,
            metric,
        } => {
            let loaded = load_input(input, cli.input_format)?;
            let g = loaded.graph();
            let dm = all_pairs_distances(g);
            let (kind, check) = if *metric {
                ("metric", is_metric_generator(g, &dm, set)?)
            } else {
                ("local", is_local_generator(g, &dm, set)?)
            };
            let mut payload = json!({
                "is_generator": check.is_valid(),
                "kind": kind,
            });
            if let Some((u, v)) = check.witness() {
                payload["witness"] = json!([u, v]);
            }
            let summary = match check.witness() {
                None => format!("{kind} generator: yes"),
                Some((u, v)) => format!(
                    "{kind} generator: no; pair ({}, {}) is undistinguished",
                    g.label(u),
                    g.label(v)
                ),
            };
            emit(&payload, Some(summary), cli.pretty);
            Ok(())
        }
        Command::Product { g, h, cartesian } => {
            let g = load_graph(g, cli.input_format)?;
            let h = load_graph(h, cli.input_format)?;
            let (kind, product) = if *cartesian {
                ("cartesian", cartesian_product(&g, &h)?)
            } else {
                ("strong", strong_product(&g, &h)?)
            };
            let graph = product.graph();
            let vertices: Vec<String> = graph.vertices().map(|v| graph.label(v)).collect();
            let edges: Vec<[usize; 2]> = graph.edges().map(|(u, v)| [u, v]).collect();
            let mut payload = json!({
                "kind": kind,
                "n1": product.n1(),
                "n2": product.n2(),
                "n": graph.n(),
                "m": graph.m(),
                "vertices": vertices,
                "edges": edges,
            });
            if let Ok(encoded) = emit_graph6(graph) {
                payload["graph6"] = json!(encoded);
            }
            let summary = format!(
                "{kind} product on {} x {} = {} vertices, {} edges",
                product.n1(),
                product.n2(),
                graph.n(),
                graph.m()
            );
            emit(&payload, Some(summary), cli.pretty);
            Ok(())
        }
        Command::Twins(input) => {
            let loaded = load_input(input, cli.input_format)?;
            let g = loaded.graph();
            let partition = twin_partition(g);
            let classes: Vec<Vec<String>> = partition
                .classes()
                .iter()
                .map(|class| class.iter().map(|&v| g.label(v)).collect())
                .collect();
            let resolution = if is_connected(g) && g.is_nontrivial() {
                Some(max_adjacency_resolution(g)?)
            } else {
                None
            };
            let payload = json!({
                "t": partition.t(),
                "classes": classes,
                "max_adjacency_resolution": resolution,
            });
            let summary = format!(
                "{} true-twin classes; max adjacency resolution {}",
                partition.t(),
                resolution.map_or_else(|| "n/a".into(), |k| k.to_string())
            );
            emit(&payload, Some(summary), cli.pretty);
            Ok(())
        }
        Command::Kresolved { input, k } => {
            let loaded = load_input(input, cli.input_format)?;
            let g = loaded.graph();
            let payload = match k {
                Some(k) => json!({"k": k, "resolved": is_adjacency_k_resolved(g, *k)?}),
                None => json!({"max_resolution": max_adjacency_resolution(g)?}),
            };
            emit(&payload, Some(payload.to_string()), cli.pretty);
            Ok(())
        }
        Command::Construct {
            recipe,
            t,
            tp,
            factor,
            g,
            h,
            s1,
            s2,
        } => {
            let built = run_construct(cli, recipe, *t, *tp, factor, g, h, s1, s2)?;
            let pairs: Vec<[usize; 2]> = built
                .pairs()
                .into_iter()
                .map(|(i, j)| [i, j])
                .collect();
            let params: BTreeMap<String, usize> = built.params.clone();
            let payload = json!({
                "recipe": built.recipe,
                "set": pairs,
                "size": built.size(),
                "verified": built.verified,
                "params": params,
            });
            let summary = format!(
                "{} generator of size {} (verified)",
                built.recipe,
                built.size()
            );
            emit(&payload, Some(summary), cli.pretty);
            Ok(())
        }
        Command::Bounds { g, h } => {
            let g = load_graph(g, cli.input_format)?;
            let h = load_graph(h, cli.input_format)?;
            let interval = strong_product_interval_with_cap(&g, &h, cli.cap)?;
            println!(
                "{}",
                serde_json::to_string(&interval).expect("interval is serializable")
            );
            if cli.pretty {
                if interval.exact {
                    eprintln!("certified exact value {}", interval.lo);
                } else {
                    eprintln!("certified interval [{}, {}]", interval.lo, interval.hi);
                }
            }
            Ok(())
        }
        Command::Grid { t, tp } => {
            let value = grid_metric_dim(*t, *tp)?;
            emit(
                &json!({"t": t, "tp": tp, "value": value}),
                Some(format!("metric dimension {value}")),
                cli.pretty,
            );
            Ok(())
        }
        Command::Sweep {
            preset: preset_name,
            spec,
            out,
            results,
            format,
        } => {
            let spec = match (preset_name, spec) {
                (Some(name), None) => preset(name).ok_or_else(|| {
                    Failure::usage(format!(
                        "unknown preset '{name}'; available: {}",
                        PRESET_NAMES.join(", ")
                    ))
                })?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Failure::usage(format!("cannot read {}: {e}", path.display()))
                    })?;
                    SweepSpec::parse_json(&text)?
                }
                _ => return Err(Failure::usage("pass exactly one of --preset or --spec")),
            };
            let opts = SweepOptions {
                cap: cli.cap,
                results_path: results.clone(),
            };
            let report = run_sweep(&spec, &opts)?;
            let rendered = render_report(
                &report,
                match format {
                    Format::Json => ReportFormat::Json,
                    Format::Csv => ReportFormat::Csv,
                },
            );
            match out {
                Some(path) => {
                    std::fs::write(path, &rendered).map_err(|e| {
                        Failure::usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                    println!(
                        "{}",
                        json!({
                            "rows": report.rows.len(),
                            "pass": report.summary.pass,
                            "fail": report.summary.fail,
                            "skip": report.summary.skip,
                            "out": path.display().to_string(),
                        })
                    );
                }
                None => print!("{rendered}"),
            }
            if cli.pretty {
                eprintln!(
                    "sweep '{}': {} pass, {} fail, {} skip",
                    report.spec_name,
                    report.summary.pass,
                    report.summary.fail,
                    report.summary.skip
                );
            }
            if report.has_failures() {
                return Err(Failure {
                    code: EXIT_VERIFICATION,
                    message: format!("{} sweep row(s) failed", report.summary.fail),
                });
            }
            Ok(())
        }
    }
}

fn render_vertex_set(g: &Graph, set: &[usize]) -> String {
    let labels: Vec<String> = set.iter().map(|&v| g.label(v)).collect();
    format!("{{{}}}", labels.join(", "))
}

#[allow(clippy::too_many_arguments)]
fn run_construct(
    cli: &Cli,
    recipe: &str,
    t: Option<usize>,
    tp: Option<usize>,
    factor: &Option<PathBuf>,
    g: &Option<PathBuf>,
    h: &Option<PathBuf>,
    s1: &Option<Vec<usize>>,
    s2: &Option<Vec<usize>>,
) -> Result<ConstructedGenerator, Failure> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| Failure::usage(format!("--{name} is required for recipe {recipe}")))
    };
    let need_file = |opt: &Option<PathBuf>, name: &str| -> Result<Graph, Failure> {
        let path = opt
            .as_ref()
            .ok_or_else(|| Failure::usage(format!("--{name} is required for recipe {recipe}")))?;
        load_graph(path, cli.input_format)
    };
    let basis_or_solve = |explicit: &Option<Vec<usize>>, graph: &Graph| -> Result<Vec<usize>, Failure> {
        match explicit {
            Some(set) => Ok(set.clone()),
            None => Ok(local_metric_dimension_with_cap(graph, cli.cap)?.basis),
        }
    };
    match recipe {
        "union" => {
            let g = need_file(g, "g")?;
            let h = need_file(h, "h")?;
            let s1 = basis_or_solve(s1, &g)?;
            let s2 = basis_or_solve(s2, &h)?;
            Ok(union_generator(&g, &h, &s1, &s2)?)
        }
        "k-resolved" => {
            let g = need_file(g, "g")?;
            let h = need_file(h, "h")?;
            let s1 = basis_or_solve(s1, &g)?;
            Ok(k_resolved_generator(&g, &h, &s1)?)
        }
        "path-triple" => {
            let t = need(t, "t")?;
            let tp = need(tp, "tp")?;
            Ok(path_path_triple(t, tp)?)
        }
        "path-balpha" => {
            let t = need(t, "t")?;
            let factor = need_file(factor, "factor")?;
            Ok(path_balpha(t, &factor)?)
        }
        "cycle-balpha" => {
            let t = need(t, "t")?;
            let factor = need_file(factor, "factor")?;
            Ok(cycle_balpha(t, &factor)?)
        }
        other => Err(Failure::usage(format!(
            "unknown recipe '{other}'; expected union, k-resolved, path-triple, path-balpha, cycle-balpha"
        ))),
    }
}
