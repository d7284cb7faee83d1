//! Command-line front end behind the `optcolor` binary.
//!
//! Exit codes: 0 success, 1 input/usage error, 2 invalid coloring,
//! 3 distance-2 coloring requested on a structurally asymmetric matrix.

mod bench;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use bench::{run_bench, BenchConfig, BenchReport, BenchRow, GraphSource, SummaryRow};

use crate::balancing::{attach_balancer, BalanceMode};
use crate::engine::{run, ColoringInput, EngineError, Preset, Problem, StrategySchedule};
use crate::graph::{
    generate_random_bipartite, generate_random_unipartite, read_matrix_market_file, write_matrix_market_bipartite,
    write_matrix_market_unipartite, BipartiteGraph, GraphError, MtxError, UnipartiteGraph,
};
use crate::ordering::{natural_order, random_order, smallest_last_order, VertexOrder};
use crate::stats::ColoringStats;
use crate::verify::{verify, Violation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ASYMMETRIC: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Mtx { path: PathBuf, source: MtxError },
    #[error(transparent)]
    Graph(GraphError),
    #[error("{0}")]
    Asymmetric(GraphError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("invalid coloring: {0}")]
    Invalid(Violation),
    #[error("invalid coloring in {cell}: {violation}")]
    CellInvalid { cell: String, violation: Violation },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) | CliError::CellInvalid { .. } => EXIT_INVALID,
            CliError::Asymmetric(_) => EXIT_ASYMMETRIC,
            _ => EXIT_FAILURE,
        }
    }

    pub(crate) fn io(path: impl AsRef<Path>, source: io::Error) -> Self {
        CliError::Io { path: path.as_ref().to_path_buf(), source }
    }
}

#[derive(Debug, Parser)]
#[command(name = "optcolor", version, about = "Speculative parallel BGPC and D2GC coloring")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a graph, verify the result, and report statistics.
    Color(ColorArgs),
    /// Check a coloring file against a graph.
    Verify(VerifyArgs),
    /// Write a random graph as a Matrix Market file.
    Generate(GenerateArgs),
    /// Run a benchmark grid and emit per-trial CSV plus a summary.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderKind {
    Natural,
    SmallestLast,
    Random,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Natural => "natural",
            OrderKind::SmallestLast => "smallest-last",
            OrderKind::Random => "random",
        }
    }

    pub fn build(self, input: ColoringInput<'_>, seed: u64) -> VertexOrder {
        match (self, input) {
            (OrderKind::Natural, _) => natural_order(input.num_vertices()),
            (OrderKind::Random, _) => random_order(input.num_vertices(), seed),
            (OrderKind::SmallestLast, ColoringInput::Bgpc(g)) => smallest_last_order(g),
            (OrderKind::SmallestLast, ColoringInput::D2gc(g)) => smallest_last_order(g),
        }
    }
}

/// `n,m,d,seed`: vertices, nets, net size (or average degree for D2GC), seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub vertices: usize,
    pub nets: usize,
    pub degree: usize,
    pub seed: u64,
}

impl FromStr for GenSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(format!("expected n,m,d,seed, got '{s}'"));
        }
        let num = |i: usize| parts[i].parse::<u64>().map_err(|e| format!("'{}': {e}", parts[i]));
        Ok(GenSpec { vertices: num(0)? as usize, nets: num(1)? as usize, degree: num(2)? as usize, seed: num(3)? })
    }
}

impl GenSpec {
    pub fn label(&self) -> String {
        format!("gen-{}x{}-d{}-s{}", self.vertices, self.nets, self.degree, self.seed)
    }
}

/// Thread count list entry: a positive integer or `max`.
pub fn parse_threads(s: &str) -> Result<usize, String> {
    if s.eq_ignore_ascii_case("max") {
        return Ok(max_threads());
    }
    match s.parse::<usize>() {
        Ok(0) => Err("thread count must be positive".into()),
        Ok(t) => Ok(t),
        Err(e) => Err(format!("'{s}': {e}")),
    }
}

pub fn max_threads() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct SourceArgs {
    /// Matrix Market file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Random graph `n,m,d,seed`.
    #[arg(long = "gen")]
    pub generate: Option<GenSpec>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, default_value = "bgpc")]
    pub problem: Problem,
    /// Preset name, e.g. V-V, V-N2, N1-N2.
    #[arg(long, default_value = "N1-N2")]
    pub algo: Preset,
    #[arg(long, default_value = "none")]
    pub balance: BalanceMode,
    #[arg(long, value_enum, default_value = "natural")]
    pub order: OrderKind,
    /// Seed for the random order.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker count or `max`.
    #[arg(long, default_value = "max", value_parser = parse_threads)]
    pub threads: usize,
    /// Override the preset's chunk size.
    #[arg(long)]
    pub chunk: Option<usize>,
    #[arg(long = "max-iters")]
    pub max_iters: Option<usize>,
    /// Write statistics as JSON.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Write one color per line.
    #[arg(long = "write-coloring")]
    pub write_coloring: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long, default_value = "bgpc")]
    pub problem: Problem,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long = "gen")]
    pub generate: GenSpec,
    #[arg(long, default_value = "bgpc")]
    pub problem: Problem,
    #[arg(long)]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Matrix Market files.
    #[arg(long, value_delimiter = ',')]
    pub input: Vec<PathBuf>,
    /// Random graphs, repeatable.
    #[arg(long = "gen")]
    pub generate: Vec<GenSpec>,
    #[arg(long, default_value = "bgpc")]
    pub problem: Problem,
    #[arg(long, value_delimiter = ',', default_value = "V-V,V-N2,N1-N2")]
    pub algo: Vec<Preset>,
    #[arg(long, value_delimiter = ',', default_value = "none")]
    pub balance: Vec<BalanceMode>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "natural")]
    pub order: Vec<OrderKind>,
    #[arg(long, value_delimiter = ',', default_value = "1,max", value_parser = parse_threads)]
    pub threads: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    pub trials: usize,
    #[arg(long)]
    pub chunk: Option<usize>,
    #[arg(long = "max-iters")]
    pub max_iters: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Per-trial CSV; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Summary CSV; printed after the trial rows when absent.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

/// A loaded graph in the shape the requested problem needs.
pub enum LoadedGraph {
    Bgpc(BipartiteGraph),
    D2gc(UnipartiteGraph),
}

impl LoadedGraph {
    pub fn input(&self) -> ColoringInput<'_> {
        match self {
            LoadedGraph::Bgpc(g) => ColoringInput::Bgpc(g),
            LoadedGraph::D2gc(g) => ColoringInput::D2gc(g),
        }
    }
}

pub fn load_file(path: &Path, problem: Problem) -> Result<LoadedGraph, CliError> {
    let mm = read_matrix_market_file(path).map_err(|source| CliError::Mtx { path: path.to_path_buf(), source })?;
    into_problem(mm.graph, problem)
}

fn into_problem(g: BipartiteGraph, problem: Problem) -> Result<LoadedGraph, CliError> {
    match problem {
        Problem::Bgpc => Ok(LoadedGraph::Bgpc(g)),
        Problem::D2gc => match g.to_unipartite() {
            Ok(u) => Ok(LoadedGraph::D2gc(u)),
            Err(e @ (GraphError::Asymmetric { .. } | GraphError::NotSquare { .. })) => Err(CliError::Asymmetric(e)),
            Err(e) => Err(CliError::Graph(e)),
        },
    }
}

/// For D2GC, builds an undirected graph on `n` vertices with average degree
/// `d`; `m` must then equal `n`.
pub fn generate(spec: &GenSpec, problem: Problem) -> Result<LoadedGraph, CliError> {
    match problem {
        Problem::Bgpc => generate_random_bipartite(spec.vertices, spec.nets, spec.degree, spec.seed)
            .map(LoadedGraph::Bgpc)
            .map_err(CliError::Graph),
        Problem::D2gc => {
            if spec.nets != spec.vertices {
                return Err(CliError::Usage(format!(
                    "d2gc generation needs n == m, got {} and {}",
                    spec.vertices, spec.nets
                )));
            }
            generate_random_unipartite(spec.vertices, spec.degree, spec.seed)
                .map(LoadedGraph::D2gc)
                .map_err(CliError::Graph)
        }
    }
}

pub fn build_schedule(preset: Preset, balance: BalanceMode, chunk: Option<usize>, max_iters: Option<usize>) -> StrategySchedule {
    let mut s = attach_balancer(preset.schedule(), balance);
    if let Some(c) = chunk {
        s = s.with_chunk(c);
    }
    if let Some(m) = max_iters {
        s = s.with_max_iterations(m);
    }
    s
}

/// Reads one decimal color per non-empty line.
pub fn read_coloring(path: &Path) -> Result<Vec<u32>, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut colors = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| CliError::io(path, e))?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let c = t
            .parse::<u32>()
            .map_err(|e| CliError::Usage(format!("{}: line {}: bad color '{t}': {e}", path.display(), i + 1)))?;
        colors.push(c);
    }
    Ok(colors)
}

pub fn write_coloring(path: &Path, colors: &[u32]) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    for c in colors {
        writeln!(w, "{c}").map_err(|e| CliError::io(path, e))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn color_command(args: &ColorArgs, out: &mut dyn Write) -> Result<ColoringStats, CliError> {
    let graph = match (&args.source.input, &args.source.generate) {
        (Some(p), _) => load_file(p, args.problem)?,
        (None, Some(spec)) => generate(spec, args.problem)?,
        (None, None) => return Err(CliError::Usage("one of --input or --gen is required".into())),
    };
    let input = graph.input();
    let schedule = build_schedule(args.algo, args.balance, args.chunk, args.max_iters);
    if args.chunk == Some(0) {
        return Err(CliError::Usage("--chunk must be positive".into()));
    }
    let order = args.order.build(input, args.seed);
    let (coloring, stats) = run(input, &order, &schedule, args.threads)?;
    let colors = coloring.into_vec();

    if let Some(p) = &args.write_coloring {
        write_coloring(p, &colors)?;
    }
    if let Some(p) = &args.stats {
        std::fs::write(p, stats.to_json()).map_err(|e| CliError::io(p, e))?;
    }
    verify(input, &colors, false).map_err(CliError::Invalid)?;
    let fallback = stats.run.as_ref().is_some_and(|r| r.fallback_used);
    writeln!(
        out,
        "{} {} balance={} order={} threads={} vertices={} colors={} iterations={} stddev={:.3} time_ms={:.3}{}",
        args.problem,
        args.algo,
        args.balance,
        args.order.name(),
        args.threads,
        stats.num_vertices,
        stats.num_colors,
        stats.iterations.len(),
        stats.stddev_cardinality,
        stats.total_ms,
        if fallback { " sequential-fallback" } else { "" }
    )
    .map_err(|e| CliError::io("<stdout>", e))?;
    Ok(stats)
}

pub fn verify_command(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let graph = load_file(&args.input, args.problem)?;
    let colors = read_coloring(&args.coloring)?;
    let n = graph.input().num_vertices();
    if colors.len() != n {
        return Err(CliError::Usage(format!("coloring has {} lines, graph has {n} vertices", colors.len())));
    }
    verify(graph.input(), &colors, false).map_err(CliError::Invalid)?;
    writeln!(out, "valid {} coloring of {n} vertices", args.problem).map_err(|e| CliError::io("<stdout>", e))
}

pub fn generate_command(args: &GenerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let graph = generate(&args.generate, args.problem)?;
    let file = File::create(&args.output).map_err(|e| CliError::io(&args.output, e))?;
    let w = BufWriter::new(file);
    match &graph {
        LoadedGraph::Bgpc(g) => write_matrix_market_bipartite(g, w),
        LoadedGraph::D2gc(g) => write_matrix_market_unipartite(g, w),
    }
    .map_err(|e| CliError::io(&args.output, e))?;
    writeln!(out, "wrote {}", args.output.display()).map_err(|e| CliError::io("<stdout>", e))
}

pub fn bench_command(args: &BenchArgs, out: &mut dyn Write) -> Result<BenchReport, CliError> {
    let mut graphs: Vec<GraphSource> = args.input.iter().cloned().map(GraphSource::File).collect();
    graphs.extend(args.generate.iter().copied().map(GraphSource::Generated));
    if graphs.is_empty() {
        return Err(CliError::Usage("bench needs at least one --input or --gen".into()));
    }
    let config = BenchConfig {
        graphs,
        problem: args.problem,
        presets: args.algo.clone(),
        balances: args.balance.clone(),
        orders: args.order.clone(),
        threads: args.threads.clone(),
        trials: args.trials,
        chunk: args.chunk,
        max_iterations: args.max_iters,
        seed: args.seed,
    };
    let report = run_bench(&config)?;
    match &args.out {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::io(p, e))?;
            report.write_rows(f)?;
        }
        None => report.write_rows(&mut *out)?,
    }
    match &args.summary {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::io(p, e))?;
            report.write_summary(f)?;
        }
        None => {
            if args.out.is_none() {
                writeln!(out).map_err(|e| CliError::io("<stdout>", e))?;
            }
            report.write_summary(&mut *out)?;
        }
    }
    if let Some((cell, v)) = &report.first_violation {
        return Err(CliError::CellInvalid { cell: cell.clone(), violation: *v });
    }
    Ok(report)
}

pub fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Color(a) => color_command(a, out).map(|_| ()),
        Command::Verify(a) => verify_command(a, out),
        Command::Generate(a) => generate_command(a, out),
        Command::Bench(a) => bench_command(a, out).map(|_| ()),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_FAILURE } else { EXIT_OK };
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
