//! Benchmark grid: graphs x presets x balancing x orders x threads x trials.
//!
//! Cells run one after another so timings do not interfere. Every coloring is
//! verified; the first failure is kept in the report.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;

use super::{build_schedule, generate, load_file, CliError, GenSpec, LoadedGraph, OrderKind};
use crate::balancing::BalanceMode;
use crate::engine::{run, Preset, Problem};
use crate::verify::{verify, Violation};

#[derive(Debug, Clone)]
pub enum GraphSource {
    File(PathBuf),
    Generated(GenSpec),
}

impl GraphSource {
    pub fn label(&self) -> String {
        match self {
            GraphSource::File(p) => p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
            GraphSource::Generated(g) => g.label(),
        }
    }

    fn load(&self, problem: Problem) -> Result<LoadedGraph, CliError> {
        match self {
            GraphSource::File(p) => load_file(p, problem),
            GraphSource::Generated(g) => generate(g, problem),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub graphs: Vec<GraphSource>,
    pub problem: Problem,
    pub presets: Vec<Preset>,
    pub balances: Vec<BalanceMode>,
    pub orders: Vec<OrderKind>,
    pub threads: Vec<usize>,
    pub trials: usize,
    pub chunk: Option<usize>,
    pub max_iterations: Option<usize>,
    /// Base seed for random orders; trial `t` uses `seed + t`.
    pub seed: u64,
}

/// One trial. Column order is the CSV column order.
#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub graph: String,
    pub preset: String,
    pub balance: String,
    pub order: String,
    pub threads: usize,
    pub trial: usize,
    pub total_ms: f64,
    pub iters: usize,
    pub colors: usize,
    pub stddev_card: f64,
    /// Per-iteration wall times joined with `;`.
    pub per_iter_ms: String,
}

impl BenchRow {
    pub fn label(&self) -> String {
        format!(
            "{} {} balance={} order={} threads={} trial={}",
            self.graph, self.preset, self.balance, self.order, self.threads, self.trial
        )
    }
}

/// Aggregate of one (preset, balance, order, threads) cell over all graphs.
///
/// Speedups use the median time over trials per graph and are combined with
/// a geometric mean. `speedup_vs_seq` compares against single-thread V-V
/// without balancing; the other two compare against V-V without balancing at
/// the same thread count. Empty when the baseline is not part of the grid.
#[derive(Debug, Clone, Serialize)]
pub struct SummaryRow {
    pub preset: String,
    pub balance: String,
    pub order: String,
    pub threads: usize,
    pub graphs: usize,
    pub median_ms_geomean: f64,
    pub colors_geomean: f64,
    pub speedup_vs_seq: Option<f64>,
    pub speedup_vs_vv: Option<f64>,
    pub norm_colors_vs_vv: Option<f64>,
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub summary: Vec<SummaryRow>,
    pub first_violation: Option<(String, Violation)>,
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().quote_style(csv::QuoteStyle::Always).from_writer(w)
}

impl BenchReport {
    pub fn write_rows<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut wr = csv_writer(w);
        for r in &self.rows {
            wr.serialize(r)?;
        }
        wr.flush().map_err(|e| CliError::io("<csv>", e))
    }

    pub fn write_summary<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut wr = csv_writer(w);
        for r in &self.summary {
            wr.serialize(r)?;
        }
        wr.flush().map_err(|e| CliError::io("<csv>", e))
    }
}

pub fn median(xs: &mut [f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        0.5 * (xs[m - 1] + xs[m])
    }
}

pub fn geomean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    (xs.iter().map(|x| x.ln()).sum::<f64>() / xs.len() as f64).exp()
}

type CellKey = (String, String, String, usize);

#[derive(Default)]
struct Cell {
    ms: Vec<f64>,
    colors: Vec<f64>,
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport, CliError> {
    if config.trials == 0 {
        return Err(CliError::Usage("trials must be positive".into()));
    }
    if config.chunk == Some(0) {
        return Err(CliError::Usage("chunk must be positive".into()));
    }
    let mut report = BenchReport::default();
    // graph -> cell -> samples
    let mut cells: Vec<BTreeMap<CellKey, Cell>> = Vec::new();

    for source in &config.graphs {
        let graph = source.load(config.problem)?;
        let input = graph.input();
        let name = source.label();
        let mut per_graph = BTreeMap::new();
        for &order_kind in &config.orders {
            for trial in 0..config.trials {
                let order = order_kind.build(input, config.seed.wrapping_add(trial as u64));
                for &preset in &config.presets {
                    for &balance in &config.balances {
                        let schedule = build_schedule(preset, balance, config.chunk, config.max_iterations);
                        for &threads in &config.threads {
                            let (coloring, stats) = run(input, &order, &schedule, threads)?;
                            let row = BenchRow {
                                graph: name.clone(),
                                preset: preset.name().into(),
                                balance: balance.name().into(),
                                order: order_kind.name().into(),
                                threads,
                                trial,
                                total_ms: stats.total_ms,
                                iters: stats.iterations.len(),
                                colors: stats.num_colors,
                                stddev_card: stats.stddev_cardinality,
                                per_iter_ms: stats
                                    .iterations
                                    .iter()
                                    .map(|i| format!("{:.4}", i.total_ms()))
                                    .collect::<Vec<_>>()
                                    .join(";"),
                            };
                            if let Err(v) = verify(input, &coloring.snapshot(), false) {
                                if report.first_violation.is_none() {
                                    report.first_violation = Some((row.label(), v));
                                }
                            }
                            let cell: &mut Cell = per_graph
                                .entry((row.preset.clone(), row.balance.clone(), row.order.clone(), threads))
                                .or_default();
                            cell.ms.push(stats.total_ms);
                            cell.colors.push(stats.num_colors as f64);
                            report.rows.push(row);
                        }
                    }
                }
            }
        }
        cells.push(per_graph);
    }
    report.summary = summarize(&cells);
    Ok(report)
}

fn summarize(cells: &[BTreeMap<CellKey, Cell>]) -> Vec<SummaryRow> {
    // Reduce each graph's cell to (median ms, mean colors).
    let reduced: Vec<BTreeMap<CellKey, (f64, f64)>> = cells
        .iter()
        .map(|g| {
            g.iter()
                .map(|(k, c)| {
                    let mut ms = c.ms.clone();
                    let colors = c.colors.iter().sum::<f64>() / c.colors.len() as f64;
                    (k.clone(), (median(&mut ms).max(1e-6), colors))
                })
                .collect()
        })
        .collect();
    let Some(first) = reduced.first() else { return Vec::new() };

    let mut out = Vec::new();
    for key in first.keys() {
        let (preset, balance, order, threads) = key;
        let vv = Preset::VV.name().to_string();
        let none = BalanceMode::None.name().to_string();
        let seq_key = (vv.clone(), none.clone(), order.clone(), 1usize);
        let par_key = (vv, none, order.clone(), *threads);

        let mut ms = Vec::new();
        let mut colors = Vec::new();
        let mut vs_seq = Vec::new();
        let mut vs_vv = Vec::new();
        let mut norm = Vec::new();
        let (mut has_seq, mut has_par) = (true, true);
        for g in &reduced {
            let Some(&(t, c)) = g.get(key) else { continue };
            ms.push(t);
            colors.push(c.max(1.0));
            match g.get(&seq_key) {
                Some(&(bt, _)) => vs_seq.push(bt / t),
                None => has_seq = false,
            }
            match g.get(&par_key) {
                Some(&(bt, bc)) => {
                    vs_vv.push(bt / t);
                    norm.push(c.max(1.0) / bc.max(1.0));
                }
                None => has_par = false,
            }
        }
        out.push(SummaryRow {
            preset: preset.clone(),
            balance: balance.clone(),
            order: order.clone(),
            threads: *threads,
            graphs: ms.len(),
            median_ms_geomean: geomean(&ms),
            colors_geomean: geomean(&colors),
            speedup_vs_seq: has_seq.then(|| geomean(&vs_seq)),
            speedup_vs_vv: has_par.then(|| geomean(&vs_vv)),
            norm_colors_vs_vv: has_par.then(|| geomean(&norm)),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> BenchConfig {
        BenchConfig {
            graphs: vec![
                GraphSource::Generated(GenSpec { vertices: 300, nets: 150, degree: 6, seed: 1 }),
                GraphSource::Generated(GenSpec { vertices: 200, nets: 100, degree: 5, seed: 2 }),
            ],
            problem: Problem::Bgpc,
            presets: vec![Preset::VV, Preset::VN2],
            balances: vec![BalanceMode::None],
            orders: vec![OrderKind::Natural],
            threads: vec![1, 2],
            trials: 2,
            chunk: None,
            max_iterations: None,
            seed: 0,
        }
    }

    #[test]
    fn grid_shape_and_csv_header() {
        let r = run_bench(&config()).unwrap();
        assert_eq!(r.rows.len(), 2 * 2 * 2 * 2);
        assert!(r.first_violation.is_none());
        let mut buf = Vec::new();
        r.write_rows(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(
            header,
            "\"graph\",\"preset\",\"balance\",\"order\",\"threads\",\"trial\",\"total_ms\",\"iters\",\"colors\",\"stddev_card\",\"per_iter_ms\""
        );
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        assert_eq!(rd.records().count(), 16);
    }

    #[test]
    fn summary_baselines() {
        let r = run_bench(&config()).unwrap();
        assert_eq!(r.summary.len(), 4);
        let vv1 = r.summary.iter().find(|s| s.preset == "V-V" && s.threads == 1).unwrap();
        assert!((vv1.speedup_vs_seq.unwrap() - 1.0).abs() < 1e-9);
        assert!((vv1.norm_colors_vs_vv.unwrap() - 1.0).abs() < 1e-9);
        assert!(r.summary.iter().all(|s| s.graphs == 2));
    }

    #[test]
    fn missing_baseline_is_empty() {
        let mut c = config();
        c.presets = vec![Preset::N1N2];
        let r = run_bench(&c).unwrap();
        assert!(r.summary.iter().all(|s| s.speedup_vs_seq.is_none() && s.norm_colors_vs_vv.is_none()));
    }

    #[test]
    fn stats_helpers() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
        assert!((geomean(&[2.0, 8.0]) - 4.0).abs() < 1e-12);
    }
}
