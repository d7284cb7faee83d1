//! The speculative color / fix driver and its phase kernels.
//!
//! Each iteration runs one coloring phase over the current work queue and
//! one conflict-removal phase that yields the next queue, separated by
//! barriers, until the queue is empty. Which kernel runs in each phase is
//! decided per iteration by a [`StrategySchedule`].

pub mod bgpc;
pub mod d2gc;
pub mod forbidden;
mod schedule;
mod vertex;
pub mod workers;

use std::sync::atomic::{AtomicU32, Ordering};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use forbidden::ForbiddenMarker;
pub use schedule::{
    Chunking, ColoringStrategy, ConflictStrategy, Preset, QueueMode, StrategySchedule, DEFAULT_MAX_ITERATIONS,
    TUNED_CHUNK,
};
pub use workers::{WorkerState, Workers};

pub use bgpc::{
    color_net as bgpc_color_net, color_net_first_fit as bgpc_color_net_v1, color_vertex as bgpc_color_vertex,
    remove_conflicts_net as bgpc_remove_conflicts_net, remove_conflicts_vertex as bgpc_remove_conflicts_vertex,
};
pub use d2gc::{
    color_net as d2gc_color_net, color_vertex as d2gc_color_vertex, remove_conflicts_net as d2gc_remove_conflicts_net,
    remove_conflicts_vertex as d2gc_remove_conflicts_vertex,
};

use crate::graph::{BipartiteGraph, Distance2, Id, UnipartiteGraph};
use crate::ordering::VertexOrder;
use crate::stats::{color_stats, ColoringStats, IterationStats, RunInfo};

/// Slot value of a vertex without a color.
pub const UNCOLORED: u32 = u32::MAX;

/// Shared per-vertex colors. Slots are individually atomic with relaxed
/// ordering; phases synchronize through barriers only.
#[derive(Debug)]
pub struct Coloring {
    slots: Vec<AtomicU32>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Self { slots: (0..n).map(|_| AtomicU32::new(UNCOLORED)).collect() }
    }

    pub fn from_colors(colors: &[u32]) -> Self {
        Self { slots: colors.iter().map(|&c| AtomicU32::new(c)).collect() }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Raw slot value, [`UNCOLORED`] if unset.
    #[inline]
    pub fn get(&self, v: usize) -> u32 {
        self.slots[v].load(Ordering::Relaxed)
    }

    #[inline]
    pub fn set(&self, v: usize, color: u32) {
        self.slots[v].store(color, Ordering::Relaxed)
    }

    pub fn color(&self, v: usize) -> Option<u32> {
        Some(self.get(v)).filter(|&c| c != UNCOLORED)
    }

    pub fn snapshot(&self) -> Vec<u32> {
        self.slots.iter().map(|s| s.load(Ordering::Relaxed)).collect()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.slots.into_iter().map(AtomicU32::into_inner).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.slots.iter().all(|s| s.load(Ordering::Relaxed) != UNCOLORED)
    }
}

impl Clone for Coloring {
    fn clone(&self) -> Self {
        Self::from_colors(&self.snapshot())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Bgpc,
    D2gc,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Bgpc => "bgpc",
            Problem::D2gc => "d2gc",
        }
    }
}

impl std::str::FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bgpc" => Ok(Problem::Bgpc),
            "d2gc" => Ok(Problem::D2gc),
            other => Err(format!("unknown problem '{other}' (expected bgpc or d2gc)")),
        }
    }
}

impl std::fmt::Display for Problem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(self.name())
    }
}

/// A graph paired with the problem it is colored for.
#[derive(Debug, Clone, Copy)]
pub enum ColoringInput<'a> {
    Bgpc(&'a BipartiteGraph),
    D2gc(&'a UnipartiteGraph),
}

impl ColoringInput<'_> {
    pub fn problem(&self) -> Problem {
        match self {
            ColoringInput::Bgpc(_) => Problem::Bgpc,
            ColoringInput::D2gc(_) => Problem::D2gc,
        }
    }

    pub fn num_vertices(&self) -> usize {
        match self {
            ColoringInput::Bgpc(g) => g.num_vertices(),
            ColoringInput::D2gc(g) => g.num_vertices(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("order has {order} entries but the graph has {vertices} vertices")]
    OrderLength { order: usize, vertices: usize },
    #[error("{strategy:?} coloring is not available for {problem}")]
    Unsupported { strategy: ColoringStrategy, problem: Problem },
    #[error("chunk size must be positive")]
    ZeroChunk,
}

/// Problem-specific net kernels; vertex kernels come from [`Distance2`].
trait NetKernels: Distance2 + Sync {
    const PROBLEM: Problem;
    fn forbidden_capacity(&self) -> usize;
    fn color_net(&self, strategy: ColoringStrategy, c: &Coloring, balance: crate::balancing::BalanceMode, chunk: usize, w: &mut Workers);
    fn remove_net(&self, c: &Coloring, chunk: usize, w: &mut Workers) -> Vec<Id>;
    fn net_count(&self) -> usize;
}

impl NetKernels for BipartiteGraph {
    const PROBLEM: Problem = Problem::Bgpc;

    fn forbidden_capacity(&self) -> usize {
        self.degree_stats().max_d2_degree_bound + 2
    }

    fn color_net(&self, strategy: ColoringStrategy, c: &Coloring, balance: crate::balancing::BalanceMode, chunk: usize, w: &mut Workers) {
        match strategy {
            ColoringStrategy::NetFirstFit => bgpc::color_net_first_fit(self, c, chunk, w),
            _ => bgpc::color_net(self, c, balance, chunk, w),
        }
    }

    fn remove_net(&self, c: &Coloring, chunk: usize, w: &mut Workers) -> Vec<Id> {
        bgpc::remove_conflicts_net(self, c, chunk, w)
    }

    fn net_count(&self) -> usize {
        self.num_nets()
    }
}

impl NetKernels for UnipartiteGraph {
    const PROBLEM: Problem = Problem::D2gc;

    fn forbidden_capacity(&self) -> usize {
        self.degree_stats().max_d2_degree_bound + 2
    }

    fn color_net(&self, _strategy: ColoringStrategy, c: &Coloring, balance: crate::balancing::BalanceMode, chunk: usize, w: &mut Workers) {
        d2gc::color_net(self, c, balance, chunk, w)
    }

    fn remove_net(&self, c: &Coloring, chunk: usize, w: &mut Workers) -> Vec<Id> {
        d2gc::remove_conflicts_net(self, c, chunk, w)
    }

    fn net_count(&self) -> usize {
        self.num_vertices()
    }
}

/// Colors `input` to completion.
///
/// `order` fixes the enumeration of the first work queue; requeued vertices
/// are processed in merge order. If the queue is still non-empty after
/// `schedule.max_iterations` iterations, one worker finishes it sequentially
/// and the run is flagged in the returned stats.
pub fn run(
    input: ColoringInput<'_>,
    order: &VertexOrder,
    schedule: &StrategySchedule,
    workers: usize,
) -> Result<(Coloring, ColoringStats), EngineError> {
    match input {
        ColoringInput::Bgpc(g) => drive(g, order, schedule, workers),
        ColoringInput::D2gc(g) => drive(g, order, schedule, workers),
    }
}

pub fn run_bgpc(
    graph: &BipartiteGraph,
    order: &VertexOrder,
    schedule: &StrategySchedule,
    workers: usize,
) -> Result<(Coloring, ColoringStats), EngineError> {
    drive(graph, order, schedule, workers)
}

pub fn run_d2gc(
    graph: &UnipartiteGraph,
    order: &VertexOrder,
    schedule: &StrategySchedule,
    workers: usize,
) -> Result<(Coloring, ColoringStats), EngineError> {
    drive(graph, order, schedule, workers)
}

fn elapsed_ms(t: Instant) -> f64 {
    // microsecond resolution
    t.elapsed().as_micros() as f64 / 1000.0
}

fn drive<G: NetKernels>(
    graph: &G,
    order: &VertexOrder,
    schedule: &StrategySchedule,
    num_workers: usize,
) -> Result<(Coloring, ColoringStats), EngineError> {
    let n = graph.num_color_vertices();
    if num_workers == 0 {
        return Err(EngineError::NoWorkers);
    }
    if order.len() != n {
        return Err(EngineError::OrderLength { order: order.len(), vertices: n });
    }
    if schedule.chunking == Chunking::Fixed(0) {
        return Err(EngineError::ZeroChunk);
    }
    if G::PROBLEM == Problem::D2gc && schedule.net_coloring == ColoringStrategy::NetFirstFit && schedule.net_coloring_iters > 0 {
        return Err(EngineError::Unsupported { strategy: ColoringStrategy::NetFirstFit, problem: Problem::D2gc });
    }

    let start = Instant::now();
    let coloring = Coloring::uncolored(n);
    let mut workers = Workers::new(num_workers, graph.forbidden_capacity());
    let mut work: Vec<Id> = order.as_slice().to_vec();
    let mut iterations = Vec::new();
    let mut fallback_vertices = 0;
    let mut iteration = 1;

    while !work.is_empty() {
        if iteration > schedule.max_iterations {
            let t = Instant::now();
            fallback_vertices = work.len();
            vertex::complete_sequentially(graph, &work, &coloring, &mut workers);
            iterations.push(IterationStats {
                iteration,
                coloring: ColoringStrategy::Vertex,
                removal: None,
                work_before: work.len(),
                work_after: 0,
                coloring_ms: elapsed_ms(t),
                removal_ms: 0.0,
                sequential_fallback: true,
            });
            break;
        }

        let coloring_strategy = schedule.coloring_strategy(iteration);
        let removal = schedule.conflict_strategy(iteration);
        let work_before = work.len();

        let t = Instant::now();
        let colored_all = match coloring_strategy {
            ColoringStrategy::Vertex => {
                let chunk = schedule.chunking.resolve(work.len(), num_workers);
                vertex::color_vertex(graph, &work, &coloring, schedule.balance, chunk, &mut workers);
                false
            }
            strategy => {
                let chunk = schedule.chunking.resolve(graph.net_count(), num_workers);
                graph.color_net(strategy, &coloring, schedule.balance, chunk, &mut workers);
                true
            }
        };
        let coloring_ms = elapsed_ms(t);

        let t = Instant::now();
        work = match removal {
            ConflictStrategy::Net => {
                let chunk = schedule.chunking.resolve(graph.net_count(), num_workers);
                graph.remove_net(&coloring, chunk, &mut workers)
            }
            ConflictStrategy::Vertex => {
                // net coloring may touch any vertex, so every vertex is checked
                let checked: Vec<Id> = if colored_all { (0..n as Id).collect() } else { std::mem::take(&mut work) };
                let chunk = schedule.chunking.resolve(checked.len(), num_workers);
                vertex::remove_conflicts_vertex(graph, &checked, &coloring, schedule.queue, chunk, &mut workers)
            }
        };
        iterations.push(IterationStats {
            iteration,
            coloring: coloring_strategy,
            removal: Some(removal),
            work_before,
            work_after: work.len(),
            coloring_ms,
            removal_ms: elapsed_ms(t),
            sequential_fallback: false,
        });
        iteration += 1;
    }

    let total_ms = elapsed_ms(start);
    let mut stats = color_stats(&coloring.snapshot()).expect("driver leaves no vertex uncolored");
    stats.iterations = iterations;
    stats.total_ms = total_ms;
    stats.run = Some(RunInfo {
        problem: G::PROBLEM,
        schedule: schedule.name.clone(),
        balance: schedule.balance,
        workers: num_workers,
        chunking: schedule.chunking,
        queue: schedule.queue,
        max_iterations: schedule.max_iterations,
        fallback_used: fallback_vertices > 0,
        fallback_vertices,
    });
    Ok((coloring, stats))
}
