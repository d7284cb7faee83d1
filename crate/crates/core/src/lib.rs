//! Speculative shared-memory graph coloring.
//!
//! `optcolor` colors the vertices of a bipartite graph so that vertices
//! sharing a net differ (bipartite-graph partial coloring, BGPC), or the
//! vertices of an undirected graph so that any two within distance two differ
//! (distance-2 coloring, D2GC). Both run an optimistic iterate-color-fix loop:
//! workers color a queue without locks, a conflict-removal phase requeues
//! clashes, and the loop repeats until the queue drains.
//!
//! Each phase comes in a vertex-based flavor (traverse from the vertex being
//! colored) and a net-based flavor (traverse from each net, linear in the
//! graph size). [`engine::Preset`] names the eight standard mixes; color
//! selection can be swapped for one of two balancing policies
//! ([`balancing::BalanceMode`]).
//!
//! ```
//! use optcolor::prelude::*;
//!
//! let g = generate_random_bipartite(2_000, 1_000, 8, 7).unwrap();
//! let (coloring, stats) = run_bgpc(&g, &natural_order(g.num_vertices()), &Preset::N1N2.schedule(), 2).unwrap();
//! assert!(verify_bgpc(&g, &coloring.snapshot(), false).is_ok());
//! assert!(stats.num_colors >= g.degree_stats().max_net_size);
//! ```
//!
//! The runnable programs under `examples/` walk through each capability;
//! the `optcolor` binary exposes `color`, `verify`, `generate`, and `bench`.

pub mod balancing;
pub mod cli;
pub mod engine;
pub mod graph;
pub mod ordering;
pub mod stats;
pub mod verify;

pub mod prelude {
    pub use crate::balancing::{attach_balancer, BalanceMode};
    pub use crate::engine::{
        run, run_bgpc, run_d2gc, Coloring, ColoringInput, Preset, Problem, StrategySchedule, UNCOLORED,
    };
    pub use crate::graph::{
        generate_random_bipartite, generate_random_unipartite, load_matrix_market, read_matrix_market_file,
        BipartiteGraph, UnipartiteGraph,
    };
    pub use crate::ordering::{natural_order, random_order, smallest_last_order, VertexOrder};
    pub use crate::stats::{color_stats, ColoringStats};
    pub use crate::verify::{verify, verify_bgpc, verify_d2gc, Violation};
}
