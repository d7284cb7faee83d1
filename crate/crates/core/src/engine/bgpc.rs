//! Bipartite-graph partial coloring phases.

use crate::balancing::{select_color, BalanceMode};
use crate::graph::{BipartiteGraph, Id};

use super::schedule::QueueMode;
use super::workers::Workers;
use super::{vertex, Coloring, UNCOLORED};

pub fn color_vertex(
    graph: &BipartiteGraph,
    work: &[Id],
    coloring: &Coloring,
    balance: BalanceMode,
    chunk: usize,
    workers: &mut Workers,
) {
    vertex::color_vertex(graph, work, coloring, balance, chunk, workers)
}

pub fn remove_conflicts_vertex(
    graph: &BipartiteGraph,
    work: &[Id],
    coloring: &Coloring,
    queue: QueueMode,
    chunk: usize,
    workers: &mut Workers,
) -> Vec<Id> {
    vertex::remove_conflicts_vertex(graph, work, coloring, queue, chunk, workers)
}

/// Net-level first-fit: each member that is uncolored or repeats a color
/// already seen in the net takes the next free color from a per-net cursor
/// that never moves backwards.
pub fn color_net_first_fit(graph: &BipartiteGraph, coloring: &Coloring, chunk: usize, workers: &mut Workers) {
    workers.for_each_chunk(graph.num_nets(), chunk, |st, nets| {
        for v in nets {
            let f = &mut st.forbidden;
            f.clear();
            let mut col = 0u32;
            for &u in graph.vtxs(v) {
                let mut c = coloring.get(u as usize);
                if c == UNCOLORED || f.contains(c) {
                    col = f.next_free_from(col);
                    coloring.set(u as usize, col);
                    c = col;
                }
                f.insert(c);
            }
        }
    });
}

/// Two-pass net coloring. The first pass records the net's distinct colors
/// and queues uncolored or locally repeated members; the second hands the
/// queued members colors descending from `|vtxs(v)| - 1`, or one balancing
/// pick each when `balance` is not `None`.
pub fn color_net(graph: &BipartiteGraph, coloring: &Coloring, balance: BalanceMode, chunk: usize, workers: &mut Workers) {
    workers.for_each_chunk(graph.num_nets(), chunk, |st, nets| {
        for v in nets {
            let members = graph.vtxs(v);
            st.forbidden.clear();
            st.local.clear();
            for &u in members {
                let c = coloring.get(u as usize);
                if c != UNCOLORED && !st.forbidden.contains(c) {
                    st.forbidden.insert(c);
                } else {
                    st.local.push(u);
                }
            }
            if balance == BalanceMode::None {
                let mut col = members.len() as i64 - 1;
                for &u in &st.local {
                    while col >= 0 && st.forbidden.contains(col as u32) {
                        col -= 1;
                    }
                    assert!(col >= 0, "reverse first-fit ran out of colors on net {v} (size {})", members.len());
                    coloring.set(u as usize, col as u32);
                    col -= 1;
                }
            } else {
                for &u in &st.local {
                    let c = select_color(balance, &st.forbidden, u, &mut st.balancer);
                    st.forbidden.insert(c);
                    coloring.set(u as usize, c);
                }
            }
        }
    });
}

/// Within each net the first holder of a color keeps it; later holders are
/// reset to uncolored. Returns every uncolored vertex.
pub fn remove_conflicts_net(graph: &BipartiteGraph, coloring: &Coloring, chunk: usize, workers: &mut Workers) -> Vec<Id> {
    workers.for_each_chunk(graph.num_nets(), chunk, |st, nets| {
        for v in nets {
            st.forbidden.clear();
            for &u in graph.vtxs(v) {
                let c = coloring.get(u as usize);
                if c != UNCOLORED {
                    if st.forbidden.contains(c) {
                        coloring.set(u as usize, UNCOLORED);
                    } else {
                        st.forbidden.insert(c);
                    }
                }
            }
        }
    });
    vertex::gather_uncolored(coloring, chunk, workers)
}
