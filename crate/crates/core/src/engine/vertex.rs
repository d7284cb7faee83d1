//! Vertex-based phases, shared by BGPC and D2GC through [`Distance2`].

use crate::balancing::{select_color, BalanceMode};
use crate::graph::{Distance2, Id};

use super::schedule::QueueMode;
use super::workers::{SharedQueue, Workers};
use super::{Coloring, UNCOLORED};

/// Colors every vertex of `work` from the colors currently visible in its
/// distance-2 neighborhood.
pub(crate) fn color_vertex<G: Distance2 + Sync>(
    graph: &G,
    work: &[Id],
    coloring: &Coloring,
    balance: BalanceMode,
    chunk: usize,
    workers: &mut Workers,
) {
    workers.for_each_chunk(work.len(), chunk, |st, range| {
        for &w in &work[range] {
            st.forbidden.clear();
            graph.for_each_d2(w as usize, |u| {
                let c = coloring.get(u as usize);
                if c != UNCOLORED {
                    st.forbidden.insert(c);
                }
            });
            let col = select_color(balance, &st.forbidden, w, &mut st.balancer);
            coloring.set(w as usize, col);
        }
    });
}

/// Requeues `w` when some distance-2 neighbor `u < w` holds the same color.
/// Colors are left untouched.
pub(crate) fn remove_conflicts_vertex<G: Distance2 + Sync>(
    graph: &G,
    work: &[Id],
    coloring: &Coloring,
    queue: QueueMode,
    chunk: usize,
    workers: &mut Workers,
) -> Vec<Id> {
    let conflicted = |w: Id| {
        let cw = coloring.get(w as usize);
        cw == UNCOLORED || graph.any_d2(w as usize, |u| u < w && coloring.get(u as usize) == cw)
    };
    match queue {
        QueueMode::LocalBuffers => {
            workers.for_each_chunk(work.len(), chunk, |st, range| {
                for &w in &work[range] {
                    if conflicted(w) {
                        st.next.push(w);
                    }
                }
            });
            workers.drain_next()
        }
        QueueMode::SharedAppend => {
            let shared = SharedQueue::with_capacity(work.len());
            workers.for_each_chunk(work.len(), chunk, |_, range| {
                for &w in &work[range] {
                    if conflicted(w) {
                        shared.push(w);
                    }
                }
            });
            shared.into_vec()
        }
    }
}

/// Parallel scan collecting every uncolored vertex.
pub(crate) fn gather_uncolored(coloring: &Coloring, chunk: usize, workers: &mut Workers) -> Vec<Id> {
    workers.for_each_chunk(coloring.len(), chunk, |st, range| {
        for v in range {
            if coloring.get(v) == UNCOLORED {
                st.next.push(v as Id);
            }
        }
    });
    workers.drain_next()
}

/// Single-worker first-fit completion of `work`. Always yields a valid coloring
/// when the vertices outside `work` are already conflict-free.
pub(crate) fn complete_sequentially<G: Distance2>(graph: &G, work: &[Id], coloring: &Coloring, workers: &mut Workers) {
    let st = &mut workers.states_mut()[0];
    for &w in work {
        st.forbidden.clear();
        graph.for_each_d2(w as usize, |u| {
            let c = coloring.get(u as usize);
            if c != UNCOLORED {
                st.forbidden.insert(c);
            }
        });
        coloring.set(w as usize, st.forbidden.next_free_from(0));
    }
}
