//! Distance-2 graph coloring phases. The "net" variants process each
//! vertex's closed neighborhood, so the vertex itself is handled first.

use crate::balancing::{select_color, BalanceMode};
use crate::graph::{Id, UnipartiteGraph};

use super::schedule::QueueMode;
use super::workers::Workers;
use super::{vertex, Coloring, UNCOLORED};

pub fn color_vertex(
    graph: &UnipartiteGraph,
    work: &[Id],
    coloring: &Coloring,
    balance: BalanceMode,
    chunk: usize,
    workers: &mut Workers,
) {
    vertex::color_vertex(graph, work, coloring, balance, chunk, workers)
}

pub fn remove_conflicts_vertex(
    graph: &UnipartiteGraph,
    work: &[Id],
    coloring: &Coloring,
    queue: QueueMode,
    chunk: usize,
    workers: &mut Workers,
) -> Vec<Id> {
    vertex::remove_conflicts_vertex(graph, work, coloring, queue, chunk, workers)
}

/// Reverse first-fit over `{v} ∪ nbor(v)` starting from `|nbor(v)|`.
pub fn color_net(graph: &UnipartiteGraph, coloring: &Coloring, balance: BalanceMode, chunk: usize, workers: &mut Workers) {
    workers.for_each_chunk(graph.num_vertices(), chunk, |st, vertices| {
        for v in vertices {
            st.forbidden.clear();
            st.local.clear();
            let cv = coloring.get(v);
            if cv != UNCOLORED {
                st.forbidden.insert(cv);
            } else {
                st.local.push(v as Id);
            }
            let nbrs = graph.nbor(v);
            for &u in nbrs {
                let c = coloring.get(u as usize);
                if c != UNCOLORED && !st.forbidden.contains(c) {
                    st.forbidden.insert(c);
                } else {
                    st.local.push(u);
                }
            }
            if balance == BalanceMode::None {
                let mut col = nbrs.len() as i64;
                for &u in &st.local {
                    while col >= 0 && st.forbidden.contains(col as u32) {
                        col -= 1;
                    }
                    assert!(col >= 0, "reverse first-fit ran out of colors at vertex {v} (degree {})", nbrs.len());
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

/// For each vertex, the first holder of a color in `{v} ∪ nbor(v)` keeps it
/// (`v` first); later holders are reset. Returns every uncolored vertex.
pub fn remove_conflicts_net(graph: &UnipartiteGraph, coloring: &Coloring, chunk: usize, workers: &mut Workers) -> Vec<Id> {
    workers.for_each_chunk(graph.num_vertices(), chunk, |st, vertices| {
        for v in vertices {
            st.forbidden.clear();
            let cv = coloring.get(v);
            if cv != UNCOLORED {
                st.forbidden.insert(cv);
            }
            for &u in graph.nbor(v) {
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

#[cfg(test)]
mod tests {
    use super::*;

    const U: u32 = UNCOLORED;

    fn path() -> UnipartiteGraph {
        UnipartiteGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn one() -> Workers {
        Workers::new(1, 8)
    }

    #[test]
    fn vertex_coloring_uses_closed_two_hop_neighborhood() {
        let p = path();
        let c = Coloring::from_colors(&[0, U, 2, 0]);
        color_vertex(&p, &[1], &c, BalanceMode::None, 64, &mut one());
        assert_eq!(c.get(1), 1);

        let iso = UnipartiteGraph::from_edges(2, &[]).unwrap();
        let c = Coloring::uncolored(2);
        color_vertex(&iso, &[0, 1], &c, BalanceMode::None, 64, &mut one());
        assert_eq!(c.snapshot(), vec![0, 0]);

        let k = 5;
        let star = UnipartiteGraph::from_edges(k + 1, &(1..=k as Id).map(|l| (0, l)).collect::<Vec<_>>()).unwrap();
        let mut colors = vec![U];
        colors.extend(0..k as u32);
        let c = Coloring::from_colors(&colors);
        color_vertex(&star, &[0], &c, BalanceMode::None, 64, &mut one());
        assert_eq!(c.get(0), k as u32);
    }

    #[test]
    fn net_coloring_path_trace() {
        // v0: W_local {0,1}, start 1 -> c0=1, c1=0
        // v1: F {0,1}, W_local {2}, start 2 -> c2=2
        // v2: F {2,0}, W_local {3}, start 2 -> skip 2 -> c3=1
        let p = path();
        let c = Coloring::uncolored(4);
        color_net(&p, &c, BalanceMode::None, 64, &mut one());
        assert_eq!(c.snapshot(), vec![1, 0, 2, 1]);

        let iso = UnipartiteGraph::from_edges(1, &[]).unwrap();
        let c = Coloring::uncolored(1);
        color_net(&iso, &c, BalanceMode::None, 64, &mut one());
        assert_eq!(c.get(0), 0);
    }

    #[test]
    fn net_coloring_leaves_distinct_neighborhood_alone() {
        let star = UnipartiteGraph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let c = Coloring::from_colors(&[3, 0, 1]);
        color_net(&star, &c, BalanceMode::None, 64, &mut one());
        assert_eq!(c.snapshot(), vec![3, 0, 1]);
    }

    #[test]
    fn net_removal_cases() {
        let edge = UnipartiteGraph::from_edges(2, &[(0, 1)]).unwrap();
        let c = Coloring::from_colors(&[0, 0]);
        assert_eq!(remove_conflicts_net(&edge, &c, 64, &mut one()), vec![1]);
        assert_eq!(c.snapshot(), vec![0, U]);

        let p = path();
        let c = Coloring::from_colors(&[1, 0, 2, 1]);
        assert!(remove_conflicts_net(&p, &c, 64, &mut one()).is_empty());

        let tri = UnipartiteGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = Coloring::from_colors(&[0, 0, 0]);
        let mut next = remove_conflicts_net(&tri, &c, 64, &mut one());
        next.sort_unstable();
        assert_eq!(next, vec![1, 2]);
        assert_eq!(c.snapshot(), vec![0, U, U]);
    }

    #[test]
    fn vertex_removal_over_two_hop_pairs() {
        let p = path();
        let c = Coloring::from_colors(&[0, 1, 0, 1]);
        let mut next = remove_conflicts_vertex(&p, &[0, 1, 2, 3], &c, QueueMode::LocalBuffers, 64, &mut one());
        next.sort_unstable();
        assert_eq!(next, vec![2, 3]);

        let c = Coloring::from_colors(&[1, 0, 2, 1]);
        assert!(remove_conflicts_vertex(&p, &[0, 1, 2, 3], &c, QueueMode::SharedAppend, 64, &mut one()).is_empty());

        // stale neighbor 0 outside the queue still forces 2 back in
        let c = Coloring::from_colors(&[4, 1, 4, 3]);
        assert_eq!(remove_conflicts_vertex(&p, &[2], &c, QueueMode::LocalBuffers, 64, &mut one()), vec![2]);
    }
}
