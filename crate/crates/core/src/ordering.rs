//! Vertex processing orders.
//!
//! Orders are applied by enumerating the initial work queue in permuted order;
//! the graph is never relabeled, so colorings stay indexed by original ids.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Distance2, Id};

/// `perm[i]` is the id of the i-th vertex to process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder(Vec<Id>);

impl VertexOrder {
    /// Wraps a permutation, returning `None` if `perm` is not one.
    pub fn from_perm(perm: Vec<Id>) -> Option<Self> {
        let mut seen = vec![false; perm.len()];
        for &v in &perm {
            let slot = seen.get_mut(v as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Self(perm))
    }

    pub fn as_slice(&self) -> &[Id] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<Id> {
        self.0
    }
}

pub fn natural_order(n: usize) -> VertexOrder {
    VertexOrder((0..n as Id).collect())
}

pub fn random_order(n: usize, seed: u64) -> VertexOrder {
    let mut perm: Vec<Id> = (0..n as Id).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    VertexOrder(perm)
}

/// Smallest-last order on the distance-2 structure.
///
/// Repeatedly peels a vertex of minimum current distance-2 degree (distinct
/// neighbors, ties to the smaller id), and returns the reverse of the peeling
/// sequence.
pub fn smallest_last_order<G: Distance2>(graph: &G) -> VertexOrder {
    let n = graph.num_color_vertices();
    let mut stamp = vec![usize::MAX; n];
    let mut degree = vec![0usize; n];
    for v in 0..n {
        let mut d = 0;
        graph.for_each_d2(v, |u| {
            if stamp[u as usize] != v {
                stamp[u as usize] = v;
                d += 1;
            }
        });
        degree[v] = d;
    }

    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<Id>> = vec![BTreeSet::new(); max_degree + 1];
    for (v, &d) in degree.iter().enumerate() {
        buckets[d].insert(v as Id);
    }
    let mut removed = vec![false; n];
    let mut peeled = Vec::with_capacity(n);
    let mut low = 0usize;
    stamp.iter_mut().for_each(|s| *s = usize::MAX);
    while peeled.len() < n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("non-empty bucket");
        let vi = v as usize;
        removed[vi] = true;
        peeled.push(v);
        graph.for_each_d2(vi, |u| {
            let ui = u as usize;
            if removed[ui] || stamp[ui] == vi {
                return;
            }
            stamp[ui] = vi;
            let d = degree[ui];
            buckets[d].remove(&u);
            buckets[d - 1].insert(u);
            degree[ui] = d - 1;
            low = low.min(d - 1);
        });
    }
    peeled.reverse();
    VertexOrder(peeled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BipartiteGraph, UnipartiteGraph};

    fn is_perm(o: &VertexOrder, n: usize) -> bool {
        let mut bits = vec![false; n];
        o.len() == n && o.as_slice().iter().all(|&v| !std::mem::replace(&mut bits[v as usize], true))
    }

    #[test]
    fn natural_small_cases() {
        assert_eq!(natural_order(4).as_slice(), &[0, 1, 2, 3]);
        assert!(natural_order(0).is_empty());
        assert_eq!(natural_order(1).as_slice(), &[0]);
    }

    #[test]
    fn smallest_last_hand_peel() {
        // d2-degrees 2,2,3,1: peel 3, then 0 (tie at 2, smaller id), 1, 2
        let g = BipartiteGraph::from_nets(4, &[vec![0, 1, 2], vec![2, 3]]).unwrap();
        let o = smallest_last_order(&g);
        assert_eq!(o.as_slice(), &[2, 1, 0, 3]);
    }

    #[test]
    fn equal_degrees_reverse_ids() {
        let g = BipartiteGraph::from_nets(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(smallest_last_order(&g).as_slice(), &[4, 3, 2, 1, 0]);
        let k = UnipartiteGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(smallest_last_order(&k).as_slice(), &[2, 1, 0]);
    }

    #[test]
    fn single_vertex() {
        let g = BipartiteGraph::from_nets(1, &[vec![0]]).unwrap();
        assert_eq!(smallest_last_order(&g).as_slice(), &[0]);
    }

    #[test]
    fn outputs_are_permutations() {
        let g = crate::graph::generate_random_bipartite(500, 200, 5, 3).unwrap();
        assert!(is_perm(&smallest_last_order(&g), 500));
        assert!(is_perm(&random_order(500, 9), 500));
        let u = crate::graph::generate_random_unipartite(300, 4, 3).unwrap();
        assert!(is_perm(&smallest_last_order(&u), 300));
    }

    #[test]
    fn from_perm_rejects_non_permutations() {
        assert!(VertexOrder::from_perm(vec![0, 0]).is_none());
        assert!(VertexOrder::from_perm(vec![0, 2]).is_none());
        assert!(VertexOrder::from_perm(vec![1, 0]).is_some());
    }
}
