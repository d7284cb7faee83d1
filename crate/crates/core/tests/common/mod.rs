//! Straight-line sequential reference implementations and the shared test
//! graph suite. Nothing here calls into the engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

use optcolor::balancing::BalanceMode;
use optcolor::engine::{ColoringInput, StrategySchedule, ColoringStrategy, UNCOLORED};
use optcolor::graph::{generate_random_bipartite, generate_random_unipartite, BipartiteGraph, UnipartiteGraph};

pub const U: u32 = UNCOLORED;

/// Distance-2 neighbors of `v` (excluding `v`), possibly with repeats.
pub fn d2(input: ColoringInput<'_>, v: usize) -> Vec<usize> {
    let mut out = Vec::new();
    match input {
        ColoringInput::Bgpc(g) => {
            for &net in g.nets(v) {
                for &u in g.vtxs(net as usize) {
                    if u as usize != v {
                        out.push(u as usize);
                    }
                }
            }
        }
        ColoringInput::D2gc(g) => {
            for &u in g.nbor(v) {
                out.push(u as usize);
                for &x in g.nbor(u as usize) {
                    if x as usize != v {
                        out.push(x as usize);
                    }
                }
            }
        }
    }
    out
}

/// Member sequences the net-based phases walk: nets for BGPC, `[v] ++ nbor(v)`
/// for D2GC.
pub fn groups(input: ColoringInput<'_>) -> Vec<Vec<usize>> {
    match input {
        ColoringInput::Bgpc(g) => {
            (0..g.num_nets()).map(|n| g.vtxs(n).iter().map(|&u| u as usize).collect()).collect()
        }
        ColoringInput::D2gc(g) => (0..g.num_vertices())
            .map(|v| std::iter::once(v).chain(g.nbor(v).iter().map(|&u| u as usize)).collect())
            .collect(),
    }
}

fn smallest_free(f: &BTreeSet<u32>, from: u32) -> u32 {
    let mut c = from;
    while f.contains(&c) {
        c += 1;
    }
    c
}

/// Greedy first-fit in `order`.
pub fn greedy(input: ColoringInput<'_>, order: &[u32]) -> Vec<u32> {
    let n = input.num_vertices();
    let mut colors = vec![U; n];
    for &w in order {
        let f: BTreeSet<u32> = d2(input, w as usize).into_iter().map(|u| colors[u]).filter(|&c| c != U).collect();
        colors[w as usize] = smallest_free(&f, 0);
    }
    colors
}

#[derive(Default, Clone, Copy)]
pub struct Balancer {
    pub col_max: u32,
    pub col_next: u32,
}

impl Balancer {
    pub fn pick(&mut self, mode: BalanceMode, f: &BTreeSet<u32>, id: usize) -> u32 {
        let c = match mode {
            BalanceMode::None => smallest_free(f, 0),
            BalanceMode::B1 if id % 2 == 1 => smallest_free(f, 0),
            BalanceMode::B1 => match (0..=self.col_max).rev().find(|c| !f.contains(c)) {
                Some(c) => c,
                None => smallest_free(f, self.col_max + 1),
            },
            BalanceMode::B2 => {
                let c = smallest_free(f, self.col_next);
                if c > self.col_max { smallest_free(f, 0) } else { c }
            }
        };
        self.col_max = self.col_max.max(c);
        if mode == BalanceMode::B2 {
            self.col_next = (c + 1).min(self.col_max / 3 + 1);
        }
        c
    }
}

pub struct Trace {
    pub colors: Vec<u32>,
    /// `(work_before, work_after)` per iteration.
    pub work: Vec<(usize, usize)>,
    pub fallback: bool,
}

/// Single-worker simulation of a schedule.
pub fn simulate(input: ColoringInput<'_>, order: &[u32], s: &StrategySchedule) -> Trace {
    let n = input.num_vertices();
    let groups = groups(input);
    let mut colors = vec![U; n];
    let mut bal = Balancer::default();
    let mut w: Vec<usize> = order.iter().map(|&v| v as usize).collect();
    let mut work = Vec::new();
    let mut fallback = false;
    let mut it = 1;
    while !w.is_empty() {
        if it > s.max_iterations {
            for &v in &w {
                let f: BTreeSet<u32> = d2(input, v).into_iter().map(|u| colors[u]).filter(|&c| c != U).collect();
                colors[v] = smallest_free(&f, 0);
            }
            work.push((w.len(), 0));
            fallback = true;
            break;
        }
        let before = w.len();
        let net_coloring = it <= s.net_coloring_iters;
        if net_coloring {
            for g in &groups {
                let mut f = BTreeSet::new();
                let mut pending = Vec::new();
                if s.net_coloring == ColoringStrategy::NetFirstFit {
                    let mut col = 0;
                    for &u in g {
                        if colors[u] == U || f.contains(&colors[u]) {
                            col = smallest_free(&f, col);
                            colors[u] = col;
                        }
                        f.insert(colors[u]);
                    }
                    continue;
                }
                for &u in g {
                    if colors[u] != U && f.insert(colors[u]) {
                        continue;
                    }
                    pending.push(u);
                }
                if s.balance == BalanceMode::None {
                    let mut col = g.len() as i64 - 1;
                    for u in pending {
                        while f.contains(&(col as u32)) {
                            col -= 1;
                        }
                        assert!(col >= 0);
                        colors[u] = col as u32;
                        col -= 1;
                    }
                } else {
                    for u in pending {
                        let c = bal.pick(s.balance, &f, u);
                        f.insert(c);
                        colors[u] = c;
                    }
                }
            }
        } else {
            for &v in &w {
                let f: BTreeSet<u32> = d2(input, v).into_iter().map(|u| colors[u]).filter(|&c| c != U).collect();
                colors[v] = bal.pick(s.balance, &f, v);
            }
        }
        if it <= s.net_removal_iters {
            for g in &groups {
                let mut seen = BTreeSet::new();
                for &u in g {
                    if colors[u] != U && !seen.insert(colors[u]) {
                        colors[u] = U;
                    }
                }
            }
            w = (0..n).filter(|&v| colors[v] == U).collect();
        } else {
            let checked: Vec<usize> = if net_coloring { (0..n).collect() } else { w.clone() };
            w = checked
                .into_iter()
                .filter(|&v| colors[v] == U || d2(input, v).into_iter().any(|u| u < v && colors[u] == colors[v]))
                .collect();
        }
        work.push((before, w.len()));
        it += 1;
    }
    Trace { colors, work, fallback }
}

pub struct Suite {
    pub bipartite: Vec<BipartiteGraph>,
    pub unipartite: Vec<UnipartiteGraph>,
}

/// Twenty graphs per problem, sizes growing geometrically up to `max_vertices`.
pub fn suite(count: usize, min_vertices: usize, max_vertices: usize, seed: u64) -> Suite {
    let mut bipartite = Vec::new();
    let mut unipartite = Vec::new();
    let ratio = (max_vertices as f64 / min_vertices as f64).powf(1.0 / (count.max(2) - 1) as f64);
    for i in 0..count {
        let n = (min_vertices as f64 * ratio.powi(i as i32)).round() as usize;
        let s = seed + i as u64;
        let net_size = 3 + i % 6;
        bipartite.push(generate_random_bipartite(n, n / 2, net_size.min(n), s).unwrap());
        let degree = 3 + i % 5;
        unipartite.push(generate_random_unipartite(n, degree, s).unwrap());
    }
    Suite { bipartite, unipartite }
}
