//! Brute-force validity checks. Nothing here shares code with the engine's
//! kernels, so a passing verdict is an independent confirmation.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::engine::{ColoringInput, UNCOLORED};
use crate::graph::{BipartiteGraph, Id, UnipartiteGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Uncolored,
    BgpcConflict,
    D2Conflict,
    /// The coloring does not have one slot per vertex.
    LengthMismatch,
}

/// A failed check with a witness that can be re-checked against the graph.
///
/// For conflicts, `first` and `second` share a color and `via` is the common
/// net (BGPC) or the middle vertex of a two-hop path (D2GC, `None` when the
/// two are adjacent). For an uncolored slot both ids name the vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub first: Id,
    pub second: Id,
    pub via: Option<Id>,
    pub color: Option<u32>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ViolationKind::Uncolored => write!(f, "vertex {} is uncolored", self.first),
            ViolationKind::LengthMismatch => {
                write!(f, "coloring has {} entries, graph has {} vertices", self.first, self.second)
            }
            ViolationKind::BgpcConflict => write!(
                f,
                "vertices {} and {} share net {} and color {}",
                self.first,
                self.second,
                self.via.unwrap_or_default(),
                self.color.unwrap_or_default()
            ),
            ViolationKind::D2Conflict => match self.via {
                Some(mid) => write!(
                    f,
                    "vertices {} and {} share neighbor {} and color {}",
                    self.first,
                    self.second,
                    mid,
                    self.color.unwrap_or_default()
                ),
                None => write!(
                    f,
                    "adjacent vertices {} and {} share color {}",
                    self.first,
                    self.second,
                    self.color.unwrap_or_default()
                ),
            },
        }
    }
}

fn uncolored(v: usize) -> Violation {
    Violation { kind: ViolationKind::Uncolored, first: v as Id, second: v as Id, via: None, color: None }
}

fn check_len(colors: &[u32], n: usize) -> Result<(), Violation> {
    if colors.len() != n {
        return Err(Violation {
            kind: ViolationKind::LengthMismatch,
            first: colors.len() as Id,
            second: n as Id,
            via: None,
            color: None,
        });
    }
    Ok(())
}

/// Checks that colored members of every net are pairwise distinct. With
/// `partial`, uncolored slots are skipped instead of reported.
pub fn verify_bgpc(graph: &BipartiteGraph, colors: &[u32], partial: bool) -> Result<(), Violation> {
    check_len(colors, graph.num_vertices())?;
    if !partial {
        if let Some(v) = colors.iter().position(|&c| c == UNCOLORED) {
            return Err(uncolored(v));
        }
    }
    let mut holder: HashMap<u32, Id> = HashMap::new();
    for net in 0..graph.num_nets() {
        holder.clear();
        for &u in graph.vtxs(net) {
            let c = colors[u as usize];
            if c == UNCOLORED {
                continue;
            }
            if let Some(&first) = holder.get(&c) {
                return Err(Violation {
                    kind: ViolationKind::BgpcConflict,
                    first,
                    second: u,
                    via: Some(net as Id),
                    color: Some(c),
                });
            }
            holder.insert(c, u);
        }
    }
    Ok(())
}

/// Checks that every pair at distance one or two has distinct colors.
pub fn verify_d2gc(graph: &UnipartiteGraph, colors: &[u32], partial: bool) -> Result<(), Violation> {
    check_len(colors, graph.num_vertices())?;
    for v in 0..graph.num_vertices() {
        let cv = colors[v];
        if cv == UNCOLORED {
            if partial {
                continue;
            }
            return Err(uncolored(v));
        }
        for &u in graph.nbor(v) {
            if colors[u as usize] == cv {
                return Err(Violation {
                    kind: ViolationKind::D2Conflict,
                    first: v as Id,
                    second: u,
                    via: None,
                    color: Some(cv),
                });
            }
            for &x in graph.nbor(u as usize) {
                if x as usize != v && colors[x as usize] == cv {
                    return Err(Violation {
                        kind: ViolationKind::D2Conflict,
                        first: v as Id,
                        second: x,
                        via: Some(u),
                        color: Some(cv),
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn verify(input: ColoringInput<'_>, colors: &[u32], partial: bool) -> Result<(), Violation> {
    match input {
        ColoringInput::Bgpc(g) => verify_bgpc(g, colors, partial),
        ColoringInput::D2gc(g) => verify_d2gc(g, colors, partial),
    }
}

/// Re-checks a reported witness against the graph.
pub fn witness_holds(input: ColoringInput<'_>, colors: &[u32], w: &Violation) -> bool {
    let color = |v: Id| colors.get(v as usize).copied();
    match w.kind {
        ViolationKind::Uncolored => color(w.first) == Some(UNCOLORED),
        ViolationKind::LengthMismatch => colors.len() != input.num_vertices(),
        ViolationKind::BgpcConflict | ViolationKind::D2Conflict => {
            if w.first == w.second || color(w.first) != color(w.second) || color(w.first) == Some(UNCOLORED) {
                return false;
            }
            match (input, w.via) {
                (ColoringInput::Bgpc(g), Some(net)) => {
                    let m = g.vtxs(net as usize);
                    m.contains(&w.first) && m.contains(&w.second)
                }
                (ColoringInput::D2gc(g), None) => g.nbor(w.first as usize).contains(&w.second),
                (ColoringInput::D2gc(g), Some(mid)) => {
                    g.nbor(mid as usize).contains(&w.first) && g.nbor(mid as usize).contains(&w.second)
                }
                _ => false,
            }
        }
    }
}

/// Every vertex sharing a net with `v`, excluding `v`.
pub fn d2_neighborhood_bgpc(graph: &BipartiteGraph, v: usize) -> BTreeSet<Id> {
    let mut out = BTreeSet::new();
    for &net in graph.nets(v) {
        out.extend(graph.vtxs(net as usize).iter().copied().filter(|&u| u as usize != v));
    }
    out
}

/// Every vertex within two hops of `v`, excluding `v`.
pub fn d2_neighborhood_d2gc(graph: &UnipartiteGraph, v: usize) -> BTreeSet<Id> {
    let mut out = BTreeSet::new();
    for &u in graph.nbor(v) {
        out.insert(u);
        out.extend(graph.nbor(u as usize).iter().copied());
    }
    out.remove(&(v as Id));
    out
}

pub fn d2_neighborhood(input: ColoringInput<'_>, v: usize) -> BTreeSet<Id> {
    match input {
        ColoringInput::Bgpc(g) => d2_neighborhood_bgpc(g, v),
        ColoringInput::D2gc(g) => d2_neighborhood_d2gc(g, v),
    }
}
