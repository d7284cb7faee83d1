//! Graph representations consumed by the coloring phases.
//!
//! A [`BipartiteGraph`] stores the vertex/net incidence twice, once per side,
//! as two CSR arrays. Rows of a sparse matrix become nets and columns become
//! vertices. A [`UnipartiteGraph`] is a symmetric adjacency CSR used for
//! distance-2 coloring.
//!
//! Graphs are immutable once built and can be shared freely between workers.

mod generate;
mod mtx;

pub use generate::{generate_random_bipartite, generate_random_unipartite};
pub use mtx::{
    load_matrix_market, read_matrix_market_file, write_matrix_market_bipartite, write_matrix_market_unipartite,
    MatrixMarket, MtxError, MtxMeta,
};

use serde::Serialize;
use thiserror::Error;

/// Vertex and net ids are stored as `u32`.
pub type Id = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("id {id} out of range (limit {limit})")]
    OutOfRange { id: usize, limit: usize },
    #[error("graph is not square: {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("pattern is not structurally symmetric: entry ({row}, {col}) has no mirror")]
    Asymmetric { row: usize, col: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Dual-CSR bipartite graph: `vtxs(net)` and `nets(vertex)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    num_vertices: usize,
    num_nets: usize,
    net_offsets: Vec<usize>,
    net_members: Vec<Id>,
    vertex_offsets: Vec<usize>,
    vertex_nets: Vec<Id>,
}

impl BipartiteGraph {
    /// Builds a graph from per-net member lists.
    ///
    /// Member order is preserved; a repeated member inside one net keeps only
    /// its first occurrence.
    pub fn from_nets<N: AsRef<[Id]>>(num_vertices: usize, nets: &[N]) -> Result<Self, GraphError> {
        let mut net_offsets = Vec::with_capacity(nets.len() + 1);
        net_offsets.push(0);
        let mut net_members = Vec::new();
        let mut seen = vec![usize::MAX; num_vertices];
        for (net, members) in nets.iter().enumerate() {
            for &u in members.as_ref() {
                let ui = u as usize;
                if ui >= num_vertices {
                    return Err(GraphError::OutOfRange { id: ui, limit: num_vertices });
                }
                if seen[ui] != net {
                    seen[ui] = net;
                    net_members.push(u);
                }
            }
            net_offsets.push(net_members.len());
        }
        Ok(Self::from_net_csr(num_vertices, net_offsets, net_members))
    }

    /// Builds the vertex-side CSR from an already deduplicated net-side CSR.
    pub(crate) fn from_net_csr(num_vertices: usize, net_offsets: Vec<usize>, net_members: Vec<Id>) -> Self {
        let num_nets = net_offsets.len() - 1;
        let mut vertex_offsets = vec![0usize; num_vertices + 1];
        for &u in &net_members {
            vertex_offsets[u as usize + 1] += 1;
        }
        for i in 0..num_vertices {
            vertex_offsets[i + 1] += vertex_offsets[i];
        }
        let mut cursor = vertex_offsets.clone();
        let mut vertex_nets = vec![0; net_members.len()];
        for net in 0..num_nets {
            for &u in &net_members[net_offsets[net]..net_offsets[net + 1]] {
                vertex_nets[cursor[u as usize]] = net as Id;
                cursor[u as usize] += 1;
            }
        }
        Self { num_vertices, num_nets, net_offsets, net_members, vertex_offsets, vertex_nets }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_nets(&self) -> usize {
        self.num_nets
    }

    pub fn num_edges(&self) -> usize {
        self.net_members.len()
    }

    /// Members of `net`, in insertion order.
    #[inline]
    pub fn vtxs(&self, net: usize) -> &[Id] {
        &self.net_members[self.net_offsets[net]..self.net_offsets[net + 1]]
    }

    /// Nets incident to `vertex`, ascending.
    #[inline]
    pub fn nets(&self, vertex: usize) -> &[Id] {
        &self.vertex_nets[self.vertex_offsets[vertex]..self.vertex_offsets[vertex + 1]]
    }

    pub fn net_offsets(&self) -> &[usize] {
        &self.net_offsets
    }

    pub fn vertex_offsets(&self) -> &[usize] {
        &self.vertex_offsets
    }

    /// `(net, vertex)` pairs from the net-side view.
    pub fn edges_by_net(&self) -> impl Iterator<Item = (Id, Id)> + '_ {
        (0..self.num_nets).flat_map(move |v| self.vtxs(v).iter().map(move |&u| (v as Id, u)))
    }

    /// `(net, vertex)` pairs from the vertex-side view.
    pub fn edges_by_vertex(&self) -> impl Iterator<Item = (Id, Id)> + '_ {
        (0..self.num_vertices).flat_map(move |u| self.nets(u).iter().map(move |&v| (v, u as Id)))
    }

    /// Checks every structural invariant of the dual CSR.
    pub fn validate(&self) -> Result<(), GraphError> {
        check_offsets("net", &self.net_offsets, self.num_nets, self.net_members.len())?;
        check_offsets("vertex", &self.vertex_offsets, self.num_vertices, self.vertex_nets.len())?;
        if self.net_members.len() != self.vertex_nets.len() {
            return Err(GraphError::Invariant("edge counts differ between views".into()));
        }
        let mut stamp = vec![usize::MAX; self.num_vertices.max(self.num_nets)];
        for v in 0..self.num_nets {
            for &u in self.vtxs(v) {
                let ui = u as usize;
                if ui >= self.num_vertices {
                    return Err(GraphError::OutOfRange { id: ui, limit: self.num_vertices });
                }
                if stamp[ui] == v {
                    return Err(GraphError::Invariant(format!("vertex {u} repeated in net {v}")));
                }
                stamp[ui] = v;
                if self.nets(ui).binary_search(&(v as Id)).is_err() {
                    return Err(GraphError::Invariant(format!("net {v} lists vertex {u} but not vice versa")));
                }
            }
        }
        stamp.iter_mut().for_each(|s| *s = usize::MAX);
        for u in 0..self.num_vertices {
            for &v in self.nets(u) {
                let vi = v as usize;
                if vi >= self.num_nets {
                    return Err(GraphError::OutOfRange { id: vi, limit: self.num_nets });
                }
                if stamp[vi] == u {
                    return Err(GraphError::Invariant(format!("net {v} repeated at vertex {u}")));
                }
                stamp[vi] = u;
                if !self.vtxs(vi).contains(&(u as Id)) {
                    return Err(GraphError::Invariant(format!("vertex {u} lists net {v} but not vice versa")));
                }
            }
        }
        Ok(())
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let sizes: Vec<usize> = (0..self.num_nets).map(|v| self.vtxs(v).len()).collect();
        let max_vertex_degree = (0..self.num_vertices).map(|u| self.nets(u).len()).max().unwrap_or(0);
        let max_d2_degree_bound = (0..self.num_vertices)
            .map(|u| self.nets(u).iter().map(|&v| sizes[v as usize] - 1).sum::<usize>())
            .max()
            .unwrap_or(0);
        let (mean, std) = mean_std(&sizes);
        DegreeStats {
            max_net_size: sizes.iter().copied().max().unwrap_or(0),
            max_vertex_degree,
            max_d2_degree_bound,
            mean_net_size: mean,
            stddev_net_size: std,
        }
    }

    /// Reinterprets a square, structurally symmetric pattern as an undirected graph.
    /// Self-loops are dropped.
    pub fn to_unipartite(&self) -> Result<UnipartiteGraph, GraphError> {
        if self.num_nets != self.num_vertices {
            return Err(GraphError::NotSquare { rows: self.num_nets, cols: self.num_vertices });
        }
        // net i holds the columns of row i and nets(i) holds the rows of column i
        for i in 0..self.num_nets {
            for &j in self.vtxs(i) {
                if self.nets(i).binary_search(&j).is_err() {
                    return Err(GraphError::Asymmetric { row: i, col: j as usize });
                }
            }
            if self.vtxs(i).len() != self.nets(i).len() {
                let missing = self
                    .nets(i)
                    .iter()
                    .find(|&&r| !self.vtxs(i).contains(&r))
                    .copied()
                    .unwrap_or_default();
                return Err(GraphError::Asymmetric { row: missing as usize, col: i });
            }
        }
        let mut offsets = Vec::with_capacity(self.num_vertices + 1);
        offsets.push(0);
        let mut adjacency = Vec::with_capacity(self.net_members.len());
        for i in 0..self.num_nets {
            adjacency.extend(self.vtxs(i).iter().copied().filter(|&j| j as usize != i));
            offsets.push(adjacency.len());
        }
        Ok(UnipartiteGraph { num_vertices: self.num_vertices, offsets, adjacency })
    }
}

/// Symmetric adjacency CSR without self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipartiteGraph {
    num_vertices: usize,
    offsets: Vec<usize>,
    adjacency: Vec<Id>,
}

impl UnipartiteGraph {
    /// Builds from an undirected edge list. Self-loops and repeated edges are dropped.
    pub fn from_edges(num_vertices: usize, edges: &[(Id, Id)]) -> Result<Self, GraphError> {
        let mut lists: Vec<Vec<Id>> = vec![Vec::new(); num_vertices];
        for &(a, b) in edges {
            for x in [a, b] {
                if x as usize >= num_vertices {
                    return Err(GraphError::OutOfRange { id: x as usize, limit: num_vertices });
                }
            }
            if a != b {
                lists[a as usize].push(b);
                lists[b as usize].push(a);
            }
        }
        let mut stamp = vec![usize::MAX; num_vertices];
        let mut offsets = Vec::with_capacity(num_vertices + 1);
        offsets.push(0);
        let mut adjacency = Vec::new();
        for (v, list) in lists.iter().enumerate() {
            for &u in list {
                if stamp[u as usize] != v {
                    stamp[u as usize] = v;
                    adjacency.push(u);
                }
            }
            offsets.push(adjacency.len());
        }
        Ok(Self { num_vertices, offsets, adjacency })
    }

    /// Builds from adjacency lists, rejecting self-loops and asymmetric input.
    pub fn from_adjacency<L: AsRef<[Id]>>(lists: &[L]) -> Result<Self, GraphError> {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut adjacency = Vec::new();
        for (v, list) in lists.iter().enumerate() {
            for &u in list.as_ref() {
                if u as usize >= n {
                    return Err(GraphError::OutOfRange { id: u as usize, limit: n });
                }
                if u as usize == v {
                    return Err(GraphError::SelfLoop(v));
                }
            }
            adjacency.extend_from_slice(list.as_ref());
            offsets.push(adjacency.len());
        }
        let g = Self { num_vertices: n, offsets, adjacency };
        g.validate()?;
        Ok(g)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Number of undirected edges.
    pub fn num_edges(&self) -> usize {
        self.adjacency.len() / 2
    }

    #[inline]
    pub fn nbor(&self, v: usize) -> &[Id] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        check_offsets("adjacency", &self.offsets, self.num_vertices, self.adjacency.len())?;
        let mut stamp = vec![usize::MAX; self.num_vertices];
        for v in 0..self.num_vertices {
            for &u in self.nbor(v) {
                let ui = u as usize;
                if ui >= self.num_vertices {
                    return Err(GraphError::OutOfRange { id: ui, limit: self.num_vertices });
                }
                if ui == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if stamp[ui] == v {
                    return Err(GraphError::Invariant(format!("neighbor {u} repeated at vertex {v}")));
                }
                stamp[ui] = v;
                if !self.nbor(ui).contains(&(v as Id)) {
                    return Err(GraphError::Asymmetric { row: v, col: ui });
                }
            }
        }
        Ok(())
    }

    /// Degree statistics; the adjacency list of each vertex plays the role of a net.
    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.num_vertices).map(|v| self.degree(v)).collect();
        let max_d2_degree_bound = (0..self.num_vertices)
            .map(|v| degrees[v] + self.nbor(v).iter().map(|&u| degrees[u as usize] - 1).sum::<usize>())
            .max()
            .unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let (mean, std) = mean_std(&degrees);
        DegreeStats {
            max_net_size: max_degree,
            max_vertex_degree: max_degree,
            max_d2_degree_bound,
            mean_net_size: mean,
            stddev_net_size: std,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeStats {
    pub max_net_size: usize,
    pub max_vertex_degree: usize,
    /// Largest per-vertex sum of `|vtxs(v)| - 1` over incident nets; an upper
    /// bound on the number of distinct distance-2 neighbors.
    pub max_d2_degree_bound: usize,
    pub mean_net_size: f64,
    pub stddev_net_size: f64,
}

/// Neighborhood traversal shared by the vertex-based kernels.
///
/// Visits every vertex at distance two (BGPC: through a common net; D2GC:
/// distance one or two) except `w` itself. A vertex may be visited more than
/// once.
pub trait Distance2 {
    fn num_color_vertices(&self) -> usize;

    fn for_each_d2<F: FnMut(Id)>(&self, w: usize, f: F);

    /// Stops at the first `u` for which `pred` holds.
    fn any_d2<F: FnMut(Id) -> bool>(&self, w: usize, pred: F) -> bool;
}

impl Distance2 for BipartiteGraph {
    fn num_color_vertices(&self) -> usize {
        self.num_vertices
    }

    #[inline]
    fn for_each_d2<F: FnMut(Id)>(&self, w: usize, mut f: F) {
        for &v in self.nets(w) {
            for &u in self.vtxs(v as usize) {
                if u as usize != w {
                    f(u);
                }
            }
        }
    }

    #[inline]
    fn any_d2<F: FnMut(Id) -> bool>(&self, w: usize, mut pred: F) -> bool {
        for &v in self.nets(w) {
            for &u in self.vtxs(v as usize) {
                if u as usize != w && pred(u) {
                    return true;
                }
            }
        }
        false
    }
}

impl Distance2 for UnipartiteGraph {
    fn num_color_vertices(&self) -> usize {
        self.num_vertices
    }

    #[inline]
    fn for_each_d2<F: FnMut(Id)>(&self, w: usize, mut f: F) {
        for &u in self.nbor(w) {
            f(u);
            for &x in self.nbor(u as usize) {
                if x as usize != w {
                    f(x);
                }
            }
        }
    }

    #[inline]
    fn any_d2<F: FnMut(Id) -> bool>(&self, w: usize, mut pred: F) -> bool {
        for &u in self.nbor(w) {
            if pred(u) {
                return true;
            }
            for &x in self.nbor(u as usize) {
                if x as usize != w && pred(x) {
                    return true;
                }
            }
        }
        false
    }
}

fn check_offsets(what: &str, offsets: &[usize], n: usize, len: usize) -> Result<(), GraphError> {
    if offsets.len() != n + 1 || offsets[0] != 0 || offsets[n] != len {
        return Err(GraphError::Invariant(format!("{what} offsets malformed")));
    }
    if offsets.windows(2).any(|w| w[0] > w[1]) {
        return Err(GraphError::Invariant(format!("{what} offsets not monotone")));
    }
    Ok(())
}

fn mean_std(values: &[usize]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<usize>() as f64 / n;
    let var = values.iter().map(|&x| (x as f64 - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}
