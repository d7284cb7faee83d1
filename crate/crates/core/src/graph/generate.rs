use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BipartiteGraph, GraphError, Id, UnipartiteGraph};

/// Random bipartite graph where every net holds `avg_net_size` distinct
/// vertices drawn uniformly without replacement. Members are stored in
/// ascending id order, like a column-sorted sparse matrix.
pub fn generate_random_bipartite(
    num_vertices: usize,
    num_nets: usize,
    avg_net_size: usize,
    seed: u64,
) -> Result<BipartiteGraph, GraphError> {
    if num_vertices == 0 || num_nets == 0 || avg_net_size == 0 {
        return Err(GraphError::InvalidParameters("counts must be positive".into()));
    }
    if avg_net_size > num_vertices {
        return Err(GraphError::InvalidParameters(format!(
            "net size {avg_net_size} exceeds vertex count {num_vertices}"
        )));
    }
    if num_vertices > Id::MAX as usize {
        return Err(GraphError::InvalidParameters("too many vertices".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut net_offsets = Vec::with_capacity(num_nets + 1);
    net_offsets.push(0);
    let mut members = Vec::with_capacity(num_nets * avg_net_size);
    for _ in 0..num_nets {
        let start = members.len();
        members.extend(sample(&mut rng, num_vertices, avg_net_size).into_iter().map(|u| u as Id));
        members[start..].sort_unstable();
        net_offsets.push(members.len());
    }
    Ok(BipartiteGraph::from_net_csr(num_vertices, net_offsets, members))
}

/// Random undirected graph with about `num_vertices * avg_degree / 2` edges
/// drawn uniformly; self-loops and repeats are discarded.
pub fn generate_random_unipartite(num_vertices: usize, avg_degree: usize, seed: u64) -> Result<UnipartiteGraph, GraphError> {
    if num_vertices < 2 {
        return Err(GraphError::InvalidParameters("need at least two vertices".into()));
    }
    if avg_degree >= num_vertices {
        return Err(GraphError::InvalidParameters(format!(
            "average degree {avg_degree} too large for {num_vertices} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = num_vertices * avg_degree / 2;
    let edges: Vec<(Id, Id)> = (0..m)
        .map(|_| (rng.gen_range(0..num_vertices) as Id, rng.gen_range(0..num_vertices) as Id))
        .collect();
    UnipartiteGraph::from_edges(num_vertices, &edges)
}
