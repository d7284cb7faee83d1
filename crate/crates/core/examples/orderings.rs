//! Natural, random, and smallest-last orders under sequential greedy coloring.

use optcolor::prelude::*;

fn colors(g: &UnipartiteGraph, order: &VertexOrder) -> usize {
    run_d2gc(g, order, &Preset::VV.schedule(), 1).unwrap().1.num_colors
}

fn main() {
    let g = generate_random_unipartite(20_000, 5, 2).unwrap();
    let n = g.num_vertices();
    println!("natural:       {}", colors(&g, &natural_order(n)));
    println!("random:        {}", colors(&g, &random_order(n, 7)));
    println!("smallest-last: {}", colors(&g, &smallest_last_order(&g)));

    // Orders are plain permutations; any valid one can be supplied.
    let reversed = VertexOrder::from_perm((0..n as u32).rev().collect()).unwrap();
    println!("reversed:      {}", colors(&g, &reversed));
}
