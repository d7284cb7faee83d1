//! Color a random bipartite graph and check the result.

use optcolor::prelude::*;

fn main() {
    let g = generate_random_bipartite(20_000, 10_000, 8, 1).expect("valid parameters");
    let order = natural_order(g.num_vertices());
    let (coloring, stats) = run_bgpc(&g, &order, &Preset::N1N2.schedule(), 4).expect("run");

    verify_bgpc(&g, &coloring.snapshot(), false).expect("valid coloring");
    println!(
        "{} vertices, {} nets: {} colors in {} iterations ({:.2} ms)",
        g.num_vertices(),
        g.num_nets(),
        stats.num_colors,
        stats.iterations.len(),
        stats.total_ms
    );
    println!("lower bound (largest net): {}", g.degree_stats().max_net_size);
}
