//! Run all eight presets on one graph and print colors, iterations, and time.

use optcolor::prelude::*;

fn main() {
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).max(2);
    let g = generate_random_bipartite(50_000, 25_000, 8, 3).unwrap();
    let order = natural_order(g.num_vertices());

    println!("{:<8} {:>7} {:>6} {:>10}  per-iteration |W|", "preset", "colors", "iters", "ms");
    for preset in Preset::ALL {
        let (c, s) = run_bgpc(&g, &order, &preset.schedule(), threads).unwrap();
        assert!(verify_bgpc(&g, &c.snapshot(), false).is_ok());
        let work: Vec<usize> = s.iterations.iter().map(|i| i.work_before).collect();
        println!("{:<8} {:>7} {:>6} {:>10.2}  {:?}", preset, s.num_colors, s.iterations.len(), s.total_ms, work);
    }
}
