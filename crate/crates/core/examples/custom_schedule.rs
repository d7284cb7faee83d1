//! Build a schedule by hand instead of using a preset.

use optcolor::engine::{Chunking, ColoringStrategy, QueueMode, StrategySchedule};
use optcolor::prelude::*;

fn main() {
    let g = generate_random_bipartite(30_000, 15_000, 8, 4).unwrap();
    let order = random_order(g.num_vertices(), 99);

    // Net coloring for three iterations, net removal for four, then vertex/vertex.
    let schedule = StrategySchedule {
        name: "N3-N4".into(),
        net_coloring: ColoringStrategy::Net,
        net_coloring_iters: 3,
        net_removal_iters: 4,
        balance: BalanceMode::B1,
        chunking: Chunking::Fixed(256),
        queue: QueueMode::LocalBuffers,
        max_iterations: 20,
    };
    let (c, stats) = run_bgpc(&g, &order, &schedule, 3).unwrap();
    verify_bgpc(&g, &c.snapshot(), false).unwrap();
    for it in &stats.iterations {
        println!(
            "iter {:>2}: {:?}/{:?} |W| {} -> {}",
            it.iteration, it.coloring, it.removal, it.work_before, it.work_after
        );
    }
    println!("{} colors; stats as JSON:\n{}", stats.num_colors, stats.to_json().lines().take(6).collect::<Vec<_>>().join("\n"));

    // Tweaking a preset is usually enough.
    let tuned = Preset::VN2.schedule().with_chunk(1024).with_max_iterations(50);
    let (_, s) = run_bgpc(&g, &order, &tuned, 3).unwrap();
    println!("V-N2 with chunk 1024: {} colors", s.num_colors);
}
