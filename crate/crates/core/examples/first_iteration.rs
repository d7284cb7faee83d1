//! How much work the first net-based coloring pass leaves behind: plain
//! net-level first-fit versus reverse first-fit with a forbidden pre-pass.

use optcolor::engine::{
    bgpc_color_net, bgpc_color_net_v1, bgpc_remove_conflicts_net, Coloring, ColoringStrategy, StrategySchedule,
    Workers,
};
use optcolor::prelude::*;

fn main() {
    let g = generate_random_bipartite(25_000, 12_500, 8, 11).unwrap();
    let cap = g.degree_stats().max_d2_degree_bound + 2;

    // Kernel level: one coloring pass followed by net-based removal.
    for (name, reverse) in [("first-fit", false), ("reverse", true)] {
        let c = Coloring::uncolored(g.num_vertices());
        let mut w = Workers::new(4, cap);
        if reverse {
            bgpc_color_net(&g, &c, BalanceMode::None, 64, &mut w);
        } else {
            bgpc_color_net_v1(&g, &c, 64, &mut w);
        }
        let left = bgpc_remove_conflicts_net(&g, &c, 64, &mut w);
        println!("{name:>9}: {} of {} vertices uncolored after one pass", left.len(), g.num_vertices());
    }

    // The same comparison through the driver.
    let order = natural_order(g.num_vertices());
    let v1 = StrategySchedule { net_coloring: ColoringStrategy::NetFirstFit, ..Preset::N1N2.schedule() };
    for (name, s) in [("first-fit", v1), ("reverse", Preset::N1N2.schedule())] {
        let (_, stats) = run_bgpc(&g, &order, &s, 4).unwrap();
        let it = &stats.iterations[0];
        println!("{name:>9}: |W| {} -> {}, final colors {}", it.work_before, it.work_after, stats.num_colors);
    }
}
