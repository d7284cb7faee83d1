//! Compare color-class spread with and without the B1/B2 balancing policies.

use optcolor::prelude::*;

fn main() {
    let g = generate_random_bipartite(40_000, 20_000, 10, 5).unwrap();
    let order = natural_order(g.num_vertices());
    for preset in [Preset::VN2, Preset::N1N2] {
        for mode in BalanceMode::ALL {
            let schedule = attach_balancer(preset.schedule(), mode);
            let (c, s) = run_bgpc(&g, &order, &schedule, 4).unwrap();
            assert!(verify_bgpc(&g, &c.snapshot(), false).is_ok());
            let smallest = s.class_cardinalities.values().min().unwrap();
            let largest = s.class_cardinalities.values().max().unwrap();
            println!(
                "{preset:<6} {mode:<4} colors={:<3} stddev={:>8.2} class sizes {smallest}..{largest}  coloring {:.2} ms",
                s.num_colors,
                s.stddev_cardinality,
                s.coloring_ms()
            );
        }
    }
}
