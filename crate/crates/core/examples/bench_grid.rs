//! A small benchmark grid through the library API, printed as CSV.

use optcolor::cli::{run_bench, BenchConfig, GenSpec, GraphSource, OrderKind};
use optcolor::prelude::*;

fn main() {
    let config = BenchConfig {
        graphs: vec![
            GraphSource::Generated(GenSpec { vertices: 20_000, nets: 10_000, degree: 8, seed: 1 }),
            GraphSource::Generated(GenSpec { vertices: 40_000, nets: 20_000, degree: 6, seed: 2 }),
        ],
        problem: Problem::Bgpc,
        presets: vec![Preset::VV, Preset::VN2, Preset::N1N2],
        balances: vec![BalanceMode::None, BalanceMode::B2],
        orders: vec![OrderKind::Natural],
        threads: vec![1, 2],
        trials: 3,
        chunk: None,
        max_iterations: None,
        seed: 0,
    };
    let report = run_bench(&config).expect("bench");
    if let Some((cell, v)) = &report.first_violation {
        eprintln!("invalid coloring in {cell}: {v}");
        std::process::exit(2);
    }
    report.write_rows(std::io::stdout()).unwrap();
    println!();
    report.write_summary(std::io::stdout()).unwrap();
}
