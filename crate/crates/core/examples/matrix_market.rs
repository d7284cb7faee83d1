//! Load a Matrix Market file (path from argv, or the bundled sample), color
//! its columns, and write the coloring next to it.
//!
//! ```text
//! cargo run --example matrix_market -- path/to/matrix.mtx
//! ```

use std::path::PathBuf;

use optcolor::prelude::*;

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data/small.mtx"));
    let mm = match read_matrix_market_file(&path) {
        Ok(mm) => mm,
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            std::process::exit(1);
        }
    };
    let meta = &mm.meta;
    println!(
        "{}: {}x{} {} {}, {} stored entries ({} duplicates collapsed)",
        path.display(),
        meta.rows,
        meta.cols,
        meta.field,
        meta.symmetry,
        meta.stored_entries,
        meta.duplicates_collapsed
    );

    let g = &mm.graph;
    let (coloring, stats) = run_bgpc(g, &natural_order(g.num_vertices()), &Preset::VN2.schedule(), 2).expect("run");
    verify_bgpc(g, &coloring.snapshot(), false).expect("valid coloring");
    println!("{} colors; classes {:?}", stats.num_colors, stats.class_cardinalities);

    let out = std::env::temp_dir().join("optcolor-matrix-market.col");
    let text: String = coloring.snapshot().iter().map(|c| format!("{c}\n")).collect();
    std::fs::write(&out, text).expect("write coloring");
    println!("coloring written to {}", out.display());
}
