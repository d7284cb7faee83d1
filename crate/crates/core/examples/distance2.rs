//! Distance-2 coloring of an undirected graph, including one built from a
//! symmetric sparse pattern.

use optcolor::prelude::*;

const TRIDIAGONAL: &str = "%%MatrixMarket matrix coordinate pattern symmetric
6 6 11
1 1
2 1
2 2
3 2
3 3
4 3
4 4
5 4
5 5
6 5
6 6
";

fn main() {
    // A tridiagonal pattern is a path; distance-2 coloring needs 3 colors.
    let mm = load_matrix_market(TRIDIAGONAL.as_bytes()).unwrap();
    let path = mm.graph.to_unipartite().expect("structurally symmetric");
    let (c, s) = run_d2gc(&path, &natural_order(path.num_vertices()), &Preset::N1N2.schedule(), 1).unwrap();
    println!("path of 6: colors {:?} ({} distinct)", c.snapshot(), s.num_colors);

    let g = generate_random_unipartite(30_000, 6, 9).unwrap();
    let max_degree = (0..g.num_vertices()).map(|v| g.degree(v)).max().unwrap_or(0);
    for preset in [Preset::VV, Preset::VN2, Preset::N1N2] {
        let (c, s) = run_d2gc(&g, &natural_order(g.num_vertices()), &preset.schedule(), 4).unwrap();
        verify_d2gc(&g, &c.snapshot(), false).expect("valid");
        println!("{preset}: {} colors (at least {}), {:.2} ms", s.num_colors, max_degree + 1, s.total_ms);
    }

    // Asymmetric patterns are rejected with the first unmatched entry.
    let asym = load_matrix_market("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 2\n".as_bytes()).unwrap();
    println!("asymmetric input: {}", asym.graph.to_unipartite().unwrap_err());
}
