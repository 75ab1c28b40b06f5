//! Sampling `G(N, p)` reproducibly, and the monotone coupling across `p`.
//!
//! ```bash
//! cargo run --example sample_graph
//! ```

use ramsey_goodness::graph::{format_graph, sample_gnp, sample_gnp_coupled};
use ramsey_goodness::Seed;

fn main() {
    let seed = Seed::new(42, 0);
    let g = sample_gnp(12, 0.3, seed);
    println!("G(12, 0.3) with seed {seed}:");
    print!("{}", format_graph(&g));

    // same seed, same graph
    assert_eq!(g, sample_gnp(12, 0.3, seed));

    // coupled graphs are nested: every edge at a lower p survives at higher p
    let ps = [0.1, 0.2, 0.4, 0.8];
    let graphs = sample_gnp_coupled(40, &ps, seed);
    for (p, g) in ps.iter().zip(&graphs) {
        println!("p = {p:<4} edges = {}", g.num_edges());
    }
    for w in graphs.windows(2) {
        assert!(w[0].edges().all(|(u, v)| w[1].has_edge(u, v)));
    }
    println!("coupled graphs are nested");
}
