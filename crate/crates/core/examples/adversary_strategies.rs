//! The explicit colourings avoiding a red `P_n` and a blue `K_{r+1}`.
//!
//! ```bash
//! cargo run --example adversary_strategies
//! ```

use ramsey_goodness::adversary::{
    boundary_set, pinned_clique_copies, strategy_boundary, strategy_hitting_set, strategy_local_search,
    strategy_pinned_cliques, AdversaryResult, LocalSearchParams, VerificationMode,
};
use ramsey_goodness::detectors::count_cliques;
use ramsey_goodness::graph::sample_gnp;
use ramsey_goodness::theory::{expected_boundary, expected_pinned_cliques};
use ramsey_goodness::Seed;

fn show(res: &AdversaryResult) {
    let status = if res.is_certified() {
        "certified avoiding"
    } else if res.is_avoiding() {
        "avoiding (uncertified)"
    } else {
        "failed"
    };
    println!("  {:<8} {status:<22} {}", res.strategy.name(), res.summary());
}

fn main() {
    let mode = VerificationMode::DEFAULT_EXACT;

    // sparse graph: few triangles, so one red edge per triangle suffices
    let g = sample_gnp(60, 0.05, Seed::new(1, 0));
    println!("G(60, 0.05): {} triangles", count_cliques(&g, 3));
    show(&strategy_hitting_set(&g, 2, 20, mode));

    // boundary: the first t vertices have few neighbours
    let (r, n, t, p) = (2, 30, 3, 0.01);
    let g = sample_gnp(r * n + t, p, Seed::new(1, 1));
    println!(
        "G({}, {p}): |X| = {} (mean at most {})",
        r * n + t,
        boundary_set(&g, t).len(),
        expected_boundary(r, n, t, p)
    );
    show(&strategy_boundary(&g, r, n, t, mode).unwrap());

    // pinned cliques: triangles with exactly one vertex among the first t
    let (r, n, t, p) = (2, 12, 2, 0.25);
    let g = sample_gnp(r * n + t, p, Seed::new(1, 2));
    println!(
        "G({}, {p}): {} pinned triangles (mean {})",
        r * n + t,
        pinned_clique_copies(&g, r, t).len(),
        expected_pinned_cliques(r, n, t, p)
    );
    show(&strategy_pinned_cliques(&g, r, n, t, mode).unwrap());

    let g = sample_gnp(14, 0.5, Seed::new(1, 3));
    println!("G(14, 0.5), r = 2, n = 5:");
    show(&strategy_local_search(&g, 2, 5, LocalSearchParams::default(), mode));
}
