//! Thresholds and first-moment counts.
//!
//! ```bash
//! cargo run --example theory_table
//! ```

use ramsey_goodness::theory::{expected_clique_count, regime_thresholds, summary_table, t_thresholds};

fn main() {
    for (k, v) in summary_table(2, 64, 0.125) {
        println!("{k:<45} {v}");
    }

    println!("\n   n   p_general       p_klr");
    for n in [16, 64, 256, 1024, 4096] {
        let th = regime_thresholds(2, n);
        println!("{n:>4}  {:>10.5}  {:>10.5}", th.p_general, th.p_klr);
    }

    let t = t_thresholds(2, 400, 0.05);
    println!(
        "\nr = 2, n = 400, p = 0.05: x = {:.3}, t_general = {:?}",
        t.x, t.t_general
    );
    println!(
        "expected triangles in G(801, 0.05): {:.1}",
        expected_clique_count(801, 0.05, 2)
    );
}
