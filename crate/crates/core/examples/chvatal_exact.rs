//! Exact arrow decisions on complete graphs: `K_N → (K_{r+1}, P_n)` holds
//! exactly when `N >= rn + 1`.
//!
//! ```bash
//! cargo run --release --example chvatal_exact
//! ```

use ramsey_goodness::arrow::{arrow_exact, arrow_portfolio, ArrowKind, PortfolioParams};
use ramsey_goodness::graph::format_colouring;
use ramsey_goodness::theory::chvatal_ramsey;
use ramsey_goodness::Graph;

fn main() {
    for (r, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let ramsey = chvatal_ramsey(r, n);
        for vertices in [ramsey - 1, ramsey] {
            let v = arrow_exact(&Graph::complete(vertices), r, n, u64::MAX);
            let verdict = match &v.kind {
                ArrowKind::Holds => "holds",
                ArrowKind::Fails(_) => "fails",
                ArrowKind::Unknown(_) => "unknown",
            };
            println!(
                "K_{vertices:<2} -> (K_{}, P_{n}): {verdict:<5} ({} nodes)",
                r + 1,
                v.nodes
            );
        }
    }

    let v = arrow_exact(&Graph::complete(4), 2, 2, u64::MAX);
    println!(
        "avoiding colouring of K_4:\n{}",
        format_colouring(v.certificate().unwrap())
    );

    // the portfolio can only ever exhibit colourings
    let v = arrow_portfolio(&Graph::complete(4), 2, 2, PortfolioParams::default());
    println!("portfolio on K_4: found by {:?}", v.strategy.map(|s| s.name()));
    let v = arrow_portfolio(&Graph::complete(5), 2, 2, PortfolioParams::default());
    println!("portfolio on K_5: {:?}", v.kind);
}
