//! Clique and long-path detection with checkable certificates, plus the
//! expansion check behind rotation–extension.
//!
//! ```bash
//! cargo run --example detect_witnesses
//! ```

use ramsey_goodness::detectors::{
    count_cliques, find_clique, find_path_exact, find_path_posa, posa_guarantee_check, ExpansionOutcome,
};
use ramsey_goodness::graph::sample_gnp;
use ramsey_goodness::{Graph, SearchOutcome, Seed};

fn describe(name: &str, outcome: &SearchOutcome) {
    match outcome {
        SearchOutcome::Found(w) => println!("{name}: {w}"),
        SearchOutcome::ExhaustivelyRefuted => println!("{name}: none (exhaustive)"),
        SearchOutcome::HeuristicallyNotFound => println!("{name}: not found (heuristic)"),
    }
}

fn main() {
    let g = sample_gnp(30, 0.25, Seed::new(7, 1));
    println!(
        "G(30, 0.25): {} edges, {} triangles",
        g.num_edges(),
        count_cliques(&g, 3)
    );

    describe("K_4", &find_clique(&g, 4).outcome);
    describe("K_6", &find_clique(&g, 6).outcome);

    let exact = find_path_exact(&g, 20, 1_000_000);
    describe("exact path, 20 edges", &exact.outcome);
    if let Some(w) = exact.witness() {
        assert!(w.verify(&g));
    }
    describe("rotation–extension path, 29 edges", &find_path_posa(&g, 29, 3).outcome);

    // the Petersen graph: small sets expand, so a long path is promised
    let petersen = Graph::from_edges(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (6, 9),
            (6, 8),
            (5, 8),
        ],
    )
    .unwrap();
    for k in 1..=3 {
        let rep = posa_guarantee_check(&petersen, k, u64::MAX).unwrap();
        let expands = match &rep.expansion.outcome {
            ExpansionOutcome::ExpanderUpTo(_) => "expands".to_string(),
            ExpansionOutcome::ViolatingSet(x) => format!("violated by {x:?}"),
            ExpansionOutcome::NoViolationFound => "undetermined".to_string(),
        };
        println!("Petersen, k = {k}: {expands}; status {:?}", rep.status);
    }
}
