//! Long red cycles and the vertex classification built around them.
//!
//! ```bash
//! cargo run --example classify_cycles
//! ```

use ramsey_goodness::adversary::{
    classify_by_cycles, find_long_red_cycles, strategy_boundary, verify_structural_partition, AdversaryOutcome,
    ClassifierParams, VerificationMode,
};
use ramsey_goodness::graph::sample_gnp;
use ramsey_goodness::{Colour, Seed, TwoColouring};

fn main() {
    // a dense graph coloured red inside two halves and blue across
    let (r, n, p) = (2, 20, 0.5);
    let g = sample_gnp(r * n, p, Seed::new(9, 0));
    let colouring = TwoColouring::from_fn(&g, |u, v| if (u < n) == (v < n) { Colour::Red } else { Colour::Blue });

    let cycles = match find_long_red_cycles(&colouring, r, n / 2, 0) {
        Ok(c) => c,
        Err(e) => {
            println!("{e}");
            e.found
        }
    };
    for c in &cycles {
        println!("red cycle with {} edges", c.len());
    }

    let params = ClassifierParams {
        alpha: 0.25,
        ..ClassifierParams::new(p, n)
    };
    let cls = classify_by_cycles(&colouring, &cycles, params).unwrap();
    for (i, part) in cls.partition.parts.iter().enumerate() {
        println!("A_{i}: {} vertices", part.len());
    }
    println!("conflicts: {}", cls.conflicts.len());
    let violations = verify_structural_partition(&colouring, &cls.partition.parts, 32.0, p, n);
    println!("structural violations: {}", violations.len());
    for v in violations.iter().take(3) {
        println!("  {v}");
    }

    // partitions from the boundary construction pass by design
    let (r, n, t) = (2, 30, 3);
    let g = sample_gnp(r * n + t, 0.01, Seed::new(9, 1));
    let res = strategy_boundary(&g, r, n, t, VerificationMode::DEFAULT_EXACT).unwrap();
    if let AdversaryOutcome::Avoiding {
        colouring,
        partition: Some(parts),
        ..
    } = &res.outcome
    {
        let v = verify_structural_partition(colouring, parts, t as f64 * 0.01, 0.01, n);
        println!("boundary partition violations: {}", v.len());
    }
}
