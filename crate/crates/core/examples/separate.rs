//! DFS separation: either a long path or two large sets with no edges
//! between them, iterated on the red graph of a colouring.
//!
//! ```bash
//! cargo run --example separate
//! ```

use ramsey_goodness::graph::sample_gnp;
use ramsey_goodness::separation::{decompose_blue_partite, dfs_separate, PartiteOutcome, SeparationOutcome};
use ramsey_goodness::{Colour, Seed, TwoColouring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let g = sample_gnp(40, 0.06, Seed::new(3, 0));
    match dfs_separate(&g, 10, 10, 20).unwrap() {
        SeparationOutcome::LongPath(p) => println!("path with {} edges: {p:?}", p.len() - 1),
        SeparationOutcome::Split { a, b } => {
            println!("A = {a:?}\nB = {b:?}");
            assert!(a.iter().all(|&u| b.iter().all(|&v| !g.has_edge(u, v))));
        }
    }

    // r = 2, n = 6, t = 2: 2*6 + 3*2 = 18 vertices
    let (r, n, t) = (2, 6, 2);
    let base = sample_gnp(r * n + (r + 1) * t, 0.5, Seed::new(3, 1));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let colouring = TwoColouring::from_fn(&base, |_, _| {
        if rng.random_bool(0.2) {
            Colour::Red
        } else {
            Colour::Blue
        }
    });
    match decompose_blue_partite(&colouring, r, n, t).unwrap() {
        PartiteOutcome::RedPath(p) => println!("red path: {p:?}"),
        PartiteOutcome::WeakPartite(w) => {
            assert!(w.verify(&colouring, t));
            println!("blue-separated sets: {:?}", w.sets);
        }
    }
}
