//! Brute-force reference implementations shared by the integration tests.
//! They use plain adjacency matrices and never call the library detectors.

#![allow(dead_code)]

use ramsey_goodness::{Colour, Graph, TwoColouring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Matrix = Vec<Vec<bool>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.num_vertices();
    (0..n)
        .map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect())
        .collect()
}

pub fn colour_matrix(c: &TwoColouring, colour: Colour) -> Matrix {
    let n = c.num_vertices();
    (0..n)
        .map(|u| (0..n).map(|v| u != v && c.colour(u, v) == Some(colour)).collect())
        .collect()
}

/// Independent G(N, p) draw for oracle-only tests.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_colouring(rng: &mut ChaCha8Rng, g: &Graph, red: f64) -> TwoColouring {
    TwoColouring::from_fn(g, |_, _| {
        if rng.random::<f64>() < red {
            Colour::Red
        } else {
            Colour::Blue
        }
    })
}

/// Some simple path with exactly `length` edges exists.
pub fn has_path(adj: &Matrix, length: usize) -> bool {
    fn go(adj: &Matrix, v: usize, left: usize, used: &mut [bool]) -> bool {
        if left == 0 {
            return true;
        }
        for w in 0..adj.len() {
            if adj[v][w] && !used[w] {
                used[w] = true;
                let ok = go(adj, w, left - 1, used);
                used[w] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let n = adj.len();
    if length >= n {
        return false;
    }
    let mut used = vec![false; n];
    (0..n).any(|s| {
        used[s] = true;
        let ok = go(adj, s, length, &mut used);
        used[s] = false;
        ok
    })
}

pub fn longest_path(adj: &Matrix) -> usize {
    (0..adj.len()).take_while(|&l| has_path(adj, l)).last().unwrap_or(0)
}

/// Some `k` vertices are pairwise adjacent.
pub fn has_clique(adj: &Matrix, k: usize) -> bool {
    fn go(adj: &Matrix, chosen: &mut Vec<usize>, from: usize, k: usize) -> bool {
        if chosen.len() == k {
            return true;
        }
        for v in from..adj.len() {
            if chosen.iter().all(|&u| adj[u][v]) {
                chosen.push(v);
                if go(adj, chosen, v + 1, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(adj, &mut Vec::new(), 0, k)
}

pub fn count_triangles(adj: &Matrix) -> usize {
    let n = adj.len();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                count += usize::from(adj[a][b] && adj[b][c] && adj[a][c]);
            }
        }
    }
    count
}

/// `vertices` is a simple path in `adj` with exactly `length` edges.
pub fn is_path_of(adj: &Matrix, vertices: &[usize], length: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    vertices.len() == length + 1
        && vertices
            .iter()
            .all(|&v| v < adj.len() && !std::mem::replace(&mut seen[v], true))
        && vertices.windows(2).all(|w| adj[w[0]][w[1]])
}

/// Every nonempty `X` with `|X| <= k` has at least `2|X|` neighbours outside.
pub fn expands(adj: &Matrix, k: usize) -> bool {
    let n = adj.len();
    (1u32..1 << n).all(|mask| {
        let size = mask.count_ones() as usize;
        if size > k {
            return true;
        }
        let outside = (0..n)
            .filter(|&w| mask >> w & 1 == 0 && (0..n).any(|x| mask >> x & 1 == 1 && adj[x][w]))
            .count();
        outside >= 2 * size
    })
}
