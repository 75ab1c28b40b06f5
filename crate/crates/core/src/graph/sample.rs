use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::Graph;
use crate::bitset::VertexSet;

/// Identifies one reproducible random stream.
///
/// The sampler draws the uniform for pair index `i` from word `2i` of the
/// ChaCha8 stream `(master, stream)`, so any pair's variate can be recomputed
/// independently of generation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Seed {
    pub master: u64,
    pub stream: u64,
}

impl Seed {
    pub const fn new(master: u64, stream: u64) -> Self {
        Self { master, stream }
    }

    fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.stream);
        rng
    }

    /// An RNG for auxiliary randomness (restarts, shuffles) that does not
    /// overlap the per-pair graph stream.
    pub fn aux_rng(self, salt: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master ^ 0x9e37_79b9_7f4a_7c15_u64.wrapping_mul(salt + 1));
        rng.set_stream(self.stream);
        rng
    }
}

impl std::fmt::Display for Seed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.master, self.stream)
    }
}

impl std::str::FromStr for Seed {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (m, st) = s
            .split_once(':')
            .ok_or_else(|| format!("seed {s:?} is not MASTER:STREAM"))?;
        Ok(Seed {
            master: m.parse().map_err(|e| format!("seed master {m:?}: {e}"))?,
            stream: st.parse().map_err(|e| format!("seed stream {st:?}: {e}"))?,
        })
    }
}

/// Index of the pair `{u, v}` (`u < v`) in row-major upper-triangle order.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> u64 {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    debug_assert!(v < n);
    let (n, u, v) = (n as u64, u as u64, v as u64);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

#[inline]
fn to_unit(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// The uniform variate in `[0, 1)` attached to pair `{u, v}`.
pub fn pair_uniform(n: usize, seed: Seed, u: usize, v: usize) -> f64 {
    let mut rng = seed.rng();
    rng.set_word_pos(2 * pair_index(n, u, v) as u128);
    to_unit(rng.next_u64())
}

fn row_uniforms(n: usize, seed: Seed, u: usize, mut f: impl FnMut(usize, f64)) {
    if u + 1 >= n {
        return;
    }
    let mut rng = seed.rng();
    rng.set_word_pos(2 * pair_index(n, u, u + 1) as u128);
    for v in u + 1..n {
        f(v, to_unit(rng.next_u64()));
    }
}

/// Samples `G(n, p)`: pair `{u, v}` is an edge iff its uniform is `< p`.
///
/// Deterministic in `(n, p, seed)`, and monotone in `p` for a fixed seed.
pub fn sample_gnp(n: usize, p: f64, seed: Seed) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let upper: Vec<VertexSet> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut row = VertexSet::new(n);
            row_uniforms(n, seed, u, |v, x| {
                if x < p {
                    row.insert(v);
                }
            });
            row
        })
        .collect();
    graph_from_upper(n, upper)
}

fn graph_from_upper(n: usize, upper: Vec<VertexSet>) -> Graph {
    let mut g = Graph::empty(n);
    for (u, row) in upper.iter().enumerate() {
        for v in row.iter() {
            g.add_edge(u, v).expect("sampled pairs are valid");
        }
    }
    g
}

/// Materialised per-pair uniforms for one seed, for coupled sampling at
/// several edge probabilities. Memory is `8 * C(n, 2)` bytes.
#[derive(Debug, Clone)]
pub struct PairUniforms {
    n: usize,
    values: Vec<f64>,
}

impl PairUniforms {
    pub fn new(n: usize, seed: Seed) -> Self {
        let mut values = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            row_uniforms(n, seed, u, |_, x| values.push(x));
        }
        Self { n, values }
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.values[pair_index(self.n, u, v) as usize]
    }

    /// The coupled sample at edge probability `p`; equal to
    /// `sample_gnp(n, p, seed)`.
    pub fn graph_at(&self, p: f64) -> Graph {
        assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
        let mut g = Graph::empty(self.n);
        let mut i = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.values[i] < p {
                    g.add_edge(u, v).expect("pairs are valid");
                }
                i += 1;
            }
        }
        g
    }
}

/// Samples the coupled family `G(n, p_1) ⊆ G(n, p_2) ⊆ ...` for sorted or
/// unsorted `ps`, all from one seed.
pub fn sample_gnp_coupled(n: usize, ps: &[f64], seed: Seed) -> Vec<Graph> {
    let u = PairUniforms::new(n, seed);
    ps.iter().map(|&p| u.graph_at(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_probabilities() {
        let s = Seed::new(7, 3);
        assert_eq!(sample_gnp(5, 0.0, s).num_edges(), 0);
        assert_eq!(sample_gnp(5, 1.0, s), Graph::complete(5));
    }

    #[test]
    fn pair_index_is_dense() {
        let n = 7;
        let mut idx = vec![];
        for u in 0..n {
            for v in u + 1..n {
                idx.push(pair_index(n, u, v));
            }
        }
        assert_eq!(idx, (0..21).collect::<Vec<u64>>());
    }

    #[test]
    fn single_pair_uniform_matches_sampler() {
        let s = Seed::new(11, 2);
        let g = sample_gnp(30, 0.4, s);
        for u in 0..30 {
            for v in u + 1..30 {
                assert_eq!(g.has_edge(u, v), pair_uniform(30, s, u, v) < 0.4);
            }
        }
    }

    #[test]
    fn coupled_matches_direct() {
        let s = Seed::new(3, 9);
        let gs = sample_gnp_coupled(25, &[0.1, 0.5], s);
        assert_eq!(gs[0], sample_gnp(25, 0.1, s));
        assert_eq!(gs[1], sample_gnp(25, 0.5, s));
    }

    #[test]
    fn seed_text_round_trip() {
        let s = Seed::new(u64::MAX, 42);
        assert_eq!(s.to_string().parse::<Seed>().unwrap(), s);
    }
}
