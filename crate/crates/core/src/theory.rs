//! Closed-form quantities for the clique-versus-path problem: Ramsey numbers,
//! first-moment counts and the threshold scales for `p` and `t`.
//!
//! Conventions: the target clique is `K_{r+1}`, `P_n` has `n` edges, and
//! logarithms are natural.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Experiment parameters with the scaled density `x = p * n^{2/(r+1)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeParams {
    pub r: usize,
    pub n: usize,
    pub p: f64,
    pub t: usize,
    pub vertices: usize,
}

impl RegimeParams {
    pub fn new(r: usize, n: usize, p: f64, t: usize) -> Self {
        assert!(r >= 2, "r must be at least 2");
        assert!(n >= 1, "path length must be positive");
        assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
        Self {
            r,
            n,
            p,
            t,
            vertices: r * n + t,
        }
    }

    pub fn x(&self) -> f64 {
        scaled_density(self.r, self.n, self.p)
    }
}

/// `p * n^{2/(r+1)}`.
pub fn scaled_density(r: usize, n: usize, p: f64) -> f64 {
    p * (n as f64).powf(2.0 / (r as f64 + 1.0))
}

/// Inverse of [`scaled_density`].
pub fn density_from_scaled(r: usize, n: usize, x: f64) -> f64 {
    x * (n as f64).powf(-2.0 / (r as f64 + 1.0))
}

/// `R(K_{r+1}, P_n) = r * n + 1`: Chvátal's formula with the tree `P_n` on
/// `n + 1` vertices.
pub fn chvatal_ramsey(r: usize, n: usize) -> usize {
    assert!(r >= 2 && n >= 1);
    r * n + 1
}

/// Lower bound `(chi - 1)(g_order - 1) + sigma` on `R(H, G)` for connected
/// `G` of order `g_order`, `chi = χ(H)` and `sigma` the smallest colour class.
pub fn goodness_lower_bound(chi: usize, g_order: usize, sigma: usize) -> usize {
    assert!(chi >= 2 && sigma >= 1 && g_order >= sigma);
    (chi - 1) * (g_order - 1) + sigma
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn binomial_f64(n: usize, k: usize) -> f64 {
    binomial(n, k).to_f64().unwrap_or(f64::INFINITY)
}

fn edges_in_clique(r: usize) -> i32 {
    ((r + 1) * r / 2) as i32
}

/// Expected number of `K_{r+1}` copies in `G(N, p)`:
/// `C(N, r+1) * p^{C(r+1, 2)}`.
pub fn expected_clique_count(vertices: usize, p: f64, r: usize) -> f64 {
    if p == 0.0 {
        return 0.0;
    }
    binomial_f64(vertices, r + 1) * p.powi(edges_in_clique(r))
}

/// `r * n * t * p`, an upper bound on the expected size of the outer
/// neighbourhood of a fixed `t`-set in `G(rn + t, p)`.
pub fn expected_boundary(r: usize, n: usize, t: usize, p: f64) -> f64 {
    (r * n * t) as f64 * p
}

/// Expected number of `K_{r+1}` copies with exactly one vertex in a fixed
/// `t`-set of `G(rn + t, p)`: `t * C(rn, r) * p^{C(r+1, 2)}`.
pub fn expected_pinned_cliques(r: usize, n: usize, t: usize, p: f64) -> f64 {
    if t == 0 || p == 0.0 {
        return 0.0;
    }
    t as f64 * binomial_f64(r * n, r) * p.powi(edges_in_clique(r))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeThresholds {
    /// `n^{-2/(r+1)}`, the density threshold at `N = (1+ε) r n`.
    pub p_general: f64,
    /// `n^{-2/(r+2)}`, the density above which `t = Θ(1/p)` suffices.
    pub p_klr: f64,
}

pub fn regime_thresholds(r: usize, n: usize) -> RegimeThresholds {
    let n = n as f64;
    let r = r as f64;
    RegimeThresholds {
        p_general: n.powf(-2.0 / (r + 1.0)),
        p_klr: n.powf(-2.0 / (r + 2.0)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TThresholds {
    pub x: f64,
    /// `p^{-(r+1)/2} log x`; `None` when `x <= 1`.
    pub t_general: Option<f64>,
    /// `1/p`.
    pub t_klr_scale: f64,
    /// `p^{-C(r+1,2)} n^{-(r-1)}`.
    pub t_zero_specific: f64,
}

pub fn t_thresholds(r: usize, n: usize, p: f64) -> TThresholds {
    assert!(p > 0.0 && p <= 1.0, "t thresholds need p in (0, 1]");
    let x = scaled_density(r, n, p);
    let t_general = (x > 1.0).then(|| p.powf(-(r as f64 + 1.0) / 2.0) * x.ln());
    TThresholds {
        x,
        t_general,
        t_klr_scale: 1.0 / p,
        t_zero_specific: p.powi(-edges_in_clique(r)) * (n as f64).powi(-(r as i32 - 1)),
    }
}

/// A labelled table of every quantity above, for the CLI.
pub fn summary_table(r: usize, n: usize, p: f64) -> Vec<(String, String)> {
    let th = regime_thresholds(r, n);
    let mut rows = vec![
        ("r".to_string(), r.to_string()),
        ("n".to_string(), n.to_string()),
        ("p".to_string(), p.to_string()),
        (
            "x = p*n^(2/(r+1))".to_string(),
            format!("{:.6}", scaled_density(r, n, p)),
        ),
        ("R(K_{r+1}, P_n)".to_string(), chvatal_ramsey(r, n).to_string()),
        ("p_general = n^(-2/(r+1))".to_string(), format!("{:.6e}", th.p_general)),
        ("p_klr = n^(-2/(r+2))".to_string(), format!("{:.6e}", th.p_klr)),
        (
            "E[K_{r+1} copies] in G(rn+1, p)".to_string(),
            format!("{:.6}", expected_clique_count(r * n + 1, p, r)),
        ),
    ];
    if p > 0.0 {
        let t = t_thresholds(r, n, p);
        rows.push((
            "t_general = p^(-(r+1)/2) ln x".to_string(),
            t.t_general
                .map_or_else(|| "n/a (x <= 1)".to_string(), |v| format!("{v:.6}")),
        ));
        rows.push(("t_klr_scale = 1/p".to_string(), format!("{:.6}", t.t_klr_scale)));
        rows.push((
            "t_zero_specific = p^(-C(r+1,2)) n^(-(r-1))".to_string(),
            format!("{:.6e}", t.t_zero_specific),
        ));
        let t1 = t.t_klr_scale.ceil() as usize;
        rows.push((
            "E|X| boundary at t = ceil(1/p)".to_string(),
            format!("{:.6}", expected_boundary(r, n, t1, p)),
        ));
        rows.push((
            "E[pinned copies] at t = ceil(1/p)".to_string(),
            format!("{:.6}", expected_pinned_cliques(r, n, t1, p)),
        ));
    }
    rows
}
