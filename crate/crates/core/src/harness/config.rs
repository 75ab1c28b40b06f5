//! Flat `key = value` experiment configuration.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::adversary::{LocalSearchParams, Strategy};
use crate::theory::{density_from_scaled, scaled_density, t_thresholds};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn invalid(msg: impl Into<String>) -> ConfigError {
    ConfigError::Invalid(msg.into())
}

/// How the vertex count of each point is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VertexRule {
    /// `N = rn + t`.
    Excess,
    /// `N = ceil((1 + eps) r n)`, so `t = N - rn` is fixed.
    Ratio { eps: f64 },
}

/// Unit of the `t` grid values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TUnit {
    /// `t` is the grid value itself.
    Absolute,
    /// `t = round(value / p)`.
    InverseP,
    /// `t = round(value * omega * p^{-(r+1)/2} ln x)`.
    General,
}

/// One step of the sweep runner: a tried adversary strategy or the exact
/// arrow search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Checker {
    Adversary(Strategy),
    Exact,
}

impl Checker {
    pub fn name(self) -> &'static str {
        match self {
            Checker::Adversary(s) => s.name(),
            Checker::Exact => "exact",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        if name == "exact" {
            return Some(Checker::Exact);
        }
        Strategy::from_name(name).map(Checker::Adversary)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub r: usize,
    pub n: usize,
    pub vertex_rule: VertexRule,
    /// Edge probabilities, after converting an `x` grid if one was given.
    pub p_grid: Vec<f64>,
    /// The original grid was over `x = p n^{2/(r+1)}`.
    pub p_from_x: bool,
    pub t_grid: Vec<f64>,
    pub t_unit: TUnit,
    pub trials: usize,
    pub master_seed: u64,
    pub strategies: Vec<Checker>,
    /// Exact verification (`true`) or rotation–extension only.
    pub verify_exact: bool,
    /// Node budget for exact path searches and the arrow search.
    pub budget: u64,
    /// In exact mode, run the arrow search on graphs with at most this many
    /// edges when no strategy succeeds.
    pub exact_fallback_edges: usize,
    /// Share per-pair uniforms across the p grid and carry avoiding
    /// colourings down to lower densities.
    pub coupled: bool,
    /// Record wall-clock times (makes output nondeterministic).
    pub timing: bool,
    pub alpha: f64,
    pub gamma: f64,
    pub c_const: f64,
    pub omega: f64,
    pub local_restarts: usize,
    pub local_steps: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            r: 2,
            n: 10,
            vertex_rule: VertexRule::Excess,
            p_grid: vec![0.1],
            p_from_x: false,
            t_grid: vec![1.0],
            t_unit: TUnit::Absolute,
            trials: 10,
            master_seed: 0,
            strategies: vec![
                Checker::Adversary(Strategy::HittingSet),
                Checker::Adversary(Strategy::BoundaryPartition),
                Checker::Adversary(Strategy::PinnedCliquePartition),
                Checker::Adversary(Strategy::LocalSearch),
            ],
            verify_exact: true,
            budget: 2_000_000,
            exact_fallback_edges: 40,
            coupled: false,
            timing: false,
            alpha: 1.0 / 16.0,
            gamma: 1.0 / 1024.0,
            c_const: 32.0,
            omega: 1.0,
            local_restarts: 4,
            local_steps: 1_000,
        }
    }
}

/// One grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub index: usize,
    pub p_index: usize,
    pub t_index: usize,
    pub p: f64,
    pub t: usize,
    pub vertices: usize,
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, ConfigError> {
    v.trim()
        .parse()
        .map_err(|_| invalid(format!("{key}: cannot parse {v:?}")))
}

fn parse_bool(key: &str, v: &str) -> Result<bool, ConfigError> {
    match v.trim() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(invalid(format!("{key}: expected true or false, got {v:?}"))),
    }
}

/// `start:stop:steps` (geometric or arithmetic) or a comma-separated list.
pub fn parse_grid(key: &str, v: &str, geometric: bool) -> Result<Vec<f64>, ConfigError> {
    let v = v.trim();
    if v.contains(':') {
        let parts: Vec<&str> = v.split(':').collect();
        if parts.len() != 3 {
            return Err(invalid(format!("{key}: grid must be start:stop:steps")));
        }
        let start: f64 = parse_num(key, parts[0])?;
        let stop: f64 = parse_num(key, parts[1])?;
        let steps: usize = parse_num(key, parts[2])?;
        if steps == 0 {
            return Err(invalid(format!("{key}: grid needs at least one step")));
        }
        if steps == 1 {
            return Ok(vec![start]);
        }
        let last = (steps - 1) as f64;
        if geometric {
            if start <= 0.0 || stop <= 0.0 {
                return Err(invalid(format!("{key}: geometric grid needs positive endpoints")));
            }
            let ratio = (stop / start).ln();
            Ok((0..steps)
                .map(|i| {
                    if i + 1 == steps {
                        stop
                    } else {
                        start * (ratio * i as f64 / last).exp()
                    }
                })
                .collect())
        } else {
            Ok((0..steps)
                .map(|i| {
                    if i + 1 == steps {
                        stop
                    } else {
                        start + (stop - start) * i as f64 / last
                    }
                })
                .collect())
        }
    } else {
        v.split(',').map(|s| parse_num(key, s)).collect()
    }
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = ExperimentConfig::default();
        let mut p_text = None;
        let mut x_text = None;
        let mut t_text = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |message: &str| ConfigError::Syntax {
                line: i + 1,
                message: message.to_string(),
            };
            let (key, value) = line.split_once('=').ok_or_else(|| syntax("expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            let wrap = |e: ConfigError| match e {
                ConfigError::Invalid(m) => syntax(&m),
                other => other,
            };
            match key {
                "r" => cfg.r = parse_num(key, value).map_err(wrap)?,
                "n" => cfg.n = parse_num(key, value).map_err(wrap)?,
                "p" | "p_grid" => p_text = Some(value.to_string()),
                "x" | "x_grid" => x_text = Some(value.to_string()),
                "t" | "t_grid" => t_text = Some(value.to_string()),
                "t_unit" => {
                    cfg.t_unit = match value {
                        "abs" | "absolute" => TUnit::Absolute,
                        "inv_p" => TUnit::InverseP,
                        "general" => TUnit::General,
                        _ => return Err(syntax("t_unit must be abs, inv_p or general")),
                    }
                }
                "vertex_rule" => {
                    cfg.vertex_rule = if value == "rn+t" {
                        VertexRule::Excess
                    } else if let Some(eps) = value.strip_prefix("eps:") {
                        VertexRule::Ratio {
                            eps: parse_num(key, eps).map_err(wrap)?,
                        }
                    } else {
                        return Err(syntax("vertex_rule must be rn+t or eps:<value>"));
                    }
                }
                "trials" => cfg.trials = parse_num(key, value).map_err(wrap)?,
                "master_seed" | "seed" => cfg.master_seed = parse_num(key, value).map_err(wrap)?,
                "strategies" => {
                    cfg.strategies = value
                        .split(',')
                        .map(|s| Checker::from_name(s.trim()).ok_or_else(|| syntax(&format!("unknown strategy {s:?}"))))
                        .collect::<Result<_, _>>()?
                }
                "verify" => {
                    cfg.verify_exact = match value {
                        "exact" => true,
                        "heuristic" => false,
                        _ => return Err(syntax("verify must be exact or heuristic")),
                    }
                }
                "budget" => cfg.budget = parse_num(key, value).map_err(wrap)?,
                "exact_fallback_edges" => cfg.exact_fallback_edges = parse_num(key, value).map_err(wrap)?,
                "coupled" => cfg.coupled = parse_bool(key, value).map_err(wrap)?,
                "timing" => cfg.timing = parse_bool(key, value).map_err(wrap)?,
                "alpha" => cfg.alpha = parse_num(key, value).map_err(wrap)?,
                "gamma" => cfg.gamma = parse_num(key, value).map_err(wrap)?,
                "c_const" => cfg.c_const = parse_num(key, value).map_err(wrap)?,
                "omega" => cfg.omega = parse_num(key, value).map_err(wrap)?,
                "local_restarts" => cfg.local_restarts = parse_num(key, value).map_err(wrap)?,
                "local_steps" => cfg.local_steps = parse_num(key, value).map_err(wrap)?,
                _ => return Err(syntax(&format!("unknown key {key:?}"))),
            }
        }
        match (p_text, x_text) {
            (Some(_), Some(_)) => return Err(invalid("give either a p grid or an x grid, not both")),
            (Some(p), None) => cfg.p_grid = parse_grid("p", &p, true)?,
            (None, Some(x)) => {
                cfg.p_grid = parse_grid("x", &x, true)?
                    .into_iter()
                    .map(|x| density_from_scaled(cfg.r, cfg.n, x))
                    .collect();
                cfg.p_from_x = true;
            }
            (None, None) => {}
        }
        if let Some(t) = t_text {
            if matches!(cfg.vertex_rule, VertexRule::Ratio { .. }) {
                return Err(invalid("a t grid cannot be combined with vertex_rule = eps:..."));
            }
            cfg.t_grid = parse_grid("t", &t, false)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn read(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Replaces the master seed with `RAMSEY_SEED` when that is set.
    pub fn apply_env(&mut self) -> Result<(), ConfigError> {
        if let Ok(v) = std::env::var("RAMSEY_SEED") {
            self.master_seed = parse_num("RAMSEY_SEED", &v)?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.r < 2 {
            return Err(invalid("r must be at least 2"));
        }
        if self.n < 1 {
            return Err(invalid("n must be at least 1"));
        }
        if self.trials < 1 {
            return Err(invalid("trials must be at least 1"));
        }
        if self.p_grid.is_empty() || self.t_grid.is_empty() {
            return Err(invalid("grids must be nonempty"));
        }
        if let Some(p) = self.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(invalid(format!("probability {p} outside [0, 1]")));
        }
        if let Some(t) = self.t_grid.iter().find(|t| **t < 0.0 || !t.is_finite()) {
            return Err(invalid(format!("t value {t} must be a nonnegative number")));
        }
        if self.strategies.is_empty() {
            return Err(invalid("strategy list is empty"));
        }
        if let VertexRule::Ratio { eps } = self.vertex_rule {
            if eps.is_nan() || eps < 0.0 {
                return Err(invalid("eps must be nonnegative"));
            }
        }
        if self.coupled && self.t_unit != TUnit::Absolute {
            return Err(invalid(
                "coupled sweeps need t_unit = abs so the vertex count is shared across p",
            ));
        }
        if self.t_unit != TUnit::Absolute && self.p_grid.contains(&0.0) {
            return Err(invalid("t in units of p needs p > 0"));
        }
        Ok(())
    }

    fn resolve_t(&self, value: f64, p: f64) -> usize {
        match self.vertex_rule {
            VertexRule::Ratio { eps } => {
                let rn = (self.r * self.n) as f64;
                ((1.0 + eps) * rn).ceil() as usize - self.r * self.n
            }
            VertexRule::Excess => match self.t_unit {
                TUnit::Absolute => value.round() as usize,
                TUnit::InverseP => (value / p).round() as usize,
                TUnit::General => {
                    let general = t_thresholds(self.r, self.n, p).t_general.unwrap_or(0.0);
                    (value * self.omega * general).round() as usize
                }
            },
        }
    }

    /// All grid points, `t` outer and `p` inner.
    pub fn points(&self) -> Vec<SweepPoint> {
        let t_values: &[f64] = match self.vertex_rule {
            VertexRule::Excess => &self.t_grid,
            VertexRule::Ratio { .. } => &[0.0],
        };
        let mut out = Vec::new();
        for (ti, &tv) in t_values.iter().enumerate() {
            for (pi, &p) in self.p_grid.iter().enumerate() {
                let t = self.resolve_t(tv, p);
                out.push(SweepPoint {
                    index: out.len(),
                    p_index: pi,
                    t_index: ti,
                    p,
                    t,
                    vertices: self.r * self.n + t,
                });
            }
        }
        out
    }

    pub fn local_params(&self, seed: u64) -> LocalSearchParams {
        LocalSearchParams {
            restarts: self.local_restarts,
            max_steps: self.local_steps,
            seed,
            ..LocalSearchParams::default()
        }
    }

    pub fn x_of(&self, p: f64) -> f64 {
        scaled_density(self.r, self.n, p)
    }

    /// Canonical text of every setting that affects trial results.
    pub fn canonical(&self) -> String {
        let mut s = String::new();
        let list = |v: &[f64]| v.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(",");
        let _ = writeln!(s, "r = {}", self.r);
        let _ = writeln!(s, "n = {}", self.n);
        let _ = writeln!(
            s,
            "vertex_rule = {}",
            match self.vertex_rule {
                VertexRule::Excess => "rn+t".to_string(),
                VertexRule::Ratio { eps } => format!("eps:{eps:?}"),
            }
        );
        let _ = writeln!(s, "p = {}", list(&self.p_grid));
        if self.vertex_rule == VertexRule::Excess {
            let _ = writeln!(s, "t = {}", list(&self.t_grid));
        }
        let _ = writeln!(
            s,
            "t_unit = {}",
            match self.t_unit {
                TUnit::Absolute => "abs",
                TUnit::InverseP => "inv_p",
                TUnit::General => "general",
            }
        );
        let _ = writeln!(s, "trials = {}", self.trials);
        let _ = writeln!(s, "master_seed = {}", self.master_seed);
        let names: Vec<&str> = self.strategies.iter().map(|c| c.name()).collect();
        let _ = writeln!(s, "strategies = {}", names.join(","));
        let _ = writeln!(s, "verify = {}", if self.verify_exact { "exact" } else { "heuristic" });
        let _ = writeln!(s, "budget = {}", self.budget);
        let _ = writeln!(s, "exact_fallback_edges = {}", self.exact_fallback_edges);
        let _ = writeln!(s, "coupled = {}", self.coupled);
        let _ = writeln!(s, "timing = {}", self.timing);
        let _ = writeln!(s, "alpha = {:?}", self.alpha);
        let _ = writeln!(s, "gamma = {:?}", self.gamma);
        let _ = writeln!(s, "c_const = {:?}", self.c_const);
        let _ = writeln!(s, "omega = {:?}", self.omega);
        let _ = writeln!(s, "local_restarts = {}", self.local_restarts);
        let _ = writeln!(s, "local_steps = {}", self.local_steps);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_config() {
        let cfg = ExperimentConfig::parse(
            "# example\nr = 2\nn = 30\np = 0.01:0.16:5\nt = 0:8:5\ntrials = 20\nmaster_seed = 7\n\
             strategies = hitting, boundary\nverify = heuristic\ncoupled = true\n",
        )
        .unwrap();
        assert_eq!(cfg.n, 30);
        assert_eq!(cfg.p_grid.len(), 5);
        assert!((cfg.p_grid[1] - 0.02).abs() < 1e-12);
        assert_eq!(cfg.p_grid[4], 0.16);
        assert_eq!(cfg.t_grid, vec![0.0, 2.0, 4.0, 6.0, 8.0]);
        assert!(!cfg.verify_exact && cfg.coupled);
        assert_eq!(cfg.points().len(), 25);
        assert_eq!(cfg.points()[6].t, 2);
        assert_eq!(cfg.points()[6].vertices, 62);
    }

    #[test]
    fn x_grid_converts_to_p() {
        let cfg = ExperimentConfig::parse("r = 2\nn = 64\nx = 1,2\n").unwrap();
        assert!(cfg.p_from_x);
        assert!((cfg.p_grid[1] - 0.125).abs() < 1e-12);
    }

    #[test]
    fn ratio_rule_fixes_t() {
        let cfg = ExperimentConfig::parse("r = 2\nn = 10\nvertex_rule = eps:0.25\np = 0.1\n").unwrap();
        let pts = cfg.points();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].vertices, 25);
        assert_eq!(pts[0].t, 5);
    }

    #[test]
    fn t_in_units_of_inverse_p() {
        let cfg = ExperimentConfig::parse("r = 2\nn = 10\np = 0.25\nt = 0.5,1\nt_unit = inv_p\n").unwrap();
        let ts: Vec<usize> = cfg.points().iter().map(|p| p.t).collect();
        assert_eq!(ts, vec![2, 4]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            ExperimentConfig::parse("r = 2\nbogus = 1\n"),
            Err(ConfigError::Syntax { line: 2, .. })
        ));
        assert!(ExperimentConfig::parse("p = 1.5\n").is_err());
        assert!(ExperimentConfig::parse("trials = 0\n").is_err());
        assert!(ExperimentConfig::parse("strategies = magic\n").is_err());
        assert!(ExperimentConfig::parse("p = 0.1\nx = 1\n").is_err());
        assert!(ExperimentConfig::parse("coupled = true\nt_unit = inv_p\n").is_err());
        assert!(ExperimentConfig::parse("r = 2 3\n").is_err());
    }

    #[test]
    fn canonical_round_trips() {
        let cfg = ExperimentConfig::parse("r = 3\nn = 7\np = 0.1:0.4:3\nt = 1,5\nstrategies = local,exact\n").unwrap();
        let again = ExperimentConfig::parse(&cfg.canonical()).unwrap();
        assert_eq!(cfg.canonical(), again.canonical());
    }
}
