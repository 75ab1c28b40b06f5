//! Success fractions with Wilson score intervals.

use std::collections::BTreeMap;

use super::record::TrialRecord;
use crate::theory::scaled_density;

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959_963_984_540_054;

/// Wilson score interval for `successes` out of `trials` at quantile `z`.
pub fn wilson_interval(successes: usize, trials: usize, z: f64) -> (f64, f64) {
    assert!(trials > 0 && successes <= trials);
    let n = trials as f64;
    let f = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (f + z2 / (2.0 * n)) / denom;
    let half = z * (f * (1.0 - f) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // clamp away rounding so that lo <= f <= hi always holds
    ((centre - half).max(0.0).min(f), (centre + half).min(1.0).max(f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    P,
    T,
    X,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::P => "p",
            Axis::T => "t",
            Axis::X => "x",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "p" => Some(Axis::P),
            "t" => Some(Axis::T),
            "x" => Some(Axis::X),
            _ => None,
        }
    }

    pub fn value(self, rec: &TrialRecord) -> f64 {
        match self {
            Axis::P => rec.p,
            Axis::T => rec.t as f64,
            Axis::X => scaled_density(rec.r, rec.n, rec.p),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub value: f64,
    pub successes: usize,
    pub trials: usize,
    pub fraction: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCurve {
    pub axis: Axis,
    pub points: Vec<CurvePoint>,
}

impl SweepCurve {
    /// Groups records by axis value (ascending) and counts trials in which an
    /// avoiding colouring was found.
    pub fn from_records(records: &[TrialRecord], axis: Axis) -> Self {
        let mut groups: BTreeMap<u64, (f64, usize, usize)> = BTreeMap::new();
        for rec in records {
            let v = axis.value(rec);
            // total order on nonnegative floats via their bits
            let e = groups.entry(v.to_bits()).or_insert((v, 0, 0));
            e.1 += usize::from(rec.outcome.is_success());
            e.2 += 1;
        }
        let points = groups
            .into_values()
            .map(|(value, successes, trials)| {
                let (ci_low, ci_high) = wilson_interval(successes, trials, Z95);
                CurvePoint {
                    value,
                    successes,
                    trials,
                    fraction: successes as f64 / trials as f64,
                    ci_low,
                    ci_high,
                }
            })
            .collect();
        SweepCurve { axis, points }
    }

    /// `value,successes,trials,fraction,ci_low,ci_high` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut s = format!("{},successes,trials,fraction,ci_low,ci_high\n", self.axis.name());
        for p in &self.points {
            s.push_str(&format!(
                "{},{},{},{},{},{}\n",
                p.value, p.successes, p.trials, p.fraction, p.ci_low, p.ci_high
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Seed;
    use crate::harness::record::Outcome;

    #[test]
    fn wilson_contains_fraction() {
        for n in [1, 2, 5, 10, 100, 1000] {
            for k in 0..=n {
                let (lo, hi) = wilson_interval(k, n, Z95);
                let f = k as f64 / n as f64;
                assert!(0.0 <= lo && lo <= f && f <= hi && hi <= 1.0, "{k}/{n}");
                assert!(hi - lo > 0.0);
            }
        }
    }

    #[test]
    fn wilson_known_value() {
        // 0 of 10 at 95%: upper limit z^2 / (n + z^2)
        let (lo, hi) = wilson_interval(0, 10, Z95);
        assert_eq!(lo, 0.0);
        assert!((hi - Z95 * Z95 / (10.0 + Z95 * Z95)).abs() < 1e-12);
        let (lo, hi) = wilson_interval(5, 10, Z95);
        assert!((lo - 0.236_593).abs() < 1e-5 && (hi - 0.763_407).abs() < 1e-5);
    }

    #[test]
    fn curve_groups_by_axis() {
        let rec = |p: f64, t: usize, outcome| TrialRecord {
            point_index: 0,
            trial_index: 0,
            r: 2,
            n: 4,
            vertices: 8 + t,
            p,
            t,
            seed: Seed { master: 0, stream: 0 },
            strategy: "-".into(),
            outcome,
            witness: String::new(),
            elapsed_ms: 0,
        };
        let recs = vec![
            rec(0.5, 1, Outcome::AvoidingFound),
            rec(0.1, 1, Outcome::NoAvoidingFound),
            rec(0.5, 2, Outcome::NoAvoidingFound),
            rec(0.1, 2, Outcome::ArrowFailsCertified),
        ];
        let c = SweepCurve::from_records(&recs, Axis::P);
        assert_eq!(c.points.len(), 2);
        assert_eq!(c.points[0].value, 0.1);
        assert_eq!((c.points[0].successes, c.points[0].trials), (1, 2));
        let c = SweepCurve::from_records(&recs, Axis::T);
        assert_eq!(c.points[1].value, 2.0);
        assert!(c.to_csv().starts_with("t,successes"));
    }
}
