//! Trial execution, parallel sweeps, and the resumable result cache.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rand::RngCore;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::config::{Checker, ConfigError, ExperimentConfig, SweepPoint};
use super::record::{emit_csv, Outcome, TrialRecord};
use super::stats::{Axis, SweepCurve};
use super::svg::emit_svg;
use crate::adversary::{
    strategy_boundary, strategy_hitting_set, strategy_local_search, strategy_pinned_cliques, verify_avoiding,
    AdversaryResult, Strategy, VerificationMode,
};
use crate::arrow::{arrow_exact, ArrowKind};
use crate::graph::{sample_gnp, Graph, Seed, TwoColouring};

/// Mixed into every cache key so results from other versions are ignored.
pub const CODE_VERSION: &str = concat!("ramsey-goodness ", env!("CARGO_PKG_VERSION"));

pub const RECORDS_FILE: &str = "records.jsonl";
pub const RESULTS_FILE: &str = "results.csv";
pub const MANIFEST_FILE: &str = "manifest.json";
pub const CURVE_CSV_FILE: &str = "curve.csv";
pub const CURVE_SVG_FILE: &str = "curve.svg";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Output(String),
    #[error("building worker pool: {0}")]
    Pool(String),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Seed for `trial` at `point`. Coupled sweeps share it across the p grid so
/// that graphs at one `t` and trial are nested.
pub fn trial_seed(cfg: &ExperimentConfig, point: &SweepPoint, trial: usize) -> Seed {
    let group = if cfg.coupled { point.t_index } else { point.index };
    Seed::new(cfg.master_seed, ((group as u64) << 32) | trial as u64)
}

struct Decision {
    strategy: String,
    outcome: Outcome,
    witness: String,
    colouring: Option<TwoColouring>,
}

fn run_strategy(
    cfg: &ExperimentConfig,
    s: Strategy,
    graph: &Graph,
    t: usize,
    mode: VerificationMode,
    seed: Seed,
) -> Result<AdversaryResult, String> {
    let (r, n) = (cfg.r, cfg.n);
    match s {
        Strategy::HittingSet => Ok(strategy_hitting_set(graph, r, n, mode)),
        Strategy::BoundaryPartition => strategy_boundary(graph, r, n, t, mode).map_err(|e| e.to_string()),
        Strategy::PinnedCliquePartition => strategy_pinned_cliques(graph, r, n, t, mode).map_err(|e| e.to_string()),
        Strategy::LocalSearch => {
            let params = cfg.local_params(seed.aux_rng(2).next_u64());
            Ok(strategy_local_search(graph, r, n, params, mode))
        }
    }
}

fn failure_note(res: &AdversaryResult) -> String {
    match (&res.outcome, &res.verification) {
        (crate::adversary::AdversaryOutcome::StrategyFailed(reason), _) => {
            // keep the note short: the first clause of the reason
            reason.split(':').next().unwrap_or(reason).to_string()
        }
        (_, Some(v)) if !v.certified() => "uncertified".to_string(),
        _ => "ok".to_string(),
    }
}

fn exact_decision(graph: &Graph, cfg: &ExperimentConfig) -> Result<Decision, String> {
    let v = arrow_exact(graph, cfg.r, cfg.n, cfg.budget);
    let witness = format!("nodes={}", v.nodes);
    match v.kind {
        ArrowKind::Holds => Ok(Decision {
            strategy: "exact".into(),
            outcome: Outcome::ArrowHoldsCertified,
            witness,
            colouring: None,
        }),
        ArrowKind::Fails(c) => Ok(Decision {
            strategy: "exact".into(),
            outcome: Outcome::ArrowFailsCertified,
            witness: format!("{witness};red_edges={}", c.red().num_edges()),
            colouring: Some(c),
        }),
        ArrowKind::Unknown(reason) => Err(reason),
    }
}

/// Applies the configured checks in order and returns the first decisive
/// result. `carry` is an avoiding colouring of a supergraph (coupled sweeps).
fn decide(
    cfg: &ExperimentConfig,
    graph: &Graph,
    point: &SweepPoint,
    seed: Seed,
    carry: Option<(&TwoColouring, f64)>,
) -> Decision {
    let mode = if cfg.verify_exact {
        VerificationMode::Exact {
            path_budget: cfg.budget,
        }
    } else {
        VerificationMode::Heuristic {
            seed: seed.aux_rng(1).next_u64(),
        }
    };
    let mut notes = Vec::new();
    let mut inconclusive = false;
    let mut ran_exact = false;
    for &checker in &cfg.strategies {
        match checker {
            Checker::Exact => {
                ran_exact = true;
                match exact_decision(graph, cfg) {
                    Ok(d) => return d,
                    Err(reason) => {
                        inconclusive = true;
                        notes.push(format!("exact={reason}"));
                    }
                }
            }
            Checker::Adversary(s) => match run_strategy(cfg, s, graph, point.t, mode, seed) {
                Ok(res) => {
                    if res.is_avoiding() && (res.is_certified() || !cfg.verify_exact) {
                        return Decision {
                            strategy: s.name().into(),
                            outcome: Outcome::AvoidingFound,
                            witness: res.summary(),
                            colouring: res.colouring().cloned(),
                        };
                    }
                    inconclusive |= res.is_avoiding();
                    notes.push(format!("{}={}", s.name(), failure_note(&res)));
                }
                Err(e) => notes.push(format!("{}={e}", s.name())),
            },
        }
    }
    if let Some((colouring, from_p)) = carry {
        if let Some(sub) = colouring.restrict_to(graph) {
            // a subcolouring of an avoiding colouring avoids; re-checked anyway
            let check = verify_avoiding(&sub, cfg.r, cfg.n, mode);
            if check.avoided() {
                return Decision {
                    strategy: "carried".into(),
                    outcome: Outcome::AvoidingFound,
                    witness: format!("from_p={from_p};red_edges={}", sub.red().num_edges()),
                    colouring: Some(sub),
                };
            }
        }
        notes.push("carried=rejected".into());
    }
    if cfg.verify_exact && !ran_exact && graph.num_edges() <= cfg.exact_fallback_edges {
        match exact_decision(graph, cfg) {
            Ok(d) => return d,
            Err(reason) => {
                inconclusive = true;
                notes.push(format!("exact={reason}"));
            }
        }
    }
    Decision {
        strategy: "-".into(),
        outcome: if inconclusive {
            Outcome::Unknown
        } else {
            Outcome::NoAvoidingFound
        },
        witness: notes.join(";"),
        colouring: None,
    }
}

fn record(
    cfg: &ExperimentConfig,
    point: &SweepPoint,
    trial: usize,
    seed: Seed,
    carry: Option<(&TwoColouring, f64)>,
) -> (TrialRecord, Option<TwoColouring>) {
    let start = Instant::now();
    let graph = sample_gnp(point.vertices, point.p, seed);
    let d = decide(cfg, &graph, point, seed, carry);
    let elapsed_ms = if cfg.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let rec = TrialRecord {
        point_index: point.index,
        trial_index: trial,
        r: cfg.r,
        n: cfg.n,
        vertices: point.vertices,
        p: point.p,
        t: point.t,
        seed,
        strategy: d.strategy,
        outcome: d.outcome,
        witness: d.witness,
        elapsed_ms,
    };
    (rec, d.colouring)
}

/// One trial at one point, without coupling carry-over. Deterministic given
/// the configuration.
pub fn run_trial(cfg: &ExperimentConfig, point: &SweepPoint, trial: usize) -> TrialRecord {
    record(cfg, point, trial, trial_seed(cfg, point, trial), None).0
}

/// A unit of work: one trial at a single point, or in coupled sweeps one
/// trial across a whole p grid at fixed `t`, densest first.
#[derive(Debug, Clone)]
struct Task {
    points: Vec<SweepPoint>,
    trial: usize,
}

fn tasks(cfg: &ExperimentConfig) -> Vec<Task> {
    let points = cfg.points();
    let mut out = Vec::new();
    if cfg.coupled {
        let groups = points.iter().map(|p| p.t_index).max().map_or(0, |m| m + 1);
        for g in 0..groups {
            let mut pts: Vec<SweepPoint> = points.iter().filter(|p| p.t_index == g).copied().collect();
            pts.sort_by(|a, b| b.p.total_cmp(&a.p).then(a.index.cmp(&b.index)));
            for trial in 0..cfg.trials {
                out.push(Task {
                    points: pts.clone(),
                    trial,
                });
            }
        }
    } else {
        for p in &points {
            for trial in 0..cfg.trials {
                out.push(Task {
                    points: vec![*p],
                    trial,
                });
            }
        }
    }
    out
}

fn run_task(cfg: &ExperimentConfig, task: &Task) -> Vec<TrialRecord> {
    let mut carry: Option<(TwoColouring, f64)> = None;
    let mut out = Vec::with_capacity(task.points.len());
    for point in &task.points {
        let seed = trial_seed(cfg, point, task.trial);
        let (rec, colouring) = record(cfg, point, task.trial, seed, carry.as_ref().map(|(c, p)| (c, *p)));
        if cfg.coupled {
            if let Some(c) = colouring {
                carry = Some((c, point.p));
            }
        }
        out.push(rec);
    }
    out
}

/// Content key of one record: code version, result-relevant settings, the
/// point's parameters and seed, and in coupled sweeps the denser points it
/// may inherit from.
fn cache_key(cfg: &ExperimentConfig, task: &Task, position: usize) -> String {
    let point = &task.points[position];
    let settings: String = cfg
        .canonical()
        .lines()
        .filter(|l| !(l.starts_with("p =") || l.starts_with("t =") || l.starts_with("trials =")))
        .collect::<Vec<_>>()
        .join("\n");
    let denser: Vec<String> = task.points[..position].iter().map(|p| format!("{:?}", p.p)).collect();
    let text = format!(
        "{CODE_VERSION}\n{settings}\nN={} p={:?} t={} seed={} denser={}",
        point.vertices,
        point.p,
        point.t,
        trial_seed(cfg, point, task.trial),
        denser.join(",")
    );
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheLine {
    key: String,
    record: TrialRecord,
}

fn load_cache(path: &Path) -> Result<HashMap<String, TrialRecord>, HarnessError> {
    let mut map = HashMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(map),
        Err(e) => return Err(io_err(path)(e)),
    };
    for line in BufReader::new(file).lines() {
        let line = line.map_err(io_err(path))?;
        // a torn final line from an interrupted run is skipped
        if let Ok(entry) = serde_json::from_str::<CacheLine>(&line) {
            map.insert(entry.key, entry.record);
        }
    }
    Ok(map)
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct Manifest {
    pub version: String,
    pub config: String,
    pub total_tasks: usize,
    pub completed_tasks: usize,
    pub complete: bool,
    pub records_file: String,
    pub results_file: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub workers: usize,
    /// Stop after computing this many new tasks, as if interrupted.
    pub task_limit: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            task_limit: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    /// Finished records sorted by point and trial index.
    pub records: Vec<TrialRecord>,
    /// Present once every task is done.
    pub curve: Option<SweepCurve>,
    pub total_tasks: usize,
    pub completed_tasks: usize,
    pub cached_tasks: usize,
    pub computed_tasks: usize,
}

impl SweepReport {
    pub fn complete(&self) -> bool {
        self.completed_tasks == self.total_tasks
    }
}

/// The axis a sweep is naturally plotted against.
pub fn default_axis(cfg: &ExperimentConfig) -> Axis {
    let t_varies = cfg.points().windows(2).any(|w| w[0].t != w[1].t);
    if cfg.p_grid.len() > 1 {
        if cfg.p_from_x {
            Axis::X
        } else {
            Axis::P
        }
    } else if t_varies {
        Axis::T
    } else {
        Axis::P
    }
}

/// Runs every (point, trial) pair on `opts.workers` threads.
///
/// With `out_dir`, finished tasks are appended to `records.jsonl` as they
/// complete and reused on the next run, so an interrupted sweep resumes
/// where it stopped. `results.csv` (sorted) and `manifest.json` are written
/// at the end; `curve.csv` and `curve.svg` once the sweep is complete.
pub fn run_sweep(
    cfg: &ExperimentConfig,
    out_dir: Option<&Path>,
    opts: SweepOptions,
) -> Result<SweepReport, HarnessError> {
    cfg.validate()?;
    let all = tasks(cfg);
    let keys: Vec<Vec<String>> = all
        .iter()
        .map(|t| (0..t.points.len()).map(|i| cache_key(cfg, t, i)).collect())
        .collect();
    let records_path = out_dir.map(|d| d.join(RECORDS_FILE));
    if let Some(d) = out_dir {
        std::fs::create_dir_all(d).map_err(io_err(d))?;
    }
    let cache = match &records_path {
        Some(p) => load_cache(p)?,
        None => HashMap::new(),
    };

    let mut done: Vec<Option<Vec<TrialRecord>>> = vec![None; all.len()];
    for (i, task) in all.iter().enumerate() {
        let hits: Option<Vec<TrialRecord>> = keys[i]
            .iter()
            .zip(&task.points)
            .map(|(k, p)| {
                cache.get(k).map(|r| TrialRecord {
                    point_index: p.index,
                    trial_index: task.trial,
                    ..r.clone()
                })
            })
            .collect();
        done[i] = hits;
    }
    let cached_tasks = done.iter().filter(|d| d.is_some()).count();
    let mut missing: Vec<usize> = (0..all.len()).filter(|&i| done[i].is_none()).collect();
    if let Some(limit) = opts.task_limit {
        missing.truncate(limit);
    }

    let log = match &records_path {
        Some(p) => Some(Mutex::new(
            OpenOptions::new()
                .create(true)
                .append(true)
                .open(p)
                .map_err(io_err(p))?,
        )),
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .map_err(|e| HarnessError::Pool(e.to_string()))?;
    let computed: Vec<Result<(usize, Vec<TrialRecord>), HarnessError>> = pool.install(|| {
        missing
            .par_iter()
            .map(|&i| {
                let recs = run_task(cfg, &all[i]);
                if let (Some(log), Some(path)) = (&log, &records_path) {
                    let mut buf = String::new();
                    for (k, r) in keys[i].iter().zip(&recs) {
                        let line = CacheLine {
                            key: k.clone(),
                            record: r.clone(),
                        };
                        buf.push_str(&serde_json::to_string(&line).expect("records serialise"));
                        buf.push('\n');
                    }
                    let mut f = log.lock().expect("log lock");
                    f.write_all(buf.as_bytes())
                        .and_then(|_| f.flush())
                        .map_err(io_err(path))?;
                }
                Ok((i, recs))
            })
            .collect()
    });
    let computed_tasks = computed.len();
    for res in computed {
        let (i, recs) = res?;
        done[i] = Some(recs);
    }

    let completed_tasks = done.iter().filter(|d| d.is_some()).count();
    let mut records: Vec<TrialRecord> = done.into_iter().flatten().flatten().collect();
    records.sort_by_key(|r| (r.point_index, r.trial_index));
    let complete = completed_tasks == all.len();
    let curve = complete.then(|| SweepCurve::from_records(&records, default_axis(cfg)));

    if let Some(d) = out_dir {
        emit_csv(&records, &d.join(RESULTS_FILE)).map_err(HarnessError::Output)?;
        if let Some(c) = &curve {
            let path = d.join(CURVE_CSV_FILE);
            std::fs::write(&path, c.to_csv()).map_err(io_err(&path))?;
            emit_svg(c, &d.join(CURVE_SVG_FILE)).map_err(HarnessError::Output)?;
        }
        let manifest = Manifest {
            version: CODE_VERSION.to_string(),
            config: cfg.canonical(),
            total_tasks: all.len(),
            completed_tasks,
            complete,
            records_file: RECORDS_FILE.to_string(),
            results_file: RESULTS_FILE.to_string(),
        };
        let path = d.join(MANIFEST_FILE);
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serialises");
        std::fs::write(&path, text + "\n").map_err(io_err(&path))?;
    }

    Ok(SweepReport {
        records,
        curve,
        total_tasks: all.len(),
        completed_tasks,
        cached_tasks,
        computed_tasks,
    })
}
