//! End-to-end acceptance checks, one line of output per criterion.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use ramsey_goodness::adversary::Strategy;
use ramsey_goodness::adversary::{
    boundary_set, pinned_clique_copies, strategy_boundary, strategy_hitting_set, VerificationMode,
};
use ramsey_goodness::arrow::{arrow_exact, ArrowKind};
use ramsey_goodness::detectors::{check_expansion, find_clique, find_path_exact, ExpansionMode};
use ramsey_goodness::graph::sample_gnp;
use ramsey_goodness::harness::{run_sweep, Checker, ExperimentConfig, SweepOptions, RESULTS_FILE};
use ramsey_goodness::separation::{decompose_blue_partite, PartiteOutcome};
use ramsey_goodness::{Colour, Graph, SearchOutcome, Seed, Witness};
use rand::Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mean_and_se(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Every red/blue colouring of `K_m` has a red path with `n` edges or a
/// blue triangle; `None` if so, else the red edge mask of a counterexample.
fn complete_graph_oracle(m: usize, n: usize) -> Option<u64> {
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let mut red = vec![vec![false; m]; m];
    for mask in 0u64..1 << pairs.len() {
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let bit = mask >> i & 1 == 1;
            red[u][v] = bit;
            red[v][u] = bit;
        }
        let blue_triangle =
            (0..m).any(|a| (a + 1..m).any(|b| !red[a][b] && (b + 1..m).any(|c| !red[a][c] && !red[b][c])));
        if !blue_triangle && !has_path(&red, n) {
            return Some(mask);
        }
    }
    None
}

fn chvatal_small() -> Check {
    let start = Instant::now();
    let k5 = arrow_exact(&Graph::complete(5), 2, 2, 10_000_000);
    let k4 = arrow_exact(&Graph::complete(4), 2, 2, 10_000_000);
    let k7 = arrow_exact(&Graph::complete(7), 2, 3, 10_000_000);
    let elapsed = start.elapsed();

    ensure(k5.holds(), || format!("K5 -> (K3, P2) not certified: {:?}", k5.kind))?;
    ensure(k7.holds(), || format!("K7 -> (K3, P3) not certified: {:?}", k7.kind))?;
    let ArrowKind::Fails(c) = &k4.kind else {
        return Err(format!("K4 should fail: {:?}", k4.kind));
    };
    ensure(complete_graph_oracle(5, 2).is_none(), || {
        "oracle: K5 has an avoiding colouring".into()
    })?;
    ensure(complete_graph_oracle(7, 3).is_none(), || {
        "oracle: K7 has an avoiding colouring".into()
    })?;
    ensure(complete_graph_oracle(4, 2).is_some(), || {
        "oracle: K4 has no avoiding colouring".into()
    })?;

    // red perfect matching, blue 4-cycle
    let red = colour_matrix(c, Colour::Red);
    let blue = colour_matrix(c, Colour::Blue);
    let red_degrees: Vec<usize> = red.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
    let blue_degrees: Vec<usize> = blue.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
    ensure(red_degrees == [1; 4], || format!("red degrees {red_degrees:?}"))?;
    ensure(blue_degrees == [2; 4] && !has_clique(&blue, 3), || {
        "blue part is not a C4".into()
    })?;
    ensure(!has_path(&red, 2), || "certificate has a red P2".into())?;

    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("K5 holds, K4 fails, K7 holds in {elapsed:.2?}"))
}

fn hitting_set_pipeline() -> Check {
    let (r, n, vertices, p) = (2, 20, 60, 0.05);
    let mut qualifying = 0;
    for s in 0..500 {
        let g = sample_gnp(vertices, p, Seed::new(2, s));
        if count_triangles(&matrix(&g)) >= n {
            continue;
        }
        qualifying += 1;
        let res = strategy_hitting_set(&g, r, n, VerificationMode::DEFAULT_EXACT);
        ensure(res.is_certified(), || format!("seed {s}: {}", res.summary()))?;
        let c = res.colouring().unwrap();
        let red = colour_matrix(c, Colour::Red);
        let red_edges = red.iter().flatten().filter(|&&b| b).count() / 2;
        ensure(red_edges < n, || format!("seed {s}: {red_edges} red edges"))?;
        ensure(count_triangles(&colour_matrix(c, Colour::Blue)) == 0, || {
            format!("seed {s}: blue triangle")
        })?;
    }
    ensure(qualifying > 0, || "no qualifying trials".into())?;
    Ok(format!("{qualifying}/500 qualifying trials certified"))
}

fn boundary_pipeline() -> Check {
    let (r, n, t, p) = (2, 30, 3, 0.01);
    let bound = (r * n * t) as f64 * p;
    let mut sizes = Vec::new();
    let mut qualifying = 0;
    for s in 0..1000 {
        let g = sample_gnp(r * n + t, p, Seed::new(3, s));
        let adj = matrix(&g);
        let oracle = (t..g.num_vertices()).filter(|&v| (0..t).any(|a| adj[a][v])).count();
        let x = boundary_set(&g, t).len();
        ensure(x == oracle, || format!("seed {s}: |X| = {x}, oracle {oracle}"))?;
        sizes.push(x as f64);
        if x <= n {
            qualifying += 1;
            let res = strategy_boundary(&g, r, n, t, VerificationMode::DEFAULT_EXACT).map_err(|e| e.to_string())?;
            ensure(res.is_certified(), || format!("seed {s}: {}", res.summary()))?;
        }
    }
    let (mean, se) = mean_and_se(&sizes);
    ensure(mean <= bound + 3.0 * se, || {
        format!("mean |X| = {mean:.4} > {bound} + 3 * {se:.4}")
    })?;
    Ok(format!(
        "mean |X| = {mean:.4} (bound {bound}, se {se:.4}); {qualifying} certified"
    ))
}

fn pinned_expectation() -> Check {
    let (r, n, t, p) = (2, 12, 2, 0.25);
    // t * C(rn, 2) * p^3
    let expected = 2.0 * 276.0 * 0.25f64.powi(3);
    let mut counts = Vec::new();
    for s in 0..10_000 {
        let g = sample_gnp(r * n + t, p, Seed::new(4, s));
        let adj = matrix(&g);
        let total = g.num_vertices();
        let mut oracle = 0;
        for a in 0..t {
            for u in t..total {
                for v in u + 1..total {
                    oracle += usize::from(adj[a][u] && adj[a][v] && adj[u][v]);
                }
            }
        }
        let got = pinned_clique_copies(&g, r, t).len();
        ensure(got == oracle, || {
            format!("seed {s}: {got} pinned copies, oracle {oracle}")
        })?;
        counts.push(got as f64);
    }
    let (mean, se) = mean_and_se(&counts);
    ensure((mean - expected).abs() <= 3.0 * se, || {
        format!("mean {mean:.4} vs {expected} (se {se:.4})")
    })?;
    Ok(format!("mean {mean:.4} vs {expected} (se {se:.4})"))
}

fn separation_totality() -> Check {
    let mut rng = rng(5);
    let (mut paths, mut partite, mut cross_checked) = (0, 0, 0);
    for i in 0..2000 {
        let r = [2, 3][rng.random_range(0..2)];
        let n = [4, 6][rng.random_range(0..2)];
        let t = rng.random_range(1..=2);
        let vertices = r * n + (r + 1) * t;
        let density = [0.2, 0.5, 0.8, 1.0][rng.random_range(0..4)];
        let red_share = [0.1, 0.3, 0.5, 0.7][rng.random_range(0..4)];
        let g = random_graph(&mut rng, vertices, density);
        let c = random_colouring(&mut rng, &g, red_share);
        let red = colour_matrix(&c, Colour::Red);
        let out = decompose_blue_partite(&c, r, n, t).map_err(|e| format!("sample {i}: {e}"))?;
        match &out {
            PartiteOutcome::RedPath(p) => {
                paths += 1;
                ensure(is_path_of(&red, p, n), || format!("sample {i}: bad red path {p:?}"))?;
            }
            PartiteOutcome::WeakPartite(w) => {
                partite += 1;
                let mut owner = vec![usize::MAX; vertices];
                ensure(w.sets.len() == r + 1, || format!("sample {i}: {} sets", w.sets.len()))?;
                for (k, set) in w.sets.iter().enumerate() {
                    ensure(set.len() == t, || format!("sample {i}: set of size {}", set.len()))?;
                    for &v in set {
                        ensure(v < vertices && owner[v] == usize::MAX, || {
                            format!("sample {i}: overlap at {v}")
                        })?;
                        owner[v] = k;
                    }
                }
                for u in 0..vertices {
                    for v in 0..vertices {
                        let cross = owner[u] != usize::MAX && owner[v] != usize::MAX && owner[u] != owner[v];
                        ensure(!(cross && red[u][v]), || {
                            format!("sample {i}: red edge {u}-{v} across sets")
                        })?;
                    }
                }
                ensure(w.verify(&c, t), || {
                    format!("sample {i}: witness rejected by its own check")
                })?;
            }
        }
        if vertices <= 16 {
            cross_checked += 1;
            let exists = has_path(&red, n);
            let detector = find_path_exact(c.red(), n, u64::MAX);
            ensure(detector.is_found() == exists, || {
                format!("sample {i}: detector and oracle disagree")
            })?;
            if !exists {
                ensure(matches!(out, PartiteOutcome::WeakPartite(_)), || {
                    format!("sample {i}: red path reported but none exists")
                })?;
            }
        }
    }
    Ok(format!(
        "{paths} red paths, {partite} partite witnesses, {cross_checked} cross-checked"
    ))
}

fn expansion_consistency() -> Check {
    let mut rng = rng(6);
    let mut applied = 0;
    for i in 0..200 {
        let p = [0.3, 0.5, 0.7][i % 3];
        let vertices = rng.random_range(1..=14);
        let g = random_graph(&mut rng, vertices, p);
        let adj = matrix(&g);
        let longest = longest_path(&adj);
        for k in 1..=3 {
            let report = check_expansion(&g, k, ExpansionMode::Exhaustive).map_err(|e| e.to_string())?;
            let oracle = expands(&adj, k);
            ensure(report.holds() == oracle, || {
                format!("sample {i}, k = {k}: expansion check disagrees")
            })?;
            if !report.holds() {
                continue;
            }
            applied += 1;
            let want = (3 * k - 1).min(vertices.saturating_sub(1));
            let v = find_path_exact(&g, want, u64::MAX);
            ensure(v.is_found(), || {
                format!("sample {i}, k = {k}: no path with {want} edges")
            })?;
            ensure(longest >= want, || {
                format!("sample {i}, k = {k}: oracle longest path {longest} < {want}")
            })?;
        }
    }
    Ok(format!("{applied} expanding (graph, k) pairs, no counterexample"))
}

fn detector_completeness() -> Check {
    let mut rng = rng(7);
    let mut queries = 0;
    for i in 0..500 {
        let vertices = rng.random_range(1..=10);
        let p = rng.random::<f64>();
        let g = random_graph(&mut rng, vertices, p);
        let adj = matrix(&g);
        for k in 1..=vertices + 1 {
            queries += 1;
            let v = find_clique(&g, k);
            ensure(v.is_found() == has_clique(&adj, k), || {
                format!("sample {i}: clique size {k}")
            })?;
            ensure(v.is_found() || v.is_refuted(), || {
                format!("sample {i}: clique search incomplete")
            })?;
            if let Some(Witness::Clique(c)) = v.witness() {
                ensure(c.len() == k && g.is_clique(c), || {
                    format!("sample {i}: bad clique {c:?}")
                })?;
            }
        }
        for len in 0..=vertices {
            queries += 1;
            let v = find_path_exact(&g, len, u64::MAX);
            ensure(v.is_found() == has_path(&adj, len), || {
                format!("sample {i}: path length {len}")
            })?;
            match &v.outcome {
                SearchOutcome::Found(Witness::Path(p)) => {
                    ensure(is_path_of(&adj, p, len), || format!("sample {i}: bad path {p:?}"))?
                }
                SearchOutcome::ExhaustivelyRefuted => {}
                other => return Err(format!("sample {i}: unexpected outcome {other:?}")),
            }
        }
    }
    Ok(format!("{queries} queries agree"))
}

fn coupled_config() -> ExperimentConfig {
    ExperimentConfig {
        r: 2,
        n: 5,
        p_grid: vec![0.05, 0.1, 0.2, 0.3, 0.45, 0.6, 0.8, 1.0],
        t_grid: vec![2.0],
        trials: 40,
        master_seed: 8,
        coupled: true,
        ..ExperimentConfig::default()
    }
}

fn coupled_monotonicity() -> Check {
    let cfg = coupled_config();
    let rep = run_sweep(
        &cfg,
        None,
        SweepOptions {
            workers: 4,
            task_limit: None,
        },
    )
    .map_err(|e| e.to_string())?;
    let mut by_trial: BTreeMap<usize, Vec<(f64, bool)>> = BTreeMap::new();
    for rec in &rep.records {
        by_trial
            .entry(rec.trial_index)
            .or_default()
            .push((rec.p, !rec.outcome.is_success()));
    }
    let mut flips = 0;
    for (trial, mut row) in by_trial {
        row.sort_by(|a, b| a.0.total_cmp(&b.0));
        ensure(row.len() == cfg.p_grid.len(), || {
            format!("trial {trial}: {} records", row.len())
        })?;
        for w in row.windows(2) {
            ensure(!(w[0].1 && !w[1].1), || {
                format!("trial {trial}: fails at p = {} but succeeds at p = {}", w[0].0, w[1].0)
            })?;
            flips += usize::from(!w[0].1 && w[1].1);
        }
    }
    ensure(flips > 0, || "grid never crosses from success to failure".into())?;
    Ok(format!("{} trials monotone, {flips} transitions", cfg.trials))
}

fn determinism() -> Check {
    let mut summaries = Vec::new();
    for cfg in [
        coupled_config(),
        ExperimentConfig {
            r: 2,
            n: 6,
            p_grid: vec![0.1, 0.3, 0.5],
            t_grid: vec![1.0, 2.0],
            trials: 12,
            master_seed: 9,
            strategies: vec![
                Checker::Adversary(Strategy::HittingSet),
                Checker::Adversary(Strategy::LocalSearch),
            ],
            ..ExperimentConfig::default()
        },
    ] {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let run = |name: &str, workers: usize, limit: Option<usize>| -> Result<Vec<u8>, String> {
            let out = dir.path().join(name);
            let opts = SweepOptions {
                workers,
                task_limit: limit,
            };
            let first = run_sweep(&cfg, Some(&out), opts).map_err(|e| e.to_string())?;
            if limit.is_some() {
                ensure(!first.complete(), || "limit did not interrupt the sweep".into())?;
                let resumed = run_sweep(
                    &cfg,
                    Some(&out),
                    SweepOptions {
                        workers,
                        task_limit: None,
                    },
                )
                .map_err(|e| e.to_string())?;
                ensure(resumed.cached_tasks > 0 && resumed.complete(), || {
                    "resume recomputed everything".into()
                })?;
            }
            std::fs::read(out.join(RESULTS_FILE)).map_err(|e| e.to_string())
        };
        let one = run("w1", 1, None)?;
        let four = run("w4", 4, None)?;
        let resumed = run("resumed", 3, Some(5))?;
        let again = run("w1-again", 1, None)?;
        ensure(one == four, || "1 vs 4 workers differ".into())?;
        ensure(one == resumed, || "interrupted and resumed run differs".into())?;
        ensure(one == again, || "rerun differs".into())?;
        let text = String::from_utf8(one).map_err(|e| e.to_string())?;
        let rows: Vec<&str> = text.lines().skip(1).collect();
        let mut sorted = rows.clone();
        sorted.sort_by_key(|l| {
            let mut f = l.split(',').map(|x| x.parse::<usize>().unwrap_or(usize::MAX));
            (f.next(), f.next())
        });
        ensure(rows == sorted, || "results are not sorted by point and trial".into())?;
        summaries.push(rows.len());
    }
    Ok(format!(
        "identical CSVs ({:?} rows) across workers and resume",
        summaries
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 chvatal exact values", chvatal_small),
        ("2 hitting-set pipeline", hitting_set_pipeline),
        ("3 boundary pipeline", boundary_pipeline),
        ("4 pinned clique expectation", pinned_expectation),
        ("5 separation totality", separation_totality),
        ("6 expansion implies long path", expansion_consistency),
        ("7 detector completeness", detector_completeness),
        ("8 coupled sweep monotonicity", coupled_monotonicity),
        ("9 sweep determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {name}: {detail} [{:.1?}]", start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail} [{:.1?}]", start.elapsed());
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
