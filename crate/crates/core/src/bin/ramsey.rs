use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ramsey_goodness::adversary::{
    strategy_boundary, strategy_hitting_set, strategy_local_search, strategy_pinned_cliques, AdversaryOutcome,
    LocalSearchParams, VerificationMode,
};
use ramsey_goodness::arrow::{arrow_exact, ArrowKind};
use ramsey_goodness::graph::{format_colouring, read_colouring, read_graph, sample_gnp, write_colouring, write_graph};
use ramsey_goodness::harness::{
    emit_svg, read_csv, run_sweep, Axis, ExperimentConfig, SweepCurve, SweepOptions, MANIFEST_FILE, RESULTS_FILE,
};
use ramsey_goodness::separation::{decompose_blue_partite, PartiteOutcome};
use ramsey_goodness::theory::summary_table;
use ramsey_goodness::{SearchVerdict, Seed, Witness};

#[derive(Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Clique-versus-path Ramsey experiments on random graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Hitting,
    Boundary,
    Pinned,
    Local,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyArg {
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    P,
    T,
    X,
}

#[derive(Subcommand)]
enum Command {
    /// Sample G(N, p) and write it as an edge list.
    Sample {
        #[arg(long = "vertices", short = 'N')]
        vertices: usize,
        #[arg(long)]
        p: f64,
        /// MASTER:STREAM
        #[arg(long, default_value = "0:0")]
        seed: Seed,
        #[arg(long)]
        out: PathBuf,
    },
    /// Red path with n edges or r+1 blue-separated t-sets.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Build an avoiding colouring with one strategy and verify it.
    Adversary {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
        #[arg(long, value_enum, default_value = "exact")]
        verify: VerifyArg,
        /// Where to write the colouring (stdout report only if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide G -> (K_{r+1}, P_n) exactly. Exit 0 holds, 1 fails, 2 unknown.
    ArrowExact {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Where to write an avoiding colouring (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print thresholds and expectations.
    Theory {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Run a parameter sweep from a config file.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        workers: Option<usize>,
        /// Stop after this many new tasks (resume by running again).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Chart success fraction from a results CSV.
    Plot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "p")]
        x: AxisArg,
    },
}

fn verdict_json(name: &str, v: &SearchVerdict) -> serde_json::Value {
    json!({
        "name": name,
        "pass": !v.is_found(),
        "certified": v.is_refuted(),
        "witness": v.witness().map(Witness::to_string),
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Sample { vertices, p, seed, out } => {
            if !(0.0..=1.0).contains(&p) {
                bail!("p = {p} outside [0, 1]");
            }
            let g = sample_gnp(vertices, p, seed);
            write_graph(&g, &out)?;
            eprintln!(
                "wrote {} vertices, {} edges to {}",
                vertices,
                g.num_edges(),
                out.display()
            );
        }
        Command::Decompose {
            graph,
            colouring,
            r,
            n,
            t,
        } => {
            let g = read_graph(&graph)?;
            let c = read_colouring(&colouring, &g)?;
            let out = decompose_blue_partite(&c, r, n, t)?;
            let ok = match &out {
                PartiteOutcome::RedPath(p) => c.red().is_path(p),
                PartiteOutcome::WeakPartite(w) => w.verify(&c, t),
            };
            if !ok {
                bail!("certificate failed verification");
            }
            println!("{}", out.to_witness());
        }
        Command::Adversary {
            graph,
            strategy,
            r,
            n,
            t,
            verify,
            out,
            seed,
        } => {
            let g = read_graph(&graph)?;
            let mode = match verify {
                VerifyArg::Exact => VerificationMode::DEFAULT_EXACT,
                VerifyArg::Heuristic => VerificationMode::Heuristic { seed },
            };
            let res = match strategy {
                StrategyArg::Hitting => strategy_hitting_set(&g, r, n, mode),
                StrategyArg::Boundary => strategy_boundary(&g, r, n, t, mode)?,
                StrategyArg::Pinned => strategy_pinned_cliques(&g, r, n, t, mode)?,
                StrategyArg::Local => {
                    let params = LocalSearchParams {
                        seed,
                        ..LocalSearchParams::default()
                    };
                    strategy_local_search(&g, r, n, params, mode)
                }
            };
            let reason = match &res.outcome {
                AdversaryOutcome::StrategyFailed(reason) => Some(reason.clone()),
                AdversaryOutcome::Avoiding { .. } => None,
            };
            println!(
                "{}",
                json!({
                    "name": "strategy",
                    "strategy": res.strategy.name(),
                    "pass": res.is_avoiding(),
                    "certified": res.is_certified(),
                    "witness": res.summary(),
                    "reason": reason,
                })
            );
            if let Some(check) = &res.verification {
                println!("{}", verdict_json("no_red_path", &check.red_path));
                println!("{}", verdict_json("no_blue_clique", &check.blue_clique));
            }
            if let (Some(c), Some(path)) = (res.colouring(), &out) {
                write_colouring(c, path)?;
            }
            return Ok(if res.is_avoiding() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::ArrowExact {
            graph,
            r,
            n,
            budget,
            out,
        } => {
            let g = read_graph(&graph)?;
            let v = arrow_exact(&g, r, n, budget);
            eprintln!("nodes explored: {}", v.nodes);
            return Ok(match v.kind {
                ArrowKind::Holds => {
                    println!("HOLDS");
                    ExitCode::SUCCESS
                }
                ArrowKind::Fails(c) => {
                    println!("FAILS");
                    match out {
                        Some(path) => write_colouring(&c, &path)?,
                        None => print!("{}", format_colouring(&c)),
                    }
                    ExitCode::from(1)
                }
                ArrowKind::Unknown(reason) => {
                    println!("UNKNOWN {reason}");
                    ExitCode::from(2)
                }
            });
        }
        Command::Theory { r, n, p } => {
            if r < 2 || n < 1 || !(0.0..=1.0).contains(&p) {
                bail!("need r >= 2, n >= 1 and p in [0, 1]");
            }
            let rows = summary_table(r, n, p);
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in rows {
                println!("{k:<width$}  {v}");
            }
        }
        Command::Sweep {
            config,
            out,
            workers,
            limit,
        } => {
            let mut cfg = ExperimentConfig::read(&config)?;
            cfg.apply_env()?;
            let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let rep = run_sweep(
                &cfg,
                Some(&out),
                SweepOptions {
                    workers,
                    task_limit: limit,
                },
            )?;
            eprintln!(
                "{}/{} tasks done ({} cached, {} computed); results in {}",
                rep.completed_tasks,
                rep.total_tasks,
                rep.cached_tasks,
                rep.computed_tasks,
                out.join(RESULTS_FILE).display()
            );
            if !rep.complete() {
                eprintln!(
                    "incomplete: rerun to resume (see {})",
                    out.join(MANIFEST_FILE).display()
                );
                return Ok(ExitCode::from(3));
            }
        }
        Command::Plot { input, out, x } => {
            let records = read_csv(&input).map_err(anyhow::Error::msg)?;
            let axis = match x {
                AxisArg::P => Axis::P,
                AxisArg::T => Axis::T,
                AxisArg::X => Axis::X,
            };
            let curve = SweepCurve::from_records(&records, axis);
            emit_svg(&curve, &out).map_err(anyhow::Error::msg)?;
            print!("{}", curve.to_csv());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()).context("ramsey") {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(4)
        }
    }
}
