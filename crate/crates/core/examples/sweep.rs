//! A small coupled p-sweep with Wilson intervals, written to a directory.
//!
//! ```bash
//! cargo run --release --example sweep -- /tmp/ramsey-sweep
//! ```

use std::path::PathBuf;

use ramsey_goodness::harness::{run_sweep, ExperimentConfig, SweepOptions};

const CONFIG: &str = "
r = 2
n = 8
x = 0.5:4:6
t = 2
trials = 20
master_seed = 2024
coupled = true
";

fn main() {
    let out: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("ramsey-sweep"));
    let cfg = ExperimentConfig::parse(CONFIG).expect("valid config");
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_sweep(
        &cfg,
        Some(&out),
        SweepOptions {
            workers,
            task_limit: None,
        },
    )
    .expect("sweep runs");
    println!(
        "{} records ({} tasks cached, {} computed) in {}",
        report.records.len(),
        report.cached_tasks,
        report.computed_tasks,
        out.display()
    );
    let curve = report.curve.expect("sweep complete");
    println!("{:>8}  {:>5}  {:>15}", curve.axis.name(), "found", "95% interval");
    for p in &curve.points {
        println!(
            "{:>8.3}  {:>5.2}  [{:.2}, {:.2}]",
            p.value, p.fraction, p.ci_low, p.ci_high
        );
    }
}
