//! Monte Carlo sweeps over `(p, t)` grids: configuration, per-trial
//! records, Wilson intervals, CSV and SVG output.

mod config;
mod record;
mod run;
mod stats;
mod svg;

pub use config::{parse_grid, Checker, ConfigError, ExperimentConfig, SweepPoint, TUnit, VertexRule};
pub use record::{csv_string, emit_csv, parse_csv, read_csv, write_csv, Outcome, TrialRecord, CSV_HEADER};
pub use run::{
    default_axis, run_sweep, run_trial, trial_seed, HarnessError, Manifest, SweepOptions, SweepReport, CODE_VERSION,
    CURVE_CSV_FILE, CURVE_SVG_FILE, MANIFEST_FILE, RECORDS_FILE, RESULTS_FILE,
};
pub use stats::{wilson_interval, Axis, CurvePoint, SweepCurve, Z95};
pub use svg::{emit_svg, render_svg};
