//! Searches for cliques, long paths and expansion witnesses.
//!
//! Every search reports a [`SearchVerdict`](crate::witness::SearchVerdict)
//! whose outcome records how it was reached: complete searches may refute,
//! heuristic ones may only give up.

mod clique;
mod degree;
mod expansion;
mod path;
mod posa;

pub use clique::{count_cliques, enumerate_cliques, find_clique, find_transversal_clique};
pub use degree::{low_degree_count, neighbourhood_cover};
pub use expansion::{
    check_expansion, posa_guarantee_check, ExpansionMode, ExpansionOutcome, ExpansionReport, GuaranteeStatus,
    PosaGuaranteeReport, EXHAUSTIVE_EXPANSION_LIMIT,
};
pub use path::{find_path_exact, path_via_subset_dp, SUBSET_DP_LIMIT};
pub use posa::{find_path_posa, posa_search, PosaRun, POSA_RESTARTS};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DetectorError {
    #[error("need at least two sets, got {0}")]
    TooFewSets(usize),
    #[error("sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("exhaustive expansion check refused: {n} vertices exceeds the limit of {limit}")]
    TooLargeForExhaustive { n: usize, limit: usize },
}
