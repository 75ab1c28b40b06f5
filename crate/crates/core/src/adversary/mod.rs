//! Explicit colourings avoiding both a red `P_n` and a blue `K_{r+1}`, and the
//! structural classifier that sorts vertices by long red cycles.

mod classify;
mod cycles;
mod local;
mod strategies;

pub use classify::{
    classify_by_cycles, verify_structural_partition, Classification, ClassifierParams, PartitionViolation,
    StructuralPartition,
};
pub use cycles::{find_long_red_cycles, CycleSearchFailure};
pub use local::{strategy_local_search, LocalSearchParams};
pub use strategies::{
    boundary_set, pinned_clique_copies, strategy_boundary, strategy_hitting_set, strategy_pinned_cliques,
};

use std::fmt;

use thiserror::Error;

use crate::detectors::{find_clique, find_path_exact, find_path_posa};
use crate::graph::TwoColouring;
use crate::witness::{SearchOutcome, SearchVerdict};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AdversaryError {
    #[error("graph has {actual} vertices, expected r*n + t = {expected}")]
    WrongVertexCount { expected: usize, actual: usize },
    #[error("sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    HittingSet,
    BoundaryPartition,
    PinnedCliquePartition,
    LocalSearch,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::HittingSet => "hitting",
            Strategy::BoundaryPartition => "boundary",
            Strategy::PinnedCliquePartition => "pinned",
            Strategy::LocalSearch => "local",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "hitting" => Strategy::HittingSet,
            "boundary" => Strategy::BoundaryPartition,
            "pinned" => Strategy::PinnedCliquePartition,
            "local" => Strategy::LocalSearch,
            _ => return None,
        })
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How candidate colourings are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerificationMode {
    /// Exact clique search and exact red-path search within a node budget.
    Exact { path_budget: u64 },
    /// Exact clique search; red paths looked for by rotation–extension only.
    Heuristic { seed: u64 },
}

impl VerificationMode {
    pub const DEFAULT_EXACT: VerificationMode = VerificationMode::Exact { path_budget: 5_000_000 };
}

/// Detector verdicts for one colouring.
#[derive(Debug, Clone)]
pub struct AvoidanceCheck {
    pub red_path: SearchVerdict,
    pub blue_clique: SearchVerdict,
}

impl AvoidanceCheck {
    /// Both searches were complete and found nothing.
    pub fn certified(&self) -> bool {
        self.red_path.is_refuted() && self.blue_clique.is_refuted()
    }

    /// Neither search found a witness (possibly because one gave up).
    pub fn avoided(&self) -> bool {
        !self.red_path.is_found() && !self.blue_clique.is_found()
    }

    pub fn failure_reason(&self) -> Option<String> {
        if let SearchOutcome::Found(w) = &self.red_path.outcome {
            return Some(format!("red path found: {w}"));
        }
        if let SearchOutcome::Found(w) = &self.blue_clique.outcome {
            return Some(format!("blue clique found: {w}"));
        }
        None
    }
}

/// Looks for a red `P_n` and a blue `K_{r+1}` in `colouring`.
pub fn verify_avoiding(colouring: &TwoColouring, r: usize, n: usize, mode: VerificationMode) -> AvoidanceCheck {
    let blue_clique = find_clique(colouring.blue(), r + 1);
    let red_path = match mode {
        VerificationMode::Exact { path_budget } => find_path_exact(colouring.red(), n, path_budget),
        VerificationMode::Heuristic { seed } => find_path_posa(colouring.red(), n, seed),
    };
    AvoidanceCheck { red_path, blue_clique }
}

#[derive(Debug, Clone)]
pub enum AdversaryOutcome {
    /// A colouring in which neither detector found a witness.
    Avoiding {
        colouring: TwoColouring,
        /// Parts `A_0, ..., A_r` for the partition strategies.
        partition: Option<Vec<Vec<usize>>>,
        /// Both detectors refuted exhaustively.
        certified: bool,
    },
    StrategyFailed(String),
}

#[derive(Debug, Clone)]
pub struct AdversaryResult {
    pub strategy: Strategy,
    pub outcome: AdversaryOutcome,
    /// Absent when the strategy failed before producing a colouring.
    pub verification: Option<AvoidanceCheck>,
    /// Strategy-specific counts, e.g. `("boundary", |X|)`.
    pub stats: Vec<(&'static str, usize)>,
}

impl AdversaryResult {
    pub fn colouring(&self) -> Option<&TwoColouring> {
        match &self.outcome {
            AdversaryOutcome::Avoiding { colouring, .. } => Some(colouring),
            AdversaryOutcome::StrategyFailed(_) => None,
        }
    }

    pub fn is_avoiding(&self) -> bool {
        matches!(self.outcome, AdversaryOutcome::Avoiding { .. })
    }

    pub fn is_certified(&self) -> bool {
        matches!(self.outcome, AdversaryOutcome::Avoiding { certified: true, .. })
    }

    pub fn stat(&self, key: &str) -> Option<usize> {
        self.stats.iter().find(|(k, _)| *k == key).map(|&(_, v)| v)
    }

    /// Compact `key=value;...` summary.
    pub fn summary(&self) -> String {
        let mut parts: Vec<String> = self.stats.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if let AdversaryOutcome::StrategyFailed(reason) = &self.outcome {
            parts.push(format!("failed={reason}"));
        }
        parts.join(";")
    }

    fn failed(strategy: Strategy, reason: impl Into<String>, stats: Vec<(&'static str, usize)>) -> Self {
        Self {
            strategy,
            outcome: AdversaryOutcome::StrategyFailed(reason.into()),
            verification: None,
            stats,
        }
    }

    /// Verifies `colouring` and wraps it as success or failure.
    fn checked(
        strategy: Strategy,
        colouring: TwoColouring,
        partition: Option<Vec<Vec<usize>>>,
        r: usize,
        n: usize,
        mode: VerificationMode,
        mut stats: Vec<(&'static str, usize)>,
    ) -> Self {
        stats.push(("red_edges", colouring.red().num_edges()));
        let check = verify_avoiding(&colouring, r, n, mode);
        let outcome = match check.failure_reason() {
            Some(reason) => AdversaryOutcome::StrategyFailed(reason),
            None => AdversaryOutcome::Avoiding {
                colouring,
                partition,
                certified: check.certified(),
            },
        };
        Self {
            strategy,
            outcome,
            verification: Some(check),
            stats,
        }
    }
}
