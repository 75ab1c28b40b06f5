//! Vertex-expansion checks `|N(X)| >= 2|X|` and the long path they promise.
//!
//! `N(X)` here is the outer neighbourhood: neighbours of `X` outside `X`.

use super::path::find_path_exact;
use super::posa::posa_search;
use super::DetectorError;
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::witness::SearchVerdict;

/// Largest graph the exhaustive mode accepts.
pub const EXHAUSTIVE_EXPANSION_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionMode {
    /// Every nonempty `X` with `|X| <= k`.
    Exhaustive,
    /// Endpoint sets of stalled rotation–extension runs; can only find
    /// violations.
    Rotation { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpansionOutcome {
    /// Every `X` with `|X| <= k` expands (exhaustive mode only).
    ExpanderUpTo(usize),
    /// `|X| <= k` and `|N(X)| < 2|X|`.
    ViolatingSet(Vec<usize>),
    /// Rotation mode found nothing; expansion is not established.
    NoViolationFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionReport {
    pub k: usize,
    pub outcome: ExpansionOutcome,
}

impl ExpansionReport {
    pub fn holds(&self) -> bool {
        matches!(self.outcome, ExpansionOutcome::ExpanderUpTo(_))
    }
}

pub fn check_expansion(graph: &Graph, k: usize, mode: ExpansionMode) -> Result<ExpansionReport, DetectorError> {
    let outcome = match mode {
        ExpansionMode::Exhaustive => exhaustive(graph, k)?,
        ExpansionMode::Rotation { seed } => rotation(graph, k, seed),
    };
    Ok(ExpansionReport { k, outcome })
}

fn exhaustive(graph: &Graph, k: usize) -> Result<ExpansionOutcome, DetectorError> {
    let n = graph.num_vertices();
    if n > EXHAUSTIVE_EXPANSION_LIMIT {
        return Err(DetectorError::TooLargeForExhaustive {
            n,
            limit: EXHAUSTIVE_EXPANSION_LIMIT,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| graph.neighbours(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();
    for size in 1..=k.min(n) {
        // Gosper's hack over all `size`-subsets, ascending
        let mut x: u32 = (1 << size) - 1;
        let limit: u32 = if n == 32 { u32::MAX } else { 1 << n };
        while x < limit {
            let mut nb = 0u32;
            let mut rest = x;
            while rest != 0 {
                nb |= adj[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            nb &= !x;
            if nb.count_ones() < 2 * size as u32 {
                let set = (0..n).filter(|&v| x >> v & 1 == 1).collect();
                return Ok(ExpansionOutcome::ViolatingSet(set));
            }
            let c = x & x.wrapping_neg();
            let r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
    Ok(ExpansionOutcome::ExpanderUpTo(k))
}

fn rotation(graph: &Graph, k: usize, seed: u64) -> ExpansionOutcome {
    let n = graph.num_vertices();
    let run = posa_search(graph, n.saturating_sub(1), seed, super::POSA_RESTARTS);
    let mut stalls = run.stalls;
    stalls.sort_by_key(VertexSet::len);
    for r in stalls {
        if r.len() <= k && graph.outer_neighbourhood(&r).len() < 2 * r.len() {
            return ExpansionOutcome::ViolatingSet(r.to_vec());
        }
    }
    ExpansionOutcome::NoViolationFound
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuaranteeStatus {
    /// Expansion holds and the promised path was found.
    Confirmed,
    /// Expansion fails, so nothing is promised.
    HypothesisFails,
    /// Expansion holds but exact search refuted the path.
    Contradicted,
    /// Expansion holds but the path search ran out of budget.
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct PosaGuaranteeReport {
    pub expansion: ExpansionReport,
    /// `min(3k - 1, n - 1)` edges.
    pub target_length: usize,
    pub path: Option<SearchVerdict>,
    pub status: GuaranteeStatus,
}

/// If every `X` with `|X| <= k` expands, a path with `min(3k-1, n-1)` edges
/// must exist. Checks the hypothesis exhaustively and, when it holds, runs
/// the exact path search to confirm the conclusion.
pub fn posa_guarantee_check(graph: &Graph, k: usize, budget: u64) -> Result<PosaGuaranteeReport, DetectorError> {
    assert!(k >= 1, "expansion parameter must be positive");
    let n = graph.num_vertices();
    let expansion = check_expansion(graph, k, ExpansionMode::Exhaustive)?;
    let target_length = (3 * k - 1).min(n.saturating_sub(1));
    if !expansion.holds() {
        return Ok(PosaGuaranteeReport {
            expansion,
            target_length,
            path: None,
            status: GuaranteeStatus::HypothesisFails,
        });
    }
    let verdict = find_path_exact(graph, target_length, budget);
    let status = if verdict.is_found() {
        GuaranteeStatus::Confirmed
    } else if verdict.is_refuted() {
        GuaranteeStatus::Contradicted
    } else {
        GuaranteeStatus::Inconclusive
    };
    Ok(PosaGuaranteeReport {
        expansion,
        target_length,
        path: Some(verdict),
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k6_expands_up_to_two() {
        let r = check_expansion(&Graph::complete(6), 2, ExpansionMode::Exhaustive).unwrap();
        assert_eq!(r.outcome, ExpansionOutcome::ExpanderUpTo(2));
        let r3 = check_expansion(&Graph::complete(6), 3, ExpansionMode::Exhaustive).unwrap();
        assert!(matches!(r3.outcome, ExpansionOutcome::ViolatingSet(ref x) if x.len() == 3));
    }

    #[test]
    fn matching_violates_at_singletons() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = check_expansion(&g, 1, ExpansionMode::Exhaustive).unwrap();
        match r.outcome {
            ExpansionOutcome::ViolatingSet(x) => {
                assert_eq!(x.len(), 1);
                let xs = VertexSet::from_iter_with_capacity(4, x);
                assert!(g.outer_neighbourhood(&xs).len() < 2);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn exhaustive_refuses_large_graphs() {
        let err = check_expansion(&Graph::empty(21), 1, ExpansionMode::Exhaustive).unwrap_err();
        assert_eq!(err, DetectorError::TooLargeForExhaustive { n: 21, limit: 20 });
    }

    #[test]
    fn rotation_mode_finds_star_violation() {
        let g = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        let r = check_expansion(&g, 2, ExpansionMode::Rotation { seed: 4 }).unwrap();
        assert!(matches!(r.outcome, ExpansionOutcome::ViolatingSet(_)));
    }

    #[test]
    fn guarantee_on_k6() {
        let rep = posa_guarantee_check(&Graph::complete(6), 2, u64::MAX).unwrap();
        assert_eq!(rep.status, GuaranteeStatus::Confirmed);
        assert_eq!(rep.target_length, 5);
    }

    #[test]
    fn guarantee_vacuous_when_hypothesis_fails() {
        let rep = posa_guarantee_check(&Graph::empty(5), 1, u64::MAX).unwrap();
        assert_eq!(rep.status, GuaranteeStatus::HypothesisFails);
        assert!(rep.path.is_none());
    }
}
