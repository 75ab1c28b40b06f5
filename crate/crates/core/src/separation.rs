//! Depth-first separation: a graph with no long path has two large vertex
//! sets with no edges between them, and iterating this on the red graph of a
//! colouring yields `r + 1` sets with only blue edges between them.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Colour, Graph, TwoColouring};
use crate::witness::Witness;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeparationError {
    #[error("cannot split {available} vertices into sets of {a} and {b}")]
    InfeasibleSizes { a: usize, b: usize, available: usize },
    #[error("set sizes must be positive (a = {a}, b = {b})")]
    EmptySide { a: usize, b: usize },
    #[error("no long path met, but only {finished} finished vertices for a set of {a} (deficit {deficit})")]
    HypothesisViolated { a: usize, finished: usize, deficit: usize },
    #[error("graph has {actual} vertices, expected r*n + (r+1)*t = {expected}")]
    WrongVertexCount { expected: usize, actual: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("internal invariant failed: {0}")]
    InternalInvariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparationOutcome {
    /// A path with exactly the requested number of edges.
    LongPath(Vec<usize>),
    /// Disjoint sets with no edge between them.
    Split { a: Vec<usize>, b: Vec<usize> },
}

impl SeparationOutcome {
    pub fn to_witness(&self) -> Witness {
        match self {
            SeparationOutcome::LongPath(p) => Witness::Path(p.clone()),
            SeparationOutcome::Split { a, b } => Witness::SeparatedSets {
                a: a.clone(),
                b: b.clone(),
            },
        }
    }
}

/// [`dfs_separate_within`] over the whole vertex set.
pub fn dfs_separate(
    graph: &Graph,
    a: usize,
    b: usize,
    path_bound: usize,
) -> Result<SeparationOutcome, SeparationError> {
    dfs_separate_within(graph, &graph.vertex_set(), a, b, path_bound)
}

/// Runs a DFS over the subgraph induced by `within`, tracking unexplored
/// vertices `U`, the active stack `S` and finished vertices `F`; no edge ever
/// joins `F` and `U`.
///
/// Roots are the lowest unexplored label and children are taken in label
/// order. The stack is always a path, so as soon as it holds
/// `path_bound + 1` vertices that path is returned. Otherwise, the first time
/// `|U| = b` the split `A` = the first `a` finished vertices (finishing
/// order), `B = U` is returned. If fewer than `a` vertices are finished at
/// that moment the caller's hypothesis (no path with `|W| - a - b` edges)
/// was false.
pub fn dfs_separate_within(
    graph: &Graph,
    within: &VertexSet,
    a: usize,
    b: usize,
    path_bound: usize,
) -> Result<SeparationOutcome, SeparationError> {
    let available = within.len();
    if a == 0 || b == 0 {
        return Err(SeparationError::EmptySide { a, b });
    }
    if a + b > available {
        return Err(SeparationError::InfeasibleSizes { a, b, available });
    }

    let mut unexplored = within.clone();
    let mut stack: Vec<usize> = Vec::new();
    let mut finished: Vec<usize> = Vec::new();

    loop {
        let next = match stack.last() {
            None => unexplored.first(),
            Some(&top) => graph.neighbours(top).intersection(&unexplored).first(),
        };
        match next {
            Some(v) => {
                unexplored.remove(v);
                stack.push(v);
                if stack.len() > path_bound {
                    let path = stack[stack.len() - path_bound - 1..].to_vec();
                    debug_assert!(graph.is_path(&path));
                    return Ok(SeparationOutcome::LongPath(path));
                }
                if unexplored.len() == b {
                    if finished.len() < a {
                        return Err(SeparationError::HypothesisViolated {
                            a,
                            finished: finished.len(),
                            deficit: a - finished.len(),
                        });
                    }
                    return Ok(SeparationOutcome::Split {
                        a: finished[..a].to_vec(),
                        b: unexplored.to_vec(),
                    });
                }
            }
            None => {
                let v = stack
                    .pop()
                    .expect("a + b <= |within| means U empties only after the split");
                finished.push(v);
                debug_assert!(
                    finished.iter().all(|&f| graph.neighbours(f).is_disjoint(&unexplored)),
                    "edge between finished and unexplored vertices"
                );
            }
        }
    }
}

/// `r + 1` disjoint `t`-sets with every edge between two of them blue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakPartiteWitness {
    pub sets: Vec<Vec<usize>>,
}

impl WeakPartiteWitness {
    /// Checks sizes, disjointness and that every cross edge is blue.
    pub fn verify(&self, colouring: &TwoColouring, t: usize) -> bool {
        let n = colouring.num_vertices();
        if !Witness::Sets(self.sets.clone()).verify(&Graph::empty(n)) {
            return false;
        }
        if self.sets.iter().any(|s| s.len() != t) {
            return false;
        }
        self.sets.iter().enumerate().all(|(i, si)| {
            self.sets[i + 1..].iter().all(|sj| {
                si.iter()
                    .all(|&u| sj.iter().all(|&v| colouring.colour(u, v) != Some(Colour::Red)))
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartiteOutcome {
    /// A red path with exactly `n` edges.
    RedPath(Vec<usize>),
    WeakPartite(WeakPartiteWitness),
}

impl PartiteOutcome {
    pub fn to_witness(&self) -> Witness {
        match self {
            PartiteOutcome::RedPath(p) => Witness::Path(p.clone()),
            PartiteOutcome::WeakPartite(w) => Witness::Sets(w.sets.clone()),
        }
    }
}

/// Finds a red path with `n` edges or `r + 1` sets of size `t` pairwise joined
/// only by blue edges, in a colouring of a graph on `rn + (r+1)t` vertices.
///
/// Round `s = 1..=r` separates the red graph on the working set `W_s`
/// (`(r-s+1)n + (r-s+2)t` vertices) into `A_s` of size `t` and
/// `W_{s+1}` of size `(r-s)n + (r-s+1)t`; the last working set is
/// `A_{r+1}`. Since `|W_s| - t - |W_{s+1}| = n`, a round can only fail to
/// split by exhibiting a red `P_n`.
pub fn decompose_blue_partite(
    colouring: &TwoColouring,
    r: usize,
    n: usize,
    t: usize,
) -> Result<PartiteOutcome, SeparationError> {
    if r < 1 || n < 1 || t < 1 {
        return Err(SeparationError::InvalidParameters(format!(
            "need r, n, t >= 1 (got r = {r}, n = {n}, t = {t})"
        )));
    }
    let expected = r * n + (r + 1) * t;
    let actual = colouring.num_vertices();
    if actual != expected {
        return Err(SeparationError::WrongVertexCount { expected, actual });
    }
    let red = colouring.red();
    let mut working = VertexSet::full(actual);
    let mut sets = Vec::with_capacity(r + 1);
    for s in 1..=r {
        let b = (r - s) * n + (r - s + 1) * t;
        debug_assert_eq!(working.len(), (r - s + 1) * n + (r - s + 2) * t);
        match dfs_separate_within(red, &working, t, b, n) {
            Ok(SeparationOutcome::LongPath(p)) => return Ok(PartiteOutcome::RedPath(p)),
            Ok(SeparationOutcome::Split { a, b: rest }) => {
                if rest.len() != b {
                    return Err(SeparationError::InternalInvariant(format!(
                        "round {s}: working set has {} vertices, expected {b}",
                        rest.len()
                    )));
                }
                sets.push(a);
                working = VertexSet::from_iter_with_capacity(actual, rest);
            }
            Err(SeparationError::HypothesisViolated { deficit, .. }) => {
                return Err(SeparationError::InternalInvariant(format!(
                    "round {s}: split short by {deficit} vertices without a red path"
                )))
            }
            Err(e) => return Err(SeparationError::InternalInvariant(format!("round {s}: {e}"))),
        }
    }
    sets.push(working.to_vec());
    Ok(PartiteOutcome::WeakPartite(WeakPartiteWitness { sets }))
}
