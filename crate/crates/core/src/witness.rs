//! Certificates returned by the searches and their text form.
//!
//! Text lines: `PATH v0 v1 ... vL`, `CLIQUE v0 ... vk`, `SETS A: ... B: ...`
//! for a separated pair, `SETS A1: ... A2: ...` for a family of sets, and
//! `PARTITION A0: ... A1: ...` for a partition indexed from zero.

use std::fmt;
use std::time::Duration;

use crate::bitset::VertexSet;
use crate::graph::{Graph, TwoColouring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A path, listed vertex by vertex.
    Path(Vec<usize>),
    Clique(Vec<usize>),
    SeparatedSets {
        a: Vec<usize>,
        b: Vec<usize>,
    },
    /// Disjoint sets `A1, A2, ...`.
    Sets(Vec<Vec<usize>>),
    /// Parts `A0, A1, ...` covering the vertex set.
    Partition(Vec<Vec<usize>>),
    Colouring(TwoColouring),
}

impl Witness {
    /// Re-checks the certificate against `graph` from scratch.
    ///
    /// Paths and cliques need adjacency and distinctness; separated sets need
    /// disjointness and no edge between them. Set families and partitions
    /// only need disjointness here (colour conditions are checked by their
    /// producers); colourings need to colour exactly the edges of `graph`.
    pub fn verify(&self, graph: &Graph) -> bool {
        let n = graph.num_vertices();
        match self {
            Witness::Path(p) => graph.is_path(p),
            Witness::Clique(c) => graph.is_clique(c),
            Witness::SeparatedSets { a, b } => {
                let Some(sets) = disjoint_sets(n, [a, b]) else {
                    return false;
                };
                graph.edges_between(&sets[0], &sets[1]) == 0
            }
            Witness::Sets(sets) => disjoint_sets(n, sets.iter()).is_some(),
            Witness::Partition(parts) => disjoint_sets(n, parts.iter())
                .map(|s| s.iter().map(VertexSet::len).sum::<usize>() == n)
                .unwrap_or(false),
            Witness::Colouring(c) => c.base() == *graph,
        }
    }

    /// Number of edges of a path witness.
    pub fn path_edges(&self) -> Option<usize> {
        match self {
            Witness::Path(p) => Some(p.len().saturating_sub(1)),
            _ => None,
        }
    }
}

fn disjoint_sets<'a, I>(n: usize, sets: I) -> Option<Vec<VertexSet>>
where
    I: IntoIterator<Item = &'a Vec<usize>>,
{
    let mut all = VertexSet::new(n);
    let mut out = Vec::new();
    for set in sets {
        let mut s = VertexSet::new(n);
        for &v in set {
            if v >= n || !all.insert(v) {
                return None;
            }
            s.insert(v);
        }
        out.push(s);
    }
    Some(out)
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for v in items {
        write!(f, " {v}")?;
    }
    Ok(())
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Path(p) => {
                f.write_str("PATH")?;
                write_list(f, p)
            }
            Witness::Clique(c) => {
                f.write_str("CLIQUE")?;
                write_list(f, c)
            }
            Witness::SeparatedSets { a, b } => {
                f.write_str("SETS A:")?;
                write_list(f, a)?;
                f.write_str(" B:")?;
                write_list(f, b)
            }
            Witness::Sets(sets) => {
                f.write_str("SETS")?;
                for (i, s) in sets.iter().enumerate() {
                    write!(f, " A{}:", i + 1)?;
                    write_list(f, s)?;
                }
                Ok(())
            }
            Witness::Partition(parts) => {
                f.write_str("PARTITION")?;
                for (i, s) in parts.iter().enumerate() {
                    write!(f, " A{i}:")?;
                    write_list(f, s)?;
                }
                Ok(())
            }
            Witness::Colouring(c) => {
                write!(f, "COLOURING red={} blue={}", c.red().num_edges(), c.blue().num_edges())
            }
        }
    }
}

/// Parses the single-line text forms (everything except colourings).
pub fn parse_witness(line: &str) -> Result<Witness, String> {
    let mut tokens = line.split_whitespace();
    let tag = tokens.next().ok_or("empty witness line")?;
    let rest: Vec<&str> = tokens.collect();
    let nums = |toks: &[&str]| -> Result<Vec<usize>, String> {
        toks.iter()
            .map(|t| t.parse::<usize>().map_err(|_| format!("bad vertex {t:?}")))
            .collect()
    };
    match tag {
        "PATH" => Ok(Witness::Path(nums(&rest)?)),
        "CLIQUE" => Ok(Witness::Clique(nums(&rest)?)),
        "SETS" | "PARTITION" => {
            let mut labels = Vec::new();
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for tok in rest {
                if let Some(label) = tok.strip_suffix(':') {
                    labels.push(label.to_string());
                    groups.push(Vec::new());
                } else {
                    let v = tok.parse().map_err(|_| format!("bad vertex {tok:?}"))?;
                    groups.last_mut().ok_or("vertex before first set label")?.push(v);
                }
            }
            if tag == "PARTITION" {
                return Ok(Witness::Partition(groups));
            }
            if labels == ["A", "B"] {
                let mut it = groups.into_iter();
                let a = it.next().unwrap_or_default();
                let b = it.next().unwrap_or_default();
                Ok(Witness::SeparatedSets { a, b })
            } else {
                Ok(Witness::Sets(groups))
            }
        }
        other => Err(format!("unknown witness tag {other:?}")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A certificate that re-verifies against the searched graph.
    Found(Witness),
    /// Complete search ran to the end without a witness.
    ExhaustivelyRefuted,
    /// An incomplete search gave up; says nothing about existence.
    HeuristicallyNotFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchVerdict {
    pub outcome: SearchOutcome,
    pub elapsed: Duration,
    pub nodes_explored: u64,
}

impl SearchVerdict {
    pub fn is_found(&self) -> bool {
        matches!(self.outcome, SearchOutcome::Found(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.outcome, SearchOutcome::ExhaustivelyRefuted)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}
