use std::fmt;

use super::AdversaryError;
use crate::bitset::VertexSet;
use crate::graph::{Colour, TwoColouring};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifierParams {
    pub alpha: f64,
    pub gamma: f64,
    pub p: f64,
    pub n: usize,
}

impl ClassifierParams {
    pub const DEFAULT_ALPHA: f64 = 1.0 / 16.0;
    pub const DEFAULT_GAMMA: f64 = 1.0 / 1024.0;

    pub fn new(p: f64, n: usize) -> Self {
        Self {
            alpha: Self::DEFAULT_ALPHA,
            gamma: Self::DEFAULT_GAMMA,
            p,
            n,
        }
    }

    /// `alpha * p * n`: minimum degree into `B_i`.
    pub fn degree_threshold(&self) -> f64 {
        self.alpha * self.p * self.n as f64
    }

    /// `gamma * p * n`: maximum blue degree into `B_i`.
    pub fn blue_threshold(&self) -> f64 {
        self.gamma * self.p * self.n as f64
    }
}

/// Parts `A_0, A_1, ..., A_r`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructuralPartition {
    pub parts: Vec<Vec<usize>>,
    pub params: ClassifierParams,
}

impl StructuralPartition {
    /// Index of the part holding each vertex.
    pub fn part_of(&self, vertices: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; vertices];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                out[v] = i;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub partition: StructuralPartition,
    /// Vertices qualifying for two or more parts, with every qualifying
    /// index; such a vertex goes to the lowest one.
    pub conflicts: Vec<(usize, Vec<usize>)>,
}

/// Puts `v` into `A_i` when `|N(v) ∩ B_i| >= αpn` and
/// `|N_blue(v) ∩ B_i| <= γpn` for exactly one `i`, into `A_0` when no `i`
/// qualifies.
pub fn classify_by_cycles(
    colouring: &TwoColouring,
    cycles: &[Vec<usize>],
    params: ClassifierParams,
) -> Result<Classification, AdversaryError> {
    let n = colouring.num_vertices();
    let mut seen = VertexSet::new(n);
    let mut sets = Vec::with_capacity(cycles.len());
    for cycle in cycles {
        let mut s = VertexSet::new(n);
        for &v in cycle {
            if v >= n {
                return Err(AdversaryError::InvalidParameters(format!("vertex {v} out of range")));
            }
            if seen.contains(v) {
                return Err(AdversaryError::OverlappingSets(v));
            }
            seen.insert(v);
            s.insert(v);
        }
        sets.push(s);
    }
    let lo = params.degree_threshold();
    let hi = params.blue_threshold();
    let mut parts = vec![Vec::new(); cycles.len() + 1];
    let mut conflicts = Vec::new();
    for v in 0..n {
        let qualifying: Vec<usize> = sets
            .iter()
            .enumerate()
            .filter(|(_, b)| {
                let blue = colouring.blue().degree_into(v, b);
                let all = blue + colouring.red().degree_into(v, b);
                all as f64 >= lo && blue as f64 <= hi
            })
            .map(|(i, _)| i + 1)
            .collect();
        match qualifying.as_slice() {
            [] => parts[0].push(v),
            [i] => parts[*i].push(v),
            [first, ..] => {
                parts[*first].push(v);
                conflicts.push((v, qualifying.clone()));
            }
        }
    }
    Ok(Classification {
        partition: StructuralPartition { parts, params },
        conflicts,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum PartitionViolation {
    /// The parts do not partition the vertex set.
    NotAPartition(String),
    ExceptionalTooLarge {
        size: usize,
        bound: f64,
    },
    PartTooLarge {
        part: usize,
        size: usize,
        n: usize,
    },
    RedCrossEdge {
        u: usize,
        v: usize,
        parts: (usize, usize),
    },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionViolation::NotAPartition(msg) => write!(f, "not a partition: {msg}"),
            PartitionViolation::ExceptionalTooLarge { size, bound } => {
                write!(f, "|A_0| = {size} exceeds C/p = {bound:.3}")
            }
            PartitionViolation::PartTooLarge { part, size, n } => write!(f, "|A_{part}| = {size} exceeds n = {n}"),
            PartitionViolation::RedCrossEdge { u, v, parts } => {
                write!(f, "red edge {u} {v} between A_{} and A_{}", parts.0, parts.1)
            }
        }
    }
}

/// Checks `|A_0| <= C/p`, `|A_i| <= n` and that every edge between two of
/// `A_1, ..., A_r` is blue. An empty list means the partition is valid.
pub fn verify_structural_partition(
    colouring: &TwoColouring,
    parts: &[Vec<usize>],
    c_const: f64,
    p: f64,
    n: usize,
) -> Vec<PartitionViolation> {
    let vertices = colouring.num_vertices();
    let mut out = Vec::new();
    let mut part_of = vec![usize::MAX; vertices];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            if v >= vertices {
                out.push(PartitionViolation::NotAPartition(format!("vertex {v} out of range")));
            } else if part_of[v] != usize::MAX {
                out.push(PartitionViolation::NotAPartition(format!("vertex {v} in two parts")));
            } else {
                part_of[v] = i;
            }
        }
    }
    if let Some(v) = part_of.iter().position(|&i| i == usize::MAX) {
        out.push(PartitionViolation::NotAPartition(format!("vertex {v} in no part")));
    }
    if !out.is_empty() {
        return out;
    }
    let bound = c_const / p;
    let a0 = parts.first().map_or(0, Vec::len);
    if a0 as f64 > bound {
        out.push(PartitionViolation::ExceptionalTooLarge { size: a0, bound });
    }
    for (i, part) in parts.iter().enumerate().skip(1) {
        if part.len() > n {
            out.push(PartitionViolation::PartTooLarge {
                part: i,
                size: part.len(),
                n,
            });
        }
    }
    for (u, v, colour) in colouring.coloured_edges() {
        let (i, j) = (part_of[u], part_of[v]);
        if colour == Colour::Red && i != j && i != 0 && j != 0 {
            out.push(PartitionViolation::RedCrossEdge {
                u,
                v,
                parts: (i.min(j), i.max(j)),
            });
        }
    }
    out
}
