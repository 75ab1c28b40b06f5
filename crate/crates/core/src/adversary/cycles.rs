use std::collections::VecDeque;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::detectors::{posa_search, POSA_RESTARTS};
use crate::graph::{Graph, TwoColouring};

/// Fewer than `r` long red cycles were found; the ones that were are kept.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("found {} of the requested long red cycles", found.len())]
pub struct CycleSearchFailure {
    pub found: Vec<Vec<usize>>,
}

const ATTEMPTS: u64 = 4;

/// Looks for `r` vertex-disjoint red cycles with at least `min_length` edges
/// each. A cycle is returned as its vertex sequence; consecutive vertices and
/// the last and first are joined by red edges.
///
/// Each round takes the longest path rotation–extension finds in the
/// remaining red graph, then rotates it looking for a closing edge that cuts
/// off a long enough cycle, preferring the shortest such cycle so that more
/// vertices stay available. The found cycle's vertices are removed before
/// the next round. Success is a certificate; failure proves nothing.
pub fn find_long_red_cycles(
    colouring: &TwoColouring,
    r: usize,
    min_length: usize,
    seed: u64,
) -> Result<Vec<Vec<usize>>, CycleSearchFailure> {
    let min_length = min_length.max(3);
    let red = colouring.red();
    let mut remaining = red.vertex_set();
    let mut found = Vec::new();
    while found.len() < r {
        let graph = red.restricted_to(&remaining);
        let cycle = (0..ATTEMPTS).find_map(|a| {
            let s = seed.wrapping_add(a).wrapping_add((found.len() as u64) << 32);
            long_cycle(&graph, min_length, s)
        });
        match cycle {
            Some(c) => {
                debug_assert!(graph.is_cycle(&c));
                for &v in &c {
                    remaining.remove(v);
                }
                found.push(c);
            }
            None => return Err(CycleSearchFailure { found }),
        }
    }
    Ok(found)
}

fn long_cycle(graph: &Graph, min_length: usize, seed: u64) -> Option<Vec<usize>> {
    let n = graph.num_vertices();
    let path = posa_search(graph, n.saturating_sub(1), seed, POSA_RESTARTS).best;
    if path.len() < min_length {
        return None;
    }
    let cap = 4 * n;
    let mut seen = VertexSet::new(n);
    let mut queue = VecDeque::from([path]);
    let mut best: Option<Vec<usize>> = None;
    let mut explored = 0;
    while let Some(p) = queue.pop_front() {
        explored += 1;
        if let Some(c) = close_cycle(graph, &p, min_length) {
            if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                best = Some(c);
            }
        }
        if explored >= cap {
            break;
        }
        let k = p.len() - 1;
        let end = p[k];
        if !seen.insert(end) {
            continue;
        }
        for i in 0..k.saturating_sub(1) {
            if graph.has_edge(end, p[i]) {
                let mut q = p[..=i].to_vec();
                q.extend(p[i + 1..].iter().rev());
                queue.push_back(q);
            }
        }
    }
    best
}

/// Shortest cycle with at least `min_length` edges closed by an edge from
/// either endpoint back into the path.
fn close_cycle(graph: &Graph, path: &[usize], min_length: usize) -> Option<Vec<usize>> {
    let k = path.len() - 1;
    let mut best: Option<(usize, usize, bool)> = None;
    for i in 0..path.len() {
        // from the far endpoint back to position i: k - i + 1 edges
        if k >= i + 2 && k - i + 1 >= min_length && graph.has_edge(path[k], path[i]) {
            let len = k - i + 1;
            if best.is_none_or(|b| len < b.0) {
                best = Some((len, i, true));
            }
        }
        // from the near endpoint forward to position i: i + 1 edges
        if i >= 2 && i + 1 >= min_length && graph.has_edge(path[0], path[i]) {
            let len = i + 1;
            if best.is_none_or(|b| len < b.0) {
                best = Some((len, i, false));
            }
        }
    }
    best.map(|(_, i, tail)| if tail { path[i..].to_vec() } else { path[..=i].to_vec() })
}
