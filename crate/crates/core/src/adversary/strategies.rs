use std::collections::BTreeMap;

use super::{AdversaryError, AdversaryResult, Strategy, VerificationMode};
use crate::bitset::VertexSet;
use crate::detectors::enumerate_cliques;
use crate::graph::{Colour, Graph, TwoColouring};

/// Colours a small set of edges meeting every `K_{r+1}` red and the rest blue.
///
/// The red set is chosen greedily: repeatedly take the edge lying in the most
/// not-yet-hit copies, lowest edge first on ties. No blue `K_{r+1}` survives
/// by construction; with fewer than `n` red edges there is no red `P_n`
/// either, and the detectors confirm both in any case.
pub fn strategy_hitting_set(graph: &Graph, r: usize, n: usize, mode: VerificationMode) -> AdversaryResult {
    let copies = enumerate_cliques(graph, r + 1);
    let mut edge_copies: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, c) in copies.iter().enumerate() {
        for (a, &u) in c.iter().enumerate() {
            for &v in &c[a + 1..] {
                edge_copies.entry((u, v)).or_default().push(i);
            }
        }
    }
    let mut hit = vec![false; copies.len()];
    let mut remaining = copies.len();
    let mut red = Vec::new();
    while remaining > 0 {
        let (&edge, _) = edge_copies
            .iter()
            .map(|(e, cs)| (e, cs.iter().filter(|&&c| !hit[c]).count()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(a.0)))
            .expect("an unhit copy has edges");
        for &c in &edge_copies[&edge] {
            if !hit[c] {
                hit[c] = true;
                remaining -= 1;
            }
        }
        edge_copies.remove(&edge);
        red.push(edge);
    }
    let colouring = TwoColouring::from_red_edges(graph, red).expect("hitting edges lie in the graph");
    AdversaryResult::checked(
        Strategy::HittingSet,
        colouring,
        None,
        r,
        n,
        mode,
        vec![("clique_copies", copies.len())],
    )
}

fn check_vertex_count(graph: &Graph, r: usize, n: usize, t: usize) -> Result<(), AdversaryError> {
    let expected = r * n + t;
    if graph.num_vertices() != expected {
        return Err(AdversaryError::WrongVertexCount {
            expected,
            actual: graph.num_vertices(),
        });
    }
    Ok(())
}

/// `X`: neighbours of the first `t` vertices lying outside them.
pub fn boundary_set(graph: &Graph, t: usize) -> VertexSet {
    let a0 = VertexSet::from_iter_with_capacity(graph.num_vertices(), 0..t);
    graph.outer_neighbourhood(&a0)
}

/// Parts `A_0 = {0..t}`, `A_1 ⊇ forced`, then `A_2, ..., A_r` filled in label
/// order, each of size `n`.
fn build_parts(total: usize, r: usize, n: usize, t: usize, forced: &VertexSet) -> Vec<Vec<usize>> {
    let mut parts = vec![(0..t).collect::<Vec<_>>()];
    let mut a1: Vec<usize> = forced.to_vec();
    let mut rest = (t..total).filter(|v| !forced.contains(*v));
    while a1.len() < n {
        a1.push(rest.next().expect("vertex count is r*n + t"));
    }
    a1.sort_unstable();
    parts.push(a1);
    let rest: Vec<usize> = rest.collect();
    for chunk in rest.chunks(n) {
        parts.push(chunk.to_vec());
    }
    debug_assert_eq!(parts.len(), r + 1);
    parts
}

/// Red inside parts, blue across.
fn partition_colouring(graph: &Graph, parts: &[Vec<usize>]) -> TwoColouring {
    let mut part_of = vec![usize::MAX; graph.num_vertices()];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            part_of[v] = i;
        }
    }
    TwoColouring::from_fn(graph, |u, v| {
        if part_of[u] == part_of[v] {
            Colour::Red
        } else {
            Colour::Blue
        }
    })
}

/// Partition colouring whose first part `A_0` (the first `t` vertices) only
/// has neighbours in `A_1`.
///
/// `X = N(A_0) \ A_0` goes into `A_1`; if `|X| > n` that is impossible and the
/// strategy fails. Parts hold at most `n` vertices each, so no red `P_n`; a
/// blue `K_{r+1}` would need a vertex in every part, but `A_0` and `A_2` are
/// not joined.
pub fn strategy_boundary(
    graph: &Graph,
    r: usize,
    n: usize,
    t: usize,
    mode: VerificationMode,
) -> Result<AdversaryResult, AdversaryError> {
    check_vertex_count(graph, r, n, t)?;
    let x = boundary_set(graph, t);
    let stats = vec![("boundary", x.len())];
    if x.len() > n {
        return Ok(AdversaryResult::failed(
            Strategy::BoundaryPartition,
            format!("boundary too large: |X| = {} > n = {n}", x.len()),
            stats,
        ));
    }
    let parts = build_parts(graph.num_vertices(), r, n, t, &x);
    let colouring = partition_colouring(graph, &parts);
    Ok(AdversaryResult::checked(
        Strategy::BoundaryPartition,
        colouring,
        Some(parts),
        r,
        n,
        mode,
        stats,
    ))
}

/// Every `K_{r+1}` with exactly one vertex among the first `t`, each sorted.
pub fn pinned_clique_copies(graph: &Graph, r: usize, t: usize) -> Vec<Vec<usize>> {
    let n = graph.num_vertices();
    let a0 = VertexSet::from_iter_with_capacity(n, 0..t.min(n));
    let mut out = Vec::new();
    for v in 0..t.min(n) {
        let outside = graph.neighbours(v).difference(&a0);
        // restricted graphs keep labels, so cliques come back in original labels
        let local = graph.restricted_to(&outside);
        for c in enumerate_cliques(&local, r) {
            if c.iter().all(|&u| outside.contains(u)) {
                let mut copy = c;
                copy.push(v);
                copy.sort_unstable();
                out.push(copy);
            }
        }
    }
    out
}

/// Partition colouring where every `K_{r+1}` with exactly one vertex in `A_0`
/// lies inside `A_0 ∪ A_1`.
///
/// `W` = the non-`A_0` vertices of those copies goes into `A_1`; `|W| > n`
/// fails. A blue `K_{r+1}` needs one vertex per part, hence exactly one in
/// `A_0`, but every such copy has its other vertices in `A_1`.
pub fn strategy_pinned_cliques(
    graph: &Graph,
    r: usize,
    n: usize,
    t: usize,
    mode: VerificationMode,
) -> Result<AdversaryResult, AdversaryError> {
    check_vertex_count(graph, r, n, t)?;
    let copies = pinned_clique_copies(graph, r, t);
    let mut w = VertexSet::new(graph.num_vertices());
    for c in &copies {
        for &v in c.iter().filter(|&&v| v >= t) {
            w.insert(v);
        }
    }
    let stats = vec![("pinned_copies", copies.len()), ("pinned_span", w.len())];
    if w.len() > n {
        return Ok(AdversaryResult::failed(
            Strategy::PinnedCliquePartition,
            format!("pinned copies span {} > n = {n} vertices", w.len()),
            stats,
        ));
    }
    let parts = build_parts(graph.num_vertices(), r, n, t, &w);
    let colouring = partition_colouring(graph, &parts);
    Ok(AdversaryResult::checked(
        Strategy::PinnedCliquePartition,
        colouring,
        Some(parts),
        r,
        n,
        mode,
        stats,
    ))
}
