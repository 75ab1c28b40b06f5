use std::time::Instant;

use super::DetectorError;
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::witness::{SearchOutcome, SearchVerdict, Witness};

/// Looks for `k` pairwise-adjacent vertices.
///
/// Bron–Kerbosch with Tomita pivoting, cut off as soon as the current clique
/// reaches `k` and pruned whenever `|R| + |P| < k`. The pivot maximises
/// `|P ∩ N(u)|`, ties to the lowest label. Always complete.
pub fn find_clique(graph: &Graph, k: usize) -> SearchVerdict {
    assert!(k >= 1, "clique size must be positive");
    let start = Instant::now();
    let n = graph.num_vertices();
    let mut nodes = 0;

    // Vertices of degree < k - 1 cannot be in a k-clique.
    let candidates = VertexSet::from_iter_with_capacity(n, (0..n).filter(|&v| graph.degree(v) + 1 >= k));
    let mut r = Vec::with_capacity(k);
    let found = expand(graph, k, &mut r, candidates, VertexSet::new(n), &mut nodes);

    let outcome = if found {
        r.truncate(k);
        r.sort_unstable();
        debug_assert!(graph.is_clique(&r));
        SearchOutcome::Found(Witness::Clique(r))
    } else {
        SearchOutcome::ExhaustivelyRefuted
    };
    SearchVerdict {
        outcome,
        elapsed: start.elapsed(),
        nodes_explored: nodes,
    }
}

fn expand(graph: &Graph, k: usize, r: &mut Vec<usize>, mut p: VertexSet, mut x: VertexSet, nodes: &mut u64) -> bool {
    *nodes += 1;
    if r.len() >= k {
        return true;
    }
    if r.len() + p.len() < k || p.is_empty() {
        return false;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .map(|u| (graph.degree_into(u, &p), u))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(_, u)| u)
        .expect("P is nonempty");
    let branch = p.difference(graph.neighbours(pivot));
    for v in branch.iter() {
        r.push(v);
        let np = p.intersection(graph.neighbours(v));
        let nx = x.intersection(graph.neighbours(v));
        if expand(graph, k, r, np, nx, nodes) {
            return true;
        }
        r.pop();
        p.remove(v);
        x.insert(v);
        if r.len() + p.len() < k {
            return false;
        }
    }
    false
}

/// Every `k`-clique, each sorted, in lexicographic order.
pub fn enumerate_cliques(graph: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_clique(graph, k, |c| out.push(c.to_vec()));
    out
}

pub fn count_cliques(graph: &Graph, k: usize) -> usize {
    let mut count = 0;
    for_each_clique(graph, k, |_| count += 1);
    count
}

fn for_each_clique(graph: &Graph, k: usize, mut f: impl FnMut(&[usize])) {
    let n = graph.num_vertices();
    if k == 0 {
        return;
    }
    let mut current = Vec::with_capacity(k);
    for v in 0..n {
        let mut later = graph.neighbours(v).clone();
        for u in 0..=v {
            later.remove(u);
        }
        current.push(v);
        grow(graph, k, &mut current, later, &mut f);
        current.pop();
    }
}

fn grow(graph: &Graph, k: usize, current: &mut Vec<usize>, cands: VertexSet, f: &mut impl FnMut(&[usize])) {
    if current.len() == k {
        f(current);
        return;
    }
    if current.len() + cands.len() < k {
        return;
    }
    for v in cands.iter() {
        let mut next = cands.intersection(graph.neighbours(v));
        // only extend upwards so each clique appears once
        for u in cands.iter().take_while(|&u| u <= v) {
            next.remove(u);
        }
        current.push(v);
        grow(graph, k, current, next, f);
        current.pop();
    }
}

/// Looks for a clique with exactly one vertex in each of the given sets.
///
/// Backtracking over the sets in increasing size order, carrying the common
/// neighbourhood of the chosen vertices and failing early when some later
/// set has no candidate left.
pub fn find_transversal_clique(graph: &Graph, sets: &[Vec<usize>]) -> Result<SearchVerdict, DetectorError> {
    let start = Instant::now();
    let n = graph.num_vertices();
    if sets.len() < 2 {
        return Err(DetectorError::TooFewSets(sets.len()));
    }
    let mut seen = VertexSet::new(n);
    let mut bitsets = Vec::with_capacity(sets.len());
    for set in sets {
        let mut s = VertexSet::new(n);
        for &v in set {
            if !seen.insert(v) {
                return Err(DetectorError::OverlappingSets(v));
            }
            s.insert(v);
        }
        bitsets.push(s);
    }
    bitsets.sort_by_key(VertexSet::len);

    let mut nodes = 0;
    let mut chosen = Vec::with_capacity(sets.len());
    let found = transversal(graph, &bitsets, 0, VertexSet::full(n), &mut chosen, &mut nodes);
    let outcome = if found {
        debug_assert!(graph.is_clique(&chosen));
        // report in the caller's set order
        let ordered = sets
            .iter()
            .map(|s| *chosen.iter().find(|v| s.contains(v)).expect("one per set"))
            .collect();
        SearchOutcome::Found(Witness::Clique(ordered))
    } else {
        SearchOutcome::ExhaustivelyRefuted
    };
    Ok(SearchVerdict {
        outcome,
        elapsed: start.elapsed(),
        nodes_explored: nodes,
    })
}

fn transversal(
    graph: &Graph,
    sets: &[VertexSet],
    i: usize,
    common: VertexSet,
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
) -> bool {
    *nodes += 1;
    if i == sets.len() {
        return true;
    }
    let cands = sets[i].intersection(&common);
    for v in cands.iter() {
        let next = common.intersection(graph.neighbours(v));
        if sets[i + 1..].iter().any(|s| s.is_disjoint(&next)) {
            continue;
        }
        chosen.push(v);
        if transversal(graph, sets, i + 1, next, chosen, nodes) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_has_no_triangle() {
        assert!(find_clique(&Graph::cycle(5), 3).is_refuted());
    }

    #[test]
    fn k4_contains_itself() {
        let v = find_clique(&Graph::complete(4), 4);
        assert_eq!(v.witness(), Some(&Witness::Clique(vec![0, 1, 2, 3])));
    }

    #[test]
    fn small_sizes() {
        assert!(find_clique(&Graph::empty(3), 1).is_found());
        assert!(find_clique(&Graph::empty(3), 2).is_refuted());
        assert!(find_clique(&Graph::empty(0), 1).is_refuted());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count_cliques(&Graph::complete(5), 3), 10);
        assert_eq!(count_cliques(&Graph::complete(6), 4), 15);
        assert_eq!(enumerate_cliques(&Graph::complete(4), 3)[0], vec![0, 1, 2]);
        assert_eq!(count_cliques(&Graph::cycle(5), 3), 0);
    }

    #[test]
    fn transversal_in_complete_tripartite() {
        let sides = [vec![0, 1], vec![2, 3], vec![4, 5]];
        let mut edges = vec![];
        for (i, a) in sides.iter().enumerate() {
            for b in &sides[i + 1..] {
                for &u in a {
                    for &v in b {
                        edges.push((u, v));
                    }
                }
            }
        }
        let g = Graph::from_edges(6, edges).unwrap();
        let v = find_transversal_clique(&g, &sides).unwrap();
        let w = v.witness().unwrap();
        assert!(w.verify(&g));
        assert!(find_transversal_clique(&Graph::empty(6), &sides).unwrap().is_refuted());
    }

    #[test]
    fn transversal_input_errors() {
        let g = Graph::complete(4);
        assert_eq!(
            find_transversal_clique(&g, &[vec![0, 1], vec![1, 2]]).unwrap_err(),
            DetectorError::OverlappingSets(1)
        );
        assert_eq!(
            find_transversal_clique(&g, &[vec![0]]).unwrap_err(),
            DetectorError::TooFewSets(1)
        );
    }
}
