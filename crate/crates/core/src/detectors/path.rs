use std::time::Instant;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::witness::{SearchOutcome, SearchVerdict, Witness};

/// Components up to this many vertices can be settled by the subset DP.
pub const SUBSET_DP_LIMIT: usize = 20;

/// Looks for a path with exactly `length` edges.
///
/// Components with at most `length` vertices or fewer than `length` edges are
/// skipped outright. Within a component, a DFS over simple paths prunes any
/// branch whose endpoint cannot reach enough unvisited vertices to finish.
/// When the node budget runs out inside a component of at most
/// [`SUBSET_DP_LIMIT`] vertices the component is settled by the subset DP
/// instead; larger components left unfinished make the verdict
/// `HeuristicallyNotFound`.
pub fn find_path_exact(graph: &Graph, length: usize, budget: u64) -> SearchVerdict {
    let start = Instant::now();
    let n = graph.num_vertices();
    let mut nodes = 0u64;
    let mut incomplete = false;

    let finish = |outcome, nodes| SearchVerdict {
        outcome,
        elapsed: start.elapsed(),
        nodes_explored: nodes,
    };

    if length == 0 {
        let outcome = if n > 0 {
            SearchOutcome::Found(Witness::Path(vec![0]))
        } else {
            SearchOutcome::ExhaustivelyRefuted
        };
        return finish(outcome, 0);
    }

    for comp in graph.components() {
        if comp.len() <= length {
            continue;
        }
        let members = VertexSet::from_iter_with_capacity(n, comp.iter().copied());
        let comp_edges: usize = comp.iter().map(|&v| graph.degree(v)).sum::<usize>() / 2;
        if comp_edges < length {
            continue;
        }
        let remaining = budget.saturating_sub(nodes);
        let mut dfs = Dfs {
            graph,
            length,
            budget: remaining,
            nodes: 0,
            path: Vec::with_capacity(length + 1),
            on_path: VertexSet::new(n),
            members: &members,
        };
        let result = dfs.run(&comp);
        nodes += dfs.nodes;
        match result {
            DfsResult::Found(p) => return finish(SearchOutcome::Found(Witness::Path(p)), nodes),
            DfsResult::Exhausted => {}
            DfsResult::OutOfBudget => {
                if comp.len() <= SUBSET_DP_LIMIT {
                    nodes += 1 << comp.len();
                    if let Some(p) = path_via_subset_dp(graph, &comp, length) {
                        return finish(SearchOutcome::Found(Witness::Path(p)), nodes);
                    }
                } else {
                    incomplete = true;
                }
            }
        }
    }

    let outcome = if incomplete {
        SearchOutcome::HeuristicallyNotFound
    } else {
        SearchOutcome::ExhaustivelyRefuted
    };
    finish(outcome, nodes)
}

enum DfsResult {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

struct Dfs<'a> {
    graph: &'a Graph,
    length: usize,
    budget: u64,
    nodes: u64,
    path: Vec<usize>,
    on_path: VertexSet,
    members: &'a VertexSet,
}

impl Dfs<'_> {
    fn run(&mut self, comp: &[usize]) -> DfsResult {
        for &s in comp {
            self.path.push(s);
            self.on_path.insert(s);
            match self.extend() {
                Some(true) => return DfsResult::Found(std::mem::take(&mut self.path)),
                Some(false) => {}
                None => return DfsResult::OutOfBudget,
            }
            self.path.pop();
            self.on_path.remove(s);
        }
        DfsResult::Exhausted
    }

    /// `Some(true)` leaves the witness in `self.path`; `None` is budget exhaustion.
    fn extend(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let edges = self.path.len() - 1;
        if edges == self.length {
            return Some(true);
        }
        let end = *self.path.last().expect("path is nonempty");
        let need = self.length - edges;
        if self.reachable_fresh(end, need) < need {
            return Some(false);
        }
        let next = self.graph.neighbours(end).difference(&self.on_path);
        for w in next.iter() {
            self.path.push(w);
            self.on_path.insert(w);
            let r = self.extend();
            if r != Some(false) {
                return r;
            }
            self.path.pop();
            self.on_path.remove(w);
        }
        Some(false)
    }

    /// Vertices off the path reachable from `end` through off-path vertices,
    /// counting stops once `cap` is reached.
    fn reachable_fresh(&self, end: usize, cap: usize) -> usize {
        let mut allowed = self.members.difference(&self.on_path);
        let mut frontier = self.graph.neighbours(end).intersection(&allowed);
        let mut count = 0;
        while !frontier.is_empty() {
            count += frontier.len();
            if count >= cap {
                return count;
            }
            allowed.difference_with(&frontier);
            let mut next = VertexSet::new(allowed.capacity());
            for v in frontier.iter() {
                next.union_with(self.graph.neighbours(v));
            }
            next.intersect_with(&allowed);
            frontier = next;
        }
        count
    }
}

/// Subset dynamic programme over one component (at most
/// [`SUBSET_DP_LIMIT`] vertices): for every vertex subset, the set of
/// endpoints of paths covering exactly that subset. Returns a path with
/// `length` edges if one exists.
pub fn path_via_subset_dp(graph: &Graph, comp: &[usize], length: usize) -> Option<Vec<usize>> {
    let c = comp.len();
    assert!(c <= SUBSET_DP_LIMIT, "subset DP limited to {SUBSET_DP_LIMIT} vertices");
    if length + 1 > c {
        return None;
    }
    if length == 0 {
        return comp.first().map(|&v| vec![v]);
    }
    let local: Vec<u32> = comp
        .iter()
        .map(|&v| {
            comp.iter()
                .enumerate()
                .filter(|&(_, &w)| graph.has_edge(v, w))
                .fold(0u32, |m, (j, _)| m | 1 << j)
        })
        .collect();

    let mut ends = vec![0u32; 1 << c];
    for i in 0..c {
        ends[1 << i] = 1 << i;
    }
    let target = length as u32 + 1;
    for mask in 1usize..(1 << c) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        if mask.count_ones() == target {
            let last = e.trailing_zeros() as usize;
            return Some(
                reconstruct(&ends, &local, mask, last)
                    .into_iter()
                    .map(|i| comp[i])
                    .collect(),
            );
        }
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut ext = local[v] & !(mask as u32);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    None
}

fn reconstruct(ends: &[u32], adj: &[u32], mut mask: usize, mut last: usize) -> Vec<usize> {
    let mut rev = vec![last];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << last);
        let cands = ends[prev_mask] & adj[last];
        let prev = cands.trailing_zeros() as usize;
        debug_assert!(cands != 0);
        rev.push(prev);
        mask = prev_mask;
        last = prev;
    }
    rev.reverse();
    rev
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_k5() -> Graph {
        let mut edges = vec![];
        for base in [0, 5] {
            for u in 0..5 {
                for v in u + 1..5 {
                    edges.push((base + u, base + v));
                }
            }
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn disjoint_cliques_have_no_long_path() {
        assert!(find_path_exact(&two_k5(), 5, u64::MAX).is_refuted());
        assert!(find_path_exact(&two_k5(), 4, u64::MAX).is_found());
    }

    #[test]
    fn hamiltonian_path_in_k5() {
        let g = Graph::complete(5);
        let v = find_path_exact(&g, 4, u64::MAX);
        let w = v.witness().unwrap();
        assert_eq!(w.path_edges(), Some(4));
        assert!(w.verify(&g));
    }

    #[test]
    fn star_has_only_two_edge_paths() {
        let star = Graph::from_edges(10, (1..10).map(|i| (0, i))).unwrap();
        assert!(find_path_exact(&star, 2, u64::MAX).is_found());
        assert!(find_path_exact(&star, 3, u64::MAX).is_refuted());
    }

    #[test]
    fn budget_fallback_uses_dp_on_small_components() {
        let g = Graph::cycle(12);
        let v = find_path_exact(&g, 11, 1);
        assert!(v.witness().unwrap().verify(&g));
        assert!(find_path_exact(&g, 12, 1).is_refuted());
    }

    #[test]
    fn large_component_out_of_budget_is_not_a_refutation() {
        let g = Graph::complete(30);
        // a 29-edge path exists, but refuting 30 needs no search at all
        assert!(find_path_exact(&g, 30, 1).is_refuted());
        let star = Graph::from_edges(30, (1..30).map(|i| (0, i))).unwrap();
        let v = find_path_exact(&star, 3, 2);
        assert_eq!(v.outcome, SearchOutcome::HeuristicallyNotFound);
    }

    #[test]
    fn subset_dp_direct() {
        let g = Graph::path(6);
        let comp: Vec<usize> = (0..7).collect();
        let p = path_via_subset_dp(&g, &comp, 6).unwrap();
        assert!(g.is_path(&p));
        assert!(path_via_subset_dp(&g, &comp, 7).is_none());
    }
}
