//! Deciding `G → (K_{r+1}, P_n)`: every red/blue colouring of `G` has a red
//! path with `n` edges or a blue `K_{r+1}`.

use std::time::{Duration, Instant};

use crate::adversary::{
    strategy_boundary, strategy_hitting_set, strategy_local_search, strategy_pinned_cliques, verify_avoiding,
    LocalSearchParams, Strategy, VerificationMode,
};
use crate::detectors::{enumerate_cliques, path_via_subset_dp, SUBSET_DP_LIMIT};
use crate::graph::{Graph, TwoColouring};

/// Node budget for the red-path check at each complete colouring.
const LEAF_PATH_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub enum ArrowKind {
    /// Every colouring contains a red `P_n` or a blue `K_{r+1}`.
    Holds,
    /// A colouring with neither, certified by exact detectors.
    Fails(TwoColouring),
    Unknown(String),
}

#[derive(Debug, Clone)]
pub struct ArrowVerdict {
    pub kind: ArrowKind,
    pub nodes: u64,
    pub elapsed: Duration,
    /// The adversary strategy that produced the certificate, if any.
    pub strategy: Option<Strategy>,
}

impl ArrowVerdict {
    pub fn holds(&self) -> bool {
        matches!(self.kind, ArrowKind::Holds)
    }

    pub fn fails(&self) -> bool {
        matches!(self.kind, ArrowKind::Fails(_))
    }

    pub fn certificate(&self) -> Option<&TwoColouring> {
        match &self.kind {
            ArrowKind::Fails(c) => Some(c),
            _ => None,
        }
    }
}

/// An edge forced red because every other edge of a `K_{r+1}` copy was blue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forcing {
    pub edge: (usize, usize),
    /// Vertices of the copy.
    pub clique: Vec<usize>,
    /// Its other edges, all blue at the time.
    pub blue_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    Open,
    Red,
    Blue,
}

struct Search<'a> {
    r: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
    order: Vec<usize>,
    copies: Vec<Vec<usize>>,
    copy_vertices: Vec<Vec<usize>>,
    copies_of_edge: Vec<Vec<usize>>,
    cells: Vec<Cell>,
    blue_in_copy: Vec<usize>,
    open_in_copy: Vec<usize>,
    red: Graph,
    graph: &'a Graph,
    nodes: u64,
    budget: u64,
    inconclusive_leaves: u64,
    trace: Option<Vec<Forcing>>,
}

enum Step {
    Found(TwoColouring),
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn clique_edges(&self) -> usize {
        self.r * (self.r + 1) / 2
    }

    /// Assigns `e`, returning false if a blue copy completes or a red path
    /// appears. The caller undoes with [`Search::unset`] either way.
    fn set(&mut self, e: usize, cell: Cell) -> bool {
        debug_assert_eq!(self.cells[e], Cell::Open);
        self.cells[e] = cell;
        let full = self.clique_edges();
        let mut ok = true;
        for &c in &self.copies_of_edge[e] {
            self.open_in_copy[c] -= 1;
            if cell == Cell::Blue {
                self.blue_in_copy[c] += 1;
                if self.blue_in_copy[c] == full {
                    ok = false;
                }
            }
        }
        if cell == Cell::Red {
            let (u, v) = self.edges[e];
            self.red.add_edge(u, v).expect("edge of the base graph");
            if self.red_path_through(u) {
                ok = false;
            }
        }
        ok
    }

    fn unset(&mut self, e: usize) {
        let cell = self.cells[e];
        self.cells[e] = Cell::Open;
        for &c in &self.copies_of_edge[e] {
            self.open_in_copy[c] += 1;
            if cell == Cell::Blue {
                self.blue_in_copy[c] -= 1;
            }
        }
        if cell == Cell::Red {
            let (u, v) = self.edges[e];
            self.red.remove_edge(u, v);
        }
    }

    /// Exact check on the red component of `u` when it is small enough;
    /// larger components are left to the final check.
    fn red_path_through(&self, u: usize) -> bool {
        let mut comp = crate::bitset::VertexSet::new(self.red.num_vertices());
        let mut stack = vec![u];
        comp.insert(u);
        while let Some(x) = stack.pop() {
            for y in self.red.neighbours(x).difference(&comp).iter() {
                comp.insert(y);
                stack.push(y);
            }
        }
        if comp.len() <= self.n || comp.len() > SUBSET_DP_LIMIT {
            return false;
        }
        let verts = comp.to_vec();
        let edges: usize = verts.iter().map(|&v| self.red.degree(v)).sum::<usize>() / 2;
        if edges < self.n {
            return false;
        }
        path_via_subset_dp(&self.red, &verts, self.n).is_some()
    }

    /// After `from` turns blue, forces the open edge of every copy through it
    /// that is now blue except for that edge.
    /// Returns the forced edges (to undo) and whether a conflict arose.
    fn propagate(&mut self, from: usize) -> (Vec<usize>, bool) {
        let full = self.clique_edges();
        let mut forced = Vec::new();
        for i in 0..self.copies_of_edge[from].len() {
            let c = self.copies_of_edge[from][i];
            if self.blue_in_copy[c] == full - 1 && self.open_in_copy[c] == 1 {
                let target = *self.copies[c]
                    .iter()
                    .find(|&&f| self.cells[f] == Cell::Open)
                    .expect("one open edge");
                if let Some(trace) = self.trace.as_mut() {
                    trace.push(Forcing {
                        edge: self.edges[target],
                        clique: self.copy_vertices[c].clone(),
                        blue_edges: self.copies[c]
                            .iter()
                            .filter(|&&f| f != target)
                            .map(|&f| self.edges[f])
                            .collect(),
                    });
                }
                forced.push(target);
                if !self.set(target, Cell::Red) {
                    return (forced, true);
                }
            }
        }
        (forced, false)
    }

    fn run(&mut self, depth: usize) -> Step {
        let mut depth = depth;
        while depth < self.order.len() && self.cells[self.order[depth]] != Cell::Open {
            depth += 1;
        }
        if depth == self.order.len() {
            return self.leaf();
        }
        let e = self.order[depth];
        for cell in [Cell::Blue, Cell::Red] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            let mut ok = self.set(e, cell);
            let mut forced = Vec::new();
            if ok && cell == Cell::Blue {
                let (f, conflict) = self.propagate(e);
                forced = f;
                ok = !conflict;
            }
            let step = if ok { self.run(depth + 1) } else { Step::Exhausted };
            for &f in forced.iter().rev() {
                self.unset(f);
            }
            self.unset(e);
            match step {
                Step::Exhausted => {}
                other => return other,
            }
        }
        Step::Exhausted
    }

    fn leaf(&mut self) -> Step {
        let colouring = TwoColouring::from_red_edges(self.graph, self.red.edges()).expect("red edges lie in the graph");
        let check = verify_avoiding(
            &colouring,
            self.r,
            self.n,
            VerificationMode::Exact {
                path_budget: LEAF_PATH_BUDGET,
            },
        );
        if check.certified() {
            Step::Found(colouring)
        } else {
            if check.avoided() {
                self.inconclusive_leaves += 1;
            }
            Step::Exhausted
        }
    }
}

fn build_search(graph: &Graph, r: usize, n: usize, budget: u64, trace: bool) -> Search<'_> {
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    let index = |u: usize, v: usize| edges.binary_search(&(u, v)).expect("clique edge");
    let copy_vertices = enumerate_cliques(graph, r + 1);
    let copies: Vec<Vec<usize>> = copy_vertices
        .iter()
        .map(|c| {
            let mut es = Vec::new();
            for (a, &u) in c.iter().enumerate() {
                for &v in &c[a + 1..] {
                    es.push(index(u, v));
                }
            }
            es
        })
        .collect();
    let mut copies_of_edge = vec![Vec::new(); edges.len()];
    for (c, es) in copies.iter().enumerate() {
        for &e in es {
            copies_of_edge[e].push(c);
        }
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&e| std::cmp::Reverse(copies_of_edge[e].len()));
    let m = copies.len();
    let open = copies.iter().map(Vec::len).collect();
    Search {
        r,
        n,
        order,
        copy_vertices,
        copies_of_edge,
        cells: vec![Cell::Open; edges.len()],
        blue_in_copy: vec![0; m],
        open_in_copy: open,
        copies,
        edges,
        red: Graph::empty(graph.num_vertices()),
        graph,
        nodes: 0,
        budget,
        inconclusive_leaves: 0,
        trace: trace.then(Vec::new),
    }
}

/// Complete backtracking over edge colourings, blue first, in order of
/// decreasing number of `K_{r+1}` copies per edge.
///
/// After a blue assignment, any copy left with one open edge and all others
/// blue forces that edge red. Red assignments check the touched red
/// component for a path with `n` edges via the subset DP when it has at most
/// [`SUBSET_DP_LIMIT`] vertices. Complete colourings are re-verified by the
/// exact detectors. `budget` counts search-tree nodes.
pub fn arrow_exact(graph: &Graph, r: usize, n: usize, budget: u64) -> ArrowVerdict {
    arrow_exact_traced(graph, r, n, budget).0
}

/// [`arrow_exact`] that also returns every forced-red deduction it made.
pub fn arrow_exact_traced(graph: &Graph, r: usize, n: usize, budget: u64) -> (ArrowVerdict, Vec<Forcing>) {
    assert!(r >= 1, "clique parameter must be positive");
    let start = Instant::now();
    let mut search = build_search(graph, r, n, budget, true);
    let kind = if n == 0 && graph.num_vertices() > 0 {
        // a single vertex is a red path with no edges
        ArrowKind::Holds
    } else {
        match search.run(0) {
            Step::Found(c) => ArrowKind::Fails(c),
            Step::OutOfBudget => ArrowKind::Unknown(format!("node budget {budget} exhausted")),
            Step::Exhausted if search.inconclusive_leaves > 0 => ArrowKind::Unknown(format!(
                "{} colourings could not be settled by the path search",
                search.inconclusive_leaves
            )),
            Step::Exhausted => ArrowKind::Holds,
        }
    };
    let verdict = ArrowVerdict {
        kind,
        nodes: search.nodes,
        elapsed: start.elapsed(),
        strategy: None,
    };
    (verdict, search.trace.unwrap_or_default())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PortfolioParams {
    pub local: LocalSearchParams,
    pub mode: VerificationMode,
}

impl Default for PortfolioParams {
    fn default() -> Self {
        Self {
            local: LocalSearchParams::default(),
            mode: VerificationMode::DEFAULT_EXACT,
        }
    }
}

/// Tries the adversary strategies in turn and reports the first certified
/// avoiding colouring. Never reports `Holds`.
pub fn arrow_portfolio(graph: &Graph, r: usize, n: usize, params: PortfolioParams) -> ArrowVerdict {
    let start = Instant::now();
    let mut uncertified = false;
    let mut strategies = vec![Strategy::HittingSet];
    let vertices = graph.num_vertices();
    if vertices >= r * n {
        strategies.extend([Strategy::BoundaryPartition, Strategy::PinnedCliquePartition]);
    }
    strategies.push(Strategy::LocalSearch);
    for s in strategies {
        let t = vertices.saturating_sub(r * n);
        let res = match s {
            Strategy::HittingSet => strategy_hitting_set(graph, r, n, params.mode),
            Strategy::BoundaryPartition => match strategy_boundary(graph, r, n, t, params.mode) {
                Ok(res) => res,
                Err(_) => continue,
            },
            Strategy::PinnedCliquePartition => match strategy_pinned_cliques(graph, r, n, t, params.mode) {
                Ok(res) => res,
                Err(_) => continue,
            },
            Strategy::LocalSearch => strategy_local_search(graph, r, n, params.local, params.mode),
        };
        if res.is_certified() {
            let colouring = res.colouring().expect("certified results carry a colouring").clone();
            return ArrowVerdict {
                kind: ArrowKind::Fails(colouring),
                nodes: 0,
                elapsed: start.elapsed(),
                strategy: Some(s),
            };
        }
        uncertified |= res.is_avoiding();
    }
    let reason = if uncertified {
        "avoiding colouring found but not certified"
    } else {
        "no avoiding colouring found"
    };
    ArrowVerdict {
        kind: ArrowKind::Unknown(reason.to_string()),
        nodes: 0,
        elapsed: start.elapsed(),
        strategy: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complete_graphs() {
        assert!(arrow_exact(&Graph::complete(5), 2, 2, u64::MAX).holds());
        let v = arrow_exact(&Graph::complete(4), 2, 2, u64::MAX);
        let c = v.certificate().expect("K_4 has an avoiding colouring");
        assert_eq!(c.red().num_edges(), 2);
        assert!(c.red().edges().all(|(u, _)| c.red().degree(u) == 1));
        assert!(c.blue().is_cycle(&{
            let mut cyc = vec![0];
            while cyc.len() < 4 {
                let last = *cyc.last().unwrap();
                let next = c.blue().neighbours(last).iter().find(|v| !cyc.contains(v)).unwrap();
                cyc.push(next);
            }
            cyc
        }));
    }

    #[test]
    fn edgeless_graph_fails() {
        let v = arrow_exact(&Graph::empty(6), 2, 3, 10);
        assert!(v.fails());
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let v = arrow_exact(&Graph::complete(7), 2, 3, 5);
        assert!(matches!(v.kind, ArrowKind::Unknown(_)));
    }

    #[test]
    fn forcings_are_justified() {
        let (v, trace) = arrow_exact_traced(&Graph::complete(5), 2, 2, u64::MAX);
        assert!(v.holds());
        assert!(!trace.is_empty());
        for f in &trace {
            assert_eq!(f.clique.len(), 3);
            assert_eq!(f.blue_edges.len(), 2);
            assert!(!f.blue_edges.contains(&f.edge));
        }
    }

    #[test]
    fn portfolio_never_claims_holds() {
        let v = arrow_portfolio(&Graph::complete(5), 2, 2, PortfolioParams::default());
        assert!(matches!(v.kind, ArrowKind::Unknown(_)));
        let v = arrow_portfolio(&Graph::cycle(7), 2, 3, PortfolioParams::default());
        assert_eq!(v.strategy, Some(Strategy::HittingSet));
        let v = arrow_portfolio(&Graph::complete(4), 2, 2, PortfolioParams::default());
        assert!(v.fails());
    }
}
