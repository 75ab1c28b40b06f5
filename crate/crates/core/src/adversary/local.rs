use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AdversaryResult, Strategy, VerificationMode};
use crate::detectors::enumerate_cliques;
use crate::graph::{Graph, TwoColouring};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalSearchParams {
    pub restarts: usize,
    pub max_steps: usize,
    /// Probability of a random rather than greedy flip.
    pub noise: f64,
    /// Candidate flips scored per step.
    pub sample: usize,
    pub seed: u64,
}

impl Default for LocalSearchParams {
    fn default() -> Self {
        Self {
            restarts: 8,
            max_steps: 2_000,
            noise: 0.1,
            sample: 16,
            seed: 0,
        }
    }
}

struct State<'a> {
    n_vertices: usize,
    edges: &'a [(usize, usize)],
    copies: &'a [Vec<usize>],
    red: Vec<bool>,
    /// Blue edges per copy.
    blue_in_copy: Vec<usize>,
    copies_of_edge: &'a [Vec<usize>],
    clique_edges: usize,
    max_component: usize,
}

impl State<'_> {
    fn flip(&mut self, e: usize) {
        self.red[e] = !self.red[e];
        for &c in &self.copies_of_edge[e] {
            if self.red[e] {
                self.blue_in_copy[c] -= 1;
            } else {
                self.blue_in_copy[c] += 1;
            }
        }
    }

    fn blue_copies(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.copies.len()).filter(|&c| self.blue_in_copy[c] == self.clique_edges)
    }

    /// Red components (vertex lists) with more than `max_component` vertices.
    fn oversized(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n_vertices).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if self.red[i] {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups = vec![Vec::new(); self.n_vertices];
        for v in 0..self.n_vertices {
            let root = find(&mut parent, v);
            groups[root].push(v);
        }
        groups.into_iter().filter(|g| g.len() > self.max_component).collect()
    }

    fn cost(&self) -> usize {
        let excess: usize = self.oversized().iter().map(|g| g.len() - self.max_component).sum();
        self.blue_copies().count() + excess
    }
}

/// Min-conflicts search for a colouring with no blue `K_{r+1}` and every red
/// component on at most `n` vertices (which rules out a red `P_n`).
///
/// Each step picks a random violated constraint: a blue copy gets one of its
/// edges turned red, an oversized red component one of its edges turned blue.
/// The flip is the best of a sample by total violation count, or random with
/// probability `noise`. Restart 0 starts all blue; later restarts colour each
/// edge red with probability 1/2.
pub fn strategy_local_search(
    graph: &Graph,
    r: usize,
    n: usize,
    params: LocalSearchParams,
    mode: VerificationMode,
) -> AdversaryResult {
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    let index = |u: usize, v: usize| edges.binary_search(&(u.min(v), u.max(v))).expect("edge of a copy");
    let copies: Vec<Vec<usize>> = enumerate_cliques(graph, r + 1)
        .into_iter()
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
    let clique_edges = (r + 1) * r / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut steps_total = 0;
    let mut best_cost = usize::MAX;

    for restart in 0..params.restarts.max(1) {
        let red: Vec<bool> = if restart == 0 {
            vec![false; edges.len()]
        } else {
            (0..edges.len()).map(|_| rng.random_bool(0.5)).collect()
        };
        let blue_in_copy = copies
            .iter()
            .map(|es| es.iter().filter(|&&e| !red[e]).count())
            .collect();
        let mut st = State {
            n_vertices: graph.num_vertices(),
            edges: &edges,
            copies: &copies,
            red,
            blue_in_copy,
            copies_of_edge: &copies_of_edge,
            clique_edges,
            max_component: n,
        };
        for _ in 0..=params.max_steps {
            let blue: Vec<usize> = st.blue_copies().collect();
            let big = st.oversized();
            let cost = blue.len() + big.iter().map(|g| g.len() - n).sum::<usize>();
            best_cost = best_cost.min(cost);
            if cost == 0 {
                let colouring =
                    TwoColouring::from_red_edges(graph, (0..edges.len()).filter(|&e| st.red[e]).map(|e| edges[e]))
                        .expect("edges come from the graph");
                return AdversaryResult::checked(
                    Strategy::LocalSearch,
                    colouring,
                    None,
                    r,
                    n,
                    mode,
                    vec![
                        ("restarts", restart + 1),
                        ("steps", steps_total),
                        ("copies", copies.len()),
                    ],
                );
            }
            steps_total += 1;
            let pick = rng.random_range(0..blue.len() + big.len());
            let candidates: Vec<usize> = if pick < blue.len() {
                copies[blue[pick]].clone()
            } else {
                let comp = &big[pick - blue.len()];
                let mut es = Vec::new();
                for (a, &u) in comp.iter().enumerate() {
                    for &v in &comp[a + 1..] {
                        if graph.has_edge(u, v) {
                            let e = index(u, v);
                            if st.red[e] {
                                es.push(e);
                            }
                        }
                    }
                }
                es
            };
            let chosen = if rng.random_bool(params.noise) {
                *candidates.choose(&mut rng).expect("violations have edges")
            } else {
                let sample: Vec<usize> = if candidates.len() > params.sample {
                    candidates.choose_multiple(&mut rng, params.sample).copied().collect()
                } else {
                    candidates
                };
                let mut best = (usize::MAX, Vec::new());
                for &e in &sample {
                    st.flip(e);
                    let c = st.cost();
                    st.flip(e);
                    if c < best.0 {
                        best = (c, vec![e]);
                    } else if c == best.0 {
                        best.1.push(e);
                    }
                }
                *best.1.choose(&mut rng).expect("nonempty sample")
            };
            st.flip(chosen);
        }
    }
    AdversaryResult::failed(
        Strategy::LocalSearch,
        format!("no avoiding colouring after {} restarts", params.restarts.max(1)),
        vec![
            ("steps", steps_total),
            ("best_cost", best_cost),
            ("copies", copies.len()),
        ],
    )
}
