use crate::bitset::VertexSet;
use crate::graph::Graph;

/// All vertices `v` with `|N(v) ∩ within| <= threshold`, ascending.
pub fn low_degree_count(graph: &Graph, within: &VertexSet, threshold: usize) -> Vec<usize> {
    (0..graph.num_vertices())
        .filter(|&v| graph.degree_into(v, within) <= threshold)
        .collect()
}

/// Size of the union of the neighbourhoods of the vertices in `set`.
pub fn neighbourhood_cover(graph: &Graph, set: &VertexSet) -> usize {
    graph.neighbourhood_union(set).len()
}
