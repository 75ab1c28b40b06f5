use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn symbol(self) -> char {
        match self {
            Colour::Red => 'R',
            Colour::Blue => 'B',
        }
    }
}

/// A red/blue colouring of every edge of a base graph.
///
/// Stored as the two colour classes; their edge-disjoint union is the base
/// graph, so the colour map is total by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColouring {
    red: Graph,
    blue: Graph,
}

impl TwoColouring {
    /// Every edge of `base` blue.
    pub fn all_blue(base: &Graph) -> Self {
        Self {
            red: Graph::empty(base.num_vertices()),
            blue: base.clone(),
        }
    }

    pub fn all_red(base: &Graph) -> Self {
        Self {
            red: base.clone(),
            blue: Graph::empty(base.num_vertices()),
        }
    }

    /// Colours the listed edges red and the rest of `base` blue.
    pub fn from_red_edges<I>(base: &Graph, red_edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut red = Graph::empty(base.num_vertices());
        let mut blue = base.clone();
        for (u, v) in red_edges {
            if !base.has_edge(u, v) {
                return Err(GraphError::parse(
                    0,
                    format!("edge {} {} not in graph", u.min(v), u.max(v)),
                ));
            }
            red.add_edge(u, v)?;
            blue.remove_edge(u, v);
        }
        Ok(Self { red, blue })
    }

    /// Colour each edge of `base` with `f(u, v)`, called with `u < v`.
    pub fn from_fn(base: &Graph, mut f: impl FnMut(usize, usize) -> Colour) -> Self {
        let n = base.num_vertices();
        let mut red = Graph::empty(n);
        let mut blue = Graph::empty(n);
        for (u, v) in base.edges() {
            let target = match f(u, v) {
                Colour::Red => &mut red,
                Colour::Blue => &mut blue,
            };
            target.add_edge(u, v).expect("base edges are valid");
        }
        Self { red, blue }
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    pub fn num_vertices(&self) -> usize {
        self.red.num_vertices()
    }

    /// The coloured graph, red ∪ blue.
    pub fn base(&self) -> Graph {
        let mut g = self.red.clone();
        for (u, v) in self.blue.edges() {
            g.add_edge(u, v).expect("colour classes are edge-disjoint");
        }
        g
    }

    pub fn colour(&self, u: usize, v: usize) -> Option<Colour> {
        if self.red.has_edge(u, v) {
            Some(Colour::Red)
        } else if self.blue.has_edge(u, v) {
            Some(Colour::Blue)
        } else {
            None
        }
    }

    /// All base edges with their colours, lexicographic order.
    pub fn coloured_edges(&self) -> Vec<(usize, usize, Colour)> {
        let mut out: Vec<_> = self
            .red
            .edges()
            .map(|(u, v)| (u, v, Colour::Red))
            .chain(self.blue.edges().map(|(u, v)| (u, v, Colour::Blue)))
            .collect();
        out.sort_unstable_by_key(|&(u, v, _)| (u, v));
        out
    }

    /// The colouring induced on a subgraph of the base graph.
    ///
    /// Returns `None` if `sub` has an edge the base graph lacks or a different
    /// vertex count.
    pub fn restrict_to(&self, sub: &Graph) -> Option<TwoColouring> {
        if sub.num_vertices() != self.num_vertices() {
            return None;
        }
        let mut red = Graph::empty(sub.num_vertices());
        let mut blue = Graph::empty(sub.num_vertices());
        for (u, v) in sub.edges() {
            match self.colour(u, v)? {
                Colour::Red => red.add_edge(u, v).ok()?,
                Colour::Blue => blue.add_edge(u, v).ok()?,
            };
        }
        Some(TwoColouring { red, blue })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_partition_the_base() {
        let k4 = Graph::complete(4);
        let c = TwoColouring::from_red_edges(&k4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(c.red().num_edges(), 2);
        assert_eq!(c.blue().num_edges(), 4);
        assert_eq!(c.base(), k4);
        assert_eq!(c.colour(1, 0), Some(Colour::Red));
        assert_eq!(c.colour(0, 2), Some(Colour::Blue));
    }

    #[test]
    fn red_edge_outside_base_is_rejected() {
        let p = Graph::path(2);
        assert!(TwoColouring::from_red_edges(&p, [(0, 2)]).is_err());
    }

    #[test]
    fn restriction_keeps_colours() {
        let k4 = Graph::complete(4);
        let c = TwoColouring::from_red_edges(&k4, [(0, 1)]).unwrap();
        let sub = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let r = c.restrict_to(&sub).unwrap();
        assert_eq!(r.colour(0, 1), Some(Colour::Red));
        assert_eq!(r.colour(1, 2), Some(Colour::Blue));
        assert_eq!(r.colour(0, 2), None);
    }
}
