//! Edge-list and colouring text formats.
//!
//! Graph files start with `N M` and list `M` edges `u v` (`u < v`), one per
//! line, in lexicographic order when written. Colouring files list every edge
//! once as `u v C` with `C` in `{R, B}`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{Colour, Graph, GraphError, TwoColouring};

fn io_err(path: &Path, source: std::io::Error) -> GraphError {
    GraphError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, GraphError> {
    tok.parse()
        .map_err(|_| GraphError::parse(line, format!("malformed {what} {tok:?}")))
}

/// Non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_pair(fields: &[&str], line: usize, n: usize) -> Result<(usize, usize), GraphError> {
    let u = parse_usize(fields[0], line, "vertex")?;
    let v = parse_usize(fields[1], line, "vertex")?;
    if u >= n || v >= n {
        return Err(GraphError::parse(line, "vertex index out of range"));
    }
    if u == v {
        return Err(GraphError::parse(line, format!("self-loop at vertex {u}")));
    }
    Ok((u.min(v), u.max(v)))
}

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| GraphError::parse(1, "missing header \"N M\""))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::parse(hline, "header must be \"N M\""));
    }
    let n = parse_usize(fields[0], hline, "vertex count")?;
    let m = parse_usize(fields[1], hline, "edge count")?;

    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(GraphError::parse(line, "malformed edge line"));
        }
        let (u, v) = parse_pair(&fields, line, n)?;
        if !g.add_edge(u, v)? {
            return Err(GraphError::parse(line, format!("duplicate edge {u} {v}")));
        }
        seen += 1;
    }
    if seen != m {
        return Err(GraphError::parse(
            hline,
            format!("header declares {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.num_vertices(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    parse_graph(&text)
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<(), GraphError> {
    let path = path.as_ref();
    fs::write(path, format_graph(g)).map_err(|e| io_err(path, e))
}

/// Parses a colouring of `graph`; every edge must be coloured exactly once.
pub fn parse_colouring(text: &str, graph: &Graph) -> Result<TwoColouring, GraphError> {
    let n = graph.num_vertices();
    let mut red = Graph::empty(n);
    let mut blue = Graph::empty(n);
    for (line, body) in content_lines(text) {
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(GraphError::parse(line, "malformed colouring line"));
        }
        let (u, v) = parse_pair(&fields, line, n)?;
        let colour = match fields[2] {
            "R" => Colour::Red,
            "B" => Colour::Blue,
            other => return Err(GraphError::parse(line, format!("unknown colour {other:?}"))),
        };
        if !graph.has_edge(u, v) {
            return Err(GraphError::parse(line, format!("edge {u} {v} not in graph")));
        }
        if red.has_edge(u, v) || blue.has_edge(u, v) {
            return Err(GraphError::parse(line, format!("edge {u} {v} coloured twice")));
        }
        match colour {
            Colour::Red => red.add_edge(u, v)?,
            Colour::Blue => blue.add_edge(u, v)?,
        };
    }
    if let Some((u, v)) = graph
        .edges()
        .find(|&(u, v)| !red.has_edge(u, v) && !blue.has_edge(u, v))
    {
        return Err(GraphError::Uncoloured(u, v));
    }
    Ok(TwoColouring::from_red_edges(graph, red.edges()).expect("red edges lie in the graph"))
}

pub fn format_colouring(c: &TwoColouring) -> String {
    let mut out = String::new();
    for (u, v, col) in c.coloured_edges() {
        let _ = writeln!(out, "{u} {v} {}", col.symbol());
    }
    out
}

pub fn read_colouring(path: impl AsRef<Path>, graph: &Graph) -> Result<TwoColouring, GraphError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    parse_colouring(&text, graph)
}

pub fn write_colouring(c: &TwoColouring, path: impl AsRef<Path>) -> Result<(), GraphError> {
    let path = path.as_ref();
    fs::write(path, format_colouring(c)).map_err(|e| io_err(path, e))
}
