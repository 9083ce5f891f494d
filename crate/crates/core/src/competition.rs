//! p-competition graphs of digraphs.
//!
//! Two vertices compete when they share at least `p` distinct prey. A shared
//! prey may be one of the two vertices itself, and loops count.

use crate::error::{invalid, Result};
use crate::graph::{Digraph, Graph, Vertex};

/// Number of vertices that are prey of both `x` and `y`.
pub fn common_prey_count(d: &Digraph, x: Vertex, y: Vertex) -> Result<usize> {
    if x == y {
        return Err(invalid(format!(
            "common prey needs two distinct vertices, got {x} twice"
        )));
    }
    if x >= d.n() || y >= d.n() {
        return Err(invalid(format!("vertex out of range for n = {}", d.n())));
    }
    Ok(d.prey(x).intersection(d.prey(y)).count())
}

/// `C_p(D)`: same vertex set, edge `{x, y}` iff `x` and `y` share at least
/// `p` prey. `p = 1` gives the ordinary competition graph.
pub fn p_competition_graph(d: &Digraph, p: usize) -> Result<Graph> {
    if p < 1 {
        return Err(invalid("p must be at least 1"));
    }
    let n = d.n();
    let mut edges = Vec::new();
    for x in 0..n {
        // vertices with fewer than p prey compete with nobody
        if d.out_degree(x) < p {
            continue;
        }
        for y in x + 1..n {
            if d.prey(x).intersection(d.prey(y)).nth(p - 1).is_some() {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn competition_graph(d: &Digraph) -> Graph {
    p_competition_graph(d, 1).expect("p = 1 is valid")
}
