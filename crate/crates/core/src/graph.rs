//! Labeled simple graphs and digraphs on the vertex set `0..n`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub type Vertex = usize;

/// A set of vertices, kept sorted and free of duplicates.
///
/// The host vertex count is owned by whatever holds the set (a graph or a
/// cover); bounds are checked there.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    /// Unordered pairs `(u, v)` with `u < v` drawn from the set.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(k, &u)| self.0[k + 1..].iter().map(move |&v| (u, v)))
    }

    /// Builds a set from a bitmask, bit `i` standing for vertex `i`.
    pub fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(mut members: Vec<Vertex>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(set: VertexSet) -> Self {
        set.0
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(members: [Vertex; N]) -> Self {
        Self::from(members.to_vec())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_char(',')?;
            }
            write!(f, "{v}")?;
        }
        f.write_char('}')
    }
}

/// Simple undirected graph. Equality is label-sensitive.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        g
    }

    /// Builds a graph from unordered pairs, in either orientation.
    /// Repeated pairs collapse; loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!(
                    "edge {{{u},{v}}} has an endpoint >= n = {n}"
                )));
            }
            if u == v {
                return Err(invalid(format!("loop at vertex {u} in a simple graph")));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    fn set(&mut self, u: Vertex, v: Vertex, present: bool) {
        self.adj[u * self.n + v] = present;
        self.adj[v * self.n + u] = present;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        (0..self.n).filter(|&u| self.has_edge(u, v)).count()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(u, v))
    }

    /// Checks that `s` induces a complete subgraph. Empty sets and
    /// singletons are cliques.
    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_members(s)?;
        Ok(s.pairs().all(|(u, v)| self.has_edge(u, v)))
    }

    pub(crate) fn check_members(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(m) if m >= self.n => Err(invalid(format!(
                "vertex {m} is out of range for n = {}",
                self.n
            ))),
            _ => Ok(()),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        Graph::from_edges(repr.n, repr.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

/// The cycle `C_n` with edges `{i, i+1 mod n}`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!(
            "a cycle needs at least 3 vertices, got n = {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complement(g: &Graph) -> Graph {
    let mut out = Graph::empty(g.n);
    for u in 0..g.n {
        for v in u + 1..g.n {
            out.set(u, v, !g.has_edge(u, v));
        }
    }
    out
}

/// Directed graph on `0..n`; loops are allowed.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DigraphRepr", into = "DigraphRepr")]
pub struct Digraph {
    n: usize,
    out: Vec<BTreeSet<Vertex>>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            out: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut d = Self::empty(n);
        for (x, v) in arcs {
            d.add_arc(x, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, x: Vertex, v: Vertex) -> Result<()> {
        if x >= self.n || v >= self.n {
            return Err(invalid(format!(
                "arc ({x},{v}) has an endpoint >= n = {}",
                self.n
            )));
        }
        self.out[x].insert(v);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, x: Vertex, v: Vertex) -> bool {
        x < self.n && self.out[x].contains(&v)
    }

    /// Out-neighbors of `x`, i.e. its prey.
    pub fn prey(&self, x: Vertex) -> &BTreeSet<Vertex> {
        &self.out[x]
    }

    pub fn out_degree(&self, x: Vertex) -> usize {
        self.out[x].len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(x, prey)| prey.iter().map(move |&v| (x, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(BTreeSet::len).sum()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph D {\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for (x, v) in self.arcs() {
            let _ = writeln!(out, "  {x} -> {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    n: usize,
    arcs: Vec<[Vertex; 2]>,
}

impl TryFrom<DigraphRepr> for Digraph {
    type Error = Error;

    fn try_from(repr: DigraphRepr) -> Result<Self> {
        Digraph::from_arcs(repr.n, repr.arcs.into_iter().map(|[x, v]| (x, v)))
    }
}

impl From<Digraph> for DigraphRepr {
    fn from(d: Digraph) -> Self {
        DigraphRepr {
            n: d.n,
            arcs: d.arcs().map(|(x, v)| [x, v]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn smallest_cycle_is_a_triangle() {
        assert_eq!(edges(&make_cycle(3).unwrap()), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn five_cycle_edges() {
        assert_eq!(
            edges(&make_cycle(5).unwrap()),
            vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn cycle_rejects_two_vertices() {
        assert!(matches!(make_cycle(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn complement_of_c5_is_the_pentagram() {
        let co = complement(&make_cycle(5).unwrap());
        assert_eq!(edges(&co), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        // relabel i -> 2i mod 5 maps C_5 onto its complement
        let c5 = make_cycle(5).unwrap();
        for (u, v) in c5.edges() {
            assert!(co.has_edge(2 * u % 5, 2 * v % 5));
        }
    }

    #[test]
    fn complement_of_triangle_is_edgeless() {
        assert_eq!(complement(&Graph::complete(3)), Graph::empty(3));
    }

    #[test]
    fn complement_of_c8_has_twenty_edges() {
        assert_eq!(complement(&make_cycle(8).unwrap()).edge_count(), 20);
    }

    #[test]
    fn clique_checks() {
        let co6 = complement(&make_cycle(6).unwrap());
        assert!(co6.is_clique(&VertexSet::from([0, 2, 4])).unwrap());
        assert!(co6.is_clique(&VertexSet::empty()).unwrap());
        let c4 = make_cycle(4).unwrap();
        assert!(!c4.is_clique(&VertexSet::from([0, 1, 2])).unwrap());
        assert!(c4.is_clique(&VertexSet::from([3])).unwrap());
        assert!(matches!(
            c4.is_clique(&VertexSet::from([1, 4])),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn equality_is_label_sensitive() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(c5, make_cycle(5).unwrap());
        assert_ne!(c5, complement(&c5));
        assert_eq!(
            make_cycle(4).unwrap(),
            Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
        );
        assert_ne!(Graph::empty(3), Graph::empty(4));
    }

    #[test]
    fn graph_json_accepts_either_orientation() {
        let g: Graph =
            serde_json::from_str(r#"{"n":4,"edges":[[1,0],[2,1],[3,2],[0,3]]}"#).unwrap();
        assert_eq!(g, make_cycle(4).unwrap());
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#
        );
    }

    #[test]
    fn graph_json_rejects_bad_edges() {
        assert!(serde_json::from_str::<Graph>(r#"{"n":3,"edges":[[0,3]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"n":3,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn digraph_keeps_loops() {
        let d: Digraph = serde_json::from_str(r#"{"n":2,"arcs":[[1,1],[0,1]]}"#).unwrap();
        assert!(d.has_arc(1, 1));
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"n":2,"arcs":[[0,1],[1,1]]}"#
        );
        assert!(d.to_dot().contains("1 -> 1;"));
    }

    #[test]
    fn vertex_set_normalizes() {
        let s = VertexSet::from(vec![5, 8, 2, 5]);
        assert_eq!(s.as_slice(), &[2, 5, 8]);
        assert_eq!(s.to_string(), "{2,5,8}");
        assert_eq!(VertexSet::from_mask(0b1011), VertexSet::from([0, 1, 3]));
        assert_eq!(s.pairs().collect::<Vec<_>>(), vec![(2, 5), (2, 8), (5, 8)]);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn cycles_are_two_regular(n in 3usize..40) {
            let c = make_cycle(n).unwrap();
            prop_assert_eq!(c.edge_count(), n);
            prop_assert!((0..n).all(|v| c.degree(v) == 2));
            prop_assert_eq!(complement(&c).edge_count(), n * (n - 3) / 2);
        }

        #[test]
        fn complement_is_an_involution(g in arb_graph()) {
            prop_assert_eq!(complement(&complement(&g)), g);
        }

        #[test]
        fn clique_iff_every_pair_is_a_clique(g in arb_graph(), mask in any::<u8>()) {
            let s = VertexSet::from_mask(u64::from(mask) & ((1u64 << g.n()) - 1));
            let pairwise = s.pairs().all(|(u, v)| g.is_clique(&VertexSet::from([u, v])).unwrap());
            prop_assert_eq!(g.is_clique(&s).unwrap(), pairwise);
        }
    }
}
