//! Exact edge clique cover number by branch and bound.
//!
//! Any clique in a cover can be grown to a maximal clique without losing
//! coverage, so the search is a minimum set cover of the edge set by
//! maximal cliques. Each node branches on the uncovered edge with the fewest
//! candidate cliques. The bound is the larger of two lower bounds on the
//! cliques still needed: a greedy family of uncovered edges no two of which
//! fit in one clique, and the uncovered edge count divided by the largest
//! clique's edge count.

use fixedbitset::FixedBitSet;

use super::{maximal_cliques_with_guard, Outcome, SearchResult};
use crate::covers::CliqueCover;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_THETA_E_GUARD: usize = 16;

/// `θ_e(g)`, or `ExceedsBound(upper)` when no cover of at most `upper`
/// cliques exists.
pub fn exact_theta_e(g: &Graph, upper: Option<usize>) -> Result<SearchResult> {
    exact_theta_e_with_guard(g, upper, DEFAULT_THETA_E_GUARD)
}

pub fn exact_theta_e_with_guard(
    g: &Graph,
    upper: Option<usize>,
    guard: usize,
) -> Result<SearchResult> {
    let n = g.n();
    if n > guard {
        return Err(Error::Scale {
            what: "exact theta_e",
            n,
            guard,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m == 0 {
        return Ok(SearchResult {
            outcome: Outcome::Exact(0),
            certificate: Some(CliqueCover::new(n, vec![])?),
            nodes_explored: 1,
        });
    }
    let mut edge_id = vec![usize::MAX; n * n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        edge_id[u * n + v] = e;
        edge_id[v * n + u] = e;
    }

    let cliques: Vec<VertexSet> = maximal_cliques_with_guard(g, guard)?
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let covers: Vec<FixedBitSet> = cliques
        .iter()
        .map(|c| {
            let mut bits = FixedBitSet::with_capacity(m);
            for (u, v) in c.pairs() {
                bits.insert(edge_id[u * n + v]);
            }
            bits
        })
        .collect();
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (c, bits) in covers.iter().enumerate() {
        for e in bits.ones() {
            candidates[e].push(c);
        }
    }
    // two edges fit in a common clique iff their endpoints span a clique
    let compatible: Vec<FixedBitSet> = edges
        .iter()
        .map(|&(a, b)| {
            let mut row = FixedBitSet::with_capacity(m);
            for (f, &(c, d)) in edges.iter().enumerate() {
                let span = VertexSet::from([a, b, c, d]);
                if span.pairs().all(|(x, y)| g.has_edge(x, y)) {
                    row.insert(f);
                }
            }
            row
        })
        .collect();
    let mut branch_order: Vec<usize> = (0..m).collect();
    branch_order.sort_by_key(|&e| (candidates[e].len(), e));

    let mut search = Search {
        m,
        covers: &covers,
        candidates: &candidates,
        compatible: &compatible,
        branch_order: &branch_order,
        max_cover: covers.iter().map(|c| c.count_ones(..)).max().unwrap_or(1),
        // one clique per edge always works
        best: upper.map_or(m, |u| u.min(m)) + 1,
        best_cover: None,
        chosen: Vec::new(),
        nodes: 0,
    };
    search.run(&FixedBitSet::with_capacity(m));

    let nodes_explored = search.nodes;
    Ok(match search.best_cover {
        Some(chosen) => SearchResult {
            outcome: Outcome::Exact(chosen.len()),
            certificate: Some(CliqueCover::new(
                n,
                chosen.iter().map(|&c| cliques[c].clone()).collect(),
            )?),
            nodes_explored,
        },
        None => SearchResult {
            outcome: Outcome::ExceedsBound(
                upper.expect("an unbounded search always finds a cover"),
            ),
            certificate: None,
            nodes_explored,
        },
    })
}

struct Search<'a> {
    m: usize,
    covers: &'a [FixedBitSet],
    candidates: &'a [Vec<usize>],
    compatible: &'a [FixedBitSet],
    branch_order: &'a [usize],
    max_cover: usize,
    /// Only covers strictly smaller than this are of interest.
    best: usize,
    best_cover: Option<Vec<usize>>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, covered: &FixedBitSet) {
        self.nodes += 1;
        let uncovered = self.m - covered.count_ones(..);
        if uncovered == 0 {
            self.best = self.chosen.len();
            self.best_cover = Some(self.chosen.clone());
            return;
        }
        if self.chosen.len() + self.lower_bound(covered, uncovered) >= self.best {
            return;
        }
        let edge = *self
            .branch_order
            .iter()
            .find(|&&e| !covered.contains(e))
            .expect("an edge is uncovered");
        for &c in &self.candidates[edge] {
            let mut next = covered.clone();
            next.union_with(&self.covers[c]);
            self.chosen.push(c);
            self.run(&next);
            self.chosen.pop();
        }
    }

    fn lower_bound(&self, covered: &FixedBitSet, uncovered: usize) -> usize {
        let by_size = uncovered.div_ceil(self.max_cover);
        let mut packed = FixedBitSet::with_capacity(self.m);
        let mut count = 0;
        for e in 0..self.m {
            if !covered.contains(e) && self.compatible[e].is_disjoint(&packed) {
                packed.insert(e);
                count += 1;
            }
        }
        by_size.max(count)
    }
}
