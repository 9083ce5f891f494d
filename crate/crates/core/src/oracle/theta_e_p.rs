//! Exact p-edge clique cover number over raw vertex subsets.
//!
//! Members of a p-edge clique cover need not be cliques once `p >= 2`, so the
//! search ranges over all subsets of `V`. Families are enumerated as
//! nondecreasing sequences of subset masks, which visits each multifamily
//! once. Pair counts are kept incrementally:
//!
//! * a subset is skipped if it would push a non-adjacent pair to `p`;
//! * a node is cut when its depth plus the largest edge deficit reaches the
//!   best size found so far (each member raises a pair count by at most 1);
//! * only subsets holding at least one still-deficient edge are added.
//!
//! The last rule is safe because removing a member never breaks the
//! non-adjacency condition, so some minimum family has every member
//! containing an edge shared by exactly `p` members, and that edge was
//! deficient when the member was placed. Subsets of size below two never
//! qualify.

use super::{Outcome, SearchResult};
use crate::covers::CliqueCover;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_THETA_E_P_GUARD: usize = 6;

/// Subset masks are enumerated exhaustively; past this the table of `2^n`
/// subsets is not worth building.
const MAX_VERTICES: usize = 16;

/// `θ_e^p(g)` if it is at most `budget`, otherwise `ExceedsBound(budget)`.
pub fn exact_theta_e_p(g: &Graph, p: usize, budget: usize) -> Result<SearchResult> {
    exact_theta_e_p_with_guard(g, p, budget, DEFAULT_THETA_E_P_GUARD)
}

pub fn exact_theta_e_p_with_guard(
    g: &Graph,
    p: usize,
    budget: usize,
    guard: usize,
) -> Result<SearchResult> {
    let n = g.n();
    let guard = guard.min(MAX_VERTICES);
    if n > guard {
        return Err(Error::Scale {
            what: "exact theta_e^p",
            n,
            guard,
        });
    }
    if p < 1 {
        return Err(invalid("p must be at least 1"));
    }

    let mut pair_id = vec![usize::MAX; n * n];
    let mut is_edge = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pair_id[u * n + v] = is_edge.len();
            is_edge.push(g.has_edge(u, v));
        }
    }
    let subsets: Vec<Subset> = (0u32..1 << n)
        .filter(|m| m.count_ones() >= 2)
        .map(|mask| {
            let set = VertexSet::from_mask(u64::from(mask));
            let (edges, nonedges) = set
                .pairs()
                .map(|(u, v)| pair_id[u * n + v])
                .partition(|&id| is_edge[id]);
            Subset {
                mask,
                edges,
                nonedges,
            }
        })
        .collect();
    let edge_ids: Vec<usize> = (0..is_edge.len()).filter(|&id| is_edge[id]).collect();

    let mut search = Search {
        p,
        subsets: &subsets,
        edge_ids: &edge_ids,
        counts: vec![0; is_edge.len()],
        best: budget + 1,
        best_family: None,
        chosen: Vec::new(),
        nodes: 0,
    };
    search.run(0);

    let nodes_explored = search.nodes;
    Ok(match search.best_family {
        Some(family) => SearchResult {
            outcome: Outcome::Exact(family.len()),
            certificate: Some(CliqueCover::new(
                n,
                family
                    .iter()
                    .map(|&s| VertexSet::from_mask(u64::from(subsets[s].mask)))
                    .collect(),
            )?),
            nodes_explored,
        },
        None => SearchResult {
            outcome: Outcome::ExceedsBound(budget),
            certificate: None,
            nodes_explored,
        },
    })
}

struct Subset {
    mask: u32,
    edges: Vec<usize>,
    nonedges: Vec<usize>,
}

struct Search<'a> {
    p: usize,
    subsets: &'a [Subset],
    edge_ids: &'a [usize],
    counts: Vec<usize>,
    /// Only families strictly smaller than this are of interest.
    best: usize,
    best_family: Option<Vec<usize>>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, from: usize) {
        self.nodes += 1;
        let deficit = self
            .edge_ids
            .iter()
            .map(|&id| self.p.saturating_sub(self.counts[id]))
            .max()
            .unwrap_or(0);
        if deficit == 0 {
            self.best = self.chosen.len();
            self.best_family = Some(self.chosen.clone());
            return;
        }
        if self.chosen.len() + deficit >= self.best {
            return;
        }
        for idx in from..self.subsets.len() {
            let s = &self.subsets[idx];
            if s.nonedges.iter().any(|&id| self.counts[id] + 1 >= self.p) {
                continue;
            }
            if !s.edges.iter().any(|&id| self.counts[id] < self.p) {
                continue;
            }
            for &id in s.edges.iter().chain(&s.nonedges) {
                self.counts[id] += 1;
            }
            self.chosen.push(idx);
            self.run(idx);
            self.chosen.pop();
            for &id in s.edges.iter().chain(&s.nonedges) {
                self.counts[id] -= 1;
            }
            // a strictly better family was found below; cut siblings that
            // can no longer beat it
            if self.chosen.len() + 1 >= self.best {
                return;
            }
        }
    }
}
