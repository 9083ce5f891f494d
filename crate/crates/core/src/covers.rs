//! Edge clique covers and p-edge clique covers: verification and the
//! explicit families for cycles and complements of cycles.
//!
//! A multifamily `F = (S_0, .., S_{r-1})` is a p-edge clique cover of `G`
//! when every intersection of `p` members is a clique and those
//! intersections cover every edge. Both conditions only depend on how many
//! members contain a given pair `{u, v}`:
//!
//! * some p-wise intersection contains `{u, v}` iff at least `p` members
//!   contain both, so all intersections are cliques iff every non-adjacent
//!   pair lies together in at most `p - 1` members;
//! * every edge is covered iff every edge lies together in at least `p`
//!   members.
//!
//! The verifier works with these pair counts and never enumerates p-subsets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Ordered multifamily of vertex sets over a host of `n` vertices.
///
/// Order matters: set `j` becomes the prey vertex `j` on realization.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoverRepr", into = "CoverRepr")]
pub struct CliqueCover {
    n: usize,
    sets: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(n: usize, sets: Vec<VertexSet>) -> Result<Self> {
        for (j, s) in sets.iter().enumerate() {
            if let Some(m) = s.max().filter(|&m| m >= n) {
                return Err(invalid(format!("set {j} contains vertex {m} >= n = {n}")));
            }
        }
        Ok(Self { n, sets })
    }

    pub fn from_lists<I, S>(n: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<VertexSet>,
    {
        Self::new(n, sets.into_iter().map(Into::into).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Number of members containing both `u` and `v`.
    pub fn pair_count(&self, u: Vertex, v: Vertex) -> usize {
        self.sets
            .iter()
            .filter(|s| s.contains(u) && s.contains(v))
            .count()
    }

    /// Symmetric `n x n` table of pair counts, row-major.
    pub fn pair_counts(&self) -> Vec<usize> {
        let n = self.n;
        let mut counts = vec![0; n * n];
        for s in &self.sets {
            for (u, v) in s.pairs() {
                counts[u * n + v] += 1;
                counts[v * n + u] += 1;
            }
        }
        counts
    }
}

impl fmt::Debug for CliqueCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CliqueCover(n={}; ", self.n)?;
        f.debug_list()
            .entries(self.sets.iter().map(|s| s.to_string()))
            .finish()?;
        f.write_str(")")
    }
}

#[derive(Serialize, Deserialize)]
struct CoverRepr {
    n: usize,
    sets: Vec<VertexSet>,
}

impl TryFrom<CoverRepr> for CliqueCover {
    type Error = Error;

    fn try_from(repr: CoverRepr) -> Result<Self> {
        CliqueCover::new(repr.n, repr.sets)
    }
}

impl From<CliqueCover> for CoverRepr {
    fn from(c: CliqueCover) -> Self {
        CoverRepr {
            n: c.n,
            sets: c.sets,
        }
    }
}

/// Why a family fails to be a (p-)edge clique cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Witness {
    /// An edge lies together in fewer than `p` members.
    UncoveredEdge { u: Vertex, v: Vertex, count: usize },
    /// A non-adjacent pair lies together in `p` or more members, so some
    /// p-wise intersection is not a clique.
    NonedgeInPSets { u: Vertex, v: Vertex, count: usize },
    /// The graph has edges but the family has fewer than `p` members.
    #[serde(rename = "family-smaller-than-p")]
    FamilySmallerThanP { size: usize, p: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::UncoveredEdge { u, v, count } => {
                write!(f, "edge {{{u},{v}}} lies in only {count} sets")
            }
            Witness::NonedgeInPSets { u, v, count } => {
                write!(f, "non-adjacent pair {{{u},{v}}} lies in {count} sets")
            }
            Witness::FamilySmallerThanP { size, p } => {
                write!(f, "family of {size} sets is smaller than p = {p}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "VerdictRepr")]
pub struct Verdict {
    witness: Option<Witness>,
}

impl Verdict {
    pub const VALID: Verdict = Verdict { witness: None };

    pub fn invalid(witness: Witness) -> Self {
        Self {
            witness: Some(witness),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

#[derive(Serialize)]
struct VerdictRepr {
    valid: bool,
    witness: Option<Witness>,
}

impl From<Verdict> for VerdictRepr {
    fn from(v: Verdict) -> Self {
        VerdictRepr {
            valid: v.is_valid(),
            witness: v.witness,
        }
    }
}

/// Checks that every member of `f` is a clique of `g` and every edge lies in
/// some member.
pub fn verify_ecc(g: &Graph, f: &CliqueCover) -> Result<Verdict> {
    verify_p_ecc(g, f, 1)
}

/// Checks that `f` is a p-edge clique cover of `g`. Pairs are scanned in
/// lexicographic order; the first violation found is the witness.
pub fn verify_p_ecc(g: &Graph, f: &CliqueCover, p: usize) -> Result<Verdict> {
    if p < 1 {
        return Err(invalid("p must be at least 1"));
    }
    if f.n != g.n() {
        return Err(invalid(format!(
            "cover is over {} vertices but the graph has {}",
            f.n,
            g.n()
        )));
    }
    let n = g.n();
    if f.len() < p && g.edge_count() > 0 {
        return Ok(Verdict::invalid(Witness::FamilySmallerThanP {
            size: f.len(),
            p,
        }));
    }
    let counts = f.pair_counts();
    for u in 0..n {
        for v in u + 1..n {
            let count = counts[u * n + v];
            if g.has_edge(u, v) {
                if count < p {
                    return Ok(Verdict::invalid(Witness::UncoveredEdge { u, v, count }));
                }
            } else if count >= p {
                return Ok(Verdict::invalid(Witness::NonedgeInPSets { u, v, count }));
            }
        }
    }
    Ok(Verdict::VALID)
}

/// The `n` sets `S_i = {i, i+1, .., i+p} (mod n)`, a p-edge clique cover of
/// `C_n` whenever `n >= p + 3`.
pub fn cycle_cover(n: usize, p: usize) -> Result<CliqueCover> {
    if p < 1 {
        return Err(invalid("p must be at least 1"));
    }
    if n < p + 3 {
        return Err(Error::Infeasible(format!(
            "C_{n} is a {p}-competition graph only if n >= p+3 (requires n >= p+3, got n = {n}, p = {p})"
        )));
    }
    let sets = (0..n)
        .map(|i| (i..=i + p).map(|v| v % n).collect())
        .collect();
    CliqueCover::new(n, sets)
}

/// Size of [`complement_cycle_cover`]`(n)`.
pub fn complement_cycle_cover_size(n: usize) -> Result<usize> {
    match n {
        0..=4 => Err(invalid(format!(
            "complement-of-cycle covers are defined for n >= 5, got {n}"
        ))),
        5 | 6 => Ok(5),
        7 => Ok(7),
        8 => Ok(6),
        _ if n % 2 == 1 => Ok((n + 5) / 2),
        _ => Ok(n / 2 + 1),
    }
}

/// An edge clique cover of the complement of `C_n`, `n >= 5`, of size
/// 5, 5, 7, 6 for `n = 5..=8`, `(n+5)/2` for odd `n >= 9` and `n/2 + 1`
/// for even `n >= 10`.
pub fn complement_cycle_cover(n: usize) -> Result<CliqueCover> {
    let sets: Vec<VertexSet> = match n {
        0..=4 => {
            return Err(invalid(format!(
                "complement-of-cycle covers are defined for n >= 5, got {n}"
            )))
        }
        // the complement of C_5 is again a 5-cycle: take its edges
        5 => (0..5).map(|i| VertexSet::from([i, (i + 2) % 5])).collect(),
        6 => literal(&[&[0, 2, 4], &[1, 3, 5], &[2, 5], &[1, 4], &[0, 3]]),
        7 => literal(&[
            &[0, 2, 5],
            &[1, 3, 6],
            &[2, 0, 4],
            &[3, 1, 5],
            &[4, 2, 6],
            &[0, 3],
            &[1, 4],
        ]),
        8 => literal(&[
            &[0, 3, 5],
            &[2, 5, 7],
            &[4, 1, 7],
            &[6, 1, 3],
            &[0, 2, 4, 6],
            &[1, 3, 5, 7],
        ]),
        _ if n % 2 == 1 => odd_family(n),
        _ => even_family(n),
    };
    CliqueCover::new(n, sets)
}

fn literal(sets: &[&[Vertex]]) -> Vec<VertexSet> {
    sets.iter().map(|s| s.to_vec().into()).collect()
}

/// `{a, a+2, a+4, ..}` up to and including `b`; empty when `a > b`.
/// Bounds are signed so that runs like `2, .., i-3` vanish for small `i`.
fn step2(a: i64, b: i64) -> impl Iterator<Item = Vertex> {
    (a..=b).step_by(2).map(|v| v as Vertex)
}

/// Odd `n >= 9`: `S_1, S_2, S_3, T_1, T_3, .., T_{n-2}`.
///
/// `T_i = {i} ∪ {2, 4, .., i-3} ∪ {i+3, i+5, .., n-1}`, where for
/// `i = n-2` the last run is empty. `n-1` is adjacent to `n-2` on the cycle
/// and must not be added there.
fn odd_family(n: usize) -> Vec<VertexSet> {
    let m = n as i64;
    let mut sets: Vec<VertexSet> = vec![
        step2(0, m - 3).collect(),
        std::iter::once(0).chain(step2(3, m - 2)).collect(),
        step2(1, m - 2).collect(),
        std::iter::once(1).chain(step2(4, m - 1)).collect(),
        std::iter::once(3).chain(step2(6, m - 1)).collect(),
        std::iter::once(5)
            .chain(step2(8, m - 1))
            .chain([2])
            .collect(),
    ];
    for i in (7..=m - 2).step_by(2) {
        let upper = if i == m - 2 {
            step2(1, 0)
        } else {
            step2(i + 3, m - 1)
        };
        sets.push(
            std::iter::once(i as Vertex)
                .chain(step2(2, i - 3))
                .chain(upper)
                .collect(),
        );
    }
    sets
}

/// Even `n >= 10`: `S, T_0, T_2, .., T_{n-2}`.
fn even_family(n: usize) -> Vec<VertexSet> {
    let m = n as i64;
    let mut sets: Vec<VertexSet> = vec![
        step2(0, m - 2).collect(),
        std::iter::once(0).chain(step2(3, m - 3)).collect(),
        std::iter::once(2).chain(step2(5, m - 1)).collect(),
    ];
    for i in (4..=m - 4).step_by(2) {
        sets.push(
            std::iter::once(i as Vertex)
                .chain(step2(1, i - 3))
                .chain(step2(i + 3, m - 1))
                .collect(),
        );
    }
    sets.push(std::iter::once(n - 2).chain(step2(1, m - 5)).collect());
    sets
}

/// Turns an edge clique cover of size `k` into a p-edge clique cover of size
/// `k + p - 1` by appending `p - 1` copies of the full vertex set.
///
/// Any p members of the result include at least one original clique, so
/// every p-wise intersection is a clique; an edge covered by clique `S`
/// is covered by `S` together with the `p - 1` copies.
pub fn lift_cover(f: &CliqueCover, p: usize) -> Result<CliqueCover> {
    if p < 1 {
        return Err(invalid("p must be at least 1"));
    }
    let mut sets = f.sets.clone();
    sets.extend(std::iter::repeat_n(VertexSet::full(f.n), p - 1));
    CliqueCover::new(f.n, sets)
}
