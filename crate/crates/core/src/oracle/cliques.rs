use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_CLIQUE_GUARD: usize = 32;

/// All inclusion-maximal cliques, sorted lexicographically by members.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    maximal_cliques_with_guard(g, DEFAULT_CLIQUE_GUARD)
}

pub fn maximal_cliques_with_guard(g: &Graph, guard: usize) -> Result<Vec<VertexSet>> {
    let n = g.n();
    // masks are u64
    let guard = guard.min(64);
    if n > guard {
        return Err(Error::Scale {
            what: "maximal clique enumeration",
            n,
            guard,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0, |m, u| m | 1 << u))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(&adj, 0, all, 0, &mut out);
    let mut cliques: Vec<VertexSet> = out.into_iter().map(VertexSet::from_mask).collect();
    cliques.sort();
    Ok(cliques)
}

/// Tomita-style pivoting: branch only on candidates outside the pivot's
/// neighborhood, with the pivot chosen to maximize that neighborhood.
fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p is nonempty");
    for v in bits(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}
