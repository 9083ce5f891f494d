#![allow(dead_code)]

//! The p-edge clique cover definition taken literally: enumerate every
//! p-subset J of the family, require each intersection to be a clique, and
//! require the intersections to cover every edge. Shares no code with the
//! pair-count verifier.

use pcomp_core::{CliqueCover, Graph};

pub fn is_p_ecc_literal(g: &Graph, f: &CliqueCover, p: usize) -> bool {
    let n = g.n();
    let masks: Vec<u64> = f
        .sets()
        .iter()
        .map(|s| s.iter().fold(0, |m, v| m | 1 << v))
        .collect();
    let mut covered = vec![false; n * n];
    let mut all_cliques = true;
    let mut chosen = Vec::with_capacity(p);
    for_each_p_subset(masks.len(), p, 0, &mut chosen, &mut |j| {
        let inter = j.iter().fold(u64::MAX, |m, &k| m & masks[k]);
        for u in 0..n {
            for v in u + 1..n {
                if inter >> u & 1 == 1 && inter >> v & 1 == 1 {
                    if g.has_edge(u, v) {
                        covered[u * n + v] = true;
                    } else {
                        all_cliques = false;
                    }
                }
            }
        }
    });
    all_cliques && g.edges().all(|(u, v)| covered[u * n + v])
}

fn for_each_p_subset(
    r: usize,
    p: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == p {
        visit(chosen);
        return;
    }
    for k in from..r {
        chosen.push(k);
        for_each_p_subset(r, p, k + 1, chosen, visit);
        chosen.pop();
    }
}

/// Whether some multifamily of exactly `r` subsets of `V` passes the
/// literal definition. Families are nondecreasing mask sequences over all
/// `2^n` subsets; the only cut is a non-adjacent pair reaching `p` shared
/// members, after which no p-subset can avoid a non-clique intersection.
pub fn exists_literal_family(g: &Graph, p: usize, r: usize) -> bool {
    fn go(
        g: &Graph,
        p: usize,
        r: usize,
        from: u64,
        fam: &mut Vec<u64>,
        counts: &mut [usize],
    ) -> bool {
        let n = g.n();
        if fam.len() == r {
            let f = CliqueCover::new(
                n,
                fam.iter()
                    .map(|&m| pcomp_core::VertexSet::from_mask(m))
                    .collect(),
            )
            .unwrap();
            return is_p_ecc_literal(g, &f, p);
        }
        for m in from..1u64 << n {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| m >> u & 1 == 1 && m >> v & 1 == 1)
                .collect();
            if pairs
                .iter()
                .any(|&(u, v)| !g.has_edge(u, v) && counts[u * n + v] + 1 >= p)
            {
                continue;
            }
            pairs.iter().for_each(|&(u, v)| counts[u * n + v] += 1);
            fam.push(m);
            let found = go(g, p, r, m, fam, counts);
            fam.pop();
            pairs.iter().for_each(|&(u, v)| counts[u * n + v] -= 1);
            if found {
                return true;
            }
        }
        false
    }
    go(g, p, r, 0, &mut Vec::new(), &mut vec![0; g.n() * g.n()])
}
