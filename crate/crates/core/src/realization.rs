//! Digraphs realizing a cover: vertex `x` preys on vertex `j` exactly when
//! `x` belongs to the `j`-th set. Pairs then share as many prey as sets, so
//! a p-edge clique cover of `G` with at most `n` sets realizes `G` as a
//! p-competition graph.

use crate::covers::CliqueCover;
use crate::error::{invalid, Error, Result};
use crate::graph::{Digraph, Vertex};

pub fn realize(f: &CliqueCover) -> Result<Digraph> {
    if f.len() > f.n() {
        return Err(Error::Infeasible(format!(
            "a realization on n = {} vertices needs at most n sets, got {} (theta_e^p(G) <= n)",
            f.n(),
            f.len()
        )));
    }
    Digraph::from_arcs(f.n(), arcs(f, |j| j))
}

fn arcs<'a>(
    f: &'a CliqueCover,
    prey_of: impl Fn(usize) -> Vertex + 'a,
) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
    f.sets().iter().enumerate().flat_map(move |(j, s)| {
        let prey = prey_of(j);
        s.iter().map(move |x| (x, prey))
    })
}

/// Positions of each vertex in `order`, or an error if `order` is not a
/// permutation of `0..n`.
fn positions(order: &[Vertex], n: usize) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(invalid(format!(
            "ordering has {} entries, expected {n}",
            order.len()
        )));
    }
    let mut pos = vec![usize::MAX; n];
    for (k, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(invalid(format!("ordering is not a permutation of 0..{n}")));
        }
        pos[v] = k;
    }
    Ok(pos)
}

/// For `order = (v_0, .., v_{n-1})`: every member `x` of set `j` comes
/// strictly before position `j`.
pub fn satisfies_acyclic_ordering(f: &CliqueCover, order: &[Vertex]) -> Result<bool> {
    let pos = positions(order, f.n())?;
    if f.len() != f.n() {
        return Err(invalid(format!(
            "the ordering condition needs exactly n = {} sets, got {}",
            f.n(),
            f.len()
        )));
    }
    Ok(f.sets()
        .iter()
        .enumerate()
        .all(|(j, s)| s.iter().all(|x| pos[x] < j)))
}

/// Realizes `f` with set `j` attached to prey `order[j]`. Under the ordering
/// condition every arc points forward in `order`, so the digraph is acyclic.
pub fn realize_acyclic(f: &CliqueCover, order: &[Vertex]) -> Result<Digraph> {
    if !satisfies_acyclic_ordering(f, order)? {
        return Err(Error::Infeasible(
            "ordering condition violated: some set j contains a vertex at position >= j".into(),
        ));
    }
    Digraph::from_arcs(f.n(), arcs(f, |j| order[j]))
}

/// Kahn's algorithm; a loop is a cycle.
pub fn is_acyclic(d: &Digraph) -> bool {
    let n = d.n();
    let mut indegree = vec![0usize; n];
    for (_, v) in d.arcs() {
        indegree[v] += 1;
    }
    let mut ready: Vec<Vertex> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(x) = ready.pop() {
        seen += 1;
        for &v in d.prey(x) {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(v);
            }
        }
    }
    seen == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::competition::{common_prey_count, p_competition_graph};
    use crate::covers::{complement_cycle_cover, cycle_cover, lift_cover};
    use crate::graph::{complement, make_cycle, Graph};
    use proptest::prelude::*;

    fn cover(n: usize, sets: &[&[usize]]) -> CliqueCover {
        CliqueCover::from_lists(n, sets.iter().map(|s| s.to_vec())).unwrap()
    }

    #[test]
    fn five_cycle_realization() {
        let d = realize(&cycle_cover(5, 2).unwrap()).unwrap();
        assert_eq!(d.arc_count(), 15);
        let into_zero: Vec<_> = d.arcs().filter(|&(_, v)| v == 0).map(|(x, _)| x).collect();
        assert_eq!(into_zero, vec![0, 1, 2]);
    }

    #[test]
    fn empty_sets_give_no_arcs() {
        let d = realize(&cover(4, &[&[], &[], &[]])).unwrap();
        assert_eq!(d, Digraph::empty(4));
    }

    #[test]
    fn too_many_sets() {
        let f = lift_cover(&complement_cycle_cover(6).unwrap(), 4).unwrap();
        assert!(matches!(realize(&f), Err(Error::Infeasible(_))));
    }

    #[test]
    fn lifted_complement_of_c10() {
        let f = lift_cover(&complement_cycle_cover(10).unwrap(), 5).unwrap();
        let d = realize(&f).unwrap();
        assert_eq!(
            p_competition_graph(&d, 5).unwrap(),
            complement(&make_cycle(10).unwrap())
        );
    }

    #[test]
    fn ordering_checks() {
        let id3 = [0, 1, 2];
        assert!(satisfies_acyclic_ordering(&cover(3, &[&[], &[0], &[0, 1]]), &id3).unwrap());
        assert!(satisfies_acyclic_ordering(&cover(3, &[&[], &[0], &[1]]), &id3).unwrap());
        assert!(
            !satisfies_acyclic_ordering(&cycle_cover(5, 2).unwrap(), &[0, 1, 2, 3, 4]).unwrap()
        );
        assert!(satisfies_acyclic_ordering(&cover(3, &[&[], &[0], &[1]]), &[0, 0, 2]).is_err());
        assert!(satisfies_acyclic_ordering(&cover(3, &[&[], &[0], &[1]]), &[0, 1]).is_err());
        assert!(satisfies_acyclic_ordering(&cover(3, &[&[], &[0]]), &id3).is_err());
    }

    #[test]
    fn acyclic_realization() {
        let d = realize_acyclic(&cover(3, &[&[], &[0], &[0, 1]]), &[0, 1, 2]).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(is_acyclic(&d));
        assert!(matches!(
            realize_acyclic(&cycle_cover(5, 2).unwrap(), &[0, 1, 2, 3, 4]),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn three_vertex_path_has_no_acyclic_cover_ordering() {
        // {∅, {0,1}, {1,2}} needs 0 and 1 both before position 1
        let f = cover(3, &[&[], &[0, 1], &[1, 2]]);
        for order in [
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 0, 1],
            [1, 2, 0],
            [2, 1, 0],
        ] {
            assert!(!satisfies_acyclic_ordering(&f, &order).unwrap());
        }
    }

    #[test]
    fn path_with_isolated_vertices_is_acyclically_realized() {
        let path = Graph::from_edges(5, [(0, 1), (1, 2)]).unwrap();
        let f = cover(5, &[&[], &[], &[], &[0, 1], &[1, 2]]);
        let d = realize_acyclic(&f, &[0, 1, 2, 3, 4]).unwrap();
        assert!(is_acyclic(&d));
        assert_eq!(p_competition_graph(&d, 1).unwrap(), path);
    }

    #[test]
    fn relabeled_realization() {
        let f = cover(3, &[&[], &[2], &[2, 0]]);
        let order = [2, 0, 1];
        let d = realize_acyclic(&f, &order).unwrap();
        assert_eq!(d.arcs().collect::<Vec<_>>(), vec![(0, 1), (2, 0), (2, 1)]);
        assert!(is_acyclic(&d));
    }

    #[test]
    fn acyclicity() {
        assert!(is_acyclic(&Digraph::empty(3)));
        assert!(!is_acyclic(&Digraph::from_arcs(1, [(0, 0)]).unwrap()));
        assert!(!is_acyclic(
            &Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
        ));
        assert!(is_acyclic(
            &Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
        ));
    }

    #[test]
    fn cycle_roundtrips() {
        for n in 4..=20 {
            for p in 1..=n - 3 {
                let d = realize(&cycle_cover(n, p).unwrap()).unwrap();
                assert_eq!(
                    p_competition_graph(&d, p).unwrap(),
                    make_cycle(n).unwrap(),
                    "n={n} p={p}"
                );
            }
        }
    }

    fn arb_cover() -> impl Strategy<Value = CliqueCover> {
        (1usize..8).prop_flat_map(|n| {
            proptest::collection::vec(0u64..(1 << n), 0..=n).prop_map(move |masks| {
                CliqueCover::new(
                    n,
                    masks
                        .into_iter()
                        .map(crate::graph::VertexSet::from_mask)
                        .collect(),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn prey_counts_equal_pair_counts(f in arb_cover()) {
            let d = realize(&f).unwrap();
            prop_assert_eq!(d.arc_count(), f.sets().iter().map(|s| s.len()).sum::<usize>());
            for x in 0..f.n() {
                for y in x + 1..f.n() {
                    prop_assert_eq!(common_prey_count(&d, x, y).unwrap(), f.pair_count(x, y));
                }
            }
        }

        #[test]
        fn acyclic_when_ordering_holds(f in arb_cover(), seed in any::<u64>()) {
            let n = f.n();
            let mut sets = f.sets().to_vec();
            sets.resize(n, crate::graph::VertexSet::empty());
            let f = CliqueCover::new(n, sets).unwrap();
            let mut order: Vec<usize> = (0..n).collect();
            // cheap deterministic shuffle
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (s >> 33) as usize % (i + 1));
            }
            if satisfies_acyclic_ordering(&f, &order).unwrap() {
                prop_assert!(is_acyclic(&realize_acyclic(&f, &order).unwrap()));
            } else {
                prop_assert!(realize_acyclic(&f, &order).is_err());
            }
        }
    }
}
