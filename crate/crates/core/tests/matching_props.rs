use std::collections::BTreeSet;

use brickforge_core::families::{self, enumerate_cubic};
use brickforge_core::{EdgeRef, MultiGraph};
use proptest::prelude::*;

fn multigraph() -> impl Strategy<Value = MultiGraph> {
    (1usize..=5).prop_flat_map(|h| {
        let n = 2 * h;
        prop::collection::vec((0..n, 1..n), 1..16).prop_map(move |raw| {
            MultiGraph::new(n, raw.into_iter().map(|(u, d)| (u, (u + d) % n))).unwrap()
        })
    })
}

/// Bipartite multigraph with classes `{0..h}` and `{h..2h}`, plus a
/// planted perfect matching `i -- h + i` so one always exists.
fn bipartite_with_pm() -> impl Strategy<Value = MultiGraph> {
    (1usize..=5).prop_flat_map(|h| {
        prop::collection::vec((0..h, 0..h), 0..12).prop_map(move |raw| {
            let planted = (0..h).map(|i| (i, h + i));
            MultiGraph::new(2 * h, planted.chain(raw.into_iter().map(|(a, b)| (a, h + b)))).unwrap()
        })
    })
}

/// Every set of `n / 2` edges covering each vertex once, by include/skip
/// recursion over the edge list.
fn oracle_matchings(g: &MultiGraph) -> BTreeSet<Vec<EdgeRef>> {
    fn go(g: &MultiGraph, edges: &[EdgeRef], i: usize, used: u64, chosen: &mut Vec<EdgeRef>, out: &mut BTreeSet<Vec<EdgeRef>>) {
        if 2 * chosen.len() == g.order() {
            out.insert(chosen.clone());
            return;
        }
        if i == edges.len() {
            return;
        }
        let (u, v) = g.ends(edges[i]);
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            chosen.push(edges[i]);
            go(g, edges, i + 1, used | 1 << u | 1 << v, chosen, out);
            chosen.pop();
        }
        go(g, edges, i + 1, used, chosen, out);
    }
    let edges: Vec<EdgeRef> = g.live_edges().collect();
    let mut out = BTreeSet::new();
    go(g, &edges, 0, 0, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #[test]
    fn catalog_is_complete_and_exact(g in multigraph()) {
        let cat = g.perfect_matchings().unwrap();
        let mut ours: Vec<Vec<EdgeRef>> = cat.matchings().iter().map(|m| { let mut m = m.clone(); m.sort(); m }).collect();
        ours.sort();
        let len = ours.len();
        ours.dedup();
        prop_assert_eq!(ours.len(), len, "duplicates");
        let oracle: Vec<Vec<EdgeRef>> = oracle_matchings(&g).into_iter().collect();
        prop_assert_eq!(&ours, &oracle);
        for m in cat.matchings() {
            prop_assert_eq!(2 * m.len(), g.order());
        }
        for e in g.live_edges() {
            let direct = cat.matchings().iter().filter(|m| m.contains(&e)).count();
            prop_assert_eq!(cat.count_with(e), direct);
        }
    }

    #[test]
    fn matching_covered_iff_all_edges_allowed(g in multigraph()) {
        let allowed = g.allowed_edges().unwrap();
        let all: Vec<EdgeRef> = g.live_edges().collect();
        let expected = g.is_connected() && g.edge_count() >= 1 && allowed == all;
        prop_assert_eq!(g.is_matching_covered().unwrap(), expected);
    }

    #[test]
    fn dm_witness_agrees_with_allowed_edges(g in bipartite_with_pm()) {
        prop_assume!(g.is_connected());
        let bip = g.bipartition().unwrap().unwrap();
        prop_assert!(bip.is_balanced());
        let allowed = g.allowed_edges().unwrap();
        for e in g.live_edges() {
            match g.dm_witness(&bip, e).unwrap() {
                None => prop_assert!(allowed.contains(&e)),
                Some(w) => {
                    prop_assert!(!allowed.contains(&e));
                    prop_assert!(w.verify(&g, &bip));
                    prop_assert_eq!(w.edge, e);
                }
            }
        }
    }

    #[test]
    fn bicritical_graphs_are_not_bipartite(g in multigraph()) {
        // K2 is vacuously bicritical.
        if g.order() >= 4 && g.is_bicritical().unwrap() {
            prop_assert!(!g.is_bipartite());
        }
    }
}

#[test]
fn counts_on_named_graphs() {
    assert_eq!(families::k4().perfect_matchings().unwrap().len(), 3);
    let c6 = MultiGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    assert_eq!(c6.perfect_matchings().unwrap().len(), 2);
    let p = families::petersen();
    assert_eq!(p.perfect_matchings().unwrap().len(), oracle_matchings(&p).len());
    assert_eq!(p.perfect_matchings().unwrap().len(), 6);
}

#[test]
fn sweep_graphs_follow_the_matching_invariants() {
    for n in [4, 6, 8, 10] {
        for g in enumerate_cubic(n).unwrap() {
            if g.is_bicritical().unwrap() {
                assert!(!g.is_bipartite());
            }
            if let Some(bip) = g.two_coloring() {
                if g.has_perfect_matching().unwrap() {
                    assert!(bip.is_balanced());
                    let allowed = g.allowed_edges().unwrap();
                    for e in g.live_edges() {
                        let w = g.dm_witness(&bip, e).unwrap();
                        assert_eq!(w.is_none(), allowed.contains(&e));
                        assert!(w.map_or(true, |w| w.verify(&g, &bip)));
                    }
                }
            }
        }
    }
}
