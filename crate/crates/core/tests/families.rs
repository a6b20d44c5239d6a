use std::collections::VecDeque;

use brickforge_core::families::{self, FamilySpec};
use brickforge_core::{is_isomorphic, MultiGraph};

fn girth(g: &MultiGraph) -> usize {
    let n = g.order();
    let inc = g.incidence();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &(e, u) in &inc[v] {
                if e.0 == via[v] {
                    continue;
                }
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    via[u] = e.0;
                    queue.push_back(u);
                } else {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    best
}

#[test]
fn members_are_cubic_and_connected() {
    let mut specs = vec![FamilySpec::K4, FamilySpec::C6Bar, FamilySpec::Petersen, FamilySpec::Cubeplex];
    for n in (4..=16).step_by(2) {
        specs.push(FamilySpec::Prism(n));
        specs.push(FamilySpec::Moebius(n));
    }
    for spec in specs {
        let g = families::generate(spec).unwrap();
        assert!(g.is_cubic() && g.is_connected(), "{spec}");
    }
}

#[test]
fn closed_ladders_contain_a_spanning_ladder() {
    for k in 2..=8 {
        let h = families::ladder(k).unwrap();
        for g in [families::prism(2 * k).unwrap(), families::moebius(2 * k).unwrap()] {
            assert_eq!(g.order(), h.order());
            // The identity map embeds H_k; the two leftover edges close it.
            let mut rest = g.live_pairs();
            for pair in h.live_pairs() {
                let at = rest.iter().position(|&p| p == pair).expect("ladder edge present");
                rest.swap_remove(at);
            }
            assert_eq!(rest.len(), 2);
            let ends = [0, 1, 2 * k - 2, 2 * k - 1];
            assert!(rest.iter().all(|&(u, v)| ends.contains(&u) && ends.contains(&v)));
        }
    }
}

#[test]
fn petersen_shape() {
    let p = families::petersen();
    assert_eq!((p.order(), p.edge_count()), (10, 15));
    assert_eq!(girth(&p), 5);
    assert!(p.degrees().iter().all(|&d| d == 3));
    assert_eq!(p.perfect_matchings().unwrap().len(), 6);
    assert!(!is_isomorphic(&p, &families::prism(10).unwrap(), true));
    assert_eq!(girth(&families::prism(10).unwrap()), 4);
}

#[test]
fn cubeplex_gate() {
    let g = families::cubeplex();
    assert_eq!((g.order(), g.edge_count()), (12, 18));
    assert!(g.is_cubic());
    assert!(g.is_brick().unwrap());
    assert!(g.is_essentially_4ec_cubic().unwrap());
    assert!(g.is_near_bipartite().unwrap().is_some());
    let labels = g.classify_edges().unwrap();
    assert_eq!(labels.b_invariant().len(), 14);
    assert!(labels.has_adjacent_quasi_pair(&g));
}

#[test]
fn small_identities() {
    assert!(is_isomorphic(&families::prism(6).unwrap(), &families::c6_bar(), true));
    assert!(is_isomorphic(&families::moebius(4).unwrap(), &families::k4(), true));
    let c4 = MultiGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert!(is_isomorphic(&families::ladder(2).unwrap(), &c4, true));
}
