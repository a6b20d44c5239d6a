use brickforge_core::families::{self, enumerate_cubic};
use brickforge_core::{is_isomorphic, EdgeLabel, EdgeRef, MultiGraph, Shore};

fn sweep() -> Vec<MultiGraph> {
    [4, 6, 8, 10].into_iter().flat_map(|n| enumerate_cubic(n).unwrap()).collect()
}

fn bricks() -> Vec<MultiGraph> {
    sweep().into_iter().filter(|g| g.is_brick().unwrap()).collect()
}

fn e4ec_bricks() -> Vec<MultiGraph> {
    bricks().into_iter().filter(|g| g.is_essentially_4ec_cubic().unwrap()).collect()
}

#[test]
fn brick_classes_have_at_most_two_edges() {
    for g in bricks() {
        for class in g.equivalence_classes().unwrap().classes() {
            assert!(class.len() <= 2, "{g:?}");
            if class.len() == 2 {
                assert!(g.delete_edges(class).unwrap().is_bipartite());
            }
        }
    }
}

#[test]
fn bipartite_equivalent_pairs_are_balanced_two_cuts() {
    // Bipartite cubic graphs with 2-edge cuts first appear at order 12;
    // deleting two edges of a smaller one also creates equivalent pairs.
    let mut fixtures: Vec<MultiGraph> = Vec::new();
    let cubic = sweep().into_iter().chain(enumerate_cubic(12).unwrap());
    for g in cubic.filter(|g| g.is_bipartite()) {
        let edges: Vec<EdgeRef> = g.live_edges().collect();
        if g.order() <= 8 {
            for (i, &e) in edges.iter().enumerate() {
                for &f in &edges[i + 1..] {
                    let h = g.delete_edges(&[e, f]).unwrap().compact();
                    if h.is_matching_covered().unwrap() {
                        fixtures.push(h);
                    }
                }
            }
        }
        fixtures.push(g);
    }
    let mut pairs_seen = 0;
    for g in fixtures {
        for class in g.equivalence_classes().unwrap().classes() {
            for (i, &e1) in class.iter().enumerate() {
                for &e2 in &class[i + 1..] {
                    pairs_seen += 1;
                    let rest = g.delete_edges(&[e1, e2]).unwrap();
                    let sides = rest.components();
                    assert_eq!(sides.len(), 2, "{e1}, {e2} in {g:?}");
                    let x: Shore = sides[0];
                    let mut cut = g.cut_edges(x).unwrap();
                    cut.sort();
                    assert_eq!(cut, vec![e1.min(e2), e1.max(e2)]);
                    for side in sides {
                        let members: Vec<usize> = side.vertices().collect();
                        let inner = MultiGraph::new(
                            members.len(),
                            g.induced_edges(side).into_iter().map(|f| {
                                let (u, v) = g.ends(f);
                                let at = |w| members.iter().position(|&m| m == w).unwrap();
                                (at(u), at(v))
                            }),
                        )
                        .unwrap();
                        let colouring = inner.two_coloring().expect("bipartite side");
                        assert!(colouring.is_balanced());
                    }
                }
            }
        }
    }
    assert!(pairs_seen > 0);
}

#[test]
fn doubletons_are_classes() {
    for g in bricks() {
        let classes = g.equivalence_classes().unwrap();
        for (e, f) in g.removable_doubletons().unwrap() {
            assert_eq!(classes.class_of(e).unwrap(), &[e, f]);
        }
    }
}

#[test]
fn trichotomy_covers_every_edge() {
    for g in e4ec_bricks() {
        let labels = g.classify_edges().unwrap();
        assert!(labels.iter().all(|(_, l)| l != EdgeLabel::NonRemovableOther), "{g:?}");
        let total = labels.doubleton_members().len() + labels.b_invariant().len() + labels.quasi_b_invariant().len();
        assert_eq!(2 * total, 3 * g.order());
    }
}

#[test]
fn near_bipartite_graphs_have_one_brick() {
    for g in sweep() {
        if g.is_matching_covered().unwrap() && !g.is_bipartite() && g.is_near_bipartite().unwrap().is_some() {
            assert_eq!(g.brick_number().unwrap(), 1, "{g:?}");
        }
    }
}

#[test]
fn three_exclusive_doubletons_force_k4_or_c6_bar() {
    let targets = [families::k4(), families::c6_bar()];
    let mut hits = 0;
    for g in bricks() {
        let ds = g.removable_doubletons().unwrap();
        let excl = |a: (EdgeRef, EdgeRef), b: (EdgeRef, EdgeRef)| {
            g.mutually_exclusive(&[a.0, a.1], &[b.0, b.1]).unwrap()
        };
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                for k in j + 1..ds.len() {
                    if excl(ds[i], ds[j]) && excl(ds[i], ds[k]) && excl(ds[j], ds[k]) {
                        hits += 1;
                        let simple = g.underlying_simple();
                        assert!(targets.iter().any(|t| is_isomorphic(&simple, t, false)), "{g:?}");
                    }
                }
            }
        }
    }
    assert!(hits >= 2);
}

#[test]
fn shared_vertex_partners_meet() {
    for g in bricks() {
        assert!(g.shared_vertex_doubleton_check().unwrap().is_empty(), "{g:?}");
    }
}

#[test]
fn chains_validate_on_conforming_inputs() {
    let k4 = families::k4();
    for g in e4ec_bricks() {
        let ds = g.removable_doubletons().unwrap();
        if ds.len() < 2 {
            continue;
        }
        // Every subset of at least two doubletons.
        for mask in 1u32..(1 << ds.len()) {
            if mask.count_ones() < 2 {
                continue;
            }
            let chosen: Vec<_> = (0..ds.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ds[i]).collect();
            let result = g.chain_decomposition(&chosen);
            // All three doubletons of K4 leave four isolated vertices.
            if is_isomorphic(&g, &k4, true) && chosen.len() == 3 {
                assert!(result.is_err());
                continue;
            }
            let chain = result.unwrap_or_else(|err| panic!("{err} on {g:?} with {chosen:?}"));
            assert_eq!(chain.pieces.len(), chosen.len());
        }
    }
}

#[test]
fn extremal_chains_are_single_edges() {
    for g in [families::moebius(8).unwrap(), families::prism(10).unwrap()] {
        let ds = g.removable_doubletons().unwrap();
        let chain = g.chain_decomposition(&ds).unwrap();
        assert_eq!(chain.pieces.len(), g.order() / 2);
        assert!(chain.pieces.iter().all(|p| p.vertices.len() == 2 && g.induced_edges(p.vertices).len() == 1));
    }
}
