use brickforge::io::{emit_edge_list, emit_sparse6, parse_graph};
use brickforge_core::MultiGraph;
use proptest::prelude::*;

fn multigraph() -> impl Strategy<Value = MultiGraph> {
    (2usize..=64).prop_flat_map(|n| {
        prop::collection::vec((0..n, 1..n), 0..40)
            .prop_map(move |raw| MultiGraph::new(n, raw.into_iter().map(|(u, d)| (u, (u + d) % n))).unwrap())
    })
}

fn sorted_pairs(g: &MultiGraph) -> Vec<(usize, usize)> {
    let mut p = g.live_pairs();
    p.sort_unstable();
    p
}

proptest! {
    #[test]
    fn sparse6_round_trip(g in multigraph()) {
        let s = emit_sparse6(&g);
        let back = parse_graph(&s).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(sorted_pairs(&back), sorted_pairs(&g));
        prop_assert_eq!(emit_sparse6(&back), s);
    }

    #[test]
    fn edge_list_round_trip(g in multigraph()) {
        let text = emit_edge_list(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(sorted_pairs(&back), sorted_pairs(&g));
        prop_assert_eq!(emit_edge_list(&back), text);
    }

    #[test]
    fn emission_ignores_input_order(g in multigraph(), seed in any::<u64>()) {
        let mut pairs = g.live_pairs();
        let len = pairs.len();
        if len > 1 {
            pairs.rotate_left((seed % len as u64) as usize);
        }
        let flipped: Vec<(usize, usize)> = pairs.into_iter().map(|(u, v)| if seed % 2 == 0 { (v, u) } else { (u, v) }).collect();
        let h = MultiGraph::new(g.order(), flipped).unwrap();
        prop_assert_eq!(emit_edge_list(&h), emit_edge_list(&g));
        prop_assert_eq!(emit_sparse6(&h), emit_sparse6(&g));
    }
}
