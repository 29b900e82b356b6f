mod common;

use pebbling_core::graph::{
    alkane, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, path, spider, tree_meta,
    Graph,
};
use proptest::prelude::*;

#[test]
fn graph6_round_trip_every_graph_up_to_five_vertices() {
    for n in 1..=5 {
        for g in common::all_graphs(n) {
            let text = emit_graph6(&g);
            assert_eq!(parse_graph6(&text).unwrap(), g, "{text}");
        }
    }
}

#[test]
fn graph6_known_strings() {
    assert_eq!(emit_graph6(&path(2)), "A_");
    assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
    let star = Graph::from_edge_list(5, [(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
    assert_eq!(parse_graph6("D?{").unwrap(), star);
    assert!(parse_graph6("").is_err());
}

#[test]
fn edge_list_round_trip() {
    for g in common::all_graphs(4) {
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }
}

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (6..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
            Graph::from_edge_list(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip_random(g in arbitrary_graph(8)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_large(n in 60usize..70, seed in any::<u64>()) {
        let g = common::random_connected(n, n, &mut common::rng(seed));
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn alkanes_are_saturated_trees() {
    for carbons in 1..=12 {
        let g = alkane(carbons);
        assert!(g.is_tree());
        assert_eq!(g.n(), 3 * carbons + 2);
        assert_eq!(g.edge_count(), 3 * carbons + 1);
        assert_eq!(g.max_degree(), 4);
        for v in 0..g.n() {
            let expected = if v < carbons { 4 } else { 1 };
            assert_eq!(g.degree(v), expected);
            assert_eq!(g.label(v), Some(if v < carbons { "C" } else { "H" }));
        }
    }
}

#[test]
fn spiders_have_radius_at_most_two() {
    for root in 0..4 {
        for a in 0..3 {
            for b in 0..3 {
                let children: Vec<usize> = [a, b].into_iter().filter(|&c| c > 0).collect();
                let g = spider(root, &children);
                if g.n() == 1 {
                    continue;
                }
                let meta = tree_meta(&g).unwrap();
                assert!(meta.is_tree && meta.radius <= 2, "{root} {children:?}");
            }
        }
    }
    assert_eq!(tree_meta(&spider(0, &[2, 2])).unwrap().radius, 2);
}

#[test]
fn path_center_eccentricity() {
    for n in 1..=20 {
        let g = path(n);
        let meta = tree_meta(&g).unwrap();
        for &c in &meta.center {
            assert_eq!(g.eccentricity(c), Some((n - 1).div_ceil(2)));
        }
    }
}

#[test]
fn tree_meta_examples() {
    let m = tree_meta(&path(5)).unwrap();
    assert_eq!((m.radius, m.center.clone(), m.leaf_count), (2, vec![2], 2));
    let m = tree_meta(&alkane(1)).unwrap();
    assert_eq!((m.radius, m.center.clone(), m.leaf_count), (1, vec![0], 4));
    let m = tree_meta(&alkane(3)).unwrap();
    assert_eq!((m.radius, m.is_tree, m.leaf_count), (2, true, 8));
    assert!(tree_meta(&Graph::empty(2).unwrap()).is_err());
}
