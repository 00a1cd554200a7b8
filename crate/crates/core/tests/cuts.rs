mod common;

use cubic2ec::connectivity::{
    edge_connectivity, enumerate_cuts, essential_4cut_with_pair, find_safe_pair, is_2ec,
    is_essentially_4ec, verify_lemma3, Orientation,
};
use cubic2ec::graph::{builtin, Graph};
use cubic2ec::Error;

#[test]
fn connectivity_matches_cut_enumeration() {
    for (line, g) in common::corpus_up_to(12) {
        let min = enumerate_cuts(&g, usize::MAX).unwrap().iter().map(|c| c.size()).min().unwrap();
        assert_eq!(edge_connectivity(&g), min, "{line}");
        assert!(is_2ec(&g, g.all_edges()));
    }
}

#[test]
fn is_2ec_agrees_with_connectivity_on_sparse_graphs() {
    // cycle, two triangles joined by one edge, two triangles joined by two
    let cycle = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
    let bridged = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
    let doubled =
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3), (0, 5)]).unwrap();
    for g in [cycle, bridged, doubled] {
        assert_eq!(is_2ec(&g, g.all_edges()), edge_connectivity(&g) >= 2);
    }
}

#[test]
fn cut_counts() {
    let k4 = builtin("k4").unwrap();
    assert_eq!(enumerate_cuts(&k4, 3).unwrap().len(), 4);
    assert_eq!(enumerate_cuts(&k4, 4).unwrap().len(), 7);
    let p = builtin("petersen").unwrap();
    let small = enumerate_cuts(&p, 3).unwrap();
    assert_eq!(small.len(), 10);
    assert!(small.iter().all(|c| c.shore().len().min(10 - c.shore().len()) == 1));
}

#[test]
fn cube_gadget_cut() {
    // two 4-cycles 0-1-2-3 and 4-5-6-7 joined by i — i+4
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for base in [0, 4] {
        edges.extend((0..4).map(|i| (base + i, base + (i + 1) % 4)));
    }
    edges.extend((0..4).map(|i| (i, i + 4)));
    let g = Graph::new(8, edges).unwrap();
    let e1 = g.edge_between(0, 4).unwrap();
    let e2 = g.edge_between(2, 6).unwrap();
    let cut = essential_4cut_with_pair(&g, e1, e2, (1, 5)).unwrap().unwrap();
    assert_eq!(cut.size(), 4);
    assert!(cut.is_essential(&g));
    assert!(cut.crossing().contains(e1) && cut.crossing().contains(e2));
}

#[test]
fn petersen_pivots_take_straight_orientation() {
    let g = builtin("petersen").unwrap();
    for uv in 0..g.m() {
        let d = find_safe_pair(&g, uv).unwrap();
        assert_eq!(d.orientation, Orientation::Straight);
        assert!(d.witness.is_none());
    }
}

#[test]
fn small_or_split_graphs_rejected() {
    let k33 = builtin("k33").unwrap();
    assert!(matches!(find_safe_pair(&k33, 0), Err(Error::Precondition(_))));
    let prism = builtin("prism").unwrap();
    assert!(matches!(verify_lemma3(&prism), Err(Error::Precondition(_))));
    assert!(!is_essentially_4ec(&prism).unwrap());
}

#[test]
fn crossed_orientation_is_exercised() {
    let mut crossed = 0;
    for (_, g) in common::corpus_up_to(12) {
        if g.n() <= 6 || !is_essentially_4ec(&g).unwrap() {
            continue;
        }
        for uv in 0..g.m() {
            let d = find_safe_pair(&g, uv).unwrap();
            if d.orientation == Orientation::Crossed {
                let w = d.witness.expect("crossed choice records its witness");
                assert!(w.crossing().contains(d.au) || w.crossing().contains(d.bu));
                crossed += 1;
            }
        }
    }
    assert!(crossed > 0);
}
