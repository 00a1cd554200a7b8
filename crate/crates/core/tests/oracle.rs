mod common;

use cubic2ec::combiner::{support_bound, Certifier};
use cubic2ec::connectivity::{enumerate_cuts, is_2ec};
use cubic2ec::graph::builtin;
use cubic2ec::oracle::{exact_opt, integrality_gap, lp_bound};
use cubic2ec::rational::{integer, ratio};
use cubic2ec::{EdgeSet, Graph, Rational};

/// Smallest 2EC spanning edge set by trying every subset; ties broken by
/// sorted edge list.
fn brute_min(g: &Graph) -> EdgeSet {
    (0u128..1 << g.m())
        .map(EdgeSet::from_bits)
        .filter(|&s| is_2ec(g, s))
        .min_by(|a, b| a.len().cmp(&b.len()).then(a.to_vec().cmp(&b.to_vec())))
        .unwrap()
}

#[test]
fn branch_and_bound_matches_brute_force() {
    for (line, g) in common::corpus_up_to(8) {
        let (opt, witness) = exact_opt(&g).unwrap();
        let brute = brute_min(&g);
        assert_eq!(opt, brute.len(), "{line}");
        assert_eq!(witness, brute, "{line}");
    }
    for name in ["k4", "k33", "prism"] {
        let g = builtin(name).unwrap();
        assert_eq!(exact_opt(&g).unwrap().1, brute_min(&g), "{name}");
    }
}

#[test]
fn sandwich_on_corpus() {
    let certifier = Certifier::default();
    for (line, g) in common::corpus_up_to(12) {
        let lp = lp_bound(&g).unwrap();
        let (opt, witness) = exact_opt(&g).unwrap();
        assert!(is_2ec(&g, witness) && witness.len() == opt);
        let support = certifier.certify(&g).unwrap().min_support().unwrap().len();
        assert!(lp.value >= integer(g.n() as i64), "{line}");
        assert!(lp.value <= integer(opt as i64), "{line}");
        assert!(opt <= support && support <= support_bound(g.n()), "{line}");

        let gap = integrality_gap(&g).unwrap();
        assert!(gap.gap >= integer(1) && gap.gap <= ratio(7, 6), "{line}");
        assert!(gap.gap <= ratio(4, 3));
    }
}

#[test]
fn lp_solution_is_feasible_and_tight_somewhere() {
    for (line, g) in common::corpus_up_to(10) {
        let lp = lp_bound(&g).unwrap();
        let total: Rational = lp.x.iter().sum();
        assert_eq!(total, lp.value);
        for cut in enumerate_cuts(&g, usize::MAX).unwrap() {
            let load: Rational = cut.crossing().iter().map(|e| &lp.x[e]).sum();
            assert!(load >= integer(2), "{line}");
        }
        assert!(!lp.tight_cuts.is_empty(), "{line}");
    }
}

#[test]
fn uniform_seven_ninths_is_lp_feasible() {
    for (line, g) in common::corpus_up_to(12) {
        for cut in enumerate_cuts(&g, usize::MAX).unwrap() {
            let load = ratio(7, 9) * integer(cut.size() as i64);
            assert!(load >= integer(2), "{line}");
        }
    }
}

#[test]
fn petersen_lp_is_uniform_two_thirds_valued() {
    let g = builtin("petersen").unwrap();
    let lp = lp_bound(&g).unwrap();
    assert_eq!(lp.value, integer(10));
    // x = 2/3 everywhere is one optimum; whichever vertex is returned has the same value
    let uniform: Rational = (0..g.m()).map(|_| ratio(2, 3)).sum();
    assert_eq!(uniform, lp.value);
    assert_eq!(integrality_gap(&g).unwrap().gap, ratio(11, 10));
}
