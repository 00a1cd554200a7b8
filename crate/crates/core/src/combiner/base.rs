use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::connectivity::{edge_connectivity, is_2ec, is_essentially_4ec};
use crate::error::{Error, Result};
use crate::graph::canon::canonical_form;
use crate::graph::{EdgeSet, Graph};
use crate::rational::{integer, seven_ninths, Rational};
use crate::simplex::{minimize, LinearProgram, Relation};

use super::combination::ConvexCombination;

/// Largest order handled by the direct solve.
pub const BASE_MAX_N: usize = 6;

/// Uniform 7/9 combination of a small essentially 4-edge-connected cubic
/// graph, from an exact feasibility LP over all of its 2EC spanning
/// subgraphs (columns in ascending bitmask order).
pub fn base_case_combination(g: &Graph) -> Result<ConvexCombination> {
    if !g.is_cubic() {
        return Err(Error::Precondition("base case needs a cubic graph".into()));
    }
    if g.n() > BASE_MAX_N {
        return Err(Error::Precondition(format!(
            "base case needs n <= {BASE_MAX_N}, got {}",
            g.n()
        )));
    }
    if edge_connectivity(g) < 3 || !is_essentially_4ec(g)? {
        return Err(Error::Precondition(
            "base case needs a 3-edge-connected, essentially 4-edge-connected graph".into(),
        ));
    }
    let m = g.m();
    let columns: Vec<EdgeSet> = (0u128..1 << m)
        .map(EdgeSet::from_bits)
        .filter(|&s| is_2ec(g, s))
        .collect();

    let mut lp = LinearProgram::new(vec![Rational::zero(); columns.len()]);
    for e in 0..m {
        let row = columns
            .iter()
            .map(|s| if s.contains(e) { Rational::one() } else { Rational::zero() })
            .collect();
        lp.add(row, Relation::Eq, seven_ninths());
    }
    lp.add(vec![Rational::one(); columns.len()], Relation::Eq, integer(1));

    let solution = minimize(&lp).map_err(|e| Error::BaseCaseFailure(format!("{} ({e})", g.to_graph6())))?;
    ConvexCombination::new(
        m,
        columns
            .iter()
            .zip(solution.x)
            .filter(|(_, w)| !w.is_zero())
            .map(|(&s, w)| (w, s)),
    )
}

/// Every cubic, 3-edge-connected, essentially 4-edge-connected simple graph
/// with at most six vertices, one per isomorphism class, found by brute
/// force over labeled edge sets. Sorted by order, then canonical graph6.
pub fn base_case_graphs() -> Vec<Graph> {
    let mut found: BTreeMap<(usize, String), Graph> = BTreeMap::new();
    for n in (2..=BASE_MAX_N).step_by(2) {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = 3 * n / 2;
        for bits in 0u32..1 << pairs.len() {
            if bits.count_ones() as usize != m {
                continue;
            }
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &p)| p);
            let g = Graph::new(n, edges).expect("pairs are simple");
            if !g.is_cubic() || edge_connectivity(&g) < 3 {
                continue;
            }
            if !is_essentially_4ec(&g).unwrap_or(false) {
                continue;
            }
            let canon = canonical_form(&g);
            found.entry((n, canon.key())).or_insert(canon.graph);
        }
    }
    found.into_values().collect()
}
