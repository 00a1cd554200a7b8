//! Canonical labeling by colour refinement plus individualization.
//!
//! The search explores every leaf of the individualization tree (no
//! automorphism pruning) and keeps the relabeling whose sorted edge list is
//! lexicographically smallest. That is exponential in the worst case but
//! cheap for the small sparse graphs this crate works with.

use super::{Graph, VertexId};

/// A canonically relabeled copy of a graph.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// Relabeled graph, edges sorted by endpoint pair.
    pub graph: Graph,
    /// `labeling[v]` is the canonical label of input vertex `v`.
    pub labeling: Vec<VertexId>,
}

impl Canonical {
    /// graph6 string of the canonical graph; equal for isomorphic inputs.
    pub fn key(&self) -> String {
        self.graph.to_graph6()
    }
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.n();
    let mut search = Search {
        g,
        best: None,
    };
    if n > 0 {
        let colours = refine(g, vec![0; n]);
        search.descend(colours);
    }
    let (edges, labeling) = search.best.unwrap_or_default();
    let graph = Graph::new(n, edges).expect("relabeling preserves simplicity");
    Canonical { graph, labeling }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<(VertexId, VertexId)>, Vec<VertexId>)>,
}

impl Search<'_> {
    fn descend(&mut self, colours: Vec<usize>) {
        let n = self.g.n();
        let mut sizes = vec![0usize; n];
        for &c in &colours {
            sizes[c] += 1;
        }
        // first non-singleton cell
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(colours);
            return;
        };
        for v in 0..n {
            if colours[v] != target {
                continue;
            }
            let keyed: Vec<(usize, bool)> = colours
                .iter()
                .enumerate()
                .map(|(w, &c)| (c, w != v))
                .collect();
            self.descend(refine(self.g, rank(&keyed)));
        }
    }

    fn leaf(&mut self, labeling: Vec<VertexId>) {
        let mut edges: Vec<_> = self
            .g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (labeling[u], labeling[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if self.best.as_ref().map_or(true, |(b, _)| edges < *b) {
            self.best = Some((edges, labeling));
        }
    }
}

/// Dense ranks of arbitrary ordered keys, preserving order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

/// Equitable refinement: split cells by the multiset of neighbour colours
/// until stable. Cell order depends only on the (colour, signature) pairs,
/// never on vertex names.
fn refine(g: &Graph, mut colours: Vec<usize>) -> Vec<usize> {
    let mut cells = colours.iter().max().map_or(0, |&c| c + 1);
    loop {
        let keyed: Vec<(usize, Vec<usize>)> = (0..g.n())
            .map(|v| {
                let mut sig: Vec<usize> = g.neighbors(v).map(|w| colours[w]).collect();
                sig.sort_unstable();
                (colours[v], sig)
            })
            .collect();
        let next = rank(&keyed);
        let next_cells = next.iter().max().map_or(0, |&c| c + 1);
        colours = next;
        if next_cells == cells {
            return colours;
        }
        cells = next_cells;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::new(g.n(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
    }

    #[test]
    fn labeling_maps_edges_onto_canonical_graph() {
        let g = builtin("petersen").unwrap();
        let c = canonical_form(&g);
        assert!(relabel(&g, &c.labeling).same_edge_set(&c.graph));
    }

    #[test]
    fn distinguishes_prism_and_k33() {
        let a = canonical_form(&builtin("prism").unwrap()).key();
        let b = canonical_form(&builtin("k33").unwrap()).key();
        assert_ne!(a, b);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn invariant_under_relabeling(seed in any::<u64>(), which in 0usize..4) {
            let g = crate::graph::Builtin::ALL[which].graph();
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = relabel(&g, &perm);
            prop_assert_eq!(canonical_form(&g).key(), canonical_form(&h).key());
        }
    }
}
