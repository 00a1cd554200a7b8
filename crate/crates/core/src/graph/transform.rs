//! The two graph reductions used by the inductive construction.
//!
//! Both return a [`Reduction`]: the smaller child graph plus enough
//! provenance to map child edge sets back onto the parent.

use super::{EdgeId, EdgeSet, Graph, VertexId};
use crate::connectivity::Cut;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    /// Two non-adjacent edges removed, degree-2 vertices smoothed away.
    Case1Removal,
    /// One shore of an essential 3-cut contracted to a pseudo-vertex.
    Case2Contraction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Keep the cut's stored shore.
    Inside,
    /// Keep the complement of the stored shore.
    Outside,
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub kind: ReductionKind,
    pub child: Graph,
    /// For every child edge, the parent path it stands for.
    pub edge_provenance: Vec<Vec<EdgeId>>,
    /// Parent edges present in every lifted subgraph.
    pub forced_include: EdgeSet,
    /// Parent edges absent from every lifted subgraph.
    pub forced_exclude: EdgeSet,
    /// Contraction only: the child vertex replacing the contracted shore.
    pub pseudo_vertex: Option<VertexId>,
    /// Contraction only: `(child edge at the pseudo-vertex, parent cut edge)`.
    pub cut_correspondence: Vec<(EdgeId, EdgeId)>,
    /// Contraction only: the parent vertices kept intact.
    pub kept_shore: u64,
}

impl Reduction {
    /// Maps a child edge set onto parent edges: every included child edge
    /// contributes its whole path, then forced edges are applied.
    pub fn lift_edges(&self, child_edges: EdgeSet) -> EdgeSet {
        let mut out = EdgeSet::empty();
        for e in child_edges.iter() {
            for &p in &self.edge_provenance[e] {
                out.insert(p);
            }
        }
        out.union(self.forced_include).difference(self.forced_exclude)
    }
}

/// Removes two non-adjacent edges of a cubic graph and smooths the four
/// resulting degree-2 vertices.
///
/// Edges adjacent to either removed edge become `forced_include`; the removed
/// edges are `forced_exclude`. Surviving vertices are relabeled in order.
/// Child edges are sorted by endpoint pair.
pub fn remove_edges_and_smooth(g: &Graph, e1: EdgeId, e2: EdgeId) -> Result<Reduction> {
    if !g.is_cubic() {
        return Err(Error::Precondition("remove_edges_and_smooth needs a cubic graph".into()));
    }
    if e1 >= g.m() || e2 >= g.m() || e1 == e2 {
        return Err(Error::Precondition(format!("invalid edge pair ({e1}, {e2})")));
    }
    if g.adjacent_edges(e1, e2) {
        return Err(Error::Precondition(format!(
            "edges {e1} and {e2} share an endpoint"
        )));
    }

    // Working multigraph: (x, y, path from x to y), `None` once consumed.
    let mut work: Vec<Option<(VertexId, VertexId, Vec<EdgeId>)>> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| Some((u, v, vec![e])))
        .collect();
    work[e1] = None;
    work[e2] = None;

    let mut smoothed: Vec<VertexId> = [g.endpoints(e1), g.endpoints(e2)]
        .into_iter()
        .flat_map(|(a, b)| [a, b])
        .collect();
    smoothed.sort_unstable();

    for &s in &smoothed {
        let at_s: Vec<usize> = work
            .iter()
            .enumerate()
            .filter_map(|(i, w)| match w {
                Some((x, y, _)) if *x == s || *y == s => Some(i),
                _ => None,
            })
            .collect();
        if at_s.len() != 2 {
            return Err(Error::StructuralViolation(format!(
                "vertex {s} has degree {} while smoothing",
                at_s.len()
            )));
        }
        let (x1, y1, p1) = work[at_s[0]].take().unwrap();
        let (x2, y2, p2) = work[at_s[1]].take().unwrap();
        if (x1 == s && y1 == s) || (x2 == s && y2 == s) {
            return Err(Error::StructuralViolation(format!("loop at vertex {s}")));
        }
        // path t -> s, then s -> r
        let (t, mut path) = if y1 == s { (x1, p1) } else { (y1, p1.into_iter().rev().collect()) };
        let (r, tail) = if x2 == s { (y2, p2) } else { (x2, p2.into_iter().rev().collect()) };
        if t == r {
            return Err(Error::StructuralViolation(format!(
                "smoothing vertex {s} would create a loop at {t}"
            )));
        }
        path.extend(tail);
        work.push(Some((t, r, path)));
    }

    let mut relabel = vec![usize::MAX; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if smoothed.binary_search(&v).is_err() {
            relabel[v] = next;
            next += 1;
        }
    }

    let mut child_edges: Vec<((VertexId, VertexId), Vec<EdgeId>)> = work
        .into_iter()
        .flatten()
        .map(|(x, y, path)| {
            let (a, b) = (relabel[x], relabel[y]);
            if a < b {
                ((a, b), path)
            } else {
                ((b, a), path.into_iter().rev().collect())
            }
        })
        .collect();
    child_edges.sort();
    for pair in child_edges.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::StructuralViolation(format!(
                "smoothing creates parallel edges between parent paths {:?} and {:?}",
                pair[0].1, pair[1].1
            )));
        }
    }

    let child = Graph::new(next, child_edges.iter().map(|(p, _)| *p))
        .map_err(|e| Error::StructuralViolation(format!("child graph invalid: {e}")))?;
    if !child.is_cubic() {
        return Err(Error::StructuralViolation("child graph is not cubic".into()));
    }

    let forced_exclude: EdgeSet = [e1, e2].into_iter().collect();
    let forced_include: EdgeSet = (0..g.m())
        .filter(|&f| g.adjacent_edges(f, e1) || g.adjacent_edges(f, e2))
        .filter(|f| !forced_exclude.contains(*f))
        .collect();

    Ok(Reduction {
        kind: ReductionKind::Case1Removal,
        child,
        edge_provenance: child_edges.into_iter().map(|(_, p)| p).collect(),
        forced_include,
        forced_exclude,
        pseudo_vertex: None,
        cut_correspondence: Vec::new(),
        kept_shore: 0,
    })
}

/// Keeps one shore of an essential 3-edge cut and contracts the other to a
/// single pseudo-vertex (labelled last).
pub fn contract_shore(g: &Graph, cut: &Cut, side: Side) -> Result<Reduction> {
    if !g.is_cubic() {
        return Err(Error::Precondition("contract_shore needs a cubic graph".into()));
    }
    if cut.size() != 3 || !cut.is_essential(g) {
        return Err(Error::Precondition(format!(
            "shore {:?} is not an essential 3-edge cut",
            cut.shore()
        )));
    }
    let mut ends: Vec<VertexId> = cut
        .crossing()
        .iter()
        .flat_map(|e| {
            let (a, b) = g.endpoints(e);
            [a, b]
        })
        .collect();
    ends.sort_unstable();
    ends.dedup();
    if ends.len() != 6 {
        return Err(Error::Precondition("cut edges do not have six distinct ends".into()));
    }

    let kept = match side {
        Side::Inside => cut.shore_mask(),
        Side::Outside => g.vertex_mask() & !cut.shore_mask(),
    };
    let mut relabel = vec![usize::MAX; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if kept >> v & 1 == 1 {
            relabel[v] = next;
            next += 1;
        }
    }
    let pseudo = next;

    let mut pairs = Vec::new();
    let mut provenance = Vec::new();
    let mut correspondence = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (in_u, in_v) = (kept >> u & 1 == 1, kept >> v & 1 == 1);
        let pair = match (in_u, in_v) {
            (true, true) => (relabel[u], relabel[v]),
            (true, false) => (relabel[u], pseudo),
            (false, true) => (relabel[v], pseudo),
            (false, false) => continue,
        };
        if in_u != in_v {
            correspondence.push((pairs.len(), e));
        }
        pairs.push(pair);
        provenance.push(vec![e]);
    }
    let child = Graph::new(pseudo + 1, pairs)
        .map_err(|e| Error::StructuralViolation(format!("contracted graph invalid: {e}")))?;

    Ok(Reduction {
        kind: ReductionKind::Case2Contraction,
        child,
        edge_provenance: provenance,
        forced_include: EdgeSet::empty(),
        forced_exclude: EdgeSet::empty(),
        pseudo_vertex: Some(pseudo),
        cut_correspondence: correspondence,
        kept_shore: kept,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{find_essential_3cut, find_safe_pair, is_2ec};
    use crate::graph::builtin;

    #[test]
    fn petersen_removal_gives_cubic_six_vertex_child() {
        let g = builtin("petersen").unwrap();
        let d = find_safe_pair(&g, 0).unwrap();
        for (e1, e2) in d.removals() {
            let red = remove_edges_and_smooth(&g, e1, e2).unwrap();
            assert_eq!(red.child.n(), g.n() - 4);
            assert_eq!(red.child.m(), g.m() - 6);
            assert!(red.child.is_cubic());
            assert_eq!(red.forced_exclude.to_vec(), {
                let mut v = vec![e1, e2];
                v.sort();
                v
            });
            // pivot edge and both far pairs are forced
            assert!(red.forced_include.contains(d.pivot));
            assert_eq!(red.forced_include.len(), 7);
            // provenance partitions the parent edges minus the removed pair
            let mut seen = red.forced_exclude;
            for path in &red.edge_provenance {
                for &p in path {
                    assert!(!seen.contains(p));
                    seen.insert(p);
                }
            }
            assert_eq!(seen, g.all_edges());
            // every forced edge lies on a merged path
            let merged: EdgeSet = red
                .edge_provenance
                .iter()
                .filter(|p| p.len() > 1)
                .flatten()
                .copied()
                .collect();
            assert!(red.forced_include.is_subset(merged));
        }
    }

    #[test]
    fn lift_of_full_child_is_parent_minus_removed() {
        let g = builtin("petersen").unwrap();
        let d = find_safe_pair(&g, 3).unwrap();
        let (e1, e2) = d.removals()[0];
        let red = remove_edges_and_smooth(&g, e1, e2).unwrap();
        let lifted = red.lift_edges(red.child.all_edges());
        assert_eq!(lifted, g.all_edges().difference(red.forced_exclude));
        assert!(is_2ec(&g, lifted));
        // dropping the merged u-v path still keeps it, since it is forced
        let uv_path = red
            .edge_provenance
            .iter()
            .position(|p| p.contains(&d.pivot))
            .unwrap();
        let lifted = red.lift_edges(red.child.all_edges().without(uv_path));
        assert!(lifted.contains(d.pivot));
    }

    #[test]
    fn adjacent_pair_is_rejected() {
        let g = builtin("petersen").unwrap();
        // edges 0 = (0,1) and 1 = (1,2) share vertex 1
        assert!(matches!(
            remove_edges_and_smooth(&g, 0, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn unsafe_pair_raises_structural_violation() {
        // K33: removing two disjoint edges leaves a 2-vertex multigraph.
        let g = builtin("k33").unwrap();
        let e1 = g.edge_between(0, 3).unwrap();
        let e2 = g.edge_between(1, 4).unwrap();
        assert!(matches!(
            remove_edges_and_smooth(&g, e1, e2),
            Err(Error::StructuralViolation(_))
        ));
    }

    #[test]
    fn prism_contracts_to_k4() {
        let g = builtin("prism").unwrap();
        let cut = find_essential_3cut(&g).unwrap().unwrap();
        let k4 = builtin("k4").unwrap();
        let inside = contract_shore(&g, &cut, Side::Inside).unwrap();
        let outside = contract_shore(&g, &cut, Side::Outside).unwrap();
        for red in [&inside, &outside] {
            assert_eq!(red.child.n(), 4);
            assert!(red.child.is_cubic());
            assert!(crate::graph::canon::canonical_form(&red.child).key()
                == crate::graph::canon::canonical_form(&k4).key());
            assert_eq!(red.pseudo_vertex, Some(3));
            let cut_edges: Vec<_> = red.cut_correspondence.iter().map(|&(_, p)| p).collect();
            assert_eq!(cut_edges, cut.crossing().to_vec());
            for &(c, _) in &red.cut_correspondence {
                let (a, b) = red.child.endpoints(c);
                assert!(a == 3 || b == 3);
            }
        }
        assert_eq!(inside.child.n() + outside.child.n(), g.n() + 2);
    }

    #[test]
    fn trivial_cut_is_rejected() {
        let g = builtin("prism").unwrap();
        let cut = Cut::from_vertices(&g, &[4]).unwrap();
        assert!(matches!(
            contract_shore(&g, &cut, Side::Inside),
            Err(Error::Precondition(_))
        ));
    }
}
