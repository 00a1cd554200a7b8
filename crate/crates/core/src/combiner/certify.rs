use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::connectivity::{
    edge_connectivity, find_essential_3cut, find_safe_pair, is_2ec, safe_pair_with, Cut, FourCuts,
    Orientation, SafePairDecision,
};
use crate::error::{Error, Result};
use crate::graph::canon::canonical_form;
use crate::graph::transform::{
    contract_shore, remove_edges_and_smooth, Reduction, ReductionKind, Side,
};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::rational::{integer, ratio, seven_ninths, to_fraction_string, Rational};

use super::base::{base_case_combination, BASE_MAX_N};
use super::certificate::{Certificate, PivotRecord, Step, TraceRecord};
use super::combination::{
    average, edge_occurrences, is_uniform_pattern, pad_to_uniform, vertex_patterns,
    ConvexCombination,
};

/// Default cap on the order of graphs accepted by [`Certifier`].
pub const DEFAULT_MAX_N: usize = 14;

/// Neighbourhood counts around a pivot edge `uv`: `t` edges join two of
/// `a, b, c, d`, and `r` edges join one of them to a vertex outside
/// `{u, v, a, b, c, d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Case1Profile {
    pub pivot: EdgeId,
    pub t: usize,
    pub r: usize,
}

/// One pivot's reduction: `½ C₁′ + ½ C₂′` and how it was obtained.
#[derive(Debug, Clone)]
pub struct Case1Outcome {
    pub combination: ConvexCombination,
    pub profile: Case1Profile,
    pub decision: SafePairDecision,
    /// Canonical graph6 keys of the two reduced graphs.
    pub children: [String; 2],
}

struct Node {
    combination: ConvexCombination,
    record: TraceRecord,
}

/// Builds uniform 7/9 certificates, memoizing every intermediate graph by
/// canonical form.
///
/// Intermediate graphs are always solved in canonical labeling, so results
/// do not depend on which labeled copy reached the cache first.
pub struct Certifier {
    max_n: usize,
    cache: Mutex<HashMap<String, Arc<Node>>>,
}

impl Default for Certifier {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_N)
    }
}

impl Certifier {
    pub fn new(max_n: usize) -> Self {
        Certifier {
            max_n,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Number of distinct intermediate graphs solved so far.
    pub fn cached_graphs(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    pub fn certify(&self, g: &Graph) -> Result<Certificate> {
        let node = self.construct(g)?;
        let trace = self.collect_trace(node.record);
        Ok(Certificate {
            graph: g.clone(),
            combination: node.combination,
            target: seven_ninths(),
            trace,
        })
    }

    /// The reduction around a single pivot edge, children certified
    /// recursively. Occurrences are checked against [`z_vector`].
    pub fn reduce_case1(&self, g: &Graph, uv: EdgeId) -> Result<Case1Outcome> {
        self.check_size(g)?;
        let decision = find_safe_pair(g, uv)?;
        self.pivot(g, decision)
    }

    fn check_size(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_n {
            return Err(Error::TooLarge(format!(
                "certify supports n <= {}, got n = {}",
                self.max_n,
                g.n()
            )));
        }
        Ok(())
    }

    fn construct(&self, g: &Graph) -> Result<Node> {
        self.check_size(g)?;
        if !g.is_cubic() {
            return Err(Error::Precondition("graph is not cubic".into()));
        }
        let lambda = edge_connectivity(g);
        if lambda < 3 {
            return Err(Error::Precondition(format!(
                "graph is not 3-edge-connected (edge connectivity {lambda})"
            )));
        }
        if let Some(cut) = find_essential_3cut(g)? {
            self.case2(g, &cut)
        } else if g.n() <= BASE_MAX_N {
            Ok(Node {
                combination: base_case_combination(g)?,
                record: TraceRecord {
                    graph: g.to_graph6(),
                    step: Step::Base,
                },
            })
        } else {
            self.case1(g)
        }
    }

    /// Certificate for an intermediate graph, relabeled onto `g`, plus the
    /// canonical key it is cached under.
    fn combination_for(&self, g: &Graph) -> Result<(ConvexCombination, String)> {
        let canon = canonical_form(g);
        let key = canon.key();
        let cached = self.cache.lock().unwrap().get(&key).cloned();
        let node = match cached {
            Some(node) => node,
            None => {
                let node = Arc::new(self.construct(&canon.graph)?);
                self.cache
                    .lock()
                    .unwrap()
                    .entry(key.clone())
                    .or_insert(node)
                    .clone()
            }
        };
        let mut map = vec![0; g.m()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let ce = canon
                .graph
                .edge_between(canon.labeling[u], canon.labeling[v])
                .expect("canonical graph is a relabeling");
            map[ce] = e;
        }
        Ok((node.combination.map_edges(g.m(), &map)?, key))
    }

    fn case1(&self, g: &Graph) -> Result<Node> {
        let four = FourCuts::new(g)?;
        let outcomes: Vec<Case1Outcome> = (0..g.m())
            .into_par_iter()
            .map(|uv| self.pivot(g, safe_pair_with(g, &four, uv)?))
            .collect::<Result<_>>()?;

        let m = g.m();
        let share = ratio(1, m as i64);
        let parts: Vec<(Rational, &ConvexCombination)> =
            outcomes.iter().map(|o| (share.clone(), &o.combination)).collect();
        let averaged = average(&parts)?;

        let occ = edge_occurrences(&averaged);
        for (e, (t, r)) in edge_profiles(g).into_iter().enumerate() {
            let closed = seven_ninths() + ratio(2 * t as i64 + r as i64 - 8, 9 * m as i64);
            if occ[e] != closed || occ[e] > seven_ninths() {
                return Err(Error::StructuralViolation(format!(
                    "edge {e} averages {} but (t, r) = ({t}, {r}) gives {}",
                    to_fraction_string(&occ[e]),
                    to_fraction_string(&closed)
                )));
            }
        }
        let combination = pad_to_uniform(&averaged, &seven_ninths())?;

        let pivots = outcomes
            .into_iter()
            .map(|o| {
                let d = &o.decision;
                let removed = d.removals().map(|(x, y)| [x, y]);
                PivotRecord {
                    pivot: d.pivot,
                    orientation: match d.orientation {
                        Orientation::Straight => "straight",
                        Orientation::Crossed => "crossed",
                    }
                    .to_string(),
                    removed,
                    witness_shore: d.witness.map(|c| c.shore()),
                    children: o.children,
                }
            })
            .collect();
        Ok(Node {
            combination,
            record: TraceRecord {
                graph: g.to_graph6(),
                step: Step::Case1 { pivots },
            },
        })
    }

    fn pivot(&self, g: &Graph, decision: SafePairDecision) -> Result<Case1Outcome> {
        let mut lifted = Vec::with_capacity(2);
        let mut children = Vec::with_capacity(2);
        for (e1, e2) in decision.removals() {
            let red = remove_edges_and_smooth(g, e1, e2)?;
            let lambda = edge_connectivity(&red.child);
            if lambda < 3 {
                return Err(Error::StructuralViolation(format!(
                    "removing edges {e1} and {e2} leaves edge connectivity {lambda}"
                )));
            }
            let (child, key) = self.combination_for(&red.child)?;
            lifted.push(lift(g, &red, &child)?);
            children.push(key);
        }
        let half = ratio(1, 2);
        let combination = average(&[(half.clone(), &lifted[0]), (half, &lifted[1])])?;

        let expected = z_vector(g, &decision);
        let occ = edge_occurrences(&combination);
        if let Some(e) = (0..g.m()).find(|&e| occ[e] != expected[e]) {
            return Err(Error::StructuralViolation(format!(
                "pivot {}: edge {e} occurs {}, expected {}",
                decision.pivot,
                to_fraction_string(&occ[e]),
                to_fraction_string(&expected[e])
            )));
        }
        let profile = case1_profile(g, &decision);
        let children: [String; 2] = children.try_into().expect("two children");
        Ok(Case1Outcome {
            combination,
            profile,
            decision,
            children,
        })
    }

    fn case2(&self, g: &Graph, cut: &Cut) -> Result<Node> {
        let red1 = contract_shore(g, cut, Side::Inside)?;
        let red2 = contract_shore(g, cut, Side::Outside)?;
        let mut keys = Vec::with_capacity(2);
        let mut combos = Vec::with_capacity(2);
        for red in [&red1, &red2] {
            let lambda = edge_connectivity(&red.child);
            if lambda < 3 {
                return Err(Error::StructuralViolation(format!(
                    "contracted side has edge connectivity {lambda}"
                )));
            }
            let (c, key) = self.combination_for(&red.child)?;
            combos.push(c);
            keys.push(key);
        }
        let combination = glue(g, &red1, &combos[0], &red2, &combos[1])?;
        Ok(Node {
            combination,
            record: TraceRecord {
                graph: g.to_graph6(),
                step: Step::Case2 {
                    shore: cut.shore(),
                    cut_edges: cut.crossing().to_vec(),
                    children: keys.try_into().expect("two children"),
                },
            },
        })
    }

    fn collect_trace(&self, top: TraceRecord) -> Vec<TraceRecord> {
        let cache = self.cache.lock().unwrap();
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        let mut out = Vec::new();
        let mut visit = |record: &TraceRecord, queue: &mut VecDeque<String>| {
            let children: Vec<&String> = match &record.step {
                Step::Base => Vec::new(),
                Step::Case1 { pivots } => pivots.iter().flat_map(|p| p.children.iter()).collect(),
                Step::Case2 { children, .. } => children.iter().collect(),
            };
            for key in children {
                if seen.insert(key.clone()) {
                    queue.push_back(key.clone());
                }
            }
        };
        visit(&top, &mut queue);
        out.push(top);
        while let Some(key) = queue.pop_front() {
            let record = cache[&key].record.clone();
            visit(&record, &mut queue);
            out.push(record);
        }
        out
    }
}

/// Maps a child combination through a Case 1 reduction. Every lifted member
/// must be a 2EC spanning subgraph of `parent`.
pub fn lift(parent: &Graph, red: &Reduction, child: &ConvexCombination) -> Result<ConvexCombination> {
    if red.kind != ReductionKind::Case1Removal {
        return Err(Error::Precondition("lift expects an edge-removal reduction".into()));
    }
    if child.num_edges() != red.child.m() {
        return Err(Error::Precondition("combination is not over the reduced graph".into()));
    }
    let mut out = Vec::with_capacity(child.len());
    for entry in child.entries() {
        let edges = red.lift_edges(entry.edges);
        if !is_2ec(parent, edges) {
            return Err(Error::LiftFailure { edges: edges.to_vec() });
        }
        out.push((entry.weight.clone(), edges));
    }
    ConvexCombination::new(parent.m(), out)
}

/// Recombines the certificates of the two contracted sides of an essential
/// 3-edge cut.
///
/// Members of each side are classed by which cut edge they omit at the
/// pseudo-vertex (or none). Both sides must weigh every class exactly
/// 2/9, 2/9, 2/9, 1/3; within a class the weight sequences are cut at a
/// common refinement and paired in order.
pub fn glue(
    parent: &Graph,
    red1: &Reduction,
    c1: &ConvexCombination,
    red2: &Reduction,
    c2: &ConvexCombination,
) -> Result<ConvexCombination> {
    if red1.kind != ReductionKind::Case2Contraction || red2.kind != ReductionKind::Case2Contraction {
        return Err(Error::Precondition("glue expects two shore contractions".into()));
    }
    let all = parent.vertex_mask();
    if red1.kept_shore & red2.kept_shore != 0 || red1.kept_shore | red2.kept_shore != all {
        return Err(Error::Precondition("reductions keep overlapping or incomplete shores".into()));
    }
    let sorted = |red: &Reduction| {
        let mut corr = red.cut_correspondence.clone();
        corr.sort_by_key(|&(_, p)| p);
        corr
    };
    let (corr1, corr2) = (sorted(red1), sorted(red2));
    let parent_cut = |corr: &[(EdgeId, EdgeId)]| corr.iter().map(|&(_, p)| p).collect::<Vec<_>>();
    if corr1.len() != 3 || parent_cut(&corr1) != parent_cut(&corr2) {
        return Err(Error::Precondition("reductions come from different cuts".into()));
    }

    if c1.num_edges() != red1.child.m() || c2.num_edges() != red2.child.m() {
        return Err(Error::Precondition("combinations do not match the contracted graphs".into()));
    }
    let classes1 = classify(red1, c1, &corr1)?;
    let classes2 = classify(red2, c2, &corr2)?;

    let mut out = Vec::new();
    for (side1, side2) in classes1.into_iter().zip(classes2) {
        let (mut i, mut j) = (0, 0);
        let mut left = side1.first().map(|x| x.0.clone());
        let mut right = side2.first().map(|x| x.0.clone());
        while let (Some(a), Some(b)) = (left.clone(), right.clone()) {
            let w = if a < b { a.clone() } else { b.clone() };
            let edges = side1[i].1.union(side2[j].1);
            if !is_2ec(parent, edges) {
                return Err(Error::GlueFailure { edges: edges.to_vec() });
            }
            out.push((w.clone(), edges));
            left = Some(a - &w);
            right = Some(b - &w);
            if left.as_ref().is_some_and(|x| *x == integer(0)) {
                i += 1;
                left = side1.get(i).map(|x| x.0.clone());
            }
            if right.as_ref().is_some_and(|x| *x == integer(0)) {
                j += 1;
                right = side2.get(j).map(|x| x.0.clone());
            }
        }
        if left.is_some() || right.is_some() {
            return Err(Error::PatternMismatch("class weights do not align".into()));
        }
    }
    ConvexCombination::new(parent.m(), out)
}

/// Lifted members grouped as omit-cut-edge-0, -1, -2, then all present.
fn classify(
    red: &Reduction,
    c: &ConvexCombination,
    corr: &[(EdgeId, EdgeId)],
) -> Result<Vec<Vec<(Rational, EdgeSet)>>> {
    let at_pseudo = [corr[0].0, corr[1].0, corr[2].0];
    let patterns = vertex_patterns(c, at_pseudo)?;
    if !is_uniform_pattern(&patterns) {
        return Err(Error::PatternMismatch(format!(
            "pseudo-vertex weights {:?} / {}",
            patterns.0.iter().map(to_fraction_string).collect::<Vec<_>>(),
            to_fraction_string(&patterns.1)
        )));
    }
    let mut classes = vec![Vec::new(); 4];
    for entry in c.entries() {
        let class = (0..3)
            .find(|&k| !entry.edges.contains(at_pseudo[k]))
            .unwrap_or(3);
        classes[class].push((entry.weight.clone(), red.lift_edges(entry.edges)));
    }
    Ok(classes)
}

/// The per-pivot occurrence vector the reduction must produce: 1 on the
/// pivot, 1/2 on its four neighbours, 8/9 or 1 on edges adjacent to one or
/// two of those, 7/9 elsewhere.
pub fn z_vector(g: &Graph, d: &SafePairDecision) -> Vec<Rational> {
    let near = [d.au, d.bu, d.vc, d.vd];
    (0..g.m())
        .map(|e| {
            if e == d.pivot {
                integer(1)
            } else if near.contains(&e) {
                ratio(1, 2)
            } else {
                match near.iter().filter(|&&f| g.adjacent_edges(e, f)).count() {
                    0 => seven_ninths(),
                    1 => ratio(8, 9),
                    _ => integer(1),
                }
            }
        })
        .collect()
}

fn pivot_ring(g: &Graph, uv: EdgeId) -> (u64, u64) {
    let (u, v) = g.endpoints(uv);
    let core = 1u64 << u | 1u64 << v;
    let ring = g
        .neighbors(u)
        .chain(g.neighbors(v))
        .filter(|&w| w != u && w != v)
        .fold(0u64, |acc, w| acc | 1u64 << w);
    (core, ring)
}

fn classify_edge(core: u64, ring: u64, x: VertexId, y: VertexId) -> (bool, bool) {
    let (rx, ry) = (ring >> x & 1 == 1, ring >> y & 1 == 1);
    let (cx, cy) = (core >> x & 1 == 1, core >> y & 1 == 1);
    let t = rx && ry;
    let r = (rx && !ry && !cy) || (ry && !rx && !cx);
    (t, r)
}

pub fn case1_profile(g: &Graph, d: &SafePairDecision) -> Case1Profile {
    let (core, ring) = pivot_ring(g, d.pivot);
    let (mut t, mut r) = (0, 0);
    for &(x, y) in g.edges() {
        let (is_t, is_r) = classify_edge(core, ring, x, y);
        t += is_t as usize;
        r += is_r as usize;
    }
    Case1Profile { pivot: d.pivot, t, r }
}

/// For every edge, over all pivots: how often it joins two pivot
/// neighbours (`t`), and how often it hangs off exactly one (`r`).
pub fn edge_profiles(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = vec![(0, 0); g.m()];
    for uv in 0..g.m() {
        let (core, ring) = pivot_ring(g, uv);
        for (e, &(x, y)) in g.edges().iter().enumerate() {
            let (is_t, is_r) = classify_edge(core, ring, x, y);
            out[e].0 += is_t as usize;
            out[e].1 += is_r as usize;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;

    #[test]
    fn k4_certificate() {
        let g = builtin("k4").unwrap();
        let cert = Certifier::default().certify(&g).unwrap();
        assert_eq!(edge_occurrences(&cert.combination), vec![seven_ninths(); 6]);
        assert_eq!(cert.trace.len(), 1);
        assert_eq!(cert.min_support().unwrap().len(), 4);
    }

    #[test]
    fn prism_goes_through_glue() {
        let g = builtin("prism").unwrap();
        let cert = Certifier::default().certify(&g).unwrap();
        assert_eq!(edge_occurrences(&cert.combination), vec![seven_ninths(); 9]);
        assert!(matches!(cert.trace[0].step, Step::Case2 { .. }));
    }

    #[test]
    fn petersen_pivot_matches_z() {
        let g = builtin("petersen").unwrap();
        let c = Certifier::default();
        for uv in [0, 7, 14] {
            let o = c.reduce_case1(&g, uv).unwrap();
            assert_eq!(edge_occurrences(&o.combination), z_vector(&g, &o.decision));
            assert_eq!(2 * o.profile.t + o.profile.r, 8);
            // girth 5: no edge joins two pivot neighbours
            assert_eq!(o.profile.t, 0);
        }
    }

    #[test]
    fn case1_rejects_graph_with_essential_3cut() {
        let g = builtin("prism").unwrap();
        assert!(matches!(
            Certifier::default().reduce_case1(&g, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn size_cap() {
        let g = builtin("petersen").unwrap();
        assert!(matches!(Certifier::new(8).certify(&g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn glue_rejects_mismatched_reductions() {
        let g = builtin("prism").unwrap();
        let cut = find_essential_3cut(&g).unwrap().unwrap();
        let red = contract_shore(&g, &cut, Side::Inside).unwrap();
        let k4 = base_case_combination(&red.child).unwrap();
        assert!(matches!(glue(&g, &red, &k4, &red, &k4), Err(Error::Precondition(_))));
    }
}
