//! Edge cuts, edge connectivity, essential cuts and safe removal pairs.
//!
//! Cut existence questions are answered by enumerating every shore as a
//! vertex bitmask. This is exact and fast for the graph sizes the rest of
//! the crate handles (`n <= MAX_ENUM_VERTICES`).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};

/// Largest `n` accepted by [`enumerate_cuts`] and the queries built on it.
pub const MAX_ENUM_VERTICES: usize = 20;

/// An edge cut `δ(S)`.
///
/// The stored shore is the side that does not contain vertex 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cut {
    shore: u64,
    crossing: EdgeSet,
}

impl Cut {
    /// The cut with the given shore (either side may be passed).
    pub fn from_shore(g: &Graph, mask: u64) -> Result<Self> {
        let all = g.vertex_mask();
        let mask = mask & all;
        if mask == 0 || mask == all {
            return Err(Error::Precondition("cut shore must be a proper non-empty subset".into()));
        }
        let shore = if mask & 1 == 1 { all & !mask } else { mask };
        Ok(Cut {
            shore,
            crossing: g.boundary(shore),
        })
    }

    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= g.n() {
                return Err(Error::Precondition(format!("vertex {v} not in graph")));
            }
            mask |= 1 << v;
        }
        Self::from_shore(g, mask)
    }

    pub fn shore_mask(&self) -> u64 {
        self.shore
    }

    pub fn shore(&self) -> Vec<VertexId> {
        mask_vertices(self.shore)
    }

    pub fn crossing(&self) -> EdgeSet {
        self.crossing
    }

    pub fn size(&self) -> usize {
        self.crossing.len()
    }

    /// Whether `mask` names one of the two sides of this cut.
    pub fn has_side(&self, g: &Graph, mask: u64) -> bool {
        mask == self.shore || mask == g.vertex_mask() & !self.shore
    }

    /// Both sides have at least two vertices and induce at least one edge.
    pub fn is_essential(&self, g: &Graph) -> bool {
        let other = g.vertex_mask() & !self.shore;
        [self.shore, other]
            .into_iter()
            .all(|side| side.count_ones() >= 2 && !g.edges_within(side).is_empty())
    }
}

pub(crate) fn mask_vertices(mask: u64) -> Vec<VertexId> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Whether `(V, sub)` is connected and bridgeless.
pub fn is_2ec(g: &Graph, sub: EdgeSet) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    // Iterative low-link DFS restricted to `sub`.
    const UNSEEN: usize = usize::MAX;
    let mut order = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut stack: Vec<(VertexId, EdgeId, usize)> = vec![(0, usize::MAX, 0)];
    order[0] = 0;
    low[0] = 0;
    let mut next = 1;
    while let Some(&mut (v, via, ref mut cursor)) = stack.last_mut() {
        let incident = g.incident(v);
        if *cursor < incident.len() {
            let (w, e) = incident[*cursor];
            *cursor += 1;
            if e == via || !sub.contains(e) {
                continue;
            }
            if order[w] == UNSEEN {
                order[w] = next;
                low[w] = next;
                next += 1;
                stack.push((w, e, 0));
            } else {
                low[v] = low[v].min(order[w]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _, _)) = stack.last() {
                if low[v] > order[parent] {
                    return false;
                }
                low[parent] = low[parent].min(low[v]);
            }
        }
    }
    next == n
}

/// Minimum `|δ(S)|` over all cuts, via unit-capacity max-flow from vertex 0.
/// Returns 0 for disconnected graphs and for `n < 2`.
pub fn edge_connectivity(g: &Graph) -> usize {
    if g.n() < 2 {
        return 0;
    }
    (1..g.n()).map(|t| max_flow(g, 0, t)).min().unwrap_or(0)
}

fn max_flow(g: &Graph, s: VertexId, t: VertexId) -> usize {
    // flow[e] > 0 means one unit from edges[e].0 to edges[e].1
    let mut flow = vec![0i8; g.m()];
    let mut total = 0;
    loop {
        let mut pred: Vec<Option<(VertexId, EdgeId)>> = vec![None; g.n()];
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &(y, e) in g.incident(x) {
                let forward = g.endpoints(e).0 == x;
                let residual = if forward { 1 - flow[e] } else { 1 + flow[e] };
                if residual > 0 && !seen[y] {
                    seen[y] = true;
                    pred[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return total;
        }
        let mut y = t;
        while let Some((x, e)) = pred[y] {
            if g.endpoints(e).0 == x {
                flow[e] += 1;
            } else {
                flow[e] -= 1;
            }
            y = x;
        }
        total += 1;
    }
}

/// Every cut with `|δ(S)| <= max_size`, one per `{S, V∖S}` pair, ordered by
/// shore cardinality and then shore bitmask.
pub fn enumerate_cuts(g: &Graph, max_size: usize) -> Result<Vec<Cut>> {
    let n = g.n();
    if n > MAX_ENUM_VERTICES {
        return Err(Error::TooLarge(format!(
            "cut enumeration supports n <= {MAX_ENUM_VERTICES}, got {n}"
        )));
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut cuts = Vec::new();
    for half in 1u64..(1u64 << (n - 1)) {
        let shore = half << 1;
        let size = g
            .edges()
            .iter()
            .filter(|&&(u, v)| (shore >> u & 1) != (shore >> v & 1))
            .count();
        if size <= max_size {
            cuts.push(Cut {
                shore,
                crossing: g.boundary(shore),
            });
        }
    }
    cuts.sort_by_key(|c| (c.shore.count_ones(), c.shore));
    Ok(cuts)
}

/// The first essential 3-edge cut in canonical order, if any.
pub fn find_essential_3cut(g: &Graph) -> Result<Option<Cut>> {
    Ok(enumerate_cuts(g, 3)?
        .into_iter()
        .find(|c| c.size() == 3 && c.is_essential(g)))
}

/// 3-edge-connected with no essential 3-edge cut.
pub fn is_essentially_4ec(g: &Graph) -> Result<bool> {
    if edge_connectivity(g) < 3 {
        return Ok(false);
    }
    Ok(find_essential_3cut(g)?.is_none())
}

/// All essential 4-edge cuts of a graph, for repeated pair queries.
#[derive(Debug, Clone)]
pub struct FourCuts {
    cuts: Vec<Cut>,
}

impl FourCuts {
    pub fn new(g: &Graph) -> Result<Self> {
        let cuts = enumerate_cuts(g, 4)?
            .into_iter()
            .filter(|c| c.size() == 4 && c.is_essential(g))
            .collect();
        Ok(FourCuts { cuts })
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    /// First essential 4-cut containing both edges whose shore is not
    /// `excluded` (or its complement).
    pub fn containing(&self, g: &Graph, e1: EdgeId, e2: EdgeId, excluded: u64) -> Option<Cut> {
        self.cuts
            .iter()
            .find(|c| {
                c.crossing.contains(e1) && c.crossing.contains(e2) && !c.has_side(g, excluded)
            })
            .copied()
    }
}

/// An essential 4-cut other than `δ(excluded_shore)` containing both edges.
pub fn essential_4cut_with_pair(
    g: &Graph,
    e1: EdgeId,
    e2: EdgeId,
    excluded_shore: (VertexId, VertexId),
) -> Result<Option<Cut>> {
    if e1 == e2 {
        return Err(Error::Precondition("the two edges must differ".into()));
    }
    if e1 >= g.m() || e2 >= g.m() {
        return Err(Error::Precondition("edge id out of range".into()));
    }
    let excluded = 1u64 << excluded_shore.0 | 1u64 << excluded_shore.1;
    Ok(FourCuts::new(g)?.containing(g, e1, e2, excluded))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Remove `{au, vc}` for one child and `{bu, vd}` for the other.
    Straight,
    /// Remove `{au, vd}` and `{bu, vc}`.
    Crossed,
}

/// Which cross pairing around a pivot edge `uv` is safe to remove.
///
/// `u < v`, `a < b` are the other neighbours of `u`, `c < d` those of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafePairDecision {
    pub pivot: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
    pub au: EdgeId,
    pub bu: EdgeId,
    pub vc: EdgeId,
    pub vd: EdgeId,
    pub orientation: Orientation,
    /// The cut that blocked the straight orientation, when crossed was chosen.
    pub witness: Option<Cut>,
}

impl SafePairDecision {
    /// The two edge pairs to remove, one per child graph.
    pub fn removals(&self) -> [(EdgeId, EdgeId); 2] {
        match self.orientation {
            Orientation::Straight => [(self.au, self.vc), (self.bu, self.vd)],
            Orientation::Crossed => [(self.au, self.vd), (self.bu, self.vc)],
        }
    }
}

/// Local labels around a pivot edge.
struct Pivot {
    u: VertexId,
    v: VertexId,
    a: (VertexId, EdgeId),
    b: (VertexId, EdgeId),
    c: (VertexId, EdgeId),
    d: (VertexId, EdgeId),
}

fn pivot_labels(g: &Graph, u: VertexId, v: VertexId) -> Pivot {
    let others = |x: VertexId, y: VertexId| {
        let mut o: Vec<(VertexId, EdgeId)> =
            g.incident(x).iter().copied().filter(|&(w, _)| w != y).collect();
        o.sort_unstable();
        (o[0], o[1])
    };
    let (a, b) = others(u, v);
    let (c, d) = others(v, u);
    Pivot { u, v, a, b, c, d }
}

fn check_lemma_preconditions(g: &Graph) -> Result<()> {
    if !g.is_cubic() {
        return Err(Error::Precondition("graph is not cubic".into()));
    }
    if g.n() <= 6 {
        return Err(Error::Precondition(format!(
            "safe-pair reasoning needs n > 6, got n = {}",
            g.n()
        )));
    }
    if !is_essentially_4ec(g)? {
        return Err(Error::Precondition("graph is not essentially 4-edge-connected".into()));
    }
    Ok(())
}

/// Chooses the removal pairing for pivot `uv`, trying the straight
/// orientation first.
pub fn find_safe_pair(g: &Graph, uv: EdgeId) -> Result<SafePairDecision> {
    if uv >= g.m() {
        return Err(Error::Precondition(format!("edge {uv} not in graph")));
    }
    check_lemma_preconditions(g)?;
    let four = FourCuts::new(g)?;
    safe_pair_with(g, &four, uv)
}

pub(crate) fn safe_pair_with(g: &Graph, four: &FourCuts, uv: EdgeId) -> Result<SafePairDecision> {
    let (u, v) = g.endpoints(uv);
    let p = pivot_labels(g, u, v);
    let excluded = 1u64 << u | 1u64 << v;
    let blocked = |x: EdgeId, y: EdgeId| four.containing(g, x, y, excluded);
    let (au, bu, vc, vd) = (p.a.1, p.b.1, p.c.1, p.d.1);

    let straight = blocked(au, vc).or_else(|| blocked(bu, vd));
    let (orientation, witness) = match straight {
        None => (Orientation::Straight, None),
        Some(first) => {
            if let Some(second) = blocked(au, vd).or_else(|| blocked(bu, vc)) {
                return Err(Error::Lemma3Violation {
                    pivot: uv,
                    first: first.shore(),
                    second: second.shore(),
                });
            }
            (Orientation::Crossed, Some(first))
        }
    };
    Ok(SafePairDecision {
        pivot: uv,
        u: p.u,
        v: p.v,
        a: p.a.0,
        b: p.b.0,
        c: p.c.0,
        d: p.d.0,
        au,
        bu,
        vc,
        vd,
        orientation,
        witness,
    })
}

/// A configuration where both `(au, vd)` and `(au, vc)` lie in essential
/// 4-cuts other than `δ({u, v})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma3Counterexample {
    pub u: VertexId,
    pub v: VertexId,
    pub a: VertexId,
    pub c: VertexId,
    pub d: VertexId,
    pub s: Vec<VertexId>,
    pub s_prime: Vec<VertexId>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lemma3Report {
    /// Essential 4-cuts found in the graph.
    pub four_cuts: usize,
    /// `(u, v, a)` triples checked: both directions of every edge, both `a`.
    pub configurations: usize,
    /// Pivot edges checked against the two cross orientations.
    pub pivots: usize,
    pub statement_violations: Vec<Lemma3Counterexample>,
    /// Pivots where both cross orientations are blocked.
    pub orientation_violations: Vec<EdgeId>,
    /// Pivots where the two phrasings disagree on whether a violation exists.
    pub divergences: usize,
}

impl Lemma3Report {
    pub fn violations(&self) -> usize {
        self.statement_violations.len() + self.orientation_violations.len()
    }
}

/// Exhaustively checks, for every path `a – u – v – {c, d}`, that `(au, vd)`
/// and `(au, vc)` are never both inside essential 4-cuts other than
/// `δ({u, v})`, and that each pivot has an unblocked cross orientation.
pub fn verify_lemma3(g: &Graph) -> Result<Lemma3Report> {
    check_lemma_preconditions(g)?;
    let four = FourCuts::new(g)?;
    let mut report = Lemma3Report {
        four_cuts: four.cuts().len(),
        ..Default::default()
    };
    for uv in 0..g.m() {
        let (x, y) = g.endpoints(uv);
        let excluded = 1u64 << x | 1u64 << y;
        let blocked = |e: EdgeId, f: EdgeId| four.containing(g, e, f, excluded);
        let mut statement_hit = false;
        for (u, v) in [(x, y), (y, x)] {
            let p = pivot_labels(g, u, v);
            for (a, au) in [p.a, p.b] {
                report.configurations += 1;
                if let (Some(s), Some(s_prime)) = (blocked(au, p.d.1), blocked(au, p.c.1)) {
                    statement_hit = true;
                    report.statement_violations.push(Lemma3Counterexample {
                        u,
                        v,
                        a,
                        c: p.c.0,
                        d: p.d.0,
                        s: s.shore(),
                        s_prime: s_prime.shore(),
                    });
                }
            }
        }
        report.pivots += 1;
        let p = pivot_labels(g, x, y);
        let (au, bu, vc, vd) = (p.a.1, p.b.1, p.c.1, p.d.1);
        let straight = blocked(au, vc).is_some() || blocked(bu, vd).is_some();
        let crossed = blocked(au, vd).is_some() || blocked(bu, vc).is_some();
        let orientation_hit = straight && crossed;
        if orientation_hit {
            report.orientation_violations.push(uv);
        }
        if statement_hit != orientation_hit {
            report.divergences += 1;
        }
    }
    Ok(report)
}
