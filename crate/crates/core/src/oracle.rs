//! Exact reference values: minimum 2EC spanning subgraph, the cut LP
//! optimum, and their ratio.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::connectivity::{enumerate_cuts, is_2ec, Cut};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph};
use crate::rational::{integer, Rational};
use crate::simplex::{minimize, LinearProgram, Relation};

/// Largest order accepted by the oracles.
pub const MAX_ORACLE_VERTICES: usize = 16;

fn check_input(g: &Graph) -> Result<()> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge(format!(
            "oracles support n <= {MAX_ORACLE_VERTICES}, got n = {}",
            g.n()
        )));
    }
    if g.n() < 2 || !is_2ec(g, g.all_edges()) {
        return Err(Error::Precondition("graph is not 2-edge-connected".into()));
    }
    Ok(())
}

/// Minimum number of edges in a 2EC spanning subgraph, with the
/// lexicographically least optimal edge set.
///
/// Branch and bound over edges in id order, keeping an edge before trying
/// to drop it, so optima are met in lexicographic order.
pub fn exact_opt(g: &Graph) -> Result<(usize, EdgeSet)> {
    check_input(g)?;
    let greedy = greedy_2ec(g);
    let mut search = Search {
        g,
        best: greedy,
        best_from_search: false,
    };
    let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut undecided = degree.clone();
    search.branch(0, g.all_edges(), &mut degree, &mut undecided);
    Ok((search.best.len(), search.best))
}

/// Drops edges from the top id down while the rest stays 2EC.
fn greedy_2ec(g: &Graph) -> EdgeSet {
    let mut keep = g.all_edges();
    for e in (0..g.m()).rev() {
        if is_2ec(g, keep.without(e)) {
            keep.remove(e);
        }
    }
    keep
}

struct Search<'a> {
    g: &'a Graph,
    best: EdgeSet,
    best_from_search: bool,
}

impl Search<'_> {
    /// `avail` holds every edge not yet dropped; `degree` is the degree in
    /// `avail`, `undecided` counts incident edges with id >= `next`.
    fn branch(
        &mut self,
        next: EdgeId,
        avail: EdgeSet,
        degree: &mut [usize],
        undecided: &mut [usize],
    ) {
        let g = self.g;
        if next == g.m() {
            let better = avail.len() < self.best.len()
                || (avail.len() == self.best.len() && !self.best_from_search);
            if better {
                self.best = avail;
                self.best_from_search = true;
            }
            return;
        }
        // every vertex keeps degree >= 2, and the subgraph keeps >= n edges
        let local: usize = (0..g.n())
            .map(|v| (degree[v] - 2).min(undecided[v]))
            .sum::<usize>()
            / 2;
        let more = local.min(avail.len().saturating_sub(g.n()));
        let bound = avail.len() - more;
        if bound > self.best.len() || (bound == self.best.len() && self.best_from_search) {
            return;
        }

        let (u, v) = g.endpoints(next);
        undecided[u] -= 1;
        undecided[v] -= 1;
        self.branch(next + 1, avail, degree, undecided);
        let without = avail.without(next);
        if degree[u] > 2 && degree[v] > 2 && is_2ec(g, without) {
            degree[u] -= 1;
            degree[v] -= 1;
            self.branch(next + 1, without, degree, undecided);
            degree[u] += 1;
            degree[v] += 1;
        }
        undecided[u] += 1;
        undecided[v] += 1;
    }
}

/// Optimum of the cut relaxation `min Σx` over `Σ_{δ(S)} x ≥ 2`,
/// `0 ≤ x ≤ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
    /// Cuts with `Σx = 2` exactly.
    pub tight_cuts: Vec<Cut>,
}

/// Solves the cut LP exactly over every cut of `g`.
///
/// The simplex runs on the dual (one row per edge, one column per cut and
/// per upper bound), whose slack basis is feasible from the start; the
/// primal `x` is read off the row duals and re-checked against every cut.
pub fn lp_bound(g: &Graph) -> Result<LpSolution> {
    check_input(g)?;
    let cuts = enumerate_cuts(g, usize::MAX)?;
    let m = g.m();
    let k = cuts.len();

    // variables: y_S for each cut, then w_e for each edge
    let mut objective = vec![integer(-2); k];
    objective.extend(std::iter::repeat(Rational::one()).take(m));
    let mut lp = LinearProgram::new(objective);
    for e in 0..m {
        let mut row: Vec<Rational> = cuts
            .iter()
            .map(|c| if c.crossing().contains(e) { Rational::one() } else { Rational::zero() })
            .collect();
        row.extend((0..m).map(|f| if f == e { integer(-1) } else { Rational::zero() }));
        lp.add(row, Relation::Le, Rational::one());
    }
    let solution = minimize(&lp).map_err(|e| Error::Infeasible(format!("cut LP dual: {e}")))?;

    let x: Vec<Rational> = solution.duals.iter().map(|d| -d).collect();
    let value = -solution.value;

    if x.iter().any(|v| v.is_negative() || *v > Rational::one()) {
        return Err(Error::Internal("LP solution leaves [0, 1]".into()));
    }
    let total: Rational = x.iter().sum();
    if total != value {
        return Err(Error::Internal("LP primal and dual values differ".into()));
    }
    let two = integer(2);
    let mut tight_cuts = Vec::new();
    for c in &cuts {
        let load: Rational = c.crossing().iter().map(|e| &x[e]).sum();
        if load < two {
            return Err(Error::Internal(format!("LP solution violates cut {:?}", c.shore())));
        }
        if load == two {
            tight_cuts.push(*c);
        }
    }
    Ok(LpSolution {
        value,
        x,
        tight_cuts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub opt: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub lp: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub gap: Rational,
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::rational::to_display_string(r))
}

/// `OPT / OPT_LP`.
pub fn integrality_gap(g: &Graph) -> Result<GapReport> {
    let (opt, _) = exact_opt(g)?;
    let lp = lp_bound(g)?.value;
    let gap = Rational::from_integer((opt as i64).into()) / &lp;
    Ok(GapReport { opt, lp, gap })
}
