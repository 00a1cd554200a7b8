//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Problems are stated as minimization with `<=`, `>=` or `=` rows over
//! non-negative variables. Bland's rule (lowest-index entering column,
//! lowest-index leaving variable on ratio ties) rules out cycling and makes
//! the returned basic solution deterministic.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `minimize objective · x` subject to `constraints`, `x >= 0`.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>) -> Self {
        LinearProgram {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpError {
    Infeasible,
    Unbounded,
    Dimension(String),
}

impl std::fmt::Display for LpError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LpError::Infeasible => write!(f, "infeasible"),
            LpError::Unbounded => write!(f, "unbounded"),
            LpError::Dimension(s) => write!(f, "dimension mismatch: {s}"),
        }
    }
}

impl std::error::Error for LpError {}

#[derive(Debug, Clone)]
pub struct Solution {
    pub x: Vec<Rational>,
    pub value: Rational,
    /// Row duals: `objective · x = rhs · duals`, `>=` rows have `y >= 0`,
    /// `<=` rows `y <= 0`.
    pub duals: Vec<Rational>,
    pub pivots: usize,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs.
    cost: Vec<Rational>,
    /// Columns allowed to enter.
    allowed: Vec<bool>,
    pivots: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, q: usize) {
        let inv = self.rows[r][q].recip();
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            self.rhs[r] *= &inv;
        }
        let support: Vec<usize> = (0..self.rows[r].len())
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let (pivot_row, pivot_rhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][q].is_zero() {
                continue;
            }
            let f = self.rows[i][q].clone();
            for &j in &support {
                let delta = &f * &pivot_row[j];
                self.rows[i][j] -= delta;
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.cost[q].is_zero() {
            let f = self.cost[q].clone();
            for &j in &support {
                let delta = &f * &pivot_row[j];
                self.cost[j] -= delta;
            }
        }
        self.basis[r] = q;
        self.pivots += 1;
    }

    fn run(&mut self) -> Result<(), LpError> {
        loop {
            let Some(q) = (0..self.cost.len()).find(|&j| self.allowed[j] && self.cost[j].is_negative())
            else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][q];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((best_i, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*best_i])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(LpError::Unbounded);
            };
            self.pivot(r, q);
        }
    }

    fn set_costs(&mut self, c: &[Rational]) {
        let mut cost = c.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            if c[b].is_zero() {
                continue;
            }
            for (j, a) in self.rows[i].iter().enumerate() {
                if !a.is_zero() {
                    cost[j] -= &c[b] * a;
                }
            }
        }
        self.cost = cost;
    }
}

pub fn minimize(lp: &LinearProgram) -> Result<Solution, LpError> {
    let nv = lp.num_vars();
    let m = lp.constraints.len();
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.coeffs.len() != nv {
            return Err(LpError::Dimension(format!(
                "row {i} has {} coefficients, expected {nv}",
                c.coeffs.len()
            )));
        }
    }

    // Column layout: originals, one slack/surplus per inequality, then artificials.
    let mut negated = vec![false; m];
    let mut relations = Vec::with_capacity(m);
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut rel = c.relation;
        if c.rhs.is_negative() {
            negated[i] = true;
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        relations.push(rel);
    }
    let slacks = relations.iter().filter(|&&r| r != Relation::Eq).count();
    let artificials = relations.iter().filter(|&&r| r != Relation::Le).count();
    let width = nv + slacks + artificials;

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut home = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (nv, nv + slacks);
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = if negated[i] { -a } else { a.clone() };
        }
        let b = if negated[i] { -&c.rhs } else { c.rhs.clone() };
        match relations[i] {
            Relation::Le => {
                row[next_slack] = Rational::one();
                basis.push(next_slack);
                home.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                basis.push(next_art);
                home.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                basis.push(next_art);
                home.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
        rhs.push(b);
    }

    let mut t = Tableau {
        rows,
        rhs,
        basis,
        cost: Vec::new(),
        allowed: vec![true; width],
        pivots: 0,
    };

    if artificials > 0 {
        let mut phase1 = vec![Rational::zero(); width];
        for c in phase1.iter_mut().skip(nv + slacks) {
            *c = Rational::one();
        }
        t.set_costs(&phase1);
        t.run()?;
        let infeasibility: Rational = t
            .basis
            .iter()
            .zip(&t.rhs)
            .filter(|(&b, _)| b >= nv + slacks)
            .map(|(_, v)| v.clone())
            .sum();
        if infeasibility.is_positive() {
            return Err(LpError::Infeasible);
        }
        // Drive zero-level artificials out of the basis where possible.
        for r in 0..m {
            if t.basis[r] >= nv + slacks {
                if let Some(q) = (0..nv + slacks).find(|&j| !t.rows[r][j].is_zero()) {
                    t.pivot(r, q);
                }
            }
        }
        for a in t.allowed.iter_mut().skip(nv + slacks) {
            *a = false;
        }
    }

    let mut phase2 = vec![Rational::zero(); width];
    phase2[..nv].clone_from_slice(&lp.objective);
    t.set_costs(&phase2);
    t.run()?;

    let mut x = vec![Rational::zero(); nv];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nv {
            x[b] = t.rhs[i].clone();
        }
    }
    let value = x
        .iter()
        .zip(&lp.objective)
        .map(|(a, b)| a * b)
        .sum();
    let duals = (0..m)
        .map(|i| {
            let y = -t.cost[home[i]].clone();
            if negated[i] {
                -y
            } else {
                y
            }
        })
        .collect();
    Ok(Solution {
        x,
        value,
        duals,
        pivots: t.pivots,
    })
}
