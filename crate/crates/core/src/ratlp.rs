//! Exact rational linear programming kernel.
//!
//! A dense primal simplex over arbitrary-precision rationals, using Bland's
//! anti-cycling pivot rule, so every solve terminates and every verdict is
//! exact. Strict inequalities are never encoded here; callers express
//! "exists a strictly positive slack" as "maximize the slack and accept iff
//! the optimum is positive or unbounded".

use crate::rat::{rzero, Rat};
use num::{Signed, Zero};
use thiserror::Error;

/// Constraint relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// A single linear constraint `coeffs . x REL bound`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub bound: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, relation: Relation, bound: Rat) -> Self {
        Constraint {
            coeffs,
            relation,
            bound,
        }
    }
}

/// A linear program: maximize `objective . x` subject to the constraints,
/// with `nonneg[j]` marking variables restricted to `x_j >= 0` (other
/// variables are free).
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub variables: usize,
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
    pub nonneg: Vec<bool>,
}

impl LinearProgram {
    /// A program with all variables nonnegative and a zero objective;
    /// callers fill in constraints and objective afterwards.
    pub fn new(variables: usize) -> Self {
        LinearProgram {
            variables,
            objective: vec![rzero(); variables],
            constraints: Vec::new(),
            nonneg: vec![true; variables],
        }
    }

    pub fn push(&mut self, coeffs: Vec<Rat>, relation: Relation, bound: Rat) {
        self.constraints.push(Constraint::new(coeffs, relation, bound));
    }
}

/// Exact outcome of a solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    /// Optimal objective value together with a point attaining it.
    Optimal { value: Rat, witness: Vec<Rat> },
    /// Feasible and unbounded; the witness is a feasible direction along
    /// which the objective strictly increases.
    Unbounded { witness: Vec<Rat> },
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("constraint or objective length does not match variable count")]
    DimensionMismatch,
}

/// Internal simplex tableau over mapped (all-nonnegative) columns.
struct Tableau {
    /// rows[i] holds the constraint coefficients, updated in place by pivots.
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v /= p.clone();
        }
        self.rhs[row] /= p;
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let factor = self.rows[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let delta = &factor * &self.rows[row][j];
                self.rows[i][j] -= delta;
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[i] -= delta;
        }
        self.basis[row] = col;
    }

    fn reduced_cost(&self, cost: &[Rat], col: usize) -> Rat {
        let mut rc = cost[col].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() {
                rc -= &cost[b] * &self.rows[i][col];
            }
        }
        rc
    }

    /// Runs Bland-rule simplex maximizing `cost` over `allowed` columns.
    /// Returns `None` on optimality, or `Some(entering)` when unbounded.
    fn optimize(&mut self, cost: &[Rat], allowed: &[bool]) -> Option<usize> {
        loop {
            let mut entering = None;
            for j in 0..self.cols {
                if allowed[j] && self.reduced_cost(cost, j).is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return None;
            };
            let mut leaving: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][col];
                    let better = match &leaving {
                        None => true,
                        Some((li, lr)) => {
                            ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                        }
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return Some(col),
            }
        }
    }

    fn point(&self) -> Vec<Rat> {
        let mut x = vec![rzero(); self.cols];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[i].clone();
        }
        x
    }
}

/// Maps original (possibly free) variables onto nonnegative columns:
/// free variables are split into a difference of two nonnegative ones.
struct VarMap {
    /// per original variable: (positive column, optional negative column)
    cols: Vec<(usize, Option<usize>)>,
    mapped: usize,
}

impl VarMap {
    fn build(p: &LinearProgram) -> VarMap {
        let mut cols = Vec::with_capacity(p.variables);
        let mut next = 0;
        for &nn in &p.nonneg {
            if nn {
                cols.push((next, None));
                next += 1;
            } else {
                cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
        VarMap { cols, mapped: next }
    }

    fn expand(&self, row: &[Rat]) -> Vec<Rat> {
        let mut out = vec![rzero(); self.mapped];
        for (j, v) in row.iter().enumerate() {
            let (pos, neg) = &self.cols[j];
            out[*pos] = v.clone();
            if let Some(n) = neg {
                out[*n] = -v.clone();
            }
        }
        out
    }

    fn collapse(&self, x: &[Rat]) -> Vec<Rat> {
        self.cols
            .iter()
            .map(|(pos, neg)| match neg {
                Some(n) => &x[*pos] - &x[*n],
                None => x[*pos].clone(),
            })
            .collect()
    }
}

/// Solves the program exactly.
pub fn solve_lp(p: &LinearProgram) -> Result<LpOutcome, LpError> {
    if p.objective.len() != p.variables || p.nonneg.len() != p.variables {
        return Err(LpError::DimensionMismatch);
    }
    for c in &p.constraints {
        if c.coeffs.len() != p.variables {
            return Err(LpError::DimensionMismatch);
        }
    }

    let map = VarMap::build(p);
    let m = p.constraints.len();

    // Standard form rows with nonnegative right-hand sides.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    let mut relations: Vec<Relation> = Vec::with_capacity(m);
    for c in &p.constraints {
        let mut row = map.expand(&c.coeffs);
        let mut b = c.bound.clone();
        let mut rel = c.relation;
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            b = -b;
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Eq => Relation::Eq,
                Relation::Ge => Relation::Le,
            };
        }
        rows.push(row);
        rhs.push(b);
        relations.push(rel);
    }

    // Slack / surplus / artificial columns.
    let slack_count = relations.iter().filter(|r| **r != Relation::Eq).count();
    let art_count = relations.iter().filter(|r| **r != Relation::Le).count();
    let cols = map.mapped + slack_count + art_count;
    let mut basis = vec![0usize; m];
    let mut next_slack = map.mapped;
    let mut next_art = map.mapped + slack_count;
    let art_start = map.mapped + slack_count;
    for row in rows.iter_mut() {
        row.resize(cols, rzero());
    }
    for i in 0..m {
        match relations[i] {
            Relation::Le => {
                rows[i][next_slack] = crate::rat::rone();
                basis[i] = next_slack;
                next_slack += 1;
            }
            Relation::Ge => {
                rows[i][next_slack] = -crate::rat::rone();
                next_slack += 1;
                rows[i][next_art] = crate::rat::rone();
                basis[i] = next_art;
                next_art += 1;
            }
            Relation::Eq => {
                rows[i][next_art] = crate::rat::rone();
                basis[i] = next_art;
                next_art += 1;
            }
        }
    }

    let mut t = Tableau {
        rows,
        rhs,
        basis,
        cols,
    };

    // Phase 1: drive artificials to zero.
    if art_count > 0 {
        let mut cost = vec![rzero(); cols];
        for c in cost.iter_mut().skip(art_start) {
            *c = -crate::rat::rone();
        }
        let allowed = vec![true; cols];
        let unbounded = t.optimize(&cost, &allowed);
        debug_assert!(unbounded.is_none(), "phase-1 objective is bounded");
        let infeasible = t
            .basis
            .iter()
            .enumerate()
            .any(|(i, &b)| b >= art_start && t.rhs[i].is_positive());
        if infeasible {
            return Ok(LpOutcome::Infeasible);
        }
        // Pivot remaining zero-level artificials out of the basis where
        // possible; rows with no eligible pivot are redundant and dropped.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art_start {
                let col = (0..art_start).find(|&j| !t.rows[i][j].is_zero());
                match col {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    // Phase 2: maximize the real objective, artificial columns barred.
    let mut cost = vec![rzero(); cols];
    let expanded = map.expand(&p.objective);
    cost[..expanded.len()].clone_from_slice(&expanded);
    let mut allowed = vec![true; cols];
    for a in allowed.iter_mut().skip(art_start) {
        *a = false;
    }
    match t.optimize(&cost, &allowed) {
        Some(entering) => {
            // Recession direction: entering column rises, basics adjust.
            let mut dir = vec![rzero(); cols];
            dir[entering] = crate::rat::rone();
            for (i, &b) in t.basis.iter().enumerate() {
                dir[b] = -t.rows[i][entering].clone();
            }
            Ok(LpOutcome::Unbounded {
                witness: map.collapse(&dir),
            })
        }
        None => {
            let x = t.point();
            let witness = map.collapse(&x);
            let value: Rat = p
                .objective
                .iter()
                .zip(&witness)
                .map(|(c, v)| c * v)
                .fold(rzero(), |a, b| a + b);
            Ok(LpOutcome::Optimal { value, witness })
        }
    }
}

/// Feasibility check; on success the witness satisfies every constraint exactly.
pub fn feasible(p: &LinearProgram) -> Result<(bool, Option<Vec<Rat>>), LpError> {
    let mut q = p.clone();
    q.objective = vec![rzero(); q.variables];
    match solve_lp(&q)? {
        LpOutcome::Infeasible => Ok((false, None)),
        LpOutcome::Optimal { witness, .. } => Ok((true, Some(witness))),
        LpOutcome::Unbounded { .. } => unreachable!("zero objective cannot be unbounded"),
    }
}

/// Substitutes a point into the program and checks every constraint and
/// nonnegativity flag exactly. Used by tests to validate witnesses.
pub fn satisfies(p: &LinearProgram, x: &[Rat]) -> bool {
    if x.len() != p.variables {
        return false;
    }
    for (j, nn) in p.nonneg.iter().enumerate() {
        if *nn && x[j].is_negative() {
            return false;
        }
    }
    p.constraints.iter().all(|c| {
        let lhs: Rat = c
            .coeffs
            .iter()
            .zip(x)
            .map(|(a, v)| a * v)
            .fold(rzero(), |a, b| a + b);
        match c.relation {
            Relation::Le => lhs <= c.bound,
            Relation::Eq => lhs == c.bound,
            Relation::Ge => lhs >= c.bound,
        }
    })
}
