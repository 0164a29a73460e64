//! Exact rational linear programming.
//!
//! A dense-tableau simplex over `BigRational` using Bland's rule, so it never
//! cycles. Problems have the form `maximize c·x  s.t.  A x ≤ b,  x ≥ 0`;
//! constraints with negative right-hand side trigger a phase-1 solve with a
//! single artificial variable.

use num_traits::{One, Signed, Zero};

use crate::polyring::Rational;

/// Result of [`LinearProgram::solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_constraints(&self) -> usize {
        self.rows.len()
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
    }

    /// Adds `row · x ≤ rhs`.
    pub fn add_le(&mut self, row: Vec<Rational>, rhs: Rational) {
        assert_eq!(row.len(), self.num_vars);
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    pub fn solve(&self) -> LpOutcome {
        let mut tableau = Tableau::new(self);
        if self.rhs.iter().any(Signed::is_negative) && !tableau.phase_one() {
            return LpOutcome::Infeasible;
        }
        let mut cost = self.objective.clone();
        cost.resize(tableau.ncols, Rational::zero());
        if !tableau.optimize(&cost) {
            return LpOutcome::Unbounded;
        }
        let mut x = vec![Rational::zero(); self.num_vars];
        for (row, &var) in tableau.basis.iter().enumerate() {
            if var < self.num_vars {
                x[var] = tableau.b[row].clone();
            }
        }
        let value = x
            .iter()
            .zip(&self.objective)
            .fold(Rational::zero(), |acc, (xi, ci)| acc + xi * ci);
        LpOutcome::Optimal { x, value }
    }
}

/// Canonical-form tableau: the basis columns form an identity.
struct Tableau {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn new(lp: &LinearProgram) -> Self {
        let m = lp.rows.len();
        let ncols = lp.num_vars + m;
        let a = lp
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut full = row.clone();
                full.resize(ncols, Rational::zero());
                full[lp.num_vars + i] = Rational::one();
                full
            })
            .collect();
        Self {
            a,
            b: lp.rhs.clone(),
            basis: (lp.num_vars..ncols).collect(),
            ncols,
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].recip();
        for v in self.a[row].iter_mut() {
            *v *= &inv;
        }
        self.b[row] *= &inv;
        let pivot_row = self.a[row].clone();
        let pivot_b = self.b[row].clone();
        for i in 0..self.a.len() {
            if i == row || self.a[i][col].is_zero() {
                continue;
            }
            let factor = self.a[i][col].clone();
            for (v, p) in self.a[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            self.b[i] -= &factor * &pivot_b;
        }
        self.basis[row] = col;
    }

    /// Maximizes `cost · x` from the current feasible basis. Returns false
    /// when the objective is unbounded.
    fn optimize(&mut self, cost: &[Rational]) -> bool {
        loop {
            let mut entering = None;
            for j in 0..self.ncols {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, &bv) in self.basis.iter().enumerate() {
                    if !cost[bv].is_zero() && !self.a[i][j].is_zero() {
                        reduced -= &cost[bv] * &self.a[i][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else {
                return true;
            };

            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.a.len() {
                if !self.a[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.b[i] / &self.a[i][col];
                let better = match &leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    /// Finds a feasible basis via one artificial variable. Returns false if
    /// the constraints are infeasible. On success the artificial column is
    /// removed again.
    fn phase_one(&mut self) -> bool {
        let art = self.ncols;
        self.ncols += 1;
        for row in self.a.iter_mut() {
            row.push(-Rational::one());
        }
        let start = (0..self.b.len())
            .min_by(|&i, &j| self.b[i].cmp(&self.b[j]).then(i.cmp(&j)))
            .expect("phase one needs at least one constraint");
        self.pivot(start, art);

        let mut cost = vec![Rational::zero(); self.ncols];
        cost[art] = -Rational::one();
        let bounded = self.optimize(&cost);
        debug_assert!(bounded, "phase-one objective is bounded by zero");

        if let Some(row) = self.basis.iter().position(|&v| v == art) {
            if !self.b[row].is_zero() {
                return false;
            }
            match (0..art).find(|&j| !self.a[row][j].is_zero()) {
                Some(col) => self.pivot(row, col),
                None => {
                    self.a.remove(row);
                    self.b.remove(row);
                    self.basis.remove(row);
                }
            }
        }
        for row in self.a.iter_mut() {
            row.pop();
        }
        self.ncols -= 1;
        true
    }
}
