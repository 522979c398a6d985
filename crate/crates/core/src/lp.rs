//! Exact rational linear programming.
//!
//! A dense two-phase simplex over `Rat` with Bland's pivoting rule, so
//! termination is guaranteed and every verdict (feasible / unbounded /
//! optimal value) is exact. Problems in this crate are tiny — a handful of
//! rows against a few dozen columns — so no factorization or sparsity is
//! attempted.

use num_traits::{Signed, Zero};

use crate::rational::{rat_int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Free,
    NonNeg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, rel: Rel, rhs: Rat) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Infeasible,
    Unbounded,
    Optimal(Rat),
}

/// Minimize `objective . x` subject to the constraints; variable domains are
/// given per column (`Free` variables are split internally).
pub fn minimize(objective: &[Rat], vars: &[VarKind], constraints: &[Constraint]) -> Outcome {
    solve(objective, vars, constraints, false)
}

/// Maximize `objective . x`; same contract as [`minimize`].
pub fn maximize(objective: &[Rat], vars: &[VarKind], constraints: &[Constraint]) -> Outcome {
    match solve(objective, vars, constraints, true) {
        Outcome::Optimal(v) => Outcome::Optimal(-v),
        other => other,
    }
}

/// Feasibility of the system (phase one only).
pub fn feasible(vars: &[VarKind], constraints: &[Constraint]) -> bool {
    let zero_obj = vec![rat_int(0); vars.len()];
    !matches!(minimize(&zero_obj, vars, constraints), Outcome::Infeasible)
}

fn solve(objective: &[Rat], vars: &[VarKind], constraints: &[Constraint], negate: bool) -> Outcome {
    assert_eq!(objective.len(), vars.len());
    for c in constraints {
        assert_eq!(c.coeffs.len(), vars.len());
    }

    // column layout: per-variable columns (free vars get a +/- pair),
    // then one slack per inequality, then one artificial per row.
    let mut col_of_var = Vec::with_capacity(vars.len());
    let mut ncols = 0usize;
    for kind in vars {
        col_of_var.push(ncols);
        ncols += match kind {
            VarKind::NonNeg => 1,
            VarKind::Free => 2,
        };
    }
    let n_ineq = constraints.iter().filter(|c| c.rel != Rel::Eq).count();
    let slack_base = ncols;
    let n_struct = ncols + n_ineq;
    let m = constraints.len();
    let n_total = n_struct + m; // artificials at the end

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut slack_idx = 0usize;
    for (i, con) in constraints.iter().enumerate() {
        let mut row = vec![rat_int(0); n_total + 1];
        // a Ge row is stored as its Le negation
        let flip = con.rel == Rel::Ge;
        for (v, c) in con.coeffs.iter().enumerate() {
            let c = if flip { -c } else { c.clone() };
            match vars[v] {
                VarKind::NonNeg => row[col_of_var[v]] = c,
                VarKind::Free => {
                    row[col_of_var[v]] = c.clone();
                    row[col_of_var[v] + 1] = -c;
                }
            }
        }
        let mut rhs = if flip { -&con.rhs } else { con.rhs.clone() };
        if con.rel != Rel::Eq {
            row[slack_base + slack_idx] = rat_int(1);
            slack_idx += 1;
        }
        // normalize to a nonnegative right-hand side
        if rhs.is_negative() {
            for e in row.iter_mut().take(n_total) {
                *e = -&*e;
            }
            rhs = -rhs;
        }
        row[n_struct + i] = rat_int(1);
        row[n_total] = rhs;
        rows.push(row);
        basis.push(n_struct + i);
    }

    let mut tab = Tableau {
        rows,
        basis,
        ncols: n_total,
    };

    // phase one: minimize the sum of artificials
    let mut phase1 = vec![rat_int(0); n_total];
    for j in n_struct..n_total {
        phase1[j] = rat_int(1);
    }
    let mut cost = tab.reduced_costs(&phase1);
    if tab.run(&mut cost) == PivotEnd::Unbounded {
        unreachable!("phase one is bounded below by zero");
    }
    if tab.objective(&phase1).is_positive() {
        return Outcome::Infeasible;
    }
    tab.evict_artificials(n_struct);

    // phase two on the structural columns only
    tab.truncate_cols(n_struct);
    let mut full_obj = vec![rat_int(0); n_struct];
    for (v, kind) in vars.iter().enumerate() {
        let c = if negate { -&objective[v] } else { objective[v].clone() };
        match kind {
            VarKind::NonNeg => full_obj[col_of_var[v]] = c,
            VarKind::Free => {
                full_obj[col_of_var[v]] = c.clone();
                full_obj[col_of_var[v] + 1] = -c;
            }
        }
    }
    let mut cost = tab.reduced_costs(&full_obj);
    match tab.run(&mut cost) {
        PivotEnd::Unbounded => Outcome::Unbounded,
        PivotEnd::Optimal => Outcome::Optimal(tab.objective(&full_obj)),
    }
}

#[derive(PartialEq)]
enum PivotEnd {
    Optimal,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // each row: ncols coefficients then the rhs
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn reduced_costs(&self, obj: &[Rat]) -> Vec<Rat> {
        // cost[j] = c_j - c_B B^-1 A_j, tracked densely; cost[ncols] = -objective
        let mut cost = vec![rat_int(0); self.ncols + 1];
        cost[..obj.len()].clone_from_slice(obj);
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            let factor = cost[b].clone();
            for j in 0..=self.ncols {
                let delta = &factor * &self.rows[i][j];
                cost[j] -= delta;
            }
        }
        cost
    }

    fn objective(&self, obj: &[Rat]) -> Rat {
        let mut v = rat_int(0);
        for (i, &b) in self.basis.iter().enumerate() {
            if b < obj.len() && !obj[b].is_zero() {
                v += &obj[b] * &self.rows[i][self.ncols];
            }
        }
        v
    }

    /// Bland's rule simplex loop on the current cost row.
    fn run(&mut self, cost: &mut [Rat]) -> PivotEnd {
        loop {
            let Some(enter) = (0..self.ncols).find(|&j| cost[j].is_negative()) else {
                return PivotEnd::Optimal;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rat> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][enter].is_positive() {
                    let ratio = &self.rows[i][self.ncols] / &self.rows[i][enter];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b
                                    && self.basis[i] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            let Some(leave) = leave else {
                return PivotEnd::Unbounded;
            };
            self.pivot(leave, enter, cost);
        }
    }

    fn pivot(&mut self, leave: usize, enter: usize, cost: &mut [Rat]) {
        let piv = self.rows[leave][enter].clone();
        for e in self.rows[leave].iter_mut() {
            *e = &*e / &piv;
        }
        for i in 0..self.rows.len() {
            if i == leave || self.rows[i][enter].is_zero() {
                continue;
            }
            let factor = self.rows[i][enter].clone();
            for j in 0..=self.ncols {
                let delta = &factor * &self.rows[leave][j];
                self.rows[i][j] -= delta;
            }
        }
        if !cost[enter].is_zero() {
            let factor = cost[enter].clone();
            for j in 0..=self.ncols {
                let delta = &factor * &self.rows[leave][j];
                cost[j] -= delta;
            }
        }
        self.basis[leave] = enter;
    }

    /// After phase one: pivot basic artificials out, dropping rows that turn
    /// out to be redundant.
    fn evict_artificials(&mut self, n_struct: usize) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= n_struct {
                debug_assert!(self.rows[i][self.ncols].is_zero());
                if let Some(enter) = (0..n_struct).find(|&j| !self.rows[i][j].is_zero()) {
                    let mut dummy = vec![rat_int(0); self.ncols + 1];
                    self.pivot(i, enter, &mut dummy);
                } else {
                    self.rows.swap_remove(i);
                    self.basis.swap_remove(i);
                    continue;
                }
            }
            i += 1;
        }
    }

    fn truncate_cols(&mut self, n_struct: usize) {
        for row in &mut self.rows {
            let rhs = row.pop().unwrap();
            row.truncate(n_struct);
            row.push(rhs);
        }
        self.ncols = n_struct;
    }
}
