//! Exact rational linear programming.
//!
//! A dense two-phase simplex over `BigRational` with Bland's pivoting rule,
//! which guarantees termination. Problem sizes in this crate are tiny (tens
//! of variables, at most a few hundred constraints), so a dense exact
//! tableau is the right trade-off: strict inequalities and vertex
//! certificates demand exactness, and there is no floating point fallback.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

use crate::numeric::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub cmp: Cmp,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, cmp: Cmp, rhs: Rat) -> Self {
        Self { coeffs, cmp, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// Maximum attained; `point` holds the structural variables.
    Optimal { value: Rat, point: Vec<Rat> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rat>>, // m x (width + 1), last column is the rhs
    obj: Vec<Rat>,       // width + 1, last entry is -objective
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rat {
        &self.rows[r][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for c in 0..=self.width {
            let v = &self.rows[row][c] * &inv;
            self.rows[row][c] = v;
        }
        for r in 0..self.rows.len() {
            if r != row && !self.rows[r][col].is_zero() {
                let factor = self.rows[r][col].clone();
                for c in 0..=self.width {
                    let v = &self.rows[r][c] - &factor * &self.rows[row][c];
                    self.rows[r][c] = v;
                }
            }
        }
        if !self.obj[col].is_zero() {
            let factor = self.obj[col].clone();
            for c in 0..=self.width {
                let v = &self.obj[c] - &factor * &self.rows[row][c];
                self.obj[c] = v;
            }
        }
        self.basis[row] = col;
    }

    /// Runs Bland-rule simplex on the current objective row, restricted to
    /// entering columns `< allowed`. Returns false when unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let entering = (0..allowed).find(|&j| self.obj[j].is_positive());
            let Some(col) = entering else { return true };
            let mut leave: Option<usize> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][col].is_positive() {
                    let better = match leave {
                        None => true,
                        Some(cur) => {
                            let lhs = self.rhs(r) * &self.rows[cur][col];
                            let rhs = self.rhs(cur) * &self.rows[r][col];
                            lhs < rhs || (lhs == rhs && self.basis[r] < self.basis[cur])
                        }
                    };
                    if better {
                        leave = Some(r);
                    }
                }
            }
            let Some(row) = leave else { return false };
            self.pivot(row, col);
        }
    }

    fn objective_value(&self) -> Rat {
        -self.obj[self.width].clone()
    }
}

/// Maximizes `objective . x` subject to the constraints and `x >= 0`.
pub fn maximize(objective: &[Rat], constraints: &[Constraint]) -> LpOutcome {
    let n = objective.len();
    // Column layout: structural | slack/surplus | artificial.
    let mut n_slack = 0;
    for c in constraints {
        let cmp = effective_cmp(c);
        if cmp != Cmp::Eq {
            n_slack += 1;
        }
    }
    let slack_start = n;
    let art_start = n + n_slack;
    let mut n_art = 0;
    for c in constraints {
        if effective_cmp(c) != Cmp::Le {
            n_art += 1;
        }
    }
    let width = art_start + n_art;

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(constraints.len());
    let mut basis: Vec<usize> = Vec::with_capacity(constraints.len());
    let mut slack_idx = slack_start;
    let mut art_idx = art_start;
    for c in constraints {
        debug_assert_eq!(c.coeffs.len(), n);
        let negate = c.rhs.is_negative();
        let mut row = vec![Rat::zero(); width + 1];
        for (j, v) in c.coeffs.iter().enumerate() {
            row[j] = if negate { -v.clone() } else { v.clone() };
        }
        row[width] = if negate { -c.rhs.clone() } else { c.rhs.clone() };
        let cmp = effective_cmp(c);
        match cmp {
            Cmp::Le => {
                row[slack_idx] = Rat::one();
                basis.push(slack_idx);
                slack_idx += 1;
            }
            Cmp::Ge => {
                row[slack_idx] = -Rat::one();
                slack_idx += 1;
                row[art_idx] = Rat::one();
                basis.push(art_idx);
                art_idx += 1;
            }
            Cmp::Eq => {
                row[art_idx] = Rat::one();
                basis.push(art_idx);
                art_idx += 1;
            }
        }
        rows.push(row);
    }

    let mut t = Tableau {
        rows,
        obj: vec![Rat::zero(); width + 1],
        basis,
        width,
    };

    // Phase 1: drive the artificial variables to zero.
    if n_art > 0 {
        for r in 0..t.rows.len() {
            if t.basis[r] >= art_start {
                for c in 0..=width {
                    let v = &t.obj[c] + &t.rows[r][c];
                    t.obj[c] = v;
                }
            }
        }
        for j in art_start..width {
            t.obj[j] = Rat::zero();
        }
        let bounded = t.optimize(art_start);
        debug_assert!(bounded, "phase-1 objective is bounded by construction");
        if t.objective_value().is_negative() {
            return LpOutcome::Infeasible;
        }
        // Pivot remaining artificials out of the basis; fully zero rows are
        // redundant and dropped.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= art_start {
                match (0..art_start).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(j) => t.pivot(r, j),
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    // Phase 2: the real objective, expressed through the current basis.
    for c in 0..=width {
        t.obj[c] = Rat::zero();
    }
    for (j, v) in objective.iter().enumerate() {
        t.obj[j] = v.clone();
    }
    for r in 0..t.rows.len() {
        let b = t.basis[r];
        if b < n && !t.obj[b].is_zero() {
            let factor = t.obj[b].clone();
            for c in 0..=width {
                let v = &t.obj[c] - &factor * &t.rows[r][c];
                t.obj[c] = v;
            }
        }
    }
    if !t.optimize(art_start) {
        return LpOutcome::Unbounded;
    }

    let mut point = vec![Rat::zero(); n];
    for r in 0..t.rows.len() {
        if t.basis[r] < n {
            point[t.basis[r]] = t.rhs(r).clone();
        }
    }
    LpOutcome::Optimal {
        value: t.objective_value(),
        point,
    }
}

/// The comparison after rhs-sign normalization.
fn effective_cmp(c: &Constraint) -> Cmp {
    if c.rhs.is_negative() {
        match c.cmp {
            Cmp::Le => Cmp::Ge,
            Cmp::Ge => Cmp::Le,
            Cmp::Eq => Cmp::Eq,
        }
    } else {
        c.cmp
    }
}

/// A feasible point of the system (with `x >= 0`), if one exists.
pub fn feasible_point(num_vars: usize, constraints: &[Constraint]) -> Option<Vec<Rat>> {
    match maximize(&vec![Rat::zero(); num_vars], constraints) {
        LpOutcome::Optimal { point, .. } => Some(point),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_frac, rat_vec};

    fn le(coeffs: &[i64], rhs: i64) -> Constraint {
        Constraint::new(rat_vec(coeffs), Cmp::Le, rat(rhs))
    }

    #[test]
    fn simple_maximum() {
        let out = maximize(&rat_vec(&[1, 1]), &[le(&[1, 1], 1)]);
        match out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1)),
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_system() {
        let cs = [
            Constraint::new(rat_vec(&[1]), Cmp::Ge, rat(2)),
            le(&[1], 1),
        ];
        assert_eq!(maximize(&rat_vec(&[1]), &cs), LpOutcome::Infeasible);
        assert!(feasible_point(1, &cs).is_none());
    }

    #[test]
    fn unbounded_ray() {
        assert_eq!(maximize(&rat_vec(&[1]), &[]), LpOutcome::Unbounded);
    }

    #[test]
    fn equality_membership() {
        // is 1/3 a convex combination of {0, 1}? lambda_1 = 1/3.
        let cs = [
            Constraint::new(rat_vec(&[0, 1]), Cmp::Eq, rat_frac(1, 3)),
            Constraint::new(rat_vec(&[1, 1]), Cmp::Eq, rat(1)),
        ];
        let p = feasible_point(2, &cs).unwrap();
        assert_eq!(p, alloc::vec![rat_frac(2, 3), rat_frac(1, 3)]);
    }

    #[test]
    fn negative_rhs_is_normalized() {
        // x <= -1 with x >= 0 is infeasible
        assert_eq!(maximize(&rat_vec(&[0]), &[le(&[1], -1)]), LpOutcome::Infeasible);
        // -x <= -1 means x >= 1
        let out = maximize(&rat_vec(&[-1]), &[le(&[-1], -1), le(&[1], 5)]);
        match out {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat(-1));
                assert_eq!(point, rat_vec(&[1]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn beale_cycling_example_terminates() {
        // The classic cycling instance for Dantzig's rule; Bland's rule must
        // terminate with optimum 1/20.
        let objective = alloc::vec![rat_frac(3, 4), rat(-150), rat_frac(1, 50), rat(-6)];
        let cs = [
            Constraint::new(
                alloc::vec![rat_frac(1, 4), rat(-60), rat_frac(-1, 25), rat(9)],
                Cmp::Le,
                rat(0),
            ),
            Constraint::new(
                alloc::vec![rat_frac(1, 2), rat(-90), rat_frac(-1, 50), rat(3)],
                Cmp::Le,
                rat(0),
            ),
            Constraint::new(rat_vec(&[0, 0, 1, 0]), Cmp::Le, rat(1)),
        ];
        match maximize(&objective, &cs) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_frac(1, 20)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_equalities() {
        // x + y = 1, x - y = 1 forces (1, 0).
        let cs = [
            Constraint::new(rat_vec(&[1, 1]), Cmp::Eq, rat(1)),
            Constraint::new(rat_vec(&[1, -1]), Cmp::Eq, rat(1)),
        ];
        let p = feasible_point(2, &cs).unwrap();
        assert_eq!(p, rat_vec(&[1, 0]));
    }

    #[test]
    fn redundant_equality_rows_are_dropped() {
        let cs = [
            Constraint::new(rat_vec(&[1, 1]), Cmp::Eq, rat(1)),
            Constraint::new(rat_vec(&[2, 2]), Cmp::Eq, rat(2)),
        ];
        let out = maximize(&rat_vec(&[1, 0]), &cs);
        match out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
