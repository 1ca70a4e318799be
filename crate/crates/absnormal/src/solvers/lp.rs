//! Dense two-phase simplex with Bland's anti-cycling rule.
//!
//! Problems are stated over `nv` variables `v`, a subset of which is
//! flagged nonnegative (the rest are free), with equality rows
//! `eq_lhs v = eq_rhs` and inequality rows `ge_lhs v >= ge_rhs`. Internally
//! free variables are split into differences of nonnegative pairs,
//! inequality rows receive surplus columns, and every row gets an
//! artificial variable for phase 1. Bland's rule (smallest eligible index
//! enters, ties on the ratio test broken by smallest basis index) makes the
//! method deterministic and immune to cycling.

use crate::linalg::{Matrix, Vector};
use crate::solvers::{SolveOutcome, SolveStatus};

/// Reduced costs below `-ENTER_EPS` qualify a column for entering.
const ENTER_EPS: f64 = 1e-9;
/// Ratio-test denominators must exceed this to count as positive.
const PIVOT_EPS: f64 = 1e-9;
/// Phase-1 objectives above this value mean the problem is infeasible.
const FEAS_TOL: f64 = 1e-7;

/// Default cap on total simplex pivots across both phases.
pub const DEFAULT_PIVOT_LIMIT: usize = 200_000;

/// Linear program `min objective . v + obj_const` subject to
/// `eq_lhs v = eq_rhs`, `ge_lhs v >= ge_rhs`, and `v_i >= 0` for flagged
/// variables.
#[derive(Debug, Clone)]
pub struct LpProblem {
    pub objective: Vector,
    pub obj_const: f64,
    pub eq_lhs: Matrix,
    pub eq_rhs: Vector,
    pub ge_lhs: Matrix,
    pub ge_rhs: Vector,
    pub nonneg: Vec<bool>,
}

impl LpProblem {
    /// A problem skeleton with `nv` free variables, no rows, and a zero
    /// objective. Callers fill in the pieces they need.
    pub fn with_vars(nv: usize) -> Self {
        LpProblem {
            objective: Vector::zeros(nv),
            obj_const: 0.0,
            eq_lhs: Matrix::zeros(0, nv),
            eq_rhs: Vector::zeros(0),
            ge_lhs: Matrix::zeros(0, nv),
            ge_rhs: Vector::zeros(0),
            nonneg: vec![false; nv],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    fn check(&self) {
        let nv = self.num_vars();
        assert_eq!(self.nonneg.len(), nv, "nonneg flags must cover all variables");
        assert_eq!(self.eq_lhs.cols(), nv, "eq_lhs column count mismatch");
        assert_eq!(self.ge_lhs.cols(), nv, "ge_lhs column count mismatch");
        assert_eq!(self.eq_lhs.rows(), self.eq_rhs.len(), "eq row count mismatch");
        assert_eq!(self.ge_lhs.rows(), self.ge_rhs.len(), "ge row count mismatch");
    }
}

/// Typed simplex result used by the other solvers.
#[derive(Debug, Clone)]
pub enum LpSolution {
    Optimal { x: Vector, objective: f64 },
    Infeasible,
    /// A feasible ray along which the objective decreases without bound.
    Unbounded { ray: Vector },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpError {
    /// The pivot budget ran out; the tableau state is discarded.
    PivotLimit { pivots: usize },
    /// The tableau reached a state that is inconsistent with exact
    /// arithmetic (for example an unbounded phase-1 objective).
    Breakdown(String),
}

impl std::fmt::Display for LpError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LpError::PivotLimit { pivots } => write!(f, "simplex pivot limit reached ({pivots})"),
            LpError::Breakdown(msg) => write!(f, "simplex numerical breakdown: {msg}"),
        }
    }
}

impl std::error::Error for LpError {}

enum RunEnd {
    Optimal,
    Unbounded { entering: usize },
}

struct Tableau {
    /// (rows + 1) x (cols + 1); last row is the cost row, last column the
    /// right-hand side.
    a: Vec<Vec<f64>>,
    rows: usize,
    cols: usize,
    basis: Vec<usize>,
    /// Column -> (original variable, sign) for the split structural part.
    col_var: Vec<(usize, f64)>,
    art_start: usize,
    pivots_used: usize,
}

impl Tableau {
    fn build(lp: &LpProblem) -> Tableau {
        lp.check();
        let nv = lp.num_vars();
        let me = lp.eq_rhs.len();
        let mg = lp.ge_rhs.len();
        let rows = me + mg;

        let mut col_var = Vec::new();
        for i in 0..nv {
            col_var.push((i, 1.0));
            if !lp.nonneg[i] {
                col_var.push((i, -1.0));
            }
        }
        let n_struct = col_var.len();
        let surplus_start = n_struct;
        let art_start = n_struct + mg;
        let cols = art_start + rows;

        let mut a = vec![vec![0.0; cols + 1]; rows + 1];
        for r in 0..rows {
            let (lhs_row, rhs) = if r < me {
                (lp.eq_lhs.row(r), lp.eq_rhs[r])
            } else {
                (lp.ge_lhs.row(r - me), lp.ge_rhs[r - me])
            };
            for (col, &(var, sign)) in col_var.iter().enumerate() {
                a[r][col] = sign * lhs_row[var];
            }
            if r >= me {
                a[r][surplus_start + (r - me)] = -1.0;
            }
            a[r][cols] = rhs;
            if a[r][cols] < 0.0 {
                for v in a[r].iter_mut() {
                    *v = -*v;
                }
            }
            a[r][art_start + r] = 1.0;
        }

        let basis = (0..rows).map(|r| art_start + r).collect();
        Tableau { a, rows, cols, basis, col_var, art_start, pivots_used: 0 }
    }

    fn rhs(&self, r: usize) -> f64 {
        self.a[r][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pivot = self.a[r][c];
        for v in self.a[r].iter_mut() {
            *v /= pivot;
        }
        let pivot_row = self.a[r].clone();
        for i in 0..=self.rows {
            if i == r {
                continue;
            }
            let factor = self.a[i][c];
            if factor == 0.0 {
                continue;
            }
            for (t, p) in self.a[i].iter_mut().zip(&pivot_row) {
                *t -= factor * p;
            }
        }
        self.basis[r] = c;
        self.pivots_used += 1;
    }

    /// Bland entering rule over non-artificial columns.
    fn entering(&self) -> Option<usize> {
        (0..self.art_start).find(|&j| self.a[self.rows][j] < -ENTER_EPS)
    }

    /// Min-ratio leaving row; ties resolved by the smallest basis index.
    fn leaving(&self, entering: usize) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for r in 0..self.rows {
            let denom = self.a[r][entering];
            if denom <= PIVOT_EPS {
                continue;
            }
            let ratio = self.rhs(r) / denom;
            match best {
                None => best = Some((r, ratio)),
                Some((br, bratio)) => {
                    if ratio < bratio - PIVOT_EPS
                        || ((ratio - bratio).abs() <= PIVOT_EPS
                            && self.basis[r] < self.basis[br])
                    {
                        best = Some((r, ratio));
                    }
                }
            }
        }
        best.map(|(r, _)| r)
    }

    fn run(&mut self, max_pivots: usize) -> Result<RunEnd, LpError> {
        loop {
            let Some(col) = self.entering() else {
                return Ok(RunEnd::Optimal);
            };
            let Some(row) = self.leaving(col) else {
                return Ok(RunEnd::Unbounded { entering: col });
            };
            if self.pivots_used >= max_pivots {
                return Err(LpError::PivotLimit { pivots: self.pivots_used });
            }
            self.pivot(row, col);
        }
    }

    /// Current values of the original variables.
    fn extract(&self, nv: usize) -> Vector {
        let mut x = Vector::zeros(nv);
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.col_var.len() {
                let (var, sign) = self.col_var[b];
                x[var] += sign * self.rhs(r);
            }
        }
        x
    }

    /// Ray in original variables when column `entering` is unbounded.
    fn extract_ray(&self, nv: usize, entering: usize) -> Vector {
        let mut t = vec![0.0; self.cols];
        t[entering] = 1.0;
        for (r, &b) in self.basis.iter().enumerate() {
            t[b] = -self.a[r][entering];
        }
        let mut ray = Vector::zeros(nv);
        for (col, &(var, sign)) in self.col_var.iter().enumerate() {
            ray[var] += sign * t[col];
        }
        ray
    }

    /// Install phase-1 costs (sum of artificials) priced out for the
    /// all-artificial starting basis.
    fn set_phase1_costs(&mut self) {
        for j in 0..=self.cols {
            self.a[self.rows][j] = 0.0;
        }
        for r in 0..self.rows {
            let row = self.a[r].clone();
            for (j, v) in row.iter().enumerate() {
                self.a[self.rows][j] -= v;
            }
        }
        // Artificial columns carry cost 1, so their reduced costs are
        // 1 - 1 = 0 after pricing out.
        for r in 0..self.rows {
            self.a[self.rows][self.art_start + r] += 1.0;
        }
    }

    fn phase1_objective(&self) -> f64 {
        -self.a[self.rows][self.cols]
    }

    /// Pivot basic artificials out where possible; rows with no eligible
    /// column are redundant and stay inert.
    fn drive_out_artificials(&mut self) {
        for r in 0..self.rows {
            if self.basis[r] < self.art_start {
                continue;
            }
            if let Some(c) = (0..self.art_start).find(|&j| self.a[r][j].abs() > PIVOT_EPS) {
                self.pivot(r, c);
            }
        }
    }

    /// Install the real objective, priced out for the current basis.
    fn set_phase2_costs(&mut self, lp: &LpProblem) {
        let cost_of = |col: usize, col_var: &[(usize, f64)]| -> f64 {
            if col < col_var.len() {
                let (var, sign) = col_var[col];
                sign * lp.objective[var]
            } else {
                0.0
            }
        };
        for j in 0..=self.cols {
            self.a[self.rows][j] = 0.0;
        }
        for j in 0..self.art_start {
            self.a[self.rows][j] = cost_of(j, &self.col_var);
        }
        for r in 0..self.rows {
            let cb = cost_of(self.basis[r], &self.col_var);
            if cb == 0.0 {
                continue;
            }
            let row = self.a[r].clone();
            for (j, v) in row.iter().enumerate() {
                self.a[self.rows][j] -= cb * v;
            }
        }
    }
}

/// Run phase 1 only and return a feasible point, or `None` if infeasible.
pub fn simplex_feasible(lp: &LpProblem, max_pivots: usize) -> Result<Option<Vector>, LpError> {
    let mut tab = Tableau::build(lp);
    tab.set_phase1_costs();
    match tab.run(max_pivots)? {
        RunEnd::Optimal => {
            if tab.phase1_objective() > FEAS_TOL {
                Ok(None)
            } else {
                Ok(Some(tab.extract(lp.num_vars())))
            }
        }
        // The phase-1 objective is bounded below by zero.
        RunEnd::Unbounded { .. } => {
            Err(LpError::Breakdown("phase-1 objective reported unbounded".to_string()))
        }
    }
}

/// Full two-phase simplex minimization. `max_pivots` is the total budget
/// across both phases.
pub fn simplex_solve(lp: &LpProblem, max_pivots: usize) -> Result<LpSolution, LpError> {
    let mut tab = Tableau::build(lp);
    tab.set_phase1_costs();
    match tab.run(max_pivots)? {
        RunEnd::Optimal => {}
        RunEnd::Unbounded { .. } => {
            return Err(LpError::Breakdown("phase-1 objective reported unbounded".to_string()));
        }
    }
    if tab.phase1_objective() > FEAS_TOL {
        return Ok(LpSolution::Infeasible);
    }
    tab.drive_out_artificials();
    tab.set_phase2_costs(lp);
    match tab.run(max_pivots)? {
        RunEnd::Optimal => {
            let x = tab.extract(lp.num_vars());
            let objective = lp.objective.dot(&x) + lp.obj_const;
            Ok(LpSolution::Optimal { x, objective })
        }
        RunEnd::Unbounded { entering } => {
            Ok(LpSolution::Unbounded { ray: tab.extract_ray(lp.num_vars(), entering) })
        }
    }
}

/// [`simplex_solve`] wrapped into the uniform [`SolveOutcome`] shape.
pub fn solve_lp(lp: &LpProblem) -> SolveOutcome {
    match simplex_solve(lp, DEFAULT_PIVOT_LIMIT) {
        Ok(LpSolution::Optimal { x, objective }) => SolveOutcome {
            status: SolveStatus::Solved,
            x: Some(x),
            w: None,
            y: None,
            objective: Some(objective),
            certificate: None,
        },
        Ok(LpSolution::Infeasible) => SolveOutcome::status_only(SolveStatus::Infeasible),
        Ok(LpSolution::Unbounded { ray }) => SolveOutcome {
            status: SolveStatus::Unbounded,
            x: Some(ray),
            w: None,
            y: None,
            objective: None,
            certificate: Some("objective decreases along the returned ray".to_string()),
        },
        Err(err) => SolveOutcome::with_certificate(SolveStatus::LimitReached, err.to_string()),
    }
}
