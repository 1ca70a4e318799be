//! Lemke's complementary pivoting method for LCPs, with the unit covering
//! vector and a lexicographic ratio test.
//!
//! The method is not complete: it can terminate on a secondary ray without
//! deciding whether a solution exists. Ray termination is reported as such
//! and never converted into a "no solution" claim; callers that need a
//! definite answer fall back to sign-pattern enumeration.

use crate::formulations::LcpProblem;
use crate::linalg::Vector;
use crate::solvers::{SolveOutcome, SolveStatus, NONNEG_TOL};

/// Default cap on Lemke pivots.
pub const DEFAULT_LEMKE_PIVOT_LIMIT: usize = 10_000;

const PIVOT_EPS: f64 = 1e-9;
/// Ratio ties within this window are resolved lexicographically.
const RATIO_TIE_EPS: f64 = 1e-9;

/// Column layout: `0..s` are the slacks `v`, `s..2s` the variables `w`,
/// `2s` the auxiliary variable, and `2s+1` the right-hand side.
struct LemkeTableau {
    s: usize,
    a: Vec<Vec<f64>>,
    basis: Vec<usize>,
}

impl LemkeTableau {
    fn new(lcp: &LcpProblem) -> Self {
        let s = lcp.dim();
        let mut a = vec![vec![0.0; 2 * s + 2]; s];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 1.0;
            for j in 0..s {
                row[s + j] = -lcp.m.get(i, j);
            }
            row[2 * s] = -1.0;
            row[2 * s + 1] = lcp.q[i];
        }
        let basis = (0..s).collect();
        LemkeTableau { s, a, basis }
    }

    fn rhs_col(&self) -> usize {
        2 * self.s + 1
    }

    fn aux_col(&self) -> usize {
        2 * self.s
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pivot = self.a[r][c];
        for v in self.a[r].iter_mut() {
            *v /= pivot;
        }
        let pivot_row = self.a[r].clone();
        for i in 0..self.s {
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
    }

    /// Lexicographic minimum-ratio row for the entering column, preferring
    /// the auxiliary variable's row whenever it ties the minimum ratio.
    fn ratio_row(&self, entering: usize) -> Option<usize> {
        let rhs = self.rhs_col();
        let mut best: Option<usize> = None;
        for r in 0..self.s {
            let denom = self.a[r][entering];
            if denom <= PIVOT_EPS {
                continue;
            }
            match best {
                None => best = Some(r),
                Some(b) => {
                    let cur = self.a[r][rhs] / denom;
                    let old = self.a[b][rhs] / self.a[b][entering];
                    let strictly_smaller = cur < old - RATIO_TIE_EPS;
                    let tie_and_lex_smaller =
                        cur <= old + RATIO_TIE_EPS && self.lex_less(r, b, entering);
                    if strictly_smaller || tie_and_lex_smaller {
                        best = Some(r);
                    }
                }
            }
        }
        let best = best?;
        // Let the auxiliary variable leave as soon as its row ties the
        // minimum ratio; that ends the method with a solution.
        if self.basis[best] != self.aux_col() {
            if let Some(aux_row) = self.basis.iter().position(|&b| b == self.aux_col()) {
                let denom = self.a[aux_row][entering];
                if denom > PIVOT_EPS {
                    let aux_ratio = self.a[aux_row][rhs] / denom;
                    let best_ratio = self.a[best][rhs] / self.a[best][entering];
                    if aux_ratio <= best_ratio + RATIO_TIE_EPS {
                        return Some(aux_row);
                    }
                }
            }
        }
        Some(best)
    }

    /// Compare rows `r` and `b` (both with positive entries in the
    /// entering column) over the slack columns, lexicographically.
    fn lex_less(&self, r: usize, b: usize, entering: usize) -> bool {
        let dr = self.a[r][entering];
        let db = self.a[b][entering];
        for c in 0..self.s {
            let vr = self.a[r][c] / dr;
            let vb = self.a[b][c] / db;
            if (vr - vb).abs() > 1e-12 {
                return vr < vb;
            }
        }
        false
    }

    fn extract_w(&self) -> Vector {
        let mut w = Vector::zeros(self.s);
        let rhs = self.rhs_col();
        for (r, &b) in self.basis.iter().enumerate() {
            if b >= self.s && b < 2 * self.s {
                w[b - self.s] = self.a[r][rhs];
            }
        }
        w
    }
}

/// Solve `0 <= w perp q + M w >= 0` by complementary pivoting.
///
/// Returns `Solved` with `w` (verified against the residual tolerances),
/// `RayTermination` when a secondary ray is hit (inconclusive), or
/// `LimitReached` when the pivot budget runs out. `q >= 0` short-circuits
/// to `w = 0`. Panics if `M` is not square of the LCP dimension.
pub fn solve_lcp_lemke(lcp: &LcpProblem, max_pivots: usize) -> SolveOutcome {
    let s = lcp.dim();
    assert_eq!(lcp.m.rows(), s, "M row count must match q");
    assert_eq!(lcp.m.cols(), s, "M must be square");

    if lcp.q.min() >= -NONNEG_TOL {
        let w = Vector::zeros(s);
        return SolveOutcome {
            status: SolveStatus::Solved,
            x: None,
            w: Some(w),
            y: None,
            objective: None,
            certificate: Some("q >= 0: trivial solution w = 0".to_string()),
        };
    }

    let mut tab = LemkeTableau::new(lcp);

    // The auxiliary variable enters first; the row with the most negative
    // entry leaves so that the basis becomes nonnegative.
    let rhs = tab.rhs_col();
    let mut leave_row = 0;
    for r in 1..s {
        if tab.a[r][rhs] < tab.a[leave_row][rhs] {
            leave_row = r;
        }
    }
    let mut entering = tab.aux_col();
    let mut pivots = 0usize;

    loop {
        let leaving_var = tab.basis[leave_row];
        tab.pivot(leave_row, entering);
        pivots += 1;

        if leaving_var == tab.aux_col() {
            break;
        }
        if pivots >= max_pivots {
            return SolveOutcome::with_certificate(
                SolveStatus::LimitReached,
                format!("lemke pivot limit reached after {pivots} pivots"),
            );
        }

        // Complementary pivot rule: the complement of what just left enters.
        entering = if leaving_var < s { leaving_var + s } else { leaving_var - s };
        match tab.ratio_row(entering) {
            Some(r) => leave_row = r,
            None => {
                return SolveOutcome::with_certificate(
                    SolveStatus::RayTermination,
                    format!("secondary ray after {pivots} pivots; inconclusive"),
                );
            }
        }
    }

    let w = tab.extract_w();
    let slack = lcp.slack(&w);
    let comp = (0..s).fold(0.0f64, |acc, i| acc.max((w[i] * slack[i]).abs()));
    if w.min() < -1e-7 || slack.min() < -1e-7 || comp > 1e-6 {
        return SolveOutcome::with_certificate(
            SolveStatus::LimitReached,
            format!(
                "pivoting finished but residuals failed: min w {:.3e}, min slack {:.3e}, comp {:.3e}",
                w.min(),
                slack.min(),
                comp
            ),
        );
    }

    SolveOutcome {
        status: SolveStatus::Solved,
        x: None,
        w: Some(w),
        y: None,
        objective: None,
        certificate: Some(format!("{pivots} complementary pivots")),
    }
}
