//! Residual checks for solver outputs.
//!
//! A solution is accepted only when every residual passes at the given
//! tolerance: equality blocks within `tol`, sign conditions above `-tol`,
//! and pairwise complementarity products within `tol`.

use crate::anf::AbsNormalForm;
use crate::formulations::{LcpProblem, LpccProblem, MlcpProblem};
use crate::linalg::Vector;

fn signs_ok(v: &Vector, tol: f64) -> bool {
    v.min() >= -tol
}

fn products_ok(a: &Vector, b: &Vector, tol: f64) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| (x * y).abs() <= tol)
}

/// Check `0 <= w perp q + M w >= 0` at tolerance `tol`.
pub fn verify_lcp(lcp: &LcpProblem, w: &Vector, tol: f64) -> bool {
    let slack = lcp.slack(w);
    signs_ok(w, tol) && signs_ok(&slack, tol) && products_ok(w, &slack, tol)
}

/// Check an MLCP solution: equality residual, signs, and products.
pub fn verify_mlcp(mlcp: &MlcpProblem, x: &Vector, w: &Vector, tol: f64) -> bool {
    let comp = mlcp.comp_value(x, w);
    mlcp.eq_residual(x, w).inf_norm() <= tol
        && signs_ok(w, tol)
        && signs_ok(&comp, tol)
        && products_ok(w, &comp, tol)
}

/// Check feasibility of `(x, w)` for an LPCC's complementarity constraints.
pub fn verify_lpcc_point(lpcc: &LpccProblem, x: &Vector, w: &Vector, tol: f64) -> bool {
    let comp = lpcc.comp_value(x, w);
    signs_ok(w, tol) && signs_ok(&comp, tol) && products_ok(w, &comp, tol)
}

/// Check that `x` is a root: `||f(x)||_inf <= tol`.
pub fn verify_root(anf: &AbsNormalForm, x: &Vector, tol: f64) -> bool {
    anf.evaluate(x).inf_norm() <= tol
}
