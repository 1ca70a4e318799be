//! Complete sign-pattern enumeration for LCPs, MLCPs, and LPCCs.
//!
//! A complementarity condition `0 <= w perp g(x, w) >= 0` admits `2^s`
//! sign patterns: a subset `alpha` of indices where `g_i = 0` is imposed
//! (and `w_i` may be positive), with `w_i = 0` imposed outside `alpha`.
//! Every solution is captured by the pattern `alpha = { i : w_i != 0 }`,
//! so deciding all patterns decides the problem. Patterns are visited in
//! increasing bitmask order (bit `i` set means `i` is in `alpha`), and the
//! first accepted pattern wins, which makes results deterministic.
//!
//! Pattern subproblems are decided exactly: square nonsingular equality
//! systems by LU solve followed by sign checks, everything else (singular
//! or rectangular systems, branch optimization) through the two-phase
//! simplex, so degenerate-but-feasible patterns are never missed.

use crate::formulations::{LcpProblem, LpccProblem, MlcpProblem};
use crate::linalg::{Matrix, Vector};
use crate::solvers::lp::{simplex_feasible, simplex_solve, LpProblem, LpSolution};
use crate::solvers::{SolveOutcome, SolveStatus, NONNEG_TOL};

/// Pivot budget for each pattern subproblem LP.
const PATTERN_LP_PIVOT_LIMIT: usize = 50_000;

fn limit_outcome(s: usize, limit: usize) -> SolveOutcome {
    SolveOutcome::with_certificate(
        SolveStatus::LimitReached,
        format!("switching dimension {s} exceeds the enumeration limit {limit}"),
    )
}

fn mask_indices(mask: u64, s: usize) -> Vec<usize> {
    (0..s).filter(|i| mask & (1 << i) != 0).collect()
}

fn scatter(alpha: &[usize], values: &Vector, s: usize) -> Vector {
    let mut w = Vector::zeros(s);
    for (k, &i) in alpha.iter().enumerate() {
        w[i] = values[k];
    }
    w
}

/// Candidate `w` for one LCP pattern, or `None` if the pattern is
/// infeasible.
fn lcp_pattern_candidate(lcp: &LcpProblem, alpha: &[usize]) -> Option<Vector> {
    let s = lcp.dim();
    if alpha.is_empty() {
        return Some(Vector::zeros(s));
    }
    let sub = lcp.m.principal_submatrix(alpha);
    let rhs = Vector::from_fn(alpha.len(), |k| -lcp.q[alpha[k]]);
    let fact = sub.lu().expect("principal submatrix is square");
    if !fact.is_singular() {
        let w_alpha = fact.solve_vec(&rhs).expect("nonsingular");
        return Some(scatter(alpha, &w_alpha, s));
    }

    // Singular pattern system: decide feasibility by phase-1 simplex over
    // w_alpha >= 0 with the slack sign constraints included.
    let k = alpha.len();
    let mut lp = LpProblem::with_vars(k);
    lp.nonneg = vec![true; k];
    lp.eq_lhs = Matrix::from_fn(k, k, |r, c| sub.get(r, c));
    lp.eq_rhs = rhs;
    let outside: Vec<usize> = (0..s).filter(|i| !alpha.contains(i)).collect();
    lp.ge_lhs = Matrix::from_fn(outside.len(), k, |r, c| lcp.m.get(outside[r], alpha[c]));
    lp.ge_rhs = Vector::from_fn(outside.len(), |r| -lcp.q[outside[r]]);
    match simplex_feasible(&lp, PATTERN_LP_PIVOT_LIMIT) {
        Ok(Some(point)) => Some(scatter(alpha, &point, s)),
        _ => None,
    }
}

fn lcp_accepts(lcp: &LcpProblem, w: &Vector) -> bool {
    w.min() >= -NONNEG_TOL && lcp.slack(w).min() >= -NONNEG_TOL
}

/// Complete enumeration for `0 <= w perp q + M w >= 0`.
///
/// Visits all `2^s` patterns and returns the first solution in bitmask
/// order, or `NoSolutionProved` after exhausting them. `s` beyond `limit`
/// yields `LimitReached` without deciding anything.
pub fn solve_lcp_enumerate(lcp: &LcpProblem, limit: usize) -> SolveOutcome {
    let s = lcp.dim();
    if s > limit.min(62) {
        return limit_outcome(s, limit.min(62));
    }
    let total = 1u64 << s;
    for mask in 0..total {
        let alpha = mask_indices(mask, s);
        if let Some(w) = lcp_pattern_candidate(lcp, &alpha) {
            if lcp_accepts(lcp, &w) {
                return SolveOutcome {
                    status: SolveStatus::Solved,
                    x: None,
                    w: Some(w),
                    y: None,
                    objective: None,
                    certificate: Some(format!(
                        "pattern {mask:#b} accepted ({} of {total} examined)",
                        mask + 1
                    )),
                };
            }
        }
    }
    SolveOutcome::with_certificate(
        SolveStatus::NoSolutionProved,
        format!("exhausted all {total} complementarity patterns"),
    )
}

/// All LCP solutions found across the `2^s` patterns, deduplicated within
/// an infinity-norm tolerance of `1e-7`. `Err` carries the limit message
/// when `s` is too large.
pub fn enumerate_lcp_solutions(lcp: &LcpProblem, limit: usize) -> Result<Vec<Vector>, String> {
    let s = lcp.dim();
    if s > limit.min(62) {
        return Err(format!("switching dimension {s} exceeds the enumeration limit {limit}"));
    }
    let mut found: Vec<Vector> = Vec::new();
    for mask in 0..(1u64 << s) {
        let alpha = mask_indices(mask, s);
        if let Some(w) = lcp_pattern_candidate(lcp, &alpha) {
            if lcp_accepts(lcp, &w)
                && !found.iter().any(|u| u.sub(&w).inf_norm() <= 1e-7)
            {
                found.push(w);
            }
        }
    }
    Ok(found)
}

/// Candidate `(x, w)` for one MLCP pattern, or `None` if infeasible.
fn mlcp_pattern_candidate(mlcp: &MlcpProblem, alpha: &[usize]) -> Option<(Vector, Vector)> {
    let s = mlcp.comp_dim();
    let n_x = mlcp.n_x;
    let m_eq = mlcp.eq_const.len();
    let k = alpha.len();

    // Square equality system: solve directly, then check signs. A singular
    // system falls through to the LP, so degenerate patterns still get a
    // complete feasibility decision.
    if m_eq == n_x {
        let dim = n_x + k;
        let mut a = Matrix::zeros(dim, dim);
        let mut rhs = Vector::zeros(dim);
        for r in 0..m_eq {
            for c in 0..n_x {
                a.set(r, c, mlcp.eq_x.get(r, c));
            }
            for (c, &i) in alpha.iter().enumerate() {
                a.set(r, n_x + c, mlcp.eq_w.get(r, i));
            }
            rhs[r] = -mlcp.eq_const[r];
        }
        for (extra, &i) in alpha.iter().enumerate() {
            let r = m_eq + extra;
            for c in 0..n_x {
                a.set(r, c, mlcp.comp_x.get(i, c));
            }
            for (c, &j) in alpha.iter().enumerate() {
                a.set(r, n_x + c, mlcp.comp_w.get(i, j));
            }
            rhs[r] = -mlcp.comp_const[i];
        }
        let fact = a.lu().expect("square by construction");
        if !fact.is_singular() {
            let sol = fact.solve_vec(&rhs).expect("nonsingular");
            let x = Vector::from_fn(n_x, |i| sol[i]);
            let w_alpha = Vector::from_fn(k, |i| sol[n_x + i]);
            return Some((x, scatter(alpha, &w_alpha, s)));
        }
    }

    // General case: phase-1 simplex over (x free, w_alpha >= 0).
    let nv = n_x + k;
    let mut lp = LpProblem::with_vars(nv);
    for flag in lp.nonneg.iter_mut().skip(n_x) {
        *flag = true;
    }
    let eq_rows = m_eq + k;
    lp.eq_lhs = Matrix::from_fn(eq_rows, nv, |r, c| {
        if r < m_eq {
            if c < n_x {
                mlcp.eq_x.get(r, c)
            } else {
                mlcp.eq_w.get(r, alpha[c - n_x])
            }
        } else {
            let i = alpha[r - m_eq];
            if c < n_x {
                mlcp.comp_x.get(i, c)
            } else {
                mlcp.comp_w.get(i, alpha[c - n_x])
            }
        }
    });
    lp.eq_rhs = Vector::from_fn(eq_rows, |r| {
        if r < m_eq {
            -mlcp.eq_const[r]
        } else {
            -mlcp.comp_const[alpha[r - m_eq]]
        }
    });
    let outside: Vec<usize> = (0..s).filter(|i| !alpha.contains(i)).collect();
    lp.ge_lhs = Matrix::from_fn(outside.len(), nv, |r, c| {
        let i = outside[r];
        if c < n_x {
            mlcp.comp_x.get(i, c)
        } else {
            mlcp.comp_w.get(i, alpha[c - n_x])
        }
    });
    lp.ge_rhs = Vector::from_fn(outside.len(), |r| -mlcp.comp_const[outside[r]]);

    match simplex_feasible(&lp, PATTERN_LP_PIVOT_LIMIT) {
        Ok(Some(point)) => {
            let x = Vector::from_fn(n_x, |i| point[i]);
            let w_alpha = Vector::from_fn(k, |i| point[n_x + i]);
            Some((x, scatter(alpha, &w_alpha, s)))
        }
        _ => None,
    }
}

fn mlcp_accepts(mlcp: &MlcpProblem, x: &Vector, w: &Vector) -> bool {
    mlcp.eq_residual(x, w).inf_norm() <= 1e-7
        && w.min() >= -NONNEG_TOL
        && mlcp.comp_value(x, w).min() >= -1e-7
}

/// Complete enumeration for a mixed LCP. Semantics mirror
/// [`solve_lcp_enumerate`], with the solution reported as `(x, w)`.
pub fn solve_mlcp_enumerate(mlcp: &MlcpProblem, limit: usize) -> SolveOutcome {
    let s = mlcp.comp_dim();
    if s > limit.min(62) {
        return limit_outcome(s, limit.min(62));
    }
    let total = 1u64 << s;
    for mask in 0..total {
        let alpha = mask_indices(mask, s);
        if let Some((x, w)) = mlcp_pattern_candidate(mlcp, &alpha) {
            if mlcp_accepts(mlcp, &x, &w) {
                return SolveOutcome {
                    status: SolveStatus::Solved,
                    x: Some(x),
                    w: Some(w),
                    y: None,
                    objective: None,
                    certificate: Some(format!(
                        "pattern {mask:#b} accepted ({} of {total} examined)",
                        mask + 1
                    )),
                };
            }
        }
    }
    SolveOutcome::with_certificate(
        SolveStatus::NoSolutionProved,
        format!("exhausted all {total} complementarity patterns"),
    )
}

/// Globally minimize an LPCC by solving the branch LP of every pattern and
/// keeping the best optimum.
///
/// Returns `Solved` with the minimizing branch point, `Infeasible` if no
/// branch is feasible, or `Unbounded` as soon as any feasible branch LP is
/// unbounded (the LPCC infimum is then `-inf`, which also means the
/// underlying function has no global minimum).
pub fn solve_lpcc_enumerate(lpcc: &LpccProblem, limit: usize) -> SolveOutcome {
    let s = lpcc.comp_dim();
    if s > limit.min(62) {
        return limit_outcome(s, limit.min(62));
    }
    let n_x = lpcc.n_x();
    let total = 1u64 << s;
    let mut best: Option<(f64, Vector, Vector, u64)> = None;
    let mut feasible_branches = 0u64;

    for mask in 0..total {
        let alpha = mask_indices(mask, s);
        let k = alpha.len();
        let nv = n_x + k;
        let mut lp = LpProblem::with_vars(nv);
        for flag in lp.nonneg.iter_mut().skip(n_x) {
            *flag = true;
        }
        lp.objective = Vector::from_fn(nv, |c| {
            if c < n_x {
                lpcc.obj_x[c]
            } else {
                lpcc.obj_w[alpha[c - n_x]]
            }
        });
        lp.obj_const = lpcc.obj_const;
        lp.eq_lhs = Matrix::from_fn(k, nv, |r, c| {
            let i = alpha[r];
            if c < n_x {
                lpcc.comp_x.get(i, c)
            } else {
                lpcc.comp_w.get(i, alpha[c - n_x])
            }
        });
        lp.eq_rhs = Vector::from_fn(k, |r| -lpcc.comp_const[alpha[r]]);
        let outside: Vec<usize> = (0..s).filter(|i| !alpha.contains(i)).collect();
        lp.ge_lhs = Matrix::from_fn(outside.len(), nv, |r, c| {
            let i = outside[r];
            if c < n_x {
                lpcc.comp_x.get(i, c)
            } else {
                lpcc.comp_w.get(i, alpha[c - n_x])
            }
        });
        lp.ge_rhs = Vector::from_fn(outside.len(), |r| -lpcc.comp_const[outside[r]]);

        match simplex_solve(&lp, PATTERN_LP_PIVOT_LIMIT) {
            Ok(LpSolution::Optimal { x: point, objective }) => {
                feasible_branches += 1;
                let is_better = match &best {
                    None => true,
                    Some((obj, _, _, _)) => objective < obj - 1e-12,
                };
                if is_better {
                    let x = Vector::from_fn(n_x, |i| point[i]);
                    let w_alpha = Vector::from_fn(k, |i| point[n_x + i]);
                    best = Some((objective, x, scatter(&alpha, &w_alpha, s), mask));
                }
            }
            Ok(LpSolution::Infeasible) => {}
            Ok(LpSolution::Unbounded { .. }) => {
                return SolveOutcome::with_certificate(
                    SolveStatus::Unbounded,
                    format!("branch LP for pattern {mask:#b} is unbounded below"),
                );
            }
            Err(err) => {
                return SolveOutcome::with_certificate(
                    SolveStatus::LimitReached,
                    format!("branch LP for pattern {mask:#b} failed: {err}"),
                );
            }
        }
    }

    match best {
        Some((objective, x, w, mask)) => SolveOutcome {
            status: SolveStatus::Solved,
            x: Some(x),
            w: Some(w),
            y: None,
            objective: Some(objective),
            certificate: Some(format!(
                "minimum over {feasible_branches} feasible of {total} branch LPs, attained at pattern {mask:#b}"
            )),
        },
        None => SolveOutcome::with_certificate(
            SolveStatus::Infeasible,
            format!("all {total} branch LPs infeasible"),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulations::{build_min_lpcc, build_root_lcp, build_root_mlcp};
    use crate::instances;
    use crate::solvers::DEFAULT_ENUM_LIMIT;

    #[test]
    fn lcp_with_nonnegative_q_solves_with_empty_pattern() {
        let root = build_root_lcp(&instances::two_dim_root_system()).unwrap();
        let out = solve_lcp_enumerate(&root.lcp, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::Solved);
        assert_eq!(out.w.unwrap().inf_norm(), 0.0);
    }

    #[test]
    fn lcp_identity_needs_full_pattern() {
        let lcp = LcpProblem {
            m: Matrix::identity(2),
            q: Vector::from_slice(&[-1.0, -2.0]),
        };
        let out = solve_lcp_enumerate(&lcp, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::Solved);
        let w = out.w.unwrap();
        assert!((w[0] - 1.0).abs() < 1e-12 && (w[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rootless_scalar_chain_lcp_is_proved_empty() {
        let root = build_root_lcp(&instances::nested_kink_scalar()).unwrap();
        let out = solve_lcp_enumerate(&root.lcp, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::NoSolutionProved);
        assert!(out.certificate.unwrap().contains("8"));
    }

    #[test]
    fn enumeration_limit_is_reported() {
        let lcp = LcpProblem { m: Matrix::identity(5), q: Vector::zeros(5) };
        let out = solve_lcp_enumerate(&lcp, 4);
        assert_eq!(out.status, SolveStatus::LimitReached);
    }

    #[test]
    fn singular_pattern_systems_fall_back_to_feasibility_lp() {
        // The only solving pattern is {2}, whose 1x1 system matrix is
        // zero; the direct solve cannot decide it, the LP can.
        let lcp = LcpProblem {
            m: Matrix::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]),
            q: Vector::from_slice(&[-1.0, 0.0]),
        };
        let out = solve_lcp_enumerate(&lcp, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::Solved);
        let w = out.w.unwrap();
        let slack = lcp.slack(&w);
        assert!(w.min() >= -1e-9 && slack.min() >= -1e-9);
        assert!((w[0]).abs() <= 1e-9, "w1 must stay at zero");
        assert!(w[1] >= 1.0 - 1e-9, "w2 >= 1 is needed for feasibility");
    }

    #[test]
    fn mlcp_for_two_dim_system_recovers_the_root() {
        let mlcp = build_root_mlcp(&instances::two_dim_root_system());
        let out = solve_mlcp_enumerate(&mlcp, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::Solved);
        let x = out.x.unwrap();
        assert!((x[0] - 0.0).abs() < 1e-9);
        assert!((x[1] + 0.5).abs() < 1e-9);
        assert!(out.w.unwrap().inf_norm() < 1e-9);
    }

    #[test]
    fn mlcp_for_rootless_function_is_proved_empty() {
        let mlcp = build_root_mlcp(&instances::nested_kink_scalar());
        let out = solve_mlcp_enumerate(&mlcp, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::NoSolutionProved);
    }

    #[test]
    fn affine_mlcp_reduces_to_linear_solve() {
        let f = instances::affine_square(
            Matrix::from_rows(&[&[2.0, 0.0], &[0.0, 4.0]]),
            Vector::from_slice(&[-2.0, -8.0]),
        );
        let mlcp = build_root_mlcp(&f);
        let out = solve_mlcp_enumerate(&mlcp, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::Solved);
        let x = out.x.unwrap();
        assert!((x[0] - 1.0).abs() < 1e-9 && (x[1] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn lpcc_minimum_of_abs_objective_is_zero() {
        let lpcc = build_min_lpcc(&instances::abs_objective_3d());
        let out = solve_lpcc_enumerate(&lpcc, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::Solved);
        assert!(out.objective.unwrap().abs() < 1e-9);
    }

    #[test]
    fn lpcc_minimum_of_scalar_chain_is_eleven() {
        let lpcc = build_min_lpcc(&instances::nested_kink_scalar());
        let out = solve_lpcc_enumerate(&lpcc, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::Solved);
        assert!((out.objective.unwrap() - 11.0).abs() < 1e-9);
        let x = out.x.unwrap();
        assert!((x[0] - 8.0 / 7.0).abs() < 1e-9);
    }

    #[test]
    fn lpcc_of_unbounded_function_reports_unbounded() {
        let lpcc = build_min_lpcc(&instances::neg_abs_scalar());
        let out = solve_lpcc_enumerate(&lpcc, DEFAULT_ENUM_LIMIT);
        assert_eq!(out.status, SolveStatus::Unbounded);
    }

    #[test]
    fn planted_solution_is_always_found() {
        // Plant w with disjoint support from the slack and back-solve q.
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..50 {
            let s = rng.gen_range(1..=6);
            let m = Matrix::from_fn(s, s, |_, _| rng.gen_range(-2.0..2.0));
            let mut w = Vector::zeros(s);
            let mut slack = Vector::zeros(s);
            for i in 0..s {
                if rng.gen_bool(0.5) {
                    w[i] = rng.gen_range(0.0..3.0);
                } else {
                    slack[i] = rng.gen_range(0.0..3.0);
                }
            }
            let q = slack.sub(&m.mul_vec(&w));
            let lcp = LcpProblem { m, q };
            let out = solve_lcp_enumerate(&lcp, DEFAULT_ENUM_LIMIT);
            assert_eq!(out.status, SolveStatus::Solved, "planted solution missed");
        }
    }
}
