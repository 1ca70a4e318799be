//! Complete desk-scale solvers for the formulations in this crate.
//!
//! Two families live here. Pivoting methods ([`lemke`] for LCPs, the
//! two-phase simplex in [`lp`]) are fast but not complete for every input:
//! Lemke's method can stop on a secondary ray without deciding anything.
//! Sign-pattern enumeration ([`enumerate`]) is complete: it fixes, for each
//! complementarity pair, which side is zero, decides the resulting linear
//! (feasibility) problem, and only reports "no solution" after exhausting
//! all `2^s` patterns. Branch-and-bound ([`milp`]) handles the big-M
//! minimization reformulation.
//!
//! All solvers are pure functions of their inputs and fixed options, with
//! deterministic tie-breaking, so outputs are reproducible.

pub mod enumerate;
pub mod lemke;
pub mod lp;
pub mod milp;
pub mod verify;

use std::fmt;

use crate::linalg::Vector;

/// Default cap on the switching dimension for sign-pattern enumeration
/// (`2^20` patterns at most). Configurable per call.
pub const DEFAULT_ENUM_LIMIT: usize = 20;

/// Nonnegativity checks accept values down to `-NONNEG_TOL`.
pub const NONNEG_TOL: f64 = 1e-9;

/// Complementarity products are accepted up to this magnitude.
pub const COMP_TOL: f64 = 1e-8;

/// Equality residuals are accepted up to this magnitude.
pub const EQ_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// A solution passing the residual checks was found.
    Solved,
    /// Complete enumeration exhausted every pattern without finding a
    /// solution; this is a certificate, not a timeout.
    NoSolutionProved,
    /// Lemke's method terminated on a secondary ray; inconclusive.
    RayTermination,
    /// The problem (or every branch of it) is infeasible.
    Infeasible,
    /// The objective is unbounded below on the feasible set.
    Unbounded,
    /// A pivot, pattern, or node limit stopped the solver early.
    LimitReached,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            SolveStatus::Solved => "solved",
            SolveStatus::NoSolutionProved => "no-solution-proved",
            SolveStatus::RayTermination => "ray-termination",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unbounded => "unbounded",
            SolveStatus::LimitReached => "limit-reached",
        };
        f.write_str(text)
    }
}

/// Uniform solver result. Which fields are populated depends on the
/// problem class: LCPs fill `w`, MLCPs fill `x` and `w`, the MILP solver
/// also fills `y`, and optimizers fill `objective`.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub x: Option<Vector>,
    pub w: Option<Vector>,
    pub y: Option<Vec<bool>>,
    pub objective: Option<f64>,
    /// Human-readable account of what the solver did: patterns exhausted,
    /// pivot counts, node counts.
    pub certificate: Option<String>,
}

impl SolveOutcome {
    pub fn status_only(status: SolveStatus) -> Self {
        SolveOutcome { status, x: None, w: None, y: None, objective: None, certificate: None }
    }

    pub fn with_certificate(status: SolveStatus, certificate: String) -> Self {
        SolveOutcome {
            status,
            x: None,
            w: None,
            y: None,
            objective: None,
            certificate: Some(certificate),
        }
    }

    pub fn is_solved(&self) -> bool {
        self.status == SolveStatus::Solved
    }
}
