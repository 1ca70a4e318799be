//! Matrix-class tests and end-to-end pipelines chaining form, formulation,
//! and solver.
//!
//! The pipelines mirror how the pieces are meant to be used: derive the
//! auxiliary quantities, pick the least demanding formulation that applies
//! (or the one the caller insists on), run a pivoting solver with complete
//! enumeration as the fallback, recover the point in the original
//! variables, and verify residuals before reporting success.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use crate::anf::AbsNormalForm;
use crate::formulations::{
    build_existence_mlcp, build_min_lpcc, build_min_milp, build_root_lcp, build_root_lcp_legacy,
    build_root_mlcp, build_root_mlcp_legacy, DEFAULT_BIG_M,
};
use crate::linalg::Matrix;
use crate::solvers::enumerate::{solve_lcp_enumerate, solve_lpcc_enumerate, solve_mlcp_enumerate};
use crate::solvers::lemke::{solve_lcp_lemke, DEFAULT_LEMKE_PIVOT_LIMIT};
use crate::solvers::milp::{solve_milp_bb, DEFAULT_NODE_LIMIT};
use crate::solvers::verify::verify_root;
use crate::solvers::{SolveOutcome, SolveStatus, DEFAULT_ENUM_LIMIT};

/// Principal minors must exceed this to count as positive.
pub const PRINCIPAL_MINOR_TOL: f64 = 1e-12;

/// Hard cap for the exhaustive principal-minor test (`2^n - 1` minors).
pub const P_MATRIX_DIM_LIMIT: usize = 20;

/// True iff every nonempty principal minor is positive (exceeds
/// [`PRINCIPAL_MINOR_TOL`]). A P-matrix guarantees a unique LCP solution
/// for every constant vector. Panics when the matrix is not square or its
/// dimension exceeds [`P_MATRIX_DIM_LIMIT`].
pub fn is_p_matrix(m: &Matrix) -> bool {
    assert!(m.is_square(), "the P-matrix test requires a square matrix");
    let n = m.rows();
    assert!(n <= P_MATRIX_DIM_LIMIT, "P-matrix test limited to dimension {P_MATRIX_DIM_LIMIT}");
    for mask in 1u64..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if m.principal_submatrix(&idx).det() <= PRINCIPAL_MINOR_TOL {
            return false;
        }
    }
    true
}

/// Sufficient condition: the symmetric part `(M + M') / 2` admits a
/// Cholesky factorization with pivots above [`PRINCIPAL_MINOR_TOL`]. This
/// implies `M` is a P-matrix (hence the LCP is solvable and uniquely so)
/// but is strictly stronger: a P-matrix with an indefinite symmetric part
/// fails this test.
pub fn is_positive_definite_sufficient(m: &Matrix) -> bool {
    assert!(m.is_square(), "positive-definiteness test requires a square matrix");
    let n = m.rows();
    let sym = m.add(&m.transpose()).scale(0.5);
    let mut chol = vec![vec![0.0f64; n]; n];
    for j in 0..n {
        let d = sym.get(j, j) - chol[j].iter().take(j).map(|v| v * v).sum::<f64>();
        if d <= PRINCIPAL_MINOR_TOL {
            return false;
        }
        chol[j][j] = d.sqrt();
        for i in (j + 1)..n {
            let cross: f64 = chol[i].iter().zip(&chol[j]).take(j).map(|(a, b)| a * b).sum();
            chol[i][j] = (sym.get(i, j) - cross) / chol[j][j];
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootStrategy {
    /// Prefer the LCP (Lemke with enumeration fallback) when `m = n` and
    /// `J~` is nonsingular; otherwise the general MLCP by enumeration.
    Auto,
    Mlcp,
    Lcp,
    LegacyMlcp,
    LegacyLcp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinimizeMethod {
    Lpcc,
    Milp,
}

/// Knobs shared by the pipelines; the defaults match the solver modules.
#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub enum_limit: usize,
    pub lemke_pivot_limit: usize,
    pub milp_node_limit: usize,
    /// Acceptance threshold on the recovered root residual.
    pub root_tol: f64,
    /// Big-M bound for the MILP method.
    pub mu: f64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            enum_limit: DEFAULT_ENUM_LIMIT,
            lemke_pivot_limit: DEFAULT_LEMKE_PIVOT_LIMIT,
            milp_node_limit: DEFAULT_NODE_LIMIT,
            root_tol: 1e-6,
            mu: DEFAULT_BIG_M,
        }
    }
}

/// Which regularity conditions were checked, and how they came out.
/// `None` means the condition was not relevant for the chosen route.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NonsingularityFlags {
    pub j: Option<bool>,
    pub j_tilde: Option<bool>,
    pub i_minus_s: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub chosen_formulation: String,
    pub flags: NonsingularityFlags,
    pub outcome: SolveOutcome,
    pub residuals: BTreeMap<String, f64>,
    pub wall_time: Duration,
    /// Populated by [`minimize_pipeline`] when the existence check ran.
    pub existence: Option<ExistenceStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PipelineError {
    /// A strategy's precondition (shape or nonsingularity) is violated.
    Precondition(String),
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::Precondition(msg) => write!(f, "precondition failed: {msg}"),
        }
    }
}

impl std::error::Error for PipelineError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExistenceStatus {
    MinimumExists,
    NoMinimum,
    /// The enumeration limit was hit; no certificate either way.
    Indeterminate,
}

impl fmt::Display for ExistenceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ExistenceStatus::MinimumExists => "minimum-exists",
            ExistenceStatus::NoMinimum => "no-minimum",
            ExistenceStatus::Indeterminate => "indeterminate",
        };
        f.write_str(text)
    }
}

/// Existence decision together with the solve outcome backing it.
#[derive(Debug, Clone)]
pub struct ExistenceCertificate {
    pub status: ExistenceStatus,
    pub outcome: SolveOutcome,
}

fn root_residuals(anf: &AbsNormalForm, outcome: &SolveOutcome) -> BTreeMap<String, f64> {
    let mut residuals = BTreeMap::new();
    if let Some(x) = &outcome.x {
        residuals.insert("f_inf_norm".to_string(), anf.evaluate(x).inf_norm());
    }
    if let Some(w) = &outcome.w {
        residuals.insert("w_min".to_string(), w.min().min(0.0).abs());
    }
    residuals
}

fn report(
    anf: &AbsNormalForm,
    chosen: &str,
    flags: NonsingularityFlags,
    outcome: SolveOutcome,
    start: Instant,
) -> PipelineReport {
    PipelineReport {
        chosen_formulation: chosen.to_string(),
        flags,
        residuals: root_residuals(anf, &outcome),
        outcome,
        wall_time: start.elapsed(),
        existence: None,
    }
}

/// Demote a solved outcome whose recovered point fails the residual check.
fn checked_root(anf: &AbsNormalForm, mut outcome: SolveOutcome, tol: f64) -> SolveOutcome {
    if outcome.status == SolveStatus::Solved {
        let ok = outcome.x.as_ref().map(|x| verify_root(anf, x, tol)).unwrap_or(false);
        if !ok {
            outcome.status = SolveStatus::LimitReached;
            let note = "solution failed the root residual check".to_string();
            outcome.certificate = Some(match outcome.certificate.take() {
                Some(c) => format!("{c}; {note}"),
                None => note,
            });
        }
    }
    outcome
}

/// Find a root of the form by the selected strategy.
///
/// `Auto` uses the LCP route (Lemke first, complete enumeration when Lemke
/// is inconclusive) whenever `m = n` and `J~` is nonsingular, and the
/// general MLCP enumeration otherwise. The explicit strategies error out
/// with [`PipelineError::Precondition`] when their requirements fail. The
/// recovered root always carries a verified `f` residual in the report.
pub fn root_pipeline(
    anf: &AbsNormalForm,
    strategy: RootStrategy,
    opts: &PipelineOptions,
) -> Result<PipelineReport, PipelineError> {
    let start = Instant::now();
    let square = anf.output_dim() == anf.input_dim();
    let mut flags = NonsingularityFlags::default();
    if square {
        flags.j = Some(!anf.j_mat().lu().expect("square").is_singular());
        flags.j_tilde = Some(!anf.auxiliary().j_tilde.lu().expect("square").is_singular());
    }

    match strategy {
        RootStrategy::Auto => {
            if square && flags.j_tilde == Some(true) {
                let root = build_root_lcp(anf).expect("J~ nonsingular");
                let outcome = solve_root_lcp(anf, &root, opts);
                Ok(report(anf, "lcp", flags, outcome, start))
            } else {
                let outcome = solve_root_mlcp_route(anf, opts);
                Ok(report(anf, "mlcp", flags, outcome, start))
            }
        }
        RootStrategy::Mlcp => {
            let outcome = solve_root_mlcp_route(anf, opts);
            Ok(report(anf, "mlcp", flags, outcome, start))
        }
        RootStrategy::Lcp => {
            if !square {
                return Err(PipelineError::Precondition(
                    "the LCP strategy requires a square map (m = n)".to_string(),
                ));
            }
            let Some(root) = build_root_lcp(anf) else {
                return Err(PipelineError::Precondition("J~ is singular".to_string()));
            };
            let outcome = solve_root_lcp(anf, &root, opts);
            Ok(report(anf, "lcp", flags, outcome, start))
        }
        RootStrategy::LegacyMlcp => {
            if !square {
                return Err(PipelineError::Precondition(
                    "the legacy MLCP strategy requires a square map (m = n)".to_string(),
                ));
            }
            let Some(legacy) = build_root_mlcp_legacy(anf) else {
                return Err(PipelineError::Precondition("J is singular".to_string()));
            };
            let mut outcome = solve_mlcp_enumerate(&legacy.mlcp, opts.enum_limit);
            if outcome.status == SolveStatus::Solved {
                // The MLCP's "x" block holds the nonnegative split part u.
                let u = outcome.x.take().expect("solved");
                let w = outcome.w.clone().expect("solved");
                outcome.x = Some(legacy.recovery.recover_x(&u, &w));
                outcome = checked_root(anf, outcome, opts.root_tol);
            }
            Ok(report(anf, "legacy-mlcp", flags, outcome, start))
        }
        RootStrategy::LegacyLcp => {
            if !square {
                return Err(PipelineError::Precondition(
                    "the legacy LCP strategy requires a square map (m = n)".to_string(),
                ));
            }
            if flags.j != Some(true) {
                return Err(PipelineError::Precondition("J is singular".to_string()));
            }
            let Some(legacy) = build_root_lcp_legacy(anf) else {
                return Err(PipelineError::Precondition("(I - S) is singular".to_string()));
            };
            flags.i_minus_s = Some(true);
            let mut outcome = solve_lcp_with_fallback(&legacy.lcp, opts);
            if outcome.status == SolveStatus::Solved {
                let w = outcome.w.clone().expect("solved");
                let u = legacy.lcp.slack(&w);
                outcome.x = Some(legacy.recovery.recover_x(&u, &w));
                outcome = checked_root(anf, outcome, opts.root_tol);
            }
            Ok(report(anf, "legacy-lcp", flags, outcome, start))
        }
    }
}

fn solve_root_mlcp_route(anf: &AbsNormalForm, opts: &PipelineOptions) -> SolveOutcome {
    let mlcp = build_root_mlcp(anf);
    let outcome = solve_mlcp_enumerate(&mlcp, opts.enum_limit);
    checked_root(anf, outcome, opts.root_tol)
}

/// Lemke first; on ray termination or a pivot limit, decide completely by
/// enumeration.
fn solve_lcp_with_fallback(
    lcp: &crate::formulations::LcpProblem,
    opts: &PipelineOptions,
) -> SolveOutcome {
    let lemke = solve_lcp_lemke(lcp, opts.lemke_pivot_limit);
    match lemke.status {
        SolveStatus::Solved => lemke,
        _ => {
            let mut enumerated = solve_lcp_enumerate(lcp, opts.enum_limit);
            if let (Some(prior), Some(cert)) = (&lemke.certificate, &mut enumerated.certificate) {
                *cert = format!("lemke: {prior}; enumeration: {cert}");
            }
            enumerated
        }
    }
}

fn solve_root_lcp(
    anf: &AbsNormalForm,
    root: &crate::formulations::RootLcp,
    opts: &PipelineOptions,
) -> SolveOutcome {
    let mut outcome = solve_lcp_with_fallback(&root.lcp, opts);
    if outcome.status == SolveStatus::Solved {
        let w = outcome.w.clone().expect("solved");
        outcome.x = Some(root.recovery.recover_x(&w));
        outcome = checked_root(anf, outcome, opts.root_tol);
        if outcome.status != SolveStatus::Solved {
            // A Lemke point that fails verification is retried completely.
            let mut retry = solve_lcp_enumerate(&root.lcp, opts.enum_limit);
            if retry.status == SolveStatus::Solved {
                let w = retry.w.clone().expect("solved");
                retry.x = Some(root.recovery.recover_x(&w));
                retry = checked_root(anf, retry, opts.root_tol);
            }
            return retry;
        }
    }
    outcome
}

/// Certify whether the (scalar-valued) form attains a global minimum by
/// completely enumerating the existence system of its horizon form. A hit
/// enumeration limit yields `Indeterminate`, never a guessed boolean.
pub fn existence_of_minimum(
    anf: &AbsNormalForm,
    opts: &PipelineOptions,
) -> Result<ExistenceCertificate, PipelineError> {
    if anf.output_dim() != 1 {
        return Err(PipelineError::Precondition(
            "existence certification requires a scalar-valued map (m = 1)".to_string(),
        ));
    }
    let mlcp = build_existence_mlcp(anf);
    let outcome = solve_mlcp_enumerate(&mlcp, opts.enum_limit);
    let status = match outcome.status {
        SolveStatus::NoSolutionProved => ExistenceStatus::MinimumExists,
        SolveStatus::Solved => ExistenceStatus::NoMinimum,
        _ => ExistenceStatus::Indeterminate,
    };
    Ok(ExistenceCertificate { status, outcome })
}

/// Globally minimize a scalar-valued form.
///
/// With `check_existence`, the horizon certificate runs first: if no
/// minimum exists the report carries an `Unbounded` outcome with the
/// witness direction and the optimizer is skipped. The returned objective
/// is verified against direct evaluation at the minimizer.
pub fn minimize_pipeline(
    anf: &AbsNormalForm,
    method: MinimizeMethod,
    check_existence: bool,
    opts: &PipelineOptions,
) -> Result<PipelineReport, PipelineError> {
    if anf.output_dim() != 1 {
        return Err(PipelineError::Precondition(
            "minimization requires a scalar-valued map (m = 1)".to_string(),
        ));
    }
    let start = Instant::now();
    let mut existence = None;

    if check_existence {
        let cert = existence_of_minimum(anf, opts)?;
        existence = Some(cert.status);
        match cert.status {
            ExistenceStatus::MinimumExists => {}
            ExistenceStatus::NoMinimum => {
                let witness = cert
                    .outcome
                    .x
                    .as_ref()
                    .map(|xi| format!("{:?}", xi.as_slice()))
                    .unwrap_or_default();
                let outcome = SolveOutcome {
                    status: SolveStatus::Unbounded,
                    x: cert.outcome.x,
                    w: cert.outcome.w,
                    y: None,
                    objective: None,
                    certificate: Some(format!(
                        "no global minimum: the existence system is solvable at direction {witness}"
                    )),
                };
                let mut rep = report(anf, "existence-mlcp", NonsingularityFlags::default(), outcome, start);
                rep.residuals.clear();
                rep.existence = existence;
                return Ok(rep);
            }
            ExistenceStatus::Indeterminate => {
                let mut rep = report(
                    anf,
                    "existence-mlcp",
                    NonsingularityFlags::default(),
                    cert.outcome,
                    start,
                );
                rep.existence = existence;
                return Ok(rep);
            }
        }
    }

    let lpcc = build_min_lpcc(anf);
    let (chosen, mut outcome) = match method {
        MinimizeMethod::Lpcc => ("lpcc", solve_lpcc_enumerate(&lpcc, opts.enum_limit)),
        MinimizeMethod::Milp => {
            let milp = build_min_milp(lpcc, opts.mu);
            ("milp", solve_milp_bb(&milp, opts.milp_node_limit))
        }
    };

    let mut residuals = BTreeMap::new();
    if outcome.status == SolveStatus::Solved {
        let x = outcome.x.as_ref().expect("solved");
        let fx = anf.evaluate(x)[0];
        let obj = outcome.objective.expect("solved");
        let gap = (fx - obj).abs();
        residuals.insert("objective_vs_eval".to_string(), gap);
        residuals.insert("f_at_minimizer".to_string(), fx);
        if gap > 1e-7 {
            outcome.status = SolveStatus::LimitReached;
            outcome.certificate = Some(format!(
                "objective {obj:.9e} disagrees with the evaluated value {fx:.9e}"
            ));
        }
    }

    Ok(PipelineReport {
        chosen_formulation: chosen.to_string(),
        flags: NonsingularityFlags::default(),
        outcome,
        residuals,
        wall_time: start.elapsed(),
        existence,
    })
}
