//! Constructors translating an abs-normal form into complementarity and
//! optimization problems.
//!
//! All builders are pure: they read the form, derive the auxiliary
//! quantities, and assemble constant data for the solvers. Builders whose
//! derivation needs a nonsingular matrix return `None` when that matrix is
//! singular, so callers can fall back to a less demanding formulation.
//!
//! The central construction is the root system: `f(x) = 0` holds if and
//! only if some `w >= 0` makes `(x, w)` solve
//!
//! ```text
//! 0 = b~ + J~ x + Y~ w
//! 0 <= w  perp  c~ + Z~ x + L~ w >= 0
//! ```
//!
//! which needs no shape or regularity assumptions at all. When `m = n` and
//! `J~` is nonsingular the equality block can be eliminated, leaving the
//! plain LCP in the reduced data, plus a linear solve to recover `x`.

use crate::anf::{AbsNormalForm, AuxiliaryQuantities};
use crate::linalg::{LuFactorization, Matrix, Vector};

/// Default big-M bound for [`build_min_milp`].
pub const DEFAULT_BIG_M: f64 = 1e5;

/// Linear complementarity problem `0 <= w  perp  q + M w >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LcpProblem {
    pub m: Matrix,
    pub q: Vector,
}

impl LcpProblem {
    pub fn dim(&self) -> usize {
        self.q.len()
    }

    /// The complementary slack `q + M w`.
    pub fn slack(&self, w: &Vector) -> Vector {
        self.q.add(&self.m.mul_vec(w))
    }
}

/// Mixed linear complementarity problem in variables `(x, w)`:
///
/// ```text
/// 0 = eq_const + eq_x x + eq_w w
/// 0 <= w  perp  comp_const + comp_x x + comp_w w >= 0
/// ```
///
/// `x` is free and has length `n_x`; `w` has length `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct MlcpProblem {
    pub eq_const: Vector,
    pub eq_x: Matrix,
    pub eq_w: Matrix,
    pub comp_const: Vector,
    pub comp_x: Matrix,
    pub comp_w: Matrix,
    pub n_x: usize,
}

impl MlcpProblem {
    pub fn comp_dim(&self) -> usize {
        self.comp_const.len()
    }

    pub fn eq_residual(&self, x: &Vector, w: &Vector) -> Vector {
        self.eq_const.add(&self.eq_x.mul_vec(x)).add(&self.eq_w.mul_vec(w))
    }

    pub fn comp_value(&self, x: &Vector, w: &Vector) -> Vector {
        self.comp_const.add(&self.comp_x.mul_vec(x)).add(&self.comp_w.mul_vec(w))
    }
}

/// Linear program with complementarity constraints:
///
/// ```text
/// min  obj_const + obj_x' x + obj_w' w
/// s.t. 0 <= w  perp  comp_const + comp_x x + comp_w w >= 0
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct LpccProblem {
    pub obj_const: f64,
    pub obj_x: Vector,
    pub obj_w: Vector,
    pub comp_const: Vector,
    pub comp_x: Matrix,
    pub comp_w: Matrix,
}

impl LpccProblem {
    pub fn comp_dim(&self) -> usize {
        self.comp_const.len()
    }

    pub fn n_x(&self) -> usize {
        self.obj_x.len()
    }

    pub fn objective(&self, x: &Vector, w: &Vector) -> f64 {
        self.obj_const + self.obj_x.dot(x) + self.obj_w.dot(w)
    }

    pub fn comp_value(&self, x: &Vector, w: &Vector) -> Vector {
        self.comp_const.add(&self.comp_x.mul_vec(x)).add(&self.comp_w.mul_vec(w))
    }
}

/// Big-M binary reformulation of an [`LpccProblem`]:
///
/// ```text
/// min  obj
/// s.t. 0 <= w <= mu y
///      0 <= comp_const + comp_x x + comp_w w <= mu (e - y)
///      y in {0,1}^s
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct MilpProblem {
    pub lpcc: LpccProblem,
    pub mu: f64,
}

/// Recovery data for LCP-based root finding: once `w` solves the LCP, the
/// root is the solution of `J~ x = -b~ - Y~ w`.
#[derive(Debug, Clone)]
pub struct RootRecovery {
    j_tilde: LuFactorization,
    b_tilde: Vector,
    y_tilde: Matrix,
}

impl RootRecovery {
    pub fn recover_x(&self, w: &Vector) -> Vector {
        let rhs = self.b_tilde.add(&self.y_tilde.mul_vec(w)).neg();
        self.j_tilde.solve_vec(&rhs).expect("factorization checked nonsingular at build time")
    }
}

/// LCP root formulation plus its recovery data.
#[derive(Debug, Clone)]
pub struct RootLcp {
    pub lcp: LcpProblem,
    pub recovery: RootRecovery,
}

/// Recovery data for the legacy formulations: `x = -J^-1 (b + Y (u + w))`.
#[derive(Debug, Clone)]
pub struct LegacyRecovery {
    j: LuFactorization,
    b: Vector,
    y: Matrix,
}

impl LegacyRecovery {
    pub fn recover_x(&self, u: &Vector, w: &Vector) -> Vector {
        let rhs = self.b.add(&self.y.mul_vec(&u.add(w))).neg();
        self.j.solve_vec(&rhs).expect("factorization checked nonsingular at build time")
    }
}

/// Legacy MLCP in the split variables `(u, w)`; `u` rides in the MLCP's
/// `x` slot, with its nonnegativity enforced by the complementarity block.
#[derive(Debug, Clone)]
pub struct LegacyRootMlcp {
    pub mlcp: MlcpProblem,
    pub recovery: LegacyRecovery,
}

/// Legacy LCP plus recovery: `u = q + M w`, then `x` from both parts.
#[derive(Debug, Clone)]
pub struct LegacyRootLcp {
    pub lcp: LcpProblem,
    pub recovery: LegacyRecovery,
}

/// Root-finding MLCP. Works for any `m`, `n`, and any coefficient ranks;
/// solutions `(x, w)` are exactly the roots of the form, paired with
/// `w = max(0, -z(x))`.
pub fn build_root_mlcp(anf: &AbsNormalForm) -> MlcpProblem {
    let aux = anf.auxiliary();
    build_root_mlcp_from_aux(anf.input_dim(), &aux)
}

fn build_root_mlcp_from_aux(n_x: usize, aux: &AuxiliaryQuantities) -> MlcpProblem {
    MlcpProblem {
        eq_const: aux.b_tilde.clone(),
        eq_x: aux.j_tilde.clone(),
        eq_w: aux.y_tilde.clone(),
        comp_const: aux.c_tilde.clone(),
        comp_x: aux.z_tilde.clone(),
        comp_w: aux.l_tilde.clone(),
        n_x,
    }
}

/// Root-finding LCP in the reduced data, defined when `J~` is nonsingular;
/// returns `None` otherwise. Panics if `m != n`.
pub fn build_root_lcp(anf: &AbsNormalForm) -> Option<RootLcp> {
    assert_eq!(
        anf.output_dim(),
        anf.input_dim(),
        "the LCP root formulation requires a square map (m = n)"
    );
    let aux = anf.auxiliary();
    let fact = aux.j_tilde.lu().expect("J~ square when m = n");
    if fact.is_singular() {
        return None;
    }
    let reduced = anf.reduced(&aux).expect("J~ nonsingular");
    Some(RootLcp {
        lcp: LcpProblem { m: reduced.s, q: reduced.c },
        recovery: RootRecovery { j_tilde: fact, b_tilde: aux.b_tilde, y_tilde: aux.y_tilde },
    })
}

/// Legacy root MLCP `u - w = c^ + S (u + w)`, `0 <= u perp w >= 0`, with
/// `S = L - Z J^-1 Y` and `c^ = c - Z J^-1 b`. Requires `J` nonsingular;
/// returns `None` otherwise. Panics if `m != n`.
///
/// Encoding: `u` occupies the MLCP `x` block, the equality block is
/// `0 = -c^ + (I - S) u - (I + S) w`, and the complementarity block reads
/// `0 <= w perp u >= 0`.
pub fn build_root_mlcp_legacy(anf: &AbsNormalForm) -> Option<LegacyRootMlcp> {
    assert_eq!(
        anf.output_dim(),
        anf.input_dim(),
        "the legacy formulations require a square map (m = n)"
    );
    let fact = anf.j_mat().lu().expect("J square when m = n");
    if fact.is_singular() {
        return None;
    }
    let s_dim = anf.switching_dim();
    let j_inv_y = fact.solve_mat(anf.y_mat()).expect("nonsingular");
    let j_inv_b = fact.solve_vec(anf.b()).expect("nonsingular");
    let s_mat = anf.l_mat().sub(&anf.z_mat().mul_mat(&j_inv_y));
    let c_hat = anf.c().sub(&anf.z_mat().mul_vec(&j_inv_b));

    let eye = Matrix::identity(s_dim);
    let mlcp = MlcpProblem {
        eq_const: c_hat.neg(),
        eq_x: eye.sub(&s_mat),
        eq_w: eye.add(&s_mat).scale(-1.0),
        comp_const: Vector::zeros(s_dim),
        comp_x: eye.clone(),
        comp_w: Matrix::zeros(s_dim, s_dim),
        n_x: s_dim,
    };
    Some(LegacyRootMlcp {
        mlcp,
        recovery: LegacyRecovery { j: fact, b: anf.b().clone(), y: anf.y_mat().clone() },
    })
}

/// Legacy root LCP `0 <= w perp (I-S)^-1 c^ + (I-S)^-1 (I+S) w >= 0`.
/// Requires both `J` and `I - S` nonsingular; returns `None` otherwise.
/// Panics if `m != n`. The split variable is recovered as `u = q + M w`.
pub fn build_root_lcp_legacy(anf: &AbsNormalForm) -> Option<LegacyRootLcp> {
    assert_eq!(
        anf.output_dim(),
        anf.input_dim(),
        "the legacy formulations require a square map (m = n)"
    );
    let fact = anf.j_mat().lu().expect("J square when m = n");
    if fact.is_singular() {
        return None;
    }
    let s_dim = anf.switching_dim();
    let j_inv_y = fact.solve_mat(anf.y_mat()).expect("nonsingular");
    let j_inv_b = fact.solve_vec(anf.b()).expect("nonsingular");
    let s_mat = anf.l_mat().sub(&anf.z_mat().mul_mat(&j_inv_y));
    let c_hat = anf.c().sub(&anf.z_mat().mul_vec(&j_inv_b));

    let eye = Matrix::identity(s_dim);
    let i_minus_s = eye.sub(&s_mat);
    let ims_fact = i_minus_s.lu().expect("square");
    if ims_fact.is_singular() {
        return None;
    }
    let m = ims_fact.solve_mat(&eye.add(&s_mat)).expect("nonsingular");
    let q = ims_fact.solve_vec(&c_hat).expect("nonsingular");
    Some(LegacyRootLcp {
        lcp: LcpProblem { m, q },
        recovery: LegacyRecovery { j: fact, b: anf.b().clone(), y: anf.y_mat().clone() },
    })
}

/// Minimization LPCC: the objective is the function value written in the
/// auxiliary quantities, constrained by the root system's complementarity
/// block. Panics if `m != 1`.
pub fn build_min_lpcc(anf: &AbsNormalForm) -> LpccProblem {
    assert_eq!(anf.output_dim(), 1, "minimization requires a scalar-valued map (m = 1)");
    let aux = anf.auxiliary();
    LpccProblem {
        obj_const: aux.b_tilde[0],
        obj_x: Vector::from_slice(aux.j_tilde.row(0)),
        obj_w: Vector::from_slice(aux.y_tilde.row(0)),
        comp_const: aux.c_tilde,
        comp_x: aux.z_tilde,
        comp_w: aux.l_tilde,
    }
}

/// Big-M reformulation of an LPCC. `mu` must be positive and must bound
/// both `w` and the complementary slack at some optimal point for the
/// reformulation to be exact.
pub fn build_min_milp(lpcc: LpccProblem, mu: f64) -> MilpProblem {
    assert!(mu > 0.0, "big-M bound must be positive");
    MilpProblem { lpcc, mu }
}

/// Existence-of-minimum MLCP. The function (with `m = 1`) has a global
/// minimum iff this system has no solution:
///
/// ```text
/// 0 = 1 + J~ xi + Y~ omega
/// 0 <= omega  perp  Z~ xi + L~ omega >= 0
/// ```
///
/// It is the root system of the horizon form with the output level pinned
/// to `-1`; the complementarity constant is exactly zero. Panics if
/// `m != 1`.
pub fn build_existence_mlcp(anf: &AbsNormalForm) -> MlcpProblem {
    assert_eq!(anf.output_dim(), 1, "existence certification requires m = 1");
    let horizon = anf.horizon();
    let aux = horizon.auxiliary();
    let mut mlcp = build_root_mlcp_from_aux(anf.input_dim(), &aux);
    mlcp.eq_const = Vector::ones(1);
    mlcp
}

/// Simplified root MLCP for simply switched forms (`L = 0`):
///
/// ```text
/// 0 = (b + Y c) + (J + Y Z) x + 2 Y w
/// 0 <= w  perp  c + Z x + w >= 0
/// ```
///
/// Returns `None` when `L != 0`. Panics if `m != n`.
pub fn build_simply_switched_mlcp(anf: &AbsNormalForm) -> Option<MlcpProblem> {
    assert_eq!(
        anf.output_dim(),
        anf.input_dim(),
        "the simply switched formulation requires a square map (m = n)"
    );
    if !anf.is_simply_switched() {
        return None;
    }
    let s = anf.switching_dim();
    Some(MlcpProblem {
        eq_const: anf.b().add(&anf.y_mat().mul_vec(anf.c())),
        eq_x: anf.j_mat().add(&anf.y_mat().mul_mat(anf.z_mat())),
        eq_w: anf.y_mat().scale(2.0),
        comp_const: anf.c().clone(),
        comp_x: anf.z_mat().clone(),
        comp_w: Matrix::identity(s),
        n_x: anf.input_dim(),
    })
}
