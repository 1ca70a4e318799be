//! The abs-normal form of a piecewise-affine function.
//!
//! A continuous piecewise-affine map `f: R^n -> R^m` is encoded by two
//! vectors and four matrices `(c, b, Z, L, J, Y)`, with `L` strictly lower
//! triangular, through the switching system
//!
//! ```text
//! z    = c + Z x + L |z|
//! f(x) = b + J x + Y |z|
//! ```
//!
//! where `|z|` is the componentwise absolute value. Strict lower
//! triangularity of `L` makes `z` unique and computable by one forward
//! sweep: row `i` only refers to `|z_j|` with `j < i`. The sign pattern of
//! `z` selects the active affine piece of `f`.
//!
//! This module provides the encoding itself, evaluation, the auxiliary
//! quantities that drive every complementarity formulation in
//! [`crate::formulations`], the horizon form used for minimum-existence
//! certification, and the random instance generators used by the benchmark
//! harness.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{unit_lower_solve, unit_lower_solve_mat, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnfError {
    /// Field dimensions are inconsistent with (n, m, s).
    Shape { field: &'static str, detail: String },
    /// `L` has a nonzero entry on or above the diagonal.
    NotStrictlyLowerTriangular { row: usize, col: usize },
    /// A coefficient is NaN or infinite.
    NonFinite { field: &'static str },
}

impl fmt::Display for AnfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnfError::Shape { field, detail } => write!(f, "bad shape for {field}: {detail}"),
            AnfError::NotStrictlyLowerTriangular { row, col } => {
                write!(f, "L must be strictly lower triangular, entry ({row},{col}) is nonzero")
            }
            AnfError::NonFinite { field } => write!(f, "{field} contains a non-finite entry"),
        }
    }
}

impl std::error::Error for AnfError {}

/// The `(c, b, Z, L, J, Y)` encoding of a piecewise-affine map.
///
/// Immutable after construction; all invariants (consistent dimensions,
/// strictly lower triangular `L`, finite entries) are validated by
/// [`AbsNormalForm::new`].
#[derive(Debug, Clone, PartialEq)]
pub struct AbsNormalForm {
    c: Vector,
    b: Vector,
    z: Matrix,
    l: Matrix,
    j: Matrix,
    y: Matrix,
}

impl AbsNormalForm {
    /// Validate and build a form. `c` has length `s`, `b` length `m`,
    /// `Z` is `s x n`, `L` is `s x s`, `J` is `m x n`, and `Y` is `m x s`.
    pub fn new(
        c: Vector,
        b: Vector,
        z: Matrix,
        l: Matrix,
        j: Matrix,
        y: Matrix,
    ) -> Result<Self, AnfError> {
        let s = c.len();
        let m = b.len();
        let n = z.cols();

        if z.rows() != s {
            return Err(AnfError::Shape {
                field: "Z",
                detail: format!("expected {s} rows, got {}", z.rows()),
            });
        }
        if l.rows() != s || l.cols() != s {
            return Err(AnfError::Shape {
                field: "L",
                detail: format!("expected {s}x{s}, got {}x{}", l.rows(), l.cols()),
            });
        }
        if j.rows() != m || j.cols() != n {
            return Err(AnfError::Shape {
                field: "J",
                detail: format!("expected {m}x{n}, got {}x{}", j.rows(), j.cols()),
            });
        }
        if y.rows() != m || y.cols() != s {
            return Err(AnfError::Shape {
                field: "Y",
                detail: format!("expected {m}x{s}, got {}x{}", y.rows(), y.cols()),
            });
        }
        for i in 0..s {
            for jcol in i..s {
                if l.get(i, jcol) != 0.0 {
                    return Err(AnfError::NotStrictlyLowerTriangular { row: i, col: jcol });
                }
            }
        }
        for (field, ok) in [
            ("c", c.is_finite()),
            ("b", b.is_finite()),
            ("Z", z.is_finite()),
            ("L", l.is_finite()),
            ("J", j.is_finite()),
            ("Y", y.is_finite()),
        ] {
            if !ok {
                return Err(AnfError::NonFinite { field });
            }
        }

        Ok(AbsNormalForm { c, b, z, l, j, y })
    }

    /// Input dimension `n`.
    pub fn input_dim(&self) -> usize {
        self.z.cols()
    }

    /// Output dimension `m`.
    pub fn output_dim(&self) -> usize {
        self.b.len()
    }

    /// Switching dimension `s` (number of absolute-value terms); `s = 0`
    /// means `f` is affine.
    pub fn switching_dim(&self) -> usize {
        self.c.len()
    }

    pub fn c(&self) -> &Vector {
        &self.c
    }

    pub fn b(&self) -> &Vector {
        &self.b
    }

    pub fn z_mat(&self) -> &Matrix {
        &self.z
    }

    pub fn l_mat(&self) -> &Matrix {
        &self.l
    }

    pub fn j_mat(&self) -> &Matrix {
        &self.j
    }

    pub fn y_mat(&self) -> &Matrix {
        &self.y
    }

    /// The unique switching vector `z` with
    /// `z_i = c_i + (Z x)_i + sum_{j<i} L_ij |z_j|`, by one forward sweep.
    ///
    /// Panics if `x` does not have length `n`.
    pub fn switching_vector(&self, x: &Vector) -> Vector {
        assert_eq!(x.len(), self.input_dim(), "input length must equal n");
        let s = self.switching_dim();
        let zx = self.z.mul_vec(x);
        let mut out = Vector::zeros(s);
        for i in 0..s {
            let mut v = self.c[i] + zx[i];
            for j in 0..i {
                v += self.l.get(i, j) * out[j].abs();
            }
            out[i] = v;
        }
        out
    }

    /// Evaluate `f(x) = b + J x + Y |z|`.
    pub fn evaluate(&self, x: &Vector) -> Vector {
        let z = self.switching_vector(x);
        self.b.add(&self.j.mul_vec(x)).add(&self.y.mul_vec(&z.abs()))
    }

    /// Split the switching vector at `x` into its nonnegative and
    /// nonpositive parts.
    pub fn sign_decomposition(&self, x: &Vector) -> SignDecomposition {
        SignDecomposition::from_switching(self.switching_vector(x))
    }

    /// The auxiliary quantities derived from the form:
    ///
    /// ```text
    /// c~ = (I-L)^-1 c      b~ = b + Y c~
    /// L~ = (I-L)^-1 (I+L)  Y~ = Y (I + L~)
    /// Z~ = (I-L)^-1 Z      J~ = J + Y Z~
    /// ```
    ///
    /// All `(I-L)^-1` applications use forward substitution; the inverse is
    /// never formed.
    pub fn auxiliary(&self) -> AuxiliaryQuantities {
        let s = self.switching_dim();
        let expect_msg = "L is strictly lower triangular by construction";

        let c_tilde = unit_lower_solve(&self.l, &self.c).expect(expect_msg);
        let i_plus_l = Matrix::identity(s).add(&self.l);
        let l_tilde = unit_lower_solve_mat(&self.l, &i_plus_l).expect(expect_msg);
        let z_tilde = unit_lower_solve_mat(&self.l, &self.z).expect(expect_msg);
        let b_tilde = self.b.add(&self.y.mul_vec(&c_tilde));
        let y_tilde = self.y.mul_mat(&Matrix::identity(s).add(&l_tilde));
        let j_tilde = self.j.add(&self.y.mul_mat(&z_tilde));

        AuxiliaryQuantities { c_tilde, b_tilde, l_tilde, z_tilde, y_tilde, j_tilde }
    }

    /// Reduced data `(c_check, S_check)`, defined when `m = n` and the
    /// auxiliary matrix `J~` is nonsingular:
    ///
    /// ```text
    /// c_check = c~ - Z~ J~^-1 b~
    /// S_check = L~ - Z~ J~^-1 Y~
    /// ```
    ///
    /// Returns `None` when `J~` is singular. Panics if `m != n`.
    pub fn reduced(&self, aux: &AuxiliaryQuantities) -> Option<ReducedData> {
        assert_eq!(
            self.output_dim(),
            self.input_dim(),
            "reduced data requires a square map (m = n)"
        );
        let fact = aux.j_tilde.lu().expect("J~ is square when m = n");
        if fact.is_singular() {
            return None;
        }
        let jb = fact.solve_vec(&aux.b_tilde).expect("nonsingular");
        let jy = fact.solve_mat(&aux.y_tilde).expect("nonsingular");
        let c = aux.c_tilde.sub(&aux.z_tilde.mul_vec(&jb));
        let s = aux.l_tilde.sub(&aux.z_tilde.mul_mat(&jy));
        Some(ReducedData { c, s })
    }

    /// The horizon form: `c` and `b` zeroed, coefficient matrices kept.
    /// Evaluating it gives the horizon function `f_inf`, the positively
    /// homogeneous map describing `f` far from the origin.
    pub fn horizon(&self) -> AbsNormalForm {
        AbsNormalForm {
            c: Vector::zeros(self.switching_dim()),
            b: Vector::zeros(self.output_dim()),
            z: self.z.clone(),
            l: self.l.clone(),
            j: self.j.clone(),
            y: self.y.clone(),
        }
    }

    /// True iff `L = 0` exactly (no switching variable feeds another).
    pub fn is_simply_switched(&self) -> bool {
        self.l.is_zero()
    }
}

/// The tilde quantities derived from an [`AbsNormalForm`]; see
/// [`AbsNormalForm::auxiliary`]. `l_tilde` is unit lower triangular.
#[derive(Debug, Clone, PartialEq)]
pub struct AuxiliaryQuantities {
    pub c_tilde: Vector,
    pub b_tilde: Vector,
    pub l_tilde: Matrix,
    pub z_tilde: Matrix,
    pub y_tilde: Matrix,
    pub j_tilde: Matrix,
}

/// Constant vector and coefficient matrix of the reduced complementarity
/// system; these become the `q` and `M` of the derived LCP.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedData {
    pub c: Vector,
    pub s: Matrix,
}

/// A switching vector split into nonnegative and nonpositive parts:
/// `u = max(0, z)`, `w = max(0, -z)`, so `u - w = z`, `u + w = |z|`, and
/// `u' w = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignDecomposition {
    pub z: Vector,
    pub u: Vector,
    pub w: Vector,
}

impl SignDecomposition {
    pub fn from_switching(z: Vector) -> Self {
        let u = z.max_zero();
        let w = z.neg().max_zero();
        SignDecomposition { z, u, w }
    }
}

/// Preset selecting the coefficient layout of [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomPreset {
    /// `J = I`, `Z = 0`; `c`, `b`, `Y` standard normal rounded to the
    /// nearest integer; `L` has ones on the first lower subdiagonal.
    IdentityJacobian,
    /// Same construction as `IdentityJacobian`. Kept as a distinct label
    /// for benchmark runs that also exercise the legacy formulations,
    /// which need `J` nonsingular.
    LegacyComparison,
}

/// Deterministic random square instance (`m = s = n`) for scaling studies.
///
/// Entries of `c`, `b`, and `Y` are standard-normal draws rounded to the
/// nearest integer; `J` is the identity, `Z` is zero, and `L` carries ones
/// on the first lower subdiagonal. The same `(n, seed, preset)` always
/// produces the same form. Panics if `n < 1`.
pub fn random_instance(n: usize, seed: u64, preset: RandomPreset) -> AbsNormalForm {
    assert!(n >= 1, "instance dimension must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal_int = |rng: &mut ChaCha8Rng| -> f64 {
        let v: f64 = rng.sample(StandardNormal);
        let r = v.round();
        // Avoid -0.0 in generated documents.
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };

    let c = Vector::from_fn(n, |_| normal_int(&mut rng));
    let b = Vector::from_fn(n, |_| normal_int(&mut rng));
    let y = Matrix::from_fn(n, n, |_, _| normal_int(&mut rng));
    let l = Matrix::from_fn(n, n, |i, j| if i == j + 1 { 1.0 } else { 0.0 });
    let (z, j) = match preset {
        RandomPreset::IdentityJacobian | RandomPreset::LegacyComparison => {
            (Matrix::zeros(n, n), Matrix::identity(n))
        }
    };

    AbsNormalForm::new(c, b, z, l, j, y).expect("generated instance is well-formed")
}

/// The nested-absolute-value scalar instance
/// `f(x) = ||...||1000 x_1| + 1000 x_2| + ...| + 1000 x_n| + 1`,
/// with one switching variable per input dimension. Encoded with `c = 0`,
/// `b = (1)`, `Z = 1000 I`, subdiagonal-ones `L`, `J = 0`, and `Y = e_n'`.
/// Panics if `n < 1`.
pub fn nested_abs_instance(n: usize) -> AbsNormalForm {
    assert!(n >= 1, "instance dimension must be at least 1");
    let c = Vector::zeros(n);
    let b = Vector::from_slice(&[1.0]);
    let z = Matrix::identity(n).scale(1000.0);
    let l = Matrix::from_fn(n, n, |i, j| if i == j + 1 { 1.0 } else { 0.0 });
    let j = Matrix::zeros(1, n);
    let y = Matrix::from_fn(1, n, |_, col| if col == n - 1 { 1.0 } else { 0.0 });
    AbsNormalForm::new(c, b, z, l, j, y).expect("nested instance is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn switching_sweep_reproduces_hand_values() {
        let f = instances::nested_kink_scalar();
        let z = f.switching_vector(&Vector::from_slice(&[0.0]));
        assert_eq!(z.as_slice(), &[4.0, 3.0, -8.0]);
    }

    #[test]
    fn switching_sweep_two_dim_system() {
        let f = instances::two_dim_root_system();
        let z = f.switching_vector(&Vector::from_slice(&[0.0, -0.5]));
        assert_eq!(z.as_slice(), &[2.0, 0.5]);
    }

    #[test]
    fn affine_form_has_empty_switching_vector() {
        let f = instances::affine_square(
            Matrix::from_rows(&[&[2.0, 0.0], &[0.0, 3.0]]),
            Vector::from_slice(&[1.0, -1.0]),
        );
        assert!(f.switching_vector(&Vector::from_slice(&[5.0, 5.0])).is_empty());
        let fx = f.evaluate(&Vector::from_slice(&[1.0, 1.0]));
        assert_eq!(fx.as_slice(), &[3.0, 2.0]);
    }

    #[test]
    fn evaluation_matches_hand_computation() {
        let f = instances::nested_kink_scalar();
        let fx = f.evaluate(&Vector::from_slice(&[0.0]));
        assert_eq!(fx.as_slice(), &[51.0]);

        let g = instances::two_dim_root_system();
        let gx = g.evaluate(&Vector::from_slice(&[0.0, -0.5]));
        assert!(gx.inf_norm() < 1e-15);

        let h = instances::abs_objective_3d();
        let hx = h.evaluate(&Vector::from_slice(&[0.0, 0.5, -3.0]));
        assert!(hx.inf_norm() < 1e-15);
    }

    #[test]
    fn auxiliary_quantities_for_the_scalar_chain() {
        let aux = instances::nested_kink_scalar().auxiliary();
        assert_eq!(aux.c_tilde.as_slice(), &[4.0, 3.0, -8.0]);
        assert_eq!(aux.b_tilde.as_slice(), &[-45.0]);
        assert_eq!(aux.z_tilde, Matrix::from_rows(&[&[3.0], &[6.0], &[7.0]]));
        assert_eq!(
            aux.l_tilde,
            Matrix::from_rows(&[&[1.0, 0.0, 0.0], &[4.0, 1.0, 0.0], &[0.0, 0.0, 1.0]])
        );
        assert_eq!(aux.y_tilde, Matrix::from_rows(&[&[4.0, 2.0, 12.0]]));
        assert_eq!(aux.j_tilde, Matrix::from_rows(&[&[49.0]]));
    }

    #[test]
    fn auxiliary_quantities_for_the_two_dim_system() {
        let aux = instances::two_dim_root_system().auxiliary();
        assert_eq!(aux.c_tilde.as_slice(), &[2.0, 1.0]);
        assert_eq!(aux.b_tilde.as_slice(), &[0.0, 1.0]);
        assert_eq!(aux.z_tilde, Matrix::from_rows(&[&[1.0, 0.0], &[1.0, 1.0]]));
        assert_eq!(aux.l_tilde, Matrix::from_rows(&[&[1.0, 0.0], &[2.0, 1.0]]));
        assert_eq!(aux.y_tilde, Matrix::from_rows(&[&[2.0, 2.0], &[2.0, 0.0]]));
        assert_eq!(aux.j_tilde, Matrix::from_rows(&[&[1.0, 0.0], &[1.0, 2.0]]));
    }

    #[test]
    fn simply_switched_auxiliaries_collapse() {
        // With L = 0: c~ = c, L~ = I, Z~ = Z, Y~ = 2Y, J~ = J + YZ, b~ = b + Yc.
        let c = Vector::from_slice(&[1.0, -2.0]);
        let b = Vector::from_slice(&[3.0, 4.0]);
        let z = Matrix::from_rows(&[&[1.0, 2.0], &[0.0, 1.0]]);
        let l = Matrix::zeros(2, 2);
        let j = Matrix::identity(2);
        let y = Matrix::from_rows(&[&[1.0, 1.0], &[2.0, -1.0]]);
        let f = AbsNormalForm::new(c.clone(), b.clone(), z.clone(), l, j.clone(), y.clone())
            .unwrap();
        assert!(f.is_simply_switched());
        let aux = f.auxiliary();
        assert_eq!(aux.c_tilde, c);
        assert_eq!(aux.l_tilde, Matrix::identity(2));
        assert_eq!(aux.z_tilde, z);
        assert_eq!(aux.y_tilde, y.scale(2.0));
        assert_eq!(aux.j_tilde, j.add(&y.mul_mat(&z)));
        assert_eq!(aux.b_tilde, b.add(&y.mul_vec(&c)));
    }

    #[test]
    fn reduced_data_for_the_scalar_chain() {
        let f = instances::nested_kink_scalar();
        let red = f.reduced(&f.auxiliary()).expect("J~ = 49 is nonsingular");
        let expect_c = [331.0 / 49.0, 417.0 / 49.0, -77.0 / 49.0];
        for (got, want) in red.c.iter().zip(expect_c) {
            assert!((got - want).abs() < 1e-12);
        }
        let expect_s = [
            [37.0 / 49.0, -6.0 / 49.0, -36.0 / 49.0],
            [172.0 / 49.0, 37.0 / 49.0, -72.0 / 49.0],
            [-28.0 / 49.0, -14.0 / 49.0, -35.0 / 49.0],
        ];
        for (i, row) in expect_s.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                assert!((red.s.get(i, j) - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn reduced_data_for_the_two_dim_system() {
        let f = instances::two_dim_root_system();
        let red = f.reduced(&f.auxiliary()).expect("J~ nonsingular");
        assert!((red.c[0] - 2.0).abs() < 1e-15);
        assert!((red.c[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn reduced_data_absent_when_j_tilde_singular() {
        // J = 0 and Y = 0 make J~ = 0.
        let f = AbsNormalForm::new(
            Vector::from_slice(&[1.0]),
            Vector::from_slice(&[1.0]),
            Matrix::from_rows(&[&[1.0]]),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
        )
        .unwrap();
        assert!(f.reduced(&f.auxiliary()).is_none());
    }

    #[test]
    fn horizon_drops_constants() {
        let f = instances::offset_kink_scalar();
        let h = f.horizon();
        assert!((h.evaluate(&Vector::from_slice(&[1.0]))[0] - 3.0).abs() < 1e-15);
        assert!((h.evaluate(&Vector::from_slice(&[-1.0]))[0] - 1.0).abs() < 1e-15);
        assert_eq!(h.evaluate(&Vector::from_slice(&[0.0]))[0], 0.0);

        let g = instances::nested_kink_scalar().horizon();
        assert!((g.evaluate(&Vector::from_slice(&[1.0]))[0] - 49.0).abs() < 1e-15);
        assert!((g.evaluate(&Vector::from_slice(&[-1.0]))[0] - 47.0).abs() < 1e-15);
    }

    #[test]
    fn simply_switched_detection() {
        assert!(!instances::abs_objective_3d().is_simply_switched());
        assert!(!random_instance(4, 3, RandomPreset::IdentityJacobian).is_simply_switched());
        assert!(instances::abs_scalar().is_simply_switched());
        let affine = instances::affine_square(Matrix::identity(1), Vector::zeros(1));
        assert!(affine.is_simply_switched());
    }

    #[test]
    fn random_instance_structure() {
        let f = random_instance(5, 42, RandomPreset::IdentityJacobian);
        assert_eq!(f.switching_dim(), 5);
        assert_eq!(f.input_dim(), 5);
        assert_eq!(f.output_dim(), 5);
        assert_eq!(*f.j_mat(), Matrix::identity(5));
        assert!(f.z_mat().is_zero());
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j + 1 { 1.0 } else { 0.0 };
                assert_eq!(f.l_mat().get(i, j), expect);
            }
        }
        for v in f.c().iter().chain(f.b().iter()).chain(f.y_mat().data()) {
            assert_eq!(v.fract(), 0.0, "entries are rounded to integers");
        }
    }

    #[test]
    fn random_instance_is_deterministic() {
        let a = random_instance(6, 7, RandomPreset::IdentityJacobian);
        let b = random_instance(6, 7, RandomPreset::IdentityJacobian);
        assert_eq!(a, b);
    }

    #[test]
    fn random_instance_n1_has_zero_l() {
        let f = random_instance(1, 0, RandomPreset::LegacyComparison);
        assert!(f.l_mat().is_zero());
    }

    #[test]
    fn nested_instance_evaluation() {
        let f = nested_abs_instance(2);
        assert_eq!(f.evaluate(&Vector::zeros(2)).as_slice(), &[1.0]);
        assert_eq!(f.evaluate(&Vector::from_slice(&[1.0, 0.0])).as_slice(), &[1001.0]);

        let g = nested_abs_instance(3);
        let z = g.switching_vector(&Vector::from_slice(&[1.0, -1.0, 1.0]));
        assert_eq!(z.as_slice(), &[1000.0, 0.0, 1000.0]);
    }

    #[test]
    fn sign_decomposition_identities() {
        let f = instances::two_dim_root_system();
        let d = f.sign_decomposition(&Vector::from_slice(&[3.0, -7.0]));
        assert_eq!(d.u.sub(&d.w), d.z);
        assert_eq!(d.u.add(&d.w), d.z.abs());
        assert_eq!(d.u.dot(&d.w), 0.0);
        assert!(d.u.min() >= 0.0 && d.w.min() >= 0.0);
    }

    #[test]
    fn constructor_rejects_bad_l() {
        let err = AbsNormalForm::new(
            Vector::zeros(2),
            Vector::zeros(1),
            Matrix::zeros(2, 1),
            Matrix::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 2),
        )
        .unwrap_err();
        assert_eq!(err, AnfError::NotStrictlyLowerTriangular { row: 0, col: 1 });
    }

    #[test]
    fn constructor_rejects_shape_mismatch() {
        let err = AbsNormalForm::new(
            Vector::zeros(2),
            Vector::zeros(1),
            Matrix::zeros(3, 1),
            Matrix::zeros(2, 2),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 2),
        )
        .unwrap_err();
        assert!(matches!(err, AnfError::Shape { field: "Z", .. }));
    }

    #[test]
    fn constructor_rejects_non_finite() {
        let err = AbsNormalForm::new(
            Vector::from_slice(&[f64::NAN]),
            Vector::zeros(1),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
            Matrix::zeros(1, 1),
        )
        .unwrap_err();
        assert_eq!(err, AnfError::NonFinite { field: "c" });
    }
}
