//! A small library of hand-built abs-normal forms.
//!
//! These cover the behaviors the solvers care about: functions with and
//! without roots, with and without global minima, simply switched and
//! nested switching, singular and nonsingular Jacobian blocks. Each
//! constructor documents the function it encodes; the encodings were
//! derived by listing the absolute-value arguments in evaluation order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::anf::AbsNormalForm;
use crate::linalg::{Matrix, Vector};

/// `f(x) = x + |2 |3x + 4| - 5| + 6 |7x - 8|` with switching variables
/// `z1 = 3x + 4`, `z2 = 2|z1| - 5`, `z3 = 7x - 8`.
///
/// `f` has no root: its global minimum is `11`, attained at `x = 8/7`.
pub fn nested_kink_scalar() -> AbsNormalForm {
    AbsNormalForm::new(
        Vector::from_slice(&[4.0, -5.0, -8.0]),
        Vector::from_slice(&[0.0]),
        Matrix::from_rows(&[&[3.0], &[0.0], &[7.0]]),
        Matrix::from_rows(&[&[0.0, 0.0, 0.0], &[2.0, 0.0, 0.0], &[0.0, 0.0, 0.0]]),
        Matrix::from_rows(&[&[1.0]]),
        Matrix::from_rows(&[&[0.0, 1.0, 6.0]]),
    )
    .expect("well-formed")
}

/// The two-dimensional system
///
/// ```text
/// f1(x) = ||x1 + 2| + x2 - 1| - x2 - 1
/// f2(x) = |x1 + 2| + 2 x2 - 1
/// ```
///
/// with `z1 = x1 + 2` and `z2 = |z1| + x2 - 1`. Its unique root is
/// `x = (0, -0.5)`. The plain Jacobian block `J` is singular, so only the
/// tilde-based formulations apply.
pub fn two_dim_root_system() -> AbsNormalForm {
    AbsNormalForm::new(
        Vector::from_slice(&[2.0, -1.0]),
        Vector::from_slice(&[-1.0, -1.0]),
        Matrix::identity(2),
        Matrix::from_rows(&[&[0.0, 0.0], &[1.0, 0.0]]),
        Matrix::from_rows(&[&[0.0, -1.0], &[0.0, 2.0]]),
        Matrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]),
    )
    .expect("well-formed")
}

/// `f(x) = |x1 + |2 x2 - 1|| + |3 + x3|` with `z1 = 2 x2 - 1`,
/// `z2 = x1 + |z1|`, `z3 = 3 + x3`.
///
/// Nonnegative everywhere, with global minimum `0`; `(0, 0.5, -3)` is one
/// of infinitely many minimizers.
pub fn abs_objective_3d() -> AbsNormalForm {
    AbsNormalForm::new(
        Vector::from_slice(&[-1.0, 0.0, 3.0]),
        Vector::from_slice(&[0.0]),
        Matrix::from_rows(&[&[0.0, 2.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]]),
        Matrix::from_rows(&[&[0.0, 0.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 0.0]]),
        Matrix::zeros(1, 3),
        Matrix::from_rows(&[&[0.0, 1.0, 1.0]]),
    )
    .expect("well-formed")
}

/// `f(x) = -|x|`: unbounded below, so no global minimum exists.
pub fn neg_abs_scalar() -> AbsNormalForm {
    AbsNormalForm::new(
        Vector::zeros(1),
        Vector::zeros(1),
        Matrix::from_rows(&[&[1.0]]),
        Matrix::zeros(1, 1),
        Matrix::zeros(1, 1),
        Matrix::from_rows(&[&[-1.0]]),
    )
    .expect("well-formed")
}

/// `f(x) = |x|`: global minimum `0` at the origin.
pub fn abs_scalar() -> AbsNormalForm {
    AbsNormalForm::new(
        Vector::zeros(1),
        Vector::zeros(1),
        Matrix::from_rows(&[&[1.0]]),
        Matrix::zeros(1, 1),
        Matrix::zeros(1, 1),
        Matrix::from_rows(&[&[1.0]]),
    )
    .expect("well-formed")
}

/// `f(x) = x + |2 |x - 2| - 10| + 20` with `z1 = x - 2`, `z2 = 2|z1| - 10`.
///
/// Its horizon function is `x + 2|x|`, which is nonnegative, so the
/// minimum exists.
pub fn offset_kink_scalar() -> AbsNormalForm {
    AbsNormalForm::new(
        Vector::from_slice(&[-2.0, -10.0]),
        Vector::from_slice(&[20.0]),
        Matrix::from_rows(&[&[1.0], &[0.0]]),
        Matrix::from_rows(&[&[0.0, 0.0], &[2.0, 0.0]]),
        Matrix::from_rows(&[&[1.0]]),
        Matrix::from_rows(&[&[0.0, 1.0]]),
    )
    .expect("well-formed")
}

/// `f(x) = ||x| - 5|` with `z1 = x`, `z2 = |z1| - 5`.
///
/// The minimum is `0` at `x = +-5`; reaching it needs `|z|` components of
/// magnitude 5, which makes the instance useful for exercising big-M
/// bounds that are too small.
pub fn double_abs_scalar() -> AbsNormalForm {
    AbsNormalForm::new(
        Vector::from_slice(&[0.0, -5.0]),
        Vector::zeros(1),
        Matrix::from_rows(&[&[1.0], &[0.0]]),
        Matrix::from_rows(&[&[0.0, 0.0], &[1.0, 0.0]]),
        Matrix::zeros(1, 1),
        Matrix::from_rows(&[&[0.0, 1.0]]),
    )
    .expect("well-formed")
}

/// An affine map `f(x) = J x + b` encoded with `s = 0`.
pub fn affine_square(j: Matrix, b: Vector) -> AbsNormalForm {
    let n = j.cols();
    let m = j.rows();
    assert_eq!(m, b.len(), "J and b must agree");
    AbsNormalForm::new(
        Vector::zeros(0),
        b,
        Matrix::zeros(0, n),
        Matrix::zeros(0, 0),
        j,
        Matrix::zeros(m, 0),
    )
    .expect("well-formed")
}

/// Dense random form with independent uniform coefficients in `[-2, 2]`
/// and a strictly lower triangular `L` with entries in `[-0.9, 0.9]`.
/// Deterministic in `(n, m, s, seed)`. Useful for property checks.
pub fn random_dense_form(n: usize, m: usize, s: usize, seed: u64) -> AbsNormalForm {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = Vector::from_fn(s, |_| rng.gen_range(-2.0..2.0));
    let b = Vector::from_fn(m, |_| rng.gen_range(-2.0..2.0));
    let z = Matrix::from_fn(s, n, |_, _| rng.gen_range(-2.0..2.0));
    let l = Matrix::from_fn(s, s, |i, j| if j < i { rng.gen_range(-0.9..0.9) } else { 0.0 });
    let j = Matrix::from_fn(m, n, |_, _| rng.gen_range(-2.0..2.0));
    let y = Matrix::from_fn(m, s, |_, _| rng.gen_range(-2.0..2.0));
    AbsNormalForm::new(c, b, z, l, j, y).expect("well-formed")
}

/// Return a copy of `form` whose offset `b` is shifted so that `x0` is a
/// root: `b := -(J x0 + Y |z(x0)|)`.
pub fn plant_root(form: &AbsNormalForm, x0: &Vector) -> AbsNormalForm {
    let z = form.switching_vector(x0);
    let b = form.j_mat().mul_vec(x0).add(&form.y_mat().mul_vec(&z.abs())).neg();
    AbsNormalForm::new(
        form.c().clone(),
        b,
        form.z_mat().clone(),
        form.l_mat().clone(),
        form.j_mat().clone(),
        form.y_mat().clone(),
    )
    .expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planted_root_evaluates_to_zero() {
        let base = random_dense_form(3, 3, 4, 99);
        let x0 = Vector::from_slice(&[0.3, -1.2, 2.0]);
        let planted = plant_root(&base, &x0);
        assert!(planted.evaluate(&x0).inf_norm() < 1e-12);
    }

    #[test]
    fn double_abs_scalar_minimum_sits_at_five() {
        let f = double_abs_scalar();
        assert_eq!(f.evaluate(&Vector::from_slice(&[5.0])).as_slice(), &[0.0]);
        assert_eq!(f.evaluate(&Vector::from_slice(&[-5.0])).as_slice(), &[0.0]);
        assert_eq!(f.evaluate(&Vector::from_slice(&[0.0])).as_slice(), &[5.0]);
    }

    #[test]
    fn neg_abs_matches_formula() {
        let f = neg_abs_scalar();
        assert_eq!(f.evaluate(&Vector::from_slice(&[3.0])).as_slice(), &[-3.0]);
        assert_eq!(f.evaluate(&Vector::from_slice(&[-3.0])).as_slice(), &[-3.0]);
    }
}
