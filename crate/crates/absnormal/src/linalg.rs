//! Dense row-major linear algebra: matrices, vectors, LU factorization with
//! scaled partial pivoting, and unit-lower-triangular solves.
//!
//! Problem sizes in this crate are desk scale (at most a few hundred), so
//! storage is dense throughout. Shape mismatches are programming errors and
//! panic; data-dependent failures (singularity, bad triangular structure)
//! are reported through [`LinalgError`].

use std::fmt;
use std::ops::{Index, IndexMut};

/// Scaled pivot magnitudes at or below this threshold flag a factorization
/// as singular. Rows are scaled by their max-absolute entry first, so the
/// test is insensitive to uniform row scaling.
pub const PIVOT_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// Operation requires a square matrix.
    NotSquare { rows: usize, cols: usize },
    /// Right-hand side length does not match the system size.
    DimensionMismatch { expected: usize, got: usize },
    /// Factorization hit a pivot below [`PIVOT_TOLERANCE`].
    Singular,
    /// Entry on or above the diagonal is nonzero where strict lower
    /// triangularity is required.
    NotStrictlyLowerTriangular { row: usize, col: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            LinalgError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LinalgError::Singular => write!(f, "matrix is singular"),
            LinalgError::NotStrictlyLowerTriangular { row, col } => {
                write!(f, "entry ({row},{col}) must be zero for a strictly lower triangular matrix")
            }
        }
    }
}

impl std::error::Error for LinalgError {}

/// Dense matrix stored row-major: `data[i * cols + j]` holds the (i, j) entry.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Build from raw row-major data. Panics if the length is inconsistent.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length must be rows*cols");
        Matrix { rows, cols, data }
    }

    /// Build from row slices. Panics if the rows are ragged.
    pub fn from_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "all rows must have the same length");
            data.extend_from_slice(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn scale(&self, factor: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix add shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sub shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul_mat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix multiply shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, o) in dst.iter_mut().zip(orow) {
                    *d += aik * o;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        Vector::from_fn(self.rows, |i| {
            self.row(i).iter().zip(v.iter()).map(|(a, x)| a * x).sum()
        })
    }

    /// Copy `block` into `self` with its top-left corner at (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }

    /// Submatrix with rows and columns restricted to `idx` (strictly
    /// increasing). Panics if the matrix is not square or `idx` is invalid.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Matrix {
        assert!(self.is_square(), "principal submatrix requires a square matrix");
        assert!(idx.windows(2).all(|w| w[0] < w[1]), "index set must be strictly increasing");
        if let Some(&last) = idx.last() {
            assert!(last < self.rows, "index out of range");
        }
        Matrix::from_fn(idx.len(), idx.len(), |i, j| self.get(idx[i], idx[j]))
    }

    /// Determinant via the product of LU pivots with the permutation sign.
    /// Returns 0 when the factorization flags the matrix as singular.
    pub fn det(&self) -> f64 {
        self.lu().expect("det requires a square matrix").det()
    }

    /// LU factorization with scaled partial pivoting, `PA = LU`. The
    /// factorization is returned even when singular; solving with a singular
    /// factorization fails with [`LinalgError::Singular`].
    pub fn lu(&self) -> Result<LuFactorization, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut lu = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut singular = false;

        // Row scales from the original matrix; a zero row scales as 1 so the
        // (necessarily tiny) pivot comparison still fires.
        let scale: Vec<f64> = (0..n)
            .map(|i| {
                let s = lu.row(i).iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
                if s > 0.0 {
                    s
                } else {
                    1.0
                }
            })
            .collect();

        for k in 0..n {
            let mut best = k;
            let mut best_val = lu.get(k, k).abs() / scale[perm[k]];
            for i in (k + 1)..n {
                let v = lu.get(i, k).abs() / scale[perm[i]];
                if v > best_val {
                    best = i;
                    best_val = v;
                }
            }
            if best_val <= PIVOT_TOLERANCE {
                singular = true;
                break;
            }
            if best != k {
                for j in 0..n {
                    let tmp = lu.get(k, j);
                    lu.set(k, j, lu.get(best, j));
                    lu.set(best, j, tmp);
                }
                perm.swap(k, best);
                sign = -sign;
            }
            let pivot = lu.get(k, k);
            for i in (k + 1)..n {
                let factor = lu.get(i, k) / pivot;
                lu.set(i, k, factor);
                if factor == 0.0 {
                    continue;
                }
                for j in (k + 1)..n {
                    let v = lu.get(i, j) - factor * lu.get(k, j);
                    lu.set(i, j, v);
                }
            }
        }

        Ok(LuFactorization { lu, perm, sign, singular })
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:>10.4}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Dense real vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    data: Vec<f64>,
}

impl Vector {
    pub fn new(data: Vec<f64>) -> Self {
        Vector { data }
    }

    pub fn zeros(n: usize) -> Self {
        Vector { data: vec![0.0; n] }
    }

    pub fn ones(n: usize) -> Self {
        Vector { data: vec![1.0; n] }
    }

    pub fn from_slice(s: &[f64]) -> Self {
        Vector { data: s.to_vec() }
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> f64) -> Self {
        Vector { data: (0..n).map(f).collect() }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.data.iter()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector add length mismatch");
        Vector::from_fn(self.len(), |i| self.data[i] + other.data[i])
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "vector sub length mismatch");
        Vector::from_fn(self.len(), |i| self.data[i] - other.data[i])
    }

    pub fn scale(&self, factor: f64) -> Vector {
        Vector { data: self.data.iter().map(|v| v * factor).collect() }
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        assert_eq!(self.len(), other.len(), "dot product length mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    /// Componentwise absolute value.
    pub fn abs(&self) -> Vector {
        Vector { data: self.data.iter().map(|v| v.abs()).collect() }
    }

    /// Componentwise `max(0, v_i)`.
    pub fn max_zero(&self) -> Vector {
        Vector { data: self.data.iter().map(|v| v.max(0.0)).collect() }
    }

    pub fn neg(&self) -> Vector {
        self.scale(-1.0)
    }

    pub fn inf_norm(&self) -> f64 {
        self.data.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    pub fn min(&self) -> f64 {
        self.data.iter().fold(f64::INFINITY, |acc, &v| acc.min(v))
    }

    pub fn concat(parts: &[&Vector]) -> Vector {
        let mut data = Vec::new();
        for p in parts {
            data.extend_from_slice(&p.data);
        }
        Vector { data }
    }
}

impl From<Vec<f64>> for Vector {
    fn from(data: Vec<f64>) -> Self {
        Vector { data }
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.data[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.data[i]
    }
}

/// Packed LU factors with the row permutation applied during pivoting.
#[derive(Debug, Clone)]
pub struct LuFactorization {
    lu: Matrix,
    perm: Vec<usize>,
    sign: f64,
    singular: bool,
}

impl LuFactorization {
    pub fn n(&self) -> usize {
        self.lu.rows()
    }

    pub fn is_singular(&self) -> bool {
        self.singular
    }

    /// Product of pivots with the permutation sign; 0 when singular.
    pub fn det(&self) -> f64 {
        if self.singular {
            return 0.0;
        }
        let mut d = self.sign;
        for k in 0..self.n() {
            d *= self.lu.get(k, k);
        }
        d
    }

    pub fn solve_vec(&self, rhs: &Vector) -> Result<Vector, LinalgError> {
        if self.singular {
            return Err(LinalgError::Singular);
        }
        let n = self.n();
        if rhs.len() != n {
            return Err(LinalgError::DimensionMismatch { expected: n, got: rhs.len() });
        }
        // Note: perm[i] is the original row now sitting at position i.
        let mut x = Vector::from_fn(n, |i| rhs[self.perm[i]]);
        for i in 1..n {
            let mut sum = x[i];
            for j in 0..i {
                sum -= self.lu.get(i, j) * x[j];
            }
            x[i] = sum;
        }
        for i in (0..n).rev() {
            let mut sum = x[i];
            for j in (i + 1)..n {
                sum -= self.lu.get(i, j) * x[j];
            }
            x[i] = sum / self.lu.get(i, i);
        }
        Ok(x)
    }

    pub fn solve_mat(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.singular {
            return Err(LinalgError::Singular);
        }
        let n = self.n();
        if rhs.rows() != n {
            return Err(LinalgError::DimensionMismatch { expected: n, got: rhs.rows() });
        }
        let mut out = Matrix::zeros(n, rhs.cols());
        for j in 0..rhs.cols() {
            let col = Vector::from_fn(n, |i| rhs.get(i, j));
            let x = self.solve_vec(&col)?;
            for i in 0..n {
                out.set(i, j, x[i]);
            }
        }
        Ok(out)
    }
}

fn check_strictly_lower(l: &Matrix) -> Result<(), LinalgError> {
    if !l.is_square() {
        return Err(LinalgError::NotSquare { rows: l.rows(), cols: l.cols() });
    }
    for i in 0..l.rows() {
        for j in i..l.cols() {
            if l.get(i, j) != 0.0 {
                return Err(LinalgError::NotStrictlyLowerTriangular { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Solve `(I - L) x = rhs` by forward substitution, where `L` is strictly
/// lower triangular (validated; exact zeros required on and above the
/// diagonal). `(I - L)` is unit lower triangular, so no pivoting is needed.
pub fn unit_lower_solve(l: &Matrix, rhs: &Vector) -> Result<Vector, LinalgError> {
    check_strictly_lower(l)?;
    let n = l.rows();
    if rhs.len() != n {
        return Err(LinalgError::DimensionMismatch { expected: n, got: rhs.len() });
    }
    let mut x = rhs.clone();
    for i in 0..n {
        let mut sum = x[i];
        for j in 0..i {
            sum += l.get(i, j) * x[j];
        }
        x[i] = sum;
    }
    Ok(x)
}

/// Column-by-column variant of [`unit_lower_solve`] for matrix right-hand
/// sides: solves `(I - L) X = rhs`.
pub fn unit_lower_solve_mat(l: &Matrix, rhs: &Matrix) -> Result<Matrix, LinalgError> {
    check_strictly_lower(l)?;
    let n = l.rows();
    if rhs.rows() != n {
        return Err(LinalgError::DimensionMismatch { expected: n, got: rhs.rows() });
    }
    let mut out = rhs.clone();
    for i in 0..n {
        for j in 0..i {
            let lij = l.get(i, j);
            if lij == 0.0 {
                continue;
            }
            for col in 0..rhs.cols() {
                let v = out.get(i, col) + lij * out.get(j, col);
                out.set(i, col, v);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| rng.gen_range(-1.0..1.0))
    }

    #[test]
    fn identity_factorization_is_nonsingular_with_unit_det() {
        let fact = Matrix::identity(3).lu().unwrap();
        assert!(!fact.is_singular());
        assert_eq!(fact.det(), 1.0);
    }

    #[test]
    fn rank_one_matrix_flags_singular() {
        let m = Matrix::from_rows(&[&[1.0, 2.0], &[2.0, 4.0]]);
        let fact = m.lu().unwrap();
        assert!(fact.is_singular());
        assert_eq!(m.det(), 0.0);
        assert_eq!(fact.solve_vec(&Vector::from_slice(&[1.0, 1.0])), Err(LinalgError::Singular));
    }

    #[test]
    fn scalar_system_solves_by_division() {
        let fact = Matrix::from_rows(&[&[49.0]]).lu().unwrap();
        assert!(!fact.is_singular());
        let x = fact.solve_vec(&Vector::from_slice(&[45.0])).unwrap();
        assert!((x[0] - 45.0 / 49.0).abs() < 1e-15);
    }

    #[test]
    fn lower_triangular_solve_by_back_substitution() {
        let m = Matrix::from_rows(&[&[1.0, 0.0], &[1.0, 2.0]]);
        let x = m.lu().unwrap().solve_vec(&Vector::from_slice(&[0.0, -1.0])).unwrap();
        assert!((x[0] - 0.0).abs() < 1e-15);
        assert!((x[1] + 0.5).abs() < 1e-15);
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let fact = Matrix::identity(2).lu().unwrap();
        let x = fact.solve_vec(&Vector::from_slice(&[1.0, 2.0])).unwrap();
        assert_eq!(x.as_slice(), &[1.0, 2.0]);
    }

    #[test]
    fn lu_rejects_rectangular_input() {
        let m = Matrix::zeros(2, 3);
        assert!(matches!(m.lu(), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn empty_system_is_nonsingular() {
        let fact = Matrix::zeros(0, 0).lu().unwrap();
        assert!(!fact.is_singular());
        assert_eq!(fact.det(), 1.0);
        assert!(fact.solve_vec(&Vector::zeros(0)).unwrap().is_empty());
    }

    #[test]
    fn det_of_permutation_carries_sign() {
        let m = Matrix::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert!((m.det() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn unit_lower_solve_with_zero_l_returns_rhs() {
        let l = Matrix::zeros(3, 3);
        let rhs = Vector::from_slice(&[4.0, -5.0, -8.0]);
        assert_eq!(unit_lower_solve(&l, &rhs).unwrap(), rhs);
    }

    #[test]
    fn unit_lower_solve_forward_substitutes() {
        // L has a single nonzero at (1,0): x = (4, -5 + 2*4, -8).
        let l = Matrix::from_rows(&[&[0.0, 0.0, 0.0], &[2.0, 0.0, 0.0], &[0.0, 0.0, 0.0]]);
        let rhs = Vector::from_slice(&[4.0, -5.0, -8.0]);
        let x = unit_lower_solve(&l, &rhs).unwrap();
        assert_eq!(x.as_slice(), &[4.0, 3.0, -8.0]);
    }

    #[test]
    fn unit_lower_solve_with_subdiagonal_ones_accumulates() {
        let l = Matrix::from_fn(3, 3, |i, j| if i == j + 1 { 1.0 } else { 0.0 });
        let x = unit_lower_solve(&l, &Vector::ones(3)).unwrap();
        assert_eq!(x.as_slice(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn unit_lower_solve_rejects_upper_entries() {
        let l = Matrix::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        let err = unit_lower_solve(&l, &Vector::zeros(2)).unwrap_err();
        assert_eq!(err, LinalgError::NotStrictlyLowerTriangular { row: 0, col: 1 });
    }

    #[test]
    fn unit_lower_solve_rejects_diagonal_entries() {
        let l = Matrix::from_rows(&[&[1e-30, 0.0], &[3.0, 0.0]]);
        let err = unit_lower_solve(&l, &Vector::zeros(2)).unwrap_err();
        assert_eq!(err, LinalgError::NotStrictlyLowerTriangular { row: 0, col: 0 });
    }

    #[test]
    fn principal_submatrix_picks_rows_and_columns() {
        let m = Matrix::from_fn(4, 4, |i, j| (i * 4 + j) as f64);
        let sub = m.principal_submatrix(&[1, 3]);
        assert_eq!(sub.rows(), 2);
        assert_eq!(sub.get(0, 0), 5.0);
        assert_eq!(sub.get(0, 1), 7.0);
        assert_eq!(sub.get(1, 0), 13.0);
        assert_eq!(sub.get(1, 1), 15.0);
    }

    #[test]
    fn random_solves_have_small_residual() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let n = rng.gen_range(1..=20);
            let a = random_matrix(&mut rng, n, n);
            let fact = a.lu().unwrap();
            if fact.is_singular() {
                continue;
            }
            let b = Vector::from_fn(n, |_| rng.gen_range(-10.0..10.0));
            let x = fact.solve_vec(&b).unwrap();
            let residual = a.mul_vec(&x).sub(&b).inf_norm();
            assert!(residual <= 1e-8 * (1.0 + b.inf_norm()), "residual {residual} too large");
        }
    }

    #[test]
    fn unit_lower_solve_matches_general_lu_solve() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(1..=10);
            let l = Matrix::from_fn(n, n, |i, j| if j < i { rng.gen_range(-1.0..1.0) } else { 0.0 });
            let rhs = Vector::from_fn(n, |_| rng.gen_range(-5.0..5.0));
            let direct = unit_lower_solve(&l, &rhs).unwrap();
            let i_minus_l = Matrix::identity(n).sub(&l);
            let via_lu = i_minus_l.lu().unwrap().solve_vec(&rhs).unwrap();
            assert!(direct.sub(&via_lu).inf_norm() <= 1e-12);
        }
    }

    #[test]
    fn determinant_is_multiplicative() {
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..50 {
            let a = random_matrix(&mut rng, 5, 5);
            let b = random_matrix(&mut rng, 5, 5);
            let lhs = a.mul_mat(&b).det();
            let rhs = a.det() * b.det();
            assert!((lhs - rhs).abs() <= 1e-8 * (1.0 + rhs.abs()));
        }
    }

    #[test]
    fn matmul_against_hand_computed_product() {
        let a = Matrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let b = Matrix::from_rows(&[&[5.0, 6.0], &[7.0, 8.0]]);
        let c = a.mul_mat(&b);
        assert_eq!(c, Matrix::from_rows(&[&[19.0, 22.0], &[43.0, 50.0]]));
    }

    #[test]
    fn transpose_roundtrips() {
        let m = Matrix::from_rows(&[&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]]);
        assert_eq!(m.transpose().transpose(), m);
    }
}
