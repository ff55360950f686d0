use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::{GaussInt, GaussRat};
use crate::error::{Error, Result};

/// Commutative ring elements usable as matrix entries.
pub trait Ring: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self>
where
    for<'a> &'a Self: Add<&'a Self, Output = Self> + Sub<&'a Self, Output = Self> + Mul<&'a Self, Output = Self>,
{
}

impl<T> Ring for T
where
    T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T>,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;
pub type GaussMatrix = Matrix<GaussInt>;
pub type GaussRatMatrix = Matrix<GaussRat>;

impl<T: Clone> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_cols(cols: Vec<Vec<T>>) -> Self {
        Matrix::from_rows(cols).transpose()
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

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn to_cols(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Principal or general submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }

    pub fn principal(&self, idx: &[usize]) -> Self {
        self.select(idx, idx)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, cols)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut rows = self.to_rows();
        for (i, r) in rows.iter_mut().enumerate() {
            r.extend(other.row(i));
        }
        Matrix::from_rows_sized(rows, self.rows, self.cols + other.cols)
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    fn from_rows_sized(rows: Vec<Vec<T>>, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(d: &[T]) -> Self {
        let mut m = Matrix::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn block_diag(blocks: &[Matrix<T>]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(r, c);
        let (mut oi, mut oj) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(oi + i, oj + j)] = b[(i, j)].clone();
                }
            }
            oi += b.rows;
            oj += b.cols;
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl<T: Ring> Matrix<T>
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    let cur = &out[(i, j)] + &prod;
                    out[(i, j)] = cur;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc = &acc + &(&self[(i, j)] * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// `x^T A y`.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> T {
        let ay = self.mul_vec(y);
        dot(x, &ay)
    }

    pub fn add_mat(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub_mat(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x * s)
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    /// `B^T A B`.
    pub fn congruent(&self, b: &Self) -> Self {
        b.transpose().mul_mat(&self.mul_mat(b))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mat(&base);
            }
            base = base.mul_mat(&base);
            e >>= 1;
        }
        acc
    }
}

pub fn dot<T: Ring>(x: &[T], y: &[T]) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    assert_eq!(x.len(), y.len(), "dot product length");
    let mut acc = T::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc = &acc + &(a * b);
        }
    }
    acc
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
}

pub fn int_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_rat_matrix(m: &IntMatrix) -> RatMatrix {
    m.map(rat)
}

/// Integer matrix from a rational one, if all entries are integral.
pub fn to_int_matrix(m: &RatMatrix) -> Option<IntMatrix> {
    if m.data().iter().all(|x| x.is_integer()) {
        Some(m.map(|x| x.to_integer()))
    } else {
        None
    }
}

/// Fraction-free determinant (Bareiss).
pub fn det_int(m: &IntMatrix) -> BigInt {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * a[(n - 1, n - 1)].clone()
}

pub fn det_rat(m: &RatMatrix) -> BigRational {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap_rows(k, p);
            det = -det;
        }
        let piv = a[(k, k)].clone();
        det *= &piv;
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &piv;
            for j in k..n {
                let v = &a[(i, j)] - &(&f * &a[(k, j)]);
                a[(i, j)] = v;
            }
        }
    }
    det
}

/// Field Gauss-Jordan inverse over `Q` or `Q(i)`.
fn inverse_field<T: Ring>(m: &Matrix<T>, inv: impl Fn(&T) -> Option<T>) -> Option<Matrix<T>>
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut b = Matrix::<T>::identity(n);
    for k in 0..n {
        let p = (k..n).find(|&i| !a[(i, k)].is_zero())?;
        a.swap_rows(k, p);
        b.swap_rows(k, p);
        let pinv = inv(&a[(k, k)])?;
        for j in 0..n {
            a[(k, j)] = &a[(k, j)] * &pinv;
            b[(k, j)] = &b[(k, j)] * &pinv;
        }
        for i in 0..n {
            if i == k || a[(i, k)].is_zero() {
                continue;
            }
            let f = a[(i, k)].clone();
            for j in 0..n {
                a[(i, j)] = &a[(i, j)] - &(&f * &a[(k, j)]);
                b[(i, j)] = &b[(i, j)] - &(&f * &b[(k, j)]);
            }
        }
    }
    Some(b)
}

pub fn inverse_rat(m: &RatMatrix) -> Option<RatMatrix> {
    inverse_field(m, |x| if x.is_zero() { None } else { Some(x.recip()) })
}

pub fn inverse_gauss_rat(m: &GaussRatMatrix) -> Option<GaussRatMatrix> {
    inverse_field(m, |x| x.inv())
}

/// Inverse of an integer matrix, if it is unimodular.
pub fn inverse_int(m: &IntMatrix) -> Option<IntMatrix> {
    inverse_rat(&to_rat_matrix(m)).and_then(|x| to_int_matrix(&x))
}

pub fn to_gauss_rat(m: &GaussMatrix) -> GaussRatMatrix {
    m.map(|x| GaussRat::from(x))
}

pub fn to_gauss_int(m: &GaussRatMatrix) -> Option<GaussMatrix> {
    let data: Option<Vec<GaussInt>> = m.data().iter().map(|x| x.to_gauss_int()).collect();
    data.map(|d| Matrix::from_vec(m.rows(), m.cols(), d))
}

/// Inverse of a Gaussian integer matrix, if it is invertible over `Z[i]`.
pub fn inverse_gauss(m: &GaussMatrix) -> Option<GaussMatrix> {
    inverse_gauss_rat(&to_gauss_rat(m)).and_then(|x| to_gauss_int(&x))
}

/// Inverse over `Q(i)`.
pub fn inverse_gauss_over_field(m: &GaussMatrix) -> Option<GaussRatMatrix> {
    inverse_gauss_rat(&to_gauss_rat(m))
}

pub fn conj_matrix(m: &GaussMatrix) -> GaussMatrix {
    m.map(|x| x.conj())
}

/// Conjugate transpose.
pub fn adjoint(m: &GaussMatrix) -> GaussMatrix {
    conj_matrix(m).transpose()
}

pub fn is_hermitian(m: &GaussMatrix) -> bool {
    m.is_square() && adjoint(m) == *m
}

pub fn gauss_from_int(m: &IntMatrix) -> GaussMatrix {
    m.map(|x| GaussInt::from_int(x.clone()))
}

/// Gaussian matrix from `(re, im)` pairs.
pub fn gauss_matrix(rows: &[&[(i64, i64)]]) -> GaussMatrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| GaussInt::new(a, b)).collect()).collect())
}

pub fn require_square<T>(m: &Matrix<T>, what: &str) -> Result<()> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch(format!("{what} must be square, got {}x{}", m.rows, m.cols)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_matches_field_determinant() {
        let m = int_matrix(&[&[2, -1, 0, 3], &[1, 4, -2, 0], &[0, 5, 1, 1], &[-3, 0, 2, 2]]);
        assert_eq!(rat(&det_int(&m)), det_rat(&to_rat_matrix(&m)));
        let d4 = int_matrix(&[&[-2, 1, 0, 0], &[1, -2, 1, 1], &[0, 1, -2, 0], &[0, 1, 0, -2]]);
        assert_eq!(det_int(&d4), int(4));
    }

    #[test]
    fn unimodular_inverse() {
        let m = int_matrix(&[&[1, -1], &[-1, 2]]);
        let inv = inverse_int(&m).unwrap();
        assert!(m.mul_mat(&inv).is_identity());
        assert!(inverse_int(&int_matrix(&[&[2, 0], &[0, 1]])).is_none());
    }

    #[test]
    fn gaussian_inverse() {
        let n = gauss_matrix(&[&[(0, 0), (0, 1)], &[(1, 0), (0, 0)]]);
        let inv = inverse_gauss(&n).unwrap();
        assert!(n.mul_mat(&inv).is_identity());
    }
}
