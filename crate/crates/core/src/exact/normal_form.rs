//! Smith and Hermite normal forms, integer kernels and fixed sublattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, Matrix};
use crate::error::{Error, Result};

fn col_axpy(a: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for i in 0..a.rows() {
        let v = &a[(i, dst)] - q * &a[(i, src)];
        a[(i, dst)] = v;
    }
}

fn col_neg(a: &mut IntMatrix, j: usize) {
    for i in 0..a.rows() {
        let v = -a[(i, j)].clone();
        a[(i, j)] = v;
    }
}

fn row_axpy(a: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for j in 0..a.cols() {
        let v = &a[(dst, j)] - q * &a[(src, j)];
        a[(dst, j)] = v;
    }
}

fn row_neg(a: &mut IntMatrix, i: usize) {
    for j in 0..a.cols() {
        let v = -a[(i, j)].clone();
        a[(i, j)] = v;
    }
}

/// Column echelon form `H = A U` with `U` unimodular.
///
/// Pivots are positive, each pivot row is zero to the right of its pivot and
/// reduced into `[0, pivot)` to the left. Returns `(H, U, rank)`; columns
/// `rank..` of `H` are zero.
pub fn column_hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut k = 0;
    for i in 0..m {
        if k == n {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in k..n {
                if !h[(i, j)].is_zero() && best.is_none_or(|b| h[(i, j)].abs() < h[(i, b)].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            h.swap_cols(k, b);
            u.swap_cols(k, b);
            let mut done = true;
            for j in k + 1..n {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = h[(i, j)].div_floor(&h[(i, k)]);
                col_axpy(&mut h, j, k, &q);
                col_axpy(&mut u, j, k, &q);
                if !h[(i, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(i, k)].is_zero() {
            continue;
        }
        if h[(i, k)].is_negative() {
            col_neg(&mut h, k);
            col_neg(&mut u, k);
        }
        for j in 0..k {
            let q = h[(i, j)].div_floor(&h[(i, k)]);
            if !q.is_zero() {
                col_axpy(&mut h, j, k, &q);
                col_axpy(&mut u, j, k, &q);
            }
        }
        k += 1;
    }
    (h, u, k)
}

/// Column HNF of the lattice spanned by the columns of `basis`, zero columns dropped.
pub fn hnf_basis(basis: &IntMatrix) -> IntMatrix {
    let (h, _, r) = column_hnf(basis);
    let idx: Vec<usize> = (0..r).collect();
    h.select_cols(&idx)
}

/// Saturated basis (columns, in HNF) of `{x in Z^n : A x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let (_, u, r) = column_hnf(a);
    let idx: Vec<usize> = (r..a.cols()).collect();
    let k = u.select_cols(&idx);
    if k.cols() == 0 {
        return k;
    }
    hnf_basis(&k)
}

/// Rank over `Q`.
pub fn rank(a: &IntMatrix) -> usize {
    column_hnf(a).2
}

/// Saturated basis of the fixed sublattice `ker(X - I)` of an integral involution.
pub fn integer_fixed_sublattice(x: &IntMatrix) -> Result<IntMatrix> {
    if !x.is_square() {
        return Err(Error::DimensionMismatch("involution must be square".into()));
    }
    if !x.mul_mat(x).is_identity() {
        return Err(Error::NotAnInvolution("X^2 != I".into()));
    }
    let n = x.rows();
    Ok(kernel_basis(&x.sub_mat(&IntMatrix::identity(n))))
}

/// Solve `a x = b` over the integers; `None` when no integral solution exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let (h, u, r) = column_hnf(a);
    // h is in column echelon form; forward substitution over pivots.
    let mut y = vec![BigInt::zero(); a.cols()];
    let mut residual: Vec<BigInt> = b.to_vec();
    let mut col = 0;
    for i in 0..a.rows() {
        if col < r && !h[(i, col)].is_zero() {
            let (q, rem) = residual[i].div_rem(&h[(i, col)]);
            if !rem.is_zero() {
                return None;
            }
            for t in 0..a.rows() {
                let v = &residual[t] - &q * &h[(t, col)];
                residual[t] = v;
            }
            y[col] = q;
            col += 1;
        } else if !residual[i].is_zero() {
            return None;
        }
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(u.mul_vec(&y))
}

/// Smith normal form `U A V = D`.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Nonzero invariant factors in divisibility order.
    pub invariants: Vec<BigInt>,
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        let mut clean = true;
        for i in t + 1..m {
            if d[(i, t)].is_zero() {
                continue;
            }
            let q = d[(i, t)].div_floor(&d[(t, t)]);
            row_axpy(&mut d, i, t, &q);
            row_axpy(&mut u, i, t, &q);
            if !d[(i, t)].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..n {
            if d[(t, j)].is_zero() {
                continue;
            }
            let q = d[(t, j)].div_floor(&d[(t, t)]);
            col_axpy(&mut d, j, t, &q);
            col_axpy(&mut v, j, t, &q);
            if !d[(t, j)].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold an offending row into row t
        let p = d[(t, t)].clone();
        let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
        if let Some(i) = bad {
            let minus_one = -BigInt::one();
            row_axpy(&mut d, t, i, &minus_one);
            row_axpy(&mut u, t, i, &minus_one);
            continue;
        }
        if d[(t, t)].is_negative() {
            row_neg(&mut d, t);
            row_neg(&mut u, t);
        }
        t += 1;
    }
    let invariants = (0..m.min(n)).map(|i| d[(i, i)].clone()).filter(|x| !x.is_zero()).collect();
    Smith { invariants, d, u, v }
}

/// Whether the columns of `basis` span a primitive (saturated) sublattice of `Z^n`.
pub fn is_saturated(basis: &IntMatrix) -> bool {
    let s = smith_normal_form(basis);
    s.rank() == basis.cols() && s.invariants.iter().all(|x| x.is_one())
}

/// gcd of the entries of a vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn identity_like(n: usize) -> IntMatrix {
    Matrix::identity(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::{int_matrix, int_vec};

    #[test]
    fn smith_of_small_matrix() {
        let a = int_matrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariants, int_vec(&[2, 6, 12]));
        assert_eq!(s.u.mul_mat(&a).mul_mat(&s.v), s.d);
    }

    #[test]
    fn kernel_is_saturated() {
        let a = int_matrix(&[&[2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul_mat(&k).is_zero());
        assert!(is_saturated(&k));
    }

    #[test]
    fn fixed_sublattice_of_swap() {
        let x = int_matrix(&[&[0, 1], &[1, 0]]);
        let k = integer_fixed_sublattice(&x).unwrap();
        assert_eq!(k, int_matrix(&[&[1], &[1]]));
        assert!(integer_fixed_sublattice(&int_matrix(&[&[1, 1], &[0, 1]])).is_err());
    }

    #[test]
    fn integer_solve() {
        let a = int_matrix(&[&[4, 6]]);
        let x = solve_integer(&a, &int_vec(&[2])).unwrap();
        assert_eq!(a.mul_vec(&x), int_vec(&[2]));
        assert!(solve_integer(&a, &int_vec(&[3])).is_none());
    }
}
