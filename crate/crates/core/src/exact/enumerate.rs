//! Exact enumeration of lattice points of a given norm in a negative definite lattice.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{rat, IntMatrix};
use crate::error::{Error, Result};

/// `Q = L D L^T` for a positive definite rational form; `None` if not positive definite.
fn ldl(q: &[Vec<BigRational>]) -> Option<(Vec<Vec<BigRational>>, Vec<BigRational>)> {
    let n = q.len();
    let mut l = vec![vec![BigRational::zero(); n]; n];
    let mut d = vec![BigRational::zero(); n];
    for j in 0..n {
        let mut dj = q[j][j].clone();
        for k in 0..j {
            dj -= &l[j][k] * &l[j][k] * &d[k];
        }
        if !dj.is_positive() {
            return None;
        }
        l[j][j] = BigRational::one();
        for i in j + 1..n {
            let mut v = q[i][j].clone();
            for k in 0..j {
                v -= &l[i][k] * &l[j][k] * &d[k];
            }
            l[i][j] = v / &dj;
        }
        d[j] = dj;
    }
    Some((l, d))
}

fn sqrt_exact(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn round(x: &BigRational) -> BigInt {
    (x + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

struct Enumerator<'a> {
    n: usize,
    l: Vec<Vec<BigRational>>,
    d: Vec<BigRational>,
    offset: &'a [BigRational],
    v: Vec<BigInt>,
    out: Vec<Vec<BigInt>>,
}

impl Enumerator<'_> {
    /// Center of the admissible interval for coordinate `i` given coordinates `> i`.
    fn center(&self, i: usize) -> BigRational {
        let mut s = self.offset[i].clone();
        for j in i + 1..self.n {
            let y = rat(&self.v[j]) + &self.offset[j];
            s += &self.l[j][i] * y;
        }
        -s
    }

    fn descend(&mut self, i: usize, budget: BigRational) {
        let c = self.center(i);
        let bound = &budget / &self.d[i];
        if i == 0 {
            if let Some(t) = sqrt_exact(&bound) {
                let mut hits = vec![&c - &t];
                if !t.is_zero() {
                    hits.push(&c + &t);
                }
                for h in hits {
                    if h.is_integer() {
                        self.v[0] = h.to_integer();
                        self.out.push(self.v.clone());
                    }
                }
            }
            return;
        }
        let v0 = round(&c);
        let gap = |v: &BigInt| {
            let t = rat(v) - &c;
            &t * &t
        };
        if gap(&v0) > bound {
            return;
        }
        for dir in [1i32, -1] {
            let mut v = if dir == 1 { v0.clone() } else { &v0 - 1 };
            loop {
                let g = gap(&v);
                if g > bound {
                    break;
                }
                self.v[i] = v.clone();
                let rest = &budget - &self.d[i] * g;
                self.descend(i - 1, rest);
                v += dir;
            }
        }
    }
}

/// All `v in Z^n` with `(v + offset)^T G (v + offset) = target`, for `G` negative definite.
///
/// The result is sorted lexicographically.
pub fn negdef_enumerate(g: &IntMatrix, target: &BigInt, offset: &[BigRational]) -> Result<Vec<Vec<BigInt>>> {
    negdef_enumerate_rat(g, &rat(target), offset)
}

/// As [`negdef_enumerate`] with a rational target value.
pub fn negdef_enumerate_rat(g: &IntMatrix, target: &BigRational, offset: &[BigRational]) -> Result<Vec<Vec<BigInt>>> {
    let n = g.rows();
    if !g.is_square() || offset.len() != n {
        return Err(Error::DimensionMismatch("gram and offset sizes differ".into()));
    }
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if n == 0 {
        return Ok(if target.is_zero() { vec![vec![]] } else { vec![] });
    }
    let q: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| -rat(&g[(i, j)])).collect()).collect();
    let (l, d) = ldl(&q).ok_or(Error::NotNegativeDefinite)?;
    let budget = -target.clone();
    if budget.is_negative() {
        return Ok(vec![]);
    }
    let mut e = Enumerator { n, l, d, offset, v: vec![BigInt::zero(); n], out: vec![] };
    e.descend(n - 1, budget);
    let mut out = e.out;
    out.sort();
    out.dedup();
    Ok(out)
}

/// All vectors of norm `target` with zero offset.
pub fn vectors_of_norm(g: &IntMatrix, target: i64) -> Result<Vec<Vec<BigInt>>> {
    let zero = vec![BigRational::zero(); g.rows()];
    negdef_enumerate(g, &BigInt::from(target), &zero)
}

pub fn vectors_of_norm_big(g: &IntMatrix, target: &BigInt) -> Result<Vec<Vec<BigInt>>> {
    let zero = vec![BigRational::zero(); g.rows()];
    negdef_enumerate(g, target, &zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::int_matrix;

    #[test]
    fn d4_has_24_roots() {
        let d4 = int_matrix(&[&[-2, 1, 0, 0], &[1, -2, 1, 1], &[0, 1, -2, 0], &[0, 1, 0, -2]]);
        assert_eq!(vectors_of_norm(&d4, -2).unwrap().len(), 24);
    }

    #[test]
    fn a1_squared_with_half_offset() {
        let g = int_matrix(&[&[-2, 0], &[0, -2]]);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let off = vec![half.clone(), half];
        // (v + 1/2)^2 sums: -2 * (1/4 + 1/4) = -1
        let sols = negdef_enumerate(&g, &BigInt::from(-1), &off).unwrap();
        assert_eq!(sols.len(), 4);
    }

    #[test]
    fn rejects_indefinite() {
        let u = int_matrix(&[&[0, 1], &[1, 0]]);
        assert!(vectors_of_norm(&u, -2).is_err());
    }
}
