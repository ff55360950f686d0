//! Signatures and definiteness of rational symmetric forms.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{to_rat_matrix, IntMatrix, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.pos == 1 && self.zero == 0 && self.neg >= 1
    }

    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }
}

/// Signature by congruence diagonalization over `Q`.
pub fn signature(g: &IntMatrix) -> Signature {
    signature_rat(&to_rat_matrix(g))
}

pub fn signature_rat(g: &RatMatrix) -> Signature {
    assert!(g.is_square(), "signature needs a square matrix");
    let mut a = g.clone();
    let mut n = a.rows();
    let mut sig = Signature { pos: 0, neg: 0, zero: 0 };
    // active indices, shrinking as pivots are eliminated
    let mut idx: Vec<usize> = (0..n).collect();
    while n > 0 {
        let piv = idx.iter().position(|&i| !a[(i, i)].is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                // all diagonal entries vanish: e_i <- e_i + e_j for a nonzero a_ij
                let found = idx
                    .iter()
                    .enumerate()
                    .find_map(|(pi, &i)| idx.iter().find(|&&j| j != i && !a[(i, j)].is_zero()).map(|&j| (pi, i, j)));
                let Some((pi, i, j)) = found else {
                    sig.zero += n;
                    break;
                };
                for &k in &idx {
                    let v = &a[(i, k)] + &a[(j, k)];
                    a[(i, k)] = v;
                }
                for &k in &idx {
                    let v = &a[(k, i)] + &a[(k, j)];
                    a[(k, i)] = v;
                }
                pi
            }
        };
        let i = idx[p];
        let d = a[(i, i)].clone();
        if d.is_positive() {
            sig.pos += 1;
        } else {
            sig.neg += 1;
        }
        idx.remove(p);
        for &r in &idx {
            if a[(r, i)].is_zero() {
                continue;
            }
            let f: BigRational = &a[(r, i)] / &d;
            for &c in &idx {
                let v = &a[(r, c)] - &(&f * &a[(i, c)]);
                a[(r, c)] = v;
            }
        }
        n -= 1;
    }
    sig
}

pub fn is_negative_definite(g: &IntMatrix) -> bool {
    let s = signature(g);
    s.neg == g.rows()
}

pub fn is_negative_semidefinite(g: &IntMatrix) -> bool {
    signature(g).pos == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::int_matrix;

    #[test]
    fn hyperbolic_plane() {
        let u = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature(&u), Signature { pos: 1, neg: 1, zero: 0 });
    }

    #[test]
    fn degenerate() {
        let g = int_matrix(&[&[-2, 2], &[2, -2]]);
        assert_eq!(signature(&g), Signature { pos: 0, neg: 1, zero: 1 });
    }

    #[test]
    fn d4_negative_definite() {
        let d4 = int_matrix(&[&[-2, 1, 0, 0], &[1, -2, 1, 1], &[0, 1, -2, 0], &[0, 1, 0, -2]]);
        assert!(is_negative_definite(&d4));
    }
}
