//! Parser for Gaussian lattice expressions such as `Λ2^3⊕(2)` or `L11+L2^2`.

use crate::error::{Error, Result};
use crate::exact::matrix::{GaussMatrix, Matrix};
use crate::zlattice::expr_normalize;

use super::{named, GaussianLattice};

fn named_block(key: &str) -> Option<GaussianLattice> {
    Some(match key {
        "2" => named::lambda2(),
        "11" => named::lambda11(),
        "12" => named::lambda12(),
        "15" => named::lambda15(),
        "16" => named::lambda16(),
        _ => return None,
    })
}

/// Build a Gaussian lattice from `Λ2`, `Λ1,1`, `Λ1,2`, `Λ1,5`, `Λ1,6`, `(k)`, powers and sums.
/// ASCII spellings `L2`, `L11`, `L1,1`, `Lambda2` are accepted.
pub fn build_gaussian(expr: &str) -> Result<GaussianLattice> {
    let mut s = expr_normalize(expr).replace("Lambda", "L").replace("\\L", "L").replace('Λ', "L");
    s.retain(|c| !matches!(c, '_' | '{' | '}'));
    let b = s.as_bytes();
    let mut pos = 0;
    let mut blocks: Vec<GaussMatrix> = vec![];
    let err = |pos: usize, msg: &str| Error::Parse(format!("{msg} at position {pos} in '{s}'"));
    let int_at = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        if b.get(*pos) == Some(&b'-') {
            *pos += 1;
        }
        while b.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
            *pos += 1;
        }
        s[start..*pos].parse().ok()
    };
    loop {
        let block = match b.get(pos) {
            Some(b'L') => {
                pos += 1;
                let start = pos;
                while b.get(pos).is_some_and(|c| c.is_ascii_digit() || *c == b',') {
                    pos += 1;
                }
                let key: String = s[start..pos].chars().filter(|c| *c != ',').collect();
                named_block(&key).ok_or_else(|| Error::UnknownName(format!("L{}", &s[start..pos])))?.gram
            }
            Some(b'(') => {
                pos += 1;
                let k = int_at(&mut pos).ok_or_else(|| err(pos, "expected integer"))?;
                if b.get(pos) != Some(&b')') {
                    return Err(err(pos, "expected ')'"));
                }
                pos += 1;
                named::rank_one(k).gram
            }
            _ => return Err(err(pos, "expected Gaussian lattice")),
        };
        let mut reps = 1;
        if b.get(pos) == Some(&b'^') {
            pos += 1;
            reps = int_at(&mut pos).filter(|&k| k >= 1).ok_or_else(|| err(pos, "bad exponent"))? as usize;
        }
        for _ in 0..reps {
            blocks.push(block.clone());
        }
        match b.get(pos) {
            Some(b'+') => pos += 1,
            None => break,
            _ => return Err(err(pos, "trailing input")),
        }
    }
    GaussianLattice::new(expr.trim(), Matrix::block_diag(&blocks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spellings() {
        assert_eq!(build_gaussian("Λ₂³⊕(2)").unwrap().gram, named::lambda16().gram);
        assert_eq!(build_gaussian("L2^3+(2)").unwrap().gram, named::lambda16().gram);
        assert_eq!(build_gaussian("Lambda_{1,1}").unwrap().gram, named::lambda11().gram);
        assert!(build_gaussian("(1)").is_err());
        assert!(build_gaussian("L7").is_err());
    }
}
