//! Parser for lattice expressions such as `(2)⊕A1^2⊕D4(2)` or `U+U(2)+E8`.

use crate::error::{Error, Result};
use crate::exact::matrix::{int, IntMatrix, Matrix};

use super::{root_lattice_gram, ZLattice};

/// Replace unicode subscripts, superscripts, minus signs and `⊕` by ASCII.
pub fn normalize(s: &str) -> String {
    let mut out = String::new();
    let mut in_sup = false;
    for c in s.chars() {
        let sub = "₀₁₂₃₄₅₆₇₈₉".chars().position(|x| x == c);
        let sup = "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|x| x == c);
        if let Some(d) = sup {
            if !in_sup {
                out.push('^');
                in_sup = true;
            }
            out.push(char::from(b'0' + d as u8));
            continue;
        }
        in_sup = false;
        match (sub, c) {
            (Some(d), _) => out.push(char::from(b'0' + d as u8)),
            (_, '⊕') => out.push('+'),
            (_, '−') => out.push('-'),
            (_, c) if c.is_whitespace() => {}
            (_, c) => out.push(c),
        }
    }
    out
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {} in '{}'", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn scale_suffix(&mut self) -> Result<Option<i64>> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let n = self.integer()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            Ok(Some(n))
        } else {
            Ok(None)
        }
    }

    fn atom(&mut self) -> Result<IntMatrix> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let n = self.integer()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(Matrix::from_rows(vec![vec![int(n)]]))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                let base = match c {
                    b'U' => crate::exact::matrix::int_matrix(&[&[0, 1], &[1, 0]]),
                    b'A' | b'D' | b'E' => {
                        let n = self.integer()?;
                        if n < 1 {
                            return Err(self.err("bad rank"));
                        }
                        root_lattice_gram(c as char, n as usize)?
                    }
                    _ => return Err(self.err("unknown lattice name")),
                };
                let scaled = match self.scale_suffix()? {
                    Some(k) => base.scale(&int(k)),
                    None => base,
                };
                Ok(scaled)
            }
            _ => Err(self.err("expected lattice")),
        }
    }

    fn term(&mut self) -> Result<Vec<IntMatrix>> {
        let a = self.atom()?;
        if self.eat(b'^') {
            let k = self.integer()?;
            if k < 1 {
                return Err(self.err("exponent must be positive"));
            }
            Ok(vec![a; k as usize])
        } else {
            Ok(vec![a])
        }
    }

    fn expr(&mut self) -> Result<IntMatrix> {
        let mut blocks = self.term()?;
        while self.eat(b'+') {
            blocks.extend(self.term()?);
        }
        if self.pos != self.s.len() {
            return Err(self.err("trailing input"));
        }
        Ok(Matrix::block_diag(&blocks))
    }
}

/// Build a lattice from an expression: `U`, `An`, `Dn`, `En`, `(k)`, `L(n)`, `L^k`
/// joined by `⊕` or `+`.
pub fn build_z(expr: &str) -> Result<ZLattice> {
    let norm = normalize(expr);
    let mut p = Parser { s: norm.as_bytes(), pos: 0 };
    let gram = p.expr()?;
    ZLattice::new(expr.trim(), gram)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sums_and_scalings() {
        let l = build_z("(2)⊕A₁²⊕D4(2)").unwrap();
        assert_eq!(l.rank(), 7);
        assert_eq!(l.gram[(0, 0)], int(2));
        assert_eq!(l.gram[(3, 3)], int(-4));
        assert_eq!(build_z("U+U(2)").unwrap().rank(), 4);
        assert_eq!(build_z("(−2)").unwrap().gram[(0, 0)], int(-2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(build_z("X3").is_err());
        assert!(build_z("A1+").is_err());
        assert!(build_z("(0)").is_err());
    }
}
