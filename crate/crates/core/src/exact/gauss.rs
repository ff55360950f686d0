//! Gaussian integers `Z[i]` and the field `Q(i)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn one_plus_i() -> Self {
        GaussInt::new(1, 1)
    }

    pub fn from_int(n: BigInt) -> Self {
        GaussInt { re: n, im: BigInt::zero() }
    }

    pub fn conj(&self) -> Self {
        GaussInt { re: self.re.clone(), im: -&self.im }
    }

    /// Field norm `a^2 + b^2`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn units() -> [GaussInt; 4] {
        [GaussInt::new(1, 0), GaussInt::new(0, 1), GaussInt::new(-1, 0), GaussInt::new(0, -1)]
    }

    /// `self / d` when the quotient lies in `Z[i]`.
    pub fn exact_div(&self, d: &GaussInt) -> Option<GaussInt> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let num = self * &d.conj();
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussInt { re: qr, im: qi })
        } else {
            None
        }
    }

    pub fn divides(&self, x: &GaussInt) -> bool {
        x.exact_div(self).is_some()
    }

    /// Euclidean division with the quotient rounded to the nearest lattice point.
    pub fn div_rem_euclid(&self, d: &GaussInt) -> (GaussInt, GaussInt) {
        let n = d.norm();
        let num = self * &d.conj();
        let q = GaussInt { re: round_div(&num.re, &n), im: round_div(&num.im, &n) };
        let r = self - &(&q * d);
        (q, r)
    }

    /// Image in `Z[i]/(1+i) = F_2`.
    pub fn mod_one_plus_i(&self) -> bool {
        (&self.re + &self.im).is_odd()
    }

    pub fn mul_i(&self) -> GaussInt {
        GaussInt { re: -&self.im, im: self.re.clone() }
    }

    /// Order used for canonical representatives: by real part, then imaginary part.
    pub fn key(&self) -> (BigInt, BigInt) {
        (self.re.clone(), self.im.clone())
    }

    /// The associate `u * self` lying in the sector `re > 0, im >= 0` (or zero).
    pub fn normalize_associate(&self) -> (GaussInt, GaussInt) {
        if self.is_zero() {
            return (self.clone(), GaussInt::one());
        }
        for u in GaussInt::units() {
            let a = &u * self;
            if a.re.is_positive() && !a.im.is_negative() {
                return (a, u);
            }
        }
        unreachable!()
    }
}

fn round_div(a: &BigInt, n: &BigInt) -> BigInt {
    // floor((2a + n) / 2n)
    let two = BigInt::from(2);
    (&two * a + n).div_floor(&(&two * n))
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = if self.im.is_one() {
            "i".to_string()
        } else if self.im == -BigInt::one() {
            "-i".to_string()
        } else {
            format!("{}i", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{}", im)
        } else if self.im.is_negative() {
            write!(f, "{}{}", self.re, im)
        } else {
            write!(f, "{}+{}", self.re, im)
        }
    }
}

impl From<i64> for GaussInt {
    fn from(n: i64) -> Self {
        GaussInt::new(n, 0)
    }
}

impl From<BigInt> for GaussInt {
    fn from(n: BigInt) -> Self {
        GaussInt::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $ty:ty) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}

impl<'b> Add<&'b GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'b> Sub<&'b GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'b> Mul<&'b GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &'b GaussInt) -> GaussInt {
        GaussInt { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

forward_binop!(Add, add, GaussInt);
forward_binop!(Sub, sub, GaussInt);
forward_binop!(Mul, mul, GaussInt);

impl AddAssign<&GaussInt> for GaussInt {
    fn add_assign(&mut self, rhs: &GaussInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt { re: -&self.re, im: -&self.im }
    }
}

impl Zero for GaussInt {
    fn zero() -> Self {
        GaussInt::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussInt {
    fn one() -> Self {
        GaussInt::new(1, 0)
    }
}

/// Element of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<GaussRat> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(GaussRat { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn to_gauss_int(&self) -> Option<GaussInt> {
        if self.re.is_integer() && self.im.is_integer() {
            Some(GaussInt { re: self.re.to_integer(), im: self.im.to_integer() })
        } else {
            None
        }
    }
}

impl From<&GaussInt> for GaussRat {
    fn from(g: &GaussInt) -> Self {
        GaussRat { re: BigRational::from_integer(g.re.clone()), im: BigRational::from_integer(g.im.clone()) }
    }
}

impl<'b> Add<&'b GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'b> Sub<&'b GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'b> Mul<&'b GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &'b GaussRat) -> GaussRat {
        GaussRat { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

forward_binop!(Add, add, GaussRat);
forward_binop!(Sub, sub, GaussRat);
forward_binop!(Mul, mul, GaussRat);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat { re: BigRational::one(), im: BigRational::zero() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_and_division() {
        let a = GaussInt::new(1, 1);
        let b = GaussInt::new(1, -1);
        assert_eq!(&a * &b, GaussInt::new(2, 0));
        assert_eq!(GaussInt::new(2, 0).exact_div(&a), Some(b.clone()));
        assert_eq!(GaussInt::new(1, 0).exact_div(&a), None);
    }

    #[test]
    fn euclidean_remainder_is_small() {
        let a = GaussInt::new(17, -5);
        let d = GaussInt::new(3, 2);
        let (q, r) = a.div_rem_euclid(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.norm() < d.norm());
    }

    #[test]
    fn reduction_mod_one_plus_i() {
        assert!(!GaussInt::new(1, 1).mod_one_plus_i());
        assert!(GaussInt::new(1, 0).mod_one_plus_i());
        assert!(GaussInt::new(0, 1).mod_one_plus_i());
        assert!(!GaussInt::new(3, 5).mod_one_plus_i());
    }

    #[test]
    fn display() {
        assert_eq!(GaussInt::new(1, -1).to_string(), "1-i");
        assert_eq!(GaussInt::new(0, 2).to_string(), "2i");
        assert_eq!(GaussInt::new(-2, 0).to_string(), "-2");
    }
}

impl std::str::FromStr for GaussInt {
    type Err = crate::error::Error;

    /// Parses `3`, `-i`, `2i`, `1+i`, `-1-2i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || crate::error::Error::Parse(format!("bad Gaussian integer '{s}'"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        // split before a sign that is not leading
        let cut = t.char_indices().skip(1).find(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k);
        let (a, b) = match cut {
            Some(k) => (&t[..k], &t[k..]),
            None if t.ends_with('i') => ("", t.as_str()),
            None => (t.as_str(), ""),
        };
        let re: BigInt = if a.is_empty() { BigInt::zero() } else { a.parse().map_err(|_| bad())? };
        let im: BigInt = match b.strip_suffix('i') {
            None if b.is_empty() => BigInt::zero(),
            None => return Err(bad()),
            Some("") | Some("+") => BigInt::one(),
            Some("-") => -BigInt::one(),
            Some(x) => x.parse().map_err(|_| bad())?,
        };
        Ok(GaussInt { re, im })
    }
}

#[cfg(test)]
mod parse_tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for (s, re, im) in [("3", 3, 0), ("-i", 0, -1), ("2i", 0, 2), ("1+i", 1, 1), ("-1-2i", -1, -2), ("i", 0, 1)] {
            let z: GaussInt = s.parse().unwrap();
            assert_eq!(z, GaussInt::new(re, im));
            assert_eq!(z.to_string().parse::<GaussInt>().unwrap(), z);
        }
        assert!("1+".parse::<GaussInt>().is_err());
    }
}
