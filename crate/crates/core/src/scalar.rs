//! Exact Gaussian rationals, the coefficient field Q(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AtlError;

/// `re + im*i` with both parts reduced rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self {
            re: BigRational::new(re_num.into(), re_den.into()),
            im: BigRational::new(im_num.into(), im_den.into()),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::from(n)
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_parts(num, den, 0, 1)
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    /// `i^k` for any integer k.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_inv(&self) -> Result<Self, AtlError> {
        if self.is_zero() {
            return Err(AtlError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, AtlError> {
        Ok(self * &other.checked_inv()?)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Least common multiple of the two denominators.
    pub fn denom_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.re.denom(), self.im.denom())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self { re: BigRational::one(), im: BigRational::zero() }
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self { re: BigRational::from_integer(n.into()), im: BigRational::zero() }
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational { re: &self.re * &o.re, im: BigRational::zero() };
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, o: &GaussianRational) -> GaussianRational {
        self * &o.inv()
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                self.$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, o: GaussianRational) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = BigRational::one();
        let imag = |r: &BigRational| -> String {
            if r.abs() == one {
                String::new()
            } else {
                fmt_rat(&r.abs())
            }
        };
        if self.im.is_zero() {
            return f.write_str(&fmt_rat(&self.re));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{lead}{}i", imag(&self.im));
        }
        write!(f, "{}{sign}{}i", fmt_rat(&self.re), imag(&self.im))
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(false)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    /// `int ("/" posint)?`, or None when no digits are present.
    fn rat(&mut self, text: &str) -> Result<Option<BigRational>, AtlError> {
        let Some(num) = self.digits() else { return Ok(None) };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.digits().ok_or_else(|| AtlError::parse(text, "missing denominator"))?;
            if den.is_zero() {
                return Err(AtlError::parse(text, "zero denominator"));
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }
}

impl FromStr for GaussianRational {
    type Err = AtlError;

    fn from_str(text: &str) -> Result<Self, AtlError> {
        let t = text.trim();
        let mut c = Cursor { s: t.as_bytes(), pos: 0 };
        let neg = |r: BigRational, n: bool| if n { -r } else { r };

        let s1 = c.sign().unwrap_or(false);
        let r1 = c.rat(t)?;
        let mut out = GaussianRational::zero();
        if c.peek() == Some(b'i') {
            c.pos += 1;
            out.im = neg(r1.unwrap_or_else(BigRational::one), s1);
        } else {
            let r1 = r1.ok_or_else(|| AtlError::parse(t, "expected a number"))?;
            out.re = neg(r1, s1);
            if let Some(s2) = c.sign() {
                let r2 = c.rat(t)?.unwrap_or_else(BigRational::one);
                if c.peek() != Some(b'i') {
                    return Err(AtlError::parse(t, "imaginary part must end in 'i'"));
                }
                c.pos += 1;
                out.im = neg(r2, s2);
            }
        }
        if c.pos != t.len() {
            return Err(AtlError::parse(t, "trailing characters"));
        }
        Ok(out)
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn basic_arith() {
        assert_eq!(GaussianRational::i() * GaussianRational::i(), g("-1"));
        assert_eq!(g("1/2") + g("1/2"), GaussianRational::one());
        assert_eq!(g("-i").inv(), GaussianRational::i());
        assert!(GaussianRational::zero().checked_inv().is_err());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(g("1/2+1/2i"), GaussianRational::from_parts(1, 2, 1, 2));
        assert_eq!(g("-2"), GaussianRational::int(-2));
        assert_eq!(g("3/4i"), GaussianRational::from_parts(0, 1, 3, 4));
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("1-i"), GaussianRational::from_parts(1, 1, -1, 1));
        assert_eq!(g("2/4"), GaussianRational::ratio(1, 2));
    }

    #[test]
    fn parse_rejects() {
        for bad in ["", "1/0", "1/", "x", "1+2", "1+2i3", "i2", "--1", "1/-2"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn format_forms() {
        for s in ["0", "-2", "1/2+1/2i", "3/4i", "-3/4i", "i", "-i", "1-i", "-7/3+i"] {
            assert_eq!(g(s).to_string(), s);
        }
    }
}
