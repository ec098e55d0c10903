//! Chebyshev polynomials of both kinds and the rank checks tying them to the
//! projector decompositions.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{AtlError, Result};
use crate::projectors::{extremal, extremal_tensor, iso_diff, iso_equal, split_idempotent, twist_equivariant, IsoPair};
use crate::rep::phi;
use crate::verify::Report;

/// Integer polynomial in `X`, lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigInt::from(c)])
    }

    pub fn x() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(BigInt, BigInt) -> BigInt) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| f(self.coeff(k), rhs.coeff(k))).collect())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "X".to_string(),
                (1, false) => format!("{mag}X"),
                (_, true) => format!("X^{k}"),
                (_, false) => format!("{mag}X^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `p_m = X p_{m-1} - p_{m-2}` from the two given starting values.
fn chebyshev(p0: IntPolynomial, m: usize) -> IntPolynomial {
    let x = IntPolynomial::x();
    let (mut a, mut b) = (p0, x.clone());
    if m == 0 {
        return a;
    }
    for _ in 1..m {
        let next = &(&x * &b) - &a;
        a = std::mem::replace(&mut b, next);
    }
    b
}

/// First kind: `L_0 = 2`, `L_1 = X`.
pub fn cheb_first(m: usize) -> IntPolynomial {
    chebyshev(IntPolynomial::constant(2), m)
}

/// Second kind: `J_0 = 1`, `J_1 = X`.
pub fn cheb_second(m: usize) -> IntPolynomial {
    chebyshev(IntPolynomial::constant(1), m)
}

/// `L_m L_n = L_{m+n} + L_{|m-n|}` and
/// `J_m J_n = J_{m+n} + J_{m+n-2} + ... + J_{|m-n|}`.
pub fn verify_mult(m: usize, n: usize) -> bool {
    let first = &cheb_first(m) * &cheb_first(n) == &cheb_first(m + n) + &cheb_first(m.abs_diff(n));
    let sum = (0..=m.min(n)).fold(IntPolynomial::default(), |acc, k| &acc + &cheb_second(m + n - 2 * k));
    first && &cheb_second(m) * &cheb_second(n) == sum
}

/// `J_m = L_m + J_{m-2}` for `m >= 2`.
pub fn verify_basis_change(m: usize) -> Result<bool> {
    if m < 2 {
        return Err(AtlError::Range(format!("basis change holds from m = 2, got {m}")));
    }
    Ok(cheb_second(m) == &cheb_first(m) + &cheb_second(m - 2))
}

/// The recursion, both multiplication rules and the basis change for all
/// indices up to `max`.
pub fn chebyshev_report(max: usize) -> Report {
    let mut r = Report::new();
    let x = IntPolynomial::x();
    let mut rec = true;
    for m in 2..=max {
        rec &= cheb_first(m) == &(&x * &cheb_first(m - 1)) - &cheb_first(m - 2);
        rec &= cheb_second(m) == &(&x * &cheb_second(m - 1)) - &cheb_second(m - 2);
    }
    r.flag(format!("recursions up to {max}"), rec);
    let mult = (0..=max).all(|m| (0..=max).all(|n| verify_mult(m, n)));
    r.flag(format!("multiplication rules up to {max}"), mult);
    let change = (2..=max).all(|m| verify_basis_change(m).unwrap_or(false));
    r.flag(format!("J_m = L_m + J_m-2 up to {max}"), change);
    r
}

/// The decomposition `T_m ⊗ T_n = T_{m+n} + e_{m,n}` behind
/// `L_m L_n = L_{m+n} + L_{|m-n|}`, checked through ranks.
pub fn decat_check(m: usize, n: usize) -> Result<Report> {
    if m == 0 || n == 0 {
        return Err(AtlError::Range(format!("decategorification needs m, n >= 1, got {m}, {n}")));
    }
    let mut r = Report::new();
    let x = extremal_tensor(m, n);
    let t = extremal(m + n);
    let e = split_idempotent(m, n)?;
    r.ess_eq(format!("T_{m}(x)T_{n} = T_{} + e_{m},{n}", m + n), &x, &(&*t + &*e))?;
    let (rx, rt, re) = (phi(&x)?.rank(), phi(&t)?.rank(), phi(&e)?.rank());
    r.push(
        format!("rank {m},{n}: {rx} = {rt} + {re}"),
        rx == rt + re && rx == 4,
        format!("ranks {rx} {rt} {re}"),
    );
    let lower = if m == n { 2 } else { phi(&extremal(m.abs_diff(n)))?.rank() };
    r.push(format!("rank e_{m},{n} = {lower}"), re == lower, format!("rank {re}"));
    r.flag(format!("L_{m} L_{n} = L_{} + L_{}", m + n, m.abs_diff(n)), verify_mult(m, n));
    Ok(r)
}

/// Checks that `φ` of `T_m`, `e_{m,n}` and the `D`-twisted isomorphism data
/// commute with the global sign flip.
pub fn symmetric_report(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for m in 1..=max {
        let w = phi(&extremal(m))?;
        r.map_eq(format!("flip T_{m}"), &w.s2_conjugate(), &w);
        for n in 1..=m {
            let w = phi(&*split_idempotent(m, n)?)?;
            r.map_eq(format!("flip e_{m},{n}"), &w.s2_conjugate(), &w);
            let isos: Vec<(String, IsoPair)> = if m != n {
                vec![(format!("iso {m},{n}"), iso_diff(m, n)?)]
            } else {
                let (a, b) = iso_equal(m)?;
                vec![(format!("iso_1 {m},{m}"), a), (format!("iso_2 {m},{m}"), b)]
            };
            for (name, iso) in isos {
                match twist_equivariant(&iso)? {
                    Some((k, twisted)) => {
                        r.flag(format!("flip-fixed D^{k} {name}"), true);
                        r.extend(twisted.check(&format!("D^{k} {name}"))?);
                    }
                    None => r.push(format!("flip-fixed {name}"), false, "no power of D works"),
                }
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_polynomials() {
        assert_eq!(cheb_first(0).to_string(), "2");
        assert_eq!(cheb_first(1).to_string(), "X");
        assert_eq!(cheb_first(2).to_string(), "X^2-2");
        assert_eq!(cheb_second(2).to_string(), "X^2-1");
        assert_eq!(cheb_first(4).to_string(), "X^4-4X^2+2");
        assert_eq!(IntPolynomial::default().to_string(), "0");
    }

    #[test]
    fn identities() {
        assert_eq!(&cheb_first(2) * &cheb_first(3), &cheb_first(5) + &cheb_first(1));
        assert_eq!(&cheb_second(1) * &cheb_second(1), &cheb_second(2) + &cheb_second(0));
        assert!(verify_basis_change(4).unwrap());
        assert!(verify_basis_change(1).is_err());
        assert!(chebyshev_report(12).passed());
    }

    #[test]
    fn symmetric_small() {
        let r = symmetric_report(2).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn ranks() {
        for (m, n) in [(1, 1), (2, 1), (2, 2)] {
            let r = decat_check(m, n).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
