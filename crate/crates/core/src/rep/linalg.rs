//! Exact linear algebra over Q(i).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{AtlError, Result};
use crate::scalar::GaussianRational as Q;

/// Arbitrary-precision Gaussian integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn zero() -> Self {
        GaussInt { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn one() -> Self {
        GaussInt { re: BigInt::one(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    /// Exact quotient; panics if `o` does not divide `self`.
    fn div_exact(&self, o: &GaussInt) -> GaussInt {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        assert!(rr.is_zero() && ri.is_zero(), "inexact Gaussian division");
        GaussInt { re: qr, im: qi }
    }

    /// `q * scale` for a `scale` that clears the denominators of `q`.
    fn from_scaled(q: &Q, scale: &BigInt) -> GaussInt {
        let f = |r: &BigRational| -> BigInt {
            let v = r * BigRational::from_integer(scale.clone());
            debug_assert!(v.is_integer());
            v.to_integer()
        };
        GaussInt { re: f(q.re()), im: f(q.im()) }
    }
}

/// Rank of a set of sparse column vectors by fraction-free (Bareiss)
/// elimination over the Gaussian integers.
pub fn rank_of_columns(cols: &[BTreeMap<u64, Q>]) -> usize {
    let rows: Vec<u64> = cols.iter().flat_map(|c| c.keys().copied()).collect::<BTreeSet<_>>().into_iter().collect();
    if rows.is_empty() {
        return 0;
    }
    let index: BTreeMap<u64, usize> = rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    // Columns become rows of the working matrix.
    let mut m: Vec<Vec<GaussInt>> = cols
        .iter()
        .map(|c| {
            let scale = c.values().fold(BigInt::one(), |acc, q| acc.lcm(&q.denom_lcm()));
            let mut row = vec![GaussInt::zero(); rows.len()];
            for (r, q) in c {
                row[index[r]] = GaussInt::from_scaled(q, &scale);
            }
            row
        })
        .collect();
    bareiss_rank(&mut m)
}

fn bareiss_rank(m: &mut [Vec<GaussInt>]) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = GaussInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(p, r);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..ncols {
                let v = pivot_row[c].mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = v.div_exact(&prev);
            }
            row[c] = GaussInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Solves `sum_j x_j cols[j] = rhs` exactly; the solution must be unique.
pub fn solve_columns(cols: &[BTreeMap<u64, Q>], rhs: &BTreeMap<u64, Q>) -> Result<Vec<Q>> {
    let rows: Vec<u64> = cols
        .iter()
        .flat_map(|c| c.keys().copied())
        .chain(rhs.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<u64, usize> = rows.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let n = cols.len();
    // Augmented matrix, one row per coordinate.
    let mut a: Vec<Vec<Q>> = vec![vec![Q::zero(); n + 1]; rows.len()];
    for (j, c) in cols.iter().enumerate() {
        for (r, v) in c {
            a[index[r]][j] = v.clone();
        }
    }
    for (r, v) in rhs {
        a[index[r]][n] = v.clone();
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            return Err(AtlError::Singular(format!("column {c} is dependent")));
        };
        a.swap(p, r);
        let inv = a[r][c].inv();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return Err(AtlError::Singular("right-hand side outside the span".into()));
    }
    Ok((0..n).map(|j| a[j][n].clone()).collect())
}
