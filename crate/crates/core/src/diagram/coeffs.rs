//! Integer fast path for products of linear combinations: all coefficients
//! of a morphism are written over one common denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::scalar::GaussianRational as Q;

pub(crate) struct IntCoeffs {
    pub denom: BigInt,
    pub nums: Vec<(i128, i128)>,
}

impl IntCoeffs {
    /// None when a scaled numerator does not fit in 64 bits.
    pub fn new<'a>(coeffs: impl Iterator<Item = &'a Q> + Clone) -> Option<IntCoeffs> {
        let denom = coeffs.clone().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
        let d = BigRational::from_integer(denom.clone());
        let nums = coeffs
            .map(|c| {
                let re = (c.re() * &d).to_integer().to_i64()?;
                let im = (c.im() * &d).to_integer().to_i64()?;
                Some((re as i128, im as i128))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(IntCoeffs { denom, nums })
    }
}

/// `a * b * (-2)^loops`, None on overflow.
pub(crate) fn product(a: (i128, i128), b: (i128, i128), loops: usize) -> Option<(i128, i128)> {
    let re = a.0.checked_mul(b.0)?.checked_sub(a.1.checked_mul(b.1)?)?;
    let im = a.0.checked_mul(b.1)?.checked_add(a.1.checked_mul(b.0)?)?;
    let f = (-2i128).checked_pow(loops as u32)?;
    Some((re.checked_mul(f)?, im.checked_mul(f)?))
}

pub(crate) fn accumulate(acc: &mut (i128, i128), v: (i128, i128)) -> Option<()> {
    acc.0 = acc.0.checked_add(v.0)?;
    acc.1 = acc.1.checked_add(v.1)?;
    Some(())
}

pub(crate) fn to_q(v: (i128, i128), denom: &BigInt) -> Q {
    let d = denom.clone();
    Q::new(BigRational::new(BigInt::from(v.0), d.clone()), BigRational::new(BigInt::from(v.1), d))
}
