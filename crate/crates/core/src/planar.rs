//! The planar Temperley-Lieb sublayer: Jones-Wenzl projectors and their
//! partial trace and splitting identities.

use crate::diagram::{gen_cap, gen_cup, gen_u, crossing, Morphism};
use crate::error::{AtlError, Result};
use crate::projectors::{jones_wenzl, IsoPair};
use crate::rep::phi;
use crate::scalar::GaussianRational as Q;
use crate::verify::Report;

/// True iff every term has no seam crossings and no essential circles.
pub fn is_planar(x: &Morphism) -> bool {
    x.is_planar()
}

fn need(m: usize, lo: usize) -> Result<()> {
    if m < lo {
        return Err(AtlError::Range(format!("index {m} below {lo}")));
    }
    Ok(())
}

/// `pTr(P_m) = -((m+1)/m) P_{m-1}`.
pub fn jw_partial_trace_check(m: usize) -> Result<bool> {
    need(m, 2)?;
    let lhs = jones_wenzl(m)?.partial_trace()?;
    let k = m as i64;
    let rhs = jones_wenzl(m - 1)?.scale(&Q::ratio(-(k + 1), k));
    Ok(lhs == rhs)
}

/// The maps between `P_{m-1}` and the cap-cup summand of `P_m ⊗ P_1`:
/// `fwd = -(m/(m+1)) ι(P_m) cup`, `bwd = cap ι(P_m)`.
pub fn jw_iso(m: usize) -> Result<IsoPair> {
    need(m, 2)?;
    let k = m as i64;
    let ip = jones_wenzl(m)?.iota();
    let fwd = (&ip * &gen_cup(m - 1, m - 1)?).scale(&Q::ratio(-k, k + 1));
    let bwd = &gen_cap(m + 1, m - 1)? * &ip;
    let summand = &ip - &*jones_wenzl(m + 1)?;
    Ok(IsoPair { src_idem: summand, tgt_idem: (*jones_wenzl(m - 1)?).clone(), fwd, bwd })
}

/// Checks both contracts of [`jw_iso`] exactly, together with the splitting
/// `P_m ⊗ P_1 = P_{m+1} + fwd ∘ bwd` into orthogonal idempotents.
pub fn jw_k0_report(m: usize) -> Result<Report> {
    let iso = jw_iso(m)?;
    let mut r = Report::new();
    r.syn_eq(format!("P_{m} iso bwd*fwd = P_{}", m - 1), &(&iso.bwd * &iso.fwd), &iso.tgt_idem);
    r.syn_eq(format!("P_{m} iso fwd*bwd = P_{m}(x)P_1 - P_{}", m + 1), &(&iso.fwd * &iso.bwd), &iso.src_idem);
    let e = &iso.src_idem;
    r.syn_eq(format!("P_{m} summand idempotent"), &(e * e), e);
    let p = jones_wenzl(m + 1)?;
    r.flag(format!("P_{m} summand orthogonal to P_{}", m + 1), (e * &*p).is_zero() && (&*p * e).is_zero());
    Ok(r)
}

pub fn jw_k0_check(m: usize) -> Result<bool> {
    Ok(jw_k0_report(m)?.passed())
}

/// Idempotency, annihilation by every `U_i`, crossing absorption and the
/// rank of the image.
pub fn jw_properties(m: usize) -> Result<Report> {
    let p = jones_wenzl(m)?;
    let mut r = Report::new();
    r.flag(format!("P_{m} planar"), p.is_planar());
    r.syn_eq(format!("P_{m}^2 = P_{m}"), &(&*p * &*p), &p);
    for i in 1..m as i64 {
        let u = gen_u(m, i)?;
        r.flag(format!("P_{m} U_{i} = 0 = U_{i} P_{m}"), (&*p * &u).is_zero() && (&u * &*p).is_zero());
        let s = crossing(m, i)?;
        r.flag(format!("s_{i} P_{m} = P_{m} = P_{m} s_{i}"), &s * &*p == *p && &*p * &s == *p);
    }
    let rank = phi(&p)?.rank();
    r.push(format!("rank P_{m} = {}", m + 1), rank == m + 1, format!("rank {rank}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planarity() {
        assert!(is_planar(&gen_u(2, 1).unwrap()));
        assert!(!is_planar(&gen_u(2, 0).unwrap()));
        assert!(!is_planar(&crate::projectors::extremal(2)));
        assert!(is_planar(&jones_wenzl(4).unwrap()));
    }

    #[test]
    fn partial_trace_ratio() {
        let lhs = jones_wenzl(2).unwrap().partial_trace().unwrap();
        assert_eq!(lhs, Morphism::identity(1).scale(&Q::ratio(-3, 2)));
        for m in 2..=5 {
            assert!(jw_partial_trace_check(m).unwrap(), "m={m}");
        }
        assert!(jw_partial_trace_check(1).is_err());
    }

    #[test]
    fn splitting() {
        for m in 2..=4 {
            let r = jw_k0_report(m).unwrap();
            assert!(r.passed(), "{r}");
            let r = jw_properties(m).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
