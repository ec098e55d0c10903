use std::str::FromStr;

use num_integer::binomial;

use crate::canon::{ess_equal, LabelString, enumerate_basis};
use crate::cheb::{chebyshev_report, decat_check, symmetric_report};
use crate::diagram::{crossing, essential_circles, gen_cap, gen_cup, gen_d, gen_u, AnnularDiagram, Mode, Morphism};
use crate::error::{AtlError, Result};
use crate::planar::{jw_k0_report, jw_partial_trace_check, jw_properties};
use crate::projectors::{
    extremal, highest, iso_diff, iso_equal_report, kariso_check, linked_check, lowest,
    nested_form_check, overlap_check, split_idempotent, verify_properties, JW_MAX,
};
use crate::rep::{phi, rank_of_columns, SignString, WeightMap};
use crate::scalar::GaussianRational as Q;

use super::Report;

/// The named suites driven by `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Presentation,
    Reidemeister,
    Welldef,
    Faithfulness,
    Technical,
    Ptr,
    Product,
    K0,
    Chebyshev,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 10] = [
        "presentation",
        "reidemeister",
        "welldef",
        "faithfulness",
        "technical",
        "ptr",
        "product",
        "k0",
        "chebyshev",
        "all",
    ];

    pub fn run(self, max: usize) -> Result<Report> {
        match self {
            Suite::Presentation => presentation(max),
            Suite::Reidemeister => reidemeister(max),
            Suite::Welldef => welldef(max),
            Suite::Faithfulness => faithfulness(max),
            Suite::Technical => technical(max),
            Suite::Ptr => ptr(max),
            Suite::Product => product(max),
            Suite::K0 => k0(max),
            Suite::Chebyshev => Ok(chebyshev_report(max)),
            Suite::All => all(max),
        }
    }
}

impl FromStr for Suite {
    type Err = AtlError;
    fn from_str(s: &str) -> Result<Self> {
        let all = [
            Suite::Presentation,
            Suite::Reidemeister,
            Suite::Welldef,
            Suite::Faithfulness,
            Suite::Technical,
            Suite::Ptr,
            Suite::Product,
            Suite::K0,
            Suite::Chebyshev,
            Suite::All,
        ];
        Suite::NAMES
            .iter()
            .position(|n| *n == s)
            .map(|i| all[i])
            .ok_or_else(|| AtlError::parse(s, "unknown suite"))
    }
}

fn u(n: usize, i: i64) -> Result<Morphism> {
    gen_u(n, i)
}

/// Cyclic distance between two indices mod `n`.
fn dist(i: i64, j: i64, n: usize) -> i64 {
    let d = (i - j).rem_euclid(n as i64);
    d.min(n as i64 - d)
}

/// The defining relations of the affine generators, indices mod `n`, for
/// `2 <= n <= max`.
pub fn presentation(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for n in 2..=max {
        let ni = n as i64;
        let id = Morphism::identity(n);
        let (d, dinv) = (gen_d(n, 1)?, gen_d(n, -1)?);
        r.syn_eq(format!("n={n} D D^-1 = id"), &(&d * &dinv), &id);
        r.syn_eq(format!("n={n} D^-1 D = id"), &(&dinv * &d), &id);
        for i in 0..ni {
            let ui = u(n, i)?;
            r.syn_eq(format!("n={n} U_{i}^2 = -2U_{i}"), &(&ui * &ui), &ui.scale(&Q::int(-2)));
            r.syn_eq(format!("n={n} U_{i} D = D U_{}", (i + 1) % ni), &(&ui * &d), &(&d * &u(n, i + 1)?));
            if n < 3 {
                continue;
            }
            for j in [i - 1, i + 1] {
                let uj = u(n, j)?;
                let j = j.rem_euclid(ni);
                r.syn_eq(format!("n={n} U_{i} U_{j} U_{i} = U_{i}"), &(&(&ui * &uj) * &ui), &ui);
            }
            for j in i + 1..ni {
                if dist(i, j, n) >= 2 {
                    let uj = u(n, j)?;
                    r.syn_eq(format!("n={n} U_{i} U_{j} = U_{j} U_{i}"), &(&ui * &uj), &(&uj * &ui));
                }
            }
        }
    }
    Ok(r)
}

/// The curl, the double crossing and the braid relation, embedded among
/// bystander strands in up to `max` strands.
pub fn reidemeister(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for n in 1..max {
        // Closing the last strand of the crossing on the last two strands.
        let curl = crossing(n + 1, n as i64)?.partial_trace()?;
        r.syn_eq(format!("R1 on {n}+1 strands"), &curl, &Morphism::identity(n).scale(&Q::int(-1)));
    }
    for n in 2..=max {
        let id = Morphism::identity(n);
        for i in 0..n as i64 {
            let s = crossing(n, i)?;
            r.syn_eq(format!("R2 n={n} s_{i}^2 = id"), &(&s * &s), &id);
            if n >= 3 {
                let t = crossing(n, i + 1)?;
                r.syn_eq(
                    format!("R3 n={n} s_{i} s_{} s_{i} = s_{} s_{i} s_{}", i + 1, i + 1, i + 1),
                    &(&(&s * &t) * &s),
                    &(&(&t * &s) * &t),
                );
            }
        }
        if n >= 2 {
            let lhs = gen_d(n - 1, 1)?.iota();
            let rhs = &crossing(n, n as i64 - 1)? * &gen_d(n, 1)?;
            r.syn_eq(format!("n={n} i(D) = s_{} D", n - 1), &lhs, &rhs);
        }
    }
    Ok(r)
}

/// `φ` respects isotoping a cap or a cup across the base point, with up to
/// `max` bystander strands, and `φ(D)`, `φ(D^-1)` are inverse.
pub fn welldef(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for w in 0..=max {
        let n = w + 2;
        let lhs = phi(&(&gen_cap(n, n - 2)? * &gen_d(n, 1)?))?;
        let rhs = phi(&(&gen_cap(n, 0)? * &gen_d(n, -1)?))?;
        r.map_eq(format!("cap across base point, {w} bystanders"), &lhs, &rhs);
        let lhs = phi(&(&gen_d(n, 1)? * &gen_cup(w, 0)?))?;
        let rhs = phi(&(&gen_d(n, -1)? * &gen_cup(w, w)?))?;
        r.map_eq(format!("cup across base point, {w} bystanders"), &lhs, &rhs);
        let dd = phi(&gen_d(n, 1)?)?.mul(&phi(&gen_d(n, -1)?)?)?;
        r.map_eq(format!("phi(D) phi(D^-1) = id on {n}"), &dd, &WeightMap::identity(n));
    }
    Ok(r)
}

/// Rank of the transported basis of `hom(0, 2n)` for `1 <= n <= max`, with
/// the quotient relations and the label bijection.
pub fn faithfulness(max: usize) -> Result<Report> {
    let mut r = Report::new();
    let empty = SignString::new(0, 0);
    for n in 1..=max {
        let basis = enumerate_basis(2 * n)?;
        let cols = basis
            .iter()
            .map(|b| Ok(phi(&Morphism::from_diagram(b.clone(), Mode::Quotient))?.column(empty)))
            .collect::<Result<Vec<_>>>()?;
        let want = binomial(2 * n, n);
        let rank = rank_of_columns(&cols);
        r.push(
            format!("n={n} rank {rank} of {want}"),
            rank == want && basis.len() == want,
            format!("{} diagrams", basis.len()),
        );
        let labels = LabelString::all(2 * n)?;
        let back = basis
            .iter()
            .map(crate::canon::labels_from_matching)
            .collect::<Result<Vec<_>>>()?;
        r.flag(format!("n={n} labels round trip"), back == labels);
    }
    r.extend(quotient(max)?);
    Ok(r)
}

/// `φ` kills the essential circle on up to `max` strands, and `D^2 = -id_1`.
pub fn quotient(max: usize) -> Result<Report> {
    let mut r = Report::new();
    let circle = Morphism::from_diagram(AnnularDiagram::circles(1), Mode::Raw);
    r.flag("phi(essential circle) = 0", phi(&circle)?.is_zero());
    for k in 1..=max {
        r.flag(format!("phi(essential circle on {k} strands) = 0"), phi(&essential_circles(1, k))?.is_zero());
    }
    let dd = gen_d(1, 1)?.pow(2);
    r.flag("D^2 = -id_1", ess_equal(&dd, &Morphism::identity(1).scale(&Q::int(-1)))?);
    r.flag("D = -D^-1", ess_equal(&gen_d(1, 1)?, &gen_d(1, -1)?.scale(&Q::int(-1)))?);
    Ok(r)
}

/// `φ(T_m)` against the two-entry diagonal, the five projector properties
/// and the highest and lowest weight splitting.
pub fn technical(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for m in 1..=max {
        r.map_eq(format!("phi(T_{m}) extremal"), &phi(&extremal(m))?, &WeightMap::extremal_matrix(m));
    }
    for m in 2..=max {
        r.extend(verify_properties(m)?);
    }
    for m in 2..=max {
        r.extend(weight_split(m)?);
    }
    Ok(r)
}

/// `T_{+^m}` and `T_{-^m}` are the projectors onto `v_{+^m}`, `v_{-^m}`,
/// sum to `T_m` and are exchanged by the sign flip.
pub fn weight_split(m: usize) -> Result<Report> {
    let mut r = Report::new();
    let (h, l) = (phi(&*highest(m)?)?, phi(&*lowest(m)?)?);
    r.map_eq(format!("phi(T_+^{m}) = v_+ projector"), &h, &WeightMap::unit_projector(SignString::all_plus(m)));
    r.map_eq(format!("phi(T_-^{m}) = v_- projector"), &l, &WeightMap::unit_projector(SignString::all_minus(m)));
    r.ess_eq(format!("T_+^{m} + T_-^{m} = T_{m}"), &(&*highest(m)? + &*lowest(m)?), &extremal(m))?;
    r.map_eq(format!("flip T_+^{m} = T_-^{m}"), &h.s2_conjugate(), &l);
    Ok(r)
}

/// `pTr(T_m) = -T_{m-1}` with `T_0 = 2 id_0`, and the planar ratio
/// `-(m+1)/m`.
pub fn ptr(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for m in 1..=max {
        let lhs = extremal(m).partial_trace()?.reduce();
        r.ess_eq(format!("pTr(T_{m}) = -T_{}", m - 1), &lhs, &extremal(m - 1).scale(&Q::int(-1)))?;
    }
    for m in 2..=max.min(JW_MAX) {
        r.flag(format!("pTr(P_{m}) = -({}/{m}) P_{}", m + 1, m - 1), jw_partial_trace_check(m)?);
    }
    Ok(r)
}

/// The product formula on every cell `1 <= n <= m <= max`, with the
/// supporting lemmas on the smallest cells.
pub fn product(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for m in 1..=max {
        for n in 1..=m {
            r.extend(product_cell(m, n)?);
        }
    }
    if max >= 2 {
        r.flag("linked T_2 T_1", linked_check(2, 1)?);
        r.flag("overlap 2,2,1", overlap_check(2, 2, 1)?);
        r.flag("nested form 2,1,1", nested_form_check(2, 1, 1)?);
        r.flag("cap sliding 2,1", kariso_check(2, 1)?);
        r.flag("cap sliding 2,2", kariso_check(2, 2)?);
    }
    if max >= 3 {
        r.flag("linked T_2 T_2", linked_check(2, 2)?);
        r.flag("overlap 3,2,1", overlap_check(3, 2, 1)?);
        r.flag("nested form 3,2,1", nested_form_check(3, 2, 1)?);
        r.flag("cap sliding 3,2", kariso_check(3, 2)?);
    }
    Ok(r)
}

/// One cell of the product formula: the decomposition and its ranks,
/// orthogonality and the isomorphism contracts. Idempotency of `e_{m,n}`
/// follows from the first two.
pub fn product_cell(m: usize, n: usize) -> Result<Report> {
    let mut r = decat_check(m, n)?;
    let t = extremal(m + n);
    let e = split_idempotent(m, n)?;
    let zero = Morphism::zero(m + n, m + n, Mode::Quotient);
    r.ess_eq(format!("T_{} e_{m},{n} = 0", m + n), &(&*t * &*e).reduce(), &zero)?;
    r.ess_eq(format!("e_{m},{n} T_{} = 0", m + n), &(&*e * &*t).reduce(), &zero)?;
    if m != n {
        r.extend(iso_diff(m, n)?.check(&format!("iso {m},{n}"))?);
        r.extend(iso_diff(n, m)?.check(&format!("iso {n},{m}"))?);
    } else if m <= 3 {
        r.extend(iso_equal_report(m)?);
    }
    Ok(r)
}

/// The planar splitting `[P_m][P_1] = [P_{m+1}] + [P_{m-1}]`, the
/// Jones-Wenzl properties and the flip-symmetric form of the annular data.
pub fn k0(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for m in 1..=max.min(JW_MAX) {
        r.extend(jw_properties(m)?);
    }
    for m in 2..=max.min(JW_MAX - 1) {
        r.extend(jw_k0_report(m)?);
    }
    r.extend(symmetric_report(max.min(4))?);
    Ok(r)
}

/// Every suite at the same bound.
pub fn all(max: usize) -> Result<Report> {
    let mut r = Report::new();
    for f in [presentation, reidemeister, welldef, faithfulness, technical, ptr, product, k0] {
        r.extend(f(max)?);
    }
    r.extend(chebyshev_report(max));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites() {
        for s in ["presentation", "reidemeister", "welldef", "faithfulness", "technical", "ptr", "product", "k0", "chebyshev"] {
            let r = s.parse::<Suite>().unwrap().run(2).unwrap();
            assert!(r.passed(), "{s}\n{r}");
            assert!(!r.checks.is_empty(), "{s}");
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
