//! Canonical bases of `hom(0, 2n)` through in/out labelings, the transport
//! isomorphisms to those spaces, coordinates and semantic equality.

use std::fmt;
use std::str::FromStr;

use crate::diagram::{nested_cap, nested_cup, AnnularDiagram, Morphism, Point};
use crate::error::{AtlError, Result};
use crate::rep::{phi, solve_columns, SignString};
use crate::scalar::GaussianRational as Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    In,
    Out,
}

/// A balanced labeling of the outer boundary points `O_0 .. O_{2n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelString(Vec<Label>);

impl LabelString {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        let ins = labels.iter().filter(|l| **l == Label::In).count();
        if 2 * ins != labels.len() {
            return Err(AtlError::Range(format!("{ins} of {} labels are `in`", labels.len())));
        }
        Ok(LabelString(labels))
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All balanced labelings of length `two_n`, in lexicographic order with
    /// `in < out`.
    pub fn all(two_n: usize) -> Result<Vec<LabelString>> {
        if two_n % 2 != 0 {
            return Err(AtlError::Range(format!("odd boundary size {two_n}")));
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(two_n);
        fn go(cur: &mut Vec<Label>, ins: usize, outs: usize, half: usize, out: &mut Vec<LabelString>) {
            if ins == half && outs == half {
                out.push(LabelString(cur.clone()));
                return;
            }
            if ins < half {
                cur.push(Label::In);
                go(cur, ins + 1, outs, half, out);
                cur.pop();
            }
            if outs < half {
                cur.push(Label::Out);
                go(cur, ins, outs + 1, half, out);
                cur.pop();
            }
        }
        go(&mut cur, 0, 0, two_n / 2, &mut out);
        Ok(out)
    }
}

impl fmt::Display for LabelString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Label::In => "i",
                Label::Out => "o",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LabelString {
    type Err = AtlError;
    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .chars()
            .map(|c| match c {
                'i' => Ok(Label::In),
                'o' => Ok(Label::Out),
                _ => Err(AtlError::parse(s, "labels are `i` or `o`")),
            })
            .collect::<Result<Vec<_>>>()?;
        LabelString::new(labels)
    }
}

/// Joins every `in` to the `out` reached first clockwise with all points in
/// between already joined. Arcs passing the base point cross the seam once;
/// they are nested with the longest one innermost.
pub fn matching_from_labels(ls: &LabelString) -> AnnularDiagram {
    let n = ls.len();
    let mut arcs = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    let mut lone_outs: Vec<usize> = Vec::new();
    for (p, l) in ls.0.iter().enumerate() {
        match l {
            Label::In => open.push(p),
            Label::Out => match open.pop() {
                Some(a) => arcs.push((Point::O(a as u32), Point::O(p as u32))),
                None => lone_outs.push(p),
            },
        }
    }
    let r = open.len();
    for (t, &a) in open.iter().enumerate() {
        let b = lone_outs[r - 1 - t];
        arcs.push((Point::O(a as u32), Point::R(t as u32)));
        arcs.push((Point::L(t as u32), Point::O(b as u32)));
    }
    AnnularDiagram::new(0, n, r, 0, arcs).expect("labelled matching is canonical")
}

/// Inverse of [`matching_from_labels`].
pub fn labels_from_matching(d: &AnnularDiagram) -> Result<LabelString> {
    if d.dom() != 0 || d.ess() != 0 {
        return Err(AtlError::InvalidDiagram(format!("{d} is not a basis diagram of hom(0, n)")));
    }
    let mut labels = vec![Label::Out; d.cod()];
    for s in d.strands() {
        let (Point::O(a), Point::O(b)) = s.ends else {
            return Err(AtlError::InvalidDiagram(format!("{d} has a strand {:?}", s.ends)));
        };
        match s.crossings.as_slice() {
            [] => labels[a.min(b) as usize] = Label::In,
            // The end attached to a right seam copy starts the clockwise arc.
            [(_, w)] => labels[if *w < 0 { b } else { a } as usize] = Label::In,
            _ => return Err(AtlError::InvalidDiagram(format!("{d} winds more than once"))),
        }
    }
    LabelString::new(labels)
}

/// The `⟮2n choose n⟯` canonical basis diagrams of `hom(0, 2n)`.
pub fn enumerate_basis(two_n: usize) -> Result<Vec<AnnularDiagram>> {
    Ok(LabelString::all(two_n)?.iter().map(matching_from_labels).collect())
}

/// Transports `X : r -> m` to `(X ⊗ id_r) Cu_r : 0 -> m + r`.
pub fn f_apply(x: &Morphism) -> Morphism {
    let r = x.dom();
    let cup = nested_cup(r).with_mode(x.mode());
    (&x.iota_n(r) * &cup).reduce()
}

/// Transports `Y : 0 -> 2n` back to `(id_m ⊗ Ca_r)(Y ⊗ id_r) : r -> m`.
pub fn f_inverse(y: &Morphism, m: usize) -> Result<Morphism> {
    if y.dom() != 0 || m > y.cod() {
        return Err(AtlError::Arity(format!("cannot transport hom({},{}) to codomain {m}", y.dom(), y.cod())));
    }
    let r = y.cod() - m;
    let cap = nested_cap(r).with_mode(y.mode()).iota_prime_n(m);
    Ok((&cap * &y.iota_n(r)).reduce())
}

/// Coordinates of `X` in the transported basis, ordered by label string.
pub fn coordinates(x: &Morphism) -> Result<Vec<Q>> {
    let total = x.dom() + x.cod();
    if total % 2 != 0 {
        return Ok(Vec::new());
    }
    let empty = SignString::new(0, 0);
    let basis = enumerate_basis(total)?;
    let cols = basis
        .iter()
        .map(|b| Ok(phi(&Morphism::from_diagram(b.clone(), x.mode()))?.column(empty)))
        .collect::<Result<Vec<_>>>()?;
    let rhs = phi(&f_apply(x))?.column(empty);
    solve_columns(&cols, &rhs)
}

/// Equality in the quotient, decided by the weight functor.
pub fn ess_equal(x: &Morphism, y: &Morphism) -> Result<bool> {
    if (x.dom(), x.cod()) != (y.dom(), y.cod()) {
        return Err(AtlError::Arity(format!(
            "comparing hom({},{}) with hom({},{})",
            x.dom(),
            x.cod(),
            y.dom(),
            y.cod()
        )));
    }
    Ok(phi(x)? == phi(y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{gen_cup, gen_d, gen_u, Mode};
    use num_traits::{One, Zero};

    fn q(s: &str) -> Q {
        s.parse().unwrap()
    }

    #[test]
    fn basis_sizes() {
        for (two_n, count) in [(0, 1), (2, 2), (4, 6), (6, 20), (8, 70)] {
            let b = enumerate_basis(two_n).unwrap();
            assert_eq!(b.len(), count);
            let mut sorted = b.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), count);
        }
        assert!(enumerate_basis(3).is_err());
    }

    #[test]
    fn labels_roundtrip() {
        for two_n in (0..=8).step_by(2) {
            for ls in LabelString::all(two_n).unwrap() {
                assert_eq!(labels_from_matching(&matching_from_labels(&ls)).unwrap(), ls);
            }
        }
    }

    #[test]
    fn two_point_diagrams() {
        let w1 = matching_from_labels(&"io".parse().unwrap());
        let w2 = matching_from_labels(&"oi".parse().unwrap());
        let cup = gen_cup(0, 0).unwrap();
        assert_eq!(Morphism::from_diagram(w1, Mode::Quotient), cup);
        assert_eq!(Morphism::from_diagram(w2, Mode::Quotient), &gen_d(2, 1).unwrap() * &cup);
    }

    #[test]
    fn coordinates_of_wraps() {
        let dd = gen_d(1, 1).unwrap().pow(2);
        assert_eq!(coordinates(&dd).unwrap(), vec![q("-1"), Q::zero()]);
        let u0 = gen_u(2, 0).unwrap();
        let conj = &(&gen_d(2, 1).unwrap() * &gen_u(2, 1).unwrap()) * &gen_d(2, -1).unwrap();
        assert_eq!(coordinates(&u0).unwrap(), coordinates(&conj).unwrap());
        assert!(coordinates(&Morphism::zero(1, 2, Mode::Quotient)).unwrap().is_empty());
    }

    #[test]
    fn transport_inverts() {
        let u1 = gen_u(2, 1).unwrap();
        assert!(ess_equal(&f_inverse(&f_apply(&u1), 2).unwrap(), &u1).unwrap());
        let x = &gen_d(3, -1).unwrap() * &gen_u(3, 0).unwrap();
        assert!(ess_equal(&f_inverse(&f_apply(&x), 3).unwrap(), &x).unwrap());
        let f = f_apply(&Morphism::identity(1));
        assert_eq!(f.len(), 1);
        assert_eq!(f.coeff(f.terms().keys().next().unwrap()), Q::one());
    }

    #[test]
    fn quotient_equalities() {
        let d = gen_d(1, 1).unwrap();
        let minus_id = Morphism::identity(1).scale(&q("-1"));
        assert!(ess_equal(&d.pow(2), &minus_id).unwrap());
        assert!(ess_equal(&d, &gen_d(1, -1).unwrap().scale(&q("-1"))).unwrap());
        assert!(!ess_equal(&gen_u(2, 1).unwrap(), &gen_u(2, 0).unwrap()).unwrap());
        assert!(ess_equal(&d, &Morphism::identity(2)).is_err());
    }
}
