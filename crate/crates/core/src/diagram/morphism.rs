use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::coeffs::{self, IntCoeffs};
use super::{gen_d_diagram, AnnularDiagram, Canon, Cut};
use crate::error::{AtlError, Result};
use crate::scalar::GaussianRational as Q;

/// Whether essential circles vanish (`Quotient`) or are retained (`Raw`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Quotient,
    Raw,
}

impl std::str::FromStr for Mode {
    type Err = AtlError;
    fn from_str(s: &str) -> Result<Mode> {
        match s.to_ascii_lowercase().as_str() {
            "quotient" | "ess" => Ok(Mode::Quotient),
            "raw" => Ok(Mode::Raw),
            _ => Err(AtlError::parse(s, "mode must be quotient or raw")),
        }
    }
}

/// A finite linear combination of canonical diagrams with common boundary.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    dom: usize,
    cod: usize,
    mode: Mode,
    terms: BTreeMap<AnnularDiagram, Q>,
}

pub(crate) fn loop_factor(loops: usize) -> Q {
    assert!(loops < 62);
    Q::int((-2i64).pow(loops as u32))
}

impl Morphism {
    pub fn zero(dom: usize, cod: usize, mode: Mode) -> Self {
        Morphism { dom, cod, mode, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_in(n, Mode::Quotient)
    }

    pub fn identity_in(n: usize, mode: Mode) -> Self {
        Self::from_diagram(AnnularDiagram::identity(n), mode)
    }

    pub fn from_diagram(d: AnnularDiagram, mode: Mode) -> Self {
        let mut m = Self::zero(d.dom(), d.cod(), mode);
        m.add_term(d, Q::one());
        m
    }

    pub fn from_terms(dom: usize, cod: usize, mode: Mode, terms: impl IntoIterator<Item = (AnnularDiagram, Q)>) -> Result<Self> {
        let mut m = Self::zero(dom, cod, mode);
        for (d, c) in terms {
            if d.dom() != dom || d.cod() != cod {
                return Err(AtlError::Arity(format!("term {d} in hom({dom},{cod})")));
            }
            m.add_term(d, c);
        }
        Ok(m)
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Same terms read in another mode; essential terms are dropped when
    /// moving to the quotient.
    pub fn with_mode(&self, mode: Mode) -> Morphism {
        let mut m = Self::zero(self.dom, self.cod, mode);
        for (d, c) in &self.terms {
            m.add_term(d.clone(), c.clone());
        }
        m
    }

    pub fn terms(&self) -> &BTreeMap<AnnularDiagram, Q> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &AnnularDiagram) -> Q {
        self.terms.get(d).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `c * d`, dropping essential terms in quotient mode and zero sums.
    pub fn add_term(&mut self, d: AnnularDiagram, c: Q) {
        debug_assert_eq!((d.dom(), d.cod()), (self.dom, self.cod));
        if c.is_zero() || (self.mode == Mode::Quotient && d.ess() > 0) {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_canon(&mut self, c: Canon, coeff: &Q) {
        let f = loop_factor(c.loops);
        self.add_term(c.diagram, coeff * &f);
    }

    fn check_mode(&self, other: &Morphism) -> Result<()> {
        if self.mode != other.mode {
            return Err(AtlError::ModeMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Morphism) -> Result<Morphism> {
        self.check_mode(other)?;
        if (self.dom, self.cod) != (other.dom, other.cod) {
            return Err(AtlError::Arity(format!(
                "cannot add hom({},{}) and hom({},{})",
                self.dom, self.cod, other.dom, other.cod
            )));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Morphism {
        let mut out = Self::zero(self.dom, self.cod, self.mode);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect();
        out
    }

    /// `self ∘ first`: `first` is applied first.
    pub fn try_compose(&self, first: &Morphism) -> Result<Morphism> {
        self.check_mode(first)?;
        if first.cod != self.dom {
            return Err(AtlError::Arity(format!(
                "cannot compose hom({},{}) after hom({},{})",
                self.dom, self.cod, first.dom, first.cod
            )));
        }
        let lower: Vec<(Cut, usize)> = first.terms.keys().map(|d| (d.cut(), d.ess())).collect();
        let upper: Vec<(Cut, usize)> = self.terms.keys().map(|d| (d.cut(), d.ess())).collect();
        let table = |i: usize, j: usize| -> Option<(Cut, usize, usize)> {
            let ((a, ea), (b, eb)) = (&lower[i], &upper[j]);
            if self.mode == Mode::Quotient && ea + eb > 0 {
                return None;
            }
            let (cut, loops) = super::cut::compose_cuts(a, b);
            let (cut, ess, more) = cut.reduce(ea + eb);
            if self.mode == Mode::Quotient && ess > 0 {
                return None;
            }
            Some((cut, ess, loops + more))
        };
        let fx = IntCoeffs::new(first.terms.values());
        let fy = IntCoeffs::new(self.terms.values());
        if let (Some(fx), Some(fy)) = (&fx, &fy) {
            let mut acc: FxHashMap<(Cut, usize), (i128, i128)> = FxHashMap::default();
            let mut ok = true;
            'outer: for i in 0..lower.len() {
                for j in 0..upper.len() {
                    let Some((cut, ess, loops)) = table(i, j) else { continue };
                    let v = coeffs::product(fx.nums[i], fy.nums[j], loops);
                    let slot = acc.entry((cut, ess)).or_insert((0, 0));
                    if v.and_then(|v| coeffs::accumulate(slot, v)).is_none() {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                let denom = &fx.denom * &fy.denom;
                let mut out = Self::zero(first.dom, self.cod, self.mode);
                for ((cut, ess), v) in acc {
                    out.add_term(cut.to_diagram(ess), coeffs::to_q(v, &denom));
                }
                return Ok(out);
            }
        }
        let xs: Vec<&Q> = first.terms.values().collect();
        let ys: Vec<&Q> = self.terms.values().collect();
        let mut acc: FxHashMap<(Cut, usize), Q> = FxHashMap::default();
        for i in 0..lower.len() {
            for j in 0..upper.len() {
                let Some((cut, ess, loops)) = table(i, j) else { continue };
                *acc.entry((cut, ess)).or_insert_with(Q::zero) += xs[i] * ys[j] * loop_factor(loops);
            }
        }
        let mut out = Self::zero(first.dom, self.cod, self.mode);
        for ((cut, ess), v) in acc {
            out.add_term(cut.to_diagram(ess), v);
        }
        Ok(out)
    }

    /// Right strand insertion `X ⊗ 1`.
    pub fn iota(&self) -> Morphism {
        let mut out = Self::zero(self.dom + 1, self.cod + 1, self.mode);
        for (d, c) in &self.terms {
            for canon in d.iota() {
                out.add_canon(canon, c);
            }
        }
        out
    }

    /// `times`-fold `ι`; quotient-mode results are kept in normal form.
    pub fn iota_n(&self, times: usize) -> Morphism {
        (0..times).fold(self.clone(), |x, _| x.iota().reduce())
    }

    /// Left strand insertion `1 ⊗ X`, computed as `D^{-1} ι(X) D`.
    pub fn iota_prime(&self) -> Morphism {
        let d_in = Morphism::from_diagram(gen_d_diagram(self.dom + 1, 1), self.mode);
        let d_out = Morphism::from_diagram(gen_d_diagram(self.cod + 1, -1), self.mode);
        &(&d_out * &self.iota()) * &d_in
    }

    pub fn iota_prime_n(&self, times: usize) -> Morphism {
        (0..times).fold(self.clone(), |x, _| x.iota_prime().reduce())
    }

    /// `X ⊗ Y = (X ⊗ id)(id ⊗ Y)`.
    pub fn tensor(&self, other: &Morphism) -> Result<Morphism> {
        self.check_mode(other)?;
        let left = self.iota_n(other.cod);
        let right = other.iota_prime_n(self.dom);
        Ok(left.try_compose(&right)?.reduce())
    }

    /// The opposite factorization `(id ⊗ Y)(X ⊗ id)`.
    pub fn tensor_interchange(&self, other: &Morphism) -> Result<Morphism> {
        self.check_mode(other)?;
        let left = self.iota_n(other.dom);
        let right = other.iota_prime_n(self.cod);
        Ok(right.try_compose(&left)?.reduce())
    }

    /// Closes the last strand with a local return arc on the right.
    pub fn partial_trace(&self) -> Result<Morphism> {
        if self.dom != self.cod || self.dom == 0 {
            return Err(AtlError::Arity(format!("partial trace of hom({},{})", self.dom, self.cod)));
        }
        let n = self.dom - 1;
        let cup = Morphism::from_diagram(super::cup_diagram(n, n), self.mode);
        let cap = Morphism::from_diagram(super::cap_diagram(n + 2, n), self.mode);
        Ok(&(&cap * &self.iota()) * &cup)
    }

    pub fn syntactic_eq(&self, other: &Morphism) -> bool {
        self == other
    }

    pub fn is_planar(&self) -> bool {
        self.terms.keys().all(|d| d.is_planar())
    }

    pub fn pow(&self, k: usize) -> Morphism {
        (0..k).fold(Morphism::identity_in(self.dom, self.mode), |acc, _| &acc * self)
    }
}

impl<'a> Mul<&'a Morphism> for &'a Morphism {
    type Output = Morphism;
    /// Composition `self ∘ rhs`; panics on boundary mismatch.
    fn mul(self, rhs: &Morphism) -> Morphism {
        self.try_compose(rhs).expect("composition")
    }
}

impl<'a> Add<&'a Morphism> for &'a Morphism {
    type Output = Morphism;
    fn add(self, rhs: &Morphism) -> Morphism {
        self.try_add(rhs).expect("addition")
    }
}

impl<'a> Sub<&'a Morphism> for &'a Morphism {
    type Output = Morphism;
    fn sub(self, rhs: &Morphism) -> Morphism {
        self.try_add(&-rhs).expect("subtraction")
    }
}

impl Neg for &Morphism {
    type Output = Morphism;
    fn neg(self) -> Morphism {
        self.scale(&-Q::one())
    }
}

impl Mul<&Morphism> for &Q {
    type Output = Morphism;
    fn mul(self, rhs: &Morphism) -> Morphism {
        rhs.scale(self)
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({}->{}, {:?})", self.dom, self.cod, self.mode)?;
        for (d, c) in &self.terms {
            write!(f, "\n  {c} * {d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){d}")?;
        }
        Ok(())
    }
}
