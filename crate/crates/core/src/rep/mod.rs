//! The functor to weight-preserving linear maps on tensor powers of the
//! two-dimensional representation.

mod linalg;
mod word;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use linalg::{rank_of_columns, solve_columns, GaussInt};
pub use word::{factorize, phi_generator, recompose, GInt, GeneratorWord, Letter};

use crate::diagram::{AnnularDiagram, Morphism};
use crate::error::{AtlError, Result};
use crate::scalar::GaussianRational as Q;

/// A basis vector `v_{e_0 ... e_{n-1}}`. Bit `n-1-j` is set when `e_j = -`,
/// so integer order is lexicographic order with `+ < -`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignString {
    len: usize,
    bits: u64,
}

impl SignString {
    pub fn new(len: usize, bits: u64) -> Self {
        assert!(len < 64 && bits >> len == 0);
        SignString { len, bits }
    }

    pub fn all_plus(len: usize) -> Self {
        SignString::new(len, 0)
    }

    pub fn all_minus(len: usize) -> Self {
        SignString::new(len, mask(len))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_minus(&self, j: usize) -> bool {
        self.bits >> (self.len - 1 - j) & 1 == 1
    }

    /// `#plus - #minus`.
    pub fn weight(&self) -> i64 {
        self.len as i64 - 2 * self.bits.count_ones() as i64
    }

    pub fn flipped(&self) -> Self {
        SignString::new(self.len, self.bits ^ mask(self.len))
    }

    pub fn concat(&self, other: &SignString) -> Self {
        SignString::new(self.len + other.len, self.bits << other.len | other.bits)
    }

    pub fn all(len: usize) -> impl Iterator<Item = SignString> {
        (0..1u64 << len).map(move |b| SignString::new(len, b))
    }
}

pub(crate) fn mask(len: usize) -> u64 {
    if len == 0 {
        0
    } else {
        u64::MAX >> (64 - len)
    }
}

impl fmt::Display for SignString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.is_minus(j) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl FromStr for SignString {
    type Err = AtlError;
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        for c in s.chars() {
            bits = bits << 1
                | match c {
                    '+' => 0,
                    '-' => 1,
                    _ => return Err(AtlError::parse(s, "sign strings use + and -")),
                };
        }
        if s.len() >= 64 {
            return Err(AtlError::parse(s, "sign string too long"));
        }
        Ok(SignString::new(s.len(), bits))
    }
}

/// Sparse exact matrix from `V^{⊗dom}` to `V^{⊗cod}`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightMap {
    dom: usize,
    cod: usize,
    /// `(row, col)` bit patterns.
    entries: BTreeMap<(u64, u64), Q>,
}

impl WeightMap {
    pub fn zero(dom: usize, cod: usize) -> Self {
        WeightMap { dom, cod, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut w = Self::zero(n, n);
        for b in 0..1u64 << n {
            w.entries.insert((b, b), Q::one());
        }
        w
    }

    /// Diagonal projector onto `v_{+...+}` and `v_{-...-}`.
    pub fn extremal_matrix(m: usize) -> Self {
        let mut w = Self::zero(m, m);
        w.entries.insert((0, 0), Q::one());
        w.entries.insert((mask(m), mask(m)), Q::one());
        w
    }

    /// Rank-one projector onto a single basis vector.
    pub fn unit_projector(s: SignString) -> Self {
        let mut w = Self::zero(s.len, s.len);
        w.entries.insert((s.bits, s.bits), Q::one());
        w
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: SignString, col: SignString) -> Q {
        self.entries.get(&(row.bits, col.bits)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (SignString, SignString, &Q)> {
        self.entries
            .iter()
            .map(move |(&(r, c), v)| (SignString::new(self.cod, r), SignString::new(self.dom, c), v))
    }

    pub fn insert(&mut self, row: SignString, col: SignString, v: Q) -> Result<()> {
        if row.len != self.cod || col.len != self.dom {
            return Err(AtlError::Arity(format!("entry ({row},{col}) in a {}x{} map", self.cod, self.dom)));
        }
        if v.is_zero() {
            self.entries.remove(&(row.bits, col.bits));
        } else {
            self.entries.insert((row.bits, col.bits), v);
        }
        Ok(())
    }

    pub(crate) fn from_map(dom: usize, cod: usize, map: HashMap<(u64, u64), Q>) -> Self {
        let entries = map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        WeightMap { dom, cod, entries }
    }

    pub fn is_weight_preserving(&self) -> bool {
        self.entries().all(|(r, c, _)| r.weight() == c.weight())
    }

    /// `self * rhs`, with `rhs` applied first.
    pub fn mul(&self, rhs: &WeightMap) -> Result<WeightMap> {
        if self.dom != rhs.cod {
            return Err(AtlError::Arity(format!("{}x{} times {}x{}", self.cod, self.dom, rhs.cod, rhs.dom)));
        }
        let mut by_col: HashMap<u64, Vec<(u64, &Q)>> = HashMap::new();
        for (&(r, c), v) in &self.entries {
            by_col.entry(c).or_default().push((r, v));
        }
        let mut acc: HashMap<(u64, u64), Q> = HashMap::new();
        for (&(k, c), b) in &rhs.entries {
            if let Some(col) = by_col.get(&k) {
                for &(r, a) in col {
                    *acc.entry((r, c)).or_insert_with(Q::zero) += a * b;
                }
            }
        }
        Ok(Self::from_map(rhs.dom, self.cod, acc))
    }

    pub fn tensor(&self, rhs: &WeightMap) -> WeightMap {
        let mut entries = BTreeMap::new();
        for (&(r1, c1), a) in &self.entries {
            for (&(r2, c2), b) in &rhs.entries {
                entries.insert((r1 << rhs.cod | r2, c1 << rhs.dom | c2), a * b);
            }
        }
        WeightMap { dom: self.dom + rhs.dom, cod: self.cod + rhs.cod, entries }
    }

    pub fn add(&self, rhs: &WeightMap) -> Result<WeightMap> {
        if (self.dom, self.cod) != (rhs.dom, rhs.cod) {
            return Err(AtlError::Arity("adding maps of different shapes".into()));
        }
        let mut out = self.clone();
        for (k, v) in &rhs.entries {
            let e = out.entries.entry(*k).or_insert_with(Q::zero);
            *e += v;
            if e.is_zero() {
                out.entries.remove(k);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> WeightMap {
        if c.is_zero() {
            return Self::zero(self.dom, self.cod);
        }
        WeightMap { dom: self.dom, cod: self.cod, entries: self.entries.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Conjugation by the global sign flip.
    pub fn s2_conjugate(&self) -> WeightMap {
        let (mr, mc) = (mask(self.cod), mask(self.dom));
        let entries = self.entries.iter().map(|(&(r, c), v)| ((r ^ mr, c ^ mc), v.clone())).collect();
        WeightMap { dom: self.dom, cod: self.cod, entries }
    }

    /// Column `col` as a sparse vector indexed by row bits.
    pub fn column(&self, col: SignString) -> BTreeMap<u64, Q> {
        self.entries.iter().filter(|((_, c), _)| *c == col.bits).map(|((r, _), v)| (*r, v.clone())).collect()
    }

    /// Exact rank, computed block by block over weight spaces.
    pub fn rank(&self) -> usize {
        let mut blocks: BTreeMap<i64, BTreeMap<u64, BTreeMap<u64, Q>>> = BTreeMap::new();
        for (r, c, v) in self.entries() {
            blocks.entry(c.weight()).or_default().entry(c.bits).or_default().insert(r.bits, v.clone());
        }
        blocks
            .into_values()
            .map(|cols| rank_of_columns(&cols.into_values().collect::<Vec<_>>()))
            .sum()
    }

    pub fn trace(&self) -> Q {
        self.entries.iter().filter(|((r, c), _)| r == c).map(|(_, v)| v.clone()).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&WeightMapJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<WeightMap> {
        let j: WeightMapJson = serde_json::from_str(text).map_err(|e| AtlError::parse("weight map JSON", &e.to_string()))?;
        let mut w = WeightMap::zero(j.dom, j.cod);
        for (r, c, v) in j.entries {
            w.insert(r.parse()?, c.parse()?, v)?;
        }
        Ok(w)
    }
}

impl fmt::Debug for WeightMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightMap({} -> {})", self.dom, self.cod)?;
        for (r, c, v) in self.entries() {
            write!(f, "\n  [{r}|{c}] {v}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WeightMapJson {
    dom: usize,
    cod: usize,
    entries: Vec<(String, String, Q)>,
}

impl From<&WeightMap> for WeightMapJson {
    fn from(w: &WeightMap) -> Self {
        WeightMapJson {
            dom: w.dom,
            cod: w.cod,
            entries: w.entries().map(|(r, c, v)| (r.to_string(), c.to_string(), v.clone())).collect(),
        }
    }
}

/// φ of a single diagram as unit entries; empty for essential circles.
pub fn phi_diagram(d: &AnnularDiagram) -> Result<Vec<((u64, u64), GInt)>> {
    if d.ess() > 0 {
        return Ok(Vec::new());
    }
    let w = factorize(d)?;
    Ok(word::apply_word(&w, d.dom()))
}

/// The functor on morphisms.
pub fn phi(x: &Morphism) -> Result<WeightMap> {
    let mut total: HashMap<(u64, u64), Q> = HashMap::new();
    for (d, c) in x.terms() {
        for (k, g) in phi_diagram(d)? {
            *total.entry(k).or_insert_with(Q::zero) += g.scale(c);
        }
    }
    Ok(WeightMap::from_map(x.dom(), x.cod(), total))
}

#[cfg(test)]
mod tests;
