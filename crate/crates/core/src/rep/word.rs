//! Generator words: factorization of canonical diagrams and the images of
//! single letters.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{mask, WeightMap};
use crate::diagram::{cap_diagram, cup_diagram, gen_d_diagram, AnnularDiagram, Mode, Morphism, Point};
use crate::error::{AtlError, Result};
use crate::scalar::GaussianRational as Q;

/// A generator acting on `k` strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Cap { k: usize, i: usize },
    Cup { k: usize, i: usize },
    D { k: usize, e: i32 },
    Id { k: usize },
}

impl Letter {
    pub fn dom(&self) -> usize {
        match *self {
            Letter::Cap { k, .. } | Letter::Cup { k, .. } | Letter::D { k, .. } | Letter::Id { k } => k,
        }
    }

    pub fn cod(&self) -> usize {
        match *self {
            Letter::Cap { k, .. } => k - 2,
            Letter::Cup { k, .. } => k + 2,
            Letter::D { k, .. } | Letter::Id { k } => k,
        }
    }

    pub fn diagram(&self) -> AnnularDiagram {
        match *self {
            Letter::Cap { k, i } => cap_diagram(k, i),
            Letter::Cup { k, i } => cup_diagram(k, i),
            Letter::D { k, e } => gen_d_diagram(k, e),
            Letter::Id { k } => AnnularDiagram::identity(k),
        }
    }

    fn is_valid(&self) -> bool {
        match *self {
            Letter::Cap { k, i } => k >= 2 && i + 1 < k,
            Letter::Cup { k, i } => i <= k,
            Letter::D { k, e } => k >= 1 && (e == 1 || e == -1),
            Letter::Id { .. } => true,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Cap { k, i } => write!(f, "cap_{i}^({k})"),
            Letter::Cup { k, i } => write!(f, "cup_{i}^({k})"),
            Letter::D { k, e: 1 } => write!(f, "D_({k})"),
            Letter::D { k, .. } => write!(f, "D^-1_({k})"),
            Letter::Id { k } => write!(f, "id_({k})"),
        }
    }
}

/// Letters in order of application.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorWord {
    pub dom: usize,
    pub letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn new(dom: usize, letters: Vec<Letter>) -> Result<Self> {
        let mut k = dom;
        for l in &letters {
            if !l.is_valid() || l.dom() != k {
                return Err(AtlError::Arity(format!("letter {l} cannot follow arity {k}")));
            }
            k = l.cod();
        }
        Ok(GeneratorWord { dom, letters })
    }

    pub fn cod(&self) -> usize {
        self.letters.last().map_or(self.dom, |l| l.cod())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Small Gaussian integer used for single-diagram images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct GInt {
    pub re: i64,
    pub im: i64,
}

impl GInt {
    const ONE: GInt = GInt { re: 1, im: 0 };

    fn i_pow(k: i32) -> GInt {
        match k.rem_euclid(4) {
            0 => GInt { re: 1, im: 0 },
            1 => GInt { re: 0, im: 1 },
            2 => GInt { re: -1, im: 0 },
            _ => GInt { re: 0, im: -1 },
        }
    }

    fn mul(self, o: GInt) -> GInt {
        GInt { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }

    fn neg(self) -> GInt {
        GInt { re: -self.re, im: -self.im }
    }

    fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn to_q(self) -> Q {
        Q::new(BigRational::from_integer(BigInt::from(self.re)), BigRational::from_integer(BigInt::from(self.im)))
    }

    /// `c * self`.
    pub fn scale(self, c: &Q) -> Q {
        match (self.re, self.im) {
            (1, 0) => c.clone(),
            (-1, 0) => -c,
            (0, 1) => c * &Q::i(),
            (0, -1) => -(c * &Q::i()),
            _ => c * &self.to_q(),
        }
    }
}

fn bit(s: u64, k: usize, j: usize) -> u64 {
    s >> (k - 1 - j) & 1
}

/// Image of one basis vector under one letter.
fn apply_letter(l: &Letter, s: u64, out: &mut Vec<(u64, GInt)>) {
    out.clear();
    match *l {
        Letter::Id { .. } => out.push((s, GInt::ONE)),
        Letter::Cap { k, i } => {
            let pair = (bit(s, k, i), bit(s, k, i + 1));
            let v = match pair {
                (1, 0) => GInt::ONE,
                (0, 1) => GInt::ONE.neg(),
                _ => return,
            };
            let high = s >> (k - i);
            let low = s & mask(k - i - 2);
            out.push((high << (k - i - 2) | low, v));
        }
        Letter::Cup { k, i } => {
            let high = s >> (k - i);
            let low = s & mask(k - i);
            // v_{+-} - v_{-+}
            out.push(((high << 2 | 0b01) << (k - i) | low, GInt::ONE));
            out.push(((high << 2 | 0b10) << (k - i) | low, GInt::ONE.neg()));
        }
        Letter::D { k, e } => {
            if e == 1 {
                let first = s >> (k - 1);
                let rest = s & mask(k - 1);
                let sign = if first == 0 { 1 } else { -1 };
                out.push((rest << 1 | first, GInt::i_pow(sign)));
            } else {
                let last = s & 1;
                let sign = if last == 0 { 1 } else { -1 };
                out.push((last << (k - 1) | s >> 1, GInt::i_pow(-sign)));
            }
        }
    }
}

/// Sparse image of every basis column; entries keyed by `(row, col)`.
pub(crate) fn apply_word(w: &GeneratorWord, dom: usize) -> Vec<((u64, u64), GInt)> {
    let mut result = Vec::new();
    let mut cur: HashMap<u64, GInt> = HashMap::new();
    let mut next: HashMap<u64, GInt> = HashMap::new();
    let mut buf = Vec::new();
    for col in 0..1u64 << dom {
        cur.clear();
        cur.insert(col, GInt::ONE);
        for l in &w.letters {
            next.clear();
            for (&s, &v) in &cur {
                apply_letter(l, s, &mut buf);
                for &(t, g) in &buf {
                    let e = next.entry(t).or_default();
                    let p = v.mul(g);
                    e.re += p.re;
                    e.im += p.im;
                }
            }
            next.retain(|_, v| !v.is_zero());
            std::mem::swap(&mut cur, &mut next);
            if cur.is_empty() {
                break;
            }
        }
        result.extend(cur.iter().map(|(&r, &v)| ((r, col), v)));
    }
    result
}

/// The image of a single letter.
pub fn phi_generator(l: &Letter) -> WeightMap {
    let w = GeneratorWord { dom: l.dom(), letters: vec![*l] };
    let map = apply_word(&w, l.dom()).into_iter().map(|(k, g)| (k, g.to_q())).collect();
    WeightMap::from_map(l.dom(), l.cod(), map)
}

/// Composes the letters back into a diagram morphism.
pub fn recompose(w: &GeneratorWord) -> Morphism {
    w.letters.iter().fold(Morphism::identity_in(w.dom, Mode::Raw), |acc, l| {
        &Morphism::from_diagram(l.diagram(), Mode::Raw) * &acc
    })
}

fn strip_cap(d: &AnnularDiagram) -> Option<(usize, AnnularDiagram)> {
    let a = d.arcs().iter().find_map(|&(x, y)| match (x, y) {
        (Point::I(a), Point::I(b)) if b == a + 1 => Some(a),
        _ => None,
    })?;
    let shift = |p: Point| match p {
        Point::I(j) if j > a + 1 => Point::I(j - 2),
        other => other,
    };
    let arcs: Vec<_> = d
        .arcs()
        .iter()
        .filter(|&&(x, _)| x != Point::I(a))
        .map(|&(x, y)| (shift(x), shift(y)))
        .collect();
    let rest = AnnularDiagram::new(d.dom() - 2, d.cod(), d.seam(), 0, arcs).expect("stripped cap");
    Some((a as usize, rest))
}

fn strip_cup(d: &AnnularDiagram) -> Option<(usize, AnnularDiagram)> {
    let b = d.arcs().iter().find_map(|&(x, y)| match (x, y) {
        (Point::O(a), Point::O(b)) if b == a + 1 => Some(a),
        _ => None,
    })?;
    let shift = |p: Point| match p {
        Point::O(j) if j > b + 1 => Point::O(j - 2),
        other => other,
    };
    let arcs: Vec<_> = d
        .arcs()
        .iter()
        .filter(|&&(x, _)| x != Point::O(b))
        .map(|&(x, y)| (shift(x), shift(y)))
        .collect();
    let rest = AnnularDiagram::new(d.dom(), d.cod() - 2, d.seam(), 0, arcs).expect("stripped cup");
    Some((b as usize, rest))
}

/// `d` pre-composed (`pre`) or post-composed with a power of `D`, if the
/// result is a single diagram without closed components.
fn twist(d: &AnnularDiagram, pre: bool, e: i32) -> Option<AnnularDiagram> {
    let k = if pre { d.dom() } else { d.cod() };
    if k == 0 {
        return None;
    }
    let g = gen_d_diagram(k, e);
    let c = if pre { g.compose(d) } else { d.compose(&g) }.ok()?;
    (c.inessential == 0 && c.diagram.ess() == 0).then_some(c.diagram)
}

/// Candidate twists, ordered so that emitted letters prefer `D` over `D^{-1}`.
const TWISTS: [(bool, i32); 4] = [(true, -1), (true, 1), (false, -1), (false, 1)];

/// Bound on the length of the fallback search over conjugation words.
const FALLBACK_DEPTH: usize = 4;

/// Writes a canonical diagram as a word: strip seam-free caps and cups, then
/// peel seam crossings with `D^{±1}` on either side.
pub fn factorize(w: &AnnularDiagram) -> Result<GeneratorWord> {
    if w.ess() > 0 {
        return Err(AtlError::InvalidDiagram("diagrams with essential circles have no word".into()));
    }
    let dom = w.dom();
    let mut pre: Vec<Letter> = Vec::new();
    let mut post: Vec<Letter> = Vec::new();
    let mut core = w.clone();
    loop {
        if let Some((a, rest)) = strip_cap(&core) {
            pre.push(Letter::Cap { k: core.dom(), i: a });
            core = rest;
            continue;
        }
        if let Some((b, rest)) = strip_cup(&core) {
            post.insert(0, Letter::Cup { k: rest.cod(), i: b });
            core = rest;
            continue;
        }
        if core.seam() == 0 {
            break;
        }
        let seam = core.seam();
        let mut progressed = false;
        for (is_pre, e) in TWISTS {
            if let Some(next) = twist(&core, is_pre, e) {
                if next.seam() < seam {
                    if is_pre {
                        pre.push(Letter::D { k: core.dom(), e: -e });
                    } else {
                        post.insert(0, Letter::D { k: core.cod(), e: -e });
                    }
                    core = next;
                    progressed = true;
                    break;
                }
            }
        }
        if !progressed {
            let (next, before, after) = fallback(&core).ok_or(AtlError::Factorize)?;
            pre.extend(before);
            for l in after.into_iter().rev() {
                post.insert(0, l);
            }
            core = next;
        }
    }
    if core != AnnularDiagram::identity(core.dom()) {
        return Err(AtlError::Factorize);
    }
    let mut letters = pre;
    letters.extend(post);
    GeneratorWord::new(dom, letters)
}

type Peeled = (AnnularDiagram, Vec<Letter>, Vec<Letter>);

/// Breadth-first search over words in `D^{±1}` on both sides for one that
/// lowers the seam count.
fn fallback(core: &AnnularDiagram) -> Option<Peeled> {
    let mut frontier: Vec<Peeled> = vec![(core.clone(), vec![], vec![])];
    for _ in 0..FALLBACK_DEPTH {
        let mut next_frontier = Vec::new();
        for (d, before, after) in &frontier {
            for (is_pre, e) in TWISTS {
                let Some(next) = twist(d, is_pre, e) else { continue };
                let (mut b, mut a) = (before.clone(), after.clone());
                if is_pre {
                    b.push(Letter::D { k: d.dom(), e: -e });
                } else {
                    a.insert(0, Letter::D { k: d.cod(), e: -e });
                }
                if next.seam() < core.seam() {
                    return Some((next, b, a));
                }
                next_frontier.push((next, b, a));
            }
        }
        frontier = next_frontier;
    }
    None
}
