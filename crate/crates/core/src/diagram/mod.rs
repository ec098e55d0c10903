//! Annular crossingless diagrams in cut-rectangle form and their linear
//! combinations.

mod coeffs;
mod cut;
mod generators;
mod json;
mod morphism;
mod reduce;

use std::fmt;
use std::str::FromStr;

pub(crate) use cut::Cut;
pub use cut::Canon;
pub use generators::*;
pub use json::{MorphismJson, TermJson, DiagramJson};
pub use morphism::{Mode, Morphism};

use crate::error::{AtlError, Result};

/// A boundary point of the cut rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    /// Inner boundary point.
    I(u32),
    /// Outer boundary point.
    O(u32),
    /// Left copy of a seam crossing.
    L(u32),
    /// Right copy of a seam crossing.
    R(u32),
}

impl Point {
    pub fn index(self) -> usize {
        match self {
            Point::I(j) | Point::O(j) | Point::L(j) | Point::R(j) => j as usize,
        }
    }

    pub fn is_seam(self) -> bool {
        matches!(self, Point::L(_) | Point::R(_))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, j) = match self {
            Point::I(j) => ('I', j),
            Point::O(j) => ('O', j),
            Point::L(j) => ('L', j),
            Point::R(j) => ('R', j),
        };
        write!(f, "{c}{j}")
    }
}

impl FromStr for Point {
    type Err = AtlError;
    fn from_str(s: &str) -> Result<Point> {
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(|| AtlError::parse(s, "empty point label"))?;
        let idx: u32 = chars.as_str().parse().map_err(|_| AtlError::parse(s, "bad point index"))?;
        Ok(match kind {
            'I' => Point::I(idx),
            'O' => Point::O(idx),
            'L' => Point::L(idx),
            'R' => Point::R(idx),
            _ => return Err(AtlError::parse(s, "point kind must be I, O, L or R")),
        })
    }
}

pub(crate) fn norm_arc(a: Point, b: Point) -> (Point, Point) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Canonical (seam-minimal) annular diagram. Ordering is lexicographic on
/// `(seam, ess, arcs)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnnularDiagram {
    seam: usize,
    ess: usize,
    arcs: Vec<(Point, Point)>,
    dom: usize,
    cod: usize,
}

/// One strand of a diagram traced through its seam crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub ends: (Point, Point),
    /// Seam levels crossed in order, with +1 for a right-to-left crossing.
    pub crossings: Vec<(usize, i32)>,
}

impl Strand {
    pub fn winding(&self) -> i32 {
        self.crossings.iter().map(|c| c.1).sum()
    }

    pub fn is_through(&self) -> bool {
        matches!(self.ends, (Point::I(_), Point::O(_)))
    }

    pub fn is_cap(&self) -> bool {
        matches!(self.ends, (Point::I(_), Point::I(_)))
    }
}

/// Result of stacking two diagrams.
#[derive(Clone, Debug)]
pub struct Composed {
    pub diagram: AnnularDiagram,
    pub inessential: usize,
    pub essential: usize,
}

impl AnnularDiagram {
    /// Validates a diagram that is claimed to be canonical.
    pub fn new(dom: usize, cod: usize, seam: usize, ess: usize, arcs: Vec<(Point, Point)>) -> Result<Self> {
        let cut = Cut::from_arcs(dom, cod, seam, &arcs)?;
        if !cut.is_noncrossing() {
            return Err(AtlError::InvalidDiagram("matching is crossing".into()));
        }
        if !cut.moves().is_empty() {
            return Err(AtlError::InvalidDiagram("matching is not seam-minimal".into()));
        }
        let d = cut.to_diagram(ess);
        if ess > 0 && d.arcs.iter().any(|(a, b)| matches!((a, b), (Point::I(_), Point::O(_)))) {
            return Err(AtlError::InvalidDiagram("essential circles cannot coexist with through strands".into()));
        }
        Ok(d)
    }

    /// Canonicalizes a raw noncrossing matching with `ess` essential circles.
    pub fn canonicalize(dom: usize, cod: usize, seam: usize, ess: usize, arcs: &[(Point, Point)]) -> Result<Canon> {
        let cut = Cut::from_arcs(dom, cod, seam, arcs)?;
        if !cut.is_noncrossing() {
            return Err(AtlError::InvalidDiagram("matching is crossing".into()));
        }
        Ok(cut.canonicalize(ess))
    }

    pub fn identity(n: usize) -> Self {
        let arcs = (0..n as u32).map(|j| (Point::I(j), Point::O(j))).collect();
        AnnularDiagram { seam: 0, ess: 0, arcs, dom: n, cod: n }
    }

    /// `k` essential circles and nothing else.
    pub fn circles(k: usize) -> Self {
        AnnularDiagram { seam: 0, ess: k, arcs: vec![], dom: 0, cod: 0 }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn seam(&self) -> usize {
        self.seam
    }

    pub fn ess(&self) -> usize {
        self.ess
    }

    pub fn arcs(&self) -> &[(Point, Point)] {
        &self.arcs
    }

    pub(crate) fn cut(&self) -> Cut {
        Cut::from_diagram(self)
    }

    pub fn is_planar(&self) -> bool {
        self.seam == 0 && self.ess == 0
    }

    /// Partner of a boundary point.
    pub fn mate(&self, p: Point) -> Point {
        let cut = self.cut();
        cut.point(cut.mate[cut.pos(p)])
    }

    /// All strands, each traced from its smaller end in the `I < O` order.
    pub fn strands(&self) -> Vec<Strand> {
        let cut = self.cut();
        let mut seen = vec![false; cut.len()];
        let mut out = Vec::new();
        for start in 0..cut.len() {
            if seen[start] || cut.point(start).is_seam() {
                continue;
            }
            let mut crossings = Vec::new();
            let mut p = start;
            let end = loop {
                seen[p] = true;
                let q = cut.mate[p];
                seen[q] = true;
                match cut.point(q) {
                    Point::L(j) => {
                        crossings.push((j as usize, -1));
                        p = cut.pos(Point::R(j));
                    }
                    Point::R(j) => {
                        crossings.push((j as usize, 1));
                        p = cut.pos(Point::L(j));
                    }
                    pt => break pt,
                }
            };
            out.push(Strand { ends: (cut.point(start), end), crossings });
        }
        out
    }

    pub fn through_count(&self) -> usize {
        self.arcs_through().count()
    }

    fn arcs_through(&self) -> impl Iterator<Item = Strand> {
        self.strands().into_iter().filter(|s| s.is_through())
    }

    /// Total signed seam winding of the through strands.
    pub fn winding(&self) -> i32 {
        self.arcs_through().map(|s| s.winding()).sum()
    }

    /// Number of seam levels used by components attached only to the inner
    /// boundary; these always occupy the lowest levels.
    pub fn cap_levels(&self) -> usize {
        let levels: Vec<usize> = self
            .strands()
            .iter()
            .filter(|s| s.is_cap())
            .flat_map(|s| s.crossings.iter().map(|c| c.0))
            .collect();
        let h = levels.len();
        debug_assert!(levels.iter().all(|&j| j < h), "cap levels not innermost");
        h
    }

    /// Stacks `other` on top of `self` (`self` applied first).
    pub fn compose(&self, other: &AnnularDiagram) -> Result<Composed> {
        if self.cod != other.dom {
            return Err(AtlError::Arity(format!("{}->{} then {}->{}", self.dom, self.cod, other.dom, other.cod)));
        }
        let (cut, loops) = cut::compose_cuts(&self.cut(), &other.cut());
        let c = cut.canonicalize(self.ess + other.ess);
        let essential = c.diagram.ess - self.ess - other.ess;
        Ok(Composed { diagram: c.diagram, inessential: loops + c.loops, essential })
    }

    /// Cut with the essential circles drawn as explicit seam arcs between
    /// the inner-attached and outer-attached components.
    fn expanded_cut(&self) -> Cut {
        if self.ess == 0 {
            return self.cut();
        }
        let h = self.cap_levels();
        let cut = self.cut();
        let mut arcs = cut.lifted_arcs(h, self.ess);
        for t in 0..self.ess as u32 {
            let j = h as u32 + t;
            arcs.push((Point::L(j), Point::R(j)));
        }
        Cut::from_arcs(self.dom, self.cod, self.seam + self.ess, &arcs).expect("expanded circles")
    }

    /// Superposes a vertical strand on the right, resolving every crossing.
    /// Each returned diagram carries coefficient `(-2)^loops`.
    pub fn iota(&self) -> Vec<Canon> {
        let base = self.expanded_cut();
        let (m, n, k) = (self.dom, self.cod, base.k);
        let mut arcs = base.arcs();
        arcs.push((Point::I(m as u32), Point::O(n as u32)));
        let cut = Cut::from_arcs(m + 1, n + 1, k, &arcs).expect("iota arcs");
        let (p, q) = (cut.pos(Point::I(m as u32)), cut.pos(Point::O(n as u32)));
        cut.superpose(p, q).into_iter().map(|c| c.canonicalize(0)).collect()
    }

    /// Superposes one essential circle just outside the inner-attached
    /// components, resolving its crossings with the through strands.
    pub fn circle_smoothings(&self) -> Vec<Canon> {
        let base = self.expanded_cut();
        let h = self.cap_levels();
        let mut arcs = base.lifted_arcs(h, 1);
        arcs.push((Point::L(h as u32), Point::R(h as u32)));
        let cut = Cut::from_arcs(self.dom, self.cod, base.k + 1, &arcs).expect("circle arcs");
        let (p, q) = (cut.pos(Point::L(h as u32)), cut.pos(Point::R(h as u32)));
        cut.superpose(p, q).into_iter().map(|c| c.canonicalize(0)).collect()
    }
}

impl fmt::Display for AnnularDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}->{} seam {} ess {}:", self.dom, self.cod, self.seam, self.ess)?;
        for (a, b) in &self.arcs {
            write!(f, " {a}-{b}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests;
