//! Positional form of a diagram: the boundary cycle of the cut rectangle
//! with a matching stored as a partner array.

use super::{AnnularDiagram, Point};
use crate::error::{AtlError, Result};

/// A (possibly non-canonical) matching on the cut-rectangle boundary cycle
/// `I_0..I_{m-1}, R_0..R_{k-1}, O_{n-1}..O_0, L_{k-1}..L_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Cut {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub mate: Vec<usize>,
}

/// A seam-reduction move.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Move {
    /// `L_j - R_j`: an essential circle.
    Ess(usize),
    /// `L_j - L_{j+1}`.
    Left(usize),
    /// `R_j - R_{j+1}`.
    Right(usize),
}

/// Output of canonicalization.
#[derive(Clone, Debug)]
pub struct Canon {
    pub diagram: AnnularDiagram,
    /// Inessential closed loops removed.
    pub loops: usize,
}

impl Cut {
    pub fn len(&self) -> usize {
        self.m + self.n + 2 * self.k
    }

    pub fn pos(&self, p: Point) -> usize {
        let (m, n, k) = (self.m, self.n, self.k);
        match p {
            Point::I(j) => j as usize,
            Point::R(j) => m + j as usize,
            Point::O(j) => m + k + (n - 1 - j as usize),
            Point::L(j) => m + k + n + (k - 1 - j as usize),
        }
    }

    pub fn point(&self, pos: usize) -> Point {
        let (m, n, k) = (self.m, self.n, self.k);
        if pos < m {
            Point::I(pos as u32)
        } else if pos < m + k {
            Point::R((pos - m) as u32)
        } else if pos < m + k + n {
            Point::O((n - 1 - (pos - m - k)) as u32)
        } else {
            Point::L((k - 1 - (pos - m - k - n)) as u32)
        }
    }

    pub fn in_range(&self, p: Point) -> bool {
        let j = p.index();
        match p {
            Point::I(_) => j < self.m,
            Point::O(_) => j < self.n,
            Point::L(_) | Point::R(_) => j < self.k,
        }
    }

    /// Builds a cut from an arc list without checking planarity.
    pub fn from_arcs(m: usize, n: usize, k: usize, arcs: &[(Point, Point)]) -> Result<Cut> {
        let mut cut = Cut { m, n, k, mate: vec![usize::MAX; m + n + 2 * k] };
        for &(a, b) in arcs {
            if a == b || !cut.in_range(a) || !cut.in_range(b) {
                return Err(AtlError::InvalidDiagram(format!("bad arc {a}-{b}")));
            }
            let (pa, pb) = (cut.pos(a), cut.pos(b));
            if cut.mate[pa] != usize::MAX || cut.mate[pb] != usize::MAX {
                return Err(AtlError::InvalidDiagram(format!("point reused in arc {a}-{b}")));
            }
            cut.mate[pa] = pb;
            cut.mate[pb] = pa;
        }
        if let Some(p) = cut.mate.iter().position(|&x| x == usize::MAX) {
            return Err(AtlError::InvalidDiagram(format!("unmatched point {}", cut.point(p))));
        }
        Ok(cut)
    }

    pub fn is_noncrossing(&self) -> bool {
        let mut stack = Vec::new();
        for p in 0..self.len() {
            let q = self.mate[p];
            if q > p {
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        stack.is_empty()
    }

    pub fn arcs(&self) -> Vec<(Point, Point)> {
        let mut arcs: Vec<_> = (0..self.len())
            .filter(|&p| self.mate[p] > p)
            .map(|p| super::norm_arc(self.point(p), self.point(self.mate[p])))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    pub fn to_diagram(&self, ess: usize) -> AnnularDiagram {
        AnnularDiagram {
            seam: self.k,
            ess,
            arcs: self.arcs(),
            dom: self.m,
            cod: self.n,
        }
    }

    pub fn from_diagram(d: &AnnularDiagram) -> Cut {
        Cut::from_arcs(d.dom, d.cod, d.seam, &d.arcs).expect("canonical diagram")
    }

    fn mate_pt(&self, p: Point) -> Point {
        self.point(self.mate[self.pos(p)])
    }

    pub fn moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for j in 0..self.k {
            let ju = j as u32;
            let l = self.mate_pt(Point::L(ju));
            if l == Point::R(ju) {
                out.push(Move::Ess(j));
            }
            if l == Point::L(ju + 1) {
                out.push(Move::Left(j));
            }
            if self.mate_pt(Point::R(ju)) == Point::R(ju + 1) {
                out.push(Move::Right(j));
            }
        }
        out
    }

    fn first_move(&self) -> Option<Move> {
        for j in 0..self.k {
            let ju = j as u32;
            let l = self.mate_pt(Point::L(ju));
            if l == Point::R(ju) {
                return Some(Move::Ess(j));
            }
            if l == Point::L(ju + 1) {
                return Some(Move::Left(j));
            }
            if self.mate_pt(Point::R(ju)) == Point::R(ju + 1) {
                return Some(Move::Right(j));
            }
        }
        None
    }

    /// Applies a move; returns (inessential loops, essential circles) created.
    pub fn apply(&mut self, mv: Move) -> (usize, usize) {
        match mv {
            Move::Ess(j) => {
                *self = self.remove_seam(&[j]);
                (0, 1)
            }
            Move::Left(j) | Move::Right(j) => {
                let ju = j as u32;
                let (a, b) = match mv {
                    Move::Left(_) => (Point::R(ju), Point::R(ju + 1)),
                    _ => (Point::L(ju), Point::L(ju + 1)),
                };
                let (pa, pb) = (self.pos(a), self.pos(b));
                let (x, y) = (self.mate[pa], self.mate[pb]);
                let loops = if x == pb {
                    1
                } else {
                    self.mate[x] = y;
                    self.mate[y] = x;
                    0
                };
                *self = self.remove_seam(&[j, j + 1]);
                (loops, 0)
            }
        }
    }

    /// Deletes the listed seam levels, renumbering the rest. The partners of
    /// deleted points must already have been re-spliced.
    pub fn remove_seam(&self, drop: &[usize]) -> Cut {
        let k2 = self.k - drop.len();
        let mut out = Cut { m: self.m, n: self.n, k: k2, mate: vec![0; self.m + self.n + 2 * k2] };
        let shift = |j: usize| -> Option<usize> {
            if drop.contains(&j) {
                None
            } else {
                Some(j - drop.iter().filter(|&&d| d < j).count())
            }
        };
        let map: Vec<Option<usize>> = (0..self.len())
            .map(|p| {
                let np = match self.point(p) {
                    Point::L(j) => Point::L(shift(j as usize)? as u32),
                    Point::R(j) => Point::R(shift(j as usize)? as u32),
                    other => other,
                };
                Some(out.pos(np))
            })
            .collect();
        for p in 0..self.len() {
            if let Some(np) = map[p] {
                out.mate[np] = map[self.mate[p]].expect("dangling seam partner");
            }
        }
        out
    }

    /// Arc list with seam levels `>= at` raised by `count`, leaving room for
    /// new levels.
    pub fn lifted_arcs(&self, at: usize, count: usize) -> Vec<(Point, Point)> {
        let lift = |p: Point| match p {
            Point::L(j) if j as usize >= at => Point::L(j + count as u32),
            Point::R(j) if j as usize >= at => Point::R(j + count as u32),
            other => other,
        };
        self.arcs().into_iter().map(|(a, b)| (lift(a), lift(b))).collect()
    }

    /// Applies moves until none is left, picking with `choose` among the
    /// applicable ones. Same result layout as [`Cut::reduce`].
    #[cfg(test)]
    pub fn reduce_with(mut self, ess: usize, mut choose: impl FnMut(&[Move]) -> usize) -> (Cut, usize, usize) {
        let (mut loops, mut ess) = (0, ess);
        loop {
            let moves = self.moves();
            if moves.is_empty() {
                return (self, ess, loops);
            }
            let (l, e) = self.apply(moves[choose(&moves) % moves.len()]);
            loops += l;
            ess += e;
        }
    }

    pub fn canonicalize(self, ess: usize) -> Canon {
        let (cut, ess, loops) = self.reduce(ess);
        Canon { diagram: cut.to_diagram(ess), loops }
    }

    /// Applies the first available move until none is left; returns the
    /// reduced cut, the essential total and the inessential loop count.
    pub fn reduce(mut self, ess: usize) -> (Cut, usize, usize) {
        debug_assert!(self.is_noncrossing());
        let (mut loops, mut ess) = (0, ess);
        while let Some(mv) = self.first_move() {
            let (l, e) = self.apply(mv);
            loops += l;
            ess += e;
        }
        (self, ess, loops)
    }

    /// Resolves every crossing between the chord `p - q` (already recorded in
    /// `mate`) and the other arcs, which must be mutually noncrossing. Each
    /// crossing contributes both smoothings with coefficient one.
    pub fn superpose(&self, p: usize, q: usize) -> Vec<Cut> {
        debug_assert_eq!(self.mate[p], q);
        let len = self.len();
        let fwd = |x: usize| (x + len - p) % len;
        let dq = fwd(q);
        let side_a = |x: usize| fwd(x) > 0 && fwd(x) < dq;
        let mut crossed: Vec<(usize, usize)> = (0..len)
            .filter(|&x| side_a(x) && !side_a(self.mate[x]) && self.mate[x] != p)
            .map(|x| (x, self.mate[x]))
            .collect();
        crossed.sort_by_key(|&(a, _)| fwd(a));
        let c = crossed.len();
        assert!(c < 32, "too many crossings to resolve");
        let mut out = Vec::with_capacity(1 << c);
        for mask in 0u32..(1u32 << c) {
            let mut cut = self.clone();
            let mut prev = p;
            for (j, &(a, b)) in crossed.iter().enumerate() {
                let (x, y) = if mask >> j & 1 == 0 { (a, b) } else { (b, a) };
                cut.mate[prev] = x;
                cut.mate[x] = prev;
                prev = y;
            }
            cut.mate[prev] = q;
            cut.mate[q] = prev;
            debug_assert!(cut.is_noncrossing());
            out.push(cut);
        }
        out
    }
}

/// Stacks `b` on top of `a` (`a` applied first).
pub(crate) fn compose_cuts(a: &Cut, b: &Cut) -> (Cut, usize) {
    assert_eq!(a.n, b.m);
    let mut out = Cut { m: a.m, n: b.n, k: a.k + b.k, mate: vec![usize::MAX; a.m + b.n + 2 * (a.k + b.k)] };
    let cuts = [a, b];
    // Composite position of a boundary node, or None for the glued middle.
    let comp = |side: usize, pos: usize, out: &Cut| -> Option<usize> {
        let pt = cuts[side].point(pos);
        match (side, pt) {
            (0, Point::O(_)) | (1, Point::I(_)) => None,
            (1, Point::L(j)) => Some(out.pos(Point::L(j + a.k as u32))),
            (1, Point::R(j)) => Some(out.pos(Point::R(j + a.k as u32))),
            (_, pt) => Some(out.pos(pt)),
        }
    };
    let glue = |side: usize, pos: usize| -> usize {
        match cuts[side].point(pos) {
            Point::O(j) => b.pos(Point::I(j)),
            Point::I(j) => a.pos(Point::O(j)),
            _ => unreachable!(),
        }
    };
    let mut seen = [vec![false; a.len()], vec![false; b.len()]];
    for side in 0..2 {
        for start in 0..cuts[side].len() {
            if seen[side][start] {
                continue;
            }
            let Some(cs) = comp(side, start, &out) else { continue };
            let (mut s, mut p) = (side, start);
            let end = loop {
                seen[s][p] = true;
                let q = cuts[s].mate[p];
                seen[s][q] = true;
                match comp(s, q, &out) {
                    Some(ce) => break ce,
                    None => {
                        p = glue(s, q);
                        s = 1 - s;
                    }
                }
            };
            out.mate[cs] = end;
            out.mate[end] = cs;
        }
    }
    let mut loops = 0;
    for j in 0..a.n {
        let start = a.pos(Point::O(j as u32));
        if seen[0][start] {
            continue;
        }
        loops += 1;
        let (mut s, mut p) = (0, start);
        while !seen[s][p] {
            seen[s][p] = true;
            let q = cuts[s].mate[p];
            seen[s][q] = true;
            p = glue(s, q);
            s = 1 - s;
        }
    }
    (out, loops)
}
