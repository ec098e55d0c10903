//! Normal form in the quotient by the essential circle.
//!
//! A circle superposed just outside the caps crosses each through strand
//! once; resolving it rewrites a diagram of total winding `w` into the two
//! diagrams of winding `w +- 1` plus terms with fewer through strands. Since
//! that sum vanishes in the quotient, every diagram reduces to a combination
//! of diagrams whose winding is 0 or -1 (any winding when no strand passes
//! through).

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use super::morphism::loop_factor;
use super::{AnnularDiagram, Mode, Morphism};
use crate::scalar::GaussianRational as Q;

type Expansion = Vec<(AnnularDiagram, Q)>;

thread_local! {
    static CACHE: RefCell<HashMap<AnnularDiagram, Expansion>> = RefCell::new(HashMap::new());
}

/// Distance of a winding from the normal-form window `{-1, 0}`.
fn excess(w: i32) -> i32 {
    if w >= 0 {
        w
    } else {
        -1 - w
    }
}

pub fn is_normal(d: &AnnularDiagram) -> bool {
    d.ess() == 0 && (d.through_count() == 0 || excess(d.winding()) == 0)
}

fn extremes(d: &AnnularDiagram, t: usize) -> Vec<(AnnularDiagram, usize)> {
    d.circle_smoothings()
        .into_iter()
        .filter(|c| c.diagram.ess() == 0 && c.diagram.through_count() == t)
        .map(|c| (c.diagram, c.loops))
        .collect()
}

/// One rewrite step: `w` as a combination of diagrams closer to normal.
fn rewrite(w: &AnnularDiagram) -> Expansion {
    let t = w.through_count();
    let wind = w.winding();
    let target = if wind >= 0 { wind - 1 } else { wind + 1 };
    let v = extremes(w, t)
        .into_iter()
        .find(|(d, _)| d.winding() == target)
        .map(|(d, _)| d)
        .expect("circle resolution lacks a rotated extreme");
    let mut out = Vec::new();
    let mut found = false;
    for c in v.circle_smoothings() {
        if c.diagram.ess() > 0 {
            continue;
        }
        if !found && c.diagram == *w {
            assert_eq!(c.loops, 0);
            found = true;
            continue;
        }
        out.push((c.diagram, -loop_factor(c.loops)));
    }
    assert!(found, "circle resolution of {v} does not contain {w}");
    out
}

fn expand(d: &AnnularDiagram) -> Expansion {
    if is_normal(d) {
        return vec![(d.clone(), Q::one())];
    }
    if let Some(hit) = CACHE.with(|c| c.borrow().get(d).cloned()) {
        return hit;
    }
    let mut acc: HashMap<AnnularDiagram, Q> = HashMap::new();
    for (x, c) in rewrite(d) {
        for (y, e) in expand(&x) {
            *acc.entry(y).or_insert_with(num_traits::Zero::zero) += &c * &e;
        }
    }
    let out: Expansion = acc.into_iter().filter(|(_, c)| !num_traits::Zero::is_zero(c)).collect();
    CACHE.with(|c| c.borrow_mut().insert(d.clone(), out.clone()));
    out
}

impl Morphism {
    /// Rewrites a quotient-mode morphism into the normal-form basis. Raw
    /// morphisms are returned unchanged.
    pub fn reduce(&self) -> Morphism {
        if self.mode() == Mode::Raw {
            return self.clone();
        }
        let mut out = Morphism::zero(self.dom(), self.cod(), Mode::Quotient);
        for (d, c) in self.terms() {
            for (x, e) in expand(d) {
                out.add_term(x, c * &e);
            }
        }
        out
    }

    pub fn is_reduced(&self) -> bool {
        self.terms().keys().all(is_normal)
    }
}
