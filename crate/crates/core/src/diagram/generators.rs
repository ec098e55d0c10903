//! Generating diagrams and morphisms. All morphisms are built in quotient
//! mode; use [`Morphism::with_mode`] for raw computations.

use super::{AnnularDiagram, Mode, Morphism, Point};
use crate::error::{AtlError, Result};
use crate::scalar::GaussianRational as Q;

fn planar(dom: usize, cod: usize, arcs: Vec<(Point, Point)>) -> AnnularDiagram {
    AnnularDiagram::new(dom, cod, 0, 0, arcs).expect("planar generator")
}

/// `D^e` on `n` strands. `D` moves every inner point one step left, the
/// first one around the seam through the left edge.
pub fn gen_d_diagram(n: usize, e: i32) -> AnnularDiagram {
    assert!(n >= 1 && (e == 1 || e == -1));
    let n32 = n as u32;
    let mut arcs = Vec::with_capacity(n + 1);
    if e == 1 {
        arcs.push((Point::I(0), Point::L(0)));
        arcs.push((Point::O(n32 - 1), Point::R(0)));
        arcs.extend((1..n32).map(|j| (Point::I(j), Point::O(j - 1))));
    } else {
        arcs.push((Point::I(n32 - 1), Point::R(0)));
        arcs.push((Point::O(0), Point::L(0)));
        arcs.extend((0..n32 - 1).map(|j| (Point::I(j), Point::O(j + 1))));
    }
    AnnularDiagram::new(n, n, 1, 0, arcs).expect("D generator")
}

/// Cap joining inner positions `i, i+1` of `n` strands.
pub fn cap_diagram(n: usize, i: usize) -> AnnularDiagram {
    assert!(n >= 2 && i + 1 < n);
    let mut arcs = vec![(Point::I(i as u32), Point::I(i as u32 + 1))];
    for j in 0..n as u32 {
        let ju = j as usize;
        if ju < i {
            arcs.push((Point::I(j), Point::O(j)));
        } else if ju > i + 1 {
            arcs.push((Point::I(j), Point::O(j - 2)));
        }
    }
    planar(n, n - 2, arcs)
}

/// Cup creating outer positions `i, i+1` above `n` strands.
pub fn cup_diagram(n: usize, i: usize) -> AnnularDiagram {
    assert!(i <= n);
    let mut arcs = vec![(Point::O(i as u32), Point::O(i as u32 + 1))];
    for j in 0..n as u32 {
        let o = if (j as usize) < i { j } else { j + 2 };
        arcs.push((Point::I(j), Point::O(o)));
    }
    planar(n, n + 2, arcs)
}

/// Planar `U_i` (1-based, `1 <= i < n`) joining positions `i-1, i`.
pub fn u_diagram(n: usize, i: usize) -> AnnularDiagram {
    assert!(i >= 1 && i < n);
    let a = (i - 1) as u32;
    let mut arcs = vec![(Point::I(a), Point::I(a + 1)), (Point::O(a), Point::O(a + 1))];
    arcs.extend((0..n as u32).filter(|&j| j != a && j != a + 1).map(|j| (Point::I(j), Point::O(j))));
    planar(n, n, arcs)
}

/// `r` nested caps: `I_j - I_{2r-1-j}`.
pub fn nested_cap_diagram(r: usize) -> AnnularDiagram {
    let arcs = (0..r as u32).map(|j| (Point::I(j), Point::I(2 * r as u32 - 1 - j))).collect();
    planar(2 * r, 0, arcs)
}

/// `r` nested cups: `O_j - O_{2r-1-j}`.
pub fn nested_cup_diagram(r: usize) -> AnnularDiagram {
    let arcs = (0..r as u32).map(|j| (Point::O(j), Point::O(2 * r as u32 - 1 - j))).collect();
    planar(0, 2 * r, arcs)
}

fn single(d: AnnularDiagram) -> Morphism {
    Morphism::from_diagram(d, Mode::Quotient)
}

/// `U_i` on `n` strands, `i` read modulo `n`; `U_0 = D U_1 D^{-1}`.
pub fn gen_u(n: usize, i: i64) -> Result<Morphism> {
    if n < 2 {
        return Err(AtlError::Range(format!("U_i needs at least 2 strands, got {n}")));
    }
    let i = i.rem_euclid(n as i64) as usize;
    if i > 0 {
        return Ok(single(u_diagram(n, i)));
    }
    let d = single(gen_d_diagram(n, 1));
    let dinv = single(gen_d_diagram(n, -1));
    Ok(&(&d * &single(u_diagram(n, 1))) * &dinv)
}

pub fn gen_d(n: usize, e: i32) -> Result<Morphism> {
    if n == 0 {
        return Err(AtlError::Range("D needs at least one strand".into()));
    }
    if e != 1 && e != -1 {
        return Err(AtlError::Range(format!("D exponent must be +1 or -1, got {e}")));
    }
    Ok(single(gen_d_diagram(n, e)))
}

/// `D^e` for any integer exponent.
pub fn gen_d_pow(n: usize, e: i32) -> Result<Morphism> {
    let g = gen_d(n, if e >= 0 { 1 } else { -1 })?;
    Ok(g.pow(e.unsigned_abs() as usize))
}

pub fn gen_cap(n: usize, i: usize) -> Result<Morphism> {
    if n < 2 || i + 1 >= n {
        return Err(AtlError::Range(format!("cap at {i} on {n} strands")));
    }
    Ok(single(cap_diagram(n, i)))
}

pub fn gen_cup(n: usize, i: usize) -> Result<Morphism> {
    if i > n {
        return Err(AtlError::Range(format!("cup at {i} above {n} strands")));
    }
    Ok(single(cup_diagram(n, i)))
}

/// Nested caps `Ca_r : 2r -> 0`.
pub fn nested_cap(r: usize) -> Morphism {
    single(nested_cap_diagram(r))
}

/// Nested cups `Cu_r : 0 -> 2r`.
pub fn nested_cup(r: usize) -> Morphism {
    single(nested_cup_diagram(r))
}

/// The crossing `s_i = id + U_i`.
pub fn crossing(n: usize, i: i64) -> Result<Morphism> {
    let u = gen_u(n, i)?;
    Ok(&Morphism::identity(n) + &u)
}

/// `k` essential circles superposed on `t` vertical strands, in raw mode,
/// with every crossing resolved.
pub fn essential_circles(k: usize, t: usize) -> Morphism {
    Morphism::from_diagram(AnnularDiagram::circles(k), Mode::Raw).iota_n(t)
}

pub fn scalar_identity(n: usize, c: Q) -> Morphism {
    Morphism::identity(n).scale(&c)
}
