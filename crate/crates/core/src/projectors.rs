//! Extremal, highest/lowest weight and Jones-Wenzl projectors, splitting
//! idempotents and the isomorphism data of the product formula.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::canon::ess_equal;
use crate::diagram::{
    crossing, gen_cap, gen_cup, gen_d, gen_u, nested_cap, nested_cup, AnnularDiagram, Mode, Morphism, Point,
};
use crate::error::{AtlError, Result};
use crate::rep::{phi, SignString, WeightMap};
use crate::scalar::GaussianRational as Q;
use crate::verify::Report;

/// Largest Jones-Wenzl index that is built.
pub const JW_MAX: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Extremal,
    JonesWenzl,
    Highest,
    Lowest,
    Tensor,
    Split,
}

type Cache = Mutex<HashMap<(Kind, usize), Arc<Morphism>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn memo(kind: Kind, m: usize, build: impl FnOnce() -> Morphism) -> Arc<Morphism> {
    if let Some(hit) = cache().lock().unwrap().get(&(kind, m)) {
        return hit.clone();
    }
    let v = Arc::new(build());
    cache().lock().unwrap().insert((kind, m), v.clone());
    v
}

fn half() -> Q {
    Q::ratio(1, 2)
}

fn sign(k: usize) -> Q {
    Q::int(if k % 2 == 0 { 1 } else { -1 })
}

fn cap(n: usize, i: usize) -> Morphism {
    gen_cap(n, i).expect("cap index")
}

fn cup(n: usize, i: usize) -> Morphism {
    gen_cup(n, i).expect("cup index")
}

fn tensor(x: &Morphism, y: &Morphism) -> Morphism {
    x.tensor(y).expect("tensor of quotient morphisms")
}

/// `(X cup_i)(cap_i X)`, that is `X U_{i+1} X` split at the cap so that
/// both halves are normalized before the large product.
fn sandwich(x: &Morphism, i: usize) -> Morphism {
    let n = x.dom();
    let a = (&cap(n, i) * x).reduce();
    let b = (x * &cup(n - 2, i)).reduce();
    (&b * &a).reduce()
}

/// `ι(T) s_m ι(T)` for an idempotent `T` on `m` strands, in normal form.
/// Since `ι(T)` is idempotent this is `ι(T) + ι(T) U_m ι(T)`.
fn extend(t: &Morphism) -> Morphism {
    let m = t.dom();
    let it = t.iota().reduce();
    (&it + &sandwich(&it, m - 1)).reduce()
}

/// The extremal weight projector `T_m`, with `T_0 = 2 id_0`.
pub fn extremal(m: usize) -> Arc<Morphism> {
    memo(Kind::Extremal, m, || match m {
        0 => Morphism::identity(0).scale(&Q::int(2)),
        1 => Morphism::identity(1),
        2 => {
            let u1 = gen_u(2, 1).unwrap().scale(&half());
            let u0 = gen_u(2, 0).unwrap().scale(&half());
            (&(&Morphism::identity(2) + &u1) + &u0).reduce()
        }
        _ => extend(&extremal(m - 1)),
    })
}

/// The Jones-Wenzl projector `P_m` for `1 <= m <= JW_MAX`.
pub fn jones_wenzl(m: usize) -> Result<Arc<Morphism>> {
    if m == 0 || m > JW_MAX {
        return Err(AtlError::Bound(format!("Jones-Wenzl index {m} outside 1..={JW_MAX}")));
    }
    Ok(memo(Kind::JonesWenzl, m, || {
        if m == 1 {
            return Morphism::identity(1);
        }
        let k = m as i64 - 1;
        let ip = jones_wenzl(m - 1).unwrap().iota();
        &ip + &sandwich(&ip, m - 2).scale(&Q::ratio(k, k + 1))
    }))
}

fn diagram(n: usize, seam: usize, arcs: &[(&str, &str)]) -> AnnularDiagram {
    let arcs: Vec<(Point, Point)> = arcs.iter().map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap())).collect();
    let c = AnnularDiagram::canonicalize(n, n, seam, 0, &arcs).expect("displayed diagram");
    assert_eq!((c.loops, c.diagram.ess()), (0, 0));
    c.diagram
}

/// The six two-strand diagrams of the displayed splitting of `T_2`, in the
/// displayed order: identity, single wind, cap-cup, wrapped cap-cup, cap
/// with wrapped cup, wrapped cap with cup.
pub fn displayed_diagrams() -> [AnnularDiagram; 6] {
    [
        AnnularDiagram::identity(2),
        diagram(2, 1, &[("I0", "L0"), ("R0", "O1"), ("I1", "O0")]),
        diagram(2, 0, &[("I0", "I1"), ("O0", "O1")]),
        diagram(2, 2, &[("I0", "L0"), ("I1", "R0"), ("L1", "O0"), ("R1", "O1")]),
        diagram(2, 1, &[("I0", "I1"), ("L0", "O0"), ("R0", "O1")]),
        diagram(2, 1, &[("I0", "L0"), ("I1", "R0"), ("O0", "O1")]),
    ]
}

/// `¼(2, 2εi, 1, 1, εi, εi)` on the displayed diagrams.
pub fn displayed_projector(eps: i64) -> Morphism {
    let i = Q::i();
    let e = Q::int(eps);
    let coeffs = [Q::int(2), Q::int(2) * &i * &e, Q::one(), Q::one(), &i * &e, &i * &e];
    let quarter = Q::ratio(1, 4);
    let terms = displayed_diagrams().into_iter().zip(coeffs).map(|(d, c)| (d, c * &quarter));
    Morphism::from_terms(2, 2, Mode::Quotient, terms).expect("displayed projector").reduce()
}

/// With the orientation of `D` fixed by `φ(D)`, the displayed projector with
/// coefficient `-2i` on the wind is the one onto `v_{++}`.
const HIGHEST_SIGN: i64 = -1;

fn weight_projector(kind: Kind, eps: i64, m: usize) -> Result<Arc<Morphism>> {
    if m < 2 {
        return Err(AtlError::Range(format!("weight projectors start at 2 strands, got {m}")));
    }
    Ok(memo(kind, m, || {
        if m == 2 {
            displayed_projector(eps)
        } else {
            extend(&weight_projector(kind, eps, m - 1).unwrap())
        }
    }))
}

/// Projector onto the highest weight vector `v_{+^m}`.
pub fn highest(m: usize) -> Result<Arc<Morphism>> {
    weight_projector(Kind::Highest, HIGHEST_SIGN, m)
}

/// Projector onto the lowest weight vector `v_{-^m}`.
pub fn lowest(m: usize) -> Result<Arc<Morphism>> {
    weight_projector(Kind::Lowest, -HIGHEST_SIGN, m)
}

fn pair_key(m: usize, n: usize) -> usize {
    m * 1024 + n
}

/// `T_m ⊗ T_n`.
pub fn extremal_tensor(m: usize, n: usize) -> Arc<Morphism> {
    memo(Kind::Tensor, pair_key(m, n), || tensor(&extremal(m), &extremal(n)))
}

/// The complement `e_{m,n}` of `T_{m+n}` inside `T_m ⊗ T_n`.
pub fn split_idempotent(m: usize, n: usize) -> Result<Arc<Morphism>> {
    if m == 0 || n == 0 {
        return Err(AtlError::Range(format!("e_{{{m},{n}}} needs m, n >= 1")));
    }
    Ok(memo(Kind::Split, pair_key(m, n), || {
        if m == 1 && n == 1 {
            let u1 = gen_u(2, 1).unwrap();
            let conj = &(&gen_d(2, -1).unwrap() * &u1) * &gen_d(2, 1).unwrap();
            return (&u1 + &conj).scale(&-half()).reduce();
        }
        -&sandwich(&extremal_tensor(m, n), m - 1)
    }))
}

/// Checks `(T_m ⊗ T_n) s_m (T_m ⊗ T_n) = T_{m+n}`.
pub fn linked_check(m: usize, n: usize) -> Result<bool> {
    if m + n < 3 {
        return Err(AtlError::Range(format!("linked projectors need m + n >= 3, got {m} + {n}")));
    }
    let x = extremal_tensor(m, n);
    let s = crossing(m + n, m as i64)?;
    let lhs = (&(&*x * &s).reduce() * &*x).reduce();
    ess_equal(&lhs, &extremal(m + n))
}

/// Checks the four ways of merging `T_m` and `T_n` overlapping in `n - r`
/// strands into `T_{m+r}`.
pub fn overlap_check(m: usize, n: usize, r: usize) -> Result<bool> {
    if !(1 <= n && n <= m && r < n) {
        return Err(AtlError::Range(format!("overlap needs 0 <= r < n <= m, got m={m} n={n} r={r}")));
    }
    let id = Morphism::identity;
    let tm = extremal(m);
    let tn = extremal(n);
    let target = extremal(m + r);
    let a = tensor(&tm, &id(r));
    let b = tensor(&id(m - n + r), &tn);
    let c = tensor(&id(r), &tm);
    let d = tensor(&tn, &id(m - n + r));
    for (x, y) in [(&a, &b), (&b, &a), (&c, &d), (&d, &c)] {
        if !ess_equal(&(x * y).reduce(), &target)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `T_k` as a tensor factor, where the empty factor is `id_0`.
fn block(k: usize) -> Arc<Morphism> {
    if k == 0 {
        Arc::new(Morphism::identity(0))
    } else {
        extremal(k)
    }
}

/// Checks `e_{m,n} = (-1)^r (T_m ⊗ T_n)(T_{m-r} ⊗ Cu_r Ca_r ⊗ T_{n-r})(T_m ⊗ T_n)`.
pub fn nested_form_check(m: usize, n: usize, r: usize) -> Result<bool> {
    if !(r >= 1 && r <= m.min(n) && r < m.max(n)) {
        return Err(AtlError::Range(format!("nested form needs 1 <= r <= min, r < max, got m={m} n={n} r={r}")));
    }
    let x = extremal_tensor(m, n);
    let cc = (&nested_cup(r) * &nested_cap(r)).reduce();
    let mid = tensor(&tensor(&block(m - r), &cc), &block(n - r));
    let lhs = (&(&*x * &mid).reduce() * &*x).reduce().scale(&sign(r));
    ess_equal(&lhs, &*split_idempotent(m, n)?)
}

/// Checks `(-1)^n (id_{m-n} ⊗ Ca_n)(T_m ⊗ T_n)(id_{m-n} ⊗ Cu_n) = T_{m-n}`.
pub fn kariso_check(m: usize, n: usize) -> Result<bool> {
    if !(1 <= n && n <= m) {
        return Err(AtlError::Range(format!("cap sliding needs 1 <= n <= m, got m={m} n={n}")));
    }
    let id = Morphism::identity(m - n);
    let ca = tensor(&id, &nested_cap(n));
    let cu = tensor(&id, &nested_cup(n));
    let lhs = (&(&ca * &*extremal_tensor(m, n)).reduce() * &cu).reduce().scale(&sign(n));
    ess_equal(&lhs, &extremal(m - n))
}

/// An isomorphism in the Karoubi envelope, given by its two maps and the
/// idempotents they compose to: `bwd ∘ fwd = tgt_idem` and
/// `fwd ∘ bwd = src_idem`.
#[derive(Clone, Debug)]
pub struct IsoPair {
    pub fwd: Morphism,
    pub bwd: Morphism,
    pub src_idem: Morphism,
    pub tgt_idem: Morphism,
}

impl IsoPair {
    /// Both composition contracts, in the quotient.
    pub fn check(&self, name: &str) -> Result<Report> {
        let mut r = Report::new();
        r.ess_eq(format!("{name} bwd*fwd"), &(&self.bwd * &self.fwd).reduce(), &self.tgt_idem)?;
        r.ess_eq(format!("{name} fwd*bwd"), &(&self.fwd * &self.bwd).reduce(), &self.src_idem)?;
        Ok(r)
    }
}

/// The isomorphism between `T_{|m-n|}` and `e_{m,n}` for `m != n`.
pub fn iso_diff(m: usize, n: usize) -> Result<IsoPair> {
    if m == n || m == 0 || n == 0 {
        return Err(AtlError::Range(format!("iso_diff needs distinct m, n >= 1, got {m}, {n}")));
    }
    let k = m.min(n);
    let t = extremal(m.max(n) - k);
    let (into, out) = if m > n {
        (tensor(&t, &nested_cup(k)), tensor(&t, &nested_cap(k)))
    } else {
        (tensor(&nested_cup(k), &t), tensor(&nested_cap(k), &t))
    };
    let x = extremal_tensor(m, n);
    Ok(IsoPair {
        fwd: (&*x * &into).reduce().scale(&sign(k)),
        bwd: (&out * &*x).reduce(),
        src_idem: (*split_idempotent(m, n)?).clone(),
        tgt_idem: (*t).clone(),
    })
}

/// The first power `D^k` making `D^k fwd`, `bwd D^{-k}` and the conjugated
/// source idempotent commute with the global sign flip under `φ`.
pub fn twist_equivariant(iso: &IsoPair) -> Result<Option<(usize, IsoPair)>> {
    let n = iso.fwd.cod();
    if n == 0 {
        return Ok(None);
    }
    let fixed = |x: &Morphism| -> Result<bool> {
        let w = phi(x)?;
        Ok(w.s2_conjugate() == w)
    };
    let (d, dinv) = (gen_d(n, 1)?, gen_d(n, -1)?);
    let (mut fwd, mut bwd, mut src) = (iso.fwd.clone(), iso.bwd.clone(), iso.src_idem.clone());
    for k in 0..2 * n {
        if fixed(&fwd)? && fixed(&bwd)? && fixed(&src)? {
            let twisted = IsoPair { fwd, bwd, src_idem: src, tgt_idem: iso.tgt_idem.clone() };
            return Ok(Some((k, twisted)));
        }
        fwd = (&d * &fwd).reduce();
        bwd = (&bwd * &dinv).reduce();
        src = (&(&d * &src) * &dinv).reduce();
    }
    Ok(None)
}

/// The maps `f_i : id_0 -> e_{m,m}` and `g_i : e_{m,m} -> id_0`.
pub fn iso_equal_maps(m: usize) -> Result<[(Morphism, Morphism); 2]> {
    if m == 0 {
        return Err(AtlError::Range("iso_equal needs m >= 1".into()));
    }
    let x = extremal_tensor(m, m);
    let f1 = (&*x * &nested_cup(m)).reduce().scale(&sign(m));
    let g1 = (&nested_cap(m) * &*x).reduce().scale(&half());
    let cu = tensor(&nested_cup(1), &nested_cup(m - 1));
    let ca = tensor(&nested_cap(1), &nested_cap(m - 1));
    let d = gen_d(2 * m, 1)?;
    let dinv = gen_d(2 * m, -1)?;
    let f2 = (&(&*x * &d) * &cu).reduce().scale(&sign(m));
    let g2 = (&(&ca * &dinv) * &*x).reduce().scale(&half());
    Ok([(f1, g1), (f2, g2)])
}

/// The two isomorphisms between copies of `id_0` and the orthogonal
/// summands `f_i g_i` of `e_{m,m}`.
pub fn iso_equal(m: usize) -> Result<(IsoPair, IsoPair)> {
    let [(f1, g1), (f2, g2)] = iso_equal_maps(m)?;
    let pair = |f: Morphism, g: Morphism| IsoPair {
        src_idem: (&f * &g).reduce(),
        tgt_idem: Morphism::identity(0),
        fwd: f,
        bwd: g,
    };
    Ok((pair(f1, g1), pair(f2, g2)))
}

/// `g_i f_j = δ_ij id_0` and `f_1 g_1 + f_2 g_2 = e_{m,m}`.
pub fn iso_equal_report(m: usize) -> Result<Report> {
    let maps = iso_equal_maps(m)?;
    let mut r = Report::new();
    for (i, (_, g)) in maps.iter().enumerate() {
        for (j, (f, _)) in maps.iter().enumerate() {
            let want = if i == j { Morphism::identity(0) } else { Morphism::zero(0, 0, Mode::Quotient) };
            r.ess_eq(format!("m={m} g{}f{} = {}", i + 1, j + 1, u8::from(i == j)), &(g * f).reduce(), &want)?;
        }
    }
    let sum = maps.iter().fold(Morphism::zero(2 * m, 2 * m, Mode::Quotient), |acc, (f, g)| &acc + &(f * g));
    r.ess_eq(format!("m={m} f1g1 + f2g2 = e_{m},{m}"), &sum.reduce(), &*split_idempotent(m, m)?)?;
    Ok(r)
}

/// The five properties of `T_m`: idempotency, crossing absorption, cap-cup
/// annihilation, absorption of lower projectors and `D`-conjugation
/// invariance.
pub fn verify_properties(m: usize) -> Result<Report> {
    if m < 2 {
        return Err(AtlError::Range(format!("properties are stated for m >= 2, got {m}")));
    }
    let t = extremal(m);
    let mut r = Report::new();
    r.ess_eq(format!("T_{m}^2 = T_{m}"), &(&*t * &*t).reduce(), &t)?;
    for i in 0..m as i64 {
        let s = crossing(m, i)?;
        r.ess_eq(format!("T_{m} s_{i} = T_{m}"), &(&*t * &s).reduce(), &t)?;
        r.ess_eq(format!("s_{i} T_{m} = T_{m}"), &(&s * &*t).reduce(), &t)?;
    }
    let zero = Morphism::zero(m, m, Mode::Quotient);
    for i in 0..m as i64 {
        let u = gen_u(m, i)?;
        r.ess_eq(format!("T_{m} U_{i} = 0"), &(&*t * &u).reduce(), &zero)?;
        r.ess_eq(format!("U_{i} T_{m} = 0"), &(&u * &*t).reduce(), &zero)?;
    }
    for n in 1..m {
        let lower = extremal(n).iota_n(m - n);
        r.ess_eq(format!("T_{m} i^{}(T_{n}) = T_{m}", m - n), &(&*t * &lower).reduce(), &t)?;
        r.ess_eq(format!("i^{}(T_{n}) T_{m} = T_{m}", m - n), &(&lower * &*t).reduce(), &t)?;
    }
    let conj = &(&gen_d(m, -1)? * &*t) * &gen_d(m, 1)?;
    r.ess_eq(format!("D^-1 T_{m} D = T_{m}"), &conj.reduce(), &t)?;
    Ok(r)
}

/// The projector onto `⟨v_{+^m -^n}, v_{-^m +^n}⟩`, the expected image of
/// `e_{m,n}`.
pub fn split_image(m: usize, n: usize) -> WeightMap {
    let a = SignString::new(m + n, (1u64 << n) - 1);
    let mut w = WeightMap::unit_projector(a);
    w.insert(a.flipped(), a.flipped(), Q::one()).expect("weight preserving");
    w
}

/// Rank of `φ(X)`.
pub fn phi_rank(x: &Morphism) -> Result<usize> {
    Ok(phi(x)?.rank())
}
