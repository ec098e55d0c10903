use super::*;
use crate::scalar::GaussianRational as Q;
use num_traits::One;

fn u(n: usize, i: i64) -> Morphism {
    gen_u(n, i).unwrap()
}

fn d(n: usize, e: i32) -> Morphism {
    gen_d(n, e).unwrap()
}

fn id(n: usize) -> Morphism {
    Morphism::identity(n)
}

fn arcs(list: &[(&str, &str)]) -> Vec<(Point, Point)> {
    list.iter().map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap())).collect()
}

#[test]
fn d_inverse_pair() {
    for n in 1..=5 {
        assert_eq!(&d(n, 1) * &d(n, -1), id(n));
        assert_eq!(&d(n, -1) * &d(n, 1), id(n));
    }
}

#[test]
fn double_wind_is_canonical() {
    let dd = &d(1, 1) * &d(1, 1);
    assert_eq!(dd.len(), 1);
    let (diag, c) = dd.terms().iter().next().unwrap();
    assert_eq!(*c, Q::one());
    assert_eq!(diag.seam(), 2);
    let again = AnnularDiagram::canonicalize(1, 1, 2, 0, diag.arcs()).unwrap();
    assert_eq!(&again.diagram, diag);
    assert_eq!(again.loops, 0);
}

#[test]
fn canonicalize_single_move() {
    let raw = arcs(&[("I0", "L0"), ("R0", "R1"), ("L1", "O0")]);
    let c = AnnularDiagram::canonicalize(1, 1, 2, 0, &raw).unwrap();
    assert_eq!(c.diagram, AnnularDiagram::identity(1));
    assert_eq!(c.loops, 0);
}

#[test]
fn canonicalize_rejects_crossing() {
    let raw = arcs(&[("I0", "O1"), ("I1", "O0")]);
    assert!(AnnularDiagram::canonicalize(2, 2, 0, 0, &raw).is_err());
}

#[test]
fn essential_and_inessential_loops() {
    // L0-R0 closes an essential circle; L0-L1 with R0-R1 closes a trivial one.
    let c = AnnularDiagram::canonicalize(0, 0, 1, 0, &arcs(&[("L0", "R0")])).unwrap();
    assert_eq!((c.diagram.ess(), c.loops), (1, 0));
    let c = AnnularDiagram::canonicalize(0, 0, 2, 0, &arcs(&[("L0", "L1"), ("R0", "R1")])).unwrap();
    assert_eq!((c.diagram.ess(), c.loops), (0, 1));
}

#[test]
fn tl_relations() {
    assert_eq!(&u(2, 1) * &u(2, 1), u(2, 1).scale(&Q::int(-2)));
    assert_eq!(&(&u(3, 1) * &u(3, 2)) * &u(3, 1), u(3, 1));
    assert_eq!(&(&u(3, 2) * &u(3, 1)) * &u(3, 2), u(3, 2));
    assert_eq!(&u(4, 1) * &u(4, 3), &u(4, 3) * &u(4, 1));
}

#[test]
fn u_d_relation() {
    for n in 2..=6 {
        for i in 0..n as i64 {
            assert_eq!(&u(n, i) * &d(n, 1), &d(n, 1) * &u(n, i + 1), "n={n} i={i}");
        }
    }
}

#[test]
fn u0_definition() {
    assert_eq!(u(2, 0), &(&d(2, 1) * &u(2, 1)) * &d(2, -1));
    assert_ne!(u(2, 0), u(2, 1));
    assert!(!u(2, 0).is_planar());
}

#[test]
fn compose_identity() {
    let w = &d(3, 1) * &u(3, 2);
    assert_eq!(&w * &id(3), w);
    assert_eq!(&id(3) * &w, w);
}

#[test]
fn closing_through_strand_vanishes_in_quotient() {
    // Cap after a D-twisted cup closes the strand around the core.
    let cup = gen_cup(0, 0).unwrap();
    let cap = gen_cap(2, 0).unwrap();
    let x = &(&cap * &d(2, 1)) * &cup;
    assert!(x.is_zero());
    let raw = &(&cap.with_mode(Mode::Raw) * &d(2, 1).with_mode(Mode::Raw)) * &cup.with_mode(Mode::Raw);
    assert_eq!(raw.len(), 1);
    assert_eq!(raw.terms().keys().next().unwrap().ess(), 1);
}

#[test]
fn iota_basics() {
    for n in 0..4 {
        assert_eq!(id(n).iota(), id(n + 1));
        if n > 0 {
            assert_eq!(id(n).iota_prime(), id(n + 1));
        }
    }
    assert_eq!(u(2, 1).iota(), u(3, 1));
    assert_eq!(u(2, 1).iota_prime(), u(3, 2));
}

#[test]
fn iota_of_d_is_crossing_times_d() {
    let lhs = d(2, 1).iota();
    let rhs = &crossing(3, 2).unwrap() * &d(3, 1);
    assert_eq!(lhs, rhs);
}

#[test]
fn tensor_identities() {
    assert_eq!(id(1).tensor(&id(1)).unwrap(), id(2));
    assert_eq!(u(2, 1).tensor(&id(1)).unwrap(), u(3, 1));
    assert_eq!(id(1).tensor(&u(2, 1)).unwrap(), u(3, 2));
}

#[test]
fn partial_traces() {
    assert_eq!(id(1).partial_trace().unwrap(), id(0).scale(&Q::int(-2)));
    assert_eq!(u(2, 1).partial_trace().unwrap(), id(1));
    assert!(id(0).partial_trace().is_err());
}

#[test]
fn reidemeister() {
    let s = crossing(2, 1).unwrap();
    assert_eq!(&s * &s, id(2));
    let s1 = crossing(3, 1).unwrap();
    let s2 = crossing(3, 2).unwrap();
    assert_eq!(&(&s1 * &s2) * &s1, &(&s2 * &s1) * &s2);
    assert_eq!(s.partial_trace().unwrap(), id(1).scale(&Q::int(-1)));
}

#[test]
fn d_squared_is_not_minus_identity_syntactically() {
    let dd = &d(1, 1) * &d(1, 1);
    assert!(!dd.syntactic_eq(&id(1).scale(&Q::int(-1))));
    assert_eq!(dd.reduce(), id(1).scale(&Q::int(-1)));
}

#[test]
fn reduce_d_inverse() {
    assert_eq!(d(1, -1).reduce(), d(1, 1).scale(&Q::int(-1)));
    assert_eq!(d(1, 1).reduce(), d(1, 1));
}

#[test]
fn json_roundtrip() {
    let x = &u(3, 0).scale(&"1/2-i".parse().unwrap()) + &d(3, -1);
    let text = x.to_json();
    let y = Morphism::from_json(&text, Mode::Quotient).unwrap();
    assert_eq!(x, y);
    assert_eq!(y.to_json(), text);
}

mod confluence {
    use super::super::Cut;
    use super::*;
    use proptest::prelude::*;

    /// A noncrossing perfect matching on `2 * half` cycle positions read
    /// from a balanced bracket word.
    fn matching(opens: &[bool]) -> Vec<(usize, usize)> {
        let mut stack = Vec::new();
        let mut out = Vec::new();
        for (p, &open) in opens.iter().enumerate() {
            if open {
                stack.push(p);
            } else {
                out.push((stack.pop().unwrap(), p));
            }
        }
        out
    }

    fn bracket_word() -> impl Strategy<Value = (usize, usize, usize, Vec<bool>)> {
        (0usize..=4, 0usize..=4, 0usize..=4)
            .prop_filter("even boundary", |(m, n, _)| (m + n) % 2 == 0)
            .prop_flat_map(|(m, n, k)| {
                let len = m + n + 2 * k;
                (Just((m, n, k)), Just(len), proptest::collection::vec(any::<u8>(), len))
            })
            .prop_map(|((m, n, k), len, noise)| {
                // Balanced word driven by the noise bytes.
                let (mut open, mut word) = (0usize, Vec::with_capacity(len));
                for (p, b) in noise.iter().enumerate() {
                    let left = len - p;
                    let push = open == 0 || (open < left && b % 2 == 0);
                    word.push(push);
                    if push { open += 1 } else { open -= 1 }
                }
                (m, n, k, word)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn reduction_order_is_irrelevant((m, n, k, word) in bracket_word(), picks in proptest::collection::vec(any::<usize>(), 0..64)) {
            let probe = Cut { m, n, k, mate: vec![0; m + n + 2 * k] };
            let arcs: Vec<(Point, Point)> = matching(&word).into_iter().map(|(a, b)| (probe.point(a), probe.point(b))).collect();
            let cut = Cut::from_arcs(m, n, k, &arcs).unwrap();
            prop_assume!(cut.is_noncrossing());
            let (a, ess_a, loops_a) = cut.clone().reduce(0);
            let mut i = 0;
            let (b, ess_b, loops_b) = cut.reduce_with(0, |moves| {
                i += 1;
                picks.get(i).copied().unwrap_or(moves.len() - 1)
            });
            prop_assert_eq!((ess_a, loops_a), (ess_b, loops_b));
            prop_assert_eq!(a.to_diagram(ess_a), b.to_diagram(ess_b));
        }
    }
}
