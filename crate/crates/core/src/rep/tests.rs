use super::*;
use crate::diagram::{gen_cap, gen_cup, gen_d, gen_u, nested_cup, AnnularDiagram, Mode, Morphism};

fn q(s: &str) -> Q {
    s.parse().unwrap()
}

fn ss(s: &str) -> SignString {
    s.parse().unwrap()
}

fn col(w: &WeightMap, c: &str) -> Vec<(String, Q)> {
    w.column(ss(c)).into_iter().map(|(r, v)| (SignString::new(w.cod(), r).to_string(), v)).collect()
}

fn single(m: &Morphism) -> AnnularDiagram {
    assert_eq!(m.len(), 1);
    m.terms().keys().next().unwrap().clone()
}

#[test]
fn sign_string_order_and_weight() {
    assert!(ss("++") < ss("+-") && ss("+-") < ss("-+") && ss("-+") < ss("--"));
    assert_eq!(ss("+-+").weight(), 1);
    assert_eq!(ss("+-+").flipped(), ss("-+-"));
    assert_eq!(ss("+-").concat(&ss("-")), ss("+--"));
}

#[test]
fn cup_cap_and_d_images() {
    let cup = phi_generator(&Letter::Cup { k: 0, i: 0 });
    assert_eq!(col(&cup, ""), vec![("+-".into(), q("1")), ("-+".into(), q("-1"))]);
    let cap = phi_generator(&Letter::Cap { k: 2, i: 0 });
    assert_eq!(cap.mul(&cup).unwrap().get(ss(""), ss("")), q("-2"));
    let d = phi_generator(&Letter::D { k: 2, e: 1 });
    assert_eq!(col(&d, "+-"), vec![("-+".into(), q("i"))]);
    let dinv = phi_generator(&Letter::D { k: 3, e: -1 });
    let d3 = phi_generator(&Letter::D { k: 3, e: 1 });
    assert_eq!(d3.mul(&dinv).unwrap(), WeightMap::identity(3));
}

#[test]
fn factorize_examples() {
    let w2 = &gen_d(2, 1).unwrap() * &gen_cup(0, 0).unwrap();
    let word = factorize(&single(&w2)).unwrap();
    assert_eq!(word.letters, vec![Letter::Cup { k: 0, i: 0 }, Letter::D { k: 2, e: 1 }]);
    assert!(factorize(&AnnularDiagram::identity(3)).unwrap().is_empty());
    let dd = gen_d(1, 1).unwrap().pow(2);
    let word = factorize(&single(&dd)).unwrap();
    assert_eq!(word.letters, vec![Letter::D { k: 1, e: 1 }; 2]);
}

#[test]
fn displayed_vectors() {
    let w2 = &gen_d(2, 1).unwrap() * &gen_cup(0, 0).unwrap();
    assert_eq!(col(&phi(&w2).unwrap(), ""), vec![("+-".into(), q("i")), ("-+".into(), q("i"))]);
    let u0 = phi(&gen_u(2, 0).unwrap()).unwrap();
    assert_eq!(col(&u0, "+-"), vec![("+-".into(), q("-1")), ("-+".into(), q("-1"))]);
    let u1 = phi(&gen_u(2, 1).unwrap()).unwrap();
    assert_eq!(col(&u1, "+-"), vec![("+-".into(), q("-1")), ("-+".into(), q("1"))]);
}

#[test]
fn essential_circle_maps_to_zero() {
    let circle = Morphism::from_diagram(AnnularDiagram::circles(1), Mode::Raw);
    assert!(phi(&circle).unwrap().is_zero());
    // Superposed on strands the circle resolves into a vanishing sum.
    for t in 1..=3 {
        let c = crate::diagram::essential_circles(1, t);
        assert!(!c.is_zero());
        assert!(phi(&c).unwrap().is_zero(), "t={t}");
    }
}

#[test]
fn rank_and_tensor() {
    assert_eq!(phi(&Morphism::identity(2)).unwrap().rank(), 4);
    let u1 = gen_u(2, 1).unwrap();
    let lhs = phi(&u1.iota()).unwrap();
    let rhs = phi(&u1).unwrap().tensor(&WeightMap::identity(1));
    assert_eq!(lhs, rhs);
    let lhs = phi(&u1.iota_prime()).unwrap();
    let rhs = WeightMap::identity(1).tensor(&phi(&u1).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn d_squared_is_minus_one() {
    let dd = gen_d(1, 1).unwrap().pow(2);
    assert_eq!(phi(&dd).unwrap(), WeightMap::identity(1).scale(&q("-1")));
}

#[test]
fn welldef_pairs() {
    for w in 0..=4 {
        let n = w + 2;
        let lhs = &gen_cap(n, n - 2).unwrap() * &gen_d(n, 1).unwrap();
        let rhs = &gen_cap(n, 0).unwrap() * &gen_d(n, -1).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(phi(&lhs).unwrap(), phi(&rhs).unwrap());
        let lhs = &gen_d(n, 1).unwrap() * &gen_cup(w, 0).unwrap();
        let rhs = &gen_d(n, -1).unwrap() * &gen_cup(w, w).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(phi(&lhs).unwrap(), phi(&rhs).unwrap());
    }
}

#[test]
fn faithfulness_small() {
    // Nested cups and the D-twisted version are independent.
    let a = phi(&nested_cup(1)).unwrap();
    let b = phi(&(&gen_d(2, 1).unwrap() * &nested_cup(1))).unwrap();
    let cols = vec![a.column(ss("")), b.column(ss(""))];
    assert_eq!(rank_of_columns(&cols), 2);
}

#[test]
fn weight_map_json_roundtrip() {
    let w = phi(&gen_u(3, 0).unwrap()).unwrap();
    assert_eq!(WeightMap::from_json(&w.to_json()).unwrap(), w);
}
