mod common;

use atl_core::canon::{coordinates, ess_equal};
use atl_core::rep::{factorize, phi, recompose};
use atl_core::{GaussianRational as Q, Mode, Morphism};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn scalar() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9).prop_map(|(a, b, c, d)| Q::from_parts(a, b, c, d))
}

/// Three composable random morphisms `a -> b -> c -> d`.
fn chain(seed: u64) -> (Morphism, Morphism, Morphism) {
    let mut r = rng(seed);
    let a = r.gen_range(0..=common::MAX_STRANDS);
    let b = common::random_arity(&mut r, a);
    let c = common::random_arity(&mut r, b);
    let d = common::random_arity(&mut r, c);
    let x = common::random_morphism(&mut r, a, b);
    let y = common::random_morphism(&mut r, b, c);
    let z = common::random_morphism(&mut r, c, d);
    (x, y, z)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), Q::one());
        }
        prop_assert!(b.is_zero() || (&a * &b).checked_div(&b).unwrap() == a);
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Q>().unwrap(), a);
    }

    #[test]
    fn factorize_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let dom = r.gen_range(0..=common::MAX_STRANDS);
        let cod = common::random_arity(&mut r, dom);
        let word = common::random_word(&mut r, dom, cod);
        prop_assert!(word.len() <= common::MAX_LEN);
        let raw = recompose(&word);
        for d in raw.terms().keys().filter(|d| d.ess() == 0) {
            let back = recompose(&factorize(d).unwrap());
            prop_assert_eq!(back, Morphism::from_diagram(d.clone(), Mode::Raw));
        }
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>()) {
        let (x, y, z) = chain(seed);
        prop_assert_eq!((&(&z * &y) * &x).reduce(), (&z * &(&y * &x)).reduce());
    }

    #[test]
    fn phi_is_functorial(seed in any::<u64>()) {
        let (x, y, _) = chain(seed);
        let lhs = phi(&(&y * &x)).unwrap();
        let rhs = phi(&y).unwrap().mul(&phi(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(phi(&(&x + &x)).unwrap(), phi(&x).unwrap().scale(&Q::int(2)));
    }

    #[test]
    fn tensor_interchange(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (r.gen_range(0..=2), r.gen_range(0..=3));
        let c = if a % 2 == 0 { 2 * r.gen_range(0..=1) } else { 1 };
        let d = common::random_arity(&mut r, b).min(3 - (b + 1) % 2);
        let x = common::random_morphism(&mut r, a, c);
        let y = common::random_morphism(&mut r, b, d);
        let t = x.tensor(&y).unwrap();
        prop_assert!(ess_equal(&t, &x.tensor_interchange(&y).unwrap()).unwrap());
        let ft = phi(&t).unwrap();
        prop_assert_eq!(ft, phi(&x).unwrap().tensor(&phi(&y).unwrap()));
    }

    #[test]
    fn ess_equal_is_an_equivalence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = r.gen_range(0..=3);
        let b = common::random_arity(&mut r, a).min(5 - (a + 1) % 2);
        let x = common::random_morphism(&mut r, a, b);
        let y = x.with_mode(Mode::Raw).reduce().with_mode(Mode::Quotient);
        let z = common::random_morphism(&mut r, a, b);
        prop_assert!(ess_equal(&x, &x).unwrap());
        prop_assert_eq!(ess_equal(&x, &y).unwrap(), ess_equal(&y, &x).unwrap());
        prop_assert!(ess_equal(&x, &y).unwrap());
        if ess_equal(&x, &z).unwrap() {
            prop_assert!(ess_equal(&y, &z).unwrap());
        }
        // Reduced forms coincide exactly with ess-equality.
        prop_assert_eq!(x.reduce() == z.reduce(), ess_equal(&x, &z).unwrap());
    }

    #[test]
    fn coordinates_are_linear(seed in any::<u64>(), c in scalar()) {
        let mut r = rng(seed);
        let a = r.gen_range(0..=2);
        let b = common::random_arity(&mut r, a).min(4 - a % 2);
        let x = common::random_morphism(&mut r, a, b);
        let y = common::random_morphism(&mut r, a, b);
        let lhs = coordinates(&(&x + &y.scale(&c))).unwrap();
        let cx = coordinates(&x).unwrap();
        let cy = coordinates(&y).unwrap();
        let rhs: Vec<Q> = cx.iter().zip(&cy).map(|(p, q)| p + &(q * &c)).collect();
        prop_assert_eq!(lhs, rhs);
    }
}
