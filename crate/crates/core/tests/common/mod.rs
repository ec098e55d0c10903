#![allow(dead_code)]

use atl_core::rep::{recompose, GeneratorWord, Letter};
use atl_core::{GaussianRational as Q, Mode, Morphism};
use rand::Rng;

pub const MAX_STRANDS: usize = 5;
pub const MAX_LEN: usize = 12;

fn endo_letter<R: Rng>(rng: &mut R, k: usize) -> Vec<Letter> {
    let choices = if k >= 2 { 3 } else { 2 };
    match rng.gen_range(0..choices) {
        0 => vec![Letter::D { k, e: 1 }],
        1 => vec![Letter::D { k, e: -1 }],
        _ => {
            let i = rng.gen_range(0..k - 1);
            vec![Letter::Cap { k, i }, Letter::Cup { k: k - 2, i }]
        }
    }
}

/// A random word `dom -> cod` of at most `MAX_LEN` letters: a walk of caps
/// and cups reaching `cod`, interleaved with rotations and cap-cups.
pub fn random_word<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> GeneratorWord {
    assert!(dom <= MAX_STRANDS && cod <= MAX_STRANDS && (dom + cod) % 2 == 0);
    let mut left = dom.abs_diff(cod) / 2;
    let target = rng.gen_range(left..=MAX_LEN);
    let mut letters = Vec::new();
    let mut k = dom;
    loop {
        let room = MAX_LEN - letters.len() - left;
        let pad = letters.len() + left < target && room >= 2;
        if left > 0 && (!pad || rng.gen_bool(0.4)) {
            if cod > k {
                letters.push(Letter::Cup { k, i: rng.gen_range(0..=k) });
                k += 2;
            } else {
                letters.push(Letter::Cap { k, i: rng.gen_range(0..k - 1) });
                k -= 2;
            }
            left -= 1;
        } else if pad && k > 0 {
            letters.extend(endo_letter(rng, k));
        } else if left == 0 {
            break;
        } else {
            continue;
        }
    }
    assert!(letters.len() <= MAX_LEN);
    GeneratorWord::new(dom, letters).expect("random word is composable")
}

pub fn random_scalar<R: Rng>(rng: &mut R) -> Q {
    Q::from_parts(rng.gen_range(-3..=3), rng.gen_range(1..=3), rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn random_arity<R: Rng>(rng: &mut R, parity: usize) -> usize {
    loop {
        let a = rng.gen_range(0..=MAX_STRANDS);
        if a % 2 == parity % 2 {
            return a;
        }
    }
}

/// A combination of up to three random words in the quotient.
pub fn random_morphism<R: Rng>(rng: &mut R, dom: usize, cod: usize) -> Morphism {
    let mut x = Morphism::zero(dom, cod, Mode::Quotient);
    for _ in 0..rng.gen_range(1..=3) {
        let w = recompose(&random_word(rng, dom, cod)).with_mode(Mode::Quotient);
        x = &x + &w.scale(&random_scalar(rng));
    }
    x.reduce()
}
