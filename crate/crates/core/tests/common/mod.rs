#![allow(dead_code)]

use raman_core::{Complex64, HalfInt, LevelScheme, PolVector, RamanInput};
use rand::Rng;

pub fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// A valid scheme with small momenta (I ≤ 5/2, J ≤ 3/2).
pub fn random_scheme<R: Rng>(rng: &mut R) -> LevelScheme {
    loop {
        let i = h(rng.gen_range(0..=5));
        let j_a = h(rng.gen_range(1..=3));
        let j_b = j_a + h(2 * rng.gen_range(-1..=1));
        if j_b.is_negative() {
            continue;
        }
        let ground: Vec<HalfInt> = HalfInt::range_inclusive((j_a - i).abs(), j_a + i).collect();
        if ground.len() < 2 {
            continue;
        }
        let a = rng.gen_range(0..ground.len());
        let b = rng.gen_range(0..ground.len());
        if a == b {
            continue;
        }
        let scheme = LevelScheme::new(ground[a], ground[b], i, j_a, j_b);
        if scheme.validate().is_ok() {
            return scheme;
        }
    }
}

/// A valid scheme with `J_a = 1/2`.
pub fn random_alkali_scheme<R: Rng>(rng: &mut R) -> LevelScheme {
    loop {
        let i = h(rng.gen_range(1..=9));
        let j_b = h(*[1, 3].get(rng.gen_range(0..2)).unwrap());
        let lo = (HalfInt::HALF - i).abs();
        let (f_a, f_prime_a) = if rng.gen_bool(0.5) {
            (lo, lo + HalfInt::ONE)
        } else {
            (lo + HalfInt::ONE, lo)
        };
        let scheme = LevelScheme::new(f_a, f_prime_a, i, HalfInt::HALF, j_b);
        if scheme.validate().is_ok() {
            return scheme;
        }
    }
}

pub fn random_polarization<R: Rng>(rng: &mut R) -> PolVector {
    let mut c = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    PolVector::from_cartesian([c(), c(), c()]).unwrap()
}

pub fn random_input<R: Rng>(rng: &mut R, max_angle: f64) -> RamanInput {
    let scheme = match rng.gen_range(0..4) {
        0 => LevelScheme::rb85(),
        1 => LevelScheme::cs133(),
        _ => random_scheme(rng),
    };
    let theta_c = rng.gen_range(0.0..max_angle);
    let theta = rng.gen_range(0.0..max_angle);
    if rng.gen_bool(0.5) {
        RamanInput::linear(
            scheme,
            theta_c,
            theta,
            rng.gen_range(0.0..std::f64::consts::TAU),
        )
    } else {
        RamanInput::new(
            scheme,
            theta_c,
            theta,
            random_polarization(rng),
            random_polarization(rng),
        )
    }
}
