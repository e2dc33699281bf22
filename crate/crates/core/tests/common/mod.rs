#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use weyl_core::arith::{PolyH, Rat};
use weyl_core::weyl::WeylElement;

pub fn random_rat<R: Rng>(rng: &mut R, height: i64) -> Rat {
    let n = rng.gen_range(-height..=height);
    let d = rng.gen_range(1..=height);
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize, height: i64) -> PolyH {
    let d = rng.gen_range(0..=max_deg);
    PolyH::from_coeffs((0..=d).map(|_| random_rat(rng, height)).collect())
}

/// Up to `max_comps` components with degrees in `-max_abs..=max_abs`.
pub fn random_element<R: Rng>(rng: &mut R, max_comps: usize, max_abs: i64, max_deg: usize, height: i64) -> WeylElement {
    let m = rng.gen_range(1..=max_comps);
    WeylElement::from_components((0..m).map(|_| {
        let i = rng.gen_range(-max_abs..=max_abs);
        (i, random_poly(rng, max_deg, height))
    }))
}
