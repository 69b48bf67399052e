//! Seeded random corpus generation shared by the integration suites.

use ideal_collapse::fields::{FieldDescriptor, FieldElement};
use ideal_collapse::locus::IdealSystem;
use ideal_collapse::polys::MultiPoly;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_element(k: &FieldDescriptor, height: i64, rng: &mut ChaCha8Rng) -> FieldElement {
    match k.size() {
        Some(q) => k.from_code(rng.gen_range(0..q)).unwrap(),
        None => {
            let num = rng.gen_range(-height..=height);
            let den = rng.gen_range(1..=height);
            k.from_ratio(&BigInt::from(num), &BigInt::from(den)).unwrap()
        }
    }
}

/// A random polynomial with total degree at most `max_degree` and a handful
/// of terms; may come out zero when coefficients collide.
pub fn random_poly(
    k: &FieldDescriptor,
    nvars: usize,
    max_degree: u32,
    height: i64,
    rng: &mut ChaCha8Rng,
) -> MultiPoly {
    let nterms = rng.gen_range(1..=4);
    let mut terms = vec![];
    for _ in 0..nterms {
        let mut budget = max_degree;
        let mut exps = vec![0u32; nvars];
        for e in exps.iter_mut() {
            *e = rng.gen_range(0..=budget);
            budget -= *e;
        }
        terms.push((exps, random_element(k, height, rng)));
    }
    MultiPoly::from_terms(k.clone(), nvars, terms).unwrap()
}

/// A random nonzero polynomial.
pub fn random_nonzero_poly(
    k: &FieldDescriptor,
    nvars: usize,
    max_degree: u32,
    height: i64,
    rng: &mut ChaCha8Rng,
) -> MultiPoly {
    loop {
        let p = random_poly(k, nvars, max_degree, height, rng);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn var_names(nvars: usize) -> Vec<String> {
    ["x", "y", "z", "w"][..nvars]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

pub fn random_system(
    k: &FieldDescriptor,
    max_nvars: usize,
    max_ngens: usize,
    max_degree: u32,
    height: i64,
    rng: &mut ChaCha8Rng,
) -> IdealSystem {
    let nvars = rng.gen_range(1..=max_nvars);
    let ngens = rng.gen_range(1..=max_ngens);
    let gens = (0..ngens)
        .map(|_| random_nonzero_poly(k, nvars, max_degree, height, rng))
        .collect();
    IdealSystem::new(k.clone(), var_names(nvars), gens).unwrap()
}
