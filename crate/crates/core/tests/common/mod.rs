//! Seeded random instances shared by the integration suites.
#![allow(dead_code)]

use gkz_core::{Configuration, Int, IntMatrix, Parameter};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Parameter entries drawn by [`random_beta`].
pub const BETA_ENTRIES: [&str; 13] = [
    "-3", "-2", "-1", "0", "1", "2", "3", "1/2", "-1/2", "1/3", "-1/3", "1+i/2", "1-i/2",
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, d: usize, n: usize, lo: i64, hi: i64) -> IntMatrix {
    let rows: Vec<Vec<Int>> = (0..d)
        .map(|_| (0..n).map(|_| Int::from(rng.gen_range(lo..=hi))).collect())
        .collect();
    IntMatrix::from_rows(rows, n).unwrap()
}

pub fn random_shape(rng: &mut impl Rng) -> (usize, usize) {
    let d = [1, 2, 2, 3, 3, 3][rng.gen_range(0..6)];
    (d, rng.gen_range(d..=6))
}

/// Pointed, full-rank matrices with entries in `0..=4` whose semigroup is normal.
pub fn normal_corpus(seed: u64, count: usize) -> Vec<Configuration> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (d, n) = random_shape(&mut rng);
        let Ok(config) = Configuration::new(random_matrix(&mut rng, d, n, 0, 4)) else {
            continue;
        };
        if config.is_pointed() && config.normality().is_ok_and(|c| c.normal) {
            out.push(config);
        }
    }
    out
}

pub fn random_beta(rng: &mut impl Rng, d: usize) -> Parameter {
    let entries: Vec<&str> = (0..d)
        .map(|_| BETA_ENTRIES[rng.gen_range(0..BETA_ENTRIES.len())])
        .collect();
    Parameter::parse(&entries).unwrap()
}

pub fn random_integral_beta(rng: &mut impl Rng, d: usize) -> Parameter {
    let entries: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
    Parameter::from_i64(&entries)
}

/// A configuration with one or two parameters of each kind.
pub fn parameter_corpus(seed: u64, count: usize) -> Vec<(Configuration, Vec<Parameter>)> {
    let mut rng = rng(seed ^ 0x9e37_79b9);
    normal_corpus(seed, count)
        .into_iter()
        .map(|c| {
            let d = c.dim();
            let betas = vec![random_beta(&mut rng, d), random_integral_beta(&mut rng, d)];
            (c, betas)
        })
        .collect()
}
