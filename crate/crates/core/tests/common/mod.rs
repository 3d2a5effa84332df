#![allow(dead_code)]

use dspider::spider::{canonicalize, CanonicalDoubleSpider, DoubleSpiderSpec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Uniform-ish random double spider with bounded core, path count and length.
pub fn random_spider(rng: &mut StdRng, max_core: usize, max_paths: usize, max_len: usize) -> CanonicalDoubleSpider {
    let side = |rng: &mut StdRng| {
        let n = rng.gen_range(2..=max_paths);
        (0..n).map(|_| rng.gen_range(1..=max_len)).collect::<Vec<_>>()
    };
    let left = side(rng);
    let right = side(rng);
    canonicalize(&DoubleSpiderSpec::new(rng.gen_range(1..=max_core), left, right)).expect("valid spec")
}

pub fn spider(core: usize, left: &[usize], right: &[usize]) -> CanonicalDoubleSpider {
    canonicalize(&DoubleSpiderSpec::new(core, left.to_vec(), right.to_vec())).expect("valid spec")
}
