use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{ratio, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in -9..=9 and denominator in 1..=4.
pub fn rational(rng: &mut ChaCha8Rng) -> Scalar {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn row(rng: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| rational(rng)).collect()
}

pub fn rows(rng: &mut ChaCha8Rng, count: usize, n: usize) -> Vec<Vec<Scalar>> {
    (0..count).map(|_| row(rng, n)).collect()
}
