#![allow(dead_code)]

use gcalg::scalar::{int, ratio, Scalar};
use gcalg::whitney::{Configuration, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(g: &mut ChaCha8Rng) -> Scalar {
    ratio(g.gen_range(-9..=9), g.gen_range(1..=4))
}

pub fn nonzero(g: &mut ChaCha8Rng) -> Scalar {
    loop {
        let x = rational(g);
        if x != int(0) {
            return x;
        }
    }
}

pub fn row(g: &mut ChaCha8Rng, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| rational(g)).collect()
}

pub fn config(n: usize, rows: Vec<(char, Vec<Scalar>)>) -> Configuration {
    let mut c = Configuration::new(n);
    for (name, r) in rows {
        c.insert(Letter::new(name.to_string()), r).unwrap();
    }
    c
}

pub fn random_config(g: &mut ChaCha8Rng, n: usize, names: &str) -> Configuration {
    config(n, names.chars().map(|ch| (ch, row(g, n))).collect())
}

pub fn letters(s: &str) -> Vec<Letter> {
    s.chars().map(|c| Letter::new(c.to_string())).collect()
}

pub fn lin(coeffs: &[Scalar], rows: &[&Vec<Scalar>]) -> Vec<Scalar> {
    let n = rows[0].len();
    (0..n)
        .map(|j| coeffs.iter().zip(rows).map(|(c, r)| c * &r[j]).sum())
        .collect()
}
