use itertools::Itertools;
use num::One;

use super::{Letter, RankOracle, TensorWord, WhitneyElement, Word};
use crate::error::{Error, Result};
use crate::exalg::{merge_sign, splits};
use crate::scalar::{int, sign, Scalar};

/// `Σ ± W₁ ⊗ W₂` over the ways of splitting `w` into an `i`-letter and a
/// `j`-letter subword, both in the induced order of `w`. The sign is that of
/// the shuffle taking `w` to `W₁W₂`.
pub fn coproduct_slice(w: &Word, i: usize, j: usize) -> Result<WhitneyElement> {
    if i + j != w.len() {
        return Err(Error::SliceLength { i, j, len: w.len() });
    }
    let mut out = WhitneyElement::zero();
    for (first, second, s) in splits(w.len(), i) {
        out.accumulate(sign(s), vec![w.pick(&first), w.pick(&second)]);
    }
    Ok(out)
}

/// Expands a tableau whose `cells` (row, position) are dotted: the letters in
/// the dotted cells are permuted in every way, each arrangement weighted by
/// the sign of its permutation. Arrangements differing only by a shuffle
/// inside a row coincide, so the sum is divided by the number of such
/// shuffles and each distinct tableau appears once.
pub fn dotted_expansion(rows: &[Word], cells: &[(usize, usize)]) -> Result<WhitneyElement> {
    let mut dotted: Vec<Letter> = Vec::with_capacity(cells.len());
    for &(row, pos) in cells {
        let letter = rows
            .get(row)
            .and_then(|w| w.letters().get(pos))
            .ok_or(Error::BadCell { row, pos })?;
        if dotted.contains(letter) {
            return Err(Error::RepeatedDottedLetter(letter.name().to_string()));
        }
        dotted.push(letter.clone());
    }
    let mut out = WhitneyElement::zero();
    let empty: [usize; 0] = [];
    for perm in (0..cells.len()).permutations(cells.len()) {
        let mut tableau: Vec<Vec<Letter>> = rows.iter().map(|w| w.letters().to_vec()).collect();
        for (cell, &src) in cells.iter().zip(&perm) {
            tableau[cell.0][cell.1] = dotted[src].clone();
        }
        let words: TensorWord = tableau.into_iter().map(Word::new).collect();
        out.accumulate(sign(merge_sign(&perm, &empty)), words);
    }
    let shuffles: i64 = (0..rows.len())
        .map(|r| {
            let k = cells.iter().filter(|c| c.0 == r).count() as i64;
            (1..=k).product::<i64>()
        })
        .product();
    Ok(out.scale(&(Scalar::one() / int(shuffles))))
}

struct ProductShape {
    r: usize,
    s: usize,
    k: usize,
}

fn product_shape(u: &Word, v: &Word, ranker: &(impl RankOracle + ?Sized)) -> Result<ProductShape> {
    if let Some(l) = u.letters().iter().find(|l| v.letters().contains(l)) {
        return Err(Error::SharedLetter(l.name().to_string()));
    }
    for w in [u, v] {
        if w.has_repeat() || ranker.rank(w.letters())? < w.len() {
            return Err(Error::DependentWord(w.to_string()));
        }
    }
    let (r, s) = (u.len(), v.len());
    let t = ranker.rank(u.concat(v).letters())?;
    // independent words give t >= max(r, s), so 0 <= k <= min(r, s)
    Ok(ProductShape { r, s, k: r + s - t })
}

/// `u ◇ v = Σ ± u₁v ⊗ u₂` over the `(r-k, k)` splits of `u`, where
/// `k = r + s - rank(u ∪ v)`.
pub fn geometric_product(u: &Word, v: &Word, ranker: &(impl RankOracle + ?Sized)) -> Result<WhitneyElement> {
    let ProductShape { r, k, .. } = product_shape(u, v, ranker)?;
    let mut out = WhitneyElement::zero();
    for (first, second, s) in splits(r, r - k) {
        out.accumulate(sign(s), vec![u.pick(&first).concat(v), u.pick(&second)]);
    }
    Ok(out)
}

/// The same product expanded over the `(k, s-k)` splits of `v`:
/// `Σ ± uv₂ ⊗ v₁`.
pub fn geometric_product_alt(u: &Word, v: &Word, ranker: &(impl RankOracle + ?Sized)) -> Result<WhitneyElement> {
    let ProductShape { s, k, .. } = product_shape(u, v, ranker)?;
    let mut out = WhitneyElement::zero();
    for (first, second, sg) in splits(s, k) {
        out.accumulate(sign(sg), vec![u.concat(&v.pick(&second)), v.pick(&first)]);
    }
    Ok(out)
}
