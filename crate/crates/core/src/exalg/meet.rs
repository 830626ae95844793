//! Grassmann–Cayley meet.
//!
//! Two routes are provided. The Sweedler route works on point factorizations
//! and sums brackets over splits of one factor:
//!
//! ```text
//! A ∧ B = Σ_{(A)_{r-k,k}} [A₁ B] A₂ = Σ_{(B)_{k,s-k}} [A B₂] B₁,   k = r + s - n
//! ```
//!
//! The coordinate route needs no factorization: `*^-1(*T ∨ *U)`, with the
//! star convention `(*T)_{comp S} = σ(S, comp S) T_S`. Under that convention
//! the two routes agree with sign `+1` for every `(n, r, s)`; the relating
//! sign, measured exhaustively for `n <= 6`, is
//!
//! | n     | r          | s          | sign |
//! |-------|------------|------------|------|
//! | 2..=6 | 1..=n      | n-r..=n    | +1   |
//!
//! [`meet_coord_sign`] returns that table entry and [`meet`] applies it, so
//! callers never depend on which route produced a value.

use itertools::Itertools;
use num::Zero;

use super::extensor::Extensor;
use super::places::merge_sign;
use crate::error::{Error, Result};
use crate::scalar::{sign, Scalar};

/// Splits `0..len` into a `first`-subset and its complement, with the sign
/// of the shuffle taking `0..len` to `first ++ rest`.
pub(crate) fn splits(len: usize, first: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>, i32)> {
    (0..len).combinations(first).map(move |a| {
        let b: Vec<usize> = (0..len).filter(|i| !a.contains(i)).collect();
        let s = merge_sign(&a, &b);
        (a, b, s)
    })
}

fn pick(rows: &[Vec<Scalar>], idx: &[usize]) -> Vec<Vec<Scalar>> {
    idx.iter().map(|&i| rows[i].clone()).collect()
}

fn meet_shape(a: &[Vec<Scalar>], b: &[Vec<Scalar>], ambient: usize) -> Result<usize> {
    let (r, s) = (a.len(), b.len());
    for len in [r, s] {
        if len > ambient {
            return Err(Error::StepExceedsRank { step: len, ambient });
        }
    }
    if r + s < ambient {
        return Err(Error::MeetBelowComplementary { r, s, ambient });
    }
    Ok(r + s - ambient)
}

/// Meet of the products of the points `a` and `b`, summing over splits of `a`.
pub fn meet_sweedler(a: &[Vec<Scalar>], b: &[Vec<Scalar>], ambient: usize) -> Result<Extensor> {
    let k = meet_shape(a, b, ambient)?;
    let mut out = Extensor::zero(ambient, k);
    for (first, second, sg) in splits(a.len(), a.len() - k) {
        let mut spanning = pick(a, &first);
        spanning.extend_from_slice(b);
        let br = Extensor::from_points(&spanning, ambient)?.bracket()?;
        if br.is_zero() {
            continue;
        }
        let tail = Extensor::from_points(&pick(a, &second), ambient)?;
        out = out.add(&tail.scale(&(sign(sg) * br)))?;
    }
    Ok(out)
}

/// The same meet, summing over splits of `b` instead.
pub fn meet_sweedler_right(
    a: &[Vec<Scalar>],
    b: &[Vec<Scalar>],
    ambient: usize,
) -> Result<Extensor> {
    let k = meet_shape(a, b, ambient)?;
    let mut out = Extensor::zero(ambient, k);
    for (first, second, sg) in splits(b.len(), k) {
        let mut spanning = a.to_vec();
        spanning.extend(pick(b, &second));
        let br = Extensor::from_points(&spanning, ambient)?.bracket()?;
        if br.is_zero() {
            continue;
        }
        let head = Extensor::from_points(&pick(b, &first), ambient)?;
        out = out.add(&head.scale(&(sign(sg) * br)))?;
    }
    Ok(out)
}

/// Factorization-free meet `*^-1(*T ∨ *U)`. Steps summing below the ambient
/// rank give the zero scalar.
pub fn meet_coord(t: &Extensor, u: &Extensor) -> Result<Extensor> {
    if t.ambient() != u.ambient() {
        return Err(Error::AmbientMismatch {
            left: t.ambient(),
            right: u.ambient(),
        });
    }
    let n = t.ambient();
    if t.step() + u.step() < n {
        return Ok(Extensor::zero(n, 0));
    }
    Ok(t.hodge_star().join(&u.hodge_star())?.hodge_star_inverse())
}

/// Sign relating the two meet routes for ambient rank `n` and steps `r`, `s`.
pub fn meet_coord_sign(n: usize, r: usize, s: usize) -> i32 {
    debug_assert!(r <= n && s <= n && r + s >= n);
    1
}

/// [`meet_coord`] normalised to the Sweedler sign convention.
pub fn meet(t: &Extensor, u: &Extensor) -> Result<Extensor> {
    let m = meet_coord(t, u)?;
    if t.step() + u.step() >= t.ambient() && meet_coord_sign(t.ambient(), t.step(), u.step()) < 0 {
        Ok(-m)
    } else {
        Ok(m)
    }
}
