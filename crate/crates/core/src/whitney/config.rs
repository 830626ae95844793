use std::collections::BTreeMap;

use indexmap::IndexMap;
use num::{One, Zero};

use super::{Letter, WhitneyElement, Word};
use crate::error::{Error, Result};
use crate::exalg::{Extensor, PlaceSet};
use crate::linalg;
use crate::scalar::Scalar;

/// Letters bound to coordinate vectors, kept in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    ambient: usize,
    points: IndexMap<Letter, Vec<Scalar>>,
}

impl Configuration {
    pub fn new(ambient: usize) -> Self {
        Configuration {
            ambient,
            points: IndexMap::new(),
        }
    }

    /// Builds a configuration with one-character letter names.
    pub fn from_rows(ambient: usize, rows: &[(&str, Vec<Scalar>)]) -> Result<Self> {
        let mut c = Self::new(ambient);
        for (name, row) in rows {
            c.insert(Letter::new(*name), row.clone())?;
        }
        Ok(c)
    }

    pub fn insert(&mut self, letter: Letter, row: Vec<Scalar>) -> Result<()> {
        if row.len() != self.ambient {
            return Err(Error::RowLength {
                row: self.points.len(),
                expected: self.ambient,
                found: row.len(),
            });
        }
        if self.points.contains_key(&letter) {
            return Err(Error::DuplicateLetter(letter.name().to_string()));
        }
        self.points.insert(letter, row);
        Ok(())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Letters in declaration order.
    pub fn letters(&self) -> impl Iterator<Item = &Letter> {
        self.points.keys()
    }

    pub fn index_of(&self, letter: &Letter) -> Option<usize> {
        self.points.get_index_of(letter)
    }

    pub fn get(&self, letter: &Letter) -> Result<&Vec<Scalar>> {
        self.points
            .get(letter)
            .ok_or_else(|| Error::UnboundLetter(letter.name().to_string()))
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Letter, &Vec<Scalar>)> {
        self.points.iter()
    }

    pub fn rows_of(&self, letters: &[Letter]) -> Result<Vec<Vec<Scalar>>> {
        letters.iter().map(|l| self.get(l).cloned()).collect()
    }

    /// Product of the word's points; words longer than the ambient rank are
    /// dependent and give the zero tensor of step `n`.
    pub fn extensor(&self, word: &Word) -> Result<Extensor> {
        let rows = self.rows_of(word.letters())?;
        if rows.len() > self.ambient {
            return Ok(Extensor::zero(self.ambient, self.ambient));
        }
        Extensor::from_points(&rows, self.ambient)
    }
}

/// Rank of a set of letters. Implemented by represented configurations and
/// by matroids built on them.
pub trait RankOracle {
    fn rank(&self, letters: &[Letter]) -> Result<usize>;
}

impl RankOracle for Configuration {
    fn rank(&self, letters: &[Letter]) -> Result<usize> {
        Ok(linalg::rank(&self.rows_of(letters)?, self.ambient))
    }
}

/// Coordinates of an evaluated element: one place set per tensor position.
/// Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordTensor {
    ambient: usize,
    coords: BTreeMap<Vec<PlaceSet>, Scalar>,
}

impl CoordTensor {
    pub fn zero(ambient: usize) -> Self {
        CoordTensor {
            ambient,
            coords: BTreeMap::new(),
        }
    }

    /// Outer product of the given extensors.
    pub fn outer(ambient: usize, factors: &[Extensor]) -> Self {
        let mut acc: BTreeMap<Vec<PlaceSet>, Scalar> = BTreeMap::new();
        acc.insert(Vec::new(), Scalar::one());
        for f in factors {
            let mut next = BTreeMap::new();
            for (key, v) in &acc {
                for (s, x) in f.nonzero() {
                    let mut k = key.clone();
                    k.push(s);
                    next.insert(k, v * x);
                }
            }
            acc = next;
        }
        CoordTensor { ambient, coords: acc }
    }

    /// Outer product, the positions of `self` first.
    pub fn tensor(&self, other: &CoordTensor) -> CoordTensor {
        let mut coords = BTreeMap::new();
        for (k1, v1) in &self.coords {
            for (k2, v2) in &other.coords {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                coords.insert(k, v1 * v2);
            }
        }
        CoordTensor {
            ambient: self.ambient,
            coords,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, key: &[PlaceSet]) -> Scalar {
        self.coords.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero entries in key order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&Vec<PlaceSet>, &Scalar)> {
        self.coords.iter()
    }

    pub fn add_scaled(&mut self, other: &CoordTensor, s: &Scalar) {
        for (k, v) in &other.coords {
            let sum = self.get(k) + v * s;
            if sum.is_zero() {
                self.coords.remove(k);
            } else {
                self.coords.insert(k.clone(), sum);
            }
        }
    }

    pub fn add(&self, other: &CoordTensor) -> CoordTensor {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn scale(&self, s: &Scalar) -> CoordTensor {
        let mut out = CoordTensor::zero(self.ambient);
        out.add_scaled(self, s);
        out
    }
}

/// Maps each word to the product of its points and each tensor word to the
/// outer product of those, summing with the element's coefficients.
pub fn evaluate(e: &WhitneyElement, c: &Configuration) -> Result<CoordTensor> {
    let mut out = CoordTensor::zero(c.ambient());
    for (words, coeff) in e.terms() {
        let factors: Vec<Extensor> = words.iter().map(|w| c.extensor(w)).collect::<Result<_>>()?;
        out.add_scaled(&CoordTensor::outer(c.ambient(), &factors), coeff);
    }
    Ok(out)
}

/// Whether `e` evaluates to zero on `c`.
pub fn is_zero_mod_dependencies(e: &WhitneyElement, c: &Configuration) -> Result<bool> {
    Ok(evaluate(e, c)?.is_zero())
}

/// Drops the terms containing a word whose points are dependent in `c`.
/// The result evaluates exactly like `e`.
pub fn prune_dependent(e: &WhitneyElement, c: &Configuration) -> Result<WhitneyElement> {
    let mut out = WhitneyElement::zero();
    for (words, coeff) in e.terms() {
        let mut live = true;
        for w in words {
            if c.extensor(w)?.is_zero() {
                live = false;
                break;
            }
        }
        if live {
            out.accumulate(coeff.clone(), words.clone());
        }
    }
    Ok(out)
}
