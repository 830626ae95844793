//! Letter-level algebra over a set of named points.
//!
//! A [`WhitneyElement`] is a formal combination of tensor words. Words are
//! skew: each word is stored sorted by letter name with the sorting sign
//! absorbed into the coefficient, and a word with a repeated letter is zero.
//! Whether an element lies in the dependency ideal is decided by evaluating
//! it on a concrete [`Configuration`].

mod config;
mod ops;


use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::exalg::merge_sign;
use crate::scalar::{sign, Scalar};

pub use config::{
    evaluate, is_zero_mod_dependencies, prune_dependent, Configuration, CoordTensor, RankOracle,
};
pub use ops::{coproduct_slice, dotted_expansion, geometric_product, geometric_product_alt};

/// A point name. Letters compare by name, which is also the canonical order
/// inside words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(String);

impl Letter {
    pub fn new(name: impl Into<String>) -> Self {
        Letter(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.chars().count() == 1 {
            write!(f, "{}", self.0)
        } else {
            write!(f, "({})", self.0)
        }
    }
}

/// An ordered sequence of letters. Construction does not reject repeats;
/// a word with a repeated letter contributes zero once it enters an element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// One letter per character.
    pub fn parse(text: &str) -> Self {
        Word(text.chars().map(|c| Letter(c.to_string())).collect())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_repeat(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .any(|(i, l)| self.0[i + 1..].contains(l))
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Letters at the given positions, in that order.
    pub fn pick(&self, positions: &[usize]) -> Word {
        Word(positions.iter().map(|&i| self.0[i].clone()).collect())
    }

    /// Sorted copy and the sign of the sorting permutation, or `None` if a
    /// letter repeats.
    fn canonical(&self) -> Option<(Word, i32)> {
        if self.has_repeat() {
            return None;
        }
        let mut sorted = self.0.clone();
        sorted.sort();
        let empty: [&Letter; 0] = [];
        let refs: Vec<&Letter> = self.0.iter().collect();
        Some((Word(sorted), merge_sign(&refs, &empty)))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Tensor positions, left to right. Positions may be empty words.
pub type TensorWord = Vec<Word>;

/// Canonical formal combination of tensor words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WhitneyElement {
    terms: BTreeMap<TensorWord, Scalar>,
}

impl WhitneyElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff * (w₁ ⊗ … ⊗ w_m)`, canonicalized.
    pub fn term(coeff: Scalar, words: TensorWord) -> Self {
        let mut e = Self::zero();
        e.accumulate(coeff, words);
        e
    }

    /// Tensor word given as `#`-free word strings, one letter per character.
    pub fn parse_term(coeff: Scalar, words: &[&str]) -> Self {
        Self::term(coeff, words.iter().map(|w| Word::parse(w)).collect())
    }

    pub(crate) fn accumulate(&mut self, coeff: Scalar, words: TensorWord) {
        if coeff.is_zero() {
            return;
        }
        let mut total = 1;
        let mut canon = Vec::with_capacity(words.len());
        for w in &words {
            let Some((c, s)) = w.canonical() else {
                return;
            };
            total *= s;
            canon.push(c);
        }
        let v = sign(total) * coeff;
        match self.terms.entry(canon) {
            Entry::Vacant(e) => {
                e.insert(v);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, words: &TensorWord) -> Scalar {
        let e = Self::term(Scalar::one(), words.clone());
        match e.terms.into_iter().next() {
            None => Scalar::zero(),
            Some((k, s)) => self.terms.get(&k).map(|v| v * s).unwrap_or_else(Scalar::zero),
        }
    }

    pub fn add(&self, other: &WhitneyElement) -> WhitneyElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.accumulate(v.clone(), k.clone());
        }
        out
    }

    pub fn sub(&self, other: &WhitneyElement) -> WhitneyElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> WhitneyElement {
        if s.is_zero() {
            return Self::zero();
        }
        WhitneyElement {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    /// Every letter appearing in some term.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self
            .terms
            .keys()
            .flat_map(|t| t.iter().flat_map(|w| w.0.iter().cloned()))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Debug for WhitneyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// ASCII form: `ab#cd - ac#bd + 2 ad#bc`, `0` for the zero element.
impl fmt::Display for WhitneyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (words, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            let text: Vec<String> = words.iter().map(|w| w.to_string()).collect();
            write!(f, "{}", text.join("#"))?;
        }
        Ok(())
    }
}
