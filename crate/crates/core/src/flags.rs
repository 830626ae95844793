//! Regressive products realized as flags.
//!
//! Every subspace has a canonical representative: the product of its reduced
//! row echelon basis rows. The regressive product `A ∘ B` factors `B = C D`
//! with `C` the canonical representative of the common subspace, and returns
//! the flag `A D ⊃ C`. Flags are equal when their supports agree levelwise
//! and the levelwise scalar factors multiply to 1.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exalg::Extensor;
use crate::linalg;
use crate::scalar::Scalar;

/// A linear subspace, stored by its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn from_rows(rows: &[Vec<Scalar>], ambient: usize) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ambient {
                return Err(Error::RowLength {
                    row: i,
                    expected: ambient,
                    found: r.len(),
                });
            }
        }
        Ok(Subspace {
            ambient,
            rows: linalg::rref(rows, ambient).rows,
        })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        Subspace { ambient, rows }
    }

    /// The subspace spanned by the factors of a nonzero decomposable tensor.
    pub fn support_of(t: &Extensor) -> Result<Self> {
        if !t.is_decomposable()? {
            return Err(Error::NotDecomposable);
        }
        Self::from_rows(&t.annihilator(), t.ambient())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Echelon basis rows.
    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        linalg::rank(&rows, self.ambient) == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Basis of the orthogonal complement under the standard pairing.
    fn perp(&self) -> Vec<Vec<Scalar>> {
        linalg::nullspace(&self.rows, self.ambient)
    }

    pub fn lattice_join(&self, other: &Subspace) -> Subspace {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Subspace {
            ambient: self.ambient,
            rows: linalg::rref(&rows, self.ambient).rows,
        }
    }

    pub fn lattice_meet(&self, other: &Subspace) -> Subspace {
        let mut eqs = self.perp();
        eqs.extend(other.perp());
        Subspace {
            ambient: self.ambient,
            rows: linalg::rref(&linalg::nullspace(&eqs, self.ambient), self.ambient).rows,
        }
    }

    /// Product of the echelon rows; the zero subspace gives the scalar 1.
    pub fn basis_extensor(&self) -> Extensor {
        Extensor::from_points(&self.rows, self.ambient).expect("rows match ambient")
    }
}

/// A descending chain of decomposable tensors with strictly nested supports,
/// top level first.
///
/// Besides the presented levels the value keeps the full chain of factors,
/// one level per factor multiplied in, including trivial levels (the scalar
/// `1`, the whole space, repeated supports). Products continue from the full
/// chain; dropping trivial levels between products would make the result
/// depend on the order in which factors enter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagValue {
    levels: Vec<Extensor>,
    chain: Vec<Extensor>,
}

impl FlagValue {
    /// Validates nesting and decomposability.
    pub fn new(levels: Vec<Extensor>) -> Result<Self> {
        let supports: Vec<Subspace> = levels.iter().map(Subspace::support_of).collect::<Result<_>>()?;
        for w in supports.windows(2) {
            if w[1].dim() >= w[0].dim() || !w[1].is_subspace_of(&w[0]) {
                return Err(Error::Cardinality("flag levels must be strictly nested".into()));
            }
        }
        Ok(FlagValue {
            chain: levels.clone(),
            levels,
        })
    }

    /// The one-level flag of a nonzero decomposable tensor.
    pub fn single(t: &Extensor) -> Result<Self> {
        Self::new(vec![t.clone()])
    }

    pub fn levels(&self) -> &[Extensor] {
        &self.levels
    }

    /// Every factor level, trivial ones included, top first.
    pub fn chain(&self) -> &[Extensor] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn supports(&self) -> Vec<Subspace> {
        self.levels
            .iter()
            .map(|t| Subspace::support_of(t).expect("flag levels are decomposable"))
            .collect()
    }

    pub fn steps(&self) -> Vec<usize> {
        self.levels.iter().map(Extensor::step).collect()
    }
}

/// `x ∘ b` before normalization: `(x D, C)` with `b = C D` exactly.
fn regress(x: &Extensor, b: &Extensor) -> Result<(Extensor, Extensor)> {
    let xs = Subspace::support_of(x)?;
    let bs = Subspace::support_of(b)?;
    let common = xs.lattice_meet(&bs);
    let c = common.basis_extensor();
    let mut rows = common.rows().to_vec();
    let mut extra = Vec::new();
    for r in bs.rows() {
        rows.push(r.clone());
        if linalg::rank(&rows, b.ambient()) == rows.len() {
            extra.push(r.clone());
        } else {
            rows.pop();
        }
    }
    let d0 = Extensor::from_points(&extra, b.ambient())?;
    let lambda = b
        .ratio_to(&c.join(&d0)?)
        .expect("C D spans the support of B");
    let d = d0.scale(&lambda);
    Ok((x.join(&d)?, c))
}

fn insert_levels(x: &Extensor, levels: &[Extensor]) -> Result<Vec<Extensor>> {
    match levels.split_first() {
        None => Ok(vec![x.clone()]),
        Some((top, rest)) => {
            let (upper, common) = regress(x, top)?;
            let mut out = vec![upper];
            out.extend(insert_levels(&common, rest)?);
            Ok(out)
        }
    }
}

/// Merges equal adjacent levels and absorbs step-0 and whole-space levels
/// into their neighbour. A lone whole-space or step-0 level is kept.
fn normalize(chain: Vec<Extensor>) -> FlagValue {
    let mut levels = chain.clone();
    let mut i = 0;
    while i + 1 < levels.len() {
        if levels[i].step() == levels[i + 1].step() {
            let lower = levels.remove(i + 1);
            let canon = Subspace::support_of(&lower).expect("decomposable").basis_extensor();
            let mu = lower.ratio_to(&canon).expect("same support");
            levels[i] = levels[i].scale(&mu);
        } else {
            i += 1;
        }
    }
    if levels.len() > 1 && levels.last().is_some_and(|t| t.step() == 0) {
        let s = levels.pop().and_then(|t| t.scalar_value()).expect("step 0");
        let last = levels.len() - 1;
        levels[last] = levels[last].scale(&s);
    }
    if levels.len() > 1 && levels[0].step() == levels[0].ambient() {
        let s = levels.remove(0).bracket().expect("pseudo-scalar");
        levels[0] = levels[0].scale(&s);
    }
    FlagValue { levels, chain }
}

/// Multiplies `x` into the flag `f`. Reading `f` upward as
/// `F₁ ⊂ … ⊂ F_m`, the supports of the result are
/// `(X ∨ F_i) ∧ F_{i+1}` for `i = 0..m` with `F₀ = 0`, `F_{m+1}` the whole
/// space; they are computed top-down by regressing `x` into `F_m` and then
/// the common part into each lower level.
pub fn multiply_into_flag(x: &Extensor, f: &FlagValue) -> Result<FlagValue> {
    if let Some(top) = f.levels.first() {
        if top.ambient() != x.ambient() {
            return Err(Error::AmbientMismatch {
                left: x.ambient(),
                right: top.ambient(),
            });
        }
    }
    Subspace::support_of(x)?;
    Ok(normalize(insert_levels(x, &f.chain)?))
}

/// `A ∘ B` as a flag `A D ⊃ C`.
pub fn regressive_product(a: &Extensor, b: &Extensor) -> Result<FlagValue> {
    multiply_into_flag(a, &FlagValue::single(b)?)
}

/// Which end of the second flag enters first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertionOrder {
    TopDown,
    BottomUp,
}

/// Multiplies the levels of `g` one by one into `f`.
pub fn flag_product(f: &FlagValue, g: &FlagValue, order: InsertionOrder) -> Result<FlagValue> {
    let mut acc = f.clone();
    let mut levels: Vec<&Extensor> = g.chain.iter().collect();
    if order == InsertionOrder::BottomUp {
        levels.reverse();
    }
    for x in levels {
        acc = multiply_into_flag(x, &acc)?;
    }
    Ok(acc)
}

/// `Π λ_i` where level `i` of `f` is `λ_i` times level `i` of `g`, if the
/// two flags have the same support chain.
pub fn flag_ratio(f: &FlagValue, g: &FlagValue) -> Option<Scalar> {
    if f.len() != g.len() {
        return None;
    }
    f.levels
        .iter()
        .zip(&g.levels)
        .try_fold(Scalar::one(), |acc, (x, y)| Some(acc * x.ratio_to(y)?))
}

pub fn flags_equivalent(f: &FlagValue, g: &FlagValue) -> bool {
    flag_ratio(f, g).is_some_and(|r| r.is_one())
}

/// Whether two flags have the same chain of supports.
pub fn same_supports(f: &FlagValue, g: &FlagValue) -> bool {
    f.len() == g.len() && f.supports() == g.supports()
}
