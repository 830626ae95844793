use std::collections::BTreeMap;
use std::ops::Neg;

use num::{One, Zero};

use super::places::{merge_sign_sets, PlaceSet, MAX_AMBIENT};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{sign, Scalar};

/// A step-`k` antisymmetric tensor in ambient rank `n`, with sparse
/// coordinates keyed by `k`-subsets of places. Absent keys are zero and zero
/// values are never stored, so structural equality is tensor equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Extensor {
    ambient: usize,
    step: usize,
    coords: BTreeMap<PlaceSet, Scalar>,
}

impl std::fmt::Debug for Extensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Extensor(n={}, k={}, ", self.ambient, self.step)?;
        f.debug_map()
            .entries(self.coords.iter().map(|(s, v)| (s, v.to_string())))
            .finish()?;
        write!(f, ")")
    }
}

fn check_ambient(ambient: usize) -> Result<()> {
    if ambient == 0 || ambient > MAX_AMBIENT {
        return Err(Error::BadAmbient {
            ambient,
            max: MAX_AMBIENT,
        });
    }
    Ok(())
}

fn check_rows(rows: &[Vec<Scalar>], ambient: usize) -> Result<()> {
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ambient {
            return Err(Error::RowLength {
                row: i,
                expected: ambient,
                found: row.len(),
            });
        }
    }
    Ok(())
}

impl Extensor {
    pub fn zero(ambient: usize, step: usize) -> Self {
        assert!(step <= ambient, "step {step} exceeds rank {ambient}");
        Extensor {
            ambient,
            step,
            coords: BTreeMap::new(),
        }
    }

    /// The step-0 tensor with the given value.
    pub fn scalar(ambient: usize, value: Scalar) -> Self {
        let mut t = Self::zero(ambient, 0);
        t.insert(PlaceSet::EMPTY, value);
        t
    }

    /// The basis tensor `e_S`.
    pub fn basis(ambient: usize, places: PlaceSet) -> Self {
        let mut t = Self::zero(ambient, places.len());
        t.insert(places, Scalar::one());
        t
    }

    /// Builds a tensor from `(places, value)` pairs; repeated keys accumulate.
    pub fn from_coords(
        ambient: usize,
        step: usize,
        coords: impl IntoIterator<Item = (PlaceSet, Scalar)>,
    ) -> Result<Self> {
        check_ambient(ambient)?;
        if step > ambient {
            return Err(Error::StepExceedsRank { step, ambient });
        }
        let mut t = Self::zero(ambient, step);
        for (s, v) in coords {
            if s.len() != step || !s.is_subset(PlaceSet::full(ambient)) {
                return Err(Error::BadPlaces {
                    places: s.places().collect(),
                    ambient,
                });
            }
            t.accumulate(s, v);
        }
        Ok(t)
    }

    /// The product of the given points: the coordinate at `S` is the minor
    /// of the row matrix on the columns `S`.
    pub fn from_points(rows: &[Vec<Scalar>], ambient: usize) -> Result<Self> {
        check_ambient(ambient)?;
        check_rows(rows, ambient)?;
        let k = rows.len();
        if k > ambient {
            return Err(Error::StepExceedsRank { step: k, ambient });
        }
        let mut t = Self::zero(ambient, k);
        for s in PlaceSet::subsets(ambient, k) {
            let cols: Vec<usize> = s.places().map(|p| p - 1).collect();
            let minor: Vec<Vec<Scalar>> = rows
                .iter()
                .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                .collect();
            t.insert(s, linalg::determinant(&minor));
        }
        Ok(t)
    }

    /// A single point as a step-1 tensor.
    pub fn point(coords: &[Scalar]) -> Result<Self> {
        Self::from_points(&[coords.to_vec()], coords.len())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, places: PlaceSet) -> Scalar {
        self.coords.get(&places).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Nonzero coordinates in colex order.
    pub fn nonzero(&self) -> impl Iterator<Item = (PlaceSet, &Scalar)> {
        self.coords.iter().map(|(s, v)| (*s, v))
    }

    /// Every coordinate, zeros included, in colex order.
    pub fn all_coords(&self) -> impl Iterator<Item = (PlaceSet, Scalar)> + '_ {
        PlaceSet::subsets(self.ambient, self.step).map(|s| (s, self.coord(s)))
    }

    /// Value of a step-0 tensor.
    pub fn scalar_value(&self) -> Option<Scalar> {
        (self.step == 0).then(|| self.coord(PlaceSet::EMPTY))
    }

    fn insert(&mut self, s: PlaceSet, v: Scalar) {
        if v.is_zero() {
            self.coords.remove(&s);
        } else {
            self.coords.insert(s, v);
        }
    }

    fn accumulate(&mut self, s: PlaceSet, v: Scalar) {
        if v.is_zero() {
            return;
        }
        let sum = self.coord(s) + v;
        self.insert(s, sum);
    }

    fn check_same_shape(&self, other: &Extensor) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        if self.step != other.step {
            return Err(Error::StepMismatch {
                left: self.step,
                right: other.step,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Extensor) -> Result<Extensor> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (s, v) in &other.coords {
            out.accumulate(*s, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Extensor) -> Result<Extensor> {
        self.add(&-other)
    }

    pub fn scale(&self, s: &Scalar) -> Extensor {
        let mut out = Self::zero(self.ambient, self.step);
        if !s.is_zero() {
            out.coords = self.coords.iter().map(|(k, v)| (*k, v * s)).collect();
        }
        out
    }

    /// Exterior product. Steps summing past the ambient rank give the zero
    /// tensor of step `n`.
    pub fn join(&self, other: &Extensor) -> Result<Extensor> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let n = self.ambient;
        let k = self.step + other.step;
        if k > n {
            return Ok(Self::zero(n, n));
        }
        let mut out = Self::zero(n, k);
        for (s, t) in &self.coords {
            for (s2, u) in &other.coords {
                let sg = merge_sign_sets(*s, *s2);
                if sg != 0 {
                    out.accumulate(s.union(*s2), sign(sg) * t * u);
                }
            }
        }
        Ok(out)
    }

    /// The single coordinate of a step-`n` tensor.
    pub fn bracket(&self) -> Result<Scalar> {
        if self.step != self.ambient {
            return Err(Error::NotPseudoScalar {
                step: self.step,
                ambient: self.ambient,
            });
        }
        Ok(self.coord(PlaceSet::full(self.ambient)))
    }

    /// `(*T)` at `comp(S)` is `merge_sign(S, comp(S)) * T_S`.
    pub fn hodge_star(&self) -> Extensor {
        let n = self.ambient;
        let mut out = Self::zero(n, n - self.step);
        for (s, v) in &self.coords {
            let c = s.complement(n);
            out.insert(c, sign(merge_sign_sets(*s, c)) * v);
        }
        out
    }

    /// Inverse of [`Extensor::hodge_star`]: `*^-1 = (-1)^{k(n-k)} *`.
    pub fn hodge_star_inverse(&self) -> Extensor {
        let k = self.step;
        let star = self.hodge_star();
        if (k * (self.ambient - k)) % 2 == 1 {
            -&star
        } else {
            star
        }
    }

    /// Matrix of the linear map `v -> v ∧ T` (rows indexed by `(k+1)`-sets,
    /// columns by the coordinates of `v`).
    fn left_multiplication_matrix(&self) -> Vec<Vec<Scalar>> {
        let n = self.ambient;
        PlaceSet::subsets(n, self.step + 1)
            .map(|w| {
                (1..=n)
                    .map(|i| {
                        if !w.contains(i) {
                            return Scalar::zero();
                        }
                        let e = PlaceSet::singleton(i);
                        let rest = w.difference(e);
                        sign(merge_sign_sets(e, rest)) * self.coord(rest)
                    })
                    .collect()
            })
            .collect()
    }

    /// Basis of `{v : v ∧ T = 0}`. For a nonzero decomposable tensor this is
    /// the subspace spanned by its factors.
    pub fn annihilator(&self) -> Vec<Vec<Scalar>> {
        let m = self.left_multiplication_matrix();
        linalg::nullspace(&m, self.ambient)
    }

    pub fn annihilator_dimension(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroTensor);
        }
        let m = self.left_multiplication_matrix();
        Ok(self.ambient - linalg::rank(&m, self.ambient))
    }

    /// A nonzero tensor is a product of points exactly when its annihilator
    /// has dimension equal to its step.
    pub fn is_decomposable(&self) -> Result<bool> {
        let d = self.annihilator_dimension()?;
        let decomposable = d == self.step;
        if self.step == 2 {
            debug_assert_eq!(decomposable, self.join(self).map(|t| t.is_zero()).unwrap_or(false));
        }
        Ok(decomposable)
    }

    /// `λ` with `self = λ * other`, if the two are proportional and `other`
    /// is nonzero.
    pub fn ratio_to(&self, other: &Extensor) -> Option<Scalar> {
        if self.ambient != other.ambient || self.step != other.step {
            return None;
        }
        let (s, v) = other.coords.iter().next()?;
        let lambda = self.coord(*s) / v;
        (other.scale(&lambda) == *self).then_some(lambda)
    }
}

impl Neg for &Extensor {
    type Output = Extensor;

    fn neg(self) -> Extensor {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Extensor {
    type Output = Extensor;

    fn neg(self) -> Extensor {
        -&self
    }
}
