//! Weighted points and the affine reading of extensors.
//!
//! The last coordinate is the weight. Weight-1 points are finite positions,
//! weight-0 points are vectors (points at infinity). A tensor is a
//! `k`-vector when every coordinate whose label contains the last place is
//! zero.
//!
//! Screw decomposition in rank 4 uses the moment/direction split of a step-2
//! tensor `T`:
//!
//! ```text
//! M = (T23, -T13, T12)      D = (T14, T24, T34)
//! ```
//!
//! so the Plücker relation reads `M·D = 0` and the perpendicular part is
//! taken with the standard dot product on the first three places.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exalg::{Extensor, PlaceSet};
use crate::linalg;
use crate::scalar::Scalar;

/// Homogeneous coordinates whose last entry is the weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPoint(pub Vec<Scalar>);

impl WeightedPoint {
    pub fn weight(&self) -> &Scalar {
        self.0.last().expect("empty point")
    }

    pub fn is_vector(&self) -> bool {
        self.weight().is_zero()
    }

    /// Rescaled to weight 1; `None` for vectors.
    pub fn standard(&self) -> Option<WeightedPoint> {
        let w = self.weight();
        if w.is_zero() {
            return None;
        }
        Some(WeightedPoint(self.0.iter().map(|x| x / w).collect()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReducedForm {
    Zero,
    /// Standard-form position and weight.
    Point {
        position: WeightedPoint,
        weight: Scalar,
    },
    /// Weight-0 step-1 tensor.
    Vector(WeightedPoint),
    /// A single 2-extensor with finite support.
    Segment(Extensor),
    /// A 2-vector.
    Couple(Extensor),
    /// Line part plus couple part.
    Screw { line: Extensor, couple: Extensor },
}

/// `∂(p₁…p_k) = Σ (-1)^{i+1} p₁…p̂ᵢ…p_k`.
pub fn boundary(rows: &[Vec<Scalar>], ambient: usize) -> Result<Extensor> {
    if rows.is_empty() {
        return Err(Error::EmptyPointList);
    }
    let mut out: Option<Extensor> = None;
    for i in 0..rows.len() {
        let rest: Vec<Vec<Scalar>> = rows
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| r.clone())
            .collect();
        let mut term = Extensor::from_points(&rest, ambient)?;
        if i % 2 == 1 {
            term = -term;
        }
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term)?,
        });
    }
    Ok(out.expect("nonempty"))
}

pub fn is_kvector(t: &Extensor) -> bool {
    let n = t.ambient();
    t.nonzero().all(|(s, _)| !s.contains(n))
}

pub fn classify_step1(t: &Extensor) -> Result<ReducedForm> {
    if t.step() != 1 {
        return Err(Error::WrongStep {
            expected: 1,
            found: t.step(),
        });
    }
    if t.is_zero() {
        return Ok(ReducedForm::Zero);
    }
    let coords: Vec<Scalar> = t.all_coords().map(|(_, v)| v).collect();
    let p = WeightedPoint(coords);
    Ok(match p.standard() {
        None => ReducedForm::Vector(p),
        Some(position) => ReducedForm::Point {
            weight: p.weight().clone(),
            position,
        },
    })
}

/// Every nonzero step-2 tensor in rank 3 is a single segment, unless its
/// coordinates involving place 3 vanish, in which case it is a couple.
pub fn classify_step2_rank3(t: &Extensor) -> Result<ReducedForm> {
    if t.ambient() != 3 {
        return Err(Error::WrongAmbient {
            expected: 3,
            found: t.ambient(),
        });
    }
    if t.step() != 2 {
        return Err(Error::WrongStep {
            expected: 2,
            found: t.step(),
        });
    }
    Ok(if t.is_zero() {
        ReducedForm::Zero
    } else if is_kvector(t) {
        ReducedForm::Couple(t.clone())
    } else {
        ReducedForm::Segment(t.clone())
    })
}

fn pair(i: usize, j: usize) -> PlaceSet {
    PlaceSet::singleton(i).union(PlaceSet::singleton(j))
}

/// `T_{ij}` with the antisymmetric extension to `i > j`.
fn entry(t: &Extensor, i: usize, j: usize) -> Scalar {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => t.coord(pair(i, j)),
        std::cmp::Ordering::Greater => -t.coord(pair(j, i)),
        std::cmp::Ordering::Equal => Scalar::zero(),
    }
}

/// Writes a decomposable, non-vector step-2 tensor as `p ∨ v` with `p` a
/// weight-1 point and `v` a vector.
///
/// With `p_n = 1` and `v_n = 0`, `T_{in} = -v_i`, which fixes `v`; `p` is then
/// the point of the line with `p_j = 0` for the first place `j` where `v_j`
/// is nonzero.
pub fn factor_step2(t: &Extensor) -> Result<(WeightedPoint, WeightedPoint)> {
    if t.step() != 2 {
        return Err(Error::WrongStep {
            expected: 2,
            found: t.step(),
        });
    }
    if !t.is_decomposable()? {
        return Err(Error::NotDecomposable);
    }
    if is_kvector(t) {
        return Err(Error::NoFiniteSupport);
    }
    let n = t.ambient();
    let mut v: Vec<Scalar> = (1..n).map(|i| -entry(t, i, n)).collect();
    v.push(Scalar::zero());
    let j = v.iter().position(|x| !x.is_zero()).expect("not a k-vector") + 1;
    let vj = v[j - 1].clone();
    let mut p: Vec<Scalar> = (1..n).map(|i| entry(t, i, j) / &vj).collect();
    p.push(Scalar::one());
    Ok((WeightedPoint(p), WeightedPoint(v)))
}

fn dot3(a: &[Scalar; 3], b: &[Scalar; 3]) -> Scalar {
    linalg::dot(a, b)
}

/// Splits a rank-4 step-2 tensor into a decomposable line part `L` and a
/// couple `C` whose moment is parallel to the direction of `L`.
/// A pure couple returns `(0, T)`.
pub fn decompose_screw(t: &Extensor) -> Result<(Extensor, Extensor)> {
    if t.ambient() != 4 {
        return Err(Error::WrongAmbient {
            expected: 4,
            found: t.ambient(),
        });
    }
    if t.step() != 2 {
        return Err(Error::WrongStep {
            expected: 2,
            found: t.step(),
        });
    }
    let c = |i, j| t.coord(pair(i, j));
    let moment = [c(2, 3), -c(1, 3), c(1, 2)];
    let dir = [c(1, 4), c(2, 4), c(3, 4)];
    let dd = dot3(&dir, &dir);
    if dd.is_zero() {
        return Ok((Extensor::zero(4, 2), t.clone()));
    }
    let mu = dot3(&moment, &dir) / dd;
    let cm: Vec<Scalar> = dir.iter().map(|d| d * &mu).collect();
    // moment (m1, m2, m3) sits at (23, -13, 12)
    let couple = Extensor::from_coords(
        4,
        2,
        [
            (pair(2, 3), cm[0].clone()),
            (pair(1, 3), -cm[1].clone()),
            (pair(1, 2), cm[2].clone()),
        ],
    )?;
    let line = t.sub(&couple)?;
    Ok((line, couple))
}

/// [`decompose_screw`] packaged as a [`ReducedForm`].
pub fn classify_screw(t: &Extensor) -> Result<ReducedForm> {
    let (line, couple) = decompose_screw(t)?;
    Ok(match (line.is_zero(), couple.is_zero()) {
        (true, true) => ReducedForm::Zero,
        (true, false) => ReducedForm::Couple(couple),
        (false, true) => ReducedForm::Segment(line),
        (false, false) => ReducedForm::Screw { line, couple },
    })
}
