//! Exact rational scalars.
//!
//! [`Scalar`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator, so every computation in this crate is exact.

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Signed, Zero};

pub use num::BigRational as Scalar;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a row of small integers into scalars.
pub fn ints(values: &[i64]) -> Vec<Scalar> {
    values.iter().map(|&v| int(v)).collect()
}

/// `+1`, `0` or `-1` as a scalar.
pub fn sign(s: i32) -> Scalar {
    int(s as i64)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() || den.is_negative() {
        return None;
    }
    Some(Scalar::new(num, den))
}

/// Rescales a vector to the unique primitive integer vector on the same ray
/// whose first nonzero entry is positive. The zero vector is returned as is.
pub fn primitive_integer(values: &[Scalar]) -> Vec<Scalar> {
    let Some(first) = values.iter().find(|v| !v.is_zero()) else {
        return values.to_vec();
    };
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let nums: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let gcd = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    let flip = first.is_negative();
    nums.into_iter()
        .map(|n| {
            let q = n / &gcd;
            Scalar::from_integer(if flip { -q } else { q })
        })
        .collect()
}
