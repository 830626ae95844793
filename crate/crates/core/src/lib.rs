//! Exact computations with flat pieces of projective space.
//!
//! - [`exalg`]: extensors, join, bracket, Hodge star, meets.
//! - [`affine`]: weighted points, boundaries, couples and screws.
//! - [`whitney`]: letter-level tensors, coproduct slices, the geometric product.
//! - [`flags`]: regressive products as flags of subspaces.
//! - [`matroids`]: represented matroids, circuits, derived configurations.
//!
//! All arithmetic is exact over [`Scalar`].

pub mod affine;
pub mod error;
pub mod exalg;
pub mod flags;
pub mod linalg;
pub mod matroids;
pub mod scalar;
pub mod whitney;

pub use error::{Error, Result};
pub use exalg::{Extensor, PlaceSet};
pub use scalar::Scalar;

#[cfg(test)]
pub(crate) mod testutil;
