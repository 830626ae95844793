//! Coordinate-level exterior algebra: extensors built from points, join,
//! bracket, Hodge star, decomposability and the Grassmann–Cayley meet.
//!
//! Coordinates are stored sparsely and iterated in colexicographic label
//! order (`12, 13, 23, 14, 24, 34` in rank 4).

mod extensor;
mod meet;
mod places;

pub use extensor::Extensor;
pub use meet::{meet, meet_coord, meet_coord_sign, meet_sweedler, meet_sweedler_right};
pub(crate) use meet::splits;
pub use places::{merge_sign, merge_sign_sets, PlaceSet, Subsets, MAX_AMBIENT};
