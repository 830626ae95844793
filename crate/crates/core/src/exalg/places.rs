use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient rank accepted anywhere in the crate.
pub const MAX_AMBIENT: usize = 32;

/// A strictly ascending set of places drawn from `1..=n`.
///
/// Stored as a bitmask (place `p` is bit `p - 1`). The derived ordering on the
/// mask is the colexicographic order on sets, which is the order
/// `12, 13, 23, 14, 24, 34` used for printed coordinate tables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaceSet(u64);

impl PlaceSet {
    pub const EMPTY: PlaceSet = PlaceSet(0);

    /// Builds a place set from 1-based, strictly ascending places `<= ambient`.
    pub fn new(places: &[usize], ambient: usize) -> Result<Self> {
        let ok = places.windows(2).all(|w| w[0] < w[1])
            && places.iter().all(|&p| p >= 1 && p <= ambient)
            && ambient <= MAX_AMBIENT;
        if !ok {
            return Err(Error::BadPlaces {
                places: places.to_vec(),
                ambient,
            });
        }
        Ok(PlaceSet(places.iter().fold(0, |m, &p| m | 1 << (p - 1))))
    }

    pub const fn from_bits(bits: u64) -> Self {
        PlaceSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn full(ambient: usize) -> Self {
        PlaceSet(low_mask(ambient))
    }

    pub fn singleton(place: usize) -> Self {
        PlaceSet(1 << (place - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, place: usize) -> bool {
        place >= 1 && self.0 >> (place - 1) & 1 == 1
    }

    /// 1-based places in ascending order.
    pub fn places(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1).map(|i| i + 1)
    }

    pub fn complement(self, ambient: usize) -> Self {
        PlaceSet(!self.0 & low_mask(ambient))
    }

    pub fn is_disjoint(self, other: PlaceSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: PlaceSet) -> Self {
        PlaceSet(self.0 | other.0)
    }

    pub fn difference(self, other: PlaceSet) -> Self {
        PlaceSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: PlaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// All `k`-subsets of `1..=ambient` in colexicographic order.
    pub fn subsets(ambient: usize, k: usize) -> Subsets {
        let next = if k > ambient {
            None
        } else {
            Some(low_mask(k))
        };
        Subsets {
            next,
            limit: low_mask(ambient),
        }
    }

    /// Coordinate label: concatenated digits (`134`), or comma separated
    /// when the ambient rank has two-digit places (`1,10`).
    pub fn label(self, ambient: usize) -> String {
        let sep = if ambient >= 10 { "," } else { "" };
        self.places()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Debug for PlaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.label(if self.0 >> 9 != 0 { 10 } else { 0 }))
    }
}

fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Gosper's hack over bitmasks, which yields colex order.
pub struct Subsets {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for Subsets {
    type Item = PlaceSet;

    fn next(&mut self) -> Option<PlaceSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n & !self.limit == 0 && n > cur).then_some(n)
        };
        Some(PlaceSet(cur))
    }
}

/// Sign of the permutation sorting the concatenation `a ++ b`, or 0 when the
/// two sequences share an element.
pub fn merge_sign<T: Ord>(a: &[T], b: &[T]) -> i32 {
    if a.iter().any(|x| b.contains(x)) {
        return 0;
    }
    let all: Vec<&T> = a.iter().chain(b).collect();
    let inversions = (0..all.len())
        .flat_map(|i| (i + 1..all.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| all[i] > all[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// [`merge_sign`] specialised to place sets.
pub fn merge_sign_sets(a: PlaceSet, b: PlaceSet) -> i32 {
    if !a.is_disjoint(b) {
        return 0;
    }
    let mut inversions = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += (a.0 >> y).count_ones();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
