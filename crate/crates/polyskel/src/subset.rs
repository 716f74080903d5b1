//! Small index sets over a fixed ground set, stored as bitmasks.
//!
//! Everything in this crate works with subsets of `{0, .., n-1}` for small
//! `n`: poset elements, graph vertices, and polytope vertex indices. A
//! [`Subset`] packs such a set into a `u128`, which caps the ground set at
//! [`Subset::MAX_GROUND`] elements; plenty for the instance sizes the
//! verification harness is built for.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

/// A subset of `{0, .., n-1}` represented as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u128);

impl Subset {
    /// Largest supported ground set size.
    pub const MAX_GROUND: usize = 128;

    /// The empty set.
    pub const EMPTY: Subset = Subset(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        assert!(n <= Self::MAX_GROUND, "ground set too large: {n}");
        if n == Self::MAX_GROUND {
            Subset(u128::MAX)
        } else {
            Subset((1u128 << n) - 1)
        }
    }

    /// The singleton `{i}`.
    pub fn singleton(i: usize) -> Subset {
        assert!(i < Self::MAX_GROUND, "index too large: {i}");
        Subset(1u128 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Subset {
        let mut s = Subset::EMPTY;
        for &i in indices {
            s = s.insert(i);
        }
        s
    }

    pub fn from_bits(bits: u128) -> Subset {
        Subset(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    #[must_use]
    pub fn insert(self, i: usize) -> Subset {
        assert!(i < Self::MAX_GROUND, "index too large: {i}");
        Subset(self.0 | (1u128 << i))
    }

    #[must_use]
    pub fn remove(self, i: usize) -> Subset {
        Subset(self.0 & !(1u128 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < Self::MAX_GROUND && self.0 & (1u128 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of elements.
    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Complement within `{0, .., n-1}`.
    #[must_use]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0) & Subset::full(n)
    }

    /// All `2^card` subsets of `self`, the empty set first, `self` last.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut cur: u128 = 0;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Subset(cur);
            if cur == mask {
                done = true;
            } else {
                cur = (cur.wrapping_sub(mask)) & mask;
            }
            Some(out)
        })
    }

    /// Canonical order used everywhere enumeration output must be
    /// deterministic: by cardinality, then lexicographically on the sorted
    /// index lists.
    pub fn canonical_cmp(a: &Subset, b: &Subset) -> std::cmp::Ordering {
        a.card()
            .cmp(&b.card())
            .then_with(|| a.indices().cmp(&b.indices()))
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// All subsets of `{0, .., n-1}` in canonical order.
pub fn all_subsets_canonical(n: usize) -> Vec<Subset> {
    assert!(n < 26, "exhaustive subset enumeration capped at desk scale");
    let mut out: Vec<Subset> = (0..(1u128 << n)).map(Subset).collect();
    out.sort_by(Subset::canonical_cmp);
    out
}
