//! Subsets of a small ground set `{1..n}` stored as bitmasks.

use std::fmt;

/// Largest supported ground set.
pub const MAX_ELEMENTS: u8 = 32;

/// A subset of `{1..=32}`. Element `i` is stored in bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{1..n}`.
    pub fn full(n: u8) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(element: u8) -> Self {
        debug_assert!((1..=MAX_ELEMENTS).contains(&element));
        Subset(1u32 << (element - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = u8>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(Subset::EMPTY, |acc, e| acc.with(e))
    }

    pub fn with(self, element: u8) -> Self {
        Subset(self.0 | Subset::singleton(element).0)
    }

    pub fn contains(self, element: u8) -> bool {
        (1..=MAX_ELEMENTS).contains(&element) && self.0 & (1u32 << (element - 1)) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<u8> {
        (self.0 != 0).then(|| (32 - self.0.leading_zeros()) as u8)
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<u8> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as u8 + 1)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let low = bits.trailing_zeros();
            bits &= bits - 1;
            Some(low as u8 + 1)
        })
    }
}

/// `{a,b,c}` with elements in increasing order.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<u8> for Subset {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}
