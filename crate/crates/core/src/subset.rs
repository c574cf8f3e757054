//! Fixed-width subsets of a finite carrier.

use std::fmt;

use crate::error::Error;

/// Largest carrier a [`Subset`] can index.
pub const MAX_CARRIER: usize = 64;

/// A subset of `{0, .., n-1}` stored as a single machine word.
///
/// Every cone, implication value and deductive system in this crate is a
/// `Subset`. Only bits below the carrier size may ever be set.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: u64,
    n: u8,
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_CARRIER,
            "carrier of {n} elements exceeds {MAX_CARRIER}"
        );
        Subset {
            bits: 0,
            n: n as u8,
        }
    }

    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_CARRIER,
            "carrier of {n} elements exceeds {MAX_CARRIER}"
        );
        Subset {
            bits: mask(n),
            n: n as u8,
        }
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        Self::empty(n).with(x)
    }

    /// Builds a subset from raw bits, rejecting bits outside the carrier.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self, Error> {
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        if bits & !mask(n) != 0 {
            return Err(Error::BitsOutOfRange { n, bits });
        }
        Ok(Subset { bits, n: n as u8 })
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(n: usize, elems: I) -> Self {
        elems.into_iter().fold(Self::empty(n), |s, x| s.with(x))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    /// Size of the carrier this subset indexes.
    #[inline]
    pub fn carrier_len(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        x < self.carrier_len() && self.bits >> x & 1 == 1
    }

    #[must_use]
    pub fn with(self, x: usize) -> Self {
        assert!(
            x < self.carrier_len(),
            "element {x} outside carrier of {}",
            self.n
        );
        Subset {
            bits: self.bits | 1 << x,
            n: self.n,
        }
    }

    #[must_use]
    pub fn without(self, x: usize) -> Self {
        Subset {
            bits: self.bits & !(1u64.checked_shl(x as u32).unwrap_or(0)),
            n: self.n,
        }
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == mask(self.carrier_len())
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Subset {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    pub fn complement_in_carrier(self) -> Self {
        Subset {
            bits: !self.bits & mask(self.carrier_len()),
            n: self.n,
        }
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    /// Smallest member by index.
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter { bits: self.bits }
    }

    /// Renders as `{x,y,...}` in declared-label order.
    pub fn render<S: AsRef<str>>(self, labels: &[S]) -> String {
        let mut out = String::from("{");
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(labels[x].as_ref());
        }
        out.push('}');
        out
    }

    pub(crate) fn check_carrier(self, n: usize) -> Result<(), Error> {
        if self.carrier_len() != n {
            Err(Error::CarrierMismatch {
                expected: n,
                found: self.carrier_len(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = SubsetIter;

    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`Subset`].
#[derive(Clone)]
pub struct SubsetIter {
    bits: u64,
}

impl Iterator for SubsetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let x = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for SubsetIter {}

/// All subsets of `within`, in increasing bit order.
pub fn subsets_of(within: Subset) -> impl Iterator<Item = Subset> {
    let n = within.carrier_len();
    let m = within.bits();
    // standard submask walk, emitted in ascending order
    let mut subs: Vec<u64> = Vec::with_capacity(1 << within.len().min(24));
    let mut s = m;
    loop {
        subs.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & m;
    }
    subs.reverse();
    subs.into_iter()
        .map(move |bits| Subset { bits, n: n as u8 })
}
