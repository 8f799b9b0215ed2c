//! Ground sets, bit-indexed subsets and the total element order.
//!
//! Elements are labelled `1..=n`. A [`Subset`] stores element `e` in bit
//! `e - 1` of a `u32`, which caps ground sets at [`MAX_ELEMENTS`]. The total
//! order `<` lives on the [`GroundSet`]; every order-dependent computation
//! reads it from there.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 30;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// All elements `1..=n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        Subset(((1u64 << n) - 1) as u32)
    }

    /// Builds a subset of `1..=n`, rejecting labels outside that range.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I, n: usize) -> Result<Self> {
        let mut bits = 0u32;
        for e in elements {
            if e == 0 || e > n || e > MAX_ELEMENTS {
                return Err(Error::ElementOutOfRange { element: e, size: n });
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset(bits))
    }

    /// Unchecked convenience constructor for literal sets in tests and fixtures.
    ///
    /// Panics on label `0` or labels above [`MAX_ELEMENTS`].
    pub fn of(elements: &[usize]) -> Self {
        Subset::from_elements(elements.iter().copied(), MAX_ELEMENTS).expect("invalid element label")
    }

    pub fn singleton(e: usize) -> Self {
        Subset(1 << (e - 1))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Self {
        Subset(self.0 | (1 << (e - 1)))
    }

    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Subset) -> Self {
        Subset(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest label present, or 0 for the empty set.
    pub fn max_label(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Elements in ascending label order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, starting with the empty set, in increasing
    /// bit value.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

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

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, Subset::with)
    }
}

pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(low + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Submask enumeration (carry-rippler).
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let current = self.next?;
        let following = current.wrapping_sub(self.mask) & self.mask;
        self.next = (following != 0).then_some(following);
        Some(Subset(current))
    }
}

/// A ground set `{1, ..., n}` together with a total order on it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    /// Labels listed from `<`-smallest to largest.
    order: Vec<usize>,
    /// `position[e - 1]` is the rank of `e` in the order.
    position: Vec<usize>,
}

impl GroundSet {
    /// Ground set of size `n` under the natural order `1 < 2 < ... < n`.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        Ok(GroundSet {
            order: (1..=n).collect(),
            position: (0..n).collect(),
        })
    }

    /// Ground set whose order lists `order[0] < order[1] < ...`.
    pub fn with_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements(n));
        }
        let mut position = vec![usize::MAX; n];
        for (i, &e) in order.iter().enumerate() {
            if e == 0 || e > n || position[e - 1] != usize::MAX {
                return Err(Error::InvalidOrder(n));
            }
            position[e - 1] = i;
        }
        Ok(GroundSet { order, position })
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_natural_order(&self) -> bool {
        self.order.iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn contains(&self, x: Subset) -> bool {
        x.is_subset(self.full())
    }

    pub fn check(&self, x: Subset) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x.max_label(),
                size: self.size(),
            })
        }
    }

    /// Position of `e` in the order (0 for the `<`-least element).
    pub fn position(&self, e: usize) -> usize {
        self.position[e - 1]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.position(a) < self.position(b)
    }

    pub fn complement(&self, x: Subset) -> Result<Subset> {
        self.check(x)?;
        Ok(self.full().difference(x))
    }

    /// The `<`-least element of a nonempty subset.
    pub fn min_element(&self, x: Subset) -> Result<usize> {
        self.check(x)?;
        self.least(x)
            .ok_or_else(|| Error::Precondition("minimum of the empty set".into()))
    }

    /// `min_element` without range checks; `None` for the empty set.
    pub(crate) fn least(&self, x: Subset) -> Option<usize> {
        if x.is_empty() {
            return None;
        }
        if x.len() == 1 {
            return x.iter().next();
        }
        x.iter().min_by_key(|&e| self.position(e))
    }

    /// Elements of `x` listed in increasing `<` order.
    pub fn sorted(&self, x: Subset) -> Vec<usize> {
        let mut v: Vec<usize> = x.iter().collect();
        v.sort_by_key(|&e| self.position(e));
        v
    }

    /// Lexicographic comparison of the `<`-sorted sequences of two
    /// equal-size subsets.
    pub fn lex_compare(&self, a: Subset, b: Subset) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        if a.len() != b.len() {
            return Err(Error::Precondition(format!(
                "lexicographic comparison of sets of sizes {} and {}",
                a.len(),
                b.len()
            )));
        }
        Ok(self.lex_unchecked(a, b))
    }

    /// For equal sizes the first differing position holds the least element
    /// of the symmetric difference, so whichever side owns it is smaller.
    pub(crate) fn lex_unchecked(&self, a: Subset, b: Subset) -> Ordering {
        match self.least(a.symmetric_difference(b)) {
            None => Ordering::Equal,
            Some(e) if a.contains(e) => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }

    /// Ascending size, then lexicographic under `<`. Total on all subsets.
    pub fn size_then_lex(&self, a: Subset, b: Subset) -> Ordering {
        a.len().cmp(&b.len()).then_with(|| self.lex_unchecked(a, b))
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet{:?}", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reversed(n: usize) -> GroundSet {
        GroundSet::with_order((1..=n).rev().collect()).unwrap()
    }

    /// Reference comparison: compare the sorted label sequences directly.
    fn lex_oracle(e: &GroundSet, a: Subset, b: Subset) -> Ordering {
        e.sorted(a)
            .iter()
            .map(|&x| e.position(x))
            .cmp(e.sorted(b).iter().map(|&x| e.position(x)))
    }

    #[test]
    fn complement_examples() {
        let e = GroundSet::new(5).unwrap();
        assert_eq!(e.complement(Subset::of(&[3, 4, 5])).unwrap(), Subset::of(&[1, 2]));
        assert_eq!(e.complement(Subset::EMPTY).unwrap(), Subset::of(&[1, 2, 3, 4, 5]));
        assert_eq!(e.complement(e.full()).unwrap(), Subset::EMPTY);
        assert!(matches!(
            e.complement(Subset::of(&[6])),
            Err(Error::ElementOutOfRange { element: 6, size: 5 })
        ));
    }

    #[test]
    fn min_element_examples() {
        let e = GroundSet::new(5).unwrap();
        assert_eq!(e.min_element(Subset::of(&[3, 4, 5])).unwrap(), 3);
        assert_eq!(e.min_element(Subset::of(&[1, 2, 3])).unwrap(), 1);
        assert_eq!(reversed(5).min_element(Subset::of(&[4, 5])).unwrap(), 5);
        assert!(matches!(e.min_element(Subset::EMPTY), Err(Error::Precondition(_))));
    }

    #[test]
    fn lex_compare_examples() {
        let e = GroundSet::new(5).unwrap();
        let cmp = |a: &[usize], b: &[usize]| e.lex_compare(Subset::of(a), Subset::of(b)).unwrap();
        assert_eq!(cmp(&[1, 3], &[2, 3]), Ordering::Less);
        assert_eq!(cmp(&[2, 4], &[2, 5]), Ordering::Less);
        assert_eq!(cmp(&[1, 5], &[1, 5]), Ordering::Equal);
        assert!(e.lex_compare(Subset::of(&[1]), Subset::of(&[1, 2])).is_err());
    }

    #[test]
    fn lex_compare_is_total_order_exhaustively() {
        for e in [
            GroundSet::new(6).unwrap(),
            reversed(6),
            GroundSet::with_order(vec![3, 1, 6, 2, 5, 4]).unwrap(),
        ] {
            let all: Vec<Subset> = e.full().subsets().collect();
            for &a in &all {
                for &b in all.iter().filter(|b| b.len() == a.len()) {
                    let ab = e.lex_compare(a, b).unwrap();
                    assert_eq!(ab, lex_oracle(&e, a, b));
                    assert_eq!(ab.reverse(), e.lex_compare(b, a).unwrap());
                    assert_eq!(ab == Ordering::Equal, a == b);
                }
            }
            // transitivity on one size class
            let threes: Vec<Subset> = all.iter().copied().filter(|s| s.len() == 3).collect();
            for &a in &threes {
                for &b in &threes {
                    for &c in &threes {
                        if e.lex_unchecked(a, b).is_le() && e.lex_unchecked(b, c).is_le() {
                            assert!(e.lex_unchecked(a, c).is_le());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complement_involution_and_min_properties() {
        let e = GroundSet::with_order(vec![4, 2, 6, 1, 3, 5]).unwrap();
        for x in e.full().subsets() {
            assert_eq!(e.complement(e.complement(x).unwrap()).unwrap(), x);
            if let Ok(m) = e.min_element(x) {
                assert!(x.contains(m));
                assert!(x.iter().all(|y| y == m || e.less(m, y)));
            }
        }
    }

    #[test]
    fn invalid_ground_sets() {
        assert_eq!(GroundSet::new(31), Err(Error::TooManyElements(31)));
        assert!(GroundSet::new(30).is_ok());
        assert_eq!(GroundSet::with_order(vec![1, 1, 2]), Err(Error::InvalidOrder(3)));
        assert_eq!(GroundSet::with_order(vec![1, 4, 2]), Err(Error::InvalidOrder(3)));
    }

    #[test]
    fn subset_iteration() {
        let s = Subset::of(&[1, 3, 5]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.subsets().count(), 8);
        assert_eq!(Subset::EMPTY.subsets().collect::<Vec<_>>(), vec![Subset::EMPTY]);
        assert_eq!(Subset::full(30).len(), 30);
        assert_eq!(s.to_string(), "{1,3,5}");
        assert_eq!(Subset::EMPTY.to_string(), "{}");
    }
}
