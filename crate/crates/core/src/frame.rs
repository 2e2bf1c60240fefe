//! Frames of discernment and their subsets.
//!
//! A [`Frame`] fixes an order on its labels; element `i` owns bit `i` of every
//! [`Subset`] drawn from it. Frames compare by their label sequence, so two
//! independently built frames with the same labels are interchangeable.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest frame a [`Subset`] bitmask can address.
pub const MAX_FRAME_SIZE: usize = 64;

/// Ordered, labeled set of discernment elements.
///
/// Elements are not assumed to be mutually exclusive; how much they overlap is
/// described separately by an [`ExclusivityMatrix`](crate::ExclusivityMatrix).
#[derive(Clone)]
pub struct Frame {
    inner: Arc<FrameInner>,
}

struct FrameInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(Error::FrameTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self {
            inner: Arc::new(FrameInner { labels, index }),
        })
    }

    /// Frame labeled `"1"`, `"2"`, ..., `"n"`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.index.get(label).copied()
    }

    /// The whole frame, Ω.
    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset<I, S>(&self, members: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for member in members {
            let member = member.as_ref();
            let i = self
                .index_of(member)
                .ok_or_else(|| Error::UnknownLabel(member.to_string()))?;
            bits |= 1 << i;
        }
        Ok(Subset(bits))
    }

    /// Builds a subset from element indices.
    pub fn subset_from_indices<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<Subset> {
        let mut bits = 0u64;
        for i in indices {
            if i >= self.len() {
                return Err(Error::FrameMismatch);
            }
            bits |= 1 << i;
        }
        Ok(Subset(bits))
    }

    /// True when no bit at or above `len()` is set.
    pub fn contains(&self, s: Subset) -> bool {
        s.0 & !self.full().0 == 0
    }

    pub fn check(&self, s: Subset) -> Result<Subset> {
        if self.contains(s) {
            Ok(s)
        } else {
            Err(Error::FrameMismatch)
        }
    }

    pub fn cardinality(&self, s: Subset) -> Result<u32> {
        Ok(self.check(s)?.len())
    }

    pub fn intersect(&self, a: Subset, b: Subset) -> Result<Subset> {
        Ok(self.check(a)?.intersect(self.check(b)?))
    }

    pub fn union(&self, a: Subset, b: Subset) -> Result<Subset> {
        Ok(self.check(a)?.union(self.check(b)?))
    }

    pub fn complement(&self, s: Subset) -> Result<Subset> {
        Ok(Subset(!self.check(s)?.0 & self.full().0))
    }

    pub fn member_labels(&self, s: Subset) -> Vec<&str> {
        s.indices().map(|i| self.inner.labels[i].as_str()).collect()
    }

    /// Renders a subset as a comma-separated label list, e.g. `1,2,3`. `∅` renders as `""`.
    pub fn format_subset(&self, s: Subset) -> String {
        self.member_labels(s).join(",")
    }

    pub fn same_as(&self, other: &Frame) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }

    pub(crate) fn ensure_same(&self, other: &Frame) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Frame {}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Frame").field(&self.inner.labels).finish()
    }
}

/// Member of the powerset, stored as a bitmask over frame indices.
///
/// Ordering is by the integer value of the mask, which is the canonical order
/// for vectors and matrix dumps.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn intersect(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Element indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega3() -> Frame {
        Frame::numbered(3).unwrap()
    }

    #[test]
    fn frame_construction() {
        let f = Frame::new(["Good", "Bad"]).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.index_of("Bad"), Some(1));
        assert_eq!(Frame::numbered(20).unwrap().len(), 20);
        assert_eq!(Frame::new(["x", "x"]).unwrap_err(), Error::DuplicateLabel("x".into()));
        assert_eq!(Frame::new(Vec::<String>::new()).unwrap_err(), Error::EmptyFrame);
        assert_eq!(Frame::numbered(65).unwrap_err(), Error::FrameTooLarge(65));
        assert_eq!(Frame::new(["a", ""]).unwrap_err(), Error::EmptyLabel);
        assert_eq!(Frame::numbered(64).unwrap().full(), Subset::from_bits(u64::MAX));
    }

    #[test]
    fn subset_encoding() {
        let f = omega3();
        assert_eq!(f.subset(["1", "2"]).unwrap(), Subset::from_bits(0b011));
        assert_eq!(f.subset(Vec::<&str>::new()).unwrap(), Subset::EMPTY);
        assert_eq!(f.subset(["4"]).unwrap_err(), Error::UnknownLabel("4".into()));
        assert_eq!(f.format_subset(f.subset(["3", "1"]).unwrap()), "1,3");
    }

    #[test]
    fn set_algebra() {
        let f = Frame::numbered(7).unwrap();
        let s = |m: &[&str]| f.subset(m.iter().copied()).unwrap();
        assert_eq!(f.cardinality(s(&["1", "2"])).unwrap(), 2);
        assert_eq!(f.intersect(s(&["1"]), s(&["1", "2"])).unwrap(), s(&["1"]));
        assert_eq!(f.union(s(&["1"]), s(&["1", "2"])).unwrap(), s(&["1", "2"]));
        assert_eq!(f.intersect(s(&["1", "2", "3"]), s(&["7"])).unwrap(), Subset::EMPTY);
        assert_eq!(
            omega3().union(Subset::singleton(0), Subset::singleton(5)).unwrap_err(),
            Error::FrameMismatch
        );
        assert_eq!(f.complement(s(&["1", "2"])).unwrap().len(), 5);
    }

    #[test]
    fn index_iteration_is_ascending() {
        let s = Subset::from_bits(0b1010_0101);
        assert_eq!(s.indices().collect::<Vec<_>>(), vec![0, 2, 5, 7]);
        assert_eq!(s.to_string(), "{0,2,5,7}");
    }

    #[test]
    fn frames_compare_by_labels() {
        assert_eq!(omega3(), omega3());
        assert_ne!(omega3(), Frame::new(["a", "b", "c"]).unwrap());
    }
}
