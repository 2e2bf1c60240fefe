use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::frame::{Frame, Subset};
use crate::scalar::Scalar;

/// Whether a mass function must be complete.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MassKind {
    /// Basic probability assignment: masses sum to exactly one.
    Bpa,
    /// D number: masses sum to at most one.
    DNumber,
}

impl MassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MassKind::Bpa => "bpa",
            MassKind::DNumber => "dnumber",
        }
    }
}

/// Sparse assignment of mass to focal subsets of a frame.
///
/// Serves both as a BPA and as a D number depending on [`MassKind`]. The empty
/// set never appears as a focal element and every stored mass is positive.
/// Zero-mass assignments are accepted on input and dropped, since a subset with
/// no mass is simply not focal.
#[derive(Debug, Clone, PartialEq)]
pub struct MassFunction<T> {
    frame: Frame,
    focal: BTreeMap<Subset, T>,
    kind: MassKind,
    complete: bool,
}

impl<T: Scalar> MassFunction<T> {
    pub fn new<I>(frame: &Frame, kind: MassKind, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, T)>,
    {
        let mut focal = BTreeMap::new();
        for (subset, mass) in assignments {
            frame.check(subset)?;
            let value = mass.as_f64();
            if subset.is_empty() {
                if mass == T::zero() {
                    continue;
                }
                return Err(Error::EmptySetMass(value));
            }
            if !(mass >= T::zero() && mass <= T::one()) {
                return Err(Error::MassOutOfRange {
                    subset: frame.format_subset(subset),
                    value,
                });
            }
            if focal.contains_key(&subset) {
                return Err(Error::DuplicateFocal(frame.format_subset(subset)));
            }
            if mass > T::zero() {
                focal.insert(subset, mass);
            }
        }

        let total = focal.values().fold(T::zero(), |acc, &m| acc + m);
        let tol = T::sum_tolerance();
        let complete = (total - T::one()).abs() <= tol;
        match kind {
            MassKind::Bpa if !complete => return Err(Error::SumNotOne(total.as_f64())),
            MassKind::DNumber if total > T::one() + tol => {
                return Err(Error::SumExceedsOne(total.as_f64()))
            }
            _ => {}
        }
        Ok(Self {
            frame: frame.clone(),
            focal,
            kind,
            complete,
        })
    }

    /// Convenience constructor taking label lists for focal elements.
    pub fn from_labels<'a, I>(frame: &Frame, kind: MassKind, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [&'a str], T)>,
    {
        let pairs = assignments
            .into_iter()
            .map(|(labels, m)| Ok((frame.subset(labels.iter().copied())?, m)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(frame, kind, pairs)
    }

    /// Total ignorance: `m(Ω) = 1`.
    pub fn vacuous(frame: &Frame) -> Self {
        Self::certain(frame, frame.full())
    }

    /// All mass on a single non-empty subset.
    pub fn certain(frame: &Frame, subset: Subset) -> Self {
        assert!(!subset.is_empty() && frame.contains(subset));
        Self {
            frame: frame.clone(),
            focal: BTreeMap::from([(subset, T::one())]),
            kind: MassKind::Bpa,
            complete: true,
        }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn kind(&self) -> MassKind {
        self.kind
    }

    /// Masses sum to one within tolerance.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn total(&self) -> T {
        self.focal.values().fold(T::zero(), |acc, &m| acc + m)
    }

    pub fn mass(&self, s: Subset) -> T {
        self.focal.get(&s).copied().unwrap_or_else(T::zero)
    }

    /// Focal elements with their masses, ascending by bitmask.
    pub fn focal(&self) -> impl Iterator<Item = (Subset, T)> + '_ {
        self.focal.iter().map(|(&s, &m)| (s, m))
    }

    pub fn focal_map(&self) -> &BTreeMap<Subset, T> {
        &self.focal
    }

    pub fn num_focal(&self) -> usize {
        self.focal.len()
    }

    /// Same assignment reinterpreted as another kind, revalidated.
    pub fn with_kind(&self, kind: MassKind) -> Result<Self> {
        Self::new(&self.frame, kind, self.focal())
    }

    /// `Bel(A)`: total mass of focal elements contained in `a`.
    pub fn belief(&self, a: Subset) -> Result<T> {
        self.frame.check(a)?;
        Ok(self
            .focal()
            .filter(|(b, _)| b.is_subset_of(a))
            .fold(T::zero(), |acc, (_, m)| acc + m))
    }

    /// `Pl(A)`: total mass of focal elements meeting `a`.
    pub fn plausibility(&self, a: Subset) -> Result<T> {
        self.frame.check(a)?;
        Ok(self
            .focal()
            .filter(|(b, _)| !b.is_disjoint(a))
            .fold(T::zero(), |acc, (_, m)| acc + m))
    }
}
