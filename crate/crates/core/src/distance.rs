//! Evidence distances.
//!
//! Both distances are quadratic forms in the difference of two mass vectors
//! indexed by the powerset. The difference vanishes outside the union of the
//! operands' focal elements, so every matrix here is built over that
//! [`FocalSpace`] only; a 20-element frame never touches its 2^20 coordinates.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exclusivity::ExclusivityMatrix;
use crate::frame::{Frame, Subset};
use crate::mass::MassFunction;
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;

/// Radicands below `-NEGATIVE_RADICAND_TOLERANCE` are reported as errors.
pub const NEGATIVE_RADICAND_TOLERANCE: f64 = 1e-9;

/// Union of two mass functions' focal elements, in a fixed order.
#[derive(Clone, PartialEq, Eq)]
pub struct FocalSpace {
    frame: Frame,
    subsets: Vec<Subset>,
    index: HashMap<Subset, usize>,
}

impl FocalSpace {
    /// Canonical space: sorted union of both focal sets.
    pub fn of<T: Scalar>(m1: &MassFunction<T>, m2: &MassFunction<T>) -> Result<Self> {
        m1.frame().ensure_same(m2.frame())?;
        let mut subsets: Vec<Subset> = m1
            .focal_map()
            .keys()
            .chain(m2.focal_map().keys())
            .copied()
            .collect();
        subsets.sort_unstable();
        subsets.dedup();
        Self::from_subsets(m1.frame(), subsets)
    }

    /// Space over an explicit list of distinct, non-empty subsets in the given order.
    pub fn from_subsets(frame: &Frame, subsets: Vec<Subset>) -> Result<Self> {
        let mut index = HashMap::with_capacity(subsets.len());
        for (k, &s) in subsets.iter().enumerate() {
            frame.check(s)?;
            if s.is_empty() || index.insert(s, k).is_some() {
                return Err(Error::InvalidOrdering);
            }
        }
        Ok(Self {
            frame: frame.clone(),
            subsets,
            index,
        })
    }

    /// Focal union of `m1` and `m2` laid out in `order`, which must be a
    /// permutation of that union.
    pub fn with_order<T: Scalar>(
        m1: &MassFunction<T>,
        m2: &MassFunction<T>,
        order: Vec<Subset>,
    ) -> Result<Self> {
        let canonical = Self::of(m1, m2)?;
        let space = Self::from_subsets(m1.frame(), order)?;
        if space.len() != canonical.len()
            || !canonical.subsets.iter().all(|s| space.index.contains_key(s))
        {
            return Err(Error::InvalidOrdering);
        }
        Ok(space)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn position(&self, s: Subset) -> Option<usize> {
        self.index.get(&s).copied()
    }

    /// Coordinates of `m` on this space. Fails if `m` has a focal element outside it.
    pub fn coordinates<T: Scalar>(&self, m: &MassFunction<T>) -> Result<Vec<T>> {
        self.frame.ensure_same(m.frame())?;
        let mut v = vec![T::zero(); self.len()];
        for (s, x) in m.focal() {
            let k = self.position(s).ok_or(Error::InvalidOrdering)?;
            v[k] = x;
        }
        Ok(v)
    }

    /// `v1 - v2` on this space.
    pub fn difference<T: Scalar>(&self, m1: &MassFunction<T>, m2: &MassFunction<T>) -> Result<Vec<T>> {
        let a = self.coordinates(m1)?;
        let b = self.coordinates(m2)?;
        Ok(a.into_iter().zip(b).map(|(x, y)| x - y).collect())
    }

    pub fn labels(&self) -> Vec<String> {
        self.subsets.iter().map(|&s| self.frame.format_subset(s)).collect()
    }
}

impl fmt::Debug for FocalSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels()).finish()
    }
}

/// How `D·I` combines the Jaccard and intersection matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Interpretation {
    /// Ordinary matrix product over the focal space.
    #[default]
    MatrixProduct,
    /// Entrywise (Hadamard) product.
    Elementwise,
}

impl Interpretation {
    pub const ALL: [Interpretation; 2] = [Interpretation::MatrixProduct, Interpretation::Elementwise];

    pub fn as_str(self) -> &'static str {
        match self {
            Interpretation::MatrixProduct => "matrix-product",
            Interpretation::Elementwise => "elementwise-product",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DistanceOptions {
    pub interpretation: Interpretation,
    /// Clamp a negative radicand to zero instead of failing. The report's
    /// `clamped` flag records that this happened.
    pub clamp_negative: bool,
}

/// Result of a D-number distance evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport<T> {
    pub value: T,
    /// `½ (d1 - d2)ᵀ M (d1 - d2)` before the square root.
    pub radicand: T,
    pub interpretation: Interpretation,
    pub focal_space: FocalSpace,
    /// Radicand was below `-1e-9` and clamped to zero.
    pub clamped: bool,
}

/// `|A ∩ B| / |A ∪ B|`, with `∅` against `∅` defined as 0.
pub fn jaccard<T: Scalar>(a: Subset, b: Subset) -> T {
    let union = a.union(b).len();
    if union == 0 {
        return T::zero();
    }
    T::from_count(a.intersect(b).len()) / T::from_count(union)
}

/// Average non-exclusive degree between the elements of two subsets.
///
/// Identical subsets have degree 1. Otherwise every ordered pair `(i, j)` with
/// `i ∈ a`, `j ∈ b`, `i ≠ j` contributes `E_ij`, and the sum is divided by
/// `|a|·|b|`.
pub fn intersection_degree<T: Scalar>(r: &ExclusivityMatrix<T>, a: Subset, b: Subset) -> Result<T> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let full = Subset::full(r.n());
    if !a.is_subset_of(full) || !b.is_subset_of(full) {
        return Err(Error::FrameMismatch);
    }
    if a == b {
        return Ok(T::one());
    }
    let mut sum = T::zero();
    for i in a.indices() {
        for j in b.indices() {
            if i != j {
                sum += r.get(i, j);
            }
        }
    }
    Ok(sum / T::from_count(a.len() * b.len()))
}

/// Jaccard matrix `D` and intersection matrix `I` over a focal space.
pub fn build_matrices<T: Scalar>(
    space: &FocalSpace,
    r: &ExclusivityMatrix<T>,
) -> Result<(SquareMatrix<T>, SquareMatrix<T>)> {
    check_dimension(space.frame(), r)?;
    let d = jaccard_matrix(space)?;
    let s = space.subsets();
    let mut i_mat = SquareMatrix::zeros(s.len())?;
    for a in 0..s.len() {
        for b in a..s.len() {
            let x = intersection_degree(r, s[a], s[b])?;
            i_mat[(a, b)] = x;
            i_mat[(b, a)] = x;
        }
    }
    Ok((d, i_mat))
}

pub fn jaccard_matrix<T: Scalar>(space: &FocalSpace) -> Result<SquareMatrix<T>> {
    let s = space.subsets();
    SquareMatrix::from_fn(s.len(), |a, b| jaccard(s[a], s[b]))
}

/// Symmetric part of `D·I` (or `D∘I`) over the space.
pub fn effective_matrix<T: Scalar>(
    space: &FocalSpace,
    r: &ExclusivityMatrix<T>,
    interpretation: Interpretation,
) -> Result<SquareMatrix<T>> {
    let (d, i_mat) = build_matrices(space, r)?;
    let m = match interpretation {
        Interpretation::MatrixProduct => d.matmul(&i_mat)?,
        Interpretation::Elementwise => d.hadamard(&i_mat)?,
    };
    Ok(m.symmetric_part())
}

/// Jousselme distance `sqrt(½ (m1 - m2)ᵀ D (m1 - m2))`.
///
/// Incomplete operands are accepted and used as-is.
pub fn bpa_distance<T: Scalar>(m1: &MassFunction<T>, m2: &MassFunction<T>) -> Result<T> {
    let space = FocalSpace::of(m1, m2)?;
    let v = space.difference(m1, m2)?;
    let radicand = T::lit(0.5) * jaccard_matrix(&space)?.quadratic_form(&v);
    Ok(radicand.max(T::zero()).sqrt())
}

/// `⟨m1, m2⟩ = Σ_A Σ_B m1(A) m2(B) |A ∩ B| / |A ∪ B|`.
pub fn scalar_product<T: Scalar>(m1: &MassFunction<T>, m2: &MassFunction<T>) -> Result<T> {
    m1.frame().ensure_same(m2.frame())?;
    let mut acc = T::zero();
    for (a, x) in m1.focal() {
        for (b, y) in m2.focal() {
            acc += x * y * jaccard::<T>(a, b);
        }
    }
    Ok(acc)
}

/// Jousselme distance through norms: `sqrt(½ (‖m1‖² + ‖m2‖² - 2⟨m1, m2⟩))`.
pub fn bpa_distance_scalar<T: Scalar>(m1: &MassFunction<T>, m2: &MassFunction<T>) -> Result<T> {
    let cross = scalar_product(m1, m2)?;
    let n1 = scalar_product(m1, m1)?;
    let n2 = scalar_product(m2, m2)?;
    let radicand = T::lit(0.5) * (n1 + n2 - T::lit(2.0) * cross);
    Ok(radicand.max(T::zero()).sqrt())
}

/// D-number distance `sqrt(½ (d1 - d2)ᵀ D·I (d1 - d2))` on the canonical focal space.
pub fn dnumber_distance<T: Scalar>(
    m1: &MassFunction<T>,
    m2: &MassFunction<T>,
    r: &ExclusivityMatrix<T>,
    options: DistanceOptions,
) -> Result<DistanceReport<T>> {
    let space = FocalSpace::of(m1, m2)?;
    dnumber_distance_in(space, m1, m2, r, options)
}

/// As [`dnumber_distance`], over a caller-ordered focal space.
pub fn dnumber_distance_in<T: Scalar>(
    space: FocalSpace,
    m1: &MassFunction<T>,
    m2: &MassFunction<T>,
    r: &ExclusivityMatrix<T>,
    options: DistanceOptions,
) -> Result<DistanceReport<T>> {
    let v = space.difference(m1, m2)?;
    let radicand = radicand_on(&space, &v, r, options.interpretation)?;
    let (value, clamped) = finish(radicand, options.clamp_negative)?;
    Ok(DistanceReport {
        value,
        radicand,
        interpretation: options.interpretation,
        focal_space: space,
        clamped,
    })
}

/// `½ vᵀ M v` for an arbitrary coordinate vector on `space`.
///
/// Used directly when the coordinates come from assignments that are not
/// valid mass functions (e.g. candidate readings that sum above one).
pub fn radicand_on<T: Scalar>(
    space: &FocalSpace,
    diff: &[T],
    r: &ExclusivityMatrix<T>,
    interpretation: Interpretation,
) -> Result<T> {
    if diff.len() != space.len() {
        return Err(Error::InvalidOrdering);
    }
    let m = effective_matrix(space, r, interpretation)?;
    Ok(T::lit(0.5) * m.quadratic_form(diff))
}

fn finish<T: Scalar>(radicand: T, clamp: bool) -> Result<(T, bool)> {
    if radicand < -T::lit(NEGATIVE_RADICAND_TOLERANCE) {
        if clamp {
            return Ok((T::zero(), true));
        }
        return Err(Error::NegativeRadicand(radicand.as_f64()));
    }
    Ok((radicand.max(T::zero()).sqrt(), false))
}

fn check_dimension<T: Scalar>(frame: &Frame, r: &ExclusivityMatrix<T>) -> Result<()> {
    if r.n() != frame.len() {
        return Err(Error::DimensionMismatch {
            matrix: r.n(),
            frame: frame.len(),
        });
    }
    Ok(())
}
