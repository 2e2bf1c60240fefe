//! Full-powerset evaluation, kept independent of the sparse path.
//!
//! Subsets are materialized as member lists and every matrix covers all 2^N
//! coordinates, including ∅. Nothing here reuses the sparse code's Jaccard,
//! intersection-degree or matrix routines.

use crate::distance::{Interpretation, NEGATIVE_RADICAND_TOLERANCE};
use crate::error::{Error, Result};
use crate::exclusivity::ExclusivityMatrix;
use crate::frame::Subset;
use crate::mass::MassFunction;
use crate::scalar::Scalar;

/// Largest frame the dense oracle accepts.
pub const MAX_DENSE_FRAME: usize = 12;

/// Which coordinates the inner index of `D·I` ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductSupport {
    /// Focal elements of either operand; the sparse path's semantics.
    Focal,
    /// Every subset of the frame.
    FullPowerset,
}

struct Powerset<T> {
    dim: usize,
    jaccard: Vec<T>,
    intersection: Vec<T>,
}

impl<T: Scalar> Powerset<T> {
    fn build(r: &ExclusivityMatrix<T>) -> Result<Self> {
        let n = r.n();
        if n > MAX_DENSE_FRAME {
            return Err(Error::FrameTooLargeForDense {
                n,
                max: MAX_DENSE_FRAME,
            });
        }
        let dim = 1usize << n;
        let members: Vec<Vec<usize>> = (0..dim)
            .map(|mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
            .collect();
        let mut jaccard = vec![T::zero(); dim * dim];
        let mut intersection = vec![T::zero(); dim * dim];
        for a in 0..dim {
            for b in 0..dim {
                let (ma, mb) = (&members[a], &members[b]);
                let common = ma.iter().filter(|i| mb.contains(i)).count();
                let union = ma.len() + mb.len() - common;
                jaccard[a * dim + b] = if union == 0 {
                    T::zero()
                } else {
                    T::from_usize(common).unwrap() / T::from_usize(union).unwrap()
                };
                intersection[a * dim + b] = if ma.is_empty() || mb.is_empty() {
                    T::zero()
                } else if a == b {
                    T::one()
                } else {
                    let mut sum = T::zero();
                    for &i in ma {
                        for &j in mb {
                            if i != j {
                                sum += r.get(i, j);
                            }
                        }
                    }
                    sum / T::from_usize(ma.len() * mb.len()).unwrap()
                };
            }
        }
        Ok(Self {
            dim,
            jaccard,
            intersection,
        })
    }
}

fn dense_vector<T: Scalar>(dim: usize, assignment: &[(Subset, T)]) -> Vec<T> {
    let mut v = vec![T::zero(); dim];
    for &(s, m) in assignment {
        v[s.bits() as usize] = v[s.bits() as usize] + m;
    }
    v
}

/// `½ (v1 - v2)ᵀ M (v1 - v2)` over the whole powerset for raw assignments.
///
/// `r` fixes the frame size. The assignments need not be valid mass functions.
pub fn dense_radicand<T: Scalar>(
    first: &[(Subset, T)],
    second: &[(Subset, T)],
    r: &ExclusivityMatrix<T>,
    interpretation: Interpretation,
    support: ProductSupport,
) -> Result<T> {
    let p = Powerset::build(r)?;
    let dim = p.dim;
    let v1 = dense_vector(dim, first);
    let v2 = dense_vector(dim, second);
    let diff: Vec<T> = v1.iter().zip(&v2).map(|(&a, &b)| a - b).collect();
    let in_support: Vec<bool> = match support {
        ProductSupport::FullPowerset => vec![true; dim],
        ProductSupport::Focal => (0..dim).map(|k| v1[k] != T::zero() || v2[k] != T::zero()).collect(),
    };

    let mut total = T::zero();
    match interpretation {
        Interpretation::MatrixProduct => {
            // vᵀ D P I v with P the diagonal support projector
            for k in 0..dim {
                if !in_support[k] {
                    continue;
                }
                let mut left = T::zero();
                let mut right = T::zero();
                for i in 0..dim {
                    left += diff[i] * p.jaccard[i * dim + k];
                    right += p.intersection[k * dim + i] * diff[i];
                }
                total += left * right;
            }
        }
        Interpretation::Elementwise => {
            for i in 0..dim {
                for j in 0..dim {
                    total += diff[i] * p.jaccard[i * dim + j] * p.intersection[i * dim + j] * diff[j];
                }
            }
        }
    }
    Ok(total * T::from_f64(0.5).unwrap())
}

/// D-number distance evaluated over the full powerset with explicit matrices.
pub fn dense_distance<T: Scalar>(
    m1: &MassFunction<T>,
    m2: &MassFunction<T>,
    r: &ExclusivityMatrix<T>,
    interpretation: Interpretation,
) -> Result<T> {
    if m1.frame() != m2.frame() {
        return Err(Error::FrameMismatch);
    }
    if r.n() != m1.frame().len() {
        return Err(Error::DimensionMismatch {
            matrix: r.n(),
            frame: m1.frame().len(),
        });
    }
    let a: Vec<_> = m1.focal().collect();
    let b: Vec<_> = m2.focal().collect();
    let radicand = dense_radicand(&a, &b, r, interpretation, ProductSupport::Focal)?;
    if radicand < -T::from_f64(NEGATIVE_RADICAND_TOLERANCE).unwrap() {
        return Err(Error::NegativeRadicand(radicand.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(radicand.max(T::zero()).sqrt())
}

/// Jousselme distance over the full powerset (`I` = identity on every coordinate).
pub fn dense_bpa_distance<T: Scalar>(m1: &MassFunction<T>, m2: &MassFunction<T>) -> Result<T> {
    let r = ExclusivityMatrix::identity(m1.frame().len())?;
    dense_distance(m1, m2, &r, Interpretation::MatrixProduct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::Frame;
    use crate::mass::MassKind;

    #[test]
    fn refuses_large_frames() {
        let f = Frame::numbered(13).unwrap();
        let m = MassFunction::<f64>::vacuous(&f);
        let r = ExclusivityMatrix::identity(13).unwrap();
        assert!(matches!(
            dense_distance(&m, &m, &r, Interpretation::MatrixProduct),
            Err(Error::FrameTooLargeForDense { n: 13, .. })
        ));
    }

    #[test]
    fn self_distance_is_zero() {
        let f = Frame::numbered(3).unwrap();
        let m = MassFunction::<f64>::from_labels(
            &f,
            MassKind::DNumber,
            [(&["1"][..], 0.3), (&["2", "3"][..], 0.5)],
        )
        .unwrap();
        let r = ExclusivityMatrix::from_entries(3, [(0, 1, 0.1)]).unwrap();
        for interp in Interpretation::ALL {
            assert_eq!(dense_distance(&m, &m, &r, interp).unwrap(), 0.0);
        }
        assert_eq!(dense_bpa_distance(&m, &m).unwrap(), 0.0);
    }

    #[test]
    fn opposing_certainties() {
        let f = Frame::new(["Good", "Bad"]).unwrap();
        let g = MassFunction::<f64>::certain(&f, f.subset(["Good"]).unwrap());
        let b = MassFunction::<f64>::certain(&f, f.subset(["Bad"]).unwrap());
        assert_eq!(dense_bpa_distance(&g, &b).unwrap(), 1.0);
        let r = ExclusivityMatrix::from_entries(2, [(0, 1, 0.2)]).unwrap();
        let d = dense_distance(&g, &b, &r, Interpretation::MatrixProduct).unwrap();
        assert!((d - 0.8f64.sqrt()).abs() < 1e-15);
    }
}
