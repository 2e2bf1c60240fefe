//! Distances between bodies of evidence.
//!
//! Covers classical Dempster-Shafer mass functions (BPAs) and D numbers, whose
//! frame elements may overlap and whose masses may sum to less than one.
//!
//! - [`frame`]: frames of discernment and bitmask subsets.
//! - [`mass`], [`combination`]: mass functions, belief, plausibility, conflict
//!   and Dempster's rule.
//! - [`exclusivity`]: membership curves, overlap areas and the relative matrix.
//! - [`distance`]: the Jousselme distance and the D-number distance, evaluated
//!   over the focal union only.
//! - [`oracle`]: dense full-powerset reference evaluation, fixture resolution
//!   and metric sampling.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//! fix the scalar type.

pub mod combination;
pub mod distance;
pub mod error;
pub mod exclusivity;
pub mod frame;
pub mod mass;
pub mod matrix;
pub mod oracle;
pub mod reference;
pub mod scalar;

pub use combination::{combine_dempster, conflict};
pub use distance::{
    bpa_distance, bpa_distance_scalar, build_matrices, dnumber_distance, dnumber_distance_in,
    intersection_degree, jaccard, DistanceOptions, DistanceReport, FocalSpace, Interpretation,
};
pub use error::{Error, Result};
pub use exclusivity::{
    exclusivity_degree, overlap_areas, ExclusivityMatrix, MembershipFunction, Overlap,
};
pub use frame::{Frame, Subset};
pub use mass::{MassFunction, MassKind};
pub use matrix::SquareMatrix;
pub use scalar::Scalar;

pub type Mass = MassFunction<f64>;
pub type Mass32 = MassFunction<f32>;
pub type RelativeMatrix = ExclusivityMatrix<f64>;
pub type RelativeMatrix32 = ExclusivityMatrix<f32>;
pub type Membership = MembershipFunction<f64>;
pub type Membership32 = MembershipFunction<f32>;
pub type Report = DistanceReport<f64>;
pub type Report32 = DistanceReport<f32>;
pub type Matrix = SquareMatrix<f64>;
