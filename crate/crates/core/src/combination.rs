//! Conflict coefficient and Dempster's rule for BPAs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mass::{MassFunction, MassKind};
use crate::scalar::Scalar;

/// `K`: combined mass of all pairs of disjoint focal elements.
pub fn conflict<T: Scalar>(m1: &MassFunction<T>, m2: &MassFunction<T>) -> Result<T> {
    check_operands(m1, m2)?;
    let mut k = T::zero();
    for (b, x) in m1.focal() {
        for (c, y) in m2.focal() {
            if b.is_disjoint(c) {
                k += x * y;
            }
        }
    }
    Ok(k)
}

/// Orthogonal sum `m1 ⊕ m2`, renormalized by `1 - K`.
///
/// Fails with [`Error::TotalConflict`] when `K` is within `1e-12` of one.
pub fn combine_dempster<T: Scalar>(
    m1: &MassFunction<T>,
    m2: &MassFunction<T>,
) -> Result<MassFunction<T>> {
    check_operands(m1, m2)?;
    let mut joint = BTreeMap::new();
    let mut k = T::zero();
    for (b, x) in m1.focal() {
        for (c, y) in m2.focal() {
            let a = b.intersect(c);
            if a.is_empty() {
                k += x * y;
            } else {
                *joint.entry(a).or_insert_with(T::zero) += x * y;
            }
        }
    }
    if k >= T::one() - T::lit(1e-12) {
        return Err(Error::TotalConflict(k.as_f64()));
    }
    let norm = T::one() - k;
    MassFunction::new(
        m1.frame(),
        MassKind::Bpa,
        joint.into_iter().map(|(a, m)| (a, m / norm)),
    )
}

fn check_operands<T: Scalar>(m1: &MassFunction<T>, m2: &MassFunction<T>) -> Result<()> {
    m1.frame().ensure_same(m2.frame())?;
    if m1.kind() != MassKind::Bpa || m2.kind() != MassKind::Bpa {
        return Err(Error::RequiresBpa);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::Frame;
    use approx::assert_abs_diff_eq;

    fn good_bad() -> (MassFunction<f64>, MassFunction<f64>) {
        let f = Frame::new(["Good", "Bad"]).unwrap();
        (
            MassFunction::certain(&f, f.subset(["Good"]).unwrap()),
            MassFunction::certain(&f, f.subset(["Bad"]).unwrap()),
        )
    }

    #[test]
    fn opposing_certainties_conflict_totally() {
        let (g, b) = good_bad();
        assert_eq!(conflict(&g, &b).unwrap(), 1.0);
        assert!(matches!(combine_dempster(&g, &b), Err(Error::TotalConflict(_))));
    }

    #[test]
    fn vacuous_has_no_conflict_and_is_identity() {
        let f = Frame::numbered(3).unwrap();
        let v = MassFunction::<f64>::vacuous(&f);
        assert_eq!(conflict(&v, &v).unwrap(), 0.0);
        let m = MassFunction::from_labels(
            &f,
            MassKind::Bpa,
            [(&["1"][..], 0.3), (&["1", "2"][..], 0.4), (&["1", "2", "3"][..], 0.3)],
        )
        .unwrap();
        assert_eq!(combine_dempster(&m, &v).unwrap(), m);
    }

    // Expected values worked by hand:
    // m1 = {1}:0.6, {2,3}:0.4 ; m2 = {1,2}:0.5, {3}:0.5
    // pairs: {1}∩{1,2}={1} .30, {1}∩{3}=∅ .30, {2,3}∩{1,2}={2} .20, {2,3}∩{3}={3} .20
    // K = 0.3 ; m = {1}: .3/.7, {2}: .2/.7, {3}: .2/.7
    #[test]
    fn three_element_combination() {
        let f = Frame::numbered(3).unwrap();
        let m1 = MassFunction::from_labels(
            &f,
            MassKind::Bpa,
            [(&["1"][..], 0.6), (&["2", "3"][..], 0.4)],
        )
        .unwrap();
        let m2 = MassFunction::from_labels(
            &f,
            MassKind::Bpa,
            [(&["1", "2"][..], 0.5), (&["3"][..], 0.5)],
        )
        .unwrap();
        assert_abs_diff_eq!(conflict(&m1, &m2).unwrap(), 0.3, epsilon = 1e-15);
        let m = combine_dempster(&m1, &m2).unwrap();
        assert_eq!(m.num_focal(), 3);
        assert_abs_diff_eq!(m.mass(f.subset(["1"]).unwrap()), 3.0 / 7.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.mass(f.subset(["2"]).unwrap()), 2.0 / 7.0, epsilon = 1e-15);
        assert_abs_diff_eq!(m.mass(f.subset(["3"]).unwrap()), 2.0 / 7.0, epsilon = 1e-15);
    }

    #[test]
    fn dnumbers_are_rejected() {
        let f = Frame::numbered(2).unwrap();
        let d = MassFunction::<f64>::from_labels(&f, MassKind::DNumber, [(&["1"][..], 0.5)]).unwrap();
        let v = MassFunction::vacuous(&f);
        assert_eq!(conflict(&d, &v).unwrap_err(), Error::RequiresBpa);
        let other = MassFunction::<f64>::vacuous(&Frame::numbered(3).unwrap());
        assert_eq!(conflict(&v, &other).unwrap_err(), Error::FrameMismatch);
    }
}
