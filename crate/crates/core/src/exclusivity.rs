//! Non-exclusiveness between frame elements.
//!
//! Each element is modeled as a linguistic constant with a piecewise-linear
//! membership function. Two constants overlap by the area under the pointwise
//! minimum of their curves (`S`); their union area follows by
//! inclusion–exclusion (`U = |f| + |g| - S`). The non-exclusive degree is
//! `E = S / U`, and the relative matrix collects `E` for every pair with a unit
//! diagonal.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;

/// Piecewise-linear membership curve with compact support.
///
/// Vertices have strictly increasing abscissae, degrees in `[0, 1]`, and the
/// first and last degree are zero. The curve is zero outside its vertex range.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipFunction<T> {
    vertices: Vec<(T, T)>,
}

impl<T: Scalar> MembershipFunction<T> {
    pub fn new(vertices: Vec<(T, T)>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        for (i, &(x, mu)) in vertices.iter().enumerate() {
            if !x.is_finite() || (i > 0 && !(x > vertices[i - 1].0)) {
                return Err(Error::NonIncreasingAxis(i));
            }
            if !(mu >= T::zero() && mu <= T::one()) {
                return Err(Error::MembershipOutOfRange {
                    index: i,
                    value: mu.as_f64(),
                });
            }
        }
        if vertices[0].1 != T::zero() || vertices[vertices.len() - 1].1 != T::zero() {
            return Err(Error::OpenSupport);
        }
        Ok(Self { vertices })
    }

    /// Triangle rising from `left` to a unit peak at `peak`, back to zero at `right`.
    pub fn triangle(left: T, peak: T, right: T) -> Result<Self> {
        Self::new(vec![(left, T::zero()), (peak, T::one()), (right, T::zero())])
    }

    /// Trapezoid with unit plateau on `[top_left, top_right]`.
    pub fn trapezoid(left: T, top_left: T, top_right: T, right: T) -> Result<Self> {
        Self::new(vec![
            (left, T::zero()),
            (top_left, T::one()),
            (top_right, T::one()),
            (right, T::zero()),
        ])
    }

    pub fn vertices(&self) -> &[(T, T)] {
        &self.vertices
    }

    pub fn support(&self) -> (T, T) {
        (self.vertices[0].0, self.vertices[self.vertices.len() - 1].0)
    }

    /// Membership degree at `x` by linear interpolation; zero off the support.
    pub fn eval(&self, x: T) -> T {
        let (lo, hi) = self.support();
        if !(x >= lo && x <= hi) {
            return T::zero();
        }
        // first vertex with abscissa >= x
        let k = self.vertices.partition_point(|&(vx, _)| vx < x);
        let (x1, y1) = self.vertices[k];
        if x1 == x {
            return y1;
        }
        let (x0, y0) = self.vertices[k - 1];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Exact integral of the curve (sum of trapezoid panels).
    pub fn area(&self) -> T {
        let half = T::lit(0.5);
        self.vertices
            .windows(2)
            .fold(T::zero(), |acc, w| acc + (w[1].0 - w[0].0) * (w[0].1 + w[1].1) * half)
    }

    /// Pointwise minimum (fuzzy intersection) of two curves.
    ///
    /// Breakpoints are the union of both vertex sets plus every point where
    /// the two curves cross inside a shared linear piece. The result spans the
    /// union of both supports and is zero wherever either curve is.
    pub fn min_curve(&self, other: &Self) -> Self {
        let mut xs: Vec<T> = self
            .vertices
            .iter()
            .chain(&other.vertices)
            .map(|&(x, _)| x)
            .collect();
        xs.sort_by(|a, b| a.partial_cmp(b).expect("finite abscissae"));
        xs.dedup();

        let mut out = Vec::with_capacity(xs.len() * 2);
        for (k, &x) in xs.iter().enumerate() {
            if k > 0 {
                let a = xs[k - 1];
                let ha = self.eval(a) - other.eval(a);
                let hb = self.eval(x) - other.eval(x);
                if (ha > T::zero() && hb < T::zero()) || (ha < T::zero() && hb > T::zero()) {
                    let xc = a + (x - a) * ha / (ha - hb);
                    if xc > a && xc < x {
                        out.push((xc, self.eval(xc).min(other.eval(xc))));
                    }
                }
            }
            out.push((x, self.eval(x).min(other.eval(x))));
        }
        Self { vertices: out }
    }
}

/// Intersection and union areas of two membership curves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Overlap<T> {
    pub intersection: T,
    pub union: T,
}

impl<T: Scalar> Overlap<T> {
    pub fn degree(&self) -> Result<T> {
        exclusivity_degree(self.intersection, self.union)
    }
}

/// `S = area(min(f, g))`, `U = area(f) + area(g) - S`.
pub fn overlap_areas<T: Scalar>(
    f: &MembershipFunction<T>,
    g: &MembershipFunction<T>,
) -> Result<Overlap<T>> {
    let (af, ag) = (f.area(), g.area());
    let s = f.min_curve(g).area().min(af).min(ag);
    let u = af + ag - s;
    if !(u > T::zero()) {
        return Err(Error::DegenerateUnion(u.as_f64()));
    }
    Ok(Overlap {
        intersection: s,
        union: u,
    })
}

/// Non-exclusive degree `E = S / U`.
pub fn exclusivity_degree<T: Scalar>(intersection: T, union: T) -> Result<T> {
    if !(union > T::zero()) {
        return Err(Error::DegenerateUnion(union.as_f64()));
    }
    if !(intersection >= T::zero() && intersection <= union) {
        return Err(Error::OverlapOutOfRange {
            s: intersection.as_f64(),
            u: union.as_f64(),
        });
    }
    Ok(intersection / union)
}

/// Symmetric `n × n` matrix of non-exclusive degrees with unit diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct ExclusivityMatrix<T> {
    entries: SquareMatrix<T>,
}

impl<T: Scalar> ExclusivityMatrix<T> {
    /// Fully exclusive elements.
    pub fn identity(n: usize) -> Result<Self> {
        Ok(Self {
            entries: SquareMatrix::identity(n)?,
        })
    }

    /// Symmetric completion of sparse off-diagonal degrees; unlisted pairs are exclusive.
    pub fn from_entries<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut m = SquareMatrix::identity(n)?;
        for (i, j, e) in entries {
            if i >= n || j >= n || i == j {
                return Err(Error::IndexOutOfBounds { i, j, n });
            }
            if !(e >= T::zero() && e <= T::one()) {
                return Err(Error::EntryOutOfRange {
                    i,
                    j,
                    value: e.as_f64(),
                });
            }
            m[(i, j)] = e;
            m[(j, i)] = e;
        }
        Ok(Self { entries: m })
    }

    /// Relative matrix of a set of linguistic constants sharing one axis.
    pub fn from_curves(curves: &[MembershipFunction<T>]) -> Result<Self> {
        let n = curves.len();
        let mut m = SquareMatrix::identity(n)?;
        for i in 0..n {
            for j in i + 1..n {
                let e = overlap_areas(&curves[i], &curves[j])?.degree()?;
                m[(i, j)] = e;
                m[(j, i)] = e;
            }
        }
        Ok(Self { entries: m })
    }

    pub fn n(&self) -> usize {
        self.entries.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[(i, j)]
    }

    pub fn matrix(&self) -> &SquareMatrix<T> {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| i == j || self.get(i, j) == T::zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tri(l: f64, p: f64, r: f64) -> MembershipFunction<f64> {
        MembershipFunction::triangle(l, p, r).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            MembershipFunction::new(vec![(0.0, 0.0)]).unwrap_err(),
            Error::TooFewVertices(1)
        );
        assert_eq!(
            MembershipFunction::new(vec![(0.0, 0.0), (0.0, 0.0)]).unwrap_err(),
            Error::NonIncreasingAxis(1)
        );
        assert_eq!(
            MembershipFunction::new(vec![(0.0, 0.0), (1.0, 1.0)]).unwrap_err(),
            Error::OpenSupport
        );
        assert!(matches!(
            MembershipFunction::new(vec![(0.0, 0.0), (1.0, 1.5), (2.0, 0.0)]),
            Err(Error::MembershipOutOfRange { index: 1, .. })
        ));
        assert!(MembershipFunction::new(vec![(0.0, 0.0), (f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn areas() {
        assert_eq!(tri(0.0, 1.0, 2.0).area(), 1.0);
        let flat = MembershipFunction::new(vec![(0.0, 0.0), (5.0, 0.0)]).unwrap();
        assert_eq!(flat.area(), 0.0);
        // panels: 0.5 + 2 + 0.5
        let trap = MembershipFunction::trapezoid(0.0, 1.0, 3.0, 4.0).unwrap();
        assert_eq!(trap.area(), 3.0);
    }

    #[test]
    fn eval_interpolates() {
        let t = tri(0.0, 1.0, 2.0);
        assert_eq!(t.eval(0.5), 0.5);
        assert_eq!(t.eval(1.0), 1.0);
        assert_eq!(t.eval(-1.0), 0.0);
        assert_eq!(t.eval(3.0), 0.0);
    }

    #[test]
    fn min_curve_cases() {
        let a = tri(0.0, 1.0, 2.0);
        let far = tri(5.0, 6.0, 7.0);
        let m = a.min_curve(&far);
        assert!(m.vertices().iter().all(|&(_, mu)| mu == 0.0));
        assert_eq!(m.area(), 0.0);

        assert_eq!(a.min_curve(&a), a);

        // rising edge of b meets falling edge of a: 2 - x = x - 1 at x = 1.5
        let b = tri(1.0, 2.0, 3.0);
        let m = a.min_curve(&b);
        let peak = m
            .vertices()
            .iter()
            .copied()
            .fold((0.0, 0.0), |best, v| if v.1 > best.1 { v } else { best });
        assert_eq!(peak, (1.5, 0.5));
        assert_abs_diff_eq!(m.area(), 0.25, epsilon = 1e-15);
        assert_eq!(m.vertices()[0].1, 0.0);
        assert_eq!(m.vertices().last().unwrap().1, 0.0);
    }

    #[test]
    fn overlap_cases() {
        let a = tri(0.0, 1.0, 2.0);
        let o = overlap_areas(&a, &tri(5.0, 6.0, 7.0)).unwrap();
        assert_eq!((o.intersection, o.union), (0.0, 2.0));
        let o = overlap_areas(&a, &a).unwrap();
        assert_eq!((o.intersection, o.union), (1.0, 1.0));
        assert_eq!(o.degree().unwrap(), 1.0);

        let zero = MembershipFunction::new(vec![(0.0, 0.0), (1.0, 0.0)]).unwrap();
        assert!(matches!(overlap_areas(&zero, &zero), Err(Error::DegenerateUnion(_))));
    }

    // L1 falls over [0.4, 1.2] while L2 rises over it; the tents cross at
    // height 0.5, so S12 = 0.8 * 0.5 / 2 = 0.2 and U12 = 0.6 + 1.6 - 0.2 = 2.
    // L2 falls over [1.2, 3.6] while L3 rises: S23 = 2.4 * 0.5 / 2 = 0.6,
    // U23 = 1.6 + 2.0 - 0.6 = 3. L1 and L3 only touch at x = 1.2.
    fn three_constants() -> [MembershipFunction<f64>; 3] {
        [tri(0.0, 0.4, 1.2), tri(0.4, 1.2, 3.6), tri(1.2, 3.6, 5.2)]
    }

    #[test]
    fn geometry_matching_given_overlap_areas() {
        let [l1, l2, l3] = three_constants();
        let o12 = overlap_areas(&l1, &l2).unwrap();
        assert_abs_diff_eq!(o12.intersection, 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(o12.union, 2.0, epsilon = 1e-12);
        let o23 = overlap_areas(&l2, &l3).unwrap();
        assert_abs_diff_eq!(o23.intersection, 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(o23.union, 3.0, epsilon = 1e-12);
        assert_eq!(overlap_areas(&l1, &l3).unwrap().intersection, 0.0);
    }

    #[test]
    fn degrees() {
        assert_abs_diff_eq!(exclusivity_degree(0.2, 2.0).unwrap(), 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(exclusivity_degree(0.6, 3.0).unwrap(), 0.2, epsilon = 1e-15);
        assert_eq!(exclusivity_degree(0.0, 3.0).unwrap(), 0.0);
        assert!(matches!(exclusivity_degree(0.1, 0.0), Err(Error::DegenerateUnion(_))));
        assert!(matches!(exclusivity_degree(4.0, 3.0), Err(Error::OverlapOutOfRange { .. })));
    }

    #[test]
    fn relative_matrix_from_entries() {
        let r = ExclusivityMatrix::from_entries(2, [(0, 1, 0.2)]).unwrap();
        assert_eq!(r.matrix().row(0), &[1.0, 0.2]);
        assert_eq!(r.matrix().row(1), &[0.2, 1.0]);
        assert!(ExclusivityMatrix::<f64>::from_entries(3, []).unwrap().is_identity());
        assert!(matches!(
            ExclusivityMatrix::from_entries(3, [(0, 1, 1.5)]),
            Err(Error::EntryOutOfRange { .. })
        ));
        assert!(matches!(
            ExclusivityMatrix::from_entries(3, [(0, 3, 0.5)]),
            Err(Error::IndexOutOfBounds { .. })
        ));
        assert!(matches!(
            ExclusivityMatrix::from_entries(3, [(1, 1, 0.5)]),
            Err(Error::IndexOutOfBounds { .. })
        ));
    }

    #[test]
    fn relative_matrix_from_curves() {
        let disjoint = [tri(0.0, 1.0, 2.0), tri(3.0, 4.0, 5.0), tri(6.0, 7.0, 8.0)];
        assert!(ExclusivityMatrix::from_curves(&disjoint).unwrap().is_identity());

        let r = ExclusivityMatrix::from_curves(&three_constants()).unwrap();
        let expected = [[1.0, 0.1, 0.0], [0.1, 1.0, 0.2], [0.0, 0.2, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_abs_diff_eq!(r.get(i, j), expected[i][j], epsilon = 1e-12);
                assert_eq!(r.get(i, j), r.get(j, i));
            }
        }
    }
}
