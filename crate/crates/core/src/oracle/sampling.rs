//! Seeded random mass functions and metric-axiom sampling.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::distance::bpa_distance;
use crate::error::Result;
use crate::frame::{Frame, Subset};
use crate::mass::{MassFunction, MassKind};

/// Portable, seedable generator used by every sampler in this crate.
pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random mass function with 1 to `max_focal` distinct non-empty focal elements.
///
/// BPAs are normalized to one; D numbers are scaled to a total drawn from
/// `[0.5, 1]`.
pub fn random_mass(
    rng: &mut SampleRng,
    frame: &Frame,
    kind: MassKind,
    max_focal: usize,
) -> MassFunction<f64> {
    let nonempty = (1u64 << frame.len().min(63)) - 1;
    let cap = (max_focal as u64).min(nonempty).max(1) as usize;
    let k = rng.random_range(1..=cap);
    let subsets: Vec<Subset> = if nonempty <= 4096 {
        index::sample(rng, nonempty as usize, k)
            .into_iter()
            .map(|i| Subset::from_bits(i as u64 + 1))
            .collect()
    } else {
        let mut out: Vec<Subset> = Vec::with_capacity(k);
        while out.len() < k {
            let s = Subset::from_bits(rng.random_range(1..=nonempty));
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out
    };
    let weights: Vec<f64> = (0..k).map(|_| rng.random_range(0.05..1.0)).collect();
    let sum: f64 = weights.iter().sum();
    let scale = match kind {
        MassKind::Bpa => 1.0,
        MassKind::DNumber => rng.random_range(0.5..=1.0),
    };
    let masses: Vec<f64> = weights.iter().map(|w| w / sum * scale).collect();
    MassFunction::new(frame, kind, subsets.into_iter().zip(masses))
        .expect("normalized random weights form a valid mass function")
}

/// Outcome of [`metric_property_sample`].
#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    pub triples: usize,
    pub frame_size: usize,
    pub seed: u64,
    /// Largest `|d(x, y) - d(y, x)|`.
    pub max_asymmetry: f64,
    /// Pairs where `d(x, x) ≠ 0`, or `d(x, y) = 0` for distinct `x`, `y`.
    pub identity_failures: usize,
    /// Largest `d(x, z) - d(x, y) - d(y, z)`, floored at zero.
    pub max_triangle_violation: f64,
    /// Triples whose triangle violation exceeds `1e-9`.
    pub triangle_failures: usize,
}

impl MetricReport {
    pub fn passes(&self) -> bool {
        self.max_asymmetry == 0.0 && self.identity_failures == 0 && self.triangle_failures == 0
    }
}

/// Checks symmetry, identity of indiscernibles and the triangle inequality of
/// the Jousselme distance on `n_triples` random BPA triples.
pub fn metric_property_sample(n_triples: usize, frame_size: usize, seed: u64) -> Result<MetricReport> {
    let frame = Frame::numbered(frame_size)?;
    let mut rng = rng(seed);
    let mut report = MetricReport {
        triples: n_triples,
        frame_size,
        seed,
        max_asymmetry: 0.0,
        identity_failures: 0,
        max_triangle_violation: 0.0,
        triangle_failures: 0,
    };
    for _ in 0..n_triples {
        let x = random_mass(&mut rng, &frame, MassKind::Bpa, 6);
        let y = random_mass(&mut rng, &frame, MassKind::Bpa, 6);
        let z = random_mass(&mut rng, &frame, MassKind::Bpa, 6);

        let xy = bpa_distance(&x, &y)?;
        let yx = bpa_distance(&y, &x)?;
        report.max_asymmetry = report.max_asymmetry.max((xy - yx).abs());

        for (a, b, d) in [(&x, &x, bpa_distance(&x, &x)?), (&x, &y, xy)] {
            let equal = a.focal_map() == b.focal_map();
            if (d == 0.0) != equal {
                report.identity_failures += 1;
            }
        }

        let violation = (bpa_distance(&x, &z)? - xy - bpa_distance(&y, &z)?).max(0.0);
        report.max_triangle_violation = report.max_triangle_violation.max(violation);
        if violation > 1e-9 {
            report.triangle_failures += 1;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_masses_are_valid() {
        let mut r = rng(7);
        for n in 1..=10 {
            let f = Frame::numbered(n).unwrap();
            for kind in [MassKind::Bpa, MassKind::DNumber] {
                let m = random_mass(&mut r, &f, kind, 6);
                assert!(m.num_focal() >= 1 && m.num_focal() <= 6);
                assert!(m.total() <= 1.0 + 1e-12);
            }
        }
        let big = Frame::numbered(40).unwrap();
        assert!(random_mass(&mut r, &big, MassKind::Bpa, 6).num_focal() >= 1);
    }

    #[test]
    fn empty_sample() {
        let rep = metric_property_sample(0, 4, 1).unwrap();
        assert_eq!(rep.triples, 0);
        assert!(rep.passes());
        assert_eq!(rep.max_triangle_violation, 0.0);
    }

    #[test]
    fn deterministic_per_seed() {
        let a = metric_property_sample(50, 4, 99).unwrap();
        let b = metric_property_sample(50, 4, 99).unwrap();
        assert_eq!(a, b);
        assert!(a.passes());
    }
}
