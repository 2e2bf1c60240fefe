//! Published worked examples and the comparison table, as data.
//!
//! Several printed operands are internally inconsistent, so each ambiguous
//! operand is stored as a set of named readings. [`crate::oracle`] decides
//! which reading reproduces the printed results.

use crate::error::Result;
use crate::exclusivity::{exclusivity_degree, ExclusivityMatrix};
use crate::frame::{Frame, Subset};

/// One way of reading an ambiguous printed operand.
#[derive(Debug, Clone, PartialEq)]
pub struct Reading {
    pub name: &'static str,
    pub description: &'static str,
    /// Focal elements as label lists with their masses, as printed or corrected.
    pub assignment: Vec<(Vec<&'static str>, f64)>,
}

impl Reading {
    /// Sum of the listed masses.
    pub fn total(&self) -> f64 {
        self.assignment.iter().map(|(_, m)| m).sum()
    }

    pub fn subsets(&self, frame: &Frame) -> Result<Vec<(Subset, f64)>> {
        self.assignment
            .iter()
            .map(|(labels, m)| Ok((frame.subset(labels.iter().copied())?, *m)))
            .collect()
    }
}

/// Three-element worked example with overlapping elements 1–2 and 2–3.
pub mod ex2 {
    use super::*;

    pub const INTERSECTION_12: f64 = 0.2;
    pub const UNION_12: f64 = 2.0;
    pub const INTERSECTION_23: f64 = 0.6;
    pub const UNION_23: f64 = 3.0;

    pub const DISTANCE: f64 = 0.4312;

    pub const RELATIVE: [[f64; 3]; 3] = [[1.0, 0.1, 0.0], [0.1, 1.0, 0.2], [0.0, 0.2, 1.0]];

    /// Printed layout of the five coordinates: {1}, {2}, {3}, {1,2}, {1,2,3}.
    pub const LAYOUT: [&[&str]; 5] = [&["1"], &["2"], &["3"], &["1", "2"], &["1", "2", "3"]];

    pub const JACCARD: [[f64; 5]; 5] = [
        [1.0, 0.0, 0.0, 1.0 / 2.0, 1.0 / 3.0],
        [0.0, 1.0, 0.0, 1.0 / 2.0, 1.0 / 3.0],
        [0.0, 0.0, 1.0, 0.0, 1.0 / 3.0],
        [1.0 / 2.0, 1.0 / 2.0, 0.0, 1.0, 2.0 / 3.0],
        [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0, 1.0],
    ];

    /// Intersection matrix as printed (four decimals).
    pub const INTERSECTION: [[f64; 5]; 5] = [
        [1.0, 0.1, 0.0, 0.05, 0.0333],
        [0.1, 1.0, 0.2, 0.05, 0.1],
        [0.0, 0.2, 1.0, 0.1, 0.0667],
        [0.05, 0.05, 0.1, 1.0, 0.0667],
        [0.0333, 0.1, 0.0667, 0.0667, 1.0],
    ];

    /// Printed difference vector in [`LAYOUT`] order.
    pub const DIFFERENCE: [f64; 5] = [0.3, -0.2, -0.3, 0.4, -0.2];

    pub fn frame() -> Frame {
        Frame::numbered(3).expect("valid frame")
    }

    pub fn relative() -> Result<ExclusivityMatrix<f64>> {
        ExclusivityMatrix::from_entries(
            3,
            [
                (0, 1, exclusivity_degree(INTERSECTION_12, UNION_12)?),
                (1, 2, exclusivity_degree(INTERSECTION_23, UNION_23)?),
            ],
        )
    }

    /// Candidate readings of the first operand.
    pub fn first_readings() -> Vec<Reading> {
        vec![
            Reading {
                name: "vector",
                description: "masses of the printed coordinate vector (0.3, 0.4, 0.3)",
                assignment: vec![(vec!["1"], 0.3), (vec!["1", "2"], 0.4), (vec!["1", "2", "3"], 0.3)],
            },
            Reading {
                name: "text",
                description: "masses as listed in the prose (0.3, 0.4, 0.4; sum 1.1)",
                assignment: vec![(vec!["1"], 0.3), (vec!["1", "2"], 0.4), (vec!["1", "2", "3"], 0.4)],
            },
        ]
    }

    /// Candidate readings of the second operand.
    pub fn second_readings() -> Vec<Reading> {
        vec![
            Reading {
                name: "matrix-layout",
                description: "0.3 on {3}, the third coordinate of the printed matrices",
                assignment: vec![(vec!["2"], 0.2), (vec!["3"], 0.3), (vec!["1", "2", "3"], 0.5)],
            },
            Reading {
                name: "text",
                description: "0.3 on {2,3}, as listed in the prose",
                assignment: vec![(vec!["2"], 0.2), (vec!["2", "3"], 0.3), (vec!["1", "2", "3"], 0.5)],
            },
        ]
    }
}

/// Two opposing certainties on {Good, Bad}.
pub mod ex3 {
    use super::*;

    pub const NON_EXCLUSIVE_DEGREE: f64 = 0.2;
    pub const BPA_DISTANCE: f64 = 1.0;
    pub const DNUMBER_DISTANCE: f64 = 0.8944;

    pub fn frame() -> Frame {
        Frame::new(["Good", "Bad"]).expect("valid frame")
    }

    pub fn relative() -> Result<ExclusivityMatrix<f64>> {
        ExclusivityMatrix::from_entries(2, [(0, 1, NON_EXCLUSIVE_DEGREE)])
    }

    pub fn first() -> Reading {
        Reading {
            name: "good",
            description: "all mass on {Good}",
            assignment: vec![(vec!["Good"], 1.0)],
        }
    }

    pub fn second() -> Reading {
        Reading {
            name: "bad",
            description: "all mass on {Bad}",
            assignment: vec![(vec!["Bad"], 1.0)],
        }
    }
}

/// Twenty-element comparison: exclusive frame (ex4) and overlapping frame (ex5).
pub mod table {
    use super::*;

    pub const FRAME_SIZE: usize = 20;
    pub const CASES: usize = 20;

    pub const INTERSECTION_12: f64 = 0.2;
    pub const UNION_12: f64 = 2.0;
    pub const INTERSECTION_23: f64 = 0.6;
    pub const UNION_23: f64 = 3.0;

    /// `d_BPA` column; the exclusive-frame D-number column is printed identical.
    pub const BPA: [f64; CASES] = [
        0.7858, 0.6867, 0.5705, 0.4237, 0.1323, 0.3884, 0.5029, 0.5705, 0.6187, 0.6554, 0.6844,
        0.7081, 0.7281, 0.7451, 0.7600, 0.7730, 0.7846, 0.7951, 0.8046, 0.8133,
    ];

    pub const DNUMBER_EXCLUSIVE: [f64; CASES] = BPA;

    /// D-number column with E12 = 0.1, E23 = 0.2.
    pub const DNUMBER_OVERLAPPING: [f64; CASES] = [
        0.7788, 0.6721, 0.5589, 0.4180, 0.1322, 0.3857, 0.4999, 0.5677, 0.6162, 0.6532, 0.6826,
        0.7066, 0.7268, 0.7440, 0.7590, 0.7722, 0.7840, 0.7945, 0.8042, 0.8139,
    ];

    pub fn frame() -> Frame {
        Frame::numbered(FRAME_SIZE).expect("valid frame")
    }

    pub fn relative_overlapping() -> Result<ExclusivityMatrix<f64>> {
        ExclusivityMatrix::from_entries(
            FRAME_SIZE,
            [
                (0, 1, exclusivity_degree(INTERSECTION_12, UNION_12)?),
                (1, 2, exclusivity_degree(INTERSECTION_23, UNION_23)?),
            ],
        )
    }

    pub fn relative_exclusive() -> Result<ExclusivityMatrix<f64>> {
        ExclusivityMatrix::identity(FRAME_SIZE)
    }

    /// `A = {1, ..., k}` for case `k` (1-based).
    pub fn case_subset(k: usize) -> Subset {
        Subset::full(k)
    }

    /// Display form of case `k`'s subset, e.g. `{1}`, `{1,2,3}`, `{1,...,7}`.
    pub fn case_label(k: usize) -> String {
        match k {
            1..=3 => format!(
                "{{{}}}",
                (1..=k).map(|i| i.to_string()).collect::<Vec<_>>().join(",")
            ),
            _ => format!("{{1,...,{k}}}"),
        }
    }

    /// Weights on {2,3,4}, {7}, Ω and A, in that order.
    #[derive(Debug, Clone, Copy, PartialEq)]
    pub struct FirstOperand {
        pub name: &'static str,
        pub description: &'static str,
        pub weights: [f64; 4],
    }

    impl FirstOperand {
        /// Focal assignment for case `k`; weights landing on the same subset add up.
        pub fn assignment(&self, k: usize) -> Vec<(Subset, f64)> {
            let frame = frame();
            let focal = [
                frame.subset(["2", "3", "4"]).expect("labels in frame"),
                frame.subset(["7"]).expect("labels in frame"),
                frame.full(),
                case_subset(k),
            ];
            let mut out: Vec<(Subset, f64)> = Vec::new();
            for (s, w) in focal.into_iter().zip(self.weights) {
                match out.iter_mut().find(|(t, _)| *t == s) {
                    Some((_, m)) => *m += w,
                    None => out.push((s, w)),
                }
            }
            out
        }

        pub fn total(&self) -> f64 {
            self.weights.iter().sum()
        }
    }

    pub fn first_readings() -> Vec<FirstOperand> {
        vec![
            FirstOperand {
                name: "printed",
                description: "weights as printed (0.3, 0.4, 0.4, 0.8; sum 1.9)",
                weights: [0.3, 0.4, 0.4, 0.8],
            },
            FirstOperand {
                name: "normalized",
                description: "small weights on {2,3,4}, {7} and Ω summing to one with A (0.05, 0.05, 0.1, 0.8)",
                weights: [0.05, 0.05, 0.1, 0.8],
            },
            FirstOperand {
                name: "printed-rescaled",
                description: "printed weights divided by their sum 1.9",
                weights: [0.3 / 1.9, 0.4 / 1.9, 0.4 / 1.9, 0.8 / 1.9],
            },
        ]
    }

    /// The second operand: all mass on {1,...,5}.
    pub fn second_assignment() -> Vec<(Subset, f64)> {
        vec![(Subset::full(5), 1.0)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_labels() {
        assert_eq!(table::case_label(1), "{1}");
        assert_eq!(table::case_label(3), "{1,2,3}");
        assert_eq!(table::case_label(4), "{1,...,4}");
    }

    #[test]
    fn full_case_merges_with_omega() {
        let r = &table::first_readings()[1];
        let a = r.assignment(20);
        assert_eq!(a.len(), 3);
        assert!((a.iter().map(|(_, m)| m).sum::<f64>() - 1.0).abs() < 1e-12);
        assert_eq!(r.assignment(5).len(), 4);
    }

    #[test]
    fn derived_relative_matrices() {
        let r = ex2::relative().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((r.get(i, j) - ex2::RELATIVE[i][j]).abs() < 1e-15);
            }
        }
        assert!(table::relative_exclusive().unwrap().is_identity());
        let r5 = table::relative_overlapping().unwrap();
        assert!((r5.get(1, 2) - 0.2).abs() < 1e-15);
        assert_eq!(r5.get(3, 4), 0.0);
    }
}
