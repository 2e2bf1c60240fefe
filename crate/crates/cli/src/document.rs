//! Evidence documents: a strict TOML format for a frame, named mass
//! functions and exclusivity data.
//!
//! ```toml
//! frame = ["1", "2", "3"]
//!
//! [masses.d1]
//! kind = "dnumber"
//! focal = { "1" = 0.3, "1,2" = 0.4, "1,2,3" = 0.3 }
//!
//! [exclusivity]
//! pairs = [
//!     { a = "1", b = "2", s = 0.2, u = 2.0 },
//!     { a = "2", b = "3", e = 0.2 },
//! ]
//! ```
//!
//! Focal keys are comma-separated labels; `""` is the empty set. Exclusivity
//! is given either as `pairs` (a degree `e`, or overlap and union areas `s`
//! and `u`; unlisted pairs are exclusive) or as `curves`, one membership
//! curve per element written as `[[x, mu], ...]`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::Range;

use dnum_core::{exclusivity_degree, Frame, Mass, MassKind, Membership, RelativeMatrix, Subset};
use serde::de::{Deserializer, Visitor};
use serde::Deserialize;
use toml::Spanned;

use crate::error::CliError;

/// Integer or float.
#[derive(Debug, Clone, Copy)]
struct Number(f64);

impl<'de> Deserialize<'de> for Number {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct NumberVisitor;
        impl Visitor<'_> for NumberVisitor {
            type Value = Number;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a number")
            }
            fn visit_f64<E>(self, v: f64) -> Result<Number, E> {
                Ok(Number(v))
            }
            fn visit_i64<E>(self, v: i64) -> Result<Number, E> {
                Ok(Number(v as f64))
            }
            fn visit_u64<E>(self, v: u64) -> Result<Number, E> {
                Ok(Number(v as f64))
            }
        }
        d.deserialize_any(NumberVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    frame: Spanned<Vec<String>>,
    #[serde(default)]
    masses: BTreeMap<String, RawMass>,
    exclusivity: Option<Spanned<RawExclusivity>>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawKind {
    Bpa,
    Dnumber,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMass {
    kind: RawKind,
    focal: Spanned<BTreeMap<Spanned<String>, Spanned<Number>>>,
}

type RawCurves = BTreeMap<Spanned<String>, Spanned<Vec<(Number, Number)>>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExclusivity {
    pairs: Option<Vec<Spanned<RawPair>>>,
    curves: Option<Spanned<RawCurves>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    a: String,
    b: String,
    e: Option<Number>,
    s: Option<Number>,
    u: Option<Number>,
}

/// How the non-exclusive degree of a pair is specified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PairValue {
    Degree(f64),
    Areas { intersection: f64, union: f64 },
}

/// One off-diagonal relative-matrix entry, `a < b` as frame indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairEntry {
    pub a: usize,
    pub b: usize,
    pub value: PairValue,
}

impl PairEntry {
    pub fn degree(&self) -> dnum_core::Result<f64> {
        match self.value {
            PairValue::Degree(e) => Ok(e),
            PairValue::Areas { intersection, union } => exclusivity_degree(intersection, union),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Exclusivity {
    /// Sorted by `(a, b)`.
    Pairs(Vec<PairEntry>),
    /// One curve per frame element, in frame order.
    Curves(Vec<Membership>),
}

impl Exclusivity {
    pub fn relative(&self, n: usize) -> dnum_core::Result<RelativeMatrix> {
        match self {
            Exclusivity::Pairs(pairs) => {
                let entries = pairs
                    .iter()
                    .map(|p| Ok((p.a, p.b, p.degree()?)))
                    .collect::<dnum_core::Result<Vec<_>>>()?;
                RelativeMatrix::from_entries(n, entries)
            }
            Exclusivity::Curves(curves) => RelativeMatrix::from_curves(curves),
        }
    }
}

/// A validated evidence document.
#[derive(Debug, Clone, PartialEq)]
pub struct EvidenceDocument {
    pub frame: Frame,
    pub masses: BTreeMap<String, Mass>,
    pub exclusivity: Option<Exclusivity>,
    relative: Option<RelativeMatrix>,
}

impl EvidenceDocument {
    pub fn new(
        frame: Frame,
        masses: BTreeMap<String, Mass>,
        exclusivity: Option<Exclusivity>,
    ) -> Result<Self, CliError> {
        for m in masses.values() {
            if !m.frame().same_as(&frame) {
                return Err(dnum_core::Error::FrameMismatch.into());
            }
        }
        let relative = exclusivity
            .as_ref()
            .map(|e| e.relative(frame.len()))
            .transpose()?;
        Ok(Self {
            frame,
            masses,
            exclusivity,
            relative,
        })
    }

    /// Parses and validates `text`; `origin` names the source in diagnostics.
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        let src = Source { origin, text };
        let raw: RawDocument = toml::from_str(text).map_err(|e| src.parse_error(&e))?;
        let frame = src.frame(&raw.frame)?;
        let mut masses = BTreeMap::new();
        for (name, m) in raw.masses {
            masses.insert(name, src.mass(&frame, m)?);
        }
        let (exclusivity, relative) = match raw.exclusivity {
            Some(e) => {
                let (e, r) = src.exclusivity(&frame, e)?;
                (Some(e), Some(r))
            }
            None => (None, None),
        };
        Ok(Self {
            frame,
            masses,
            exclusivity,
            relative,
        })
    }

    pub fn mass(&self, name: &str) -> Result<&Mass, CliError> {
        self.masses
            .get(name)
            .ok_or_else(|| CliError::UnknownMassName(name.to_owned()))
    }

    pub fn relative(&self) -> Result<&RelativeMatrix, CliError> {
        self.relative.as_ref().ok_or(CliError::MissingExclusivity)
    }

    /// The single canonical serialization: masses sorted by name, focal
    /// elements and pairs in canonical subset order.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        let labels: Vec<String> = self.frame.labels().iter().map(|l| quote(l)).collect();
        let _ = writeln!(out, "frame = [{}]", labels.join(", "));
        for (name, m) in &self.masses {
            let _ = writeln!(out, "\n[masses.{}]", key(name));
            let _ = writeln!(out, "kind = \"{}\"", m.kind().as_str());
            let focal: Vec<String> = m
                .focal()
                .map(|(s, x)| format!("{} = {}", quote(&self.frame.format_subset(s)), number(x)))
                .collect();
            if focal.is_empty() {
                let _ = writeln!(out, "focal = {{}}");
            } else {
                let _ = writeln!(out, "focal = {{ {} }}", focal.join(", "));
            }
        }
        match &self.exclusivity {
            None => {}
            Some(Exclusivity::Pairs(pairs)) => {
                let _ = writeln!(out, "\n[exclusivity]\npairs = [");
                for p in pairs {
                    let labels = self.frame.labels();
                    let value = match p.value {
                        PairValue::Degree(e) => format!("e = {}", number(e)),
                        PairValue::Areas { intersection, union } => {
                            format!("s = {}, u = {}", number(intersection), number(union))
                        }
                    };
                    let _ = writeln!(
                        out,
                        "    {{ a = {}, b = {}, {value} }},",
                        quote(&labels[p.a]),
                        quote(&labels[p.b])
                    );
                }
                let _ = writeln!(out, "]");
            }
            Some(Exclusivity::Curves(curves)) => {
                let _ = writeln!(out, "\n[exclusivity.curves]");
                for (label, c) in self.frame.labels().iter().zip(curves) {
                    let points: Vec<String> = c
                        .vertices()
                        .iter()
                        .map(|&(x, mu)| format!("[{}, {}]", number(x), number(mu)))
                        .collect();
                    let _ = writeln!(out, "{} = [{}]", quote(label), points.join(", "));
                }
            }
        }
        out
    }
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_owned()).to_string()
}

fn key(s: &str) -> String {
    let bare = !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
    if bare {
        s.to_owned()
    } else {
        quote(s)
    }
}

// Rust's shortest round-trip form is valid TOML for finite values.
fn number(x: f64) -> String {
    format!("{x:?}")
}

/// Parses a focal key: comma-separated labels, `""` for the empty set.
pub fn parse_subset(frame: &Frame, key: &str) -> dnum_core::Result<Subset> {
    if key.trim().is_empty() {
        return Ok(Subset::EMPTY);
    }
    frame.subset(key.split(',').map(str::trim))
}

struct Source<'a> {
    origin: &'a str,
    text: &'a str,
}

impl Source<'_> {
    fn locate(&self, offset: usize) -> (usize, usize) {
        let before = &self.text[..offset.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, column)
    }

    fn parse_error(&self, e: &toml::de::Error) -> CliError {
        let (line, column) = self.locate(e.span().map_or(0, |s| s.start));
        CliError::Parse {
            origin: self.origin.to_owned(),
            line,
            column,
            message: e.message().trim().to_owned(),
        }
    }

    fn at(&self, span: Range<usize>, message: impl fmt::Display) -> CliError {
        let (line, column) = self.locate(span.start);
        CliError::Invalid {
            origin: self.origin.to_owned(),
            line,
            column,
            message: message.to_string(),
        }
    }

    fn frame(&self, raw: &Spanned<Vec<String>>) -> Result<Frame, CliError> {
        for label in raw.get_ref() {
            if label.contains(',') || label.trim() != label {
                return Err(self.at(
                    raw.span(),
                    format!("frame label `{label}` contains a comma or surrounding whitespace"),
                ));
            }
        }
        Frame::new(raw.get_ref().iter().cloned()).map_err(|e| self.at(raw.span(), e))
    }

    fn mass(&self, frame: &Frame, raw: RawMass) -> Result<Mass, CliError> {
        let kind = match raw.kind {
            RawKind::Bpa => MassKind::Bpa,
            RawKind::Dnumber => MassKind::DNumber,
        };
        let mut assignments: Vec<(Subset, f64)> = Vec::new();
        for (k, v) in raw.focal.get_ref() {
            let s = parse_subset(frame, k.get_ref()).map_err(|e| self.at(k.span(), e))?;
            if assignments.iter().any(|&(t, _)| t == s) {
                let e = dnum_core::Error::DuplicateFocal(frame.format_subset(s));
                return Err(self.at(k.span(), e));
            }
            let x = v.get_ref().0;
            Mass::new(frame, MassKind::DNumber, [(s, x)]).map_err(|e| self.at(v.span(), e))?;
            assignments.push((s, x));
        }
        Mass::new(frame, kind, assignments).map_err(|e| self.at(raw.focal.span(), e))
    }

    fn exclusivity(
        &self,
        frame: &Frame,
        raw: Spanned<RawExclusivity>,
    ) -> Result<(Exclusivity, RelativeMatrix), CliError> {
        let span = raw.span();
        let raw = raw.into_inner();
        let (exclusivity, anchor) = match (raw.pairs, raw.curves) {
            (Some(pairs), None) => (Exclusivity::Pairs(self.pairs(frame, pairs)?), span),
            (None, Some(curves)) => {
                let anchor = curves.span();
                (Exclusivity::Curves(self.curves(frame, curves)?), anchor)
            }
            _ => return Err(self.at(span, "exclusivity needs exactly one of `pairs` or `curves`")),
        };
        let relative = exclusivity
            .relative(frame.len())
            .map_err(|e| self.at(anchor, e))?;
        Ok((exclusivity, relative))
    }

    fn pairs(&self, frame: &Frame, raw: Vec<Spanned<RawPair>>) -> Result<Vec<PairEntry>, CliError> {
        let mut entries = BTreeMap::new();
        for p in raw {
            let span = p.span();
            let p = p.into_inner();
            let index = |l: &str| {
                frame
                    .index_of(l)
                    .ok_or_else(|| self.at(span.clone(), dnum_core::Error::UnknownLabel(l.to_owned())))
            };
            let (a, b) = (index(&p.a)?, index(&p.b)?);
            if a == b {
                return Err(self.at(span, format!("pair relates `{}` to itself", p.a)));
            }
            let value = match (p.e, p.s, p.u) {
                (Some(e), None, None) => PairValue::Degree(e.0),
                (None, Some(s), Some(u)) => PairValue::Areas {
                    intersection: s.0,
                    union: u.0,
                },
                _ => return Err(self.at(span, "pair needs either `e` or both `s` and `u`")),
            };
            let entry = PairEntry {
                a: a.min(b),
                b: a.max(b),
                value,
            };
            let e = entry.degree().map_err(|e| self.at(span.clone(), e))?;
            if !(0.0..=1.0).contains(&e) {
                let e = dnum_core::Error::EntryOutOfRange { i: a, j: b, value: e };
                return Err(self.at(span, e));
            }
            if entries.insert((entry.a, entry.b), entry).is_some() {
                return Err(self.at(span, format!("pair ({}, {}) listed more than once", p.a, p.b)));
            }
        }
        Ok(entries.into_values().collect())
    }

    fn curves(&self, frame: &Frame, raw: Spanned<RawCurves>) -> Result<Vec<Membership>, CliError> {
        let span = raw.span();
        let mut slots: Vec<Option<Membership>> = vec![None; frame.len()];
        for (label, vertices) in raw.into_inner() {
            let i = frame.index_of(label.get_ref()).ok_or_else(|| {
                self.at(label.span(), dnum_core::Error::UnknownLabel(label.get_ref().clone()))
            })?;
            let points = vertices.get_ref().iter().map(|(x, mu)| (x.0, mu.0)).collect();
            slots[i] = Some(Membership::new(points).map_err(|e| self.at(vertices.span(), e))?);
        }
        slots
            .into_iter()
            .zip(frame.labels())
            .map(|(c, label)| {
                c.ok_or_else(|| self.at(span.clone(), format!("no membership curve for `{label}`")))
            })
            .collect()
    }
}
