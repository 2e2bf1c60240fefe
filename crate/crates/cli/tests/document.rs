use dnum_cli::{CliError, EvidenceDocument, Exclusivity, PairEntry, PairValue};
use dnum_core::{Frame, Mass, MassKind, Membership, Subset};
use proptest::prelude::*;

fn parse(text: &str) -> Result<EvidenceDocument, CliError> {
    EvidenceDocument::parse(text, "doc.toml")
}

fn location(e: &CliError) -> (usize, usize) {
    match e {
        CliError::Parse { line, column, .. } | CliError::Invalid { line, column, .. } => (*line, *column),
        other => panic!("not a located diagnostic: {other}"),
    }
}

#[test]
fn fixtures_parse() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    for name in ["ex2.toml", "ex2-pairs.toml", "ex3.toml", "indefinite.toml"] {
        let text = std::fs::read_to_string(format!("{dir}/{name}")).unwrap();
        parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn curves_and_pairs_give_the_same_relative_matrix() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let curves = parse(&std::fs::read_to_string(format!("{dir}/ex2.toml")).unwrap()).unwrap();
    let pairs = parse(&std::fs::read_to_string(format!("{dir}/ex2-pairs.toml")).unwrap()).unwrap();
    let (a, b) = (curves.relative().unwrap(), pairs.relative().unwrap());
    for i in 0..3 {
        for j in 0..3 {
            assert!((a.get(i, j) - b.get(i, j)).abs() < 1e-12);
        }
    }
    assert!((a.get(0, 1) - 0.1).abs() < 1e-12);
    assert!((a.get(1, 2) - 0.2).abs() < 1e-12);
}

#[test]
fn empty_set_mass_is_reported_at_its_value() {
    let text = "frame = [\"a\", \"b\"]\n\n[masses.m]\nkind = \"dnumber\"\nfocal = { \"a\" = 0.5, \"\" = 0.2 }\n";
    let e = parse(text).unwrap_err();
    assert_eq!(location(&e), (5, 27));
    assert!(e.to_string().contains("empty set"), "{e}");
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn malformed_toml_has_a_line() {
    let e = parse("frame = [\"a\"]\n\n[masses.m\nkind = \"bpa\"\n").unwrap_err();
    assert!(matches!(e, CliError::Parse { line: 3, .. }), "{e:?}");
}

#[test]
fn unknown_keys_are_rejected() {
    let e = parse("frame = [\"a\"]\ncolour = 1\n").unwrap_err();
    assert!(matches!(e, CliError::Parse { line: 2, .. }), "{e:?}");
    let e = parse("frame = [\"a\"]\n[masses.m]\nkind = \"bpa\"\nfocal = { \"a\" = 1 }\nweight = 2\n")
        .unwrap_err();
    assert!(matches!(e, CliError::Parse { .. }), "{e:?}");
}

#[test]
fn semantic_errors() {
    let cases = [
        ("frame = []\n", "at least one"),
        ("frame = [\"a\", \"a\"]\n", "duplicate"),
        ("frame = [\"a,b\"]\n", "comma"),
        ("frame = [\"a\"]\n[masses.m]\nkind = \"bpa\"\nfocal = { \"z\" = 1 }\n", "unknown label"),
        ("frame = [\"a\", \"b\"]\n[masses.m]\nkind = \"bpa\"\nfocal = { \"a\" = 0.5 }\n", "expected 1"),
        ("frame = [\"a\", \"b\"]\n[masses.m]\nkind = \"dnumber\"\nfocal = { \"a\" = 0.7, \"b\" = 0.7 }\n", "exceeds 1"),
        ("frame = [\"a\", \"b\"]\n[masses.m]\nkind = \"dnumber\"\nfocal = { \"a,b\" = 0.5, \"b, a\" = 0.1 }\n", "more than once"),
        ("frame = [\"a\", \"b\"]\n[masses.m]\nkind = \"dnumber\"\nfocal = { \"a\" = 1.5 }\n", "outside"),
        ("frame = [\"a\", \"b\"]\n[exclusivity]\npairs = [{ a = \"a\", b = \"b\" }]\n", "either"),
        ("frame = [\"a\", \"b\"]\n[exclusivity]\npairs = [{ a = \"a\", b = \"a\", e = 0.1 }]\n", "itself"),
        ("frame = [\"a\", \"b\"]\n[exclusivity]\npairs = [{ a = \"a\", b = \"b\", e = 1.2 }]\n", "outside"),
        ("frame = [\"a\", \"b\"]\n[exclusivity]\npairs = [{ a = \"a\", b = \"b\", s = 2, u = 1 }]\n", "must lie"),
        ("frame = [\"a\", \"b\"]\n[exclusivity]\npairs = [{ a = \"a\", b = \"b\", e = 0.1 }, { a = \"b\", b = \"a\", e = 0.2 }]\n", "more than once"),
        ("frame = [\"a\", \"b\"]\n[exclusivity.curves]\na = [[0, 0], [1, 1], [2, 0]]\n", "no membership curve"),
        ("frame = [\"a\"]\n[exclusivity.curves]\na = [[0, 0], [1, 1], [1, 0]]\n", "increasing"),
        ("frame = [\"a\"]\n[exclusivity]\n", "exactly one"),
    ];
    for (text, needle) in cases {
        let e = parse(text).unwrap_err();
        assert!(e.to_string().contains(needle), "{text:?}: {e}");
        assert_eq!(e.exit_code(), 2);
    }
}

#[test]
fn zero_masses_are_not_focal() {
    let doc = parse("frame = [\"a\", \"b\"]\n[masses.m]\nkind = \"bpa\"\nfocal = { \"a\" = 1, \"b\" = 0, \"\" = 0 }\n")
        .unwrap();
    assert_eq!(doc.masses["m"].num_focal(), 1);
}

#[test]
fn canonical_form_is_stable() {
    let text = "frame = [\"x\", \"y\", \"z\"]\n[masses.\"second one\"]\nkind = \"dnumber\"\nfocal = { \"z,x\" = 0.25, y = 0.5 }\n[masses.first]\nkind = \"bpa\"\nfocal = { \"x, y, z\" = 1 }\n[exclusivity]\npairs = [{ a = \"z\", b = \"y\", e = 0.3 }, { a = \"x\", b = \"y\", s = 0.5, u = 2 }]\n";
    let doc = parse(text).unwrap();
    let expected = "frame = [\"x\", \"y\", \"z\"]\n\n[masses.first]\nkind = \"bpa\"\nfocal = { \"x,y,z\" = 1.0 }\n\n[masses.\"second one\"]\nkind = \"dnumber\"\nfocal = { \"y\" = 0.5, \"x,z\" = 0.25 }\n\n[exclusivity]\npairs = [\n    { a = \"x\", b = \"y\", s = 0.5, u = 2.0 },\n    { a = \"y\", b = \"z\", e = 0.3 },\n]\n";
    assert_eq!(doc.to_canonical_string(), expected);
}

fn label() -> impl Strategy<Value = String> {
    "[a-zA-Z0-9_\"\\\\é][a-zA-Z0-9_\"\\\\é ]{0,3}[a-z]"
}

fn document() -> impl Strategy<Value = EvidenceDocument> {
    (prop::collection::btree_set(label(), 1..6), any::<u64>(), any::<bool>())
        .prop_flat_map(|(labels, seed, curves)| {
            let n = labels.len();
            let masses = prop::collection::btree_map(
                "[a-z][a-z0-9 -]{0,6}",
                (
                    prop::collection::vec((1u64..(1 << n), 1u32..1000), 0..5),
                    any::<bool>(),
                ),
                0..4,
            );
            let pairs = prop::collection::vec((0..n, 0..n, prop::option::of(0.0f64..=1.0)), 0..6);
            (Just(labels), Just(seed), Just(curves), masses, pairs)
        })
        .prop_map(|(labels, _seed, curves, masses, pairs)| {
            let frame = Frame::new(labels).unwrap();
            let n = frame.len();
            let masses = masses
                .into_iter()
                .map(|(name, (focal, complete))| {
                    let mut focal = focal;
                    focal.sort();
                    focal.dedup_by_key(|(s, _)| *s);
                    let total: u32 = focal.iter().map(|(_, w)| w).sum::<u32>().max(1);
                    let scale = if complete { total as f64 } else { 1000.0 * focal.len().max(1) as f64 };
                    let kind = if complete && !focal.is_empty() { MassKind::Bpa } else { MassKind::DNumber };
                    let assignment: Vec<(Subset, f64)> =
                        focal.iter().map(|&(s, w)| (Subset::from_bits(s), w as f64 / scale)).collect();
                    let m = Mass::new(&frame, kind, assignment.clone())
                        .or_else(|_| Mass::new(&frame, MassKind::DNumber, assignment.iter().map(|&(s, x)| (s, x * 0.5))))
                        .unwrap();
                    (name, m)
                })
                .collect();
            let exclusivity = if curves {
                Some(Exclusivity::Curves(
                    (0..n)
                        .map(|i| {
                            let x = i as f64 * 0.7;
                            Membership::triangle(x, x + 0.3 + 0.1 * i as f64, x + 1.9).unwrap()
                        })
                        .collect(),
                ))
            } else {
                let mut entries: Vec<PairEntry> = Vec::new();
                for (a, b, e) in pairs {
                    let (a, b) = (a.min(b), a.max(b));
                    if a == b || entries.iter().any(|p| (p.a, p.b) == (a, b)) {
                        continue;
                    }
                    let value = match e {
                        Some(e) => PairValue::Degree(e),
                        None => PairValue::Areas { intersection: 0.3, union: 1.7 },
                    };
                    entries.push(PairEntry { a, b, value });
                }
                entries.sort_by_key(|p| (p.a, p.b));
                (!entries.is_empty()).then_some(Exclusivity::Pairs(entries))
            };
            EvidenceDocument::new(frame, masses, exclusivity).unwrap()
        })
}

proptest! {
    #[test]
    fn canonical_round_trip(doc in document()) {
        let text = doc.to_canonical_string();
        let back = EvidenceDocument::parse(&text, "canonical").unwrap_or_else(|e| panic!("{e}\n{text}"));
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_canonical_string(), text);
    }
}
