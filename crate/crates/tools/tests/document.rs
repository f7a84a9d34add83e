use std::path::PathBuf;

use bihom_core::fixtures::*;
use bihom_core::{GradedMap, LinearForm, Parity, Scalar, StructureTensor3, SuperSpace};
use bihom_tools::{parse_document, AlgebraDocument, NamedMap};

fn corpus() -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut out: Vec<(String, String)> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

fn catalog_documents() -> Vec<(String, AlgebraDocument)> {
    let mut docs = Vec::new();
    for (name, a) in binary_catalog() {
        let odd_free = a.space().parities().iter().all(|&p| p == Parity::Even);
        let mut d = AlgebraDocument::from_binary(&a).with_map("N", GradedMap::identity(a.space()));
        if odd_free {
            d = d.with_form("tau", LinearForm::zero(a.space()));
        }
        docs.push((name.to_string(), d));
    }
    for (name, a) in ternary_catalog().into_iter().chain(dim2_ternary_catalog()) {
        let mut d = AlgebraDocument::from_ternary(&a).with_scalar("lambda", Scalar::ratio(-3, 7));
        d.cochains.insert("omega1".into(), a.bracket().clone());
        d.cochains.insert("omega2".into(), StructureTensor3::zero(a.space()));
        d.metadata = Some(format!("catalog entry \"{name}\""));
        docs.push((name.to_string(), d));
    }
    docs
}

#[test]
fn corpus_round_trips_byte_for_byte() {
    let files = corpus();
    assert!(files.len() >= 15);
    for (name, text) in files {
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let canon = doc.to_canonical_string();
        assert_eq!(canon, text, "{name} is not in canonical form");
        assert_eq!(parse_document(&canon).unwrap(), doc, "{name}");
    }
}

#[test]
fn catalog_documents_round_trip() {
    for (name, doc) in catalog_documents() {
        let text = doc.to_canonical_string();
        let back = parse_document(&text).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
        assert_eq!(back, doc, "{name}");
        assert_eq!(back.to_canonical_string(), text, "{name}");
    }
}

#[test]
fn algebras_survive_the_round_trip() {
    for (name, a) in binary_catalog() {
        let back = parse_document(&AlgebraDocument::from_binary(&a).to_canonical_string()).unwrap();
        let b = back.binary_algebra().unwrap();
        assert_eq!((b.bracket(), b.alpha(), b.beta()), (a.bracket(), a.alpha(), a.beta()), "{name}");
    }
    for (name, a) in ternary_catalog() {
        let back = parse_document(&AlgebraDocument::from_ternary(&a).to_canonical_string()).unwrap();
        let b = back.ternary_algebra().unwrap();
        assert_eq!((b.bracket(), b.alpha(), b.beta()), (a.bracket(), a.alpha(), a.beta()), "{name}");
    }
}

#[test]
fn minimal_document() {
    let doc = parse_document(r#"{"format": 1, "space": {"dim": 1, "parities": [0]}}"#).unwrap();
    assert_eq!(doc.space, SuperSpace::even(1));
    assert!(doc.binary.is_none() && doc.ternary.is_none());
    assert_eq!(doc.alpha(), GradedMap::identity(&doc.space));
    assert_eq!(doc.to_canonical_string(), "{\n  \"format\": 1,\n  \"space\": {\"dim\": 1, \"parities\": [0]}\n}\n");
}

#[test]
fn missing_twists_default_to_identity() {
    let doc = parse_document(
        r#"{"format": 1, "space": {"dim": 2, "parities": [0, 0]}, "binary": [[1, 2, 2, "1"], [2, 1, 2, "-1"]]}"#,
    )
    .unwrap();
    let (a, b) = (doc.binary_algebra().unwrap(), affine_line());
    assert_eq!((a.bracket(), a.alpha(), a.beta()), (b.bracket(), b.alpha(), b.beta()));
    // the multiplicative claim is provenance and is not stored
    assert!(!a.claims_multiplicative());
}

#[test]
fn integers_and_unreduced_rationals_are_accepted() {
    let doc = parse_document(r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "scalars": {"lambda": "-4/6"}}"#).unwrap();
    assert_eq!(doc.scalar("lambda").unwrap(), &Scalar::ratio(-2, 3));
    assert!(doc.to_canonical_string().contains("\"lambda\": \"-2/3\""));
    assert_eq!(err(r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "scalars": {"lambda": "4/-6"}}"#).path, "scalars.lambda");
}

fn err(text: &str) -> bihom_tools::DocError {
    parse_document(text).expect_err("document should be rejected")
}

#[test]
fn parity_violating_constant_is_rejected() {
    // c_{11}^2 on an odd e1 and an odd e2: odd + odd is even, e2 is odd
    let e = err(r#"{"format": 1, "space": {"dim": 2, "parities": [1, 1]}, "binary": [[1, 1, 2, "1/1"]]}"#);
    assert_eq!(e.path, "binary[0]");
    assert!(e.message.contains("parity"), "{e}");
    let e = err(
        r#"{"format": 1, "space": {"dim": 2, "parities": [0, 1]}, "ternary": [[1, 1, 1, 1, "0"], [1, 1, 2, 1, "2"]]}"#,
    );
    assert_eq!(e.path, "ternary[1]");
}

#[test]
fn zero_constant_with_wrong_parity_is_harmless() {
    let doc = parse_document(r#"{"format": 1, "space": {"dim": 2, "parities": [1, 1]}, "binary": [[1, 1, 2, "0/5"]]}"#).unwrap();
    assert_eq!(doc.binary.unwrap().entries().count(), 0);
}

#[test]
fn bad_inputs_report_their_location() {
    let cases: &[(&str, &str)] = &[
        (r#"{"format": 2, "space": {"dim": 1, "parities": [0]}}"#, "format"),
        (r#"{"format": 1, "space": {"dim": 2, "parities": [0]}}"#, "space.parities"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [2]}}"#, "space.parities[0]"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "binary": [[1, 3, 1, "1"]]}"#, "binary[0]"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "binary": [[1, 1, 1, "x"]]}"#, "binary[0][3]"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "binary": [[1, 1, 1, "1/0"]]}"#, "binary[0][3]"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "binary": [[1, 1, 1, "1"], [1, 1, 1, "2"]]}"#, "binary[1]"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "scalars": {"lambda": "1.5"}}"#, "scalars.lambda"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "maps": {"R": {"parity": 0, "rows": [["1", "2"]]}}}"#, "maps.R.rows[0]"),
        (r#"{"format": 1, "space": {"dim": 2, "parities": [0, 1]}, "maps": {"R": {"parity": 0, "rows": [["1", "1"], ["0", "1"]]}}}"#, "maps.R.rows[0][1]"),
        (r#"{"format": 1, "space": {"dim": 2, "parities": [0, 1]}, "maps": {"tau": {"parity": 0, "row": ["1", "1"]}}}"#, "maps.tau.row[1]"),
        (r#"{"format": 1, "space": {"dim": 2, "parities": [0, 1]}, "maps": {"alpha": {"parity": 1, "rows": [["0", "1"], ["1", "0"]]}}}"#, "maps.alpha.parity"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "maps": {"R": {"parity": 0}}}"#, "maps.R"),
        (r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "cochains": {"omega1": [[1, 1, 1, 2, "1"]]}}"#, "cochains.omega1[0]"),
    ];
    for (text, path) in cases {
        let e = err(text);
        assert_eq!(&e.path, path, "{text}: {e}");
    }
}

#[test]
fn syntax_and_shape_errors_carry_line_and_column() {
    let e = err("{\n  \"format\": 1,\n  \"space\": {\"dim\": 1, \"parities\": [0]\n}");
    assert!(e.line.is_some() && e.column.is_some(), "{e:?}");
    let e = err("{\n  \"format\": 1,\n  \"space\": {\"dim\": 1, \"parities\": [0]},\n  \"extra\": 3\n}");
    assert_eq!(e.line, Some(4), "{e:?}");
    let e = err("{\"format\": 1, \"space\": {\"dim\": \"one\", \"parities\": [0]}}");
    assert_eq!(e.path, "space.dim");
    assert!(e.to_string().contains("line 1"));
}

#[test]
fn dangling_names_are_input_errors() {
    let doc = parse_document(r#"{"format": 1, "space": {"dim": 1, "parities": [0]}, "maps": {"tau": {"parity": 0, "row": ["1"]}}}"#).unwrap();
    assert_eq!(doc.map("R").unwrap_err().path, "maps.R");
    assert_eq!(doc.map("tau").unwrap_err().path, "maps.tau");
    assert_eq!(doc.form("tau").unwrap().coefficients(), &[Scalar::one()]);
    assert_eq!(doc.scalar("lambda").unwrap_err().path, "scalars.lambda");
    assert_eq!(doc.cochain("omega1").unwrap_err().path, "cochains.omega1");
    assert!(doc.binary_algebra().is_err() && doc.ternary_algebra().is_err());
}

#[test]
fn named_maps_keep_their_kind() {
    let doc = parse_document(&std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/affine_pair.json")).unwrap()).unwrap();
    assert!(matches!(doc.maps.get("tau"), Some(NamedMap::Row(_))));
    assert!(matches!(doc.maps.get("R"), Some(NamedMap::Matrix(_))));
    assert_eq!(doc.scalar("lambda").unwrap(), &-Scalar::one());
}
