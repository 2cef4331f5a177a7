use catale::doc::{
    category_to_json, msl_to_json, parse_document, psg_to_json, space_to_json, CategoryDoc, Document,
};
use catale::smallgen::{enum_categories, enum_msls, enum_psgs, enum_topologies, fixtures};

#[test]
fn categories_round_trip() {
    let mut corpus = enum_categories(3, 4).unwrap();
    corpus.push(fixtures::transformation_monoid(3).unwrap());
    corpus.push(catale::fincat::karoubi(&fixtures::walking_iso()).category);
    for c in corpus {
        let text = category_to_json(&c);
        match parse_document(&text).unwrap() {
            Document::Category(d) => {
                assert_eq!(d, c);
                assert_eq!(category_to_json(&d), text);
            }
            d => panic!("read back a {}", d.kind()),
        }
    }
}

#[test]
fn other_documents_round_trip() {
    for s in (0..=2).flat_map(|n| enum_psgs(n).unwrap()) {
        let text = psg_to_json(&s);
        assert_eq!(parse_document(&text).unwrap().to_json(), text);
    }
    for x in (0..=3).flat_map(|n| enum_topologies(n).unwrap()) {
        let text = space_to_json(&x);
        assert_eq!(parse_document(&text).unwrap().to_json(), text);
    }
    for a in (1..=4).flat_map(|n| enum_msls(n).unwrap()) {
        let text = msl_to_json(&a);
        assert_eq!(parse_document(&text).unwrap().to_json(), text);
    }
}

#[test]
fn identity_composites_may_be_omitted() {
    let text = r#"{"objects":["x","y"],
        "morphisms":[{"name":"1x","dom":"x","cod":"x"},{"name":"1y","dom":"y","cod":"y"},{"name":"f","dom":"x","cod":"y"}],
        "identities":{"x":"1x","y":"1y"},"compose":[]}"#;
    let Document::Category(c) = parse_document(text).unwrap() else {
        panic!("expected a category");
    };
    assert!(c.is_valid(), "{:?}", c.validate());
    let doc = CategoryDoc::from_category(&c);
    assert_eq!(doc.compose.len(), 4);
}

#[test]
fn malformed_documents_are_rejected() {
    for text in [
        "[]",
        "{}",
        r#"{"elements":["a"],"product":[["a","a","b"]]}"#,
        r#"{"elements":["a","a"],"product":[]}"#,
        r#"{"elements":["a"],"product":[["a","a","a"],["a","a","a"]]}"#,
        r#"{"points":["p"],"opens":[["q"]]}"#,
        r#"{"elements":["a","b"],"leq":[["a","c"]],"top":"b"}"#,
        r#"{"objects":["x"],"morphisms":[],"identities":{},"compose":[]}"#,
        r#"{"objects":["x"],"morphisms":[],"identities":{},"compose":[],"extra":1}"#,
    ] {
        assert!(parse_document(text).is_err(), "{text}");
    }
}
