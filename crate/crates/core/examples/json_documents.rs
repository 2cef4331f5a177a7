//! Reading and writing the JSON documents, and DOT export.

use catale::doc::{category_to_dot, category_to_json, msl_to_dot, parse_document, Document};
use catale::fincat::karoubi;
use catale::smallgen::fixtures;

fn main() {
    let text = r#"{
        "objects": ["x"],
        "morphisms": [{"name": "1", "dom": "x", "cod": "x"}, {"name": "e", "dom": "x", "cod": "x"}],
        "identities": {"x": "1"},
        "compose": [["e", "e", "e"]]
    }"#;
    let Document::Category(c) = parse_document(text).unwrap() else {
        panic!("a category document");
    };
    println!("valid: {}", c.is_valid());
    let kar = karoubi(&c).category;
    println!("{}", category_to_json(&kar));
    println!("{}", category_to_dot(&kar));
    println!("{}", msl_to_dot(&fixtures::n5()));
}
