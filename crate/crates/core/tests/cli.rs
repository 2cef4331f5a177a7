use catale::cli::run;
use catale::doc::{category_to_json, parse_document, Document};
use catale::fincat::taut_completion;
use catale::smallgen::fixtures;
use std::io::Write;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn catale(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("catale").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn taut_of_t3_matches_the_library() {
    let o = catale(&["taut", "fixture:T3"]);
    assert_eq!(o.code, 0, "{}", o.err);
    let expected = taut_completion(&fixtures::transformation_monoid(3).unwrap()).category;
    assert_eq!(o.out.trim(), category_to_json(&expected));
    match parse_document(&o.out).unwrap() {
        Document::Category(c) => assert_eq!(c.object_count(), 3),
        d => panic!("expected a category, got a {}", d.kind()),
    }
}

#[test]
fn walking_iso_is_not_a_catale() {
    let o = catale(&["is-catale", "fixture:walking_iso", "--via", "to-psg", "--format", "text"]);
    assert_eq!(o.code, 1);
    assert!(o.out.contains("axiom (b)"), "{}", o.out);
}

#[test]
fn category_needs_an_explicit_conversion() {
    let o = catale(&["is-catale", "fixture:walking_iso"]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("--via to-psg"));
}

#[test]
fn invalid_documents_exit_two() {
    let bad = temp_file(
        r#"{"objects":["x"],"morphisms":[{"name":"1","dom":"x","cod":"x"},{"name":"e","dom":"x","cod":"x"}],
            "identities":{"x":"1"},"compose":[["e","e","e"],["e","1","1"]]}"#,
    );
    let o = catale(&["validate", bad.path().to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(o.err.contains("identity law"), "{}", o.err);

    let garbled = temp_file("{\"objects\": [");
    assert_eq!(catale(&["validate", garbled.path().to_str().unwrap()]).code, 2);
    assert_eq!(catale(&["validate", "/nonexistent/file.json"]).code, 2);
    assert_eq!(catale(&["validate", "fixture:no_such_thing"]).code, 2);
    assert_eq!(catale(&["no-such-command"]).code, 2);
}

#[test]
fn valid_documents_validate() {
    for name in ["walking_idempotent", "T2", "sierpinski", "n5", "boolean_msl3"] {
        let o = catale(&["validate", &format!("fixture:{name}")]);
        assert_eq!(o.code, 0, "{name}: {}", o.err);
    }
}

#[test]
fn bounds_exit_three() {
    assert_eq!(catale(&["enumerate", "topology", "9"]).code, 3);
    let o = catale(&[
        "adjunction-verify",
        "fixture:T2",
        "fixture:T2",
        "--via",
        "to-psg",
        "--max-search",
        "3",
    ]);
    assert_eq!(o.code, 3, "{}", o.err);
}

#[test]
fn json_output_round_trips() {
    for args in [
        vec!["karoubi", "fixture:walking_idempotent"],
        vec!["skeleton", "fixture:walking_iso"],
        vec!["to-psg", "fixture:T2"],
        vec!["to-cat", "fixture:T2", "--via", "to-psg"],
        vec!["opens", "fixture:sierpinski"],
        vec!["points", "fixture:boolean_msl2"],
        vec!["soberify", "fixture:indiscrete3"],
        vec!["spatialize", "fixture:n5"],
    ] {
        let o = catale(&args);
        assert_eq!(o.code, 0, "{args:?}: {}", o.err);
        let reparsed = parse_document(&o.out).unwrap();
        assert_eq!(reparsed.to_json(), o.out.trim(), "{args:?}");
        let file = temp_file(&o.out);
        let again = catale(&["validate", file.path().to_str().unwrap()]);
        assert_eq!(again.code, 0, "{args:?}: {}", again.err);
    }
}

#[test]
fn property_commands_report_through_exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["is-taut", "fixture:T1"], 0),
        (&["is-taut", "fixture:walking_idempotent"], 1),
        (&["is-taut", "fixture:walking_iso"], 1),
        (&["is-sober", "fixture:sierpinski"], 0),
        (&["is-sober", "fixture:sierpinski", "--point-variant", "literal"], 1),
        (&["is-sober", "fixture:indiscrete2"], 1),
        (&["is-spatial", "fixture:boolean_msl2"], 0),
        (&["is-spatial", "fixture:m3"], 1),
        (&["is-frame", "fixture:boolean_msl3"], 0),
        (&["is-frame", "fixture:n5"], 1),
        (&["is-catale", "fixture:T1", "--via", "to-psg"], 0),
        (&["roundtrip", "fixture:T1"], 0),
        (&["roundtrip", "fixture:T1", "--via", "to-psg"], 0),
        (&["roundtrip", "fixture:T3"], 2),
        (&["adjunction-verify", "fixture:walking_idempotent", "fixture:z2", "--via", "to-psg"], 0),
    ];
    for (args, code) in cases {
        let o = catale(args);
        assert_eq!(o.code, *code, "{args:?}: {}{}", o.out, o.err);
    }
}

#[test]
fn idempotents_list_names() {
    let o = catale(&["idempotents", "fixture:walking_idempotent", "--format", "text"]);
    assert_eq!(o.code, 0);
    assert!(o.out.contains("idempotents: id_x e"), "{}", o.out);
    let o = catale(&["idempotents", "fixture:walking_idempotent", "--via", "to-psg"]);
    let v: serde_json::Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["identities"].as_array().unwrap().len(), 1);
    assert_eq!(v["idempotents"].as_array().unwrap().len(), 2);
}

#[test]
fn literal_points_include_the_empty_set() {
    let o = catale(&["points", "fixture:chain_msl2", "--point-variant", "literal"]);
    let v: serde_json::Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 2);
    let o = catale(&["points", "fixture:chain_msl2"]);
    let v: serde_json::Value = serde_json::from_str(&o.out).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 1);
}

#[test]
fn enumerate_counts_and_seeds() {
    let count = |args: &[&str]| {
        let o = catale(args);
        assert_eq!(o.code, 0, "{}", o.err);
        serde_json::from_str::<Vec<serde_json::Value>>(&o.out).unwrap().len()
    };
    assert_eq!(count(&["enumerate", "topology", "3"]), 29);
    assert_eq!(count(&["enumerate", "topology", "3", "--dedup"]), 9);
    assert_eq!(count(&["enumerate", "monoid", "3", "--dedup"]), 7);
    assert_eq!(count(&["enumerate", "msl", "4", "--dedup"]), 2);
    assert_eq!(count(&["enumerate", "topology", "3", "--count", "5"]), 5);
    let a = catale(&["enumerate", "topology", "5", "--seed", "9", "--count", "4"]);
    let b = catale(&["enumerate", "topology", "5", "--seed", "9", "--count", "4"]);
    assert_eq!(a.out, b.out);
    assert_ne!(a.out, catale(&["enumerate", "topology", "5", "--seed", "10", "--count", "4"]).out);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["taut", "fixture:T3", "--format", "text"],
        vec!["karoubi", "fixture:T2", "--dot"],
        vec!["enumerate", "category", "3", "--dedup"],
    ] {
        assert_eq!(catale(&args).out, catale(&args).out, "{args:?}");
    }
}

#[test]
fn dot_output_is_a_digraph() {
    for args in [
        vec!["karoubi", "fixture:walking_idempotent", "--dot"],
        vec!["to-psg", "fixture:T1", "--format", "dot"],
        vec!["opens", "fixture:sierpinski", "--dot"],
        vec!["soberify", "fixture:sierpinski", "--dot"],
    ] {
        let o = catale(&args);
        assert_eq!(o.code, 0);
        assert!(o.out.starts_with("digraph"), "{args:?}: {}", o.out);
        assert!(o.out.trim_end().ends_with('}'));
    }
}

#[test]
fn suite_runs_selected_criteria() {
    let o = catale(&["suite", "--criterion", "3", "--criterion", "8", "--format", "text"]);
    assert_eq!(o.code, 0, "{}", o.out);
    assert_eq!(o.out.lines().count(), 2);
    assert!(o.out.lines().all(|l| l.contains("PASS")));
    assert_eq!(catale(&["suite", "--criterion", "12"]).code, 2);
}

#[test]
fn help_goes_to_standard_output() {
    let o = catale(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.out.contains("adjunction-verify"));
}
