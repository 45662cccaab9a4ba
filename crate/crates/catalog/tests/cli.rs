mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::*;
use nomen_catalog::formats::load_graph;
use nomen_core::serialize::export_ntriples;

fn nomen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nomen"))
        .args(args)
        .env_remove("CATALOG_DEFAULT_LANG")
        .output()
        .unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn ingest_writes_the_oracle_and_validates() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.nt");
    let f1 = fixture_path("f1.jsonl");
    let merge = fixture_path("merge_all.json");
    let o = nomen(&[
        "ingest",
        "--records",
        path(&f1),
        "--directives",
        path(&merge),
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        export_ntriples(&f1_oracle(true))
    );

    let o = nomen(&["validate", "--in", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[]\n");

    // stdout without --out
    let o = nomen(&["ingest", "--records", path(&f1)]);
    assert_eq!(stdout(&o), export_ntriples(&f1_oracle(false)));
}

#[test]
fn directive_files_can_be_split() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    std::fs::write(
        &a,
        r#"{"merge":[["place:rec-p1|place_of_birth|0","place:rec-y1|location|0"]]}"#,
    )
    .unwrap();
    std::fs::write(
        &b,
        r#"{"merge":[["place:rec-w1|subject_place|0","place:rec-m1|place_of_publication|0"],["place:rec-y1|location|0","place:rec-w1|subject_place|0"]]}"#,
    )
    .unwrap();
    let f1 = fixture_path("f1.jsonl");
    let o = nomen(&[
        "ingest",
        "--records",
        path(&f1),
        "--directives",
        path(&b),
        "--directives",
        path(&a),
    ]);
    assert_eq!(stdout(&o), export_ntriples(&f1_oracle(true)));
}

#[test]
fn label_view_and_search() {
    let titles = fixture_path("titles.jsonl");
    let work = "http://example.org/catalog/work/rec-w-ody";
    let o = nomen(&["label", "--records", path(&titles), "--entity", work, "--lang", "de"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["label"], "Odyssee");
    assert_eq!(json(&o)["rule_fired"], "2");

    let o = Command::new(env!("CARGO_BIN_EXE_nomen"))
        .args(["label", "--records", path(&titles), "--entity", work, "--lang", "fr"])
        .env("CATALOG_DEFAULT_LANG", "en")
        .output()
        .unwrap();
    assert_eq!(json(&o)["label"], "Odyssey");
    assert_eq!(json(&o)["rule_fired"], "3");
    let o = nomen(&[
        "label",
        "--records",
        path(&titles),
        "--entity",
        work,
        "--lang",
        "fr",
        "--default-lang",
        "de",
    ]);
    assert_eq!(json(&o)["label"], "Odyssee");

    let f1 = fixture_path("f1.jsonl");
    let merge = fixture_path("merge_all.json");
    let place = f1_iris(true).places[0].0.to_string();
    let o = nomen(&[
        "view",
        "--records",
        path(&f1),
        "--directives",
        path(&merge),
        "--entity",
        &place,
        "--depth",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["relations"].as_array().unwrap().len(), 4);
    let m = f1_iris(true).manifestation.to_string();
    let o = nomen(&["view", "--records", path(&f1), "--entity", &m, "--record"]);
    assert_eq!(json(&o)["entries"][0]["value"], "History of London");

    let names = fixture_path("names.jsonl");
    let o = nomen(&[
        "search",
        "--records",
        path(&names),
        "--q",
        "Father Louis",
        "--mode",
        "exact",
    ]);
    assert_eq!(
        json(&o)[0]["owners"][0]["iri"],
        "http://example.org/catalog/person/rec-merton"
    );
}

#[test]
fn export_converts_between_formats() {
    let dir = tempfile::tempdir().unwrap();
    let f1 = fixture_path("f1.jsonl");
    let ttl = dir.path().join("g.ttl");
    let o = nomen(&["export", "--records", path(&f1), "--out", path(&ttl)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(load_graph(&ttl).unwrap(), f1_oracle(false));
    let o = nomen(&["export", "--in", path(&ttl), "--format", "ntriples"]);
    assert_eq!(stdout(&o), export_ntriples(&f1_oracle(false)));
}

#[test]
fn exit_codes() {
    let f1 = fixture_path("f1.jsonl");
    // usage errors
    for args in [
        &[][..],
        &["frobnicate"],
        &["validate"],
        &["export", "--records", path(&f1), "--format", "rdfxml"],
        &["search", "--records", path(&f1), "--q", "x", "--mode", "fuzzy"],
        &[
            "view",
            "--records",
            path(&f1),
            "--entity",
            "http://x.org/a",
            "--depth",
            "9",
        ],
        &["label", "--records", path(&f1), "--entity", "not an iri"],
    ] {
        assert_eq!(nomen(args).status.code(), Some(2), "{args:?}");
    }
    // data errors
    let broken = fixture_path("broken_v2.nt");
    let o = nomen(&["validate", "--in", path(&broken)]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)[0]["code"], "V2");
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.jsonl");
    std::fs::write(&bad, "{\"record_id\":\"a\",\"kind\":\"person\"}\n{oops\n").unwrap();
    let o = nomen(&["ingest", "--records", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    for args in [
        &["ingest", "--records", "/no/such/file.jsonl"][..],
        &[
            "label",
            "--records",
            path(&f1),
            "--entity",
            "http://example.org/catalog/work/none",
        ],
        &[
            "view",
            "--records",
            path(&f1),
            "--entity",
            "http://example.org/catalog/work/rec-w1",
            "--record",
        ],
    ] {
        assert_eq!(nomen(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(nomen(&["--help"]).status.code(), Some(0));
}

#[tokio::test]
async fn cli_export_equals_service_export() {
    let f1 = fixture_path("f1.jsonl");
    let merge = fixture_path("merge_all.json");
    for (format, query) in [("ntriples", "ntriples"), ("turtle", "turtle")] {
        let cli = nomen(&[
            "ingest",
            "--records",
            path(&f1),
            "--directives",
            path(&merge),
            "--format",
            format,
        ]);
        let (app, _) = app();
        post(
            &app,
            &format!("/ingest?directives={}", encode(path(&merge))),
            fixture("f1.jsonl"),
        )
        .await;
        let service = get(&app, &format!("/export?format={query}")).await;
        assert_eq!(cli.stdout, service.body, "{format}");
    }
}
