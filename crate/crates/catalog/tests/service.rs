mod common;

use axum::http::{Method, Request, StatusCode};
use common::*;
use nomen_catalog::Config;
use nomen_core::serialize::{export_ntriples, export_turtle};
use serde_json::json;
use tower::ServiceExt;

fn merge_all_path() -> String {
    fixture_path("merge_all.json").display().to_string()
}

async fn ingested(merged: bool) -> axum::Router {
    let (app, _) = app();
    let uri = if merged {
        format!("/ingest?directives={}", encode(&merge_all_path()))
    } else {
        "/ingest".to_string()
    };
    let r = post(&app, &uri, fixture("f1.jsonl")).await;
    assert_eq!(r.status, StatusCode::OK, "{}", r.text());
    app
}

#[tokio::test]
async fn ingest_counts_follow_the_oracle() {
    let (app, _) = app();
    let r = post(&app, "/ingest", fixture("f1.jsonl")).await;
    assert_eq!(r.status, StatusCode::OK);
    assert_eq!(r.version, Some(1));
    assert_eq!(r.json()["counts"], json!({"entities": 8, "nomens": 7, "triples": 46}));

    let app = ingested(true).await;
    let r = get(&app, "/export").await;
    assert_eq!(r.version, Some(1));
    assert_eq!(r.text(), export_ntriples(&f1_oracle(true)));
}

#[tokio::test]
async fn empty_body_bumps_version() {
    let (app, _) = app();
    let r = post(&app, "/ingest", "").await;
    assert_eq!(r.status, StatusCode::OK);
    assert_eq!(r.json()["version"], 1);
    assert_eq!(r.json()["counts"], json!({"entities": 0, "nomens": 0, "triples": 0}));
}

#[tokio::test]
async fn bad_ingest_changes_nothing() {
    let app = ingested(false).await;
    let before = get(&app, "/export").await;
    for body in [
        "{\"record_id\":\"x\",\"kind\":\"person\"}\nnot json\n".to_string(),
        // duplicate of a retained record
        "{\"record_id\":\"rec-p1\",\"kind\":\"person\"}\n".to_string(),
        "{\"record_id\":\"m\",\"kind\":\"manifestation\",\"links\":[{\"rel\":\"publisher\",\"target\":\"nope\"}]}\n"
            .to_string(),
    ] {
        let r = post(&app, "/ingest", body).await;
        assert_eq!(r.status, StatusCode::BAD_REQUEST);
        assert_eq!(r.version, Some(1));
        assert!(r.json()["error"].is_string());
    }
    let r = post(&app, "/ingest", "{\"record_id\":\"x\",\"kind\":\"person\"}\nnot json\n").await;
    assert!(r.json()["error"].as_str().unwrap().starts_with("line 2"));
    let r = post(&app, "/ingest?directives=/no/such/file.json", "").await;
    assert_eq!(r.status, StatusCode::BAD_REQUEST);
    let after = get(&app, "/export").await;
    assert_eq!(after.version, Some(1));
    assert_eq!(before.body, after.body);
}

#[tokio::test]
async fn entity_page_for_the_merged_place() {
    let app = ingested(true).await;
    let place = &f1_iris(true).places[0].0;
    let r = get(&app, &format!("/entity/{}?depth=1&lang=en", encode(place.as_str()))).await;
    assert_eq!(r.status, StatusCode::OK);
    let body = r.json();
    assert_eq!(body["label"], "London");
    assert_eq!(body["rule_fired"], "4");
    assert_eq!(body["kind"], "place");
    assert_eq!(body["nomens"].as_array().unwrap().len(), 1);
    let relations: Vec<&str> = body["relations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["relation"].as_str().unwrap())
        .collect();
    assert_eq!(relations.len(), 4);
    let mut sorted = relations.clone();
    sorted.sort();
    assert_eq!(sorted, ["bornIn", "locatedIn", "placeOfPublicationNomen", "subject"]);

    let r0 = get(&app, &format!("/entity/{}?depth=0", encode(place.as_str()))).await;
    let b0 = r0.json();
    assert_eq!(b0["label"], "London");
    assert_eq!(b0["subgraph"]["edges"], json!([]));
    let deeper = |d: usize| {
        let app = app.clone();
        async move {
            get(&app, &format!("/entity/{}?depth={d}", encode(place.as_str())))
                .await
                .json()["subgraph"]["nodes"]
                .as_array()
                .unwrap()
                .len()
        }
    };
    let counts = [deeper(0).await, deeper(1).await, deeper(2).await, deeper(3).await];
    assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");
    assert!(counts[0] < counts[1]);
}

#[tokio::test]
async fn entity_errors() {
    let app = ingested(true).await;
    let r = get(
        &app,
        &format!("/entity/{}", encode("http://example.org/catalog/place/nowhere")),
    )
    .await;
    assert_eq!(r.status, StatusCode::NOT_FOUND);
    assert_eq!(r.version, Some(1));
    let place = f1_iris(true).places[0].0.clone();
    let r = get(&app, &format!("/entity/{}?depth=4", encode(place.as_str()))).await;
    assert_eq!(r.status, StatusCode::BAD_REQUEST);
    let r = get(&app, &format!("/entity/{}?depth=deep", encode(place.as_str()))).await;
    assert_eq!(r.status, StatusCode::BAD_REQUEST);

    let (app, _) = app_with(Config {
        max_depth: 5,
        ..Config::default()
    });
    post(&app, "/ingest", fixture("f1.jsonl")).await;
    let r = get(&app, &format!("/entity/{}?depth=5", encode(place.as_str()))).await;
    assert_eq!(r.status, StatusCode::OK);
}

#[tokio::test]
async fn entity_body_is_deterministic() {
    let a = ingested(true).await;
    let b = ingested(true).await;
    let uri = format!(
        "/entity/{}?depth=2&lang=de",
        encode(f1_iris(true).manifestation.as_str())
    );
    assert_eq!(get(&a, &uri).await.body, get(&b, &uri).await.body);
}

#[tokio::test]
async fn search() {
    let (app, _) = app();
    post(&app, "/ingest", fixture("names.jsonl")).await;
    let r = get(&app, "/search?q=George%20Eliot&mode=exact").await;
    let hits = r.json();
    assert_eq!(hits.as_array().unwrap().len(), 1);
    assert_eq!(
        hits[0]["owners"][0]["iri"],
        "http://example.org/catalog/person/rec-evans"
    );
    assert_eq!(hits[0]["owners"][0]["label"], "George Eliot");
    assert_eq!(get(&app, "/search?q=Nobody").await.json(), json!([]));
    assert_eq!(get(&app, "/search?q=").await.status, StatusCode::BAD_REQUEST);
    assert_eq!(
        get(&app, "/search?q=x&mode=fuzzy").await.status,
        StatusCode::BAD_REQUEST
    );

    let merged = ingested(true).await;
    let hits = get(&merged, "/search?q=london").await.json();
    let strings: Vec<_> = hits
        .as_array()
        .unwrap()
        .iter()
        .map(|h| h["string"].as_str().unwrap())
        .collect();
    assert_eq!(strings, ["History of London", "London"]);
    let unmerged = ingested(false).await;
    assert_eq!(
        get(&unmerged, "/search?q=london")
            .await
            .json()
            .as_array()
            .unwrap()
            .len(),
        5
    );
}

#[tokio::test]
async fn record_view() {
    let app = ingested(true).await;
    let m = encode(f1_iris(true).manifestation.as_str());
    let r = get(&app, &format!("/record/{m}")).await;
    assert_eq!(r.status, StatusCode::OK);
    let values: Vec<_> = r.json()["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["key"].as_str().unwrap().to_string(),
                e["value"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    assert_eq!(
        values,
        [
            ("title", "History of London"),
            ("statement_of_responsibility", "John Smith"),
            ("place_of_publication", "London"),
            ("publisher", "Publisher Y"),
            ("lithographer", "John Smith"),
        ]
        .map(|(k, v)| (k.to_string(), v.to_string()))
    );
    let w = encode(f1_iris(true).work.as_str());
    assert_eq!(
        get(&app, &format!("/record/{w}")).await.status,
        StatusCode::UNPROCESSABLE_ENTITY
    );
    assert_eq!(
        get(&app, &format!("/record/{}", encode("http://example.org/catalog/x")))
            .await
            .status,
        StatusCode::NOT_FOUND
    );
}

#[tokio::test]
async fn record_language_changes_only_linked_labels() {
    let (app, _) = app();
    let body = r#"{"record_id":"m","kind":"manifestation","fields":[{"tag":"title","value":"Ilias","lang":"de"},{"tag":"place_of_publication","value":"Wien"}],"links":[{"rel":"publisher","target":"y"}]}
{"record_id":"y","kind":"corporate_body","fields":[{"tag":"name","value":"Verlag Z","lang":"de"},{"tag":"name","value":"Z Press","lang":"en"}]}
"#;
    post(&app, "/ingest", body).await;
    let m = encode("http://example.org/catalog/manifestation/m");
    let de = get(&app, &format!("/record/{m}?lang=de")).await.json();
    let en = get(&app, &format!("/record/{m}?lang=en")).await.json();
    let (de, en) = (de["entries"].as_array().unwrap(), en["entries"].as_array().unwrap());
    assert_eq!(de.len(), en.len());
    for (a, b) in de.iter().zip(en) {
        if a["key"] == "publisher" {
            assert_eq!(a["value"], "Verlag Z");
            assert_eq!(b["value"], "Z Press");
        } else {
            assert_eq!(a, b);
        }
    }
}

#[tokio::test]
async fn export_formats() {
    let app = ingested(true).await;
    let nt = get(&app, "/export?format=ntriples").await;
    assert_eq!(nt.content_type.as_deref(), Some("application/n-triples"));
    assert_eq!(nt.text(), export_ntriples(&f1_oracle(true)));
    let ttl = get(&app, "/export?format=turtle").await;
    assert_eq!(ttl.content_type.as_deref(), Some("text/turtle"));
    assert_eq!(ttl.text(), export_turtle(&f1_oracle(true)));
    assert_eq!(get(&app, "/export?format=rdfxml").await.status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn reconcile_replays_promotion() {
    let app = ingested(false).await;
    let r = post(&app, "/reconcile", fixture("merge_all.json")).await;
    assert_eq!(r.status, StatusCode::OK);
    assert_eq!(r.json()["version"], 2);
    assert_eq!(r.json()["merged_entities"], 1);
    let reconciled = get(&app, "/export").await;
    let inline = get(&ingested(true).await, "/export").await;
    assert_eq!(reconciled.body, inline.body);
    let places = |text: &str| {
        text.lines()
            .filter(|l| l.ends_with("<http://example.org/catalog/vocab/Place> ."))
            .count()
    };
    assert_eq!(places(&reconciled.text()), 1);
    assert_eq!(places(&get(&ingested(false).await, "/export").await.text()), 4);

    let r = post(&app, "/reconcile", r#"{"merge": []}"#).await;
    assert_eq!(r.json()["version"], 3);
    assert_eq!(get(&app, "/export").await.body, inline.body);

    let r = post(&app, "/reconcile", r#"{"merge": [["no colon here"]]}"#).await;
    assert_eq!(r.status, StatusCode::BAD_REQUEST);
    assert_eq!(r.version, Some(3));
    let r = post(&app, "/reconcile", r#"{"merge": [["place:a|x|0", "person:b"]]}"#).await;
    assert_eq!(r.status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn validate_endpoint() {
    let (app, _) = app();
    assert_eq!(get(&app, "/validate").await.json(), json!([]));
    let app = ingested(true).await;
    let r = get(&app, "/validate").await;
    assert_eq!(r.json(), json!([]));
    assert_eq!(r.version, Some(1));
}

#[tokio::test]
async fn every_response_is_versioned() {
    let app = ingested(true).await;
    for uri in ["/nowhere", "/search?q=x", "/validate", "/export"] {
        assert_eq!(get(&app, uri).await.version, Some(1), "{uri}");
    }
}

#[tokio::test]
async fn cors_preflight() {
    let (app, _) = app();
    let req = Request::builder()
        .method(Method::OPTIONS)
        .uri("/search?q=x")
        .header("origin", "http://localhost:5173")
        .header("access-control-request-method", "GET")
        .body(axum::body::Body::empty())
        .unwrap();
    let resp = app.oneshot(req).await.unwrap();
    assert_eq!(resp.headers()["access-control-allow-origin"], "*");
    let req = Request::builder()
        .uri("/validate")
        .header("origin", "http://localhost:5173")
        .body(axum::body::Body::empty())
        .unwrap();
    let resp = ingested(false).await.oneshot(req).await.unwrap();
    assert_eq!(resp.headers()["access-control-expose-headers"], "x-catalog-version");
}

#[tokio::test(flavor = "multi_thread", worker_threads = 4)]
async fn readers_see_whole_snapshots() {
    let (app, _) = app();
    post(&app, "/ingest", fixture("f1.jsonl")).await;
    let unmerged = get(&app, "/export").await.body;
    let merged = export_ntriples(&f1_oracle(true)).into_bytes();
    let writer = {
        let app = app.clone();
        tokio::spawn(async move {
            for _ in 0..5 {
                post(&app, "/reconcile", fixture("merge_all.json")).await;
            }
        })
    };
    let mut readers = Vec::new();
    for _ in 0..8 {
        let app = app.clone();
        readers.push(tokio::spawn(async move {
            let mut seen = Vec::new();
            for _ in 0..10 {
                let r = get(&app, "/export").await;
                seen.push((r.version.unwrap(), r.body));
            }
            seen
        }));
    }
    writer.await.unwrap();
    for reader in readers {
        let seen = reader.await.unwrap();
        assert!(seen.windows(2).all(|w| w[0].0 <= w[1].0));
        for (version, body) in seen {
            let expected = if version == 1 { &unmerged } else { &merged };
            assert_eq!(&body, expected, "version {version}");
        }
    }
}
