#![allow(dead_code)]

#[path = "../../../core/tests/common/mod.rs"]
mod shared;

use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use nomen_catalog::service::{router, AppState, VERSION_HEADER};
use nomen_catalog::{Catalog, Config};
pub use shared::*;
use tower::ServiceExt;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> Vec<u8> {
    std::fs::read(fixture_path(name)).unwrap()
}

/// Percent-encodes everything but unreserved characters, for path segments.
pub fn encode(s: &str) -> String {
    s.bytes()
        .map(|b| match b {
            b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'-' | b'.' | b'_' | b'~' => (b as char).to_string(),
            _ => format!("%{b:02X}"),
        })
        .collect()
}

pub fn app() -> (Router, Arc<AppState>) {
    app_with(Config::default())
}

pub fn app_with(config: Config) -> (Router, Arc<AppState>) {
    let state = AppState::new(config.clone(), Catalog::new(config.namespace));
    (router(state.clone()), state)
}

pub struct Reply {
    pub status: StatusCode,
    pub version: Option<u64>,
    pub content_type: Option<String>,
    pub headers: axum::http::HeaderMap,
    pub body: Vec<u8>,
}

impl Reply {
    pub fn json(&self) -> serde_json::Value {
        serde_json::from_slice(&self.body).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&self.body)))
    }

    pub fn text(&self) -> String {
        String::from_utf8(self.body.clone()).unwrap()
    }
}

pub async fn call(app: &Router, method: Method, uri: &str, body: impl Into<Body>) -> Reply {
    let req = Request::builder().method(method).uri(uri).body(body.into()).unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let headers = resp.headers().clone();
    let version = headers
        .get(VERSION_HEADER)
        .map(|v| v.to_str().unwrap().parse().unwrap());
    let content_type = headers.get("content-type").map(|v| v.to_str().unwrap().to_string());
    let body = resp.into_body().collect().await.unwrap().to_bytes().to_vec();
    Reply {
        status,
        version,
        content_type,
        headers,
        body,
    }
}

pub async fn get(app: &Router, uri: &str) -> Reply {
    call(app, Method::GET, uri, Body::empty()).await
}

pub async fn post(app: &Router, uri: &str, body: impl Into<Body>) -> Reply {
    call(app, Method::POST, uri, body).await
}
