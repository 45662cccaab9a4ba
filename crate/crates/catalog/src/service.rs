//! HTTP facade over a [`Catalog`].
//!
//! Reads take the current snapshot and never wait on a mutation; mutations
//! queue on one lock and publish by swapping the snapshot pointer. Every
//! response carries the version it was computed from in `X-Catalog-Version`.

use std::path::Path as FsPath;
use std::sync::{Arc, RwLock};

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::header::CONTENT_TYPE;
use axum::http::{HeaderName, HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use nomen_core::graph::Iri;
use nomen_core::model::validate;
use nomen_core::resolve::{ResolveError, SearchMode};
use serde::{Deserialize, Serialize};
use tower_http::cors::{AllowOrigin, Any, CorsLayer};

use crate::api;
use crate::catalog::{Catalog, Counts, Snapshot};
use crate::config::Config;
use crate::formats::{parse_directives, parse_records, read_file, GraphFormat};

pub const VERSION_HEADER: &str = "x-catalog-version";

pub struct AppState {
    config: Config,
    writer: tokio::sync::Mutex<Catalog>,
    current: RwLock<Arc<Snapshot>>,
}

impl AppState {
    pub fn new(config: Config, catalog: Catalog) -> Arc<Self> {
        Arc::new(AppState {
            current: RwLock::new(catalog.snapshot()),
            writer: tokio::sync::Mutex::new(catalog),
            config,
        })
    }

    pub fn snapshot(&self) -> Arc<Snapshot> {
        self.current.read().unwrap().clone()
    }

    fn default_lang(&self) -> Option<&str> {
        self.config.default_lang.as_deref()
    }
}

pub fn router(state: Arc<AppState>) -> Router {
    let origin = match &state.config.cors_origin {
        Some(o) => match HeaderValue::from_str(o) {
            Ok(v) => AllowOrigin::exact(v),
            Err(_) => AllowOrigin::any(),
        },
        None => AllowOrigin::any(),
    };
    let cors = CorsLayer::new()
        .allow_origin(origin)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers(Any)
        .expose_headers([HeaderName::from_static(VERSION_HEADER)]);
    Router::new()
        .route("/ingest", post(ingest))
        .route("/reconcile", post(reconcile))
        .route("/entity/{*iri}", get(entity))
        .route("/record/{*iri}", get(record))
        .route("/search", get(search))
        .route("/export", get(export))
        .route("/validate", get(validate_snapshot))
        .fallback(not_found)
        .layer(cors)
        .with_state(state)
}

pub async fn serve(config: Config, catalog: Catalog) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(config.bind).await?;
    axum::serve(listener, router(AppState::new(config, catalog))).await
}

fn stamped(version: u64, resp: impl IntoResponse) -> Response {
    let mut r = resp.into_response();
    r.headers_mut().insert(VERSION_HEADER, HeaderValue::from(version));
    r
}

fn ok<T: Serialize>(version: u64, body: T) -> Response {
    stamped(version, Json(body))
}

fn fail(version: u64, status: StatusCode, message: impl ToString) -> Response {
    stamped(
        version,
        (status, Json(serde_json::json!({ "error": message.to_string() }))),
    )
}

fn resolve_failure(version: u64, e: ResolveError) -> Response {
    let status = match e {
        ResolveError::UnknownEntity(_) => StatusCode::NOT_FOUND,
        ResolveError::NotManifestation { .. } => StatusCode::UNPROCESSABLE_ENTITY,
        _ => StatusCode::BAD_REQUEST,
    };
    fail(version, status, e)
}

fn non_empty(s: &Option<String>) -> Option<&str> {
    s.as_deref().filter(|s| !s.is_empty())
}

async fn not_found(State(state): State<Arc<AppState>>) -> Response {
    fail(state.snapshot().version, StatusCode::NOT_FOUND, "no such route")
}

#[derive(Deserialize)]
struct IngestQuery {
    directives: Option<String>,
}

#[derive(Serialize)]
struct IngestReply {
    version: u64,
    counts: Counts,
    warnings: Vec<String>,
}

async fn ingest(State(state): State<Arc<AppState>>, Query(q): Query<IngestQuery>, body: Bytes) -> Response {
    let mut writer = state.writer.lock().await;
    let version = writer.snapshot().version;
    let records = match parse_records(&body) {
        Ok(r) => r,
        Err(e) => return fail(version, StatusCode::BAD_REQUEST, e),
    };
    let directives = match non_empty(&q.directives) {
        Some(path) => match read_file(FsPath::new(path)).and_then(|b| parse_directives(&b)) {
            Ok(d) => Some(d),
            Err(e) => return fail(version, StatusCode::BAD_REQUEST, e),
        },
        None => None,
    };
    match writer.ingest(records, directives.as_ref()) {
        Ok(s) => {
            *state.current.write().unwrap() = s.clone();
            ok(
                s.version,
                IngestReply {
                    version: s.version,
                    counts: s.counts,
                    warnings: s.warnings.clone(),
                },
            )
        }
        Err(e) => fail(version, StatusCode::BAD_REQUEST, e),
    }
}

#[derive(Serialize)]
struct ReconcileReply {
    version: u64,
    merged_entities: usize,
    counts: Counts,
    warnings: Vec<String>,
}

async fn reconcile(State(state): State<Arc<AppState>>, body: Bytes) -> Response {
    let mut writer = state.writer.lock().await;
    let version = writer.snapshot().version;
    let directives = match parse_directives(&body) {
        Ok(d) => d,
        Err(e) => return fail(version, StatusCode::BAD_REQUEST, e),
    };
    match writer.reconcile(&directives) {
        Ok(s) => {
            *state.current.write().unwrap() = s.clone();
            ok(
                s.version,
                ReconcileReply {
                    version: s.version,
                    merged_entities: s.merged_entities,
                    counts: s.counts,
                    warnings: s.warnings.clone(),
                },
            )
        }
        Err(e) => fail(version, StatusCode::BAD_REQUEST, e),
    }
}

#[derive(Deserialize)]
struct EntityQuery {
    lang: Option<String>,
    depth: Option<String>,
}

async fn entity(State(state): State<Arc<AppState>>, Path(iri): Path<String>, Query(q): Query<EntityQuery>) -> Response {
    let snap = state.snapshot();
    let Ok(iri) = Iri::new(&iri) else {
        return fail(snap.version, StatusCode::NOT_FOUND, format!("not an IRI: {iri:?}"));
    };
    let depth = match non_empty(&q.depth).map(str::parse::<usize>) {
        None => 1.min(state.config.max_depth),
        Some(Ok(d)) if d <= state.config.max_depth => d,
        Some(_) => {
            return fail(
                snap.version,
                StatusCode::BAD_REQUEST,
                format!("depth must be an integer from 0 to {}", state.config.max_depth),
            )
        }
    };
    match api::entity_json(&snap.graph, &iri, non_empty(&q.lang), state.default_lang(), depth) {
        Ok(body) => ok(snap.version, body),
        Err(e) => resolve_failure(snap.version, e),
    }
}

#[derive(Deserialize)]
struct LangQuery {
    lang: Option<String>,
}

async fn record(State(state): State<Arc<AppState>>, Path(iri): Path<String>, Query(q): Query<LangQuery>) -> Response {
    let snap = state.snapshot();
    let Ok(iri) = Iri::new(&iri) else {
        return fail(snap.version, StatusCode::NOT_FOUND, format!("not an IRI: {iri:?}"));
    };
    match api::record_json(&snap.graph, &iri, non_empty(&q.lang), state.default_lang()) {
        Ok(body) => ok(snap.version, body),
        Err(e) => resolve_failure(snap.version, e),
    }
}

#[derive(Deserialize)]
struct SearchQuery {
    q: Option<String>,
    mode: Option<String>,
    lang: Option<String>,
}

async fn search(State(state): State<Arc<AppState>>, Query(q): Query<SearchQuery>) -> Response {
    let snap = state.snapshot();
    let mode = match non_empty(&q.mode).map(str::parse::<SearchMode>) {
        None => SearchMode::Substring,
        Some(Ok(m)) => m,
        Some(Err(e)) => return fail(snap.version, StatusCode::BAD_REQUEST, e),
    };
    let query = q.q.unwrap_or_default();
    match api::search_json(&snap.graph, &query, mode, non_empty(&q.lang), state.default_lang()) {
        Ok(hits) => ok(snap.version, hits),
        Err(e) => resolve_failure(snap.version, e),
    }
}

#[derive(Deserialize)]
struct ExportQuery {
    format: Option<String>,
}

async fn export(State(state): State<Arc<AppState>>, Query(q): Query<ExportQuery>) -> Response {
    let snap = state.snapshot();
    let format = match non_empty(&q.format).map(str::parse::<GraphFormat>) {
        None => GraphFormat::NTriples,
        Some(Ok(f)) => f,
        Some(Err(e)) => return fail(snap.version, StatusCode::BAD_REQUEST, e),
    };
    stamped(
        snap.version,
        ([(CONTENT_TYPE, format.media_type())], format.export(&snap.graph)),
    )
}

async fn validate_snapshot(State(state): State<Arc<AppState>>) -> Response {
    let snap = state.snapshot();
    ok(snap.version, api::violations_json(&validate(&snap.graph)))
}
