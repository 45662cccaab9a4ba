//! Record and directive files, and graph files by extension.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use nomen_core::graph::{Graph, Iri, Literal, Term, Triple};
use nomen_core::ingest::{FlatRecord, PlanError, PlanOptions, ReconciliationPlan, ReligiousNamePolicy};
use nomen_core::serialize::{export_ntriples, export_turtle, import_ntriples, ImportError};
use rio_api::model as rio;
use rio_api::parser::TriplesParser;
use rio_turtle::{TurtleError, TurtleParser};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Record { line: usize, message: String },
    #[error("line {line}: duplicate record_id {record_id:?}, first used on line {first}")]
    DuplicateRecordId {
        record_id: String,
        first: usize,
        line: usize,
    },
    #[error("directives: {0}")]
    Directives(String),
    #[error("directives: {0}")]
    Plan(#[from] PlanError),
    #[error(transparent)]
    NTriples(#[from] ImportError),
    #[error("turtle: {0}")]
    Turtle(String),
    #[error("unknown graph format {0:?} (expected ntriples or turtle)")]
    UnknownFormat(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub fn read_file(path: &Path) -> Result<Vec<u8>, FormatError> {
    std::fs::read(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// JSON Lines, one record per line. Blank lines are skipped.
pub fn parse_records(input: &[u8]) -> Result<Vec<FlatRecord>, FormatError> {
    let mut records = Vec::new();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for (i, raw) in input.split(|&b| b == b'\n').enumerate() {
        let line = i + 1;
        let raw = raw.strip_suffix(b"\r").unwrap_or(raw);
        if raw.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        let record: FlatRecord = serde_json::from_slice(raw).map_err(|e| FormatError::Record {
            line,
            message: e.to_string(),
        })?;
        if let Some(&first) = seen.get(&record.record_id) {
            return Err(FormatError::DuplicateRecordId {
                record_id: record.record_id,
                first,
                line,
            });
        }
        seen.insert(record.record_id.clone(), line);
        records.push(record);
    }
    Ok(records)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DirectivesFile {
    #[serde(default)]
    merge: Vec<Vec<String>>,
    #[serde(default)]
    options: OptionsFile,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct OptionsFile {
    religious_names: Option<PolicyName>,
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case")]
enum PolicyName {
    OneEntity,
    TwoEntities,
}

/// `{"merge": [[key, ...], ...], "options": {"religious_names": ...}}`
pub fn parse_directives(input: &[u8]) -> Result<ReconciliationPlan, FormatError> {
    let file: DirectivesFile = serde_json::from_slice(input).map_err(|e| FormatError::Directives(e.to_string()))?;
    let religious_names = file.options.religious_names.map(|p| match p {
        PolicyName::OneEntity => ReligiousNamePolicy::OneEntity,
        PolicyName::TwoEntities => ReligiousNamePolicy::TwoEntities,
    });
    Ok(ReconciliationPlan::from_sets(
        file.merge,
        PlanOptions { religious_names },
    )?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    NTriples,
    Turtle,
}

impl GraphFormat {
    pub fn from_path(path: &Path) -> Result<Self, FormatError> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("nt") => Ok(GraphFormat::NTriples),
            Some("ttl") => Ok(GraphFormat::Turtle),
            other => Err(FormatError::UnknownFormat(other.unwrap_or_default().to_string())),
        }
    }

    pub fn media_type(self) -> &'static str {
        match self {
            GraphFormat::NTriples => "application/n-triples",
            GraphFormat::Turtle => "text/turtle",
        }
    }

    pub fn export(self, graph: &Graph) -> String {
        match self {
            GraphFormat::NTriples => export_ntriples(graph),
            GraphFormat::Turtle => export_turtle(graph),
        }
    }

    pub fn import(self, input: &[u8]) -> Result<Graph, FormatError> {
        match self {
            GraphFormat::NTriples => Ok(import_ntriples(input)?),
            GraphFormat::Turtle => import_turtle(input),
        }
    }
}

impl FromStr for GraphFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ntriples" | "nt" => Ok(GraphFormat::NTriples),
            "turtle" | "ttl" => Ok(GraphFormat::Turtle),
            other => Err(FormatError::UnknownFormat(other.to_string())),
        }
    }
}

pub fn load_graph(path: &Path) -> Result<Graph, FormatError> {
    GraphFormat::from_path(path)?.import(&read_file(path)?)
}

const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";

fn convert(t: rio::Triple<'_>) -> Result<Triple, String> {
    let iri = |s: &str| Iri::new(s).map_err(|e| e.to_string());
    let subject = match t.subject {
        rio::Subject::NamedNode(n) => iri(n.iri)?,
        _ => return Err("blank nodes are not supported".into()),
    };
    let object: Term = match t.object {
        rio::Term::NamedNode(n) => iri(n.iri)?.into(),
        rio::Term::Literal(rio::Literal::Simple { value }) => Literal::plain(value).map_err(|e| e.to_string())?.into(),
        rio::Term::Literal(rio::Literal::LanguageTaggedString { value, language }) => {
            Literal::new(value, Some(language)).map_err(|e| e.to_string())?.into()
        }
        rio::Term::Literal(rio::Literal::Typed { value, datatype }) if datatype.iri == XSD_STRING => {
            Literal::plain(value).map_err(|e| e.to_string())?.into()
        }
        rio::Term::Literal(rio::Literal::Typed { datatype, .. }) => {
            return Err(format!("unsupported datatype <{}>", datatype.iri))
        }
        _ => return Err("blank nodes are not supported".into()),
    };
    Ok(Triple::new(subject, iri(t.predicate.iri)?, object))
}

#[derive(Debug)]
enum TurtleFailure {
    Syntax(TurtleError),
    Content(String),
}

impl From<TurtleError> for TurtleFailure {
    fn from(e: TurtleError) -> Self {
        TurtleFailure::Syntax(e)
    }
}

pub fn import_turtle(input: &[u8]) -> Result<Graph, FormatError> {
    let mut graph = Graph::new();
    let mut parser = TurtleParser::new(input, None);
    parser
        .parse_all(&mut |t| {
            graph.insert(convert(t).map_err(TurtleFailure::Content)?);
            Ok::<_, TurtleFailure>(())
        })
        .map_err(|e| match e {
            TurtleFailure::Syntax(e) => FormatError::Turtle(e.to_string()),
            TurtleFailure::Content(m) => FormatError::Turtle(m),
        })?;
    Ok(graph)
}
