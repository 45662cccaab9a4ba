//! `nomen` command line. Exit codes: 0 success, 1 data error, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand};
use nomen_core::graph::{Graph, Iri};
use nomen_core::ingest::{promote, ReconciliationPlan};
use nomen_core::model::{validate, DEFAULT_NAMESPACE};
use nomen_core::resolve::SearchMode;

use crate::api;
use crate::catalog::Catalog;
use crate::config::{Config, DEFAULT_ADDR, DEFAULT_MAX_DEPTH};
use crate::formats::{load_graph, parse_directives, parse_records, read_file, GraphFormat};

#[derive(Debug, Parser)]
#[command(
    name = "nomen",
    version,
    about = "Promote flat bibliographic records to an entity/nomen graph and query it"
)]
struct Cli {
    /// Namespace for minted IRIs
    #[arg(long, global = true, default_value = DEFAULT_NAMESPACE)]
    namespace: String,
    /// Catalog default language for label fallback
    #[arg(long, global = true, env = "CATALOG_DEFAULT_LANG")]
    default_lang: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["records", "input"])))]
struct Source {
    /// JSON Lines records to promote
    #[arg(long)]
    records: Option<PathBuf>,
    /// Merge directive files, applied together with --records
    #[arg(long, requires = "records")]
    directives: Vec<PathBuf>,
    /// Graph file (.nt or .ttl)
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Promote records and write the graph
    Ingest {
        #[arg(long)]
        records: PathBuf,
        #[arg(long)]
        directives: Vec<PathBuf>,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
        /// ntriples or turtle; defaults to the --out extension, else ntriples
        #[arg(long, value_parser = parse_format)]
        format: Option<GraphFormat>,
    },
    /// Check well-formedness; prints violations as JSON
    Validate {
        #[command(flatten)]
        source: Source,
    },
    /// Write a graph in canonical form
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = parse_format)]
        format: Option<GraphFormat>,
    },
    /// Resolve the display label of an entity
    Label {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = parse_iri)]
        entity: Iri,
        #[arg(long)]
        lang: Option<String>,
    },
    /// Entity page, or the record view of a manifestation with --record
    View {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = parse_iri)]
        entity: Iri,
        #[arg(long)]
        lang: Option<String>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=DEFAULT_MAX_DEPTH as i64))]
        depth: u8,
        #[arg(long)]
        record: bool,
    },
    /// Find nomens by string
    Search {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        q: String,
        #[arg(long, default_value = "substring", value_parser = parse_mode)]
        mode: SearchMode,
        #[arg(long)]
        lang: Option<String>,
    },
    /// Run the HTTP service
    Serve {
        #[arg(long, default_value = DEFAULT_ADDR)]
        addr: SocketAddr,
        /// Records to load before serving
        #[arg(long)]
        records: Option<PathBuf>,
        #[arg(long, requires = "records")]
        directives: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Allowed CORS origin (any when absent)
        #[arg(long)]
        cors_origin: Option<String>,
    },
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: crate::FormatError| e.to_string())
}

fn parse_mode(s: &str) -> Result<SearchMode, String> {
    s.parse().map_err(|e: nomen_core::resolve::ResolveError| e.to_string())
}

fn parse_iri(s: &str) -> Result<Iri, String> {
    Iri::new(s).map_err(|e| e.to_string())
}

type Failure = String;

fn load_plan(paths: &[PathBuf]) -> Result<ReconciliationPlan, Failure> {
    let mut plan = ReconciliationPlan::new();
    for p in paths {
        let d = read_file(p)
            .and_then(|b| parse_directives(&b))
            .map_err(|e| format!("{}: {e}", p.display()))?;
        plan.merge(&d).map_err(|e| e.to_string())?;
    }
    Ok(plan)
}

fn promote_files(
    records: &Path,
    directives: &[PathBuf],
    namespace: &str,
    err: &mut dyn Write,
) -> Result<Graph, Failure> {
    let recs = read_file(records)
        .and_then(|b| parse_records(&b))
        .map_err(|e| format!("{}: {e}", records.display()))?;
    let plan = load_plan(directives)?;
    let p = promote(&recs, &plan, namespace).map_err(|e| e.to_string())?;
    for w in &p.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok(p.graph)
}

fn load(source: &Source, namespace: &str, err: &mut dyn Write) -> Result<Graph, Failure> {
    match (&source.records, &source.input) {
        (Some(r), _) => promote_files(r, &source.directives, namespace, err),
        (None, Some(i)) => load_graph(i).map_err(|e| format!("{}: {e}", i.display())),
        (None, None) => unreachable!("clap requires a source"),
    }
}

fn emit(bytes: &[u8], out_path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match out_path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| format!("{}: {e}", p.display())),
        None => out.write_all(bytes).map_err(|e| e.to_string()),
    }
}

fn json(value: &impl serde::Serialize, out: &mut dyn Write) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    emit(text.as_bytes(), None, out)
}

fn output_format(format: Option<GraphFormat>, out: Option<&Path>) -> GraphFormat {
    format
        .or_else(|| out.and_then(|p| GraphFormat::from_path(p).ok()))
        .unwrap_or_default()
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            }
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let ns = cli.namespace.as_str();
    let default_lang = cli.default_lang.as_deref().filter(|s| !s.is_empty());
    match cli.command {
        Command::Ingest {
            records,
            directives,
            out: out_path,
            format,
        } => {
            let g = promote_files(&records, &directives, ns, err)?;
            let format = output_format(format, out_path.as_deref());
            emit(format.export(&g).as_bytes(), out_path.as_deref(), out)?;
        }
        Command::Validate { source } => {
            let violations = validate(&load(&source, ns, err)?);
            json(&api::violations_json(&violations), out)?;
            if !violations.is_empty() {
                return Ok(1);
            }
        }
        Command::Export {
            source,
            out: out_path,
            format,
        } => {
            let g = load(&source, ns, err)?;
            let format = output_format(format, out_path.as_deref());
            emit(format.export(&g).as_bytes(), out_path.as_deref(), out)?;
        }
        Command::Label { source, entity, lang } => {
            let g = load(&source, ns, err)?;
            let label = api::label_json(&g, &entity, lang.as_deref(), default_lang).map_err(|e| e.to_string())?;
            json(&label, out)?;
        }
        Command::View {
            source,
            entity,
            lang,
            depth,
            record,
        } => {
            let g = load(&source, ns, err)?;
            if record {
                let r = api::record_json(&g, &entity, lang.as_deref(), default_lang).map_err(|e| e.to_string())?;
                json(&r, out)?;
            } else {
                let page = api::entity_json(&g, &entity, lang.as_deref(), default_lang, depth.into())
                    .map_err(|e| e.to_string())?;
                json(&page, out)?;
            }
        }
        Command::Search { source, q, mode, lang } => {
            let g = load(&source, ns, err)?;
            let hits = api::search_json(&g, &q, mode, lang.as_deref(), default_lang).map_err(|e| e.to_string())?;
            json(&hits, out)?;
        }
        Command::Serve {
            addr,
            records,
            directives,
            max_depth,
            cors_origin,
        } => {
            let mut catalog = Catalog::new(ns);
            if let Some(r) = records {
                let recs = read_file(&r)
                    .and_then(|b| parse_records(&b))
                    .map_err(|e| format!("{}: {e}", r.display()))?;
                let plan = load_plan(&directives)?;
                catalog.ingest(recs, Some(&plan)).map_err(|e| e.to_string())?;
            }
            let config = Config {
                namespace: ns.to_string(),
                default_lang: default_lang.map(str::to_string),
                max_depth,
                bind: addr,
                cors_origin,
            };
            let _ = writeln!(err, "listening on http://{addr}");
            let runtime = tokio::runtime::Runtime::new().map_err(|e| e.to_string())?;
            runtime
                .block_on(crate::service::serve(config, catalog))
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}
