//! Files, HTTP and command line around [`nomen_core`].
//!
//! Records come in as JSON Lines and merge directives as a small JSON
//! document (see [`formats`]). [`catalog::Catalog`] keeps both and replays
//! promotion on every change, [`service`] serves snapshots over HTTP and
//! [`cli`] drives the same operations from files.

pub mod api;
pub mod catalog;
pub mod cli;
pub mod config;
pub mod formats;
pub mod service;

pub use catalog::{Catalog, CatalogError, Counts, Snapshot};
pub use config::Config;
pub use formats::{parse_directives, parse_records, FormatError, GraphFormat};
