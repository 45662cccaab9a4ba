//! Read-side semantics: language-aware labels, record views and nomen search.

mod label;
mod search;
mod view;

use alloc::string::String;

pub use label::{resolve_label, LabelRule, ResolvedLabel};
pub use search::{search_nomens, Hit, HitOwner, SearchMode};
pub use view::{render_record_view, RecordEntry, RecordView};

use crate::graph::Iri;
use crate::model::EntityKind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolveError {
    #[error("no entity {0}")]
    UnknownEntity(Iri),
    #[error("entity {0} has no reachable nomen")]
    NoLabel(Iri),
    #[error("{iri} is a {kind}, not a manifestation")]
    NotManifestation { iri: Iri, kind: EntityKind },
    #[error("search query must not be empty")]
    EmptyQuery,
    #[error("unknown search mode {0:?}")]
    UnknownMode(String),
}
