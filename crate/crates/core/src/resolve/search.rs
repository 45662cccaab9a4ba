use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use super::ResolveError;
use crate::graph::{Graph, Iri, Literal};
use crate::model::{CatalogView, EntityKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exact,
    /// Case-insensitive substring match.
    Substring,
}

impl FromStr for SearchMode {
    type Err = ResolveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(SearchMode::Exact),
            "substring" => Ok(SearchMode::Substring),
            other => Err(ResolveError::UnknownMode(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HitOwner {
    pub iri: Iri,
    pub kind: Option<EntityKind>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub nomen: Iri,
    pub string: Literal,
    /// Byte-exact match of the whole string.
    pub exact: bool,
    pub owners: Vec<HitOwner>,
}

impl CatalogView<'_> {
    /// Nomens whose string matches `query`, ordered by exactness, then
    /// owner kind, then nomen IRI.
    pub fn search_nomens(
        &self,
        query: &str,
        mode: SearchMode,
        lang: Option<&str>,
        default_lang: Option<&str>,
    ) -> Result<Vec<Hit>, ResolveError> {
        if query.is_empty() {
            return Err(ResolveError::EmptyQuery);
        }
        let folded = query.to_lowercase();
        let mut hits: Vec<Hit> = self
            .nomen_iris()
            .iter()
            .filter_map(|iri| self.nomen(iri))
            .filter(|n| match mode {
                SearchMode::Exact => n.string.lexical() == query,
                SearchMode::Substring => n.string.lexical().to_lowercase().contains(&folded),
            })
            .map(|n| Hit {
                exact: n.string.lexical() == query,
                owners: n
                    .owners
                    .iter()
                    .map(|o| HitOwner {
                        iri: o.clone(),
                        kind: self.kind_of(o),
                        label: self.resolve_label(o, lang, default_lang).ok().map(|l| l.label),
                    })
                    .collect(),
                nomen: n.iri,
                string: n.string,
            })
            .collect();
        hits.sort_by(|a, b| {
            let kind = |h: &Hit| h.owners.iter().filter_map(|o| o.kind).min();
            // exact first; hits without a typed owner last
            (!a.exact, kind(a).is_none(), kind(a), &a.nomen).cmp(&(!b.exact, kind(b).is_none(), kind(b), &b.nomen))
        });
        Ok(hits)
    }
}

pub fn search_nomens(
    graph: &Graph,
    query: &str,
    mode: SearchMode,
    lang: Option<&str>,
    default_lang: Option<&str>,
) -> Result<Vec<Hit>, ResolveError> {
    CatalogView::new(graph).search_nomens(query, mode, lang, default_lang)
}
