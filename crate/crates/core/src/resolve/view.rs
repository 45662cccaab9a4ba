use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::ResolveError;
use crate::graph::{Graph, Iri, Literal, Term};
use crate::ingest::STATEMENT_OF_RESPONSIBILITY_NOTE;
use crate::model::{CatalogView, EntityKind, VOCAB_NS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordEntry {
    pub key: String,
    pub value: String,
    pub lang: Option<String>,
    /// The nomen or note the value was read from, or the linked entity.
    pub source: Iri,
}

/// Statements about one manifestation aggregated into record order:
/// title, statement of responsibility, place of publication, publisher,
/// then agents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecordView {
    pub manifestation: Iri,
    pub entries: Vec<RecordEntry>,
}

impl CatalogView<'_> {
    fn literal_entry(&self, key: &str, source: &Iri) -> Option<RecordEntry> {
        let lit: &Literal = self
            .graph()
            .objects(source, &self.vocab().has_string)
            .find_map(Term::as_literal)?;
        Some(RecordEntry {
            key: key.to_string(),
            value: lit.lexical().to_string(),
            lang: lit.lang().map(ToString::to_string),
            source: source.clone(),
        })
    }

    fn linked_entry(&self, key: &str, entity: &Iri, lang: Option<&str>, default_lang: Option<&str>) -> RecordEntry {
        match self.resolve_label(entity, lang, default_lang) {
            Ok(label) => RecordEntry {
                key: key.to_string(),
                value: label.label,
                lang: label.lang,
                source: entity.clone(),
            },
            Err(_) => RecordEntry {
                key: key.to_string(),
                value: entity.to_string(),
                lang: None,
                source: entity.clone(),
            },
        }
    }

    pub fn render_record_view(
        &self,
        manifestation: &Iri,
        lang: Option<&str>,
        default_lang: Option<&str>,
    ) -> Result<RecordView, ResolveError> {
        let kind = self
            .kind_of(manifestation)
            .ok_or_else(|| ResolveError::UnknownEntity(manifestation.clone()))?;
        if kind != EntityKind::Manifestation {
            return Err(ResolveError::NotManifestation {
                iri: manifestation.clone(),
                kind,
            });
        }
        let v = self.vocab();
        let mut entries = Vec::new();

        for n in self.iri_objects(manifestation, &v.title_nomen) {
            entries.extend(self.literal_entry("title", &n));
        }
        for n in self.iri_objects(manifestation, &v.statement_of_responsibility_nomen) {
            entries.extend(self.literal_entry("statement_of_responsibility", &n));
        }
        let sor_type = Term::Literal(Literal::plain(STATEMENT_OF_RESPONSIBILITY_NOTE).expect("non-empty"));
        for note in self.iri_objects(manifestation, &v.note) {
            let typed = self
                .graph()
                .triples_matching(Some(&note), Some(&v.note_type), Some(&sor_type));
            if !typed.is_empty() {
                entries.extend(self.literal_entry("statement_of_responsibility", &note));
            }
        }
        for n in self.iri_objects(manifestation, &v.place_of_publication_nomen) {
            entries.extend(self.literal_entry("place_of_publication", &n));
        }
        for agent in self.iri_objects(manifestation, &v.publisher) {
            entries.push(self.linked_entry("publisher", &agent, lang, default_lang));
        }

        let role_prefix = alloc::format!("{VOCAB_NS}role/");
        for t in self.graph().outgoing(manifestation) {
            let key = if t.predicate == v.creator {
                "creator".to_string()
            } else if let Some(role) = t.predicate.as_str().strip_prefix(role_prefix.as_str()) {
                percent_encoding::percent_decode_str(role)
                    .decode_utf8_lossy()
                    .into_owned()
            } else {
                continue;
            };
            if let Some(agent) = t.object.as_iri() {
                entries.push(self.linked_entry(&key, agent, lang, default_lang));
            }
        }

        Ok(RecordView {
            manifestation: manifestation.clone(),
            entries,
        })
    }
}

pub fn render_record_view(
    graph: &Graph,
    manifestation: &Iri,
    lang: Option<&str>,
    default_lang: Option<&str>,
) -> Result<RecordView, ResolveError> {
    CatalogView::new(graph).render_record_view(manifestation, lang, default_lang)
}
