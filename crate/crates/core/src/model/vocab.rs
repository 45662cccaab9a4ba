use alloc::format;
use alloc::string::String;

use percent_encoding::{utf8_percent_encode, AsciiSet, NON_ALPHANUMERIC};

use super::{EntityKind, NomenRelationType, NomenType};
use crate::graph::Iri;

/// Default namespace for minted data IRIs.
pub const DEFAULT_NAMESPACE: &str = "http://example.org/catalog/";

/// Namespace of every predicate and class in the model.
pub const VOCAB_NS: &str = "http://example.org/catalog/vocab/";

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

/// Everything except RFC 3986 unreserved characters.
const KEY_ENCODE: &AsciiSet = &NON_ALPHANUMERIC.remove(b'-').remove(b'.').remove(b'_').remove(b'~');

pub(crate) fn encode_component(raw: &str) -> String {
    utf8_percent_encode(raw, KEY_ENCODE).collect()
}

/// `namespace + kind + "/" + percent-encoded local_key`.
///
/// Deterministic, and injective over `(kind, local_key)` for kinds without
/// a `/`, since the encoded key never contains one.
pub fn mint_iri(namespace: &str, kind: &str, local_key: &str) -> Result<Iri, crate::graph::GraphError> {
    Iri::new(format!("{namespace}{kind}/{}", encode_component(local_key)))
}

pub(crate) fn vocab_iri(local: &str) -> Iri {
    Iri::new(format!("{VOCAB_NS}{local}")).expect("vocabulary IRIs are well-formed")
}

/// Predicate and class IRIs used by the model.
#[derive(Debug, Clone)]
pub struct Vocab {
    pub rdf_type: Iri,
    pub has_appellation: Iri,
    pub has_string: Iri,
    pub nomen_type: Iri,
    pub scheme: Iri,
    pub title_nomen: Iri,
    pub place_of_publication_nomen: Iri,
    pub statement_of_responsibility_nomen: Iri,
    pub note: Iri,
    pub note_type: Iri,
    pub creator: Iri,
    pub publisher: Iri,
    pub realizes: Iri,
    pub embodies: Iri,
    pub exemplifies: Iri,
    pub born_in: Iri,
    pub located_in: Iri,
    pub subject: Iri,
    pub nomen_class: Iri,
    pub note_class: Iri,
}

pub(crate) const ROLE_PREFIX: &str = "role/";
pub(crate) const ROLE_NOMEN_PREFIX: &str = "roleNomen/";
pub(crate) const NOMEN_RELATION_PREFIX: &str = "nomenRelation/";

impl Default for Vocab {
    fn default() -> Self {
        Self::new()
    }
}

impl Vocab {
    pub fn new() -> Self {
        Vocab {
            rdf_type: Iri::new(RDF_TYPE).expect("constant"),
            has_appellation: vocab_iri("hasAppellation"),
            has_string: vocab_iri("hasString"),
            nomen_type: vocab_iri("nomenType"),
            scheme: vocab_iri("scheme"),
            title_nomen: vocab_iri("titleNomen"),
            place_of_publication_nomen: vocab_iri("placeOfPublicationNomen"),
            statement_of_responsibility_nomen: vocab_iri("statementOfResponsibilityNomen"),
            note: vocab_iri("note"),
            note_type: vocab_iri("noteType"),
            creator: vocab_iri("creator"),
            publisher: vocab_iri("publisher"),
            realizes: vocab_iri("realizes"),
            embodies: vocab_iri("embodies"),
            exemplifies: vocab_iri("exemplifies"),
            born_in: vocab_iri("bornIn"),
            located_in: vocab_iri("locatedIn"),
            subject: vocab_iri("subject"),
            nomen_class: vocab_iri("Nomen"),
            note_class: vocab_iri("Note"),
        }
    }

    pub fn class(&self, kind: EntityKind) -> Iri {
        vocab_iri(kind.class_name())
    }

    pub fn nomen_type_value(&self, nomen_type: NomenType) -> Iri {
        vocab_iri(nomen_type.class_name())
    }

    /// Entity-level contributor relation carrying a free-text role label.
    pub fn role(&self, label: &str) -> Iri {
        vocab_iri(&format!("{ROLE_PREFIX}{}", encode_component(label)))
    }

    /// Binds a resource to the nomen of the agent it names in a given role.
    pub fn role_nomen(&self, label: &str) -> Iri {
        vocab_iri(&format!("{ROLE_NOMEN_PREFIX}{}", encode_component(label)))
    }

    pub fn nomen_relation(&self, rel: &NomenRelationType) -> Iri {
        vocab_iri(&format!("{NOMEN_RELATION_PREFIX}{}", encode_component(rel.label())))
    }
}
