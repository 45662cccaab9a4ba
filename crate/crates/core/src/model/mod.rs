//! Bibliographic vocabulary and typed construction layer.
//!
//! Entities are typed IRI nodes. Names are never attributes of an entity:
//! each lexical form is a [`Nomen`] node linked from its owner by
//! `hasAppellation` and carrying exactly one literal through `hasString`.

mod builder;
mod validate;
mod view;
mod vocab;

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

pub use builder::CatalogBuilder;
pub use validate::{validate, validate_with, ValidationConfig, Violation, ViolationCode};
pub use view::{CatalogView, NomenInfo};
pub use vocab::{mint_iri, Vocab, DEFAULT_NAMESPACE, RDF_NS, RDF_TYPE, VOCAB_NS};

use crate::graph::{GraphError, Iri, Literal};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("provisional key {key:?} already used for kind {kind}")]
    DuplicateKey { kind: EntityKind, key: String },
    #[error("provisional key must not be empty")]
    EmptyKey,
    #[error("a nomen cannot be related to itself: {0}")]
    SelfRelation(Iri),
    #[error("{relation} requires {position} of kind {expected}, got {found}")]
    DomainRange {
        relation: String,
        position: &'static str,
        expected: String,
        found: EntityKind,
    },
    #[error("role label must not be empty")]
    EmptyRole,
    #[error("unknown entity kind {0:?}")]
    UnknownKind(String),
}

/// The eight bibliographic entity classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum EntityKind {
    Work,
    Expression,
    Manifestation,
    Item,
    Person,
    Family,
    CorporateBody,
    Place,
}

impl EntityKind {
    pub const ALL: [EntityKind; 8] = [
        EntityKind::Work,
        EntityKind::Expression,
        EntityKind::Manifestation,
        EntityKind::Item,
        EntityKind::Person,
        EntityKind::Family,
        EntityKind::CorporateBody,
        EntityKind::Place,
    ];

    pub fn label(self) -> &'static str {
        match self {
            EntityKind::Work => "work",
            EntityKind::Expression => "expression",
            EntityKind::Manifestation => "manifestation",
            EntityKind::Item => "item",
            EntityKind::Person => "person",
            EntityKind::Family => "family",
            EntityKind::CorporateBody => "corporate_body",
            EntityKind::Place => "place",
        }
    }

    pub fn class_name(self) -> &'static str {
        match self {
            EntityKind::Work => "Work",
            EntityKind::Expression => "Expression",
            EntityKind::Manifestation => "Manifestation",
            EntityKind::Item => "Item",
            EntityKind::Person => "Person",
            EntityKind::Family => "Family",
            EntityKind::CorporateBody => "CorporateBody",
            EntityKind::Place => "Place",
        }
    }

    pub fn from_class_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.class_name() == name)
    }

    pub fn is_agent(self) -> bool {
        matches!(
            self,
            EntityKind::Person | EntityKind::Family | EntityKind::CorporateBody
        )
    }

    pub fn is_resource(self) -> bool {
        matches!(
            self,
            EntityKind::Work | EntityKind::Expression | EntityKind::Manifestation | EntityKind::Item
        )
    }

    /// Nomen type given to a plain name of an entity of this kind.
    pub fn default_nomen_type(self) -> NomenType {
        match self {
            EntityKind::Person => NomenType::PersonalName,
            EntityKind::Family => NomenType::FamilyName,
            EntityKind::CorporateBody => NomenType::CorporateName,
            EntityKind::Place => NomenType::PlaceName,
            _ => NomenType::Title,
        }
    }
}

impl fmt::Display for EntityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for EntityKind {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| ModelError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NomenType {
    PersonalName,
    CorporateName,
    FamilyName,
    PlaceName,
    Title,
    Phrase,
}

impl NomenType {
    pub const ALL: [NomenType; 6] = [
        NomenType::PersonalName,
        NomenType::CorporateName,
        NomenType::FamilyName,
        NomenType::PlaceName,
        NomenType::Title,
        NomenType::Phrase,
    ];

    pub fn label(self) -> &'static str {
        match self {
            NomenType::PersonalName => "personal_name",
            NomenType::CorporateName => "corporate_name",
            NomenType::FamilyName => "family_name",
            NomenType::PlaceName => "place_name",
            NomenType::Title => "title",
            NomenType::Phrase => "phrase",
        }
    }

    pub fn class_name(self) -> &'static str {
        match self {
            NomenType::PersonalName => "PersonalName",
            NomenType::CorporateName => "CorporateName",
            NomenType::FamilyName => "FamilyName",
            NomenType::PlaceName => "PlaceName",
            NomenType::Title => "Title",
            NomenType::Phrase => "Phrase",
        }
    }

    pub fn from_class_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.class_name() == name)
    }
}

impl fmt::Display for NomenType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Relations between two names of the same (or a related) entity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NomenRelationType {
    NameBeforeMarriage,
    NameInReligion,
    Acronym,
    Pseudonym,
    EarlierName,
    LaterName,
    VariantForm,
    /// A relation outside the built-in set; accepted by the validator only
    /// when listed in [`ValidationConfig::extra_nomen_relations`].
    Other(String),
}

impl NomenRelationType {
    pub const BUILT_IN: [NomenRelationType; 7] = [
        NomenRelationType::NameBeforeMarriage,
        NomenRelationType::NameInReligion,
        NomenRelationType::Acronym,
        NomenRelationType::Pseudonym,
        NomenRelationType::EarlierName,
        NomenRelationType::LaterName,
        NomenRelationType::VariantForm,
    ];

    pub fn label(&self) -> &str {
        match self {
            NomenRelationType::NameBeforeMarriage => "name_before_marriage",
            NomenRelationType::NameInReligion => "name_in_religion",
            NomenRelationType::Acronym => "acronym",
            NomenRelationType::Pseudonym => "pseudonym",
            NomenRelationType::EarlierName => "earlier_name",
            NomenRelationType::LaterName => "later_name",
            NomenRelationType::VariantForm => "variant_form",
            NomenRelationType::Other(label) => label,
        }
    }

    /// Parses a label; unknown labels become [`NomenRelationType::Other`].
    pub fn from_label(label: &str) -> Self {
        Self::BUILT_IN
            .into_iter()
            .find(|r| r.label() == label)
            .unwrap_or_else(|| NomenRelationType::Other(label.to_string()))
    }

    /// Built-in lookup only.
    pub fn built_in(label: &str) -> Option<Self> {
        Self::BUILT_IN.into_iter().find(|r| r.label() == label)
    }
}

/// Role label that links a shared persona to each individual behind it.
pub const SHARED_IDENTITY_ROLE: &str = "shared_identity_of";

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntityRelationType {
    Creator,
    /// Contributor in a named role, e.g. "lithographer".
    ContributorRole(String),
    Publisher,
    Realizes,
    Embodies,
    Exemplifies,
    BornIn,
    LocatedIn,
    Subject,
}

impl EntityRelationType {
    pub fn label(&self) -> &str {
        match self {
            EntityRelationType::Creator => "creator",
            EntityRelationType::ContributorRole(role) => role,
            EntityRelationType::Publisher => "publisher",
            EntityRelationType::Realizes => "realizes",
            EntityRelationType::Embodies => "embodies",
            EntityRelationType::Exemplifies => "exemplifies",
            EntityRelationType::BornIn => "born_in",
            EntityRelationType::LocatedIn => "located_in",
            EntityRelationType::Subject => "subject",
        }
    }

    pub fn predicate(&self, vocab: &Vocab) -> Iri {
        match self {
            EntityRelationType::Creator => vocab.creator.clone(),
            EntityRelationType::ContributorRole(role) => vocab.role(role),
            EntityRelationType::Publisher => vocab.publisher.clone(),
            EntityRelationType::Realizes => vocab.realizes.clone(),
            EntityRelationType::Embodies => vocab.embodies.clone(),
            EntityRelationType::Exemplifies => vocab.exemplifies.clone(),
            EntityRelationType::BornIn => vocab.born_in.clone(),
            EntityRelationType::LocatedIn => vocab.located_in.clone(),
            EntityRelationType::Subject => vocab.subject.clone(),
        }
    }

    /// Allowed subject kinds and object kinds.
    pub fn domain_range(&self) -> (&'static [EntityKind], &'static [EntityKind]) {
        use EntityKind::*;
        const RESOURCES: &[EntityKind] = &[Work, Expression, Manifestation, Item];
        const AGENTS: &[EntityKind] = &[Person, Family, CorporateBody];
        match self {
            EntityRelationType::ContributorRole(role) if role == SHARED_IDENTITY_ROLE => (&[Person], &[Person]),
            EntityRelationType::Creator | EntityRelationType::ContributorRole(_) => (RESOURCES, AGENTS),
            EntityRelationType::Publisher => (&[Manifestation], AGENTS),
            EntityRelationType::Realizes => (&[Expression], &[Work]),
            EntityRelationType::Embodies => (&[Manifestation], &[Expression, Work]),
            EntityRelationType::Exemplifies => (&[Item], &[Manifestation]),
            EntityRelationType::BornIn => (&[Person], &[Place]),
            EntityRelationType::LocatedIn => (&[CorporateBody, Place], &[Place]),
            EntityRelationType::Subject => (&[Work], &EntityKind::ALL),
        }
    }
}

/// A bibliographic entity and the provisional keys merged into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entity {
    pub iri: Iri,
    pub kind: EntityKind,
    pub provisional_keys: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nomen {
    pub iri: Iri,
    pub owner: Iri,
    pub string: Literal,
    pub nomen_type: NomenType,
    pub scheme: Option<String>,
}

/// Predicates binding a resource to the exact nomen it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TranscribedField {
    Title,
    PlaceOfPublication,
    StatementOfResponsibility,
    Role(String),
}

impl TranscribedField {
    pub fn predicate(&self, vocab: &Vocab) -> Iri {
        match self {
            TranscribedField::Title => vocab.title_nomen.clone(),
            TranscribedField::PlaceOfPublication => vocab.place_of_publication_nomen.clone(),
            TranscribedField::StatementOfResponsibility => vocab.statement_of_responsibility_nomen.clone(),
            TranscribedField::Role(role) => vocab.role_nomen(role),
        }
    }
}
