use alloc::string::String;
use alloc::vec::Vec;

use crate::model::EntityKind;

/// An attribute-style input record: values are plain strings, and links to
/// other records are by record id.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FlatRecord {
    pub record_id: String,
    pub kind: EntityKind,
    #[cfg_attr(feature = "serde", serde(default))]
    pub fields: Vec<Field>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub links: Vec<Link>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Field {
    pub tag: String,
    pub value: String,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub lang: Option<String>,
    /// Marks a statement of responsibility as free text rather than a name.
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "core::ops::Not::not"))]
    pub phrase: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Link {
    pub rel: String,
    pub target: String,
    /// The form of the target's name as it appears on this resource.
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub via_nomen: Option<String>,
}

impl FlatRecord {
    pub fn new(record_id: impl Into<String>, kind: EntityKind) -> Self {
        FlatRecord {
            record_id: record_id.into(),
            kind,
            fields: Vec::new(),
            links: Vec::new(),
        }
    }

    pub fn field(mut self, tag: &str, value: &str) -> Self {
        self.fields.push(Field {
            tag: tag.into(),
            value: value.into(),
            lang: None,
            phrase: false,
        });
        self
    }

    pub fn field_lang(mut self, tag: &str, value: &str, lang: &str) -> Self {
        self.fields.push(Field {
            tag: tag.into(),
            value: value.into(),
            lang: Some(lang.into()),
            phrase: false,
        });
        self
    }

    pub fn phrase(mut self, tag: &str, value: &str) -> Self {
        self.fields.push(Field {
            tag: tag.into(),
            value: value.into(),
            lang: None,
            phrase: true,
        });
        self
    }

    pub fn link(mut self, rel: &str, target: &str) -> Self {
        self.links.push(Link {
            rel: rel.into(),
            target: target.into(),
            via_nomen: None,
        });
        self
    }

    pub fn link_via(mut self, rel: &str, target: &str, via_nomen: &str) -> Self {
        self.links.push(Link {
            rel: rel.into(),
            target: target.into(),
            via_nomen: Some(via_nomen.into()),
        });
        self
    }
}
