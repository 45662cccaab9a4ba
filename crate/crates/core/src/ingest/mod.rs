//! Flat record promotion: attribute strings become entities and nomens.
//!
//! Field tags:
//!
//! | tag | effect |
//! |-----|--------|
//! | `title` | title nomen on the record's entity, bound by `titleNomen` (one preferred title per language on expressions, later ones become `variant_form` nomens) |
//! | `name` | nomen on the record's entity, typed by its kind |
//! | `place_of_publication` | nomen on a provisional place, bound by `placeOfPublicationNomen` |
//! | `place_of_birth` | `bornIn` to a provisional place |
//! | `location` | `locatedIn` to a provisional place |
//! | `subject_place` | `subject` to a provisional place |
//! | `statement_of_responsibility` | the nomen a `via_nomen` link resolved to when the value matches it, otherwise a `statementOfResponsibility` note |
//! | `pseudonym`, `name_in_religion`, `name_before_marriage`, `acronym`, `earlier_name`, `later_name`, `variant_form` | nomen related from the record's first `name` by that relation |
//!
//! Each provisional place also carries a nomen for the field value. Places
//! and agents are only ever merged by explicit [`ReconciliationPlan`] sets.

mod plan;
mod promote;
mod records;

pub use plan::{PlanError, PlanOptions, ProvisionalKey, ReconciliationPlan, ReligiousNamePolicy};
pub use promote::{promote, PromoteError, Promotion, Warning, STATEMENT_OF_RESPONSIBILITY_NOTE};
pub use records::{Field, FlatRecord, Link};

/// Tags whose value names a place entity.
pub const PLACE_TAGS: [&str; 4] = ["place_of_publication", "place_of_birth", "location", "subject_place"];

pub const NAME_RELATION_TAGS: [&str; 7] = [
    "pseudonym",
    "name_in_religion",
    "name_before_marriage",
    "acronym",
    "earlier_name",
    "later_name",
    "variant_form",
];

pub(crate) const RELIGIOUS_NAME_TAG: &str = "name_in_religion";

pub const KNOWN_TAGS: [&str; 14] = [
    "title",
    "name",
    "statement_of_responsibility",
    "place_of_publication",
    "place_of_birth",
    "location",
    "subject_place",
    "pseudonym",
    "name_in_religion",
    "name_before_marriage",
    "acronym",
    "earlier_name",
    "later_name",
    "variant_form",
];
