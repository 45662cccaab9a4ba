use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::plan::{ProvisionalKey, ReconciliationPlan, ReligiousNamePolicy};
use super::records::FlatRecord;
use super::{KNOWN_TAGS, NAME_RELATION_TAGS, PLACE_TAGS, RELIGIOUS_NAME_TAG};
use crate::graph::{Graph, Iri};
use crate::model::{
    CatalogBuilder, Entity, EntityKind, EntityRelationType, ModelError, Nomen, NomenRelationType, NomenType,
    TranscribedField,
};

/// Note type given to statements of responsibility that are not names.
pub const STATEMENT_OF_RESPONSIBILITY_NOTE: &str = "statementOfResponsibility";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PromoteError {
    #[error("duplicate record_id {0:?}")]
    DuplicateRecordId(String),
    #[error("record {record_id:?} links to {target:?}, which is not in the batch")]
    MissingTarget { record_id: String, target: String },
    #[error("record {record_id:?}: {tag} needs a name field to relate to")]
    MissingName { record_id: String, tag: String },
    #[error("record {record_id:?}: {source}")]
    Model { record_id: String, source: ModelError },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Warning {
    UnknownTag {
        record_id: String,
        tag: String,
    },
    /// A merge directive key that matches nothing in the batch.
    UnmatchedKey(String),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::UnknownTag { record_id, tag } => write!(f, "record {record_id:?}: unknown tag {tag:?} ignored"),
            Warning::UnmatchedKey(key) => write!(f, "merge key {key:?} matches no provisional entity"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Promotion {
    pub graph: Graph,
    pub entities: Vec<Entity>,
    pub nomen_count: usize,
    pub warnings: Vec<Warning>,
}

impl Promotion {
    /// Entities that absorbed more than one provisional key.
    pub fn merged_entities(&self) -> usize {
        self.entities.iter().filter(|e| e.provisional_keys.len() > 1).count()
    }

    pub fn count_of(&self, kind: EntityKind) -> usize {
        self.entities.iter().filter(|e| e.kind == kind).count()
    }
}

/// Turns flat records into an entity/nomen graph.
///
/// Records are processed in `record_id` order and every IRI is minted from
/// record-local keys, so the result does not depend on input order.
pub fn promote(records: &[FlatRecord], plan: &ReconciliationPlan, namespace: &str) -> Result<Promotion, PromoteError> {
    let mut sorted: Vec<&FlatRecord> = records.iter().collect();
    sorted.sort_by(|a, b| a.record_id.cmp(&b.record_id));
    if let Some(w) = sorted.windows(2).find(|w| w[0].record_id == w[1].record_id) {
        return Err(PromoteError::DuplicateRecordId(w[0].record_id.clone()));
    }
    let kinds: BTreeMap<&str, EntityKind> = sorted.iter().map(|r| (r.record_id.as_str(), r.kind)).collect();
    let policy = plan.religious_names();

    let mut p = Promoter {
        builder: CatalogBuilder::new(namespace),
        assigned: BTreeMap::new(),
        warnings: BTreeSet::new(),
    };
    p.create_entities(&sorted, plan, policy)?;
    for r in &sorted {
        p.own_fields(r, policy)?;
    }
    for r in &sorted {
        p.links_and_statements(r, &kinds)?;
    }

    let Promoter { builder, warnings, .. } = p;
    let entities = builder.entities().cloned().collect();
    let nomen_count = builder.nomens().count();
    Ok(Promotion {
        graph: builder.into_graph(),
        entities,
        nomen_count,
        warnings: warnings.into_iter().collect(),
    })
}

struct Promoter {
    builder: CatalogBuilder,
    /// Rendered provisional key to entity IRI.
    assigned: BTreeMap<String, Iri>,
    warnings: BTreeSet<Warning>,
}

fn occurrences(record: &FlatRecord) -> impl Iterator<Item = (usize, &super::Field)> {
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    record.fields.iter().map(move |f| {
        let n = seen.entry(f.tag.as_str()).or_default();
        let occ = *n;
        *n += 1;
        (occ, f)
    })
}

fn implied_key(
    record: &FlatRecord,
    occ: usize,
    field: &super::Field,
    policy: ReligiousNamePolicy,
) -> Option<ProvisionalKey> {
    let tag = field.tag.as_str();
    if PLACE_TAGS.contains(&tag) {
        Some(ProvisionalKey::field(
            EntityKind::Place,
            &record.record_id,
            tag,
            occ,
            &field.value,
        ))
    } else if tag == RELIGIOUS_NAME_TAG && policy == ReligiousNamePolicy::TwoEntities {
        Some(ProvisionalKey::field(
            record.kind,
            &record.record_id,
            tag,
            occ,
            &field.value,
        ))
    } else {
        None
    }
}

fn parse_relation(rel: &str) -> (EntityRelationType, bool) {
    match rel {
        "creator" => (EntityRelationType::Creator, false),
        "publisher" => (EntityRelationType::Publisher, false),
        "realizes" => (EntityRelationType::Realizes, false),
        "embodies" => (EntityRelationType::Embodies, false),
        "exemplifies" => (EntityRelationType::Exemplifies, false),
        "born_in" => (EntityRelationType::BornIn, false),
        "located_in" => (EntityRelationType::LocatedIn, false),
        "subject" => (EntityRelationType::Subject, false),
        "realized_by" => (EntityRelationType::Realizes, true),
        "embodied_in" => (EntityRelationType::Embodies, true),
        "exemplified_by" => (EntityRelationType::Exemplifies, true),
        role => (EntityRelationType::ContributorRole(role.to_string()), false),
    }
}

impl Promoter {
    fn model_err(record: &FlatRecord) -> impl Fn(ModelError) -> PromoteError + '_ {
        move |source| PromoteError::Model {
            record_id: record.record_id.clone(),
            source,
        }
    }

    fn entity(&self, key: &ProvisionalKey) -> Entity {
        let iri = &self.assigned[&key.to_string()];
        self.builder.entity(iri).expect("assigned entity exists").clone()
    }

    fn create_entities(
        &mut self,
        sorted: &[&FlatRecord],
        plan: &ReconciliationPlan,
        policy: ReligiousNamePolicy,
    ) -> Result<(), PromoteError> {
        let mut keys: BTreeMap<String, (ProvisionalKey, &FlatRecord)> = BTreeMap::new();
        for r in sorted {
            let k = ProvisionalKey::record(r.kind, &r.record_id);
            keys.insert(k.to_string(), (k, r));
            for (occ, f) in occurrences(r) {
                if let Some(k) = implied_key(r, occ, f, policy) {
                    keys.insert(k.to_string(), (k, r));
                }
            }
        }

        // Keys are visited in sorted order, so the first member of a merge
        // set reached here is its smallest key present in the batch.
        for (rendered, (key, record)) in &keys {
            if self.assigned.contains_key(rendered) {
                continue;
            }
            let members: Vec<&String> = match plan.set_of(rendered) {
                Some(set) => set.iter().filter(|k| keys.contains_key(*k)).collect(),
                None => vec![rendered],
            };
            let entity = self
                .builder
                .create_entity(key.kind, &key.local())
                .map_err(Self::model_err(record))?;
            for m in &members[1..] {
                let (other, other_record) = &keys[*m];
                self.builder
                    .add_key(&entity.iri, &other.local())
                    .map_err(Self::model_err(other_record))?;
            }
            for m in members {
                self.assigned.insert(m.clone(), entity.iri.clone());
            }
        }

        for set in plan.merge_sets() {
            for k in set {
                if !keys.contains_key(k) {
                    self.warnings.insert(Warning::UnmatchedKey(k.clone()));
                }
            }
        }
        Ok(())
    }

    fn own_fields(&mut self, r: &FlatRecord, policy: ReligiousNamePolicy) -> Result<(), PromoteError> {
        let err = Self::model_err(r);
        let owner = self.entity(&ProvisionalKey::record(r.kind, &r.record_id));
        let name_type = owner.kind.default_nomen_type();
        let primary = match r.fields.iter().find(|f| f.tag == "name") {
            Some(f) => Some(
                self.builder
                    .attach_nomen(&owner.iri, &f.value, f.lang.as_deref(), name_type, None)
                    .map_err(&err)?,
            ),
            None => None,
        };
        let mut preferred_titles: BTreeMap<Option<String>, Nomen> = BTreeMap::new();
        if owner.kind == EntityKind::Expression {
            // Titles already bound by another record merged into this expression.
            let v = self.builder.vocab().clone();
            for n in self.builder.nomens().filter(|n| n.owner == owner.iri) {
                let t = crate::graph::Triple::new(owner.iri.clone(), v.title_nomen.clone(), n.iri.clone());
                if self.builder.graph().contains(&t) {
                    preferred_titles.insert(n.string.lang_key(), n.clone());
                }
            }
        }

        for (occ, f) in occurrences(r) {
            let tag = f.tag.as_str();
            let lang = f.lang.as_deref();
            match tag {
                "title" => {
                    let nomen = self
                        .builder
                        .attach_nomen(&owner.iri, &f.value, lang, NomenType::Title, None)
                        .map_err(&err)?;
                    if owner.kind == EntityKind::Expression {
                        match preferred_titles.get(&nomen.string.lang_key()) {
                            None => {
                                self.builder
                                    .bind_transcribed(&owner.iri, &TranscribedField::Title, &nomen);
                                preferred_titles.insert(nomen.string.lang_key(), nomen);
                            }
                            Some(p) if p.iri == nomen.iri => {}
                            Some(p) => {
                                let p = p.clone();
                                self.builder
                                    .relate_nomens(&p, &nomen, &NomenRelationType::VariantForm)
                                    .map_err(&err)?;
                            }
                        }
                    } else {
                        self.builder
                            .bind_transcribed(&owner.iri, &TranscribedField::Title, &nomen);
                    }
                }
                "name" => {
                    self.builder
                        .attach_nomen(&owner.iri, &f.value, lang, name_type, None)
                        .map_err(&err)?;
                }
                t if PLACE_TAGS.contains(&t) => {
                    let key = implied_key(r, occ, f, policy).expect("place tag implies a key");
                    let place = self.entity(&key);
                    let nomen = self
                        .builder
                        .attach_nomen(&place.iri, &f.value, lang, NomenType::PlaceName, None)
                        .map_err(&err)?;
                    let rel = match t {
                        "place_of_publication" => {
                            self.builder
                                .bind_transcribed(&owner.iri, &TranscribedField::PlaceOfPublication, &nomen);
                            continue;
                        }
                        "place_of_birth" => EntityRelationType::BornIn,
                        "location" => EntityRelationType::LocatedIn,
                        _ => EntityRelationType::Subject,
                    };
                    self.builder.relate_entities(&owner, &place, &rel).map_err(&err)?;
                }
                t if NAME_RELATION_TAGS.contains(&t) => {
                    let Some(primary) = primary.clone() else {
                        return Err(PromoteError::MissingName {
                            record_id: r.record_id.clone(),
                            tag: t.to_string(),
                        });
                    };
                    let bearer = match implied_key(r, occ, f, policy) {
                        Some(key) => self.entity(&key),
                        None => owner.clone(),
                    };
                    let nomen = self
                        .builder
                        .attach_nomen(&bearer.iri, &f.value, lang, bearer.kind.default_nomen_type(), None)
                        .map_err(&err)?;
                    if nomen.iri != primary.iri {
                        let rel = NomenRelationType::from_label(t);
                        self.builder.relate_nomens(&primary, &nomen, &rel).map_err(&err)?;
                    }
                }
                "statement_of_responsibility" => {}
                other => {
                    debug_assert!(!KNOWN_TAGS.contains(&other));
                    self.warnings.insert(Warning::UnknownTag {
                        record_id: r.record_id.clone(),
                        tag: other.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    fn links_and_statements(&mut self, r: &FlatRecord, kinds: &BTreeMap<&str, EntityKind>) -> Result<(), PromoteError> {
        let err = Self::model_err(r);
        let owner = self.entity(&ProvisionalKey::record(r.kind, &r.record_id));
        let mut used_names: Vec<(&str, Nomen)> = Vec::new();

        for link in &r.links {
            let Some(&target_kind) = kinds.get(link.target.as_str()) else {
                return Err(PromoteError::MissingTarget {
                    record_id: r.record_id.clone(),
                    target: link.target.clone(),
                });
            };
            let target = self.entity(&ProvisionalKey::record(target_kind, &link.target));
            let (rel, inverse) = parse_relation(&link.rel);
            let (subject, object) = if inverse { (&target, &owner) } else { (&owner, &target) };
            self.builder.relate_entities(subject, object, &rel).map_err(&err)?;

            if let Some(via) = link.via_nomen.as_deref() {
                let existing = self
                    .builder
                    .nomens_with_string(&target.iri, via)
                    .first()
                    .map(|n| (*n).clone());
                let nomen = match existing {
                    Some(n) => n,
                    None => self
                        .builder
                        .attach_nomen(&target.iri, via, None, target.kind.default_nomen_type(), None)
                        .map_err(&err)?,
                };
                self.builder
                    .bind_transcribed(&owner.iri, &TranscribedField::Role(link.rel.clone()), &nomen);
                used_names.push((via, nomen));
            }
        }

        for (occ, f) in occurrences(r).filter(|(_, f)| f.tag == "statement_of_responsibility") {
            let named = if f.phrase {
                None
            } else {
                used_names
                    .iter()
                    .find(|(via, _)| *via == f.value)
                    .map(|(_, n)| n.clone())
            };
            match named {
                Some(nomen) => {
                    self.builder
                        .bind_transcribed(&owner.iri, &TranscribedField::StatementOfResponsibility, &nomen);
                }
                None => {
                    let key = ProvisionalKey::field(r.kind, &r.record_id, &f.tag, occ, &f.value).local();
                    self.builder
                        .add_note(
                            &owner.iri,
                            &key,
                            STATEMENT_OF_RESPONSIBILITY_NOTE,
                            &f.value,
                            f.lang.as_deref(),
                        )
                        .map_err(&err)?;
                }
            }
        }
        Ok(())
    }
}
