use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::vocab::mint_iri;
use super::{
    Entity, EntityKind, EntityRelationType, ModelError, Nomen, NomenRelationType, NomenType, TranscribedField, Vocab,
};
use crate::graph::{Graph, Iri, Literal, Term, Triple};

type NomenKey = (Iri, String, Option<String>, NomenType);

/// Single-writer construction state: the graph under construction plus the
/// provisional-key registry and the nomen find-or-create index.
#[derive(Debug, Clone)]
pub struct CatalogBuilder {
    graph: Graph,
    vocab: Vocab,
    namespace: String,
    registry: BTreeMap<(EntityKind, String), Iri>,
    entities: BTreeMap<Iri, Entity>,
    nomens: BTreeMap<NomenKey, Nomen>,
}

impl CatalogBuilder {
    pub fn new(namespace: impl Into<String>) -> Self {
        CatalogBuilder {
            graph: Graph::new(),
            vocab: Vocab::new(),
            namespace: namespace.into(),
            registry: BTreeMap::new(),
            entities: BTreeMap::new(),
            nomens: BTreeMap::new(),
        }
    }

    pub fn namespace(&self) -> &str {
        &self.namespace
    }

    pub fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn entities(&self) -> impl Iterator<Item = &Entity> + '_ {
        self.entities.values()
    }

    pub fn nomens(&self) -> impl Iterator<Item = &Nomen> + '_ {
        self.nomens.values()
    }

    pub fn entity(&self, iri: &Iri) -> Option<&Entity> {
        self.entities.get(iri)
    }

    pub fn lookup(&self, kind: EntityKind, provisional_key: &str) -> Option<&Entity> {
        self.registry
            .get(&(kind, provisional_key.to_string()))
            .and_then(|iri| self.entities.get(iri))
    }

    /// Creates an entity node typed by `kind`, its IRI minted from the key.
    pub fn create_entity(&mut self, kind: EntityKind, provisional_key: &str) -> Result<Entity, ModelError> {
        if provisional_key.is_empty() {
            return Err(ModelError::EmptyKey);
        }
        if self.registry.contains_key(&(kind, provisional_key.to_string())) {
            return Err(ModelError::DuplicateKey {
                kind,
                key: provisional_key.to_string(),
            });
        }
        let iri = mint_iri(&self.namespace, kind.label(), provisional_key)?;
        if self.entities.contains_key(&iri) {
            return Err(ModelError::DuplicateKey {
                kind,
                key: provisional_key.to_string(),
            });
        }
        self.graph.insert(Triple::new(
            iri.clone(),
            self.vocab.rdf_type.clone(),
            self.vocab.class(kind),
        ));
        self.registry.insert((kind, provisional_key.to_string()), iri.clone());
        let entity = Entity {
            iri: iri.clone(),
            kind,
            provisional_keys: BTreeSet::from([provisional_key.to_string()]),
        };
        self.entities.insert(iri, entity.clone());
        Ok(entity)
    }

    /// Registers another provisional key as naming an existing entity.
    pub fn add_key(&mut self, entity: &Iri, provisional_key: &str) -> Result<Entity, ModelError> {
        let kind = self.entities[entity].kind;
        let slot = (kind, provisional_key.to_string());
        if self.registry.get(&slot).is_some_and(|existing| existing != entity) {
            return Err(ModelError::DuplicateKey {
                kind,
                key: provisional_key.to_string(),
            });
        }
        self.registry.insert(slot, entity.clone());
        let e = self.entities.get_mut(entity).expect("registered entity");
        e.provisional_keys.insert(provisional_key.to_string());
        Ok(e.clone())
    }

    /// Find-or-create a nomen of `owner` for `(lexical, lang, nomen_type)`.
    pub fn attach_nomen(
        &mut self,
        owner: &Iri,
        lexical: &str,
        lang: Option<&str>,
        nomen_type: NomenType,
        scheme: Option<&str>,
    ) -> Result<Nomen, ModelError> {
        let string = Literal::new(lexical, lang)?;
        let key: NomenKey = (owner.clone(), lexical.to_string(), string.lang_key(), nomen_type);
        if let Some(existing) = self.nomens.get(&key) {
            let existing = existing.clone();
            if let Some(scheme) = scheme {
                self.graph.insert(Triple::new(
                    existing.iri.clone(),
                    self.vocab.scheme.clone(),
                    Literal::plain(scheme)?,
                ));
            }
            return Ok(existing);
        }

        let owner_ref = owner
            .as_str()
            .strip_prefix(self.namespace.as_str())
            .unwrap_or(owner.as_str());
        let local = format!(
            "{owner_ref}|{}|{}|{lexical}",
            nomen_type.label(),
            key.2.as_deref().unwrap_or("")
        );
        let iri = mint_iri(&self.namespace, "nomen", &local)?;
        let v = &self.vocab;
        let mut triples = Vec::with_capacity(5);
        triples.push(Triple::new(iri.clone(), v.rdf_type.clone(), v.nomen_class.clone()));
        triples.push(Triple::new(
            iri.clone(),
            v.nomen_type.clone(),
            v.nomen_type_value(nomen_type),
        ));
        triples.push(Triple::new(owner.clone(), v.has_appellation.clone(), iri.clone()));
        triples.push(Triple::new(iri.clone(), v.has_string.clone(), string.clone()));
        if let Some(scheme) = scheme {
            triples.push(Triple::new(iri.clone(), v.scheme.clone(), Literal::plain(scheme)?));
        }
        self.graph.extend(triples);

        let nomen = Nomen {
            iri,
            owner: owner.clone(),
            string,
            nomen_type,
            scheme: scheme.map(ToString::to_string),
        };
        self.nomens.insert(key, nomen.clone());
        Ok(nomen)
    }

    /// Existing nomens of `owner` with exactly this lexical form, any language.
    pub fn nomens_with_string(&self, owner: &Iri, lexical: &str) -> Vec<&Nomen> {
        let mut found: Vec<&Nomen> = self
            .nomens
            .values()
            .filter(|n| &n.owner == owner && n.string.lexical() == lexical)
            .collect();
        found.sort_by(|a, b| a.iri.cmp(&b.iri));
        found
    }

    pub fn relate_nomens(&mut self, a: &Nomen, b: &Nomen, rel: &NomenRelationType) -> Result<Triple, ModelError> {
        if a.iri == b.iri {
            return Err(ModelError::SelfRelation(a.iri.clone()));
        }
        let t = Triple::new(a.iri.clone(), self.vocab.nomen_relation(rel), b.iri.clone());
        self.graph.insert(t.clone());
        Ok(t)
    }

    /// Asserts an entity-level relation after checking its domain and range.
    pub fn relate_entities(&mut self, a: &Entity, b: &Entity, rel: &EntityRelationType) -> Result<Triple, ModelError> {
        if let EntityRelationType::ContributorRole(role) = rel {
            if role.is_empty() {
                return Err(ModelError::EmptyRole);
            }
        }
        let (domain, range) = rel.domain_range();
        for (position, allowed, found) in [("subject", domain, a.kind), ("object", range, b.kind)] {
            if !allowed.contains(&found) {
                let expected: Vec<&str> = allowed.iter().map(|k| k.label()).collect();
                return Err(ModelError::DomainRange {
                    relation: rel.label().to_string(),
                    position,
                    expected: expected.join("|"),
                    found,
                });
            }
        }
        let t = Triple::new(a.iri.clone(), rel.predicate(&self.vocab), b.iri.clone());
        self.graph.insert(t.clone());
        Ok(t)
    }

    /// Links a resource to the nomen it carries for a transcribed field.
    pub fn bind_transcribed(&mut self, resource: &Iri, field: &TranscribedField, nomen: &Nomen) -> Triple {
        let t = Triple::new(resource.clone(), field.predicate(&self.vocab), nomen.iri.clone());
        self.graph.insert(t.clone());
        t
    }

    /// Adds a typed note carrying a phrase that is not a name.
    pub fn add_note(
        &mut self,
        resource: &Iri,
        note_key: &str,
        note_type: &str,
        text: &str,
        lang: Option<&str>,
    ) -> Result<Iri, ModelError> {
        let iri = mint_iri(&self.namespace, "note", note_key)?;
        let v = &self.vocab;
        self.graph.extend([
            Triple::new(resource.clone(), v.note.clone(), iri.clone()),
            Triple::new(iri.clone(), v.rdf_type.clone(), v.note_class.clone()),
            Triple::new(iri.clone(), v.note_type.clone(), Literal::plain(note_type)?),
            Triple::new(
                iri.clone(),
                v.has_string.clone(),
                Term::Literal(Literal::new(text, lang)?),
            ),
        ]);
        Ok(iri)
    }
}
