//! In-memory triple store with subject, predicate and object indexes.

mod neighborhood;
mod term;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::Deref;

pub use neighborhood::Subgraph;
pub use term::{is_language_tag, Iri, Literal, Term, Triple};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("not an absolute IRI: {0:?}")]
    InvalidIri(String),
    #[error("literal lexical form must not be empty")]
    EmptyLiteral,
    #[error("malformed language tag: {0:?}")]
    InvalidLanguageTag(String),
    #[error("a literal cannot be the subject of a triple")]
    LiteralSubject,
    #[error("a literal cannot be a predicate")]
    LiteralPredicate,
}

/// A set of triples. Iteration and every lookup yield triples in canonical
/// order (subject, predicate, object).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    triples: BTreeSet<Triple>,
    by_subject: BTreeMap<Iri, BTreeSet<Triple>>,
    by_predicate: BTreeMap<Iri, BTreeSet<Triple>>,
    by_object: BTreeMap<Term, BTreeSet<Triple>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Inserts a triple, returning `true` if it was not already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        if self.triples.contains(&triple) {
            return false;
        }
        self.by_subject
            .entry(triple.subject.clone())
            .or_default()
            .insert(triple.clone());
        self.by_predicate
            .entry(triple.predicate.clone())
            .or_default()
            .insert(triple.clone());
        self.by_object
            .entry(triple.object.clone())
            .or_default()
            .insert(triple.clone());
        self.triples.insert(triple)
    }

    pub fn remove(&mut self, triple: &Triple) -> bool {
        if !self.triples.remove(triple) {
            return false;
        }
        remove_indexed(&mut self.by_subject, &triple.subject, triple);
        remove_indexed(&mut self.by_predicate, &triple.predicate, triple);
        remove_indexed(&mut self.by_object, &triple.object, triple);
        true
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> + '_ {
        self.triples.iter()
    }

    /// All triples matching the bound positions, in canonical order.
    pub fn triples_matching(
        &self,
        subject: Option<&Iri>,
        predicate: Option<&Iri>,
        object: Option<&Term>,
    ) -> Vec<&Triple> {
        // Scan the smallest candidate set among the bound positions.
        let mut candidates: Option<&BTreeSet<Triple>> = None;
        let bound = [
            subject.map(|s| self.by_subject.get(s)),
            predicate.map(|p| self.by_predicate.get(p)),
            object.map(|o| self.by_object.get(o)),
        ];
        for slot in bound.into_iter().flatten() {
            match slot {
                None => return Vec::new(),
                Some(set) => {
                    if candidates.is_none_or(|c| set.len() < c.len()) {
                        candidates = Some(set);
                    }
                }
            }
        }
        candidates
            .unwrap_or(&self.triples)
            .iter()
            .filter(|t| {
                subject.is_none_or(|s| &t.subject == s)
                    && predicate.is_none_or(|p| &t.predicate == p)
                    && object.is_none_or(|o| &t.object == o)
            })
            .collect()
    }

    /// Objects of `(subject, predicate, ?)` in canonical order.
    pub fn objects<'a>(&'a self, subject: &Iri, predicate: &Iri) -> impl Iterator<Item = &'a Term> + 'a {
        self.triples_matching(Some(subject), Some(predicate), None)
            .into_iter()
            .map(|t| &t.object)
    }

    /// Subjects of `(?, predicate, object)` in canonical order.
    pub fn subjects<'a>(&'a self, predicate: &Iri, object: &Term) -> impl Iterator<Item = &'a Iri> + 'a {
        self.triples_matching(None, Some(predicate), Some(object))
            .into_iter()
            .map(|t| &t.subject)
    }

    pub fn outgoing(&self, subject: &Iri) -> impl Iterator<Item = &Triple> + '_ {
        self.by_subject.get(subject).into_iter().flatten()
    }

    pub fn incoming(&self, object: &Term) -> impl Iterator<Item = &Triple> + '_ {
        self.by_object.get(object).into_iter().flatten()
    }

    /// Whether the IRI appears as a subject or an object.
    pub fn has_node(&self, iri: &Iri) -> bool {
        self.by_subject.contains_key(iri) || self.by_object.contains_key(&Term::Iri(iri.clone()))
    }

    pub fn subjects_all(&self) -> impl Iterator<Item = &Iri> + '_ {
        self.by_subject.keys()
    }

    /// Finishes construction. The frozen graph is cheap to clone and may be
    /// shared across threads.
    pub fn freeze(self) -> FrozenGraph {
        FrozenGraph(Arc::new(self))
    }
}

fn remove_indexed<K: Ord>(index: &mut BTreeMap<K, BTreeSet<Triple>>, key: &K, triple: &Triple) {
    if let Some(set) = index.get_mut(key) {
        set.remove(triple);
        if set.is_empty() {
            index.remove(key);
        }
    }
}

impl Extend<Triple> for Graph {
    fn extend<I: IntoIterator<Item = Triple>>(&mut self, iter: I) {
        for t in iter {
            self.insert(t);
        }
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Self {
        let mut g = Graph::new();
        g.extend(iter);
        g
    }
}

/// Read-only shared handle to a finished graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrozenGraph(Arc<Graph>);

impl Deref for FrozenGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.0
    }
}
