use alloc::vec::Vec;

use super::{EntityKind, NomenType, Vocab, VOCAB_NS};
use crate::graph::{Graph, Iri, Literal, Term};

/// A nomen as read back from a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NomenInfo {
    pub iri: Iri,
    pub string: Literal,
    pub nomen_type: Option<NomenType>,
    /// Entities naming this nomen through `hasAppellation`, in IRI order.
    pub owners: Vec<Iri>,
}

/// Typed read access over any graph, including imported ones.
#[derive(Debug, Clone)]
pub struct CatalogView<'g> {
    graph: &'g Graph,
    vocab: Vocab,
}

impl<'g> CatalogView<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        CatalogView {
            graph,
            vocab: Vocab::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    /// Entity kind from the `rdf:type` triple, if the node is an entity.
    pub fn kind_of(&self, iri: &Iri) -> Option<EntityKind> {
        self.graph
            .objects(iri, &self.vocab.rdf_type)
            .filter_map(Term::as_iri)
            .filter_map(|class| class.as_str().strip_prefix(VOCAB_NS))
            .find_map(EntityKind::from_class_name)
    }

    pub fn is_nomen(&self, iri: &Iri) -> bool {
        let class = Term::Iri(self.vocab.nomen_class.clone());
        !self
            .graph
            .triples_matching(Some(iri), Some(&self.vocab.rdf_type), Some(&class))
            .is_empty()
    }

    /// All entity nodes in IRI order.
    pub fn entities(&self) -> Vec<(Iri, EntityKind)> {
        self.graph
            .triples_matching(None, Some(&self.vocab.rdf_type), None)
            .into_iter()
            .filter_map(|t| {
                let class = t.object.as_iri()?.as_str().strip_prefix(VOCAB_NS)?;
                Some((t.subject.clone(), EntityKind::from_class_name(class)?))
            })
            .collect()
    }

    /// All nomen nodes in IRI order.
    pub fn nomen_iris(&self) -> Vec<Iri> {
        let class = Term::Iri(self.vocab.nomen_class.clone());
        self.graph.subjects(&self.vocab.rdf_type, &class).cloned().collect()
    }

    pub fn nomen(&self, iri: &Iri) -> Option<NomenInfo> {
        if !self.is_nomen(iri) {
            return None;
        }
        let string = self
            .graph
            .objects(iri, &self.vocab.has_string)
            .find_map(Term::as_literal)?
            .clone();
        let nomen_type = self
            .graph
            .objects(iri, &self.vocab.nomen_type)
            .filter_map(Term::as_iri)
            .filter_map(|t| t.as_str().strip_prefix(VOCAB_NS))
            .find_map(NomenType::from_class_name);
        let owners = self
            .graph
            .subjects(&self.vocab.has_appellation, &Term::Iri(iri.clone()))
            .cloned()
            .collect();
        Some(NomenInfo {
            iri: iri.clone(),
            string,
            nomen_type,
            owners,
        })
    }

    /// Nomens reached from `entity` through `hasAppellation`, in IRI order.
    pub fn nomens_of(&self, entity: &Iri) -> Vec<NomenInfo> {
        self.graph
            .objects(entity, &self.vocab.has_appellation)
            .filter_map(Term::as_iri)
            .filter_map(|n| self.nomen(n))
            .collect()
    }

    /// Expressions realizing `work`, in IRI order.
    pub fn expressions_of(&self, work: &Iri) -> Vec<Iri> {
        self.graph
            .subjects(&self.vocab.realizes, &Term::Iri(work.clone()))
            .filter(|e| self.kind_of(e) == Some(EntityKind::Expression))
            .cloned()
            .collect()
    }

    /// IRI objects of `(subject, predicate, ?)`.
    pub fn iri_objects(&self, subject: &Iri, predicate: &Iri) -> Vec<Iri> {
        self.graph
            .objects(subject, predicate)
            .filter_map(Term::as_iri)
            .cloned()
            .collect()
    }
}
