//! JSON bodies shared by the HTTP service and the CLI.

use std::collections::BTreeSet;

use nomen_core::graph::{Graph, Iri, Term, Triple};
use nomen_core::model::{CatalogView, Violation, VOCAB_NS};
use nomen_core::resolve::{Hit, RecordView, ResolveError, SearchMode};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum TermJson {
    Iri {
        value: String,
    },
    Literal {
        value: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        lang: Option<String>,
    },
}

impl From<&Term> for TermJson {
    fn from(t: &Term) -> Self {
        match t {
            Term::Iri(i) => TermJson::Iri { value: i.to_string() },
            Term::Literal(l) => TermJson::Literal {
                value: l.lexical().to_string(),
                lang: l.lang_key(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeJson {
    pub subject: String,
    pub predicate: String,
    /// Predicate with the vocabulary namespace stripped.
    pub relation: String,
    pub object: TermJson,
}

fn relation_name(predicate: &Iri) -> String {
    let s = predicate.as_str();
    s.strip_prefix(VOCAB_NS).unwrap_or(s).to_string()
}

impl From<&Triple> for EdgeJson {
    fn from(t: &Triple) -> Self {
        EdgeJson {
            subject: t.subject.to_string(),
            predicate: t.predicate.to_string(),
            relation: relation_name(&t.predicate),
            object: (&t.object).into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NomenRelationJson {
    pub relation: String,
    pub target: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct NomenJson {
    pub iri: String,
    pub string: String,
    pub lang: Option<String>,
    pub nomen_type: Option<&'static str>,
    pub relations: Vec<NomenRelationJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeJson {
    pub iri: String,
    pub kind: Option<&'static str>,
    pub nomen: bool,
    /// Resolved label for entities, the string for nomens.
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgraphJson {
    pub root: String,
    pub depth: usize,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntityJson {
    pub iri: String,
    pub kind: &'static str,
    pub label: Option<String>,
    pub label_lang: Option<String>,
    pub rule_fired: Option<&'static str>,
    pub nomens: Vec<NomenJson>,
    /// Statements linking this entity or its nomens to anything else.
    pub relations: Vec<EdgeJson>,
    pub subgraph: SubgraphJson,
}

/// Entity page: label, nomens, incident relations and the neighborhood.
pub fn entity_json(
    graph: &Graph,
    iri: &Iri,
    lang: Option<&str>,
    default_lang: Option<&str>,
    depth: usize,
) -> Result<EntityJson, ResolveError> {
    let view = CatalogView::new(graph);
    let v = view.vocab();
    let kind = view
        .kind_of(iri)
        .ok_or_else(|| ResolveError::UnknownEntity(iri.clone()))?;
    let label = match view.resolve_label(iri, lang, default_lang) {
        Ok(l) => Some(l),
        Err(ResolveError::NoLabel(_)) => None,
        Err(e) => return Err(e),
    };
    let own = view.nomens_of(iri);
    let own_iris: BTreeSet<&Iri> = own.iter().map(|n| &n.iri).collect();

    let nomens = own
        .iter()
        .map(|n| NomenJson {
            iri: n.iri.to_string(),
            string: n.string.lexical().to_string(),
            lang: n.string.lang_key(),
            nomen_type: n.nomen_type.map(|t| t.label()),
            relations: graph
                .outgoing(&n.iri)
                .filter(|t| {
                    t.predicate.as_str().starts_with(VOCAB_NS) && t.predicate.as_str().contains("nomenRelation/")
                })
                .filter_map(|t| {
                    Some(NomenRelationJson {
                        relation: relation_name(&t.predicate),
                        target: t.object.as_iri()?.to_string(),
                    })
                })
                .collect(),
        })
        .collect();

    let structural = |t: &Triple| {
        t.predicate == v.rdf_type
            || t.predicate == v.nomen_type
            || t.predicate == v.has_string
            || (&t.subject == iri && t.predicate == v.has_appellation)
    };
    let mut relations: BTreeSet<&Triple> = BTreeSet::new();
    for node in std::iter::once(iri).chain(own_iris.iter().copied()) {
        let term = Term::Iri(node.clone());
        relations.extend(
            graph
                .outgoing(node)
                .chain(graph.incoming(&term))
                .filter(|t| !structural(t)),
        );
    }

    let sub = graph.neighborhood(iri, depth);
    let nodes = sub
        .nodes()
        .into_iter()
        .map(|n| {
            let nomen = view.nomen(&n);
            let kind = view.kind_of(&n);
            NodeJson {
                label: match &nomen {
                    Some(info) => Some(info.string.lexical().to_string()),
                    None => view.resolve_label(&n, lang, default_lang).ok().map(|l| l.label),
                },
                kind: kind.map(|k| k.label()),
                nomen: nomen.is_some(),
                iri: n.to_string(),
            }
        })
        .collect();

    Ok(EntityJson {
        iri: iri.to_string(),
        kind: kind.label(),
        label_lang: label.as_ref().and_then(|l| l.lang.clone()),
        rule_fired: label.as_ref().map(|l| l.rule.as_str()),
        label: label.map(|l| l.label),
        nomens,
        relations: relations.into_iter().map(EdgeJson::from).collect(),
        subgraph: SubgraphJson {
            root: iri.to_string(),
            depth,
            nodes,
            edges: sub.triples.iter().map(EdgeJson::from).collect(),
        },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LabelJson {
    pub entity: String,
    pub label: String,
    pub lang: Option<String>,
    pub nomen: String,
    pub rule_fired: &'static str,
}

pub fn label_json(
    graph: &Graph,
    iri: &Iri,
    lang: Option<&str>,
    default_lang: Option<&str>,
) -> Result<LabelJson, ResolveError> {
    let l = CatalogView::new(graph).resolve_label(iri, lang, default_lang)?;
    Ok(LabelJson {
        entity: iri.to_string(),
        label: l.label,
        lang: l.lang,
        nomen: l.nomen.to_string(),
        rule_fired: l.rule.as_str(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OwnerJson {
    pub iri: String,
    pub kind: Option<&'static str>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HitJson {
    pub nomen: String,
    pub string: String,
    pub lang: Option<String>,
    pub exact: bool,
    pub owners: Vec<OwnerJson>,
}

impl From<Hit> for HitJson {
    fn from(h: Hit) -> Self {
        HitJson {
            nomen: h.nomen.to_string(),
            string: h.string.lexical().to_string(),
            lang: h.string.lang_key(),
            exact: h.exact,
            owners: h
                .owners
                .into_iter()
                .map(|o| OwnerJson {
                    iri: o.iri.to_string(),
                    kind: o.kind.map(|k| k.label()),
                    label: o.label,
                })
                .collect(),
        }
    }
}

pub fn search_json(
    graph: &Graph,
    query: &str,
    mode: SearchMode,
    lang: Option<&str>,
    default_lang: Option<&str>,
) -> Result<Vec<HitJson>, ResolveError> {
    Ok(CatalogView::new(graph)
        .search_nomens(query, mode, lang, default_lang)?
        .into_iter()
        .map(HitJson::from)
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordEntryJson {
    pub key: String,
    pub value: String,
    pub lang: Option<String>,
    pub source: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordJson {
    pub manifestation: String,
    pub entries: Vec<RecordEntryJson>,
}

impl From<RecordView> for RecordJson {
    fn from(r: RecordView) -> Self {
        RecordJson {
            manifestation: r.manifestation.to_string(),
            entries: r
                .entries
                .into_iter()
                .map(|e| RecordEntryJson {
                    key: e.key,
                    value: e.value,
                    lang: e.lang,
                    source: e.source.to_string(),
                })
                .collect(),
        }
    }
}

pub fn record_json(
    graph: &Graph,
    iri: &Iri,
    lang: Option<&str>,
    default_lang: Option<&str>,
) -> Result<RecordJson, ResolveError> {
    Ok(CatalogView::new(graph)
        .render_record_view(iri, lang, default_lang)?
        .into())
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationJson {
    pub code: &'static str,
    pub node: String,
    pub message: String,
}

impl From<&Violation> for ViolationJson {
    fn from(v: &Violation) -> Self {
        ViolationJson {
            code: v.code.as_str(),
            node: v.node.to_string(),
            message: v.message.clone(),
        }
    }
}

pub fn violations_json(violations: &[Violation]) -> Vec<ViolationJson> {
    violations.iter().map(ViolationJson::from).collect()
}
