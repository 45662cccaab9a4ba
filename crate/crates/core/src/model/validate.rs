use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::vocab::{NOMEN_RELATION_PREFIX, ROLE_NOMEN_PREFIX, ROLE_PREFIX};
use super::{CatalogView, EntityKind, NomenRelationType, NomenType, VOCAB_NS};
use crate::graph::{Graph, Iri, Term};

/// Structural rule broken by a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationCode {
    /// `hasString` pointing at an IRI instead of a literal.
    V1,
    /// Nomen without `hasString`.
    V2,
    /// Nomen with more than one `hasString`.
    V3,
    /// `hasAppellation` target that is not a typed nomen.
    V4,
    /// Transcribed-field predicate pointing at a non-nomen, or an
    /// entity-level relation touching a nomen.
    V5,
    /// Nomen that no entity names through `hasAppellation`.
    V6,
    /// Expression with two preferred titles in one language.
    V7,
    /// Predicate or class in the model namespace that the model does not define.
    V8,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::V1 => "V1",
            ViolationCode::V2 => "V2",
            ViolationCode::V3 => "V3",
            ViolationCode::V4 => "V4",
            ViolationCode::V5 => "V5",
            ViolationCode::V6 => "V6",
            ViolationCode::V7 => "V7",
            ViolationCode::V8 => "V8",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub code: ViolationCode,
    pub node: Iri,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationConfig {
    /// Nomen relation labels accepted in addition to the built-in set.
    pub extra_nomen_relations: BTreeSet<String>,
}

pub fn validate(graph: &Graph) -> Vec<Violation> {
    validate_with(graph, &ValidationConfig::default())
}

/// Every structural violation in `graph`, sorted by code then node.
/// Empty iff the graph is well-formed.
pub fn validate_with(graph: &Graph, config: &ValidationConfig) -> Vec<Violation> {
    let view = CatalogView::new(graph);
    let v = view.vocab();
    let mut out = Vec::new();
    let mut push = |code, node: &Iri, message: String| {
        out.push(Violation {
            code,
            node: node.clone(),
            message,
        })
    };

    let nomens: BTreeSet<Iri> = view.nomen_iris().into_iter().collect();

    for t in graph.triples_matching(None, Some(&v.has_string), None) {
        if t.object.as_iri().is_some() {
            push(
                ViolationCode::V1,
                &t.subject,
                "hasString object is not a literal".to_string(),
            );
        }
    }

    for nomen in &nomens {
        let strings = graph.objects(nomen, &v.has_string).count();
        if strings == 0 {
            push(ViolationCode::V2, nomen, "nomen has no hasString".to_string());
        } else if strings > 1 {
            push(
                ViolationCode::V3,
                nomen,
                format!("nomen has {strings} hasString values"),
            );
        }
        if graph
            .subjects(&v.has_appellation, &Term::Iri(nomen.clone()))
            .next()
            .is_none()
        {
            push(
                ViolationCode::V6,
                nomen,
                "nomen is not the appellation of any entity".to_string(),
            );
        }
    }

    let has_nomen_type = |n: &Iri| {
        graph
            .objects(n, &v.nomen_type)
            .filter_map(Term::as_iri)
            .filter_map(|t| t.as_str().strip_prefix(VOCAB_NS))
            .any(|name| NomenType::from_class_name(name).is_some())
    };
    for t in graph.triples_matching(None, Some(&v.has_appellation), None) {
        match t.object.as_iri() {
            Some(target) if nomens.contains(target) && has_nomen_type(target) => {}
            Some(target) => push(
                ViolationCode::V4,
                target,
                format!("appellation of {} lacks a nomen type", t.subject),
            ),
            None => push(
                ViolationCode::V4,
                &t.subject,
                "hasAppellation points at a literal".to_string(),
            ),
        }
    }

    let entity_relations: BTreeSet<&Iri> = [
        &v.creator,
        &v.publisher,
        &v.realizes,
        &v.embodies,
        &v.exemplifies,
        &v.born_in,
        &v.located_in,
        &v.subject,
    ]
    .into_iter()
    .collect();
    let transcribed: BTreeSet<&Iri> = [
        &v.title_nomen,
        &v.place_of_publication_nomen,
        &v.statement_of_responsibility_nomen,
    ]
    .into_iter()
    .collect();
    let fixed: BTreeSet<Iri> = [
        &v.has_appellation,
        &v.has_string,
        &v.nomen_type,
        &v.scheme,
        &v.note,
        &v.note_type,
    ]
    .into_iter()
    .chain(entity_relations.iter().copied())
    .chain(transcribed.iter().copied())
    .cloned()
    .collect();
    let mut classes: BTreeSet<Iri> = EntityKind::ALL.iter().map(|k| v.class(*k)).collect();
    classes.extend(NomenType::ALL.iter().map(|t| v.nomen_type_value(*t)));
    classes.insert(v.nomen_class.clone());
    classes.insert(v.note_class.clone());

    for t in graph.iter() {
        let p = &t.predicate;
        let local = p.as_str().strip_prefix(VOCAB_NS);
        let is_role = local.is_some_and(|l| l.len() > ROLE_PREFIX.len() && l.starts_with(ROLE_PREFIX));
        let is_role_nomen =
            local.is_some_and(|l| l.len() > ROLE_NOMEN_PREFIX.len() && l.starts_with(ROLE_NOMEN_PREFIX));

        if (transcribed.contains(p) || is_role_nomen) && !t.object.as_iri().is_some_and(|o| nomens.contains(o)) {
            push(ViolationCode::V5, &t.subject, format!("{p} must point at a nomen"));
        }
        if entity_relations.contains(p) || is_role {
            let touches_nomen = nomens.contains(&t.subject) || t.object.as_iri().is_some_and(|o| nomens.contains(o));
            if touches_nomen {
                push(
                    ViolationCode::V5,
                    &t.subject,
                    format!("entity relation {p} must not connect a nomen"),
                );
            }
        }

        if let Some(local) = local {
            let known = fixed.contains(p)
                || is_role
                || is_role_nomen
                || local.strip_prefix(NOMEN_RELATION_PREFIX).is_some_and(|rel| {
                    let rel = percent_encoding::percent_decode_str(rel).decode_utf8_lossy();
                    NomenRelationType::built_in(&rel).is_some() || config.extra_nomen_relations.contains(&*rel)
                });
            if !known {
                push(ViolationCode::V8, &t.subject, format!("unknown relation type {p}"));
            }
        }
        if p == &v.rdf_type || p == &v.nomen_type {
            if let Some(o) = t.object.as_iri() {
                if o.as_str().starts_with(VOCAB_NS) && !classes.contains(o) {
                    push(ViolationCode::V8, &t.subject, format!("unknown class {o}"));
                }
            }
        }
    }

    // Preferred expression titles: at most one per language.
    for (expr, kind) in view.entities() {
        if kind != EntityKind::Expression {
            continue;
        }
        let mut per_lang: BTreeMap<Option<String>, usize> = BTreeMap::new();
        for title in view.iri_objects(&expr, &v.title_nomen) {
            let lang = graph
                .objects(&title, &v.has_string)
                .find_map(Term::as_literal)
                .and_then(|l| l.lang_key());
            *per_lang.entry(lang).or_default() += 1;
        }
        for (lang, n) in per_lang {
            if n > 1 {
                push(
                    ViolationCode::V7,
                    &expr,
                    format!(
                        "{n} preferred titles in language {}",
                        lang.as_deref().unwrap_or("(none)")
                    ),
                );
            }
        }
    }

    out.sort();
    out.dedup();
    out
}
