use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::ResolveError;
use crate::graph::{Graph, Iri, Term};
use crate::model::{CatalogView, EntityKind, NomenInfo, NomenRelationType};

/// Which step of the fallback chain produced a label. The numbering is part
/// of the public API.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelRule {
    /// Own nomen in exactly the requested language.
    OwnExact,
    /// Own nomen sharing the requested primary language subtag; shorter tags win.
    OwnPrimarySubtag,
    /// Work only: title of a realizing expression in exactly the requested
    /// language, expressions taken in IRI order.
    ExpressionTitle,
    /// Own, then expression, nomen in exactly the default language.
    DefaultLanguage,
    /// Any reachable nomen; the smallest IRI wins.
    SmallestIri,
}

impl LabelRule {
    pub fn as_str(self) -> &'static str {
        match self {
            LabelRule::OwnExact => "1",
            LabelRule::OwnPrimarySubtag => "1b",
            LabelRule::ExpressionTitle => "2",
            LabelRule::DefaultLanguage => "3",
            LabelRule::SmallestIri => "4",
        }
    }
}

impl fmt::Display for LabelRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedLabel {
    pub label: String,
    /// Language tag of the chosen literal, as stored.
    pub lang: Option<String>,
    pub nomen: Iri,
    pub rule: LabelRule,
}

fn primary_subtag(tag: &str) -> &str {
    tag.split('-').next().unwrap_or(tag)
}

fn exact(nomen: &NomenInfo, wanted: &str) -> bool {
    nomen.string.lang().is_some_and(|l| l.eq_ignore_ascii_case(wanted))
}

fn same_primary(nomen: &NomenInfo, wanted: &str) -> bool {
    nomen
        .string
        .lang()
        .is_some_and(|l| primary_subtag(l).eq_ignore_ascii_case(primary_subtag(wanted)))
}

impl CatalogView<'_> {
    fn is_variant(&self, nomen: &Iri) -> bool {
        let pred = self.vocab().nomen_relation(&NomenRelationType::VariantForm);
        self.graph().subjects(&pred, &Term::Iri(nomen.clone())).next().is_some()
    }

    /// Best candidate: preferred forms before variant forms, then smallest IRI.
    fn pick<'n>(&self, candidates: impl Iterator<Item = &'n NomenInfo>) -> Option<&'n NomenInfo> {
        candidates.min_by(|a, b| {
            self.is_variant(&a.iri)
                .cmp(&self.is_variant(&b.iri))
                .then_with(|| a.iri.cmp(&b.iri))
        })
    }

    fn expression_titles(&self, work: &Iri) -> Vec<Vec<NomenInfo>> {
        self.expressions_of(work).iter().map(|e| self.nomens_of(e)).collect()
    }

    /// Picks a display label for `entity`.
    ///
    /// Fallback chain: 1 own nomen in `lang`; 1b own nomen with the same
    /// primary subtag as `lang`; 2 (works) expression title in `lang`;
    /// 3 own or expression nomen in `default_lang`; 4 smallest nomen IRI.
    pub fn resolve_label(
        &self,
        entity: &Iri,
        lang: Option<&str>,
        default_lang: Option<&str>,
    ) -> Result<ResolvedLabel, ResolveError> {
        let kind = self
            .kind_of(entity)
            .ok_or_else(|| ResolveError::UnknownEntity(entity.clone()))?;
        let own = self.nomens_of(entity);
        let expressions = if kind == EntityKind::Work {
            self.expression_titles(entity)
        } else {
            Vec::new()
        };

        let chosen = lang
            .and_then(|wanted| {
                self.pick(own.iter().filter(|n| exact(n, wanted)))
                    .map(|n| (n, LabelRule::OwnExact))
                    .or_else(|| {
                        let matching: Vec<&NomenInfo> = own.iter().filter(|n| same_primary(n, wanted)).collect();
                        let shortest = matching.iter().filter_map(|n| n.string.lang()).map(str::len).min()?;
                        self.pick(
                            matching
                                .into_iter()
                                .filter(|n| n.string.lang().map(str::len) == Some(shortest)),
                        )
                        .map(|n| (n, LabelRule::OwnPrimarySubtag))
                    })
                    .or_else(|| {
                        expressions
                            .iter()
                            .find_map(|titles| self.pick(titles.iter().filter(|n| exact(n, wanted))))
                            .map(|n| (n, LabelRule::ExpressionTitle))
                    })
            })
            .or_else(|| {
                let wanted = default_lang?;
                self.pick(own.iter().filter(|n| exact(n, wanted)))
                    .or_else(|| {
                        expressions
                            .iter()
                            .find_map(|titles| self.pick(titles.iter().filter(|n| exact(n, wanted))))
                    })
                    .map(|n| (n, LabelRule::DefaultLanguage))
            })
            .or_else(|| {
                own.iter()
                    .chain(expressions.iter().flatten())
                    .min_by(|a, b| a.iri.cmp(&b.iri))
                    .map(|n| (n, LabelRule::SmallestIri))
            });

        let (nomen, rule) = chosen.ok_or_else(|| ResolveError::NoLabel(entity.clone()))?;
        Ok(ResolvedLabel {
            label: nomen.string.lexical().to_string(),
            lang: nomen.string.lang().map(ToString::to_string),
            nomen: nomen.iri.clone(),
            rule,
        })
    }
}

pub fn resolve_label(
    graph: &Graph,
    entity: &Iri,
    lang: Option<&str>,
    default_lang: Option<&str>,
) -> Result<ResolvedLabel, ResolveError> {
    CatalogView::new(graph).resolve_label(entity, lang, default_lang)
}
