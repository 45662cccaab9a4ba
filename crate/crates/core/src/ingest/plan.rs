use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{PLACE_TAGS, RELIGIOUS_NAME_TAG};
use crate::model::EntityKind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanError {
    #[error("malformed provisional key {key:?}: {reason}")]
    BadKey { key: String, reason: String },
    #[error("merge set mixes kinds: {first:?} is {first_kind}, {second:?} is {second_kind}")]
    MixedKinds {
        first: String,
        first_kind: EntityKind,
        second: String,
        second_kind: EntityKind,
    },
}

/// Name of a not-yet-reconciled entity.
///
/// Rendered as `kind:record_id` for the entity a record describes, or
/// `kind:record_id|tag|occurrence` for an entity implied by a field value
/// (the place behind a `place_of_birth`, say). The occurrence index counts
/// earlier fields with the same tag in the same record. The field value is
/// carried for display but is not part of the rendering: within a batch it
/// is determined by the other components.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProvisionalKey {
    pub kind: EntityKind,
    pub record_id: String,
    pub field: Option<(String, usize)>,
    pub value: Option<String>,
}

impl ProvisionalKey {
    pub fn record(kind: EntityKind, record_id: &str) -> Self {
        ProvisionalKey {
            kind,
            record_id: record_id.to_string(),
            field: None,
            value: None,
        }
    }

    pub fn field(kind: EntityKind, record_id: &str, tag: &str, occurrence: usize, value: &str) -> Self {
        ProvisionalKey {
            kind,
            record_id: record_id.to_string(),
            field: Some((tag.to_string(), occurrence)),
            value: Some(value.to_string()),
        }
    }

    /// The part after `kind:`; used as the local key when minting IRIs.
    pub fn local(&self) -> String {
        match &self.field {
            None => self.record_id.clone(),
            Some((tag, occ)) => format!("{}|{tag}|{occ}", self.record_id),
        }
    }

    pub fn parse(raw: &str) -> Result<Self, PlanError> {
        let bad = |reason: &str| PlanError::BadKey {
            key: raw.to_string(),
            reason: reason.to_string(),
        };
        let (kind, local) = raw.split_once(':').ok_or_else(|| bad("expected kind:local"))?;
        let kind: EntityKind = kind.parse().map_err(|_| bad("unknown entity kind"))?;
        if local.is_empty() {
            return Err(bad("empty record id"));
        }
        let mut parts = local.rsplitn(3, '|');
        let (last, mid, rest) = (parts.next(), parts.next(), parts.next());
        if let (Some(occ), Some(tag), Some(record_id)) = (last, mid, rest) {
            if let Ok(occurrence) = occ.parse::<usize>() {
                let implied = if PLACE_TAGS.contains(&tag) {
                    Some(EntityKind::Place)
                } else if tag == RELIGIOUS_NAME_TAG {
                    Some(kind)
                } else {
                    None
                };
                if let Some(implied) = implied {
                    if implied != kind {
                        return Err(bad("field tag implies a different entity kind"));
                    }
                    if record_id.is_empty() {
                        return Err(bad("empty record id"));
                    }
                    return Ok(ProvisionalKey {
                        kind,
                        record_id: record_id.to_string(),
                        field: Some((tag.to_string(), occurrence)),
                        value: None,
                    });
                }
            }
        }
        Ok(ProvisionalKey::record(kind, local))
    }
}

impl fmt::Display for ProvisionalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.local())
    }
}

/// How a name in religion is modeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReligiousNamePolicy {
    /// One entity carrying both names, related by `name_in_religion`.
    #[default]
    OneEntity,
    /// A second person entity for the religious identity.
    TwoEntities,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PlanOptions {
    pub religious_names: Option<ReligiousNamePolicy>,
}

/// Cataloger-supplied merge directives, normalized to disjoint sets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReconciliationPlan {
    sets: Vec<BTreeSet<String>>,
    index: BTreeMap<String, usize>,
    pub options: PlanOptions,
}

impl ReconciliationPlan {
    pub fn new() -> Self {
        Self::default()
    }

    /// Validates every key and computes the transitive closure of the sets.
    pub fn from_sets<I, S, K>(sets: I, options: PlanOptions) -> Result<Self, PlanError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = K>,
        K: AsRef<str>,
    {
        let mut parsed: Vec<Vec<ProvisionalKey>> = Vec::new();
        for set in sets {
            let keys = set
                .into_iter()
                .map(|k| ProvisionalKey::parse(k.as_ref()))
                .collect::<Result<Vec<_>, _>>()?;
            parsed.push(keys);
        }
        let mut plan = ReconciliationPlan {
            options,
            ..Default::default()
        };
        plan.absorb(parsed)?;
        Ok(plan)
    }

    /// Unions another plan into this one; its options take precedence.
    pub fn merge(&mut self, other: &ReconciliationPlan) -> Result<(), PlanError> {
        let parsed = other
            .sets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|k| ProvisionalKey::parse(k))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.absorb(parsed)?;
        if other.options.religious_names.is_some() {
            self.options.religious_names = other.options.religious_names;
        }
        Ok(())
    }

    fn absorb(&mut self, incoming: Vec<Vec<ProvisionalKey>>) -> Result<(), PlanError> {
        let mut uf = UnionFind::default();
        let mut kinds: BTreeMap<String, EntityKind> = BTreeMap::new();
        let mut ids: BTreeMap<String, usize> = BTreeMap::new();
        let mut id_of =
            |key: &str, uf: &mut UnionFind| -> usize { *ids.entry(key.to_string()).or_insert_with(|| uf.push()) };

        for set in &self.sets {
            let mut keys = set.iter();
            if let Some(first) = keys.next() {
                let a = id_of(first, &mut uf);
                for k in keys {
                    let b = id_of(k, &mut uf);
                    uf.union(a, b);
                }
            }
            for k in set {
                kinds.insert(k.clone(), ProvisionalKey::parse(k)?.kind);
            }
        }
        for set in &incoming {
            let rendered: Vec<String> = set.iter().map(ToString::to_string).collect();
            for (key, raw) in set.iter().zip(&rendered) {
                kinds.insert(raw.clone(), key.kind);
            }
            if let Some((first, rest)) = rendered.split_first() {
                let a = id_of(first, &mut uf);
                for k in rest {
                    let b = id_of(k, &mut uf);
                    uf.union(a, b);
                }
            }
        }

        let mut groups: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
        for (key, id) in &ids {
            groups.entry(uf.find(*id)).or_default().insert(key.clone());
        }
        let mut sets: Vec<BTreeSet<String>> = groups.into_values().filter(|s| s.len() > 1).collect();
        for set in &sets {
            let mut it = set.iter();
            let first = it.next().expect("non-empty");
            for other in it {
                if kinds[first] != kinds[other] {
                    return Err(PlanError::MixedKinds {
                        first: first.clone(),
                        first_kind: kinds[first],
                        second: other.clone(),
                        second_kind: kinds[other],
                    });
                }
            }
        }
        sets.sort();
        self.index = sets
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |k| (k.clone(), i)))
            .collect();
        self.sets = sets;
        Ok(())
    }

    /// Disjoint merge sets, each with at least two keys, in sorted order.
    pub fn merge_sets(&self) -> &[BTreeSet<String>] {
        &self.sets
    }

    /// Keys merged with `key`, itself included; `None` if `key` is unmerged.
    pub fn set_of(&self, key: &str) -> Option<&BTreeSet<String>> {
        self.index.get(key).map(|&i| &self.sets[i])
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn religious_names(&self) -> ReligiousNamePolicy {
        self.options.religious_names.unwrap_or_default()
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Default)]
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn push(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.size.push(1);
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}
