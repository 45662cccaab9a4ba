//! Retained source records plus accumulated directives, and the snapshot
//! they promote to.

use std::sync::Arc;

use nomen_core::graph::{FrozenGraph, Graph};
use nomen_core::ingest::{promote, FlatRecord, PlanError, PromoteError, ReconciliationPlan};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Promote(#[from] PromoteError),
    #[error(transparent)]
    Plan(#[from] PlanError),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub entities: usize,
    pub nomens: usize,
    pub triples: usize,
}

/// One immutable published state of the catalog.
#[derive(Debug)]
pub struct Snapshot {
    pub version: u64,
    pub graph: FrozenGraph,
    pub counts: Counts,
    pub merged_entities: usize,
    pub warnings: Vec<String>,
}

/// The graph is always `promote(records, plan)`: mutations replay the whole
/// promotion and either publish a new snapshot or leave everything as it was.
#[derive(Debug)]
pub struct Catalog {
    namespace: String,
    records: Vec<FlatRecord>,
    plan: ReconciliationPlan,
    current: Arc<Snapshot>,
}

impl Catalog {
    pub fn new(namespace: impl Into<String>) -> Self {
        Catalog {
            namespace: namespace.into(),
            records: Vec::new(),
            plan: ReconciliationPlan::new(),
            current: Arc::new(Snapshot {
                version: 0,
                graph: Graph::new().freeze(),
                counts: Counts::default(),
                merged_entities: 0,
                warnings: Vec::new(),
            }),
        }
    }

    pub fn namespace(&self) -> &str {
        &self.namespace
    }

    pub fn snapshot(&self) -> Arc<Snapshot> {
        self.current.clone()
    }

    pub fn records(&self) -> &[FlatRecord] {
        &self.records
    }

    pub fn plan(&self) -> &ReconciliationPlan {
        &self.plan
    }

    /// Adds records (and optionally directives) to the retained set.
    pub fn ingest(
        &mut self,
        records: Vec<FlatRecord>,
        directives: Option<&ReconciliationPlan>,
    ) -> Result<Arc<Snapshot>, CatalogError> {
        let mut all = self.records.clone();
        all.extend(records);
        let mut plan = self.plan.clone();
        if let Some(d) = directives {
            plan.merge(d)?;
        }
        self.publish(all, plan)
    }

    /// Re-runs promotion over the retained records with `directives` added.
    pub fn reconcile(&mut self, directives: &ReconciliationPlan) -> Result<Arc<Snapshot>, CatalogError> {
        let mut plan = self.plan.clone();
        plan.merge(directives)?;
        self.publish(self.records.clone(), plan)
    }

    fn publish(&mut self, records: Vec<FlatRecord>, plan: ReconciliationPlan) -> Result<Arc<Snapshot>, CatalogError> {
        let p = promote(&records, &plan, &self.namespace)?;
        let snapshot = Arc::new(Snapshot {
            version: self.current.version + 1,
            counts: Counts {
                entities: p.entities.len(),
                nomens: p.nomen_count,
                triples: p.graph.len(),
            },
            merged_entities: p.merged_entities(),
            warnings: p.warnings.iter().map(ToString::to_string).collect(),
            graph: p.graph.freeze(),
        });
        self.records = records;
        self.plan = plan;
        self.current = snapshot.clone();
        Ok(snapshot)
    }
}
