use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{Graph, Iri, Term, Triple};

/// Triples within `depth` edges of `root`, edges followed in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub root: Iri,
    pub depth: usize,
    /// `false` when the root does not occur anywhere in the source graph.
    pub root_present: bool,
    pub triples: BTreeSet<Triple>,
}

impl Subgraph {
    /// IRI nodes touched by the subgraph, root included.
    pub fn nodes(&self) -> BTreeSet<Iri> {
        let mut nodes = BTreeSet::new();
        if self.root_present {
            nodes.insert(self.root.clone());
        }
        for t in &self.triples {
            nodes.insert(t.subject.clone());
            if let Term::Iri(o) = &t.object {
                nodes.insert(o.clone());
            }
        }
        nodes
    }
}

impl Graph {
    /// Breadth-first closure around `root`, truncated at `depth` edges.
    /// Literals are leaves and are never expanded.
    pub fn neighborhood(&self, root: &Iri, depth: usize) -> Subgraph {
        let mut sub = Subgraph {
            root: root.clone(),
            depth,
            root_present: self.has_node(root),
            triples: BTreeSet::new(),
        };
        if !sub.root_present {
            return sub;
        }
        let mut seen: BTreeSet<Iri> = BTreeSet::new();
        seen.insert(root.clone());
        let mut frontier: Vec<Iri> = alloc::vec![root.clone()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for node in &frontier {
                let node_term = Term::Iri(node.clone());
                for t in self.outgoing(node).chain(self.incoming(&node_term)) {
                    sub.triples.insert(t.clone());
                    for reached in [Some(&t.subject), t.object.as_iri()].into_iter().flatten() {
                        if seen.insert(reached.clone()) {
                            next.push(reached.clone());
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        sub
    }
}
