//! Bibliographic graph engine built on the entity → nomen → literal pattern.
//!
//! Every name-bearing entity (work, expression, manifestation, item, person,
//! family, corporate body, place) is an IRI node. Each lexical form under
//! which the entity is known becomes a *nomen* node carrying exactly one
//! literal, so resources can point at the specific appellation they use
//! while works and agents relate to each other at the entity level.
//!
//! The crate is `no_std` (with `alloc`). File, network and CLI concerns live
//! in the `nomen-catalog` companion crate.

#![no_std]

extern crate alloc;

pub mod graph;
pub mod ingest;
pub mod model;
pub mod resolve;
pub mod serialize;

pub use graph::{FrozenGraph, Graph, GraphError, Iri, Literal, Subgraph, Term, Triple};
