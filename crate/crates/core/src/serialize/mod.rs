//! Canonical N-Triples and Turtle.
//!
//! N-Triples output is one triple per line in canonical order (subject,
//! predicate, object; IRIs before literals; literals by lexical form then
//! language tag) and is byte-identical for equal triple sets. Turtle output
//! groups the same order by subject.

mod ntriples;
mod turtle;

pub use ntriples::{export_ntriples, import_ntriples, ImportError};
pub use turtle::{export_turtle, export_turtle_with, DEFAULT_PREFIXES};

use alloc::string::String;
use core::fmt::Write;

use crate::graph::{Literal, Term};

/// Literal body escaping shared by both formats.
pub(crate) fn write_literal(out: &mut String, lit: &Literal) {
    out.push('"');
    for c in lit.lexical().chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            '\u{8}' => out.push_str("\\b"),
            '\u{c}' => out.push_str("\\f"),
            c if c <= '\u{1f}' || c == '\u{7f}' => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    if let Some(tag) = lit.lang_key() {
        // tags compare case-insensitively, so print one spelling
        out.push('@');
        out.push_str(&tag);
    }
}

pub(crate) fn write_term(out: &mut String, term: &Term) {
    match term {
        Term::Iri(iri) => {
            out.push('<');
            out.push_str(iri.as_str());
            out.push('>');
        }
        Term::Literal(lit) => write_literal(out, lit),
    }
}
