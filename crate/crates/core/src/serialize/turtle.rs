use alloc::string::String;

use super::write_term;
use crate::graph::{Graph, Iri, Term};
use crate::model::{RDF_NS, RDF_TYPE, VOCAB_NS};

pub const DEFAULT_PREFIXES: [(&str, &str); 2] = [("rdf", RDF_NS), ("vocab", VOCAB_NS)];

pub fn export_turtle(graph: &Graph) -> String {
    export_turtle_with(graph, &DEFAULT_PREFIXES)
}

/// Subject-grouped Turtle. IRIs are compacted against `prefixes` when the
/// remainder is a plain local name; everything else is written in full.
pub fn export_turtle_with(graph: &Graph, prefixes: &[(&str, &str)]) -> String {
    let mut out = String::new();
    for (prefix, ns) in prefixes {
        out.push_str("@prefix ");
        out.push_str(prefix);
        out.push_str(": <");
        out.push_str(ns);
        out.push_str("> .\n");
    }

    let mut subject: Option<&Iri> = None;
    let mut predicate: Option<&Iri> = None;
    for t in graph.iter() {
        if subject != Some(&t.subject) {
            if subject.is_some() {
                out.push_str(" .\n");
            }
            out.push('\n');
            write_iri(&mut out, &t.subject, prefixes);
            out.push(' ');
            subject = Some(&t.subject);
        } else if predicate == Some(&t.predicate) {
            out.push_str(", ");
            write_object(&mut out, &t.object, prefixes);
            continue;
        } else {
            out.push_str(" ;\n    ");
        }
        if t.predicate.as_str() == RDF_TYPE {
            out.push('a');
        } else {
            write_iri(&mut out, &t.predicate, prefixes);
        }
        out.push(' ');
        write_object(&mut out, &t.object, prefixes);
        predicate = Some(&t.predicate);
    }
    if subject.is_some() {
        out.push_str(" .\n");
    }
    out
}

fn is_simple_local(local: &str) -> bool {
    let bytes = local.as_bytes();
    if !bytes.first().is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_') {
        return false;
    }
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'%' => {
                let escape_ok = bytes.get(i + 1).is_some_and(u8::is_ascii_hexdigit)
                    && bytes.get(i + 2).is_some_and(u8::is_ascii_hexdigit);
                if !escape_ok {
                    return false;
                }
                i += 3;
            }
            b if b.is_ascii_alphanumeric() || b == b'_' || b == b'-' => i += 1,
            _ => return false,
        }
    }
    true
}

fn write_iri(out: &mut String, iri: &Iri, prefixes: &[(&str, &str)]) {
    for (prefix, ns) in prefixes {
        if let Some(local) = iri.as_str().strip_prefix(ns) {
            if is_simple_local(local) {
                out.push_str(prefix);
                out.push(':');
                out.push_str(local);
                return;
            }
        }
    }
    out.push('<');
    out.push_str(iri.as_str());
    out.push('>');
}

fn write_object(out: &mut String, term: &Term, prefixes: &[(&str, &str)]) {
    match term {
        Term::Iri(iri) => write_iri(out, iri, prefixes),
        lit => write_term(out, lit),
    }
}
