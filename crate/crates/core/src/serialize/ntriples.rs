use alloc::string::{String, ToString};
use core::str::Chars;

use super::write_term;
use crate::graph::{Graph, GraphError, Iri, Literal, Term, Triple};

const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ImportError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: blank nodes are not supported; give every node an IRI")]
    BlankNode { line: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

pub fn export_ntriples(graph: &Graph) -> String {
    let mut out = String::new();
    for t in graph.iter() {
        out.push('<');
        out.push_str(t.subject.as_str());
        out.push_str("> <");
        out.push_str(t.predicate.as_str());
        out.push_str("> ");
        write_term(&mut out, &t.object);
        out.push_str(" .\n");
    }
    out
}

pub fn import_ntriples(input: &[u8]) -> Result<Graph, ImportError> {
    let text = core::str::from_utf8(input).map_err(|e| ImportError::Syntax {
        line: 1 + input[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count(),
        message: "invalid UTF-8".to_string(),
    })?;
    let mut graph = Graph::new();
    for (i, raw) in text.split('\n').enumerate() {
        let line = i + 1;
        let mut p = LineParser {
            chars: raw.strip_suffix('\r').unwrap_or(raw).chars(),
            line,
        };
        if let Some(t) = p.statement()? {
            graph.insert(t);
        }
    }
    Ok(graph)
}

struct LineParser<'a> {
    chars: Chars<'a>,
    line: usize,
}

impl LineParser<'_> {
    fn err<T>(&self, message: &str) -> Result<T, ImportError> {
        Err(ImportError::Syntax {
            line: self.line,
            message: message.to_string(),
        })
    }

    fn graph_err(&self, source: GraphError) -> ImportError {
        ImportError::Graph {
            line: self.line,
            source,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.clone().next()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.chars.next();
        }
    }

    fn statement(&mut self) -> Result<Option<Triple>, ImportError> {
        self.skip_ws();
        if matches!(self.peek(), None | Some('#')) {
            return Ok(None);
        }
        let subject = self.term()?;
        self.skip_ws();
        let predicate = self.term()?;
        self.skip_ws();
        let object = self.term()?;
        self.skip_ws();
        if self.chars.next() != Some('.') {
            return self.err("expected '.' after object");
        }
        self.skip_ws();
        if !matches!(self.peek(), None | Some('#')) {
            return self.err("unexpected content after '.'");
        }
        Triple::from_terms(subject, predicate, object)
            .map(Some)
            .map_err(|e| self.graph_err(e))
    }

    fn term(&mut self) -> Result<Term, ImportError> {
        match self.peek() {
            Some('<') => {
                self.chars.next();
                Ok(Term::Iri(self.iri()?))
            }
            Some('"') => {
                self.chars.next();
                Ok(Term::Literal(self.literal()?))
            }
            Some('_') => Err(ImportError::BlankNode { line: self.line }),
            Some(_) => self.err("expected '<' or '\"'"),
            None => self.err("unexpected end of line"),
        }
    }

    fn iri(&mut self) -> Result<Iri, ImportError> {
        let mut value = String::new();
        loop {
            match self.chars.next() {
                None => return self.err("unterminated IRI"),
                Some('>') => break,
                Some('\\') => match self.chars.next() {
                    Some('u') => value.push(self.hex(4)?),
                    Some('U') => value.push(self.hex(8)?),
                    _ => return self.err("invalid escape in IRI"),
                },
                Some(c) => value.push(c),
            }
        }
        Iri::new(value).map_err(|e| self.graph_err(e))
    }

    fn hex(&mut self, digits: usize) -> Result<char, ImportError> {
        let mut code = 0u32;
        for _ in 0..digits {
            let Some(d) = self.chars.next().and_then(|c| c.to_digit(16)) else {
                return self.err("invalid hex escape");
            };
            code = code * 16 + d;
        }
        match char::from_u32(code) {
            Some(c) => Ok(c),
            None => self.err("escape is not a Unicode scalar value"),
        }
    }

    fn literal(&mut self) -> Result<Literal, ImportError> {
        let mut lexical = String::new();
        loop {
            match self.chars.next() {
                None => return self.err("unterminated literal (raw line break inside a string?)"),
                Some('"') => break,
                Some('\\') => {
                    let c = match self.chars.next() {
                        Some('t') => '\t',
                        Some('b') => '\u{8}',
                        Some('n') => '\n',
                        Some('r') => '\r',
                        Some('f') => '\u{c}',
                        Some('"') => '"',
                        Some('\'') => '\'',
                        Some('\\') => '\\',
                        Some('u') => self.hex(4)?,
                        Some('U') => self.hex(8)?,
                        _ => return self.err("invalid escape in literal"),
                    };
                    lexical.push(c);
                }
                Some('\r') => return self.err("raw carriage return inside literal"),
                Some(c) => lexical.push(c),
            }
        }
        match self.peek() {
            Some('@') => {
                self.chars.next();
                let mut tag = String::new();
                while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '-') {
                    tag.push(c);
                    self.chars.next();
                }
                Literal::new(lexical, Some(&tag)).map_err(|e| self.graph_err(e))
            }
            Some('^') => {
                self.chars.next();
                if self.chars.next() != Some('^') || self.chars.next() != Some('<') {
                    return self.err("expected ^^<datatype>");
                }
                let datatype = self.iri()?;
                if datatype.as_str() != XSD_STRING {
                    return self.err("only plain, language-tagged and xsd:string literals are supported");
                }
                Literal::plain(lexical).map_err(|e| self.graph_err(e))
            }
            _ => Literal::plain(lexical).map_err(|e| self.graph_err(e)),
        }
    }
}
