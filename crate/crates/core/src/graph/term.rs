use alloc::string::{String, ToString};
use alloc::sync::Arc;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use super::GraphError;

/// An absolute IRI. Equality is exact string equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(Arc<str>);

impl Iri {
    pub fn new(value: impl AsRef<str>) -> Result<Self, GraphError> {
        let value = value.as_ref();
        if is_absolute_iri(value) {
            Ok(Iri(Arc::from(value)))
        } else {
            Err(GraphError::InvalidIri(value.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// `scheme ":" rest` where rest is non-empty and free of the characters an
/// N-Triples IRIREF cannot carry unescaped.
fn is_absolute_iri(value: &str) -> bool {
    let Some((scheme, rest)) = value.split_once(':') else {
        return false;
    };
    let mut scheme_chars = scheme.chars();
    let scheme_ok = matches!(scheme_chars.next(), Some(c) if c.is_ascii_alphabetic())
        && scheme_chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'));
    scheme_ok
        && !rest.is_empty()
        && !value
            .chars()
            .any(|c| c <= ' ' || matches!(c, '<' | '>' | '"' | '{' | '}' | '|' | '\\' | '^' | '`'))
}

/// A terminal lexical value with an optional language tag.
///
/// Equality and ordering use the exact lexical bytes and the lowercased
/// language tag; the tag is stored as given. No Unicode normalization is
/// applied to the lexical form.
#[derive(Clone)]
pub struct Literal {
    lexical: Arc<str>,
    lang: Option<Arc<str>>,
}

impl Literal {
    pub fn new(lexical: impl AsRef<str>, lang: Option<&str>) -> Result<Self, GraphError> {
        let lexical = lexical.as_ref();
        if lexical.is_empty() {
            return Err(GraphError::EmptyLiteral);
        }
        if let Some(tag) = lang {
            if !is_language_tag(tag) {
                return Err(GraphError::InvalidLanguageTag(tag.to_string()));
            }
        }
        Ok(Literal {
            lexical: Arc::from(lexical),
            lang: lang.map(Arc::from),
        })
    }

    pub fn plain(lexical: impl AsRef<str>) -> Result<Self, GraphError> {
        Self::new(lexical, None)
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    /// The language tag exactly as it was supplied.
    pub fn lang(&self) -> Option<&str> {
        self.lang.as_deref()
    }

    /// Lowercased language tag used for comparisons.
    pub fn lang_key(&self) -> Option<String> {
        self.lang.as_deref().map(str::to_ascii_lowercase)
    }
}

/// `1*8ALPHA *("-" 1*8alphanum)`
pub fn is_language_tag(tag: &str) -> bool {
    let mut parts = tag.split('-');
    let primary_ok = parts
        .next()
        .is_some_and(|p| (1..=8).contains(&p.len()) && p.bytes().all(|b| b.is_ascii_alphabetic()));
    primary_ok && parts.all(|p| (1..=8).contains(&p.len()) && p.bytes().all(|b| b.is_ascii_alphanumeric()))
}

fn cmp_lang(a: Option<&str>, b: Option<&str>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(a), Some(b)) => a
            .bytes()
            .map(|c| c.to_ascii_lowercase())
            .cmp(b.bytes().map(|c| c.to_ascii_lowercase())),
    }
}

impl PartialEq for Literal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Literal {}

impl PartialOrd for Literal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Literal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lexical
            .cmp(&other.lexical)
            .then_with(|| cmp_lang(self.lang(), other.lang()))
    }
}

impl Hash for Literal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.lexical.hash(state);
        if let Some(tag) = self.lang() {
            for b in tag.bytes() {
                state.write_u8(b.to_ascii_lowercase());
            }
        }
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.lexical)?;
        if let Some(tag) = self.lang() {
            write!(f, "@{tag}")?;
        }
        Ok(())
    }
}

/// Object position of a triple. IRIs sort before literals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(Iri),
    Literal(Literal),
}

impl Term {
    pub fn as_iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            Term::Literal(_) => None,
        }
    }

    pub fn as_literal(&self) -> Option<&Literal> {
        match self {
            Term::Literal(lit) => Some(lit),
            Term::Iri(_) => None,
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Iri(iri) => iri.fmt(f),
            Term::Literal(lit) => lit.fmt(f),
        }
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

/// A subject–predicate–object statement. Field order gives the canonical
/// order: subject, then predicate, then object.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: Iri,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Iri, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple {
            subject,
            predicate,
            object: object.into(),
        }
    }

    /// Builds a triple from untyped terms, rejecting literals in the
    /// subject or predicate position.
    pub fn from_terms(subject: Term, predicate: Term, object: Term) -> Result<Self, GraphError> {
        let Term::Iri(subject) = subject else {
            return Err(GraphError::LiteralSubject);
        };
        let Term::Iri(predicate) = predicate else {
            return Err(GraphError::LiteralPredicate);
        };
        Ok(Triple {
            subject,
            predicate,
            object,
        })
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {:?} {:?}", self.subject, self.predicate, self.object)
    }
}
