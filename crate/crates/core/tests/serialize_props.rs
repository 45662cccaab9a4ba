use nomen_core::graph::{Graph, Iri, Literal, Term, Triple};
use nomen_core::serialize::{export_ntriples, export_turtle, import_ntriples};
use proptest::prelude::*;
use rio_api::model as rio;
use rio_api::parser::TriplesParser;
use rio_turtle::{NTriplesParser, TurtleError, TurtleParser};

fn from_rio(t: rio::Triple<'_>) -> Triple {
    let s = match t.subject {
        rio::Subject::NamedNode(n) => Iri::new(n.iri).unwrap(),
        other => panic!("unexpected subject {other}"),
    };
    let o: Term = match t.object {
        rio::Term::NamedNode(n) => Iri::new(n.iri).unwrap().into(),
        rio::Term::Literal(rio::Literal::Simple { value }) => Literal::plain(value).unwrap().into(),
        rio::Term::Literal(rio::Literal::LanguageTaggedString { value, language }) => {
            Literal::new(value, Some(language)).unwrap().into()
        }
        other => panic!("unexpected object {other}"),
    };
    Triple::new(s, Iri::new(t.predicate.iri).unwrap(), o)
}

fn rio_collect(mut parser: impl TriplesParser<Error = TurtleError>) -> Graph {
    let mut g = Graph::new();
    parser
        .parse_all(&mut |t| {
            g.insert(from_rio(t));
            Ok::<_, TurtleError>(())
        })
        .unwrap();
    g
}

fn iri() -> impl Strategy<Value = Iri> {
    prop_oneof![
        "[a-z]{1,6}".prop_map(|s| format!("http://example.org/catalog/vocab/{s}")),
        "[a-z]{1,4}(%7C[a-z0-9]{1,3})?".prop_map(|s| format!("http://example.org/catalog/person/{s}")),
        "[a-z]{1,4}".prop_map(|s| format!("urn:x:{s}")),
        Just("http://www.w3.org/1999/02/22-rdf-syntax-ns#type".to_string()),
        Just("http://example.org/catalog/vocab/role/lithographer".to_string()),
    ]
    .prop_map(|s| Iri::new(s).unwrap())
}

fn literal() -> impl Strategy<Value = Literal> {
    let text = prop::collection::vec(
        prop_oneof![
            4 => any::<char>(),
            1 => prop::sample::select(vec!['"', '\\', '\n', '\r', '\t', '\u{8}', '\u{c}', '\u{0}', '\u{7f}', '\u{1f}', '\u{301}', '\u{10ffff}', '\'']),
        ],
        1..16,
    )
    .prop_map(|cs| cs.into_iter().collect::<String>());
    let lang = prop::option::of(prop::sample::select(vec!["en", "de", "en-GB", "grc", "zh-Hant-TW"]));
    (text, lang).prop_map(|(t, l)| Literal::new(t, l).unwrap())
}

fn graph() -> impl Strategy<Value = Graph> {
    let object = prop_oneof![iri().prop_map(Term::Iri), literal().prop_map(Term::Literal)];
    prop::collection::vec((iri(), iri(), object), 0..40)
        .prop_map(|ts| ts.into_iter().map(|(s, p, o)| Triple::new(s, p, o)).collect())
}

proptest! {
    #[test]
    fn ntriples_round_trip(g in graph()) {
        let text = export_ntriples(&g);
        prop_assert_eq!(&import_ntriples(text.as_bytes()).unwrap(), &g);
        prop_assert_eq!(&rio_collect(NTriplesParser::new(text.as_bytes())), &g);
        // canonical: re-export is byte identical
        prop_assert_eq!(export_ntriples(&import_ntriples(text.as_bytes()).unwrap()), text);
    }

    #[test]
    fn turtle_round_trip_through_independent_parser(g in graph()) {
        let text = export_turtle(&g);
        prop_assert_eq!(&rio_collect(TurtleParser::new(text.as_bytes(), None)), &g, "{}", text);
    }

    #[test]
    fn literal_lexical_form_survives(lit in literal()) {
        let s = Iri::new("urn:s").unwrap();
        let g: Graph = [Triple::new(s.clone(), s.clone(), lit.clone())].into_iter().collect();
        let back = import_ntriples(export_ntriples(&g).as_bytes()).unwrap();
        let got = back.iter().next().unwrap().object.as_literal().unwrap().clone();
        prop_assert_eq!(got.lexical().as_bytes(), lit.lexical().as_bytes());
    }
}

#[test]
fn canonical_order_and_escapes() {
    let s = Iri::new("urn:s").unwrap();
    let p = Iri::new("urn:p").unwrap();
    let g: Graph = [
        Triple::new(s.clone(), p.clone(), Literal::new("b", Some("EN")).unwrap()),
        Triple::new(s.clone(), p.clone(), Literal::plain("a\"\\\n\u{1}").unwrap()),
        Triple::new(s.clone(), p.clone(), Iri::new("urn:z").unwrap()),
    ]
    .into_iter()
    .collect();
    assert_eq!(
        export_ntriples(&g),
        "<urn:s> <urn:p> <urn:z> .\n\
         <urn:s> <urn:p> \"a\\\"\\\\\\n\\u0001\" .\n\
         <urn:s> <urn:p> \"b\"@en .\n"
    );
}
