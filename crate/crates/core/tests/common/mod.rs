//! Fixtures shared by the integration suites.
//!
//! `f1_oracle` is written out triple by triple from the promotion rules, not
//! computed by the promoter, so comparing against it checks the promoter.

#![allow(dead_code)]

use nomen_core::graph::{Graph, Iri, Literal, Triple};
use nomen_core::ingest::{FlatRecord, PlanOptions, ReconciliationPlan};
use nomen_core::model::EntityKind;

pub const NS: &str = "http://example.org/catalog/";
pub const VOCAB: &str = "http://example.org/catalog/vocab/";
pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

pub const MERGE_ALL_LONDONS: [&str; 4] = [
    "place:rec-m1|place_of_publication|0",
    "place:rec-p1|place_of_birth|0",
    "place:rec-w1|subject_place|0",
    "place:rec-y1|location|0",
];

/// Person X born in London, Publisher Y located in London, the book
/// "History of London" published in London with X as lithographer, and the
/// work it embodies, which is about London.
pub fn f1_records() -> Vec<FlatRecord> {
    vec![
        FlatRecord::new("rec-p1", EntityKind::Person)
            .field("name", "John Smith")
            .field("place_of_birth", "London"),
        FlatRecord::new("rec-y1", EntityKind::CorporateBody)
            .field("name", "Publisher Y")
            .field("location", "London"),
        FlatRecord::new("rec-m1", EntityKind::Manifestation)
            .field("title", "History of London")
            .field("place_of_publication", "London")
            .field("statement_of_responsibility", "John Smith")
            .link_via("lithographer", "rec-p1", "John Smith")
            .link("publisher", "rec-y1"),
        FlatRecord::new("rec-w1", EntityKind::Work)
            .field("subject_place", "London")
            .link("embodied_in", "rec-m1"),
    ]
}

pub fn merge_all() -> ReconciliationPlan {
    ReconciliationPlan::from_sets([MERGE_ALL_LONDONS], PlanOptions::default()).unwrap()
}

pub fn iri(s: &str) -> Iri {
    Iri::new(s).unwrap()
}

pub fn data(local: &str) -> Iri {
    iri(&format!("{NS}{local}"))
}

pub fn vocab(local: &str) -> Iri {
    iri(&format!("{VOCAB}{local}"))
}

fn ty(s: &Iri, class: &str) -> Triple {
    Triple::new(s.clone(), iri(RDF_TYPE), vocab(class))
}

fn nomen(owner: &Iri, n: &Iri, nomen_type: &str, string: &str) -> [Triple; 4] {
    [
        ty(n, "Nomen"),
        Triple::new(n.clone(), vocab("nomenType"), vocab(nomen_type)),
        Triple::new(owner.clone(), vocab("hasAppellation"), n.clone()),
        Triple::new(n.clone(), vocab("hasString"), Literal::plain(string).unwrap()),
    ]
}

pub struct F1Iris {
    pub person: Iri,
    pub publisher: Iri,
    pub manifestation: Iri,
    pub work: Iri,
    pub john_smith: Iri,
    pub publisher_y: Iri,
    pub title: Iri,
    /// Place entity and its London nomen per field, in the order
    /// place_of_publication, place_of_birth, subject_place, location.
    /// All four entries are the same when merged.
    pub places: [(Iri, Iri); 4],
}

pub fn f1_iris(merged: bool) -> F1Iris {
    let place = |key: &str| {
        (
            data(&format!("place/{key}")),
            data(&format!(
                "nomen/place%2F{}%7Cplace_name%7C%7CLondon",
                key.replace('%', "%25")
            )),
        )
    };
    let publication = place("rec-m1%7Cplace_of_publication%7C0");
    let places = if merged {
        [
            publication.clone(),
            publication.clone(),
            publication.clone(),
            publication,
        ]
    } else {
        [
            publication,
            place("rec-p1%7Cplace_of_birth%7C0"),
            place("rec-w1%7Csubject_place%7C0"),
            place("rec-y1%7Clocation%7C0"),
        ]
    };
    F1Iris {
        person: data("person/rec-p1"),
        publisher: data("corporate_body/rec-y1"),
        manifestation: data("manifestation/rec-m1"),
        work: data("work/rec-w1"),
        john_smith: data("nomen/person%2Frec-p1%7Cpersonal_name%7C%7CJohn%20Smith"),
        publisher_y: data("nomen/corporate_body%2Frec-y1%7Ccorporate_name%7C%7CPublisher%20Y"),
        title: data("nomen/manifestation%2Frec-m1%7Ctitle%7C%7CHistory%20of%20London"),
        places,
    }
}

/// Every triple F1 must promote to, enumerated by hand.
pub fn f1_oracle(merged: bool) -> Graph {
    let i = f1_iris(merged);
    let [(_, pub_nomen), (birth_place, _), (subject_place, _), (location_place, _)] = i.places.clone();
    let mut g = Graph::new();
    g.extend([
        ty(&i.person, "Person"),
        ty(&i.publisher, "CorporateBody"),
        ty(&i.manifestation, "Manifestation"),
        ty(&i.work, "Work"),
    ]);
    g.extend(nomen(&i.person, &i.john_smith, "PersonalName", "John Smith"));
    g.extend(nomen(&i.publisher, &i.publisher_y, "CorporateName", "Publisher Y"));
    g.extend(nomen(&i.manifestation, &i.title, "Title", "History of London"));
    for (place, london) in &i.places {
        g.insert(ty(place, "Place"));
        g.extend(nomen(place, london, "PlaceName", "London"));
    }
    let m = &i.manifestation;
    g.extend([
        Triple::new(i.person.clone(), vocab("bornIn"), birth_place),
        Triple::new(i.publisher.clone(), vocab("locatedIn"), location_place),
        Triple::new(i.work.clone(), vocab("subject"), subject_place),
        Triple::new(m.clone(), vocab("placeOfPublicationNomen"), pub_nomen),
        Triple::new(m.clone(), vocab("titleNomen"), i.title.clone()),
        Triple::new(m.clone(), vocab("statementOfResponsibilityNomen"), i.john_smith.clone()),
        Triple::new(m.clone(), vocab("role/lithographer"), i.person.clone()),
        Triple::new(m.clone(), vocab("roleNomen/lithographer"), i.john_smith.clone()),
        Triple::new(m.clone(), vocab("publisher"), i.publisher.clone()),
        Triple::new(m.clone(), vocab("embodies"), i.work.clone()),
    ]);
    g
}

/// A work with German and English expressions, a place with names in
/// three languages and a person with untagged names.
pub fn titles_records() -> Vec<FlatRecord> {
    vec![
        FlatRecord::new("rec-w-ody", EntityKind::Work).field_lang("title", "Ὀδύσσεια", "grc"),
        FlatRecord::new("rec-e-en", EntityKind::Expression)
            .field_lang("title", "Odyssey", "en")
            .link("realizes", "rec-w-ody"),
        FlatRecord::new("rec-e-de", EntityKind::Expression)
            .field_lang("title", "Odyssee", "de")
            .link("realizes", "rec-w-ody"),
        FlatRecord::new("rec-pl-ath", EntityKind::Place)
            .field_lang("name", "Athen", "de")
            .field_lang("name", "Athens", "en-GB")
            .field_lang("name", "Athènes", "fr"),
        FlatRecord::new("rec-p-hom", EntityKind::Person)
            .field("name", "Homer")
            .field("name", "Homeros"),
    ]
}

/// Pseudonym, name in religion and a shared persona.
pub fn name_relation_records() -> Vec<FlatRecord> {
    vec![
        FlatRecord::new("rec-evans", EntityKind::Person)
            .field("name", "Mary Ann Evans")
            .field("pseudonym", "George Eliot"),
        FlatRecord::new("rec-merton", EntityKind::Person)
            .field("name", "Thomas Merton")
            .field("name_in_religion", "Father Louis"),
        FlatRecord::new("rec-rh", EntityKind::Person)
            .field("name", "Richard Henry")
            .link("shared_identity_of", "rec-butler")
            .link("shared_identity_of", "rec-newton"),
        FlatRecord::new("rec-butler", EntityKind::Person).field("name", "Richard Butler"),
        FlatRecord::new("rec-newton", EntityKind::Person).field("name", "Henry Chance Newton"),
    ]
}

pub const LABEL_LANGS: [Option<&str>; 4] = [Some("en"), Some("de"), Some("fr"), None];
pub const LABEL_DEFAULTS: [Option<&str>; 3] = [Some("en"), Some("de"), None];

/// Expected (label, rule) per entity, requested language and default,
/// worked out by hand from the fallback chain.
pub fn expected_label(entity: &str, lang: Option<&str>, default: Option<&str>) -> (&'static str, &'static str) {
    match (entity, lang, default) {
        ("work/rec-w-ody", Some("en"), _) => ("Odyssey", "2"),
        ("work/rec-w-ody", Some("de"), _) => ("Odyssee", "2"),
        ("work/rec-w-ody", _, Some("en")) => ("Odyssey", "3"),
        ("work/rec-w-ody", _, Some("de")) => ("Odyssee", "3"),
        // expression/rec-e-de... is the smallest nomen IRI in reach
        ("work/rec-w-ody", _, None) => ("Odyssee", "4"),

        ("place/rec-pl-ath", Some("en"), _) => ("Athens", "1b"),
        ("place/rec-pl-ath", Some("de"), _) => ("Athen", "1"),
        ("place/rec-pl-ath", Some("fr"), _) => ("Athènes", "1"),
        // en-GB is not an exact match for a default of en
        ("place/rec-pl-ath", None, Some("en")) => ("Athen", "4"),
        ("place/rec-pl-ath", None, Some("de")) => ("Athen", "3"),
        ("place/rec-pl-ath", None, None) => ("Athen", "4"),

        ("person/rec-p-hom", _, _) => ("Homer", "4"),

        ("expression/rec-e-en", Some("en"), _) => ("Odyssey", "1"),
        ("expression/rec-e-en", _, Some("en")) => ("Odyssey", "3"),
        ("expression/rec-e-en", _, _) => ("Odyssey", "4"),
        other => panic!("no expectation for {other:?}"),
    }
}

pub const LABEL_ENTITIES: [&str; 4] = [
    "work/rec-w-ody",
    "place/rec-pl-ath",
    "person/rec-p-hom",
    "expression/rec-e-en",
];
