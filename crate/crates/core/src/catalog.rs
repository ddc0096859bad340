//! Built-in presentations, loaded from the checked-in `.spbw` fixtures.

use crate::dsl::Document;
use crate::presentation::Presentation;
use crate::{Error, Result};

const SOURCES: &[(&str, &str)] = &[
    ("commutative", include_str!("../fixtures/commutative.spbw")),
    ("qspace3", include_str!("../fixtures/qspace3.spbw")),
    ("dispin", include_str!("../fixtures/dispin.spbw")),
    ("sl2", include_str!("../fixtures/sl2.spbw")),
    ("so3", include_str!("../fixtures/so3.spbw")),
    ("uqso3", include_str!("../fixtures/uqso3.spbw")),
    ("woronowicz", include_str!("../fixtures/woronowicz.spbw")),
    ("type1", include_str!("../fixtures/type1.spbw")),
    ("type2", include_str!("../fixtures/type2.spbw")),
    ("type3", include_str!("../fixtures/type3.spbw")),
    ("type4", include_str!("../fixtures/type4.spbw")),
    ("type5", include_str!("../fixtures/type5.spbw")),
    ("type6", include_str!("../fixtures/type6.spbw")),
    ("type7", include_str!("../fixtures/type7.spbw")),
    ("type8", include_str!("../fixtures/type8.spbw")),
    ("weyl", include_str!("../fixtures/weyl.spbw")),
    ("qweyl", include_str!("../fixtures/qweyl.spbw")),
    ("gaddis", include_str!("../fixtures/gaddis.spbw")),
    ("ore_idempotent", include_str!("../fixtures/ore_idempotent.spbw")),
];

pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

pub fn source(name: &str) -> Result<&'static str> {
    SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::UnknownPreset {
            name: name.to_string(),
            available: names().iter().map(|s| s.to_string()).collect(),
        })
}

/// The full fixture document: the ring plus any displayed matrices.
pub fn document(name: &str) -> Result<Document> {
    Document::parse(source(name)?)
}

pub fn preset(name: &str) -> Result<Presentation> {
    let doc = document(name)?;
    Ok(doc.rings()[0].presentation().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Gld;

    #[test]
    fn every_preset_parses_and_validates() {
        for name in names() {
            let p = preset(name).unwrap();
            assert_eq!(p.name, name);
            let rep = p.validate();
            assert!(rep.passed(), "{}: {}", name, rep.render_text());
        }
    }

    #[test]
    fn declared_dimensions() {
        assert_eq!(preset("dispin").unwrap().gld, Some(Gld::Exact(3)));
        assert_eq!(preset("weyl").unwrap().gld, Some(Gld::AtMost(2)));
        let q = preset("qweyl").unwrap();
        assert_eq!(q.n(), 2);
        let o = preset("ore_idempotent").unwrap();
        assert_eq!(o.params, vec!["q", "t", "a"]);
        assert_eq!(o.n(), 1);
    }

    #[test]
    fn unknown_preset_lists_choices() {
        let e = preset("nope").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("dispin") && msg.contains("qweyl"), "{}", msg);
    }

    #[test]
    fn fixtures_round_trip() {
        for name in names() {
            let doc = document(name).unwrap();
            let back = Document::parse(&doc.to_text()).unwrap();
            assert_eq!(back, doc, "{}", name);
        }
    }
}
