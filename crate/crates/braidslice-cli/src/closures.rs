//! Bundled sliceness status of the `S2c†` closures with at most 20 crossings.

use braidslice_core::string_calculus::AssocString;
use serde::Deserialize;

const DATA: &str = include_str!("../data/closures.json");

#[derive(Debug, Deserialize)]
pub struct Listed {
    pub string: String,
    pub name: Option<String>,
}

#[derive(Debug, Deserialize)]
pub struct ClosureList {
    pub ribbon: Vec<Listed>,
    pub not_slice: Vec<Listed>,
}

pub fn bundled() -> ClosureList {
    serde_json::from_str(DATA).expect("bundled closure list is valid JSON")
}

fn parse(l: &Listed) -> AssocString {
    l.string.parse().expect("bundled strings are valid")
}

impl ClosureList {
    pub fn status(&self, a: &AssocString) -> Option<String> {
        if self.ribbon.iter().any(|l| parse(l).equivalent(a)) {
            return Some("ribbon".into());
        }
        self.not_slice
            .iter()
            .find(|l| parse(l).equivalent(a))
            .map(|l| match &l.name {
                Some(n) => format!("not slice ({n})"),
                None => "not slice".into(),
            })
    }

    pub fn is_listed(&self, a: &AssocString) -> bool {
        self.status(a).is_some()
    }
}
