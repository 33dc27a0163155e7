//! The bundled graph corpus.

use crate::budget::Budget;
use crate::cover_poset::build_poset;
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Graph};
use crate::projection::{right_edges, satisfies_wsc};

macro_rules! fixture {
    ($name:literal) => {
        ($name, include_str!(concat!("../fixtures/", $name, ".txt")))
    };
}

/// `(name, edge-list source)` for every bundled graph.
pub const SOURCES: &[(&str, &str)] = &[
    fixture!("K2"),
    fixture!("P4"),
    fixture!("P6"),
    fixture!("STAR3"),
    fixture!("C4"),
    fixture!("C5"),
    fixture!("C6"),
    fixture!("K23"),
    fixture!("E7"),
    fixture!("E8"),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|s| s.0)
}

pub fn source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|s| s.0.eq_ignore_ascii_case(name)).map(|s| s.1)
}

pub fn load(name: &str) -> Result<Graph> {
    let text = source(name).ok_or_else(|| Error::FixtureMismatch {
        name: name.to_string(),
        detail: "no such fixture".into(),
    })?;
    parse_graph(text)
}

pub fn all() -> Result<Vec<(&'static str, Graph)>> {
    SOURCES.iter().map(|&(n, t)| Ok((n, parse_graph(t)?))).collect()
}

fn mismatch(name: &str, detail: impl Into<String>) -> Error {
    Error::FixtureMismatch {
        name: name.to_string(),
        detail: detail.into(),
    }
}

fn sorted_hasse(g: &Graph) -> Result<(Vec<String>, Vec<String>)> {
    let cp = build_poset(g, &Budget::default())?;
    let mut hasse = cp.poset().hasse_lines();
    hasse.sort();
    Ok((cp.poset().names().to_vec(), hasse))
}

/// Parses every fixture and checks the documented properties of the two
/// reconstructed graphs.
pub fn validate_all() -> Result<()> {
    all()?;
    let e7 = load("E7")?;
    let right: Vec<(usize, usize)> = right_edges(&e7).iter().map(|&(u, v)| (u + 1, v + 1)).collect();
    if right != [(1, 4), (2, 5), (3, 6)] {
        return Err(mismatch("E7", format!("right edges are {right:?}")));
    }
    if satisfies_wsc(&e7) {
        return Err(mismatch("E7", "weak square condition holds"));
    }
    let (elements, hasse) = sorted_hasse(&e7)?;
    if elements != ["000", "100", "101", "110", "111"]
        || hasse != ["000 < 100", "100 < 101", "100 < 110", "101 < 111", "110 < 111"]
    {
        return Err(mismatch("E7", format!("cover poset {hasse:?}")));
    }
    let e8 = load("E8")?;
    let (elements, hasse) = sorted_hasse(&e8)?;
    let expected = [
        "0000 < 0110",
        "0000 < 1001",
        "0110 < 1110",
        "1001 < 1101",
        "1101 < 1111",
        "1110 < 1111",
    ];
    if elements.len() != 6 || hasse != expected {
        return Err(mismatch("E8", format!("cover poset {hasse:?}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid() {
        validate_all().unwrap();
        assert_eq!(names().count(), 10);
        assert!(load("c5").is_ok());
        assert!(matches!(load("nope"), Err(Error::FixtureMismatch { .. })));
    }
}
