//! Expected values shipped with the crate as versioned CSV files.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::FamilyError;

const ALKANES: &str = include_str!("../../data/alkanes.csv");
const FAMILY_P2: &str = include_str!("../../data/family_p2.csv");

/// Expected `(π*_2, P*_2)` for one molecule.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct AlkaneExpectation {
    pub name: String,
    pub expected_value: Option<u64>,
    pub expected_count: Option<u64>,
    /// A second, conflicting published count, if any.
    pub alternative_count: Option<u64>,
}

#[derive(Debug, Deserialize)]
struct MultisetEntry {
    p2: u64,
    multiplicity: usize,
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes())
}

fn golden_error(file: &'static str, e: csv::Error) -> FamilyError {
    FamilyError::Golden {
        file,
        reason: e.to_string(),
    }
}

pub fn alkane_expectations() -> Result<Vec<AlkaneExpectation>, FamilyError> {
    reader(ALKANES)
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(|e| golden_error("alkanes.csv", e))
}

/// Expected multiset of `P*_2` over the tree family, as value -> multiplicity.
pub fn family_expected_multiset() -> Result<BTreeMap<u64, usize>, FamilyError> {
    let mut out = BTreeMap::new();
    for entry in reader(FAMILY_P2).deserialize::<MultisetEntry>() {
        let entry = entry.map_err(|e| golden_error("family_p2.csv", e))?;
        *out.entry(entry.p2).or_insert(0) += entry.multiplicity;
    }
    Ok(out)
}
