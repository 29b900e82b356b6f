//! Reproduction runs: the alkane table, the family multiset comparison and
//! their JSON and CSV renderings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    alkane_expectations, canonical_code, enumerate_family, family_expected_multiset, pool,
    tree_invariants, FamilyError, FamilyOptions, FamilyRecord, TreeInvariants,
};
use crate::graph::{named_alkane, AlkaneName, ALKANE_NAMES};
use crate::optimal::{recount_plain, Cap, SearchOptions};

/// Version of the JSON and CSV layouts written by [`Reproduction`].
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportStatus {
    Match,
    Mismatch,
    Unstated,
}

impl fmt::Display for ReportStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportStatus::Match => "match",
            ReportStatus::Mismatch => "mismatch",
            ReportStatus::Unstated => "unstated",
        })
    }
}

/// Which of two conflicting published counts the computation confirms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimVerdict {
    Expected,
    Alternative,
    Neither,
}

impl fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimVerdict::Expected => "expected",
            ClaimVerdict::Alternative => "alternative",
            ClaimVerdict::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub name: String,
    pub canonical_code: String,
    pub expected_value: Option<u64>,
    pub expected_count: Option<u64>,
    pub alternative_count: Option<u64>,
    pub computed_value: u64,
    pub computed_count: u64,
    /// Count from a second enumeration pass with the generic solver and the
    /// reversed vertex order.
    pub recount: u64,
    pub recount_agrees: bool,
    /// Set when the expected table holds two conflicting counts.
    pub claim_confirmed: Option<ClaimVerdict>,
    pub status: ReportStatus,
    pub invariants: TreeInvariants,
}

fn status(expected: &[(Option<u64>, u64)]) -> ReportStatus {
    if expected.iter().all(|(e, _)| e.is_none()) {
        ReportStatus::Unstated
    } else if expected.iter().all(|&(e, c)| e.is_none_or(|e| e == c)) {
        ReportStatus::Match
    } else {
        ReportStatus::Mismatch
    }
}

/// Largest number of configurations visited per target by the recount.
const RECOUNT_STATES: u64 = 10_000_000;

fn alkane_row(name: AlkaneName, search: &SearchOptions) -> Result<ReportRow, FamilyError> {
    let expectations = alkane_expectations()?;
    let expected = expectations.iter().find(|e| e.name == name.as_str());
    let g = named_alkane(name);
    let (invariants, _) = tree_invariants(&g, search)?;
    let (recount, _) = recount_plain(&g, invariants.pi2, Cap::AtMost(2), RECOUNT_STATES)?;
    let expected_value = expected.and_then(|e| e.expected_value);
    let expected_count = expected.and_then(|e| e.expected_count);
    let alternative_count = expected.and_then(|e| e.alternative_count);
    let claim_confirmed = alternative_count.map(|alt| {
        if expected_count == Some(invariants.p2) {
            ClaimVerdict::Expected
        } else if alt == invariants.p2 {
            ClaimVerdict::Alternative
        } else {
            ClaimVerdict::Neither
        }
    });
    Ok(ReportRow {
        name: name.to_string(),
        canonical_code: canonical_code(&g)?,
        expected_value,
        expected_count,
        alternative_count,
        computed_value: invariants.pi2,
        computed_count: invariants.p2,
        recount,
        recount_agrees: recount == invariants.p2,
        claim_confirmed,
        status: status(&[
            (expected_value, invariants.pi2),
            (expected_count, invariants.p2),
        ]),
        invariants,
    })
}

/// One row per catalog alkane, in catalog order.
pub fn alkane_report(
    search: &SearchOptions,
    threads: usize,
) -> Result<Vec<ReportRow>, FamilyError> {
    pool(threads).install(|| {
        ALKANE_NAMES
            .par_iter()
            .map(|&name| alkane_row(name, search))
            .collect()
    })
}

/// Computed and expected multiplicity of one `P*_2` value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueComparison {
    pub p2: u64,
    pub expected: usize,
    pub computed: usize,
    /// Family members with this value.
    pub trees: Vec<String>,
    pub status: ReportStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundViolation {
    pub tree: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultisetCheck {
    pub expected_size: usize,
    pub computed_size: usize,
    /// One entry per value occurring in either multiset, ascending.
    pub values: Vec<ValueComparison>,
    pub multiset_agrees: bool,
    pub violations: Vec<BoundViolation>,
    pub bounds_hold: bool,
    pub min_p2: Option<u64>,
    pub max_p2: Option<u64>,
    /// Members that are stars.
    pub stars: Vec<String>,
}

impl MultisetCheck {
    /// Values where the computed multiplicity exceeds the expected one.
    pub fn extra(&self) -> impl Iterator<Item = &ValueComparison> {
        self.values.iter().filter(|v| v.computed > v.expected)
    }

    /// Values where the computed multiplicity falls short.
    pub fn missing(&self) -> impl Iterator<Item = &ValueComparison> {
        self.values.iter().filter(|v| v.computed < v.expected)
    }
}

fn violations(r: &FamilyRecord) -> Vec<String> {
    let v = &r.invariants;
    let b = &v.bounds;
    let mut out = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            out.push(what);
        }
    };
    check(v.radius <= 2, format!("radius {} > 2", v.radius));
    check(v.d == 2, format!("distinguishing number {} != 2", v.d));
    check(
        (2..=6).contains(&v.pi2),
        format!("pi2 {} outside 2..=6", v.pi2),
    );
    check(v.d as u64 <= v.pi2, format!("D {} > pi2 {}", v.d, v.pi2));
    check(
        (1..=87).contains(&v.p2),
        format!("p2 {} outside 1..=87", v.p2),
    );
    check(
        v.pi_star <= v.pi2,
        format!("pi* {} > pi2 {}", v.pi_star, v.pi2),
    );
    check(
        v.pi2 <= b.roman,
        format!("pi2 {} > gamma_R {}", v.pi2, b.roman),
    );
    check(
        b.roman <= b.two_gamma,
        format!("gamma_R {} > 2 gamma {}", b.roman, b.two_gamma),
    );
    if let Some(x) = b.tree_n_minus_l_plus_1 {
        check(v.pi2 <= x, format!("pi2 {} > n - l + 1 = {x}", v.pi2));
    }
    if let Some(x) = b.five_n_over_7 {
        check(v.pi2 <= x, format!("pi2 {} > ceil(5n/7) = {x}", v.pi2));
    }
    out
}

/// Compares the family's `P*_2` multiset with the expected one and checks
/// the per-tree bounds.
pub fn family_multiset_check(records: &[FamilyRecord]) -> Result<MultisetCheck, FamilyError> {
    let expected = family_expected_multiset()?;
    let mut computed: BTreeMap<u64, Vec<String>> = BTreeMap::new();
    for r in records {
        computed
            .entry(r.invariants.p2)
            .or_default()
            .push(r.name.clone());
    }
    let mut keys: Vec<u64> = expected.keys().chain(computed.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let values: Vec<ValueComparison> = keys
        .into_iter()
        .map(|p2| {
            let trees = computed.get(&p2).cloned().unwrap_or_default();
            let expected = expected.get(&p2).copied().unwrap_or(0);
            ValueComparison {
                p2,
                expected,
                computed: trees.len(),
                status: if expected == trees.len() {
                    ReportStatus::Match
                } else {
                    ReportStatus::Mismatch
                },
                trees,
            }
        })
        .collect();
    let violations: Vec<BoundViolation> = records
        .iter()
        .flat_map(|r| {
            violations(r).into_iter().map(|reason| BoundViolation {
                tree: r.name.clone(),
                reason,
            })
        })
        .collect();
    Ok(MultisetCheck {
        expected_size: expected.values().sum(),
        computed_size: records.len(),
        multiset_agrees: values.iter().all(|v| v.status == ReportStatus::Match),
        bounds_hold: violations.is_empty(),
        violations,
        values,
        min_p2: records.iter().map(|r| r.invariants.p2).min(),
        max_p2: records.iter().map(|r| r.invariants.p2).max(),
        stars: records
            .iter()
            .filter(|r| r.tree.max_degree() + 1 == r.tree.n())
            .map(|r| r.name.clone())
            .collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub records: Vec<FamilyRecord>,
    pub check: MultisetCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Alkanes,
    Family,
    All,
}

impl FromStr for Suite {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "alkanes" => Ok(Suite::Alkanes),
            "family" => Ok(Suite::Family),
            "all" => Ok(Suite::All),
            _ => Err(FamilyError::UnknownSuite(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReproduceOptions {
    pub suite: Suite,
    pub family: FamilyOptions,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            suite: Suite::All,
            family: FamilyOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Reproduction {
    pub format_version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alkanes: Option<Vec<ReportRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyReport>,
}

pub fn reproduce(options: &ReproduceOptions) -> Result<Reproduction, FamilyError> {
    let wants = |s: Suite| options.suite == s || options.suite == Suite::All;
    let alkanes = if wants(Suite::Alkanes) {
        Some(alkane_report(
            &options.family.search,
            options.family.threads,
        )?)
    } else {
        None
    };
    let family = if wants(Suite::Family) {
        let records = enumerate_family(&options.family)?;
        let check = family_multiset_check(&records)?;
        Some(FamilyReport { records, check })
    } else {
        None
    };
    Ok(Reproduction {
        format_version: FORMAT_VERSION,
        alkanes,
        family,
    })
}

#[derive(Serialize)]
struct CsvRow<'a> {
    suite: &'static str,
    name: &'a str,
    code: &'a str,
    n: usize,
    l: usize,
    radius: usize,
    #[serde(rename = "D")]
    d: usize,
    pi_star: u64,
    pi2: u64,
    p2: u64,
    gamma: u64,
    #[serde(rename = "gamma_R")]
    gamma_r: u64,
    status: ReportStatus,
}

impl<'a> CsvRow<'a> {
    fn new(
        suite: &'static str,
        name: &'a str,
        code: &'a str,
        v: &TreeInvariants,
        status: ReportStatus,
    ) -> Self {
        CsvRow {
            suite,
            name,
            code,
            n: v.n,
            l: v.leaves,
            radius: v.radius,
            d: v.d,
            pi_star: v.pi_star,
            pi2: v.pi2,
            p2: v.p2,
            gamma: v.bounds.gamma,
            gamma_r: v.bounds.roman,
            status,
        }
    }
}

impl Reproduction {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    /// One line per alkane and per family tree. A family tree's status is
    /// `mismatch` when its `P*_2` value occurs a different number of times
    /// than expected.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in self.alkanes.iter().flatten() {
            w.serialize(CsvRow::new(
                "alkanes",
                &row.name,
                &row.canonical_code,
                &row.invariants,
                row.status,
            ))
            .expect("in-memory write");
        }
        if let Some(family) = &self.family {
            let by_value: BTreeMap<u64, ReportStatus> = family
                .check
                .values
                .iter()
                .map(|v| (v.p2, v.status))
                .collect();
            for r in &family.records {
                let status = by_value[&r.invariants.p2];
                w.serialize(CsvRow::new(
                    "family",
                    &r.name,
                    &r.canonical_code,
                    &r.invariants,
                    status,
                ))
                .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}
