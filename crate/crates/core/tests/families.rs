mod common;

use std::collections::BTreeSet;

use pebbling_core::families::{
    alkane_report, canonical_code, enumerate_family, family_multiset_check, family_trees,
    ClaimVerdict, FamilyOptions, FamilyRecord, FamilyWindow, ReportStatus, Signature,
};
use pebbling_core::graph::all_trees;
use pebbling_core::optimal::SearchOptions;
use pebbling_core::symmetry::tree_distinguishing_number;

fn family() -> Vec<FamilyRecord> {
    enumerate_family(&FamilyOptions {
        threads: 4,
        ..FamilyOptions::default()
    })
    .unwrap()
}

fn radius(t: &pebbling_core::graph::Graph) -> usize {
    (0..t.n())
        .map(|v| t.eccentricity(v).unwrap())
        .min()
        .unwrap()
}

#[test]
fn small_members_match_an_exhaustive_filter() {
    let members: BTreeSet<String> = family_trees(&FamilyWindow::default())
        .unwrap()
        .into_iter()
        .filter(|m| m.tree.n() <= 13)
        .map(|m| m.canonical_code)
        .collect();
    let mut filtered = BTreeSet::new();
    for n in 2..=13 {
        for t in all_trees(n) {
            if radius(&t) <= 2 && tree_distinguishing_number(&t).unwrap().d == 2 {
                filtered.insert(canonical_code(&t).unwrap());
            }
        }
    }
    assert_eq!(members, filtered);
}

#[test]
fn family_is_duplicate_free_and_closed() {
    let trees = family_trees(&FamilyWindow::default()).unwrap();
    let codes: BTreeSet<&str> = trees.iter().map(|m| m.canonical_code.as_str()).collect();
    assert_eq!(codes.len(), trees.len());
    for m in &trees {
        assert_eq!(canonical_code(&m.tree).unwrap(), m.canonical_code);
        assert_eq!(radius(&m.tree), m.radius);
        assert!(m.radius <= 2 && m.d == 2 && m.tree.is_tree());
        let parsed: Signature = m.signature.to_string().parse().unwrap();
        assert_eq!(parsed, m.signature);
    }
    assert!(trees
        .windows(2)
        .all(|w| (w[0].tree.n(), &w[0].canonical_code) < (w[1].tree.n(), &w[1].canonical_code)));
}

#[test]
fn a_narrower_window_is_rejected() {
    let narrow = FamilyWindow {
        max_root_leaves: 2,
        ..FamilyWindow::default()
    };
    assert!(family_trees(&narrow).is_err());
}

#[test]
fn bounds_and_extremes() {
    let records = family();
    let check = family_multiset_check(&records).unwrap();
    assert!(check.bounds_hold, "{:?}", check.violations);
    assert_eq!((check.min_p2, check.max_p2), (Some(1), Some(87)));
    assert_eq!(
        check.stars,
        vec!["spider:1".to_string(), "spider:0:1".to_string()]
    );
}

#[test]
fn multiset_difference_is_a_single_tree() {
    let records = family();
    let check = family_multiset_check(&records).unwrap();
    assert!(check.missing().next().is_none());
    let extra: Vec<_> = check.extra().collect();
    assert_eq!(extra.len(), 1);
    assert_eq!(
        (extra[0].p2, extra[0].computed, extra[0].expected),
        (2, 1, 0)
    );
    assert_eq!(extra[0].trees, vec!["spider:2:2".to_string()]);
    assert_eq!(check.computed_size, check.expected_size + 1);
}

#[test]
fn small_members_match_the_brute_force_optimum() {
    for r in family().into_iter().filter(|r| r.invariants.n <= 8) {
        let (value, witnesses) = common::brute_optimum(&r.tree, 2);
        assert_eq!(
            (r.invariants.pi2, r.invariants.p2),
            (value, witnesses.len() as u64),
            "{}",
            r.name
        );
    }
}

#[test]
fn alkane_rows() {
    let rows = alkane_report(&SearchOptions::default(), 4).unwrap();
    assert_eq!(rows.len(), 8);
    for row in &rows {
        assert!(row.recount_agrees, "{}", row.name);
    }
    let matched: Vec<&str> = rows
        .iter()
        .filter(|r| r.status == ReportStatus::Match)
        .map(|r| r.name.as_str())
        .collect();
    assert_eq!(
        matched,
        [
            "methane",
            "ethane",
            "propane",
            "butane",
            "pentane",
            "isobutane"
        ]
    );
    let neo = rows.iter().find(|r| r.name == "neopentane").unwrap();
    assert_eq!((neo.computed_value, neo.computed_count), (6, 17));
    assert_eq!(neo.claim_confirmed, Some(ClaimVerdict::Neither));
    let iso = rows.iter().find(|r| r.name == "isopentane").unwrap();
    assert_eq!(iso.computed_value, 6);
    assert_eq!(iso.claim_confirmed, None);
}
