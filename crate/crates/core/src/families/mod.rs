//! The radius-at-most-2 trees with distinguishing number 2, the alkane
//! catalog, and the reproduction report comparing both against expected
//! tables.
//!
//! Every tree of radius at most 2, rooted at a center, is a spider: a root
//! carrying some leaves plus internal children that carry only leaves. The
//! family is generated from spider signatures over a finite window that is
//! larger than distinguishing number 2 allows, deduplicated by canonical code
//! and then filtered.

mod golden;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::domination::DominationError;
use crate::graph::{emit_graph6, spider, tree_meta, GeneratorSpec, Graph, GraphError};
use crate::optimal::{
    optimal_number, restricted_optimal_number, upper_bound_report, BoundReport, OptimalResult,
    SearchOptions,
};
use crate::pebbling::PebblingError;
use crate::symmetry::{tree_distinguishing_number, SymmetryError};

pub use crate::symmetry::canonical_code;
pub use golden::{alkane_expectations, family_expected_multiset, AlkaneExpectation};
pub use report::{
    alkane_report, family_multiset_check, reproduce, BoundViolation, ClaimVerdict, FamilyReport,
    MultisetCheck, ReportRow, ReportStatus, ReproduceOptions, Reproduction, Suite, ValueComparison,
    FORMAT_VERSION,
};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Pebbling(#[from] PebblingError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("expected-values file {file}: {reason}")]
    Golden { file: &'static str, reason: String },
    #[error("window boundary signature {0} has distinguishing number 2; widen the window")]
    WindowTooSmall(Signature),
    #[error("unknown suite {0:?} (expected alkanes, family or all)")]
    UnknownSuite(String),
}

/// A spider: `root_leaves` leaves on the root plus one internal child per
/// entry of `children`, carrying that many leaves. Entries are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Signature {
    pub root_leaves: usize,
    pub children: Vec<usize>,
}

impl Signature {
    pub fn new(root_leaves: usize, mut children: Vec<usize>) -> Self {
        children.sort_unstable();
        Signature {
            root_leaves,
            children,
        }
    }

    pub fn tree(&self) -> Graph {
        spider(self.root_leaves, &self.children)
    }
}

/// Written in the CLI generator grammar, e.g. `spider:2:1,1,2`.
impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "spider:{}", self.root_leaves)?;
        if !self.children.is_empty() {
            let parts: Vec<String> = self.children.iter().map(usize::to_string).collect();
            write!(f, ":{}", parts.join(","))?;
        }
        Ok(())
    }
}

/// Bounds of the signature search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyWindow {
    pub max_root_leaves: usize,
    pub max_child_leaves: usize,
    /// Most internal children with the same leaf count.
    pub max_multiplicity: usize,
}

impl Default for FamilyWindow {
    fn default() -> Self {
        FamilyWindow {
            max_root_leaves: 4,
            max_child_leaves: 3,
            max_multiplicity: 5,
        }
    }
}

impl FamilyWindow {
    /// Every signature in the window, in increasing order.
    pub fn signatures(&self) -> Vec<Signature> {
        let mut multiplicities = vec![Vec::new()];
        for _ in 1..=self.max_child_leaves {
            multiplicities = multiplicities
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..=self.max_multiplicity).map(move |m| {
                        let mut next = prefix.clone();
                        next.push(m);
                        next
                    })
                })
                .collect();
        }
        let mut out: Vec<Signature> = (0..=self.max_root_leaves)
            .flat_map(|root| {
                multiplicities.iter().map(move |mult| {
                    let children = mult
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m))
                        .collect();
                    Signature::new(root, children)
                })
            })
            .collect();
        out.sort();
        out
    }

    /// Signatures on the outer edge of the window. If all of them need at
    /// least three colours, nothing beyond the window can have
    /// distinguishing number 2.
    pub fn is_boundary(&self, s: &Signature) -> bool {
        s.root_leaves == self.max_root_leaves
            || s.children.contains(&self.max_child_leaves)
            || (1..=self.max_child_leaves)
                .any(|c| s.children.iter().filter(|&&x| x == c).count() == self.max_multiplicity)
    }
}

/// One member of the family before any pebbling computation.
#[derive(Debug, Clone)]
pub struct FamilyTree {
    pub signature: Signature,
    pub tree: Graph,
    pub canonical_code: String,
    pub radius: usize,
    pub d: usize,
}

/// Non-isomorphic trees of order at least 2 with radius at most 2 and
/// distinguishing number 2, each named by its smallest signature, ordered by
/// order and then canonical code.
pub fn family_trees(window: &FamilyWindow) -> Result<Vec<FamilyTree>, FamilyError> {
    let mut by_code: BTreeMap<String, FamilyTree> = BTreeMap::new();
    for signature in window.signatures() {
        let tree = signature.tree();
        if tree.n() < 2 {
            continue;
        }
        let d = tree_distinguishing_number(&tree)?.d;
        if window.is_boundary(&signature) && d <= 2 {
            return Err(FamilyError::WindowTooSmall(signature));
        }
        if d != 2 {
            continue;
        }
        let code = canonical_code(&tree)?;
        if by_code.contains_key(&code) {
            continue;
        }
        let radius = tree_meta(&tree)?.radius;
        by_code.insert(
            code.clone(),
            FamilyTree {
                signature,
                tree,
                canonical_code: code,
                radius,
                d,
            },
        );
    }
    let mut out: Vec<FamilyTree> = by_code.into_values().collect();
    out.sort_by(|a, b| (a.tree.n(), &a.canonical_code).cmp(&(b.tree.n(), &b.canonical_code)));
    Ok(out)
}

/// The pebbling and domination invariants reported for every tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeInvariants {
    pub n: usize,
    pub leaves: usize,
    pub radius: usize,
    pub d: usize,
    pub pi_star: u64,
    pub pi2: u64,
    pub p2: u64,
    pub bounds: BoundReport,
}

/// Computes [`TreeInvariants`] and also returns the full `t = 2` result.
pub fn tree_invariants(
    t: &Graph,
    options: &SearchOptions,
) -> Result<(TreeInvariants, OptimalResult), FamilyError> {
    let meta = tree_meta(t)?;
    let restricted = restricted_optimal_number(t, 2, options)?;
    let unrestricted = optimal_number(t, options)?;
    let invariants = TreeInvariants {
        n: t.n(),
        leaves: meta.leaf_count,
        radius: meta.radius,
        d: tree_distinguishing_number(t)?.d,
        pi_star: unrestricted.value,
        pi2: restricted.value,
        p2: restricted.count,
        bounds: upper_bound_report(t)?,
    };
    Ok((invariants, restricted))
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyRecord {
    #[serde(skip)]
    pub tree: Graph,
    /// The generating signature in generator-spec form.
    pub name: String,
    pub graph6: String,
    pub canonical_code: String,
    pub signature: Signature,
    #[serde(flatten)]
    pub invariants: TreeInvariants,
}

#[derive(Debug, Clone, Copy)]
pub struct FamilyOptions {
    pub window: FamilyWindow,
    pub search: SearchOptions,
    /// Trees processed concurrently.
    pub threads: usize,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            window: FamilyWindow::default(),
            search: SearchOptions::default(),
            threads: 1,
        }
    }
}

pub(crate) fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool")
}

/// The family with every record's invariants computed.
pub fn enumerate_family(options: &FamilyOptions) -> Result<Vec<FamilyRecord>, FamilyError> {
    let trees = family_trees(&options.window)?;
    pool(options.threads).install(|| {
        trees
            .into_par_iter()
            .map(|member| {
                let (invariants, _) = tree_invariants(&member.tree, &options.search)?;
                Ok(FamilyRecord {
                    name: member.signature.to_string(),
                    graph6: emit_graph6(&member.tree),
                    canonical_code: member.canonical_code,
                    signature: member.signature,
                    tree: member.tree,
                    invariants,
                })
            })
            .collect()
    })
}

impl FromStr for Signature {
    type Err = GraphError;

    /// Parses the `spider:L[:c1,c2,...]` form produced by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<GeneratorSpec>()? {
            GeneratorSpec::Spider {
                root_leaves,
                children,
            } => Ok(Signature::new(root_leaves, children)),
            _ => Err(GraphError::Spec {
                spec: s.to_string(),
                reason: "expected spider:L[:c1,c2,...]".to_string(),
            }),
        }
    }
}
