use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, Vertex};
use crate::symmetry::canonical_code;

pub fn path(n: usize) -> Graph {
    Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).expect("path is valid")
}

/// `K_{1,leaves}` with the hub at vertex 0.
pub fn star(leaves: usize) -> Graph {
    spider(leaves, &[])
}

/// A tree of radius at most two: root 0, `root_leaves` pendant vertices on the
/// root, and one internal child per entry of `child_leaf_counts`, each
/// carrying that many pendant leaves.
pub fn spider(root_leaves: usize, child_leaf_counts: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..root_leaves {
        edges.push((0, next));
        next += 1;
    }
    for &c in child_leaf_counts {
        let child = next;
        edges.push((0, child));
        next += 1;
        for _ in 0..c {
            edges.push((child, next));
            next += 1;
        }
    }
    Graph::from_edge_list(next, edges).expect("spider is valid")
}

/// Pads a carbon skeleton with hydrogens so every carbon has degree 4.
/// Carbons keep ids `0..carbons`; hydrogens follow in carbon order.
fn saturate(carbons: usize, bonds: &[(Vertex, Vertex)]) -> Graph {
    let mut degree = vec![0; carbons];
    for &(u, v) in bonds {
        degree[u] += 1;
        degree[v] += 1;
    }
    let mut edges = bonds.to_vec();
    let mut next = carbons;
    for (c, &d) in degree.iter().enumerate() {
        assert!(d <= 4, "carbon {c} exceeds valence");
        for _ in d..4 {
            edges.push((c, next));
            next += 1;
        }
    }
    let labels = (0..next)
        .map(|v| if v < carbons { "C" } else { "H" }.to_string())
        .collect();
    Graph::from_edge_list(next, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("alkane is valid")
}

/// Straight-chain alkane `C_n H_{2n+2}`.
pub fn alkane(carbons: usize) -> Graph {
    assert!(carbons >= 1, "an alkane needs at least one carbon");
    let chain: Vec<_> = (1..carbons).map(|i| (i - 1, i)).collect();
    saturate(carbons, &chain)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlkaneName {
    Methane,
    Ethane,
    Propane,
    Butane,
    Pentane,
    Isobutane,
    Isopentane,
    Neopentane,
}

pub const ALKANE_NAMES: [AlkaneName; 8] = [
    AlkaneName::Methane,
    AlkaneName::Ethane,
    AlkaneName::Propane,
    AlkaneName::Butane,
    AlkaneName::Pentane,
    AlkaneName::Isobutane,
    AlkaneName::Isopentane,
    AlkaneName::Neopentane,
];

impl AlkaneName {
    pub fn as_str(self) -> &'static str {
        match self {
            AlkaneName::Methane => "methane",
            AlkaneName::Ethane => "ethane",
            AlkaneName::Propane => "propane",
            AlkaneName::Butane => "butane",
            AlkaneName::Pentane => "pentane",
            AlkaneName::Isobutane => "isobutane",
            AlkaneName::Isopentane => "isopentane",
            AlkaneName::Neopentane => "neopentane",
        }
    }
}

impl fmt::Display for AlkaneName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AlkaneName {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALKANE_NAMES
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| GraphError::UnknownAlkane(s.to_string()))
    }
}

pub fn named_alkane(name: AlkaneName) -> Graph {
    match name {
        AlkaneName::Methane => alkane(1),
        AlkaneName::Ethane => alkane(2),
        AlkaneName::Propane => alkane(3),
        AlkaneName::Butane => alkane(4),
        AlkaneName::Pentane => alkane(5),
        // 2-methylpropane: one tertiary carbon bonded to three methyls
        AlkaneName::Isobutane => saturate(4, &[(0, 1), (0, 2), (0, 3)]),
        // 2-methylbutane: chain 0-1-2-3 with a methyl (4) on carbon 1
        AlkaneName::Isopentane => saturate(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]),
        // 2,2-dimethylpropane: quaternary carbon bonded to four methyls
        AlkaneName::Neopentane => saturate(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    }
}

/// All pairwise non-isomorphic trees on `n` vertices, ordered by canonical
/// code. Built by attaching a leaf to every vertex of every tree on `n - 1`
/// vertices and keeping one representative per isomorphism class.
pub fn all_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1);
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let k1 = path(1);
    level.insert(canonical_code(&k1).unwrap(), k1);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.n() {
                let edges = t.edges().iter().copied().chain([(v, size - 1)]);
                let grown = Graph::from_edge_list(size, edges).unwrap();
                next.entry(canonical_code(&grown).unwrap()).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}
