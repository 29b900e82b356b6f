//! Simple undirected graphs over dense vertex ids, plus the text formats and
//! generators used throughout the crate.

mod edgelist;
mod generators;
mod graph6;
mod spec;

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

pub use edgelist::{emit_edge_list, parse_edge_list};
pub use generators::{
    alkane, all_trees, named_alkane, path, spider, star, AlkaneName, ALKANE_NAMES,
};
pub use graph6::{emit_graph6, parse_graph6};
pub use spec::GeneratorSpec;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: Vertex, v: Vertex, n: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("unknown alkane name `{0}`")]
    UnknownAlkane(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bad generator spec `{spec}`: {reason}")]
    Spec { spec: String, reason: String },
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCount { labels: usize, n: usize },
}

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted; the edge list holds each edge once as
/// `(u, v)` with `u < v`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate edges.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edges: set.into_iter().collect(),
            labels: None,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, std::iter::empty())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.n(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn leaves(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n()).filter(move |&v| self.degree(v) == 1)
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().count()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices in BFS order from `source` (only its component).
    pub fn bfs_order(&self, source: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n()];
        seen[source] = true;
        let mut order = vec![source];
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_order(0).len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// Eccentricity of `v`, or `None` if the graph is disconnected.
    pub fn eccentricity(&self, v: Vertex) -> Option<usize> {
        self.distances_from(v)
            .into_iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Image of the graph under `perm` (vertex `v` becomes `perm[v]`).
    /// Labels travel with their vertices.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length");
        let mut g = Graph::from_edge_list(
            self.n(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabelling a valid graph");
        if let Some(labels) = &self.labels {
            let mut moved = vec![String::new(); self.n()];
            for (v, l) in labels.iter().enumerate() {
                moved[perm[v]] = l.clone();
            }
            g.labels = Some(moved);
        }
        g
    }
}

/// Shape information for trees (radius and center are defined for any
/// connected graph).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeMeta {
    pub is_tree: bool,
    pub radius: usize,
    pub center: Vec<Vertex>,
    pub leaf_count: usize,
}

pub fn tree_meta(g: &Graph) -> Result<TreeMeta, GraphError> {
    let ecc = (0..g.n())
        .map(|v| g.eccentricity(v).ok_or(GraphError::Disconnected))
        .collect::<Result<Vec<_>, _>>()?;
    let radius = *ecc.iter().min().unwrap();
    let center = (0..g.n()).filter(|&v| ecc[v] == radius).collect();
    Ok(TreeMeta {
        is_tree: g.is_tree(),
        radius,
        center,
        leaf_count: g.leaf_count(),
    })
}
