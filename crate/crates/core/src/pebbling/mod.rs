//! Pebbling configurations, moves, and solvability.
//!
//! A move takes two pebbles off a vertex and puts one on a neighbour. A
//! configuration is solvable when every vertex can be made to hold a pebble
//! by some (possibly empty) move sequence. Restrictions such as "at most `t`
//! pebbles per vertex" apply to the starting configuration only.

mod generic;
mod tree;

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use generic::{reachable_to, Reachability};
pub use tree::{tree_max_all, tree_max_to};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PebblingError {
    #[error("vertex {vertex} has {have} pebbles, a move needs 2")]
    InsufficientPebbles { vertex: Vertex, have: u32 },
    #[error("vertices {from} and {to} are not adjacent")]
    NotAdjacent { from: Vertex, to: Vertex },
    #[error("vertex {vertex} outside graph of order {n}")]
    InvalidVertex { vertex: Vertex, n: usize },
    #[error("configuration has {len} entries, graph has {n} vertices")]
    LengthMismatch { len: usize, n: usize },
    #[error("search visited more than {limit} configurations")]
    BudgetExceeded { limit: u64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("configuration count does not fit in 64 bits")]
    CountOverflow,
}

/// Pebble counts indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Configuration(Vec<u32>);

impl Configuration {
    pub fn new(counts: Vec<u32>) -> Self {
        Configuration(counts)
    }

    pub fn zeros(n: usize) -> Self {
        Configuration(vec![0; n])
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_counts(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// No vertex holds more than `t` pebbles.
    pub fn is_restricted(&self, t: u32) -> bool {
        self.0.iter().all(|&c| c <= t)
    }

    pub fn max_count(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn set(&mut self, v: Vertex, count: u32) {
        self.0[v] = count;
    }

    /// `self ∘ σ⁻¹`: the configuration carried along the permutation `sigma`.
    pub fn permuted(&self, sigma: &[Vertex]) -> Configuration {
        let mut out = vec![0; self.0.len()];
        for (v, &c) in self.0.iter().enumerate() {
            out[sigma[v]] = c;
        }
        Configuration(out)
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<(), PebblingError> {
        if self.len() != g.n() {
            return Err(PebblingError::LengthMismatch {
                len: self.len(),
                n: g.n(),
            });
        }
        Ok(())
    }
}

impl Index<Vertex> for Configuration {
    type Output = u32;

    fn index(&self, v: Vertex) -> &u32 {
        &self.0[v]
    }
}

impl From<Vec<u32>> for Configuration {
    fn from(counts: Vec<u32>) -> Self {
        Configuration(counts)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Vertex; 2]", into = "[Vertex; 2]")]
pub struct Move {
    pub from: Vertex,
    pub to: Vertex,
}

impl From<[Vertex; 2]> for Move {
    fn from([from, to]: [Vertex; 2]) -> Self {
        Move { from, to }
    }
}

impl From<Move> for [Vertex; 2] {
    fn from(m: Move) -> Self {
        [m.from, m.to]
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// Move sequence that puts a pebble on `target`. Serialises as
/// `{"target": t, "moves": [[from, to], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub target: Vertex,
    pub moves: Vec<Move>,
}

pub fn weight(f: &Configuration) -> u64 {
    f.weight()
}

pub fn apply_move(g: &Graph, f: &Configuration, m: Move) -> Result<Configuration, PebblingError> {
    f.check_against(g)?;
    for vertex in [m.from, m.to] {
        if vertex >= g.n() {
            return Err(PebblingError::InvalidVertex { vertex, n: g.n() });
        }
    }
    if !g.has_edge(m.from, m.to) {
        return Err(PebblingError::NotAdjacent {
            from: m.from,
            to: m.to,
        });
    }
    if f[m.from] < 2 {
        return Err(PebblingError::InsufficientPebbles {
            vertex: m.from,
            have: f[m.from],
        });
    }
    let mut next = f.clone();
    next.0[m.from] -= 2;
    next.0[m.to] += 1;
    Ok(next)
}

/// Why a certificate replay failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayFailure {
    #[error("step {step}: {error}")]
    IllegalMove { step: usize, error: PebblingError },
    #[error("replay ends with no pebble on target {target}")]
    TargetEmpty { target: Vertex },
    #[error(transparent)]
    Input(PebblingError),
}

/// Replays `cert` from `f`, returning the final configuration.
pub fn replay_certificate(
    g: &Graph,
    f: &Configuration,
    cert: &Certificate,
) -> Result<Configuration, ReplayFailure> {
    f.check_against(g).map_err(ReplayFailure::Input)?;
    if cert.target >= g.n() {
        return Err(ReplayFailure::Input(PebblingError::InvalidVertex {
            vertex: cert.target,
            n: g.n(),
        }));
    }
    let mut current = f.clone();
    for (step, &m) in cert.moves.iter().enumerate() {
        current = apply_move(g, &current, m)
            .map_err(|error| ReplayFailure::IllegalMove { step, error })?;
    }
    if current[cert.target] == 0 {
        return Err(ReplayFailure::TargetEmpty {
            target: cert.target,
        });
    }
    Ok(current)
}

pub fn verify_certificate(g: &Graph, f: &Configuration, cert: &Certificate) -> bool {
    replay_certificate(g, f, cert).is_ok()
}

/// Which decision procedure answers reachability questions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Tree formula on trees, configuration search otherwise.
    #[default]
    Auto,
    /// Memoised search over configurations.
    Generic,
    /// Bottom-up delivery counts; trees only.
    Tree,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub engine: Engine,
    /// Maximum distinct configurations visited per target by the generic
    /// search.
    pub max_states: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            engine: Engine::Auto,
            max_states: 10_000_000,
        }
    }
}

/// Solvability checker bound to one graph.
#[derive(Debug, Clone)]
pub struct Solver<'g> {
    graph: &'g Graph,
    use_tree: bool,
    max_states: u64,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, options: SolveOptions) -> Result<Self, PebblingError> {
        if !graph.is_connected() {
            return Err(PebblingError::Disconnected);
        }
        let is_tree = graph.is_tree();
        let use_tree = match options.engine {
            Engine::Auto => is_tree,
            Engine::Generic => false,
            Engine::Tree if is_tree => true,
            Engine::Tree => return Err(PebblingError::NotATree),
        };
        Ok(Solver {
            graph,
            use_tree,
            max_states: options.max_states,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn uses_tree_engine(&self) -> bool {
        self.use_tree
    }

    pub fn reaches(&self, f: &Configuration, target: Vertex) -> Result<bool, PebblingError> {
        f.check_against(self.graph)?;
        if f[target] >= 1 {
            return Ok(true);
        }
        if self.use_tree {
            Ok(tree_max_to(self.graph, f, target)? >= 1)
        } else {
            Ok(reachable_to(self.graph, f, target, self.max_states, false)?.reachable)
        }
    }

    pub fn is_solvable(&self, f: &Configuration) -> Result<bool, PebblingError> {
        f.check_against(self.graph)?;
        if self.use_tree {
            return Ok(tree_max_all(self.graph, f)?.iter().all(|&m| m >= 1));
        }
        for target in 0..self.graph.n() {
            if !self.reaches(f, target)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One certificate per target, or `None` for the first unreachable one.
    pub fn certificates(
        &self,
        f: &Configuration,
    ) -> Result<Option<Vec<Certificate>>, PebblingError> {
        f.check_against(self.graph)?;
        let mut out = Vec::with_capacity(self.graph.n());
        for target in 0..self.graph.n() {
            match reachable_to(self.graph, f, target, self.max_states, true)?.certificate {
                Some(c) => out.push(c),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }
}

/// Whether every vertex is reachable from `f`.
pub fn is_solvable(g: &Graph, f: &Configuration) -> Result<bool, PebblingError> {
    Solver::new(g, SolveOptions::default())?.is_solvable(f)
}
