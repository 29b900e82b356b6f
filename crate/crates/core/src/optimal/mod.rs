//! Optimal and `t`-restricted optimal pebbling numbers with exact counts and
//! witness lists.
//!
//! Weights are tried upward from [`lower_bound`]. On trees each weight is
//! counted exactly by a dynamic program over the rooted tree, and witnesses
//! are listed by fixing vertices one at a time and descending only into
//! partial assignments the program says can still be completed.
//!
//! Otherwise (or with [`Method::Enumerate`]) the configurations of each
//! weight are enumerated by a depth-first assignment of vertices in BFS
//! order. On trees a partial assignment is then dropped as soon as giving
//! every unassigned vertex as many pebbles as the cap and the remaining
//! weight allow still leaves some vertex unreachable; solvability is
//! monotone, so this never discards a solvable completion.

mod bounds;
mod enumerate;
mod tree_count;

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::graph::{Graph, Vertex};
use crate::pebbling::{tree_max_all, Configuration, Engine, PebblingError, SolveOptions, Solver};
use tree_count::TreeCounter;

pub use bounds::{upper_bound_report, BoundReport};
pub use enumerate::{capped_composition_count, enumerate_weight_configs, WeightConfigs};

/// Per-vertex pebble cap of the starting configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cap {
    AtMost(u32),
    Unbounded,
}

impl Cap {
    fn at_weight(self, w: u64) -> u32 {
        match self {
            Cap::AtMost(t) => t,
            Cap::Unbounded => u32::try_from(w).unwrap_or(u32::MAX),
        }
    }
}

impl Serialize for Cap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cap::AtMost(t) => s.serialize_u32(*t),
            Cap::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

/// How each weight level is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// The tree dynamic program when the solver uses the tree engine,
    /// enumeration otherwise.
    #[default]
    Auto,
    /// Always enumerate configurations and decide each one.
    Enumerate,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub solve: SolveOptions,
    pub method: Method,
    /// Worker threads for the weight-level enumeration.
    pub threads: usize,
    /// Witnesses kept before the list is marked truncated.
    pub witness_limit: usize,
    /// Maximum enumeration nodes over the whole search.
    pub max_nodes: u64,
    /// Vertices fixed before work is split into independent chunks.
    pub split_depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            solve: SolveOptions::default(),
            method: Method::Auto,
            threads: 1,
            witness_limit: 100_000,
            max_nodes: 50_000_000_000,
            split_depth: 4,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub weights_tried: Vec<u64>,
    /// Partial and complete assignments visited.
    pub nodes: u64,
    /// Complete configurations whose solvability was decided.
    pub configurations_examined: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalResult {
    pub t: Cap,
    pub value: u64,
    pub count: u64,
    /// Sorted lexicographically by the count sequence.
    pub witnesses: Vec<Configuration>,
    pub truncated: bool,
    pub stats: SearchStats,
}

/// JSON document for one search result.
#[derive(Debug, Serialize)]
pub struct ResultDocument<'a> {
    pub graph: &'a str,
    #[serde(flatten)]
    pub result: &'a OptimalResult,
}

/// 1 for a single vertex, otherwise 2: one pebble solves only its own vertex.
pub fn lower_bound(g: &Graph, _t: Cap) -> u64 {
    if g.n() == 1 {
        1
    } else {
        2
    }
}

#[derive(Default)]
struct Tally {
    count: u64,
    witnesses: Vec<Vec<u32>>,
    nodes: u64,
    checked: u64,
}

struct Level<'a> {
    solver: &'a Solver<'a>,
    order: Vec<Vertex>,
    cap: u32,
    prune: bool,
    witness_limit: usize,
    spent: &'a AtomicU64,
    max_nodes: u64,
}

impl Level<'_> {
    fn n(&self) -> usize {
        self.order.len()
    }

    /// Whether the optimistic completion of `f` (first `assigned` vertices of
    /// the order fixed) still reaches every vertex.
    fn optimistic_ok(
        &self,
        f: &mut [u32],
        assigned: usize,
        remaining: u64,
    ) -> Result<bool, PebblingError> {
        let fill = remaining.min(u64::from(self.cap)) as u32;
        for &v in &self.order[assigned..] {
            f[v] = fill;
        }
        let ok = tree_max_all(self.solver.graph(), &Configuration::new(f.to_vec()))?
            .iter()
            .all(|&m| m >= 1);
        for &v in &self.order[assigned..] {
            f[v] = 0;
        }
        Ok(ok)
    }

    fn flush(&self, tally: &mut Tally, pending: &mut u64) -> Result<(), PebblingError> {
        let total = self.spent.fetch_add(*pending, Ordering::Relaxed) + *pending;
        tally.nodes += *pending;
        *pending = 0;
        if total > self.max_nodes {
            return Err(PebblingError::BudgetExceeded {
                limit: self.max_nodes,
            });
        }
        Ok(())
    }

    fn dfs(
        &self,
        f: &mut Vec<u32>,
        i: usize,
        remaining: u64,
        tally: &mut Tally,
        pending: &mut u64,
    ) -> Result<(), PebblingError> {
        *pending += 1;
        if *pending >= 1 << 14 {
            self.flush(tally, pending)?;
        }
        let left = (self.n() - i) as u64;
        if remaining > left * u64::from(self.cap) {
            return Ok(());
        }
        if i == self.n() {
            tally.checked += 1;
            let solvable = if self.prune {
                // with nothing left to place the optimistic check is exact
                self.optimistic_ok(f, i, 0)?
            } else {
                self.solver.is_solvable(&Configuration::new(f.clone()))?
            };
            if solvable {
                tally.count += 1;
                if tally.witnesses.len() < self.witness_limit {
                    tally.witnesses.push(f.clone());
                }
            }
            return Ok(());
        }
        if self.prune && i > 0 && !self.optimistic_ok(f, i, remaining)? {
            return Ok(());
        }
        let v = self.order[i];
        let top = remaining.min(u64::from(self.cap)) as u32;
        for value in (0..=top).rev() {
            f[v] = value;
            self.dfs(f, i + 1, remaining - u64::from(value), tally, pending)?;
        }
        f[v] = 0;
        Ok(())
    }

    /// Fixed-prefix chunks in DFS order; independent of the thread count.
    fn chunks(&self, w: u64, depth: usize) -> Vec<Vec<u32>> {
        let depth = depth.min(self.n());
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(depth);
        fn rec(cap: u32, depth: usize, rem: u64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if prefix.len() == depth {
                out.push(prefix.clone());
                return;
            }
            for value in (0..=rem.min(u64::from(cap)) as u32).rev() {
                prefix.push(value);
                rec(cap, depth, rem - u64::from(value), prefix, out);
                prefix.pop();
            }
        }
        rec(self.cap, depth, w, &mut prefix, &mut out);
        out
    }

    fn run_chunk(&self, prefix: &[u32], w: u64) -> Result<Tally, PebblingError> {
        let mut tally = Tally::default();
        let mut pending = 0;
        let mut f = vec![0; self.n()];
        let mut used = 0;
        for (k, &value) in prefix.iter().enumerate() {
            f[self.order[k]] = value;
            used += u64::from(value);
        }
        self.dfs(&mut f, prefix.len(), w - used, &mut tally, &mut pending)?;
        self.flush(&mut tally, &mut pending)?;
        Ok(tally)
    }
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool")
}

/// Outcome of the search at one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightLevel {
    pub count: u64,
    pub witnesses: Vec<Configuration>,
    pub truncated: bool,
    pub nodes: u64,
    pub configurations_examined: u64,
}

/// Counts (and collects) the solvable configurations of weight `w` under
/// `cap`.
pub fn solvable_at_weight(
    g: &Graph,
    w: u64,
    cap: Cap,
    options: &SearchOptions,
) -> Result<WeightLevel, PebblingError> {
    let solver = Solver::new(g, options.solve)?;
    let spent = AtomicU64::new(0);
    let workers = pool(options.threads);
    level_search(&solver, w, cap, options, &spent, &workers)
}

fn level_search(
    solver: &Solver<'_>,
    w: u64,
    cap: Cap,
    options: &SearchOptions,
    spent: &AtomicU64,
    workers: &rayon::ThreadPool,
) -> Result<WeightLevel, PebblingError> {
    let g = solver.graph();
    if options.method == Method::Auto && solver.uses_tree_engine() {
        return tree_level(g, w, cap, options, spent);
    }
    let level = Level {
        solver,
        order: g.bfs_order(0),
        cap: cap.at_weight(w),
        prune: solver.uses_tree_engine(),
        witness_limit: options.witness_limit,
        spent,
        max_nodes: options.max_nodes,
    };
    let chunks = level.chunks(w, options.split_depth);
    let tallies: Vec<Tally> = workers.install(|| {
        chunks
            .par_iter()
            .map(|prefix| level.run_chunk(prefix, w))
            .collect::<Result<_, _>>()
    })?;
    let mut count = 0;
    let mut nodes = 0;
    let mut checked = 0;
    let mut witnesses = Vec::new();
    for t in tallies {
        count += t.count;
        nodes += t.nodes;
        checked += t.checked;
        witnesses.extend(t.witnesses);
    }
    witnesses.sort();
    let truncated = witnesses.len() < count as usize || witnesses.len() > options.witness_limit;
    witnesses.truncate(options.witness_limit);
    Ok(WeightLevel {
        count,
        witnesses: witnesses.into_iter().map(Configuration::new).collect(),
        truncated,
        nodes,
        configurations_examined: checked,
    })
}

struct Lister<'a> {
    counter: TreeCounter,
    cap: u32,
    w: u64,
    limit: usize,
    spent: &'a AtomicU64,
    max_nodes: u64,
    calls: u64,
}

impl Lister<'_> {
    fn count(&mut self, fixed: &[Option<u32>]) -> Result<u128, PebblingError> {
        self.calls += 1;
        if self.spent.fetch_add(1, Ordering::Relaxed) + 1 > self.max_nodes {
            return Err(PebblingError::BudgetExceeded {
                limit: self.max_nodes,
            });
        }
        self.counter.count(fixed, self.w)
    }

    /// Completions of `fixed` (vertices before `i` set) in ascending order.
    fn list(
        &mut self,
        fixed: &mut Vec<Option<u32>>,
        i: usize,
        remaining: u64,
        out: &mut Vec<Configuration>,
    ) -> Result<(), PebblingError> {
        if i == fixed.len() {
            out.push(Configuration::new(
                fixed.iter().map(|x| x.unwrap()).collect(),
            ));
            return Ok(());
        }
        for x in 0..=remaining.min(u64::from(self.cap)) as u32 {
            if out.len() >= self.limit {
                break;
            }
            fixed[i] = Some(x);
            if self.count(fixed)? > 0 {
                self.list(fixed, i + 1, remaining - u64::from(x), out)?;
            }
        }
        fixed[i] = None;
        Ok(())
    }
}

fn tree_level(
    g: &Graph,
    w: u64,
    cap: Cap,
    options: &SearchOptions,
    spent: &AtomicU64,
) -> Result<WeightLevel, PebblingError> {
    let cap = cap.at_weight(w);
    let mut lister = Lister {
        counter: TreeCounter::new(g, cap),
        cap,
        w,
        limit: options.witness_limit,
        spent,
        max_nodes: options.max_nodes,
        calls: 0,
    };
    let mut fixed = vec![None; g.n()];
    let count = u64::try_from(lister.count(&fixed)?).map_err(|_| PebblingError::CountOverflow)?;
    let mut witnesses = Vec::new();
    if count > 0 {
        lister.list(&mut fixed, 0, w, &mut witnesses)?;
    }
    debug_assert!(witnesses
        .iter()
        .all(|f| tree_max_all(g, f).is_ok_and(|m| m.iter().all(|&x| x >= 1))));
    let examined = capped_composition_count(g.n(), w, cap);
    Ok(WeightLevel {
        count,
        truncated: (witnesses.len() as u64) < count,
        witnesses,
        nodes: lister.calls,
        configurations_examined: u64::try_from(examined).unwrap_or(u64::MAX),
    })
}

/// `π*_t(g)`: minimum weight of a solvable configuration with at most `t`
/// pebbles per vertex, with the number of such configurations.
pub fn restricted_optimal_number(
    g: &Graph,
    t: u32,
    options: &SearchOptions,
) -> Result<OptimalResult, PebblingError> {
    assert!(t >= 1, "cap must be at least 1");
    search(g, Cap::AtMost(t), options)
}

/// `π*(g)`: the unrestricted optimal pebbling number.
pub fn optimal_number(g: &Graph, options: &SearchOptions) -> Result<OptimalResult, PebblingError> {
    search(g, Cap::Unbounded, options)
}

pub fn search(
    g: &Graph,
    cap: Cap,
    options: &SearchOptions,
) -> Result<OptimalResult, PebblingError> {
    let solver = Solver::new(g, options.solve)?;
    let spent = AtomicU64::new(0);
    let workers = pool(options.threads);
    let mut stats = SearchStats::default();
    let mut w = lower_bound(g, cap);
    loop {
        let level = level_search(&solver, w, cap, options, &spent, &workers)?;
        stats.weights_tried.push(w);
        stats.nodes += level.nodes;
        stats.configurations_examined += level.configurations_examined;
        if level.count > 0 {
            return Ok(OptimalResult {
                t: cap,
                value: w,
                count: level.count,
                witnesses: level.witnesses,
                truncated: level.truncated,
                stats,
            });
        }
        // all-ones (cap >= 1) is solvable on a connected graph, so w <= n
        assert!(
            w <= g.n() as u64,
            "no solvable configuration up to weight n"
        );
        w += 1;
    }
}

/// Second, independent count at weight `w`: plain enumeration (no pruning)
/// over the reversed vertex order, decided by the generic configuration
/// search. Returns the count and the sorted solvable configurations.
pub fn recount_plain(
    g: &Graph,
    w: u64,
    cap: Cap,
    max_states: u64,
) -> Result<(u64, Vec<Configuration>), PebblingError> {
    let solver = Solver::new(
        g,
        SolveOptions {
            engine: Engine::Generic,
            max_states,
        },
    )?;
    let n = g.n();
    let mut found = Vec::new();
    for c in enumerate_weight_configs(n, w, cap.at_weight(w)) {
        // position i of the stream is vertex n - 1 - i
        let mut counts = c.into_counts();
        counts.reverse();
        let f = Configuration::new(counts);
        if solver.is_solvable(&f)? {
            found.push(f);
        }
    }
    found.sort();
    Ok((found.len() as u64, found))
}

/// Facts about an optimal result relevant to the multiplicity laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MultiplicityReport {
    pub value: u64,
    pub count: u64,
    /// Some optimal witness puts exactly one pebble on some vertex.
    pub has_witness_with_a_one: bool,
    pub odd_value: bool,
}

impl MultiplicityReport {
    /// A witness using a single pebble somewhere forces a second optimal
    /// configuration (graphs of order at least 2).
    pub fn one_implies_multiple(&self) -> bool {
        !self.has_witness_with_a_one || self.count >= 2
    }

    /// An odd optimal value (at least 3) forces a second optimal configuration.
    pub fn odd_implies_multiple(&self) -> bool {
        !(self.odd_value && self.value >= 3) || self.count >= 2
    }
}

pub fn multiplicity_properties(result: &OptimalResult) -> MultiplicityReport {
    MultiplicityReport {
        value: result.value,
        count: result.count,
        has_witness_with_a_one: result.witnesses.iter().any(|f| f.counts().contains(&1)),
        odd_value: result.value % 2 == 1,
    }
}
