//! Exact domination, Roman domination and total domination numbers by branch
//! and bound over vertex bitmasks.
//!
//! Each solver repeatedly picks the uncovered vertex with the fewest ways to
//! be covered and branches over those ways, pruning with a counting bound
//! against the best solution found so far (seeded greedily).

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

type Mask = u128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("graph has {n} vertices, exact solvers accept at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("branch and bound exceeded {limit} nodes")]
    BudgetExceeded { limit: u64 },
    #[error("vertex {0} is isolated, no total dominating set exists")]
    IsolatedVertex(Vertex),
}

#[derive(Debug, Clone, Copy)]
pub struct DominationLimits {
    pub max_vertices: usize,
    pub max_nodes: u64,
}

impl Default for DominationLimits {
    fn default() -> Self {
        DominationLimits {
            max_vertices: 32,
            max_nodes: 200_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominatingSet {
    pub members: Vec<Vertex>,
}

/// Values in `{0, 1, 2}` per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RomanFunction {
    pub values: Vec<u8>,
}

impl RomanFunction {
    pub fn weight(&self) -> u64 {
        self.values.iter().map(|&v| u64::from(v)).sum()
    }
}

pub fn is_dominating(g: &Graph, members: &[Vertex]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in members {
        inside[v] = true;
    }
    (0..g.n()).all(|v| inside[v] || g.neighbors(v).iter().any(|&w| inside[w]))
}

pub fn is_total_dominating(g: &Graph, members: &[Vertex]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in members {
        inside[v] = true;
    }
    (0..g.n()).all(|v| g.neighbors(v).iter().any(|&w| inside[w]))
}

pub fn is_roman(g: &Graph, f: &RomanFunction) -> bool {
    f.values.len() == g.n()
        && f.values.iter().all(|&x| x <= 2)
        && (0..g.n()).all(|v| f.values[v] != 0 || g.neighbors(v).iter().any(|&w| f.values[w] == 2))
}

struct Masks {
    n: usize,
    closed: Vec<Mask>,
    open: Vec<Mask>,
    all: Mask,
}

impl Masks {
    fn new(g: &Graph, limits: &DominationLimits) -> Result<Self, DominationError> {
        let n = g.n();
        let limit = limits.max_vertices.min(Mask::BITS as usize);
        if n > limit {
            return Err(DominationError::TooLarge { n, limit });
        }
        let open: Vec<Mask> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
            .collect();
        let closed = (0..n).map(|v| open[v] | 1 << v).collect();
        let all = if n == Mask::BITS as usize {
            Mask::MAX
        } else {
            (1 << n) - 1
        };
        Ok(Masks {
            n,
            closed,
            open,
            all,
        })
    }

    fn vertices(m: Mask) -> impl Iterator<Item = Vertex> {
        (0..Mask::BITS as usize).filter(move |&v| m >> v & 1 == 1)
    }
}

struct Search<'a> {
    masks: &'a Masks,
    /// covering sets: `cover[v]` is what picking `v` covers
    cover: &'a [Mask],
    /// who can cover `v`
    coverers: Vec<Mask>,
    best: Vec<Vertex>,
    best_size: usize,
    nodes: u64,
    max_nodes: u64,
    max_gain: u32,
}

impl Search<'_> {
    fn run(&mut self, covered: Mask, chosen: &mut Vec<Vertex>) -> Result<(), DominationError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(DominationError::BudgetExceeded {
                limit: self.max_nodes,
            });
        }
        let open = self.masks.all & !covered;
        if open == 0 {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                self.best = chosen.clone();
            }
            return Ok(());
        }
        let need = open.count_ones().div_ceil(self.max_gain) as usize;
        if chosen.len() + need >= self.best_size {
            return Ok(());
        }
        let v = Masks::vertices(open)
            .min_by_key(|&v| self.coverers[v].count_ones())
            .unwrap();
        let mut options: Vec<Vertex> = Masks::vertices(self.coverers[v]).collect();
        options.sort_by_key(|&u| std::cmp::Reverse((self.cover[u] & open).count_ones()));
        for u in options {
            chosen.push(u);
            self.run(covered | self.cover[u], chosen)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Minimum number of picks whose `cover` sets jointly cover every vertex.
fn min_cover(
    masks: &Masks,
    cover: &[Mask],
    limits: &DominationLimits,
) -> Result<Vec<Vertex>, DominationError> {
    let n = masks.n;
    let mut coverers = vec![0; n];
    for (u, &c) in cover.iter().enumerate() {
        for v in Masks::vertices(c) {
            coverers[v] |= 1 << u;
        }
    }
    // greedy incumbent
    let mut covered = 0;
    let mut greedy = Vec::new();
    while covered != masks.all {
        let u = (0..n)
            .max_by_key(|&u| ((cover[u] & !covered).count_ones(), std::cmp::Reverse(u)))
            .unwrap();
        greedy.push(u);
        covered |= cover[u];
    }
    let mut s = Search {
        masks,
        cover,
        coverers,
        best_size: greedy.len(),
        best: greedy,
        nodes: 0,
        max_nodes: limits.max_nodes,
        max_gain: cover
            .iter()
            .map(|c| c.count_ones())
            .max()
            .unwrap_or(1)
            .max(1),
    };
    s.run(0, &mut Vec::new())?;
    let mut best = s.best;
    best.sort_unstable();
    Ok(best)
}

pub fn domination_number(g: &Graph) -> Result<(usize, DominatingSet), DominationError> {
    domination_number_with(g, &DominationLimits::default())
}

pub fn domination_number_with(
    g: &Graph,
    limits: &DominationLimits,
) -> Result<(usize, DominatingSet), DominationError> {
    let masks = Masks::new(g, limits)?;
    let members = min_cover(&masks, &masks.closed, limits)?;
    Ok((members.len(), DominatingSet { members }))
}

pub fn total_domination_number(g: &Graph) -> Result<(usize, DominatingSet), DominationError> {
    total_domination_number_with(g, &DominationLimits::default())
}

pub fn total_domination_number_with(
    g: &Graph,
    limits: &DominationLimits,
) -> Result<(usize, DominatingSet), DominationError> {
    let masks = Masks::new(g, limits)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(DominationError::IsolatedVertex(v));
    }
    let members = min_cover(&masks, &masks.open, limits)?;
    Ok((members.len(), DominatingSet { members }))
}

struct RomanSearch<'a> {
    masks: &'a Masks,
    best: Vec<u8>,
    best_weight: u32,
    nodes: u64,
    max_nodes: u64,
    /// largest closed neighbourhood
    reach: u32,
}

impl RomanSearch<'_> {
    /// Lower bound on the weight still needed to cover `k` vertices: a 2
    /// covers at most `reach` of them, a 1 covers one.
    fn need(&self, k: u32) -> u32 {
        if self.reach >= 2 {
            (2 * k).div_ceil(self.reach)
        } else {
            k
        }
    }

    fn run(
        &mut self,
        covered: Mask,
        values: &mut Vec<u8>,
        weight: u32,
    ) -> Result<(), DominationError> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(DominationError::BudgetExceeded {
                limit: self.max_nodes,
            });
        }
        let open = self.masks.all & !covered;
        if open == 0 {
            if weight < self.best_weight {
                self.best_weight = weight;
                self.best = values.clone();
            }
            return Ok(());
        }
        if weight + self.need(open.count_ones()) >= self.best_weight {
            return Ok(());
        }
        // branch on the uncovered vertex with the smallest closed neighbourhood
        let v = Masks::vertices(open)
            .min_by_key(|&v| self.masks.closed[v].count_ones())
            .unwrap();
        let mut twos: Vec<Vertex> = Masks::vertices(self.masks.closed[v]).collect();
        twos.sort_by_key(|&u| std::cmp::Reverse((self.masks.closed[u] & open).count_ones()));
        // a vertex fixed at 1 never becomes 2
        for u in twos {
            if values[u] == 1 {
                continue;
            }
            values[u] = 2;
            self.run(covered | self.masks.closed[u], values, weight + 2)?;
            values[u] = 0;
        }
        values[v] = 1;
        self.run(covered | 1 << v, values, weight + 1)?;
        values[v] = 0;
        Ok(())
    }
}

pub fn roman_domination_number(g: &Graph) -> Result<(u64, RomanFunction), DominationError> {
    roman_domination_number_with(g, &DominationLimits::default())
}

pub fn roman_domination_number_with(
    g: &Graph,
    limits: &DominationLimits,
) -> Result<(u64, RomanFunction), DominationError> {
    let masks = Masks::new(g, limits)?;
    let n = g.n();
    // incumbent: 2 on a minimum dominating set
    let (_, dom) = domination_number_with(g, limits)?;
    let mut best = vec![0u8; n];
    for &v in &dom.members {
        best[v] = 2;
    }
    let mut s = RomanSearch {
        masks: &masks,
        best_weight: 2 * dom.members.len() as u32,
        best,
        nodes: 0,
        max_nodes: limits.max_nodes,
        reach: masks
            .closed
            .iter()
            .map(|c| c.count_ones())
            .max()
            .unwrap_or(1),
    };
    s.run(0, &mut vec![0; n], 0)?;
    let f = RomanFunction { values: s.best };
    Ok((f.weight(), f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{alkane, path, star};

    #[test]
    fn stars_and_paths() {
        let (g, set) = domination_number(&star(4)).unwrap();
        assert_eq!((g, set.members), (1, vec![0]));
        assert_eq!(domination_number(&path(6)).unwrap().0, 2);
        let (r, f) = roman_domination_number(&star(4)).unwrap();
        assert_eq!((r, f.values), (2, vec![2, 0, 0, 0, 0]));
        assert_eq!(total_domination_number(&path(2)).unwrap().0, 2);
        let (gt, set) = total_domination_number(&path(4)).unwrap();
        assert_eq!((gt, set.members), (2, vec![1, 2]));
    }

    #[test]
    fn roman_on_paths() {
        for n in 1..=20 {
            let (r, f) = roman_domination_number(&path(n)).unwrap();
            assert_eq!(r, (2 * n as u64).div_ceil(3), "n = {n}");
            assert!(is_roman(&path(n), &f));
        }
    }

    #[test]
    fn witnesses_feasible() {
        let g = alkane(5);
        let (_, d) = domination_number(&g).unwrap();
        assert!(is_dominating(&g, &d.members));
        let (_, t) = total_domination_number(&g).unwrap();
        assert!(is_total_dominating(&g, &t.members));
        let (_, f) = roman_domination_number(&g).unwrap();
        assert!(is_roman(&g, &f));
    }

    #[test]
    fn errors() {
        let big = path(40);
        assert!(matches!(
            domination_number(&big),
            Err(DominationError::TooLarge { n: 40, limit: 32 })
        ));
        let loose = DominationLimits {
            max_vertices: 64,
            ..DominationLimits::default()
        };
        assert_eq!(domination_number_with(&big, &loose).unwrap().0, 14);
        let two = Graph::empty(2).unwrap();
        assert_eq!(
            total_domination_number(&two),
            Err(DominationError::IsolatedVertex(0))
        );
        let tight = DominationLimits {
            max_nodes: 0,
            ..DominationLimits::default()
        };
        assert!(matches!(
            domination_number_with(&path(12), &tight),
            Err(DominationError::BudgetExceeded { .. })
        ));
    }
}
