//! Backtracking automorphism search guided by colour refinement, and a
//! stabiliser chain built from it.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::graph::{Graph, Vertex};

pub type Permutation = Vec<Vertex>;

/// `(p ∘ q)(v) = p(q(v))`.
pub fn compose(p: &[Vertex], q: &[Vertex]) -> Permutation {
    q.iter().map(|&v| p[v]).collect()
}

pub fn is_automorphism(g: &Graph, perm: &[Vertex]) -> bool {
    perm.len() == g.n()
        && {
            let mut seen = vec![false; perm.len()];
            perm.iter()
                .all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
        }
        && g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v]))
}

/// Stable colouring of two copies of `g` where the i-th prescribed pair
/// `(a, b)` individualises `a` on the left and `b` on the right with the same
/// fresh colour. Colours are comparable across the copies. Returns `None`
/// when the two sides already disagree on a colour histogram.
pub(crate) fn refine_pair(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g.n();
    let mut left = vec![0u32; n];
    let mut right = vec![0u32; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        left[a] = i as u32 + 1;
        right[b] = i as u32 + 1;
    }
    let mut classes = distinct(&left, &right);
    loop {
        let signature = |cols: &[u32], v: Vertex| {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| cols[w]).collect();
            nb.sort_unstable();
            (cols[v], nb)
        };
        let sl: Vec<_> = (0..n).map(|v| signature(&left, v)).collect();
        let sr: Vec<_> = (0..n).map(|v| signature(&right, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sl.iter().chain(sr.iter()) {
            let next = ids.len() as u32;
            ids.entry(s.clone()).or_insert(next);
        }
        left = sl.iter().map(|s| ids[s]).collect();
        right = sr.iter().map(|s| ids[s]).collect();
        if histogram(&left) != histogram(&right) {
            return None;
        }
        let now = distinct(&left, &right);
        if now == classes {
            return Some((left, right));
        }
        classes = now;
    }
}

fn distinct(a: &[u32], b: &[u32]) -> usize {
    let mut all: Vec<u32> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

fn histogram(cols: &[u32]) -> BTreeMap<u32, usize> {
    let mut h = BTreeMap::new();
    for &c in cols {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Visiting order in which every vertex after the first of its component has
/// an earlier neighbour. Prescribed sources come first.
fn search_order(g: &Graph, first: &[Vertex]) -> Vec<Vertex> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for root in first.iter().copied().chain(0..g.n()) {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    left: Vec<u32>,
    right: Vec<u32>,
    order: Vec<Vertex>,
    map: Vec<Option<Vertex>>,
    inv: Vec<Option<Vertex>>,
}

impl Matcher<'_> {
    fn consistent(&self, u: Vertex, c: Vertex) -> bool {
        if self.left[u] != self.right[c] {
            return false;
        }
        let mut mapped = 0;
        for &x in self.g.neighbors(u) {
            if let Some(y) = self.map[x] {
                if !self.g.has_edge(c, y) {
                    return false;
                }
                mapped += 1;
            }
        }
        let image_mapped = self
            .g
            .neighbors(c)
            .iter()
            .filter(|&&z| self.inv[z].is_some())
            .count();
        mapped == image_mapped
    }

    fn extend(&mut self, idx: usize, out: &mut dyn FnMut(Permutation) -> bool) -> bool {
        if idx == self.order.len() {
            return out(self.map.iter().map(|m| m.unwrap()).collect());
        }
        let u = self.order[idx];
        if self.map[u].is_some() {
            return self.extend(idx + 1, out);
        }
        let anchor = self.g.neighbors(u).iter().find_map(|&x| self.map[x]);
        let candidates: Vec<Vertex> = match anchor {
            Some(y) => self.g.neighbors(y).to_vec(),
            None => (0..self.g.n()).collect(),
        };
        for c in candidates {
            if self.inv[c].is_some() || !self.consistent(u, c) {
                continue;
            }
            self.map[u] = Some(c);
            self.inv[c] = Some(u);
            let stop = self.extend(idx + 1, out);
            self.map[u] = None;
            self.inv[c] = None;
            if stop {
                return true;
            }
        }
        false
    }
}

/// Runs the backtracking search with the given prescribed images, calling
/// `out` on each automorphism found until it returns `true`.
fn search(g: &Graph, pairs: &[(Vertex, Vertex)], out: &mut dyn FnMut(Permutation) -> bool) {
    let n = g.n();
    let mut map = vec![None; n];
    let mut inv = vec![None; n];
    for &(a, b) in pairs {
        match (map[a], inv[b]) {
            (None, None) => {
                map[a] = Some(b);
                inv[b] = Some(a);
            }
            (Some(x), _) if x == b => {}
            _ => return,
        }
    }
    // prescribed pairs must themselves preserve adjacency
    for &(a, b) in pairs {
        for &(c, d) in pairs {
            if g.has_edge(a, c) != g.has_edge(b, d) {
                return;
            }
        }
    }
    let Some((left, right)) = refine_pair(g, pairs) else {
        return;
    };
    let sources: Vec<Vertex> = pairs.iter().map(|p| p.0).collect();
    let mut m = Matcher {
        g,
        left,
        right,
        order: search_order(g, &sources),
        map,
        inv,
    };
    m.extend(0, out);
}

pub fn find_automorphism(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Option<Permutation> {
    let mut found = None;
    search(g, pairs, &mut |p| {
        found = Some(p);
        true
    });
    found
}

/// Every automorphism, by exhaustive backtracking. Intended for small graphs
/// and for cross-checking the stabiliser chain.
pub fn all_automorphisms(g: &Graph) -> Vec<Permutation> {
    let mut all = Vec::new();
    search(g, &[], &mut |p| {
        all.push(p);
        false
    });
    all
}

/// Base points with a transversal of coset representatives for each level of
/// the point-stabiliser chain.
#[derive(Debug, Clone)]
pub(crate) struct StabilizerChain {
    pub base: Vec<Vertex>,
    pub transversals: Vec<Vec<Permutation>>,
}

impl StabilizerChain {
    pub fn build(g: &Graph) -> Self {
        let n = g.n();
        let identity: Permutation = (0..n).collect();
        let mut fixed: Vec<(Vertex, Vertex)> = Vec::new();
        let mut base = Vec::new();
        let mut transversals = Vec::new();
        for v in 0..n {
            let (cols, _) = refine_pair(g, &fixed).expect("identity pairing refines");
            if distinct(&cols, &cols) == n {
                // discrete colouring: the stabiliser is trivial
                break;
            }
            let mut reps: BTreeMap<Vertex, Permutation> = BTreeMap::new();
            reps.insert(v, identity.clone());
            for x in 0..n {
                if reps.contains_key(&x) || cols[x] != cols[v] {
                    continue;
                }
                let mut pairs = fixed.clone();
                pairs.push((v, x));
                if let Some(p) = find_automorphism(g, &pairs) {
                    // close the orbit under what we already hold at this level
                    let mut frontier = vec![p];
                    while let Some(q) = frontier.pop() {
                        let img = q[v];
                        if reps.contains_key(&img) {
                            continue;
                        }
                        let held: Vec<Permutation> = reps.values().cloned().collect();
                        reps.insert(img, q.clone());
                        for h in held {
                            frontier.push(compose(&q, &h));
                            frontier.push(compose(&h, &q));
                        }
                    }
                }
            }
            if reps.len() > 1 {
                base.push(v);
                transversals.push(reps.into_values().collect());
            }
            fixed.push((v, v));
        }
        StabilizerChain { base, transversals }
    }

    pub fn order(&self) -> BigUint {
        self.transversals
            .iter()
            .fold(BigUint::from(1u32), |acc, t| acc * BigUint::from(t.len()))
    }

    pub fn generators(&self) -> Vec<Permutation> {
        self.transversals
            .iter()
            .flatten()
            .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
            .cloned()
            .collect()
    }

    /// All group elements as products `t_1 ∘ t_2 ∘ … ∘ t_k`.
    pub fn elements(&self, n: usize) -> Vec<Permutation> {
        let mut acc: Vec<Permutation> = vec![(0..n).collect()];
        for t in &self.transversals {
            acc = acc
                .iter()
                .flat_map(|a| t.iter().map(move |r| compose(a, r)))
                .collect();
        }
        acc.sort();
        acc
    }
}
