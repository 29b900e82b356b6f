//! Brute-force oracles shared by the integration tests. Nothing here calls the
//! library's solvers; only graph construction is reused.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use pebbling_core::graph::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Breadth-first search over every configuration reachable from `f`.
pub fn reaches(g: &Graph, f: &[u32], target: usize) -> bool {
    if f[target] >= 1 {
        return true;
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue = VecDeque::from([f.to_vec()]);
    seen.insert(f.to_vec());
    while let Some(c) = queue.pop_front() {
        for u in 0..g.n() {
            if c[u] < 2 {
                continue;
            }
            for &v in g.neighbors(u) {
                let mut next = c.clone();
                next[u] -= 2;
                next[v] += 1;
                if v == target {
                    return true;
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

pub fn solvable(g: &Graph, f: &[u32]) -> bool {
    (0..g.n()).all(|t| reaches(g, f, t))
}

/// Every vector in `{0..=t}^n`, in odometer order.
pub fn all_configs(n: usize, t: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut c = vec![0; n];
    loop {
        out.push(c.clone());
        let mut i = 0;
        while i < n && c[i] == t {
            c[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        c[i] += 1;
    }
}

/// Minimum weight of a solvable configuration with entries at most `t`, and
/// the sorted list of those configurations.
pub fn brute_optimum(g: &Graph, t: u32) -> (u64, Vec<Vec<u32>>) {
    let mut best = u64::MAX;
    let mut found = Vec::new();
    for c in all_configs(g.n(), t) {
        let w: u64 = c.iter().map(|&x| u64::from(x)).sum();
        if w > best {
            continue;
        }
        if solvable(g, &c) {
            if w < best {
                best = w;
                found.clear();
            }
            found.push(c);
        }
    }
    found.sort();
    (best, found)
}

/// Every labelled graph on `n` vertices, one per edge subset.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edge_list(n, edges).unwrap()
        })
        .collect()
}

/// A connected graph: a random spanning tree plus extra random edges.
pub fn random_connected(n: usize, extra: usize, rng: &mut StdRng) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn random_tree(n: usize, rng: &mut StdRng) -> Graph {
    random_connected(n, 0, rng)
}

pub fn random_permutation(n: usize, rng: &mut StdRng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Every permutation of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![p.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn preserves_edges(g: &Graph, p: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| g.has_edge(p[u], p[v]))
}

/// Automorphisms by filtering every permutation.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    permutations(g.n())
        .into_iter()
        .filter(|p| preserves_edges(g, p))
        .collect()
}

/// Backtracking isomorphism test that assigns vertices of `a` in order.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.n() {
            return true;
        }
        for j in 0..b.n() {
            if used[j] || a.degree(i) != b.degree(j) {
                continue;
            }
            let consistent = (0..i).all(|k| a.has_edge(i, k) == b.has_edge(j, map[k]));
            if consistent {
                map.push(j);
                used[j] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                used[j] = false;
                map.pop();
            }
        }
        false
    }
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && extend(a, b, &mut Vec::new(), &mut vec![false; b.n()])
}

/// Minimum dominating set size over all subsets.
pub fn brute_domination(g: &Graph, total: bool) -> Option<usize> {
    let n = g.n();
    (0..1u32 << n)
        .filter(|&s| {
            (0..n).all(|v| {
                (!total && s >> v & 1 == 1) || g.neighbors(v).iter().any(|&w| s >> w & 1 == 1)
            })
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Minimum Roman weight over all `3^n` functions.
pub fn brute_roman(g: &Graph) -> u64 {
    all_configs(g.n(), 2)
        .into_iter()
        .filter(|f| (0..g.n()).all(|v| f[v] != 0 || g.neighbors(v).iter().any(|&w| f[w] == 2)))
        .map(|f| f.iter().map(|&x| u64::from(x)).sum())
        .min()
        .unwrap()
}
