//! On a tree, moves toward a fixed target travel along unique paths, so the
//! most pebbles deliverable at `v` (rooted at the target) is
//! `m(v) = f(v) + Σ_children ⌊m(c) / 2⌋`.

use super::{Configuration, PebblingError};
use crate::graph::{Graph, Vertex};

fn rooted(t: &Graph, root: Vertex) -> (Vec<Vertex>, Vec<Option<Vertex>>) {
    let order = t.bfs_order(root);
    let mut parent = vec![None; t.n()];
    for &u in &order {
        for &w in t.neighbors(u) {
            if Some(w) != parent[u] {
                parent[w] = Some(u);
            }
        }
    }
    (order, parent)
}

fn check(t: &Graph, f: &Configuration) -> Result<(), PebblingError> {
    f.check_against(t)?;
    if !t.is_tree() {
        return Err(PebblingError::NotATree);
    }
    Ok(())
}

/// Maximum number of pebbles that can be gathered on `target`.
pub fn tree_max_to(t: &Graph, f: &Configuration, target: Vertex) -> Result<u64, PebblingError> {
    check(t, f)?;
    if target >= t.n() {
        return Err(PebblingError::InvalidVertex {
            vertex: target,
            n: t.n(),
        });
    }
    let (order, parent) = rooted(t, target);
    let mut m: Vec<u64> = f.counts().iter().map(|&c| u64::from(c)).collect();
    for &u in order.iter().rev() {
        if let Some(p) = parent[u] {
            m[p] += m[u] / 2;
        }
    }
    Ok(m[target])
}

/// [`tree_max_to`] for every target at once, by rerooting.
pub fn tree_max_all(t: &Graph, f: &Configuration) -> Result<Vec<u64>, PebblingError> {
    check(t, f)?;
    let n = t.n();
    let (order, parent) = rooted(t, 0);
    let mut down: Vec<u64> = f.counts().iter().map(|&c| u64::from(c)).collect();
    for &u in order.iter().rev() {
        if let Some(p) = parent[u] {
            down[p] += down[u] / 2;
        }
    }
    // up[v]: pebbles gatherable at parent(v) from outside v's subtree
    let mut up = vec![0u64; n];
    let mut total = vec![0u64; n];
    for &p in &order {
        let from_above = parent[p].map_or(0, |_| up[p] / 2);
        total[p] = down[p] + from_above;
        for &c in t.neighbors(p) {
            if Some(c) != parent[p] {
                up[c] = total[p] - down[c] / 2;
            }
        }
    }
    Ok(total)
}
