//! Exact counting of solvable configurations on a tree, by weight, without
//! listing them.
//!
//! Root the tree at vertex 0. A vertex `v` can deliver
//! `out(v) = f(v) + Σ_children ⌊out(c)/2⌋` pebbles to itself from its own
//! subtree and receives `in(v)` from the parent side, and it is reachable iff
//! `out(v) + ⌊in(v)/2⌋ ≥ 1`. For a child `c`,
//! `in(c) = out(v) − ⌊out(c)/2⌋ + ⌊in(v)/2⌋`. Reachability of a whole subtree
//! is monotone in `in(v)`, so each subtree is summarised by the pair
//! (least `in(v)` that makes every vertex in it reachable, `out(v)`), and the
//! table maps that pair to a polynomial counting configurations by weight.

use std::collections::HashMap;

use crate::graph::{Graph, Vertex};
use crate::pebbling::PebblingError;

/// Coefficient `k` counts configurations of weight `k`.
type Poly = Vec<u128>;

/// (least inflow needed, outflow) -> configurations by weight.
type Table = HashMap<(u64, u64), Poly>;

pub(crate) struct TreeCounter {
    /// Children lists with the tree rooted at 0.
    children: Vec<Vec<Vertex>>,
    /// Vertices with every child before its parent.
    post_order: Vec<Vertex>,
    cap: u32,
}

fn add_into(target: &mut Poly, source: &[u128]) -> Result<(), PebblingError> {
    for (t, &s) in target.iter_mut().zip(source) {
        *t = t.checked_add(s).ok_or(PebblingError::CountOverflow)?;
    }
    Ok(())
}

/// Product of two weight polynomials, truncated at degree `len - 1`.
fn convolve(a: &[u128], b: &[u128], len: usize) -> Result<Poly, PebblingError> {
    let mut out = vec![0u128; len];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b.iter().enumerate().take(len - i).filter(|(_, &y)| y != 0) {
            let term = x.checked_mul(y).ok_or(PebblingError::CountOverflow)?;
            out[i + j] = out[i + j]
                .checked_add(term)
                .ok_or(PebblingError::CountOverflow)?;
        }
    }
    Ok(out)
}

impl TreeCounter {
    /// `t` must be a tree.
    pub(crate) fn new(t: &Graph, cap: u32) -> Self {
        let order = t.bfs_order(0);
        let mut parent = vec![usize::MAX; t.n()];
        let mut children = vec![Vec::new(); t.n()];
        for &u in &order {
            for &w in t.neighbors(u) {
                if w != parent[u] && w != 0 {
                    parent[w] = u;
                    children[u].push(w);
                }
            }
        }
        TreeCounter {
            children,
            post_order: order.into_iter().rev().collect(),
            cap,
        }
    }

    /// Number of solvable configurations of total weight `w` that agree with
    /// `fixed` wherever it is `Some`, free vertices ranging over `0..=cap`.
    pub(crate) fn count(&self, fixed: &[Option<u32>], w: u64) -> Result<u128, PebblingError> {
        let len = w as usize + 1;
        let mut tables: Vec<Table> = vec![Table::new(); self.children.len()];
        for &v in &self.post_order {
            let choices: Vec<u32> = match fixed[v] {
                Some(x) => vec![x],
                None => (0..=self.cap).collect(),
            };
            // (out so far, largest requirement from children) -> polynomial
            let mut states: HashMap<(u64, u64), Poly> = HashMap::new();
            for x in choices.into_iter().filter(|&x| u64::from(x) <= w) {
                let mut poly = vec![0; len];
                poly[x as usize] = 1;
                states.insert((u64::from(x), 0), poly);
            }
            for &c in &self.children[v] {
                let child = std::mem::take(&mut tables[c]);
                let mut next: HashMap<(u64, u64), Poly> = HashMap::new();
                for (&(out, req), poly) in &states {
                    for (&(need, child_out), child_poly) in &child {
                        let half = child_out / 2;
                        let key = (out + half, req.max(need + half));
                        let product = convolve(poly, child_poly, len)?;
                        match next.get_mut(&key) {
                            Some(existing) => add_into(existing, &product)?,
                            None => {
                                next.insert(key, product);
                            }
                        }
                    }
                }
                states = next;
            }
            let mut table = Table::new();
            for ((out, req), poly) in states {
                let required = req.max(1);
                let need = if out >= required {
                    0
                } else {
                    2 * (required - out)
                };
                // inflow never exceeds the total weight
                if need > w {
                    continue;
                }
                match table.get_mut(&(need, out)) {
                    Some(existing) => add_into(existing, &poly)?,
                    None => {
                        table.insert((need, out), poly);
                    }
                }
            }
            tables[v] = table;
        }
        let mut total: u128 = 0;
        for (&(need, _), poly) in &tables[0] {
            if need == 0 {
                total = total
                    .checked_add(poly[w as usize])
                    .ok_or(PebblingError::CountOverflow)?;
            }
        }
        Ok(total)
    }
}
