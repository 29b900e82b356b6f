//! Tree-specific symmetry: AHU canonical codes and exact counting of
//! distinguishing colourings without materialising the automorphism group.
//!
//! A tree is rooted at its center. When the center is an edge, each endpoint
//! roots one half and a swap of the halves is possible exactly when their
//! codes agree.
//!
//! For a rooted subtree let `classes(v)` be the number of orbits of
//! distinguishing colourings under the subtree's rooted automorphism group.
//! Siblings with equal codes must fall in pairwise different orbits, so
//! `classes(v) = r * Π C(classes(c), m)` over groups of `m` isomorphic
//! children `c`. Distinguishing colourings have trivial stabilisers, so the
//! labelled count is `classes * |Aut|`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{DistinguishingResult, SymmetryError};
use crate::graph::{tree_meta, Graph, Vertex};

struct Rooted {
    children: Vec<Vec<Vertex>>,
    code: Vec<String>,
}

impl Rooted {
    /// Roots the component of `root` not containing `avoid`.
    fn new(t: &Graph, root: Vertex, avoid: Option<Vertex>) -> Self {
        let n = t.n();
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        let mut parent = vec![usize::MAX; n];
        if let Some(a) = avoid {
            parent[root] = a;
        }
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in t.neighbors(u) {
                if w != parent[u] {
                    parent[w] = u;
                    children[u].push(w);
                    order.push(w);
                }
            }
        }
        let mut code = vec![String::new(); n];
        for &u in order.iter().rev() {
            let mut parts: Vec<&str> = children[u].iter().map(|&c| code[c].as_str()).collect();
            parts.sort_unstable();
            code[u] = format!("({})", parts.concat());
        }
        // children grouped by code so equal siblings are adjacent
        for u in order {
            let mut kids = std::mem::take(&mut children[u]);
            kids.sort_by(|&a, &b| code[a].cmp(&code[b]).then(a.cmp(&b)));
            children[u] = kids;
        }
        Rooted { children, code }
    }

    fn groups(&self, v: Vertex) -> Vec<&[Vertex]> {
        self.children[v]
            .chunk_by(|&a, &b| self.code[a] == self.code[b])
            .collect()
    }

    fn classes(&self, v: Vertex, r: u64) -> BigUint {
        let mut total = BigUint::from(r);
        for group in self.groups(v) {
            if total.is_zero() {
                break;
            }
            total *= binomial(&self.classes(group[0], r), group.len() as u64);
        }
        total
    }

    fn aut(&self, v: Vertex) -> BigUint {
        let mut total = BigUint::one();
        for group in self.groups(v) {
            let m = group.len() as u32;
            total *= self.aut(group[0]).pow(m) * factorial(m as u64);
        }
        total
    }

    /// Writes into `colors` a distinguishing colouring of the subtree at `v`
    /// lying in orbit number `index` (`index < classes(v, r)`).
    fn unrank(&self, v: Vertex, mut index: BigUint, r: u64, colors: &mut [usize]) {
        let rb = BigUint::from(r);
        colors[v] = (&index % &rb).to_usize().unwrap() + 1;
        index /= &rb;
        for group in self.groups(v) {
            let k = self.classes(group[0], r);
            let m = group.len() as u64;
            let choices = binomial(&k, m);
            let pick = &index % &choices;
            index /= &choices;
            for (&child, class) in group.iter().zip(unrank_subset(&k, m, pick)) {
                self.unrank(child, class, r, colors);
            }
        }
    }
}

fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub(crate) fn binomial(k: &BigUint, m: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..m {
        let i = BigUint::from(i);
        if &i >= k {
            return BigUint::zero();
        }
        acc = acc * (k - &i) / (i + 1u32);
    }
    acc
}

/// The `index`-th `m`-subset of `0..k` in lexicographic order.
fn unrank_subset(k: &BigUint, m: u64, mut index: BigUint) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(m as usize);
    let mut next = BigUint::zero();
    for slot in 0..m {
        let remaining = m - slot - 1;
        loop {
            let with_next = binomial(&(k - &next - 1u32), remaining);
            if index < with_next {
                break;
            }
            index -= with_next;
            next += 1u32;
        }
        out.push(next.clone());
        next += 1u32;
    }
    out
}

enum Center {
    Vertex(Vertex),
    Edge(Vertex, Vertex),
}

fn center(t: &Graph) -> Result<Center, SymmetryError> {
    if !t.is_tree() {
        return Err(SymmetryError::NotATree);
    }
    let meta = tree_meta(t).map_err(|_| SymmetryError::NotATree)?;
    Ok(match meta.center.as_slice() {
        [c] => Center::Vertex(*c),
        [a, b] => Center::Edge(*a, *b),
        _ => unreachable!("trees have one or two centers"),
    })
}

/// Canonical code of a tree: equal codes exactly for isomorphic trees.
/// Vertex-centred codes start with `(`, edge-centred codes with `[`.
pub fn canonical_code(t: &Graph) -> Result<String, SymmetryError> {
    Ok(match center(t)? {
        Center::Vertex(c) => Rooted::new(t, c, None).code[c].clone(),
        Center::Edge(a, b) => {
            let ca = Rooted::new(t, a, Some(b)).code[a].clone();
            let cb = Rooted::new(t, b, Some(a)).code[b].clone();
            let (x, y) = if ca <= cb { (ca, cb) } else { (cb, ca) };
            format!("[{x}{y}]")
        }
    })
}

/// Orbit count and group order of distinguishing `r`-colourings.
fn classes_and_order(t: &Graph, r: u64) -> Result<(BigUint, BigUint), SymmetryError> {
    Ok(match center(t)? {
        Center::Vertex(c) => {
            let rooted = Rooted::new(t, c, None);
            (rooted.classes(c, r), rooted.aut(c))
        }
        Center::Edge(a, b) => {
            let ra = Rooted::new(t, a, Some(b));
            let rb = Rooted::new(t, b, Some(a));
            let (ka, kb) = (ra.classes(a, r), rb.classes(b, r));
            let (aa, ab) = (ra.aut(a), rb.aut(b));
            if ra.code[a] == rb.code[b] {
                (binomial(&ka, 2), aa * ab * 2u32)
            } else {
                (ka * kb, aa * ab)
            }
        }
    })
}

/// Number of labelled colourings `V -> {1..r}` fixed by no nontrivial
/// automorphism of the tree.
pub fn count_distinguishing_colorings(t: &Graph, r: u64) -> Result<BigUint, SymmetryError> {
    let (classes, order) = classes_and_order(t, r)?;
    Ok(classes * order)
}

pub fn tree_automorphism_order(t: &Graph) -> Result<BigUint, SymmetryError> {
    Ok(classes_and_order(t, 1)?.1)
}

pub fn tree_distinguishing_number(t: &Graph) -> Result<DistinguishingResult, SymmetryError> {
    let mut r = 1;
    while classes_and_order(t, r)?.0.is_zero() {
        r += 1;
    }
    let mut colors = vec![0; t.n()];
    match center(t)? {
        Center::Vertex(c) => Rooted::new(t, c, None).unrank(c, BigUint::zero(), r, &mut colors),
        Center::Edge(a, b) => {
            let ra = Rooted::new(t, a, Some(b));
            let rb = Rooted::new(t, b, Some(a));
            let second = if ra.code[a] == rb.code[b] { 1u32 } else { 0 };
            ra.unrank(a, BigUint::zero(), r, &mut colors);
            rb.unrank(b, BigUint::from(second), r, &mut colors);
        }
    }
    Ok(DistinguishingResult {
        d: r as usize,
        witness: colors,
    })
}
