//! Automorphism groups, vertex orbits and the distinguishing number.
//!
//! Two engines are available. General graphs go through a refinement-guided
//! backtracking search that builds a point-stabiliser chain (group order and
//! generators without listing the group), expanded into an explicit element
//! list when the graph and group are small. Trees use the rooted-code
//! recursion in [`tree`], which never materialises the group.

mod search;
pub mod tree;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use search::{all_automorphisms, compose, find_automorphism, is_automorphism, Permutation};
pub use tree::{
    canonical_code, count_distinguishing_colorings, tree_automorphism_order,
    tree_distinguishing_number,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("explicit enumeration limited to {limit} vertices, graph has {n}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("group of order {order} exceeds the element limit {limit}")]
    GroupTooLarge { order: BigUint, limit: usize },
    #[error("testing {work} colouring/automorphism pairs exceeds the limit {limit}")]
    ColoringSearchTooLarge { work: BigUint, limit: u64 },
    #[error("input is not a tree")]
    NotATree,
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, Copy)]
pub struct SymmetryLimits {
    /// Largest vertex count for which elements are listed explicitly.
    pub explicit_vertices: usize,
    /// Largest group order that is listed explicitly.
    pub explicit_elements: usize,
    /// Cap on `r^n * |Aut|` for the brute-force distinguishing search.
    pub coloring_work: u64,
}

impl Default for SymmetryLimits {
    fn default() -> Self {
        SymmetryLimits {
            explicit_vertices: 20,
            explicit_elements: 1_000_000,
            coloring_work: 2_000_000_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AutomorphismSet {
    #[serde(serialize_with = "ser_big")]
    pub order: BigUint,
    pub generators: Vec<Permutation>,
    /// Base points of the stabiliser chain the order was computed from.
    pub base: Vec<Vertex>,
    /// Every element, sorted, when the group was small enough to list.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<Permutation>>,
    pub orbits: Vec<Vec<Vertex>>,
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl AutomorphismSet {
    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    /// Orbit index of every vertex.
    pub fn orbit_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.orbits.iter().map(Vec::len).sum()];
        for (i, orbit) in self.orbits.iter().enumerate() {
            for &v in orbit {
                of[v] = i;
            }
        }
        of
    }
}

fn orbits(n: usize, generators: &[Permutation]) -> Vec<Vec<Vertex>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while p[root] != root {
            root = p[root];
        }
        let mut x = x;
        while p[x] != root {
            x = std::mem::replace(&mut p[x], root);
        }
        root
    }
    for g in generators {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = out.len();
            out.push(Vec::new());
        }
        out[index[r]].push(v);
    }
    out
}

/// The full automorphism group; elements are listed when the graph and the
/// group fit the default limits.
pub fn automorphisms(g: &Graph) -> AutomorphismSet {
    automorphisms_with(g, &SymmetryLimits::default())
}

pub fn automorphisms_with(g: &Graph, limits: &SymmetryLimits) -> AutomorphismSet {
    let chain = search::StabilizerChain::build(g);
    let order = chain.order();
    let listable = g.n() <= limits.explicit_vertices
        && order
            .to_usize()
            .is_some_and(|o| o <= limits.explicit_elements);
    let generators = chain.generators();
    AutomorphismSet {
        elements: listable.then(|| chain.elements(g.n())),
        orbits: orbits(g.n(), &generators),
        base: chain.base,
        order,
        generators,
    }
}

/// Like [`automorphisms_with`] but fails instead of falling back to the
/// generator-only form.
pub fn automorphisms_explicit(
    g: &Graph,
    limits: &SymmetryLimits,
) -> Result<AutomorphismSet, SymmetryError> {
    if g.n() > limits.explicit_vertices {
        return Err(SymmetryError::TooManyVertices {
            n: g.n(),
            limit: limits.explicit_vertices,
        });
    }
    let set = automorphisms_with(g, limits);
    if set.elements.is_none() {
        return Err(SymmetryError::GroupTooLarge {
            order: set.order,
            limit: limits.explicit_elements,
        });
    }
    Ok(set)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishingResult {
    pub d: usize,
    /// Colour in `1..=d` for every vertex.
    pub witness: Vec<usize>,
}

/// Whether `colors` is fixed by no nontrivial element of `group`.
pub fn is_distinguishing(group: &[Permutation], colors: &[usize]) -> bool {
    group.iter().all(|p| {
        p.iter().enumerate().all(|(v, &w)| v == w)
            || p.iter().enumerate().any(|(v, &w)| colors[v] != colors[w])
    })
}

pub fn distinguishing_number(g: &Graph) -> Result<DistinguishingResult, SymmetryError> {
    distinguishing_number_with(g, &SymmetryLimits::default())
}

pub fn distinguishing_number_with(
    g: &Graph,
    limits: &SymmetryLimits,
) -> Result<DistinguishingResult, SymmetryError> {
    if !g.is_connected() {
        return Err(SymmetryError::Disconnected);
    }
    if g.is_tree() {
        return tree_distinguishing_number(g);
    }
    let set = automorphisms_explicit(g, limits)?;
    let group = set.elements.expect("explicit set lists elements");
    let n = g.n();
    if group.len() == 1 {
        return Ok(DistinguishingResult {
            d: 1,
            witness: vec![1; n],
        });
    }
    for r in 2..=n {
        let work = BigUint::from(r).pow(n as u32) * BigUint::from(group.len());
        if work > BigUint::from(limits.coloring_work) {
            return Err(SymmetryError::ColoringSearchTooLarge {
                work,
                limit: limits.coloring_work,
            });
        }
        let mut colors = vec![1; n];
        loop {
            if is_distinguishing(&group, &colors) {
                return Ok(DistinguishingResult {
                    d: r,
                    witness: colors,
                });
            }
            // odometer over {1..r}^n
            let mut i = 0;
            while i < n && colors[i] == r {
                colors[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("n distinct colours always distinguish")
}
