use std::collections::HashSet;

use super::{Certificate, Configuration, Move, PebblingError};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    pub reachable: bool,
    pub certificate: Option<Certificate>,
    /// Distinct configurations visited.
    pub states: u64,
}

/// `Σ f(u) 2^(D - d(u, target))` against `2^D`. The weighted sum never grows
/// under a move, so falling short means the target is out of reach.
struct Potential {
    scale: Vec<u128>,
    need: u128,
}

impl Potential {
    fn new(dist: &[usize]) -> Option<Self> {
        let d = *dist.iter().max()?;
        if d > 80 {
            return None;
        }
        Some(Potential {
            scale: dist.iter().map(|&x| 1u128 << (d - x)).collect(),
            need: 1u128 << d,
        })
    }

    fn may_reach(&self, f: &[u32]) -> bool {
        let total: u128 = f
            .iter()
            .zip(&self.scale)
            .map(|(&c, &s)| u128::from(c) * s)
            .sum();
        total >= self.need
    }
}

struct Frame {
    state: Vec<u32>,
    moves: Vec<Move>,
    next: usize,
    incoming: Option<Move>,
}

/// Exact decision by depth-first search over configurations; every move lowers
/// the weight by one so the space is finite. Visited states are memoised.
/// Exceeding `max_states` is an error, never a negative answer.
pub fn reachable_to(
    g: &Graph,
    f: &Configuration,
    target: Vertex,
    max_states: u64,
    want_certificate: bool,
) -> Result<Reachability, PebblingError> {
    f.check_against(g)?;
    if target >= g.n() {
        return Err(PebblingError::InvalidVertex {
            vertex: target,
            n: g.n(),
        });
    }
    if f[target] >= 1 {
        return Ok(Reachability {
            reachable: true,
            certificate: want_certificate.then(|| Certificate {
                target,
                moves: vec![],
            }),
            states: 0,
        });
    }
    let dist: Vec<usize> = g
        .distances_from(target)
        .into_iter()
        .map(|d| d.ok_or(PebblingError::Disconnected))
        .collect::<Result<_, _>>()?;
    let potential = Potential::new(&dist);

    // moves toward the target first
    let moves_from = |state: &[u32]| {
        let mut moves: Vec<Move> = (0..state.len())
            .filter(|&u| state[u] >= 2)
            .flat_map(|u| g.neighbors(u).iter().map(move |&to| Move { from: u, to }))
            .collect();
        moves.sort_by_key(|m| (dist[m.to], dist[m.from], m.from, m.to));
        moves
    };

    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    let start = f.counts().to_vec();
    if potential.as_ref().is_some_and(|p| !p.may_reach(&start)) {
        return Ok(Reachability {
            reachable: false,
            certificate: None,
            states: 0,
        });
    }
    visited.insert(start.clone());
    let mut stack = vec![Frame {
        moves: moves_from(&start),
        state: start,
        next: 0,
        incoming: None,
    }];

    while let Some(top) = stack.last_mut() {
        let Some(&m) = top.moves.get(top.next) else {
            stack.pop();
            continue;
        };
        top.next += 1;
        let mut child = top.state.clone();
        child[m.from] -= 2;
        child[m.to] += 1;
        if child[target] >= 1 {
            let certificate = want_certificate.then(|| {
                let moves = stack
                    .iter()
                    .filter_map(|fr| fr.incoming)
                    .chain(std::iter::once(m))
                    .collect();
                Certificate { target, moves }
            });
            return Ok(Reachability {
                reachable: true,
                certificate,
                states: visited.len() as u64,
            });
        }
        if potential.as_ref().is_some_and(|p| !p.may_reach(&child)) || visited.contains(&child) {
            continue;
        }
        if visited.len() as u64 >= max_states {
            return Err(PebblingError::BudgetExceeded { limit: max_states });
        }
        visited.insert(child.clone());
        stack.push(Frame {
            moves: moves_from(&child),
            state: child,
            next: 0,
            incoming: Some(m),
        });
    }
    Ok(Reachability {
        reachable: false,
        certificate: None,
        states: visited.len() as u64,
    })
}
