use serde::Serialize;

use crate::domination::{domination_number, roman_domination_number, DominationError};
use crate::graph::Graph;

/// Upper bounds on `π*_2`: `π*_2 ≤ γ_R ≤ 2γ` for every graph, and for trees
/// `π*_2 ≤ n − l + 1` (order at least 3) and `π*_2 ≤ ⌈5n/7⌉` (order at least 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub gamma: u64,
    pub roman: u64,
    pub two_gamma: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree_n_minus_l_plus_1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub five_n_over_7: Option<u64>,
}

impl BoundReport {
    pub fn tightest(&self) -> u64 {
        [
            Some(self.roman),
            Some(self.two_gamma),
            self.tree_n_minus_l_plus_1,
            self.five_n_over_7,
        ]
        .into_iter()
        .flatten()
        .min()
        .unwrap()
    }

    /// Whether `pi2` respects every bound in the report.
    pub fn admits(&self, pi2: u64) -> bool {
        pi2 <= self.tightest()
    }
}

pub fn upper_bound_report(g: &Graph) -> Result<BoundReport, DominationError> {
    let (gamma, _) = domination_number(g)?;
    let (roman, _) = roman_domination_number(g)?;
    let n = g.n() as u64;
    let tree = g.is_tree();
    Ok(BoundReport {
        gamma: gamma as u64,
        roman,
        two_gamma: 2 * gamma as u64,
        tree_n_minus_l_plus_1: (tree && n >= 3).then(|| n - g.leaf_count() as u64 + 1),
        five_n_over_7: (tree && n >= 2).then(|| (5 * n).div_ceil(7)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{alkane, path};

    #[test]
    fn examples() {
        let b = upper_bound_report(&path(6)).unwrap();
        assert_eq!(b.roman, 4);
        assert_eq!(b.gamma, 2);
        let b = upper_bound_report(&alkane(3)).unwrap();
        assert_eq!(b.tree_n_minus_l_plus_1, Some(4));
        let b = upper_bound_report(&alkane(5)).unwrap();
        assert_eq!(b.tree_n_minus_l_plus_1, Some(6));
        let b = upper_bound_report(&path(2)).unwrap();
        assert_eq!(b.tree_n_minus_l_plus_1, None);
        assert_eq!(b.five_n_over_7, Some(2));
    }
}
