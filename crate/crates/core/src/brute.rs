//! Exhaustive baseline: try every edge subset of size at most `k`, smallest
//! first, in lexicographic order. This is the ground truth every other solver
//! is tested against, so it deliberately does no pruning.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::Edge;
use crate::instance::{
    check_label_constraints, Certificate, Instance, LabeledInstance,
};
use crate::contraction::contracted_max_degree;

pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BruteError {
    #[error("instance too large for oracle: {subsets} subsets exceed the cap of {cap}")]
    TooLarge { subsets: u128, cap: u128 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    /// Maximum number of candidate subsets the solver agrees to enumerate.
    pub cap: u128,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BruteOutcome {
    pub certificate: Option<Certificate>,
    /// Number of candidate subsets examined.
    pub subsets_checked: u64,
}

pub(crate) fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

fn subsets_up_to(m: usize, k: usize) -> u128 {
    (0..=k.min(m)).map(|s| binomial(m, s)).fold(0u128, u128::saturating_add)
}

fn enumerate<P>(candidates: &[Edge], k: usize, cap: u128, mut accept: P) -> Result<BruteOutcome, BruteError>
where
    P: FnMut(&[Edge]) -> bool,
{
    let subsets = subsets_up_to(candidates.len(), k);
    if subsets > cap {
        return Err(BruteError::TooLarge { subsets, cap });
    }
    let mut checked = 0u64;
    for size in 0..=k.min(candidates.len()) {
        for combo in candidates.iter().copied().combinations(size) {
            checked += 1;
            if accept(&combo) {
                return Ok(BruteOutcome {
                    certificate: Some(Certificate::new(combo)),
                    subsets_checked: checked,
                });
            }
        }
    }
    Ok(BruteOutcome {
        certificate: None,
        subsets_checked: checked,
    })
}

/// Returns the first solution in (size, lexicographic) order, or `None`.
pub fn solve_brute(inst: &Instance, opts: &BruteOptions) -> Result<BruteOutcome, BruteError> {
    let g = &inst.graph;
    enumerate(g.edges(), inst.k, opts.cap, |f| {
        contracted_max_degree(g, f).expect("subset of graph edges") <= inst.d
    })
}

/// Labeled variant: only edges between red vertices are candidates, and a
/// solution must fully span every red component it touches.
pub fn solve_labeled_brute(
    li: &LabeledInstance,
    opts: &BruteOptions,
) -> Result<BruteOutcome, BruteError> {
    let g = &li.graph;
    let red_edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| li.is_red(e.lo()) && li.is_red(e.hi()))
        .collect();
    enumerate(&red_edges, li.k, opts.cap, |f| {
        contracted_max_degree(g, f).expect("subset of graph edges") <= li.d
            && check_label_constraints(li, &Certificate::new(f.iter().copied())).is_ok()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn star3() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap()
    }

    fn solve(g: Graph, k: usize, d: usize) -> Option<Certificate> {
        solve_brute(&Instance::new(g, k, d), &BruteOptions::default())
            .unwrap()
            .certificate
    }

    #[test]
    fn unlabeled_examples() {
        assert_eq!(solve(star3(), 1, 2), Some(Certificate::new([Edge::new(0, 1)])));
        assert_eq!(solve(star3(), 0, 2), None);
        assert_eq!(solve(k4(), 1, 2), Some(Certificate::new([Edge::new(0, 1)])));
    }

    #[test]
    fn labeled_examples() {
        let opts = BruteOptions::default();
        let li = LabeledInstance::from_red_set(star3(), &[0, 1], 1, 2);
        assert_eq!(
            solve_labeled_brute(&li, &opts).unwrap().certificate,
            Some(Certificate::new([Edge::new(0, 1)]))
        );
        let li = LabeledInstance::from_red_set(star3(), &[1, 2], 1, 2);
        assert_eq!(solve_labeled_brute(&li, &opts).unwrap().certificate, None);
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let li = LabeledInstance::from_red_set(c5, &[0, 2, 3], 0, 2);
        assert_eq!(
            solve_labeled_brute(&li, &opts).unwrap().certificate,
            Some(Certificate::empty())
        );
    }

    #[test]
    fn resource_guard() {
        let opts = BruteOptions { cap: 5 };
        let err = solve_brute(&Instance::new(k4(), 2, 0), &opts).unwrap_err();
        assert_eq!(err, BruteError::TooLarge { subsets: 1 + 6 + 15, cap: 5 });
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(30, 15), 155_117_520);
    }
}
