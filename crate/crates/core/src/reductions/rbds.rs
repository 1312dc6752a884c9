//! Red-blue dominating set and its reduction to MDC.
//!
//! The blue side is doubled into copies `B1`, `B2`. Each blue copy reaches
//! its red neighbours through a binary tree of height `h = log2|R|` whose
//! leaves are exactly those neighbours. Copy `i` is complete to a hub set
//! `U^i` of `k + 1` vertices carrying `d - l` pendants each, and both copies
//! of `b` are joined to a link set `X_b` of `k + 1` vertices carrying
//! `d - 1` pendants each, with `k = 2|B| h` and `d = 2|B| (h + k + 2)`.
//! Hubs and links are then exactly the vertices above degree `d`.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde_json::json;
use thiserror::Error;

use super::VertexRole;
use crate::brute::binomial;
use crate::graph::{Edge, Graph, Vertex};
use crate::instance::{Certificate, Instance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RbdsError {
    #[error("edge ({0}, {1}) outside the red/blue index ranges")]
    OutOfRange(usize, usize),
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("assumption l + 3 < |B| violated: l = {l}, |B| = {blue}")]
    BudgetTooLarge { l: usize, blue: usize },
    #[error("assumption violated: red vertex {red} is adjacent to {degree} of the {blue} blue vertices (at most |B| - 2 allowed)")]
    NearlyUniversalRed { red: usize, degree: usize, blue: usize },
    #[error("brute force refused: {subsets} subsets exceed the cap of {cap}")]
    TooLarge { subsets: u128, cap: u128 },
    #[error("not a dominating set: {0}")]
    InvalidSolution(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsInstance {
    red_neighbors: Vec<Vec<usize>>,
    blue: usize,
    pub budget: usize,
}

impl RbdsInstance {
    /// `edges` are `(red, blue)` index pairs; repeated pairs collapse.
    pub fn new<I>(red: usize, blue: usize, edges: I, budget: usize) -> Result<Self, RbdsError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut red_neighbors = vec![Vec::new(); red];
        for (r, b) in edges {
            if r >= red || b >= blue {
                return Err(RbdsError::OutOfRange(r, b));
            }
            red_neighbors[r].push(b);
        }
        for list in &mut red_neighbors {
            list.sort_unstable();
            list.dedup();
        }
        Ok(RbdsInstance {
            red_neighbors,
            blue,
            budget,
        })
    }

    pub fn red_count(&self) -> usize {
        self.red_neighbors.len()
    }

    pub fn blue_count(&self) -> usize {
        self.blue
    }

    pub fn neighbors(&self, r: usize) -> &[usize] {
        &self.red_neighbors[r]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.red_neighbors
            .iter()
            .enumerate()
            .flat_map(|(r, bs)| bs.iter().map(move |&b| (r, b)))
            .collect()
    }

    pub fn dominates(&self, chosen: &[usize]) -> bool {
        let mut hit = vec![false; self.blue];
        for &r in chosen {
            for &b in &self.red_neighbors[r] {
                hit[b] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// The same instance with every blue vertex duplicated: blue `b` becomes
/// `b` and `b + |B|`, both with the neighbourhood of `b`.
pub fn double_blue(r: &RbdsInstance) -> RbdsInstance {
    let blue = r.blue;
    let edges = r
        .edges()
        .into_iter()
        .flat_map(|(x, b)| [(x, b), (x, b + blue)]);
    RbdsInstance::new(r.red_count(), 2 * blue, edges, r.budget).expect("indices in range")
}

/// Smallest dominating set of size at most `l`, lexicographically first
/// among those of that size.
pub fn solve_rbds_brute(r: &RbdsInstance, cap: u128) -> Result<Option<Vec<usize>>, RbdsError> {
    let n = r.red_count();
    let subsets = (0..=r.budget.min(n)).map(|s| binomial(n, s)).fold(0u128, u128::saturating_add);
    if subsets > cap {
        return Err(RbdsError::TooLarge { subsets, cap });
    }
    Ok((0..=r.budget.min(n))
        .flat_map(|size| (0..n).combinations(size))
        .find(|chosen| r.dominates(chosen)))
}

/// An instance meeting the standing assumptions of the reduction: no red
/// twins, `|R|` a power of two (at least 2), `l + 3 < |B|`, and no red vertex
/// adjacent to more than `|B| - 2` blue vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreprocessedRbds {
    instance: RbdsInstance,
    /// Original red index of every red vertex; `None` for padding.
    origin: Vec<Option<usize>>,
}

impl PreprocessedRbds {
    pub fn instance(&self) -> &RbdsInstance {
        &self.instance
    }

    pub fn origin(&self) -> &[Option<usize>] {
        &self.origin
    }

    pub fn log2_red(&self) -> usize {
        self.instance.red_count().trailing_zeros() as usize
    }
}

pub fn preprocess_rbds(r: &RbdsInstance) -> Result<PreprocessedRbds, RbdsError> {
    if r.budget == 0 {
        return Err(RbdsError::ZeroBudget);
    }
    if r.budget + 3 >= r.blue {
        return Err(RbdsError::BudgetTooLarge {
            l: r.budget,
            blue: r.blue,
        });
    }
    if let Some((red, nbrs)) = r
        .red_neighbors
        .iter()
        .enumerate()
        .find(|(_, nbrs)| nbrs.len() + 1 >= r.blue)
    {
        return Err(RbdsError::NearlyUniversalRed {
            red,
            degree: nbrs.len(),
            blue: r.blue,
        });
    }
    let mut seen = BTreeMap::new();
    let mut red_neighbors = Vec::new();
    let mut origin = Vec::new();
    for (x, nbrs) in r.red_neighbors.iter().enumerate() {
        if seen.insert(nbrs.clone(), x).is_none() {
            red_neighbors.push(nbrs.clone());
            origin.push(Some(x));
        }
    }
    let padded = red_neighbors.len().next_power_of_two().max(2);
    while red_neighbors.len() < padded {
        red_neighbors.push(Vec::new());
        origin.push(None);
    }
    Ok(PreprocessedRbds {
        instance: RbdsInstance {
            red_neighbors,
            blue: r.blue,
            budget: r.budget,
        },
        origin,
    })
}

/// Binary tree below one blue copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetTree {
    pub root: Vertex,
    /// Vertex sequence from the root down to each red leaf.
    pub paths: BTreeMap<usize, Vec<Vertex>>,
}

impl GadgetTree {
    pub fn path_edges(&self, red: usize) -> Option<Vec<Edge>> {
        self.paths
            .get(&red)
            .map(|p| p.windows(2).map(|w| Edge::new(w[0], w[1])).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbdsReduction {
    pub instance: Instance,
    pub roles: Vec<VertexRole>,
    /// Tree height `log2|R|`.
    pub height: usize,
    pub red: usize,
    pub blue: usize,
    pub budget: usize,
    /// `trees[b][c]` hangs below copy `c + 1` of blue vertex `b`.
    pub trees: Vec<[GadgetTree; 2]>,
}

impl RbdsReduction {
    pub fn blue_copy(&self, b: usize, copy: u8) -> Vertex {
        self.red + (copy as usize - 1) * self.blue + b
    }

    pub fn metadata(&self) -> serde_json::Value {
        json!({
            "reduction": "rbds",
            "red": self.red,
            "blue": self.blue,
            "l": self.budget,
            "height": self.height,
            "k": self.instance.k,
            "d": self.instance.d,
            "roles": self.roles,
        })
    }
}

pub fn reduce_rbds_to_mdc(p: &PreprocessedRbds) -> RbdsReduction {
    let inst = &p.instance;
    let (nr, nb, l) = (inst.red_count(), inst.blue, inst.budget);
    let h = p.log2_red();
    let k = 2 * nb * h;
    let d = 2 * nb * (h + k + 2);

    let mut roles: Vec<VertexRole> = (0..nr).map(|index| VertexRole::Red { index }).collect();
    for copy in 1..=2u8 {
        roles.extend((0..nb).map(|index| VertexRole::Blue { index, copy }));
    }
    let blue_copy = |b: usize, copy: u8| nr + (copy as usize - 1) * nb + b;

    let mut blue_neighbors = vec![Vec::new(); nb];
    for (r, b) in inst.edges() {
        blue_neighbors[b].push(r);
    }

    let mut edges: Vec<Edge> = Vec::new();
    let mut trees = Vec::with_capacity(nb);
    for (b, reds) in blue_neighbors.iter().enumerate() {
        let mut pair = Vec::with_capacity(2);
        for copy in 1..=2u8 {
            let root = blue_copy(b, copy);
            // Inner node at depth t covers the leaf slots sharing prefix r >> (h - t).
            let mut inner: BTreeMap<(usize, usize), Vertex> = BTreeMap::new();
            let mut paths = BTreeMap::new();
            for &r in reds {
                let mut path = vec![root];
                for depth in 1..h {
                    let key = (depth, r >> (h - depth));
                    let v = *inner.entry(key).or_insert_with(|| {
                        roles.push(VertexRole::TreeInternal { blue: b, copy, depth });
                        roles.len() - 1
                    });
                    path.push(v);
                }
                path.push(r);
                for w in path.windows(2) {
                    edges.push(Edge::new(w[0], w[1]));
                }
                paths.insert(r, path);
            }
            pair.push(GadgetTree { root, paths });
        }
        let second = pair.pop().unwrap();
        let first = pair.pop().unwrap();
        trees.push([first, second]);
    }

    let mut hubs = [Vec::new(), Vec::new()];
    for copy in 1..=2u8 {
        for index in 0..=k {
            let u = roles.len();
            roles.push(VertexRole::Hub { copy, index });
            hubs[copy as usize - 1].push(u);
            for b in 0..nb {
                edges.push(Edge::new(u, blue_copy(b, copy)));
            }
        }
    }
    let mut links = Vec::new();
    for b in 0..nb {
        for index in 0..=k {
            let x = roles.len();
            roles.push(VertexRole::Link { blue: b, index });
            links.push(x);
            edges.push(Edge::new(x, blue_copy(b, 1)));
            edges.push(Edge::new(x, blue_copy(b, 2)));
        }
    }
    let mut attach = |owner: Vertex, count: usize| {
        for _ in 0..count {
            edges.push(Edge::new(owner, roles.len()));
            roles.push(VertexRole::Pendant { of: owner });
        }
    };
    for &u in hubs.iter().flatten() {
        attach(u, d - l);
    }
    for &x in &links {
        attach(x, d - 1);
    }

    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(roles.len(), edges).expect("reduction builds a simple graph");
    RbdsReduction {
        instance: Instance::new(graph, k, d),
        roles,
        height: h,
        red: nr,
        blue: nb,
        budget: l,
        trees,
    }
}

/// Lifts a dominating set (in preprocessed red indices) to a certificate:
/// after dropping redundant members, each blue vertex is assigned to its
/// smallest dominator and both of its tree paths towards that dominator are
/// contracted.
pub fn rbds_solution_to_certificate(
    red: &RbdsReduction,
    p: &PreprocessedRbds,
    chosen: &[usize],
) -> Result<Certificate, RbdsError> {
    let inst = &p.instance;
    let mut members: Vec<usize> = chosen.iter().copied().sorted().dedup().collect();
    if let Some(&r) = members.iter().find(|&&r| r >= inst.red_count()) {
        return Err(RbdsError::InvalidSolution(format!("red index {r} out of range")));
    }
    if members.len() > inst.budget {
        return Err(RbdsError::InvalidSolution(format!(
            "{} vertices exceed the budget {}",
            members.len(),
            inst.budget
        )));
    }
    if !inst.dominates(&members) {
        return Err(RbdsError::InvalidSolution(format!("{members:?} misses a blue vertex")));
    }
    let mut i = 0;
    while i < members.len() {
        let mut rest = members.clone();
        rest.remove(i);
        if inst.dominates(&rest) {
            members = rest;
        } else {
            i += 1;
        }
    }
    let mut f = Vec::new();
    for (b, pair) in red.trees.iter().enumerate() {
        let owner = members
            .iter()
            .copied()
            .find(|&r| inst.red_neighbors[r].binary_search(&b).is_ok())
            .expect("dominating set covers every blue vertex");
        for tree in pair {
            f.extend(tree.path_edges(owner).expect("dominator is a leaf of the tree"));
        }
    }
    Ok(Certificate::new(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::verify_solution;

    #[test]
    fn brute_examples() {
        let r = RbdsInstance::new(1, 2, [(0, 0), (0, 1)], 1).unwrap();
        assert_eq!(solve_rbds_brute(&r, 1000).unwrap(), Some(vec![0]));
        let r = RbdsInstance::new(1, 2, [(0, 0)], 1).unwrap();
        assert_eq!(solve_rbds_brute(&r, 1000).unwrap(), None);
    }

    #[test]
    fn preprocessing_examples() {
        let r = RbdsInstance::new(2, 6, [(0, 0), (1, 0)], 1).unwrap();
        let p = preprocess_rbds(&r).unwrap();
        assert_eq!(p.instance().red_count(), 2);
        assert_eq!(p.origin(), &[Some(0), None]);

        let r = RbdsInstance::new(3, 6, [(0, 0), (1, 1), (2, 2)], 1).unwrap();
        assert_eq!(preprocess_rbds(&r).unwrap().instance().red_count(), 4);

        let r = RbdsInstance::new(3, 5, [(0, 0), (1, 1), (2, 2)], 2).unwrap();
        assert_eq!(
            preprocess_rbds(&r),
            Err(RbdsError::BudgetTooLarge { l: 2, blue: 5 })
        );

        let r = RbdsInstance::new(2, 5, (0..4).map(|b| (0, b)), 1).unwrap();
        assert!(matches!(
            preprocess_rbds(&r),
            Err(RbdsError::NearlyUniversalRed { red: 0, degree: 4, blue: 5 })
        ));
    }

    fn small() -> PreprocessedRbds {
        // Reds 0..3 over blues 0..4; {0, 2} dominates.
        let edges = [(0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 0), (3, 4)];
        preprocess_rbds(&RbdsInstance::new(4, 5, edges, 1).unwrap()).unwrap()
    }

    #[test]
    fn parameters_for_four_by_five() {
        let red = reduce_rbds_to_mdc(&small());
        assert_eq!(red.height, 2);
        assert_eq!(red.instance.k, 20);
        assert_eq!(red.instance.d, 240);
    }

    #[test]
    fn tree_paths_have_full_height() {
        let red = reduce_rbds_to_mdc(&small());
        let g = &red.instance.graph;
        for pair in &red.trees {
            for tree in pair {
                for (r, path) in &tree.paths {
                    assert_eq!(path.len(), red.height + 1);
                    assert_eq!(path.last(), Some(r));
                    assert!(path.windows(2).all(|w| g.has_edge(w[0], w[1])));
                }
            }
        }
    }

    #[test]
    fn lifted_certificate_verifies() {
        let p = small();
        let mut p2 = p.clone();
        p2.instance.budget = 2;
        let red = reduce_rbds_to_mdc(&p2);
        let chosen = solve_rbds_brute(p2.instance(), 1 << 20).unwrap().unwrap();
        assert_eq!(chosen, vec![0, 2]);
        let cert = rbds_solution_to_certificate(&red, &p2, &chosen).unwrap();
        assert_eq!(cert.len(), 2 * 5 * 2);
        assert!(verify_solution(&red.instance, &cert));
        assert!(rbds_solution_to_certificate(&red, &p2, &[0]).is_err());
    }
}
