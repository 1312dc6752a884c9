//! Edge contraction and witness structures.
//!
//! Contracting a set of edges `F` merges every connected component of the
//! subgraph `(V(F), F)` into a single vertex. The result carries the map
//! `psi` from original to contracted vertices and its inverse, the witness
//! sets. Contracted vertices are numbered densely in order of the smallest
//! original vertex in their witness set.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    pub contracted: Graph,
    /// `psi[v]` is the contracted vertex that original vertex `v` maps to.
    pub psi: Vec<Vertex>,
    /// `witness_sets[h]` lists, sorted, the original vertices mapped to `h`.
    pub witness_sets: Vec<Vec<Vertex>>,
}

impl ContractionResult {
    /// The trivial contraction of `g` onto itself.
    pub fn identity(g: &Graph) -> Self {
        ContractionResult {
            contracted: g.clone(),
            psi: g.vertices().collect(),
            witness_sets: g.vertices().map(|v| vec![v]).collect(),
        }
    }

    /// Composes `self: G -> H1` with `next: H1 -> H2` into `G -> H2`.
    pub fn compose(&self, next: &ContractionResult) -> ContractionResult {
        assert_eq!(
            self.contracted.vertex_count(),
            next.psi.len(),
            "contractions do not chain"
        );
        let psi: Vec<Vertex> = self.psi.iter().map(|&h| next.psi[h]).collect();
        let mut witness_sets = vec![Vec::new(); next.contracted.vertex_count()];
        for (v, &h) in psi.iter().enumerate() {
            witness_sets[h].push(v);
        }
        ContractionResult {
            contracted: next.contracted.clone(),
            psi,
            witness_sets,
        }
    }

    pub fn original_vertex_count(&self) -> usize {
        self.psi.len()
    }

    /// Spanning-tree edges of every witness set, in original vertex ids.
    /// Contracting them reproduces this result.
    pub fn spanning_edges(&self, original: &Graph) -> Vec<Edge> {
        let mut f: Vec<Edge> = self
            .witness_sets
            .iter()
            .filter(|w| w.len() > 1)
            .flat_map(|w| bfs_spanning_tree(original, w))
            .collect();
        f.sort_unstable();
        f
    }
}

/// BFS spanning tree of `g[set]` rooted at the minimum vertex of `set`.
/// If `g[set]` is disconnected, only the root's component is spanned.
pub fn bfs_spanning_tree(g: &Graph, set: &[Vertex]) -> Vec<Edge> {
    let Some(&root) = set.iter().min() else {
        return Vec::new();
    };
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    let mut tree = Vec::with_capacity(set.len().saturating_sub(1));
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                tree.push(Edge::new(u, w));
                queue.push_back(w);
            }
        }
    }
    tree
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
}

fn check_edges(g: &Graph, f: &[Edge]) -> Result<(), ContractionError> {
    match f.iter().find(|e| !g.contains_edge(**e)) {
        Some(&e) => Err(ContractionError::NotAnEdge(e)),
        None => Ok(()),
    }
}

/// Dense `psi` for the components of `(V(F), F)`, numbered by minimum vertex.
fn partition_map(n: usize, f: &[Edge]) -> (Vec<Vertex>, usize) {
    let mut sets = DisjointSets::new(n);
    for e in f {
        sets.union(e.lo(), e.hi());
    }
    let mut label = vec![usize::MAX; n];
    let mut psi = vec![0; n];
    let mut next = 0;
    for (v, slot) in psi.iter_mut().enumerate() {
        let root = sets.find(v);
        if label[root] == usize::MAX {
            label[root] = next;
            next += 1;
        }
        *slot = label[root];
    }
    (psi, next)
}

/// Quotient graph of `g` under a dense vertex map `psi` onto `0..count`.
pub(crate) fn quotient(g: &Graph, psi: &[Vertex], count: usize) -> Graph {
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| psi[e.lo()] != psi[e.hi()])
        .map(|e| Edge::new(psi[e.lo()], psi[e.hi()]))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_sorted_edges(count, edges)
}

fn result_from_psi(g: &Graph, psi: Vec<Vertex>, count: usize) -> ContractionResult {
    let mut witness_sets = vec![Vec::new(); count];
    for (v, &h) in psi.iter().enumerate() {
        witness_sets[h].push(v);
    }
    ContractionResult {
        contracted: quotient(g, &psi, count),
        psi,
        witness_sets,
    }
}

pub fn contract_edge(g: &Graph, e: Edge) -> Result<ContractionResult, ContractionError> {
    contract_edge_set(g, &[e])
}

pub fn contract_edge_set(g: &Graph, f: &[Edge]) -> Result<ContractionResult, ContractionError> {
    check_edges(g, f)?;
    let (psi, count) = partition_map(g.vertex_count(), f);
    Ok(result_from_psi(g, psi, count))
}

/// Maximum degree of `g / f` without materialising the contracted graph.
pub fn contracted_max_degree(g: &Graph, f: &[Edge]) -> Result<usize, ContractionError> {
    check_edges(g, f)?;
    let (psi, count) = partition_map(g.vertex_count(), f);
    Ok(quotient_max_degree(g, &psi, count))
}

pub(crate) fn quotient_max_degree(g: &Graph, psi: &[Vertex], count: usize) -> usize {
    let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); count];
    for (v, &h) in psi.iter().enumerate() {
        members[h].push(v);
    }
    let mut stamp = vec![usize::MAX; count];
    let mut best = 0;
    for (h, ws) in members.iter().enumerate() {
        if ws.len() == 1 {
            // Singletons keep distinct neighbours unless some of them merged.
            let v = ws[0];
            if g.neighbors(v).iter().all(|&w| members[psi[w]].len() == 1) {
                best = best.max(g.degree(v));
                continue;
            }
        }
        let mut deg = 0;
        stamp[h] = h;
        for &v in ws {
            for &w in g.neighbors(v) {
                let t = psi[w];
                if stamp[t] != h {
                    stamp[t] = h;
                    deg += 1;
                }
            }
        }
        best = best.max(deg);
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessViolation {
    #[error("psi has length {got}, expected {expected}")]
    MapLength { got: usize, expected: usize },
    #[error("psi maps vertex {vertex} to {target}, outside the contracted graph")]
    MapOutOfRange { vertex: Vertex, target: Vertex },
    #[error("witness sets disagree with psi at contracted vertex {0}")]
    InconsistentSets(Vertex),
    #[error("witness set of contracted vertex {0} is empty")]
    EmptyWitnessSet(Vertex),
    #[error("witness set of contracted vertex {0} is not connected")]
    DisconnectedWitnessSet(Vertex),
    #[error("contracted edge ({0}, {1}) has no original edge between its witness sets")]
    SpuriousEdge(Vertex, Vertex),
    #[error("witness sets of {0} and {1} are adjacent but the contracted edge is missing")]
    MissingEdge(Vertex, Vertex),
}

/// Checks that `r` describes a contraction of `g`: the witness sets partition
/// `V(g)` consistently with `psi`, each is nonempty and connected, and the
/// contracted graph has an edge exactly between adjacent witness sets.
pub fn validate_witness(g: &Graph, r: &ContractionResult) -> Result<(), WitnessViolation> {
    let n = g.vertex_count();
    let h_count = r.contracted.vertex_count();
    if r.psi.len() != n {
        return Err(WitnessViolation::MapLength {
            got: r.psi.len(),
            expected: n,
        });
    }
    if let Some((v, &t)) = r.psi.iter().enumerate().find(|(_, &t)| t >= h_count) {
        return Err(WitnessViolation::MapOutOfRange { vertex: v, target: t });
    }
    if r.witness_sets.len() != h_count {
        return Err(WitnessViolation::InconsistentSets(r.witness_sets.len().min(h_count)));
    }
    let mut covered = vec![false; n];
    for (h, ws) in r.witness_sets.iter().enumerate() {
        if ws.is_empty() {
            return Err(WitnessViolation::EmptyWitnessSet(h));
        }
        for &v in ws {
            if v >= n || r.psi[v] != h || covered[v] {
                return Err(WitnessViolation::InconsistentSets(h));
            }
            covered[v] = true;
        }
    }
    if covered.iter().any(|c| !c) {
        let v = covered.iter().position(|c| !c).unwrap();
        return Err(WitnessViolation::InconsistentSets(r.psi[v]));
    }
    for (h, ws) in r.witness_sets.iter().enumerate() {
        if !g.is_connected_set(ws) {
            return Err(WitnessViolation::DisconnectedWitnessSet(h));
        }
    }
    let expected = quotient(g, &r.psi, h_count);
    if let Some(e) = r
        .contracted
        .edges()
        .iter()
        .find(|e| !expected.contains_edge(**e))
    {
        return Err(WitnessViolation::SpuriousEdge(e.lo(), e.hi()));
    }
    if let Some(e) = expected
        .edges()
        .iter()
        .find(|e| !r.contracted.contains_edge(**e))
    {
        return Err(WitnessViolation::MissingEdge(e.lo(), e.hi()));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WitnessStats {
    /// Witness sets with at least two vertices.
    pub big_count: usize,
    /// Total number of vertices inside big witness sets.
    pub big_vertex_total: usize,
}

pub fn witness_stats(r: &ContractionResult) -> WitnessStats {
    r.witness_sets
        .iter()
        .filter(|w| w.len() >= 2)
        .fold(WitnessStats::default(), |acc, w| WitnessStats {
            big_count: acc.big_count + 1,
            big_vertex_total: acc.big_vertex_total + w.len(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn contract_single_edges() {
        let tri = complete(3);
        let r = contract_edge(&tri, Edge::new(0, 1)).unwrap();
        assert_eq!(r.contracted, path(2));
        assert_eq!(r.psi, vec![0, 0, 1]);

        let r = contract_edge(&path(3), Edge::new(0, 1)).unwrap();
        assert_eq!(r.contracted.vertex_count(), 2);
        assert_eq!(r.contracted.edge_count(), 1);

        for &e in complete(4).edges() {
            let r = contract_edge(&complete(4), e).unwrap();
            assert_eq!(r.contracted.degrees(), vec![2, 2, 2]);
        }
        assert_eq!(
            contract_edge(&path(3), Edge::new(0, 2)),
            Err(ContractionError::NotAnEdge(Edge::new(0, 2)))
        );
    }

    #[test]
    fn merged_vertex_takes_min_slot() {
        let r = contract_edge(&path(4), Edge::new(1, 2)).unwrap();
        assert_eq!(r.psi, vec![0, 1, 1, 2]);
        assert_eq!(r.witness_sets, vec![vec![0], vec![1, 2], vec![3]]);
    }

    #[test]
    fn contract_sets() {
        let p4 = path(4);
        let r = contract_edge_set(&p4, p4.edges()).unwrap();
        assert_eq!(r.contracted.vertex_count(), 1);
        assert_eq!(r.witness_sets, vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            witness_stats(&r),
            WitnessStats { big_count: 1, big_vertex_total: 4 }
        );

        let r = contract_edge_set(&c4(), &[Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert_eq!(r.contracted, path(2));
        assert_eq!(r.witness_sets, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(
            witness_stats(&r),
            WitnessStats { big_count: 2, big_vertex_total: 4 }
        );

        let g = c4();
        let r = contract_edge_set(&g, &[]).unwrap();
        assert_eq!(r.contracted, g);
        assert!(r.witness_sets.iter().all(|w| w.len() == 1));
        assert_eq!(witness_stats(&r), WitnessStats::default());
    }

    #[test]
    fn witness_validation() {
        let g = c4();
        let r = contract_edge_set(&g, &[Edge::new(0, 1)]).unwrap();
        assert_eq!(validate_witness(&g, &r), Ok(()));

        let p3 = path(3);
        let bad = ContractionResult {
            contracted: path(2),
            psi: vec![0, 1, 0],
            witness_sets: vec![vec![0, 2], vec![1]],
        };
        assert_eq!(
            validate_witness(&p3, &bad),
            Err(WitnessViolation::DisconnectedWitnessSet(0))
        );

        let missing = ContractionResult {
            contracted: Graph::empty(2),
            psi: vec![0, 0, 1],
            witness_sets: vec![vec![0, 1], vec![2]],
        };
        assert_eq!(
            validate_witness(&p3, &missing),
            Err(WitnessViolation::MissingEdge(0, 1))
        );
    }

    #[test]
    fn compose_matches_joint_contraction() {
        let g = path(5);
        let first = contract_edge(&g, Edge::new(3, 4)).unwrap();
        let second = contract_edge(&first.contracted, Edge::new(0, 1)).unwrap();
        let joint = contract_edge_set(&g, &[Edge::new(0, 1), Edge::new(3, 4)]).unwrap();
        assert_eq!(first.compose(&second), joint);
    }

    #[test]
    fn fast_max_degree_agrees() {
        let g = c4();
        let f = [Edge::new(0, 1)];
        assert_eq!(
            contracted_max_degree(&g, &f).unwrap(),
            contract_edge_set(&g, &f).unwrap().contracted.max_degree()
        );
    }

    #[test]
    fn spanning_edges_reproduce_partition() {
        let g = complete(5);
        let r = contract_edge_set(&g, &[Edge::new(0, 3), Edge::new(3, 4), Edge::new(0, 4)]).unwrap();
        let f = r.spanning_edges(&g);
        assert_eq!(f, vec![Edge::new(0, 3), Edge::new(0, 4)]);
        assert_eq!(contract_edge_set(&g, &f).unwrap(), r);
    }
}
