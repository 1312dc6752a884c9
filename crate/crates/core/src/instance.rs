//! Problem instances, certificates, solution verification and the cheap
//! sound pre-checks that run before any solver.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contraction::contracted_max_degree;
use crate::graph::{Edge, Graph, Vertex};

/// A Maximum Degree Contraction instance: can at most `k` edge contractions
/// bring the maximum degree of `graph` down to `d`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
    pub d: usize,
}

impl Instance {
    pub fn new(graph: Graph, k: usize, d: usize) -> Self {
        Instance { graph, k, d }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    #[serde(rename = "r")]
    Red,
    #[serde(rename = "b")]
    Blue,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("{got} labels for a graph on {n} vertices")]
    LengthMismatch { got: usize, n: usize },
}

/// An instance together with a red/blue partition of its vertices.
/// Solutions may only contract edges between red vertices, and must span a
/// red component entirely as soon as they touch it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledInstance {
    pub graph: Graph,
    red: Vec<bool>,
    pub k: usize,
    pub d: usize,
}

impl LabeledInstance {
    pub fn new(graph: Graph, labels: &[Label], k: usize, d: usize) -> Result<Self, LabelError> {
        if labels.len() != graph.vertex_count() {
            return Err(LabelError::LengthMismatch {
                got: labels.len(),
                n: graph.vertex_count(),
            });
        }
        let red = labels.iter().map(|&l| l == Label::Red).collect();
        Ok(LabeledInstance { graph, red, k, d })
    }

    /// Labels every vertex in `red` red and everything else blue.
    pub fn from_red_set(graph: Graph, red: &[Vertex], k: usize, d: usize) -> Self {
        let mut mask = vec![false; graph.vertex_count()];
        for &v in red {
            mask[v] = true;
        }
        LabeledInstance { graph, red: mask, k, d }
    }

    pub fn from_mask(graph: Graph, red: Vec<bool>, k: usize, d: usize) -> Result<Self, LabelError> {
        if red.len() != graph.vertex_count() {
            return Err(LabelError::LengthMismatch {
                got: red.len(),
                n: graph.vertex_count(),
            });
        }
        Ok(LabeledInstance { graph, red, k, d })
    }

    pub fn is_red(&self, v: Vertex) -> bool {
        self.red[v]
    }

    pub fn red_mask(&self) -> &[bool] {
        &self.red
    }

    pub fn labels(&self) -> Vec<Label> {
        self.red
            .iter()
            .map(|&r| if r { Label::Red } else { Label::Blue })
            .collect()
    }

    pub fn red_vertices(&self) -> Vec<Vertex> {
        self.graph.vertices().filter(|&v| self.red[v]).collect()
    }

    pub fn blue_vertices(&self) -> Vec<Vertex> {
        self.graph.vertices().filter(|&v| !self.red[v]).collect()
    }

    /// Connected components of the red subgraph, ordered by minimum vertex.
    pub fn red_components(&self) -> Vec<Vec<Vertex>> {
        self.graph.components_where(|v| self.red[v])
    }

    pub fn unlabeled(&self) -> Instance {
        Instance::new(self.graph.clone(), self.k, self.d)
    }
}

/// A set of edges claimed to solve an instance, kept sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Edge>", into = "Vec<Edge>")]
pub struct Certificate {
    edges: Vec<Edge>,
}

impl Certificate {
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Certificate { edges }
    }

    pub fn empty() -> Self {
        Certificate::default()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Endpoints of all edges, sorted.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.edges.iter().flat_map(|e| e.endpoints()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

impl From<Vec<Edge>> for Certificate {
    fn from(edges: Vec<Edge>) -> Self {
        Certificate::new(edges)
    }
}

impl From<Certificate> for Vec<Edge> {
    fn from(c: Certificate) -> Self {
        c.edges
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("budget exceeded: {size} edges for budget {k}")]
    Budget { size: usize, k: usize },
    #[error("non-edge: {0}")]
    NonEdge(Edge),
    #[error("degree violation: contracted graph has maximum degree {degree} > {d}")]
    Degree { degree: usize, d: usize },
    #[error("label violation: vertex {0} of the certificate is blue")]
    BlueEndpoint(Vertex),
    #[error("label violation: red component containing {0} is only partially spanned")]
    PartialComponent(Vertex),
}

/// Checks that `cert` has at most `k` edges of the graph and that contracting
/// them leaves maximum degree at most `d`.
pub fn check_solution(inst: &Instance, cert: &Certificate) -> Result<(), Violation> {
    if cert.len() > inst.k {
        return Err(Violation::Budget {
            size: cert.len(),
            k: inst.k,
        });
    }
    if let Some(&e) = cert.edges().iter().find(|e| !inst.graph.contains_edge(**e)) {
        return Err(Violation::NonEdge(e));
    }
    let degree = contracted_max_degree(&inst.graph, cert.edges()).expect("edges checked above");
    if degree > inst.d {
        return Err(Violation::Degree { degree, d: inst.d });
    }
    Ok(())
}

pub fn verify_solution(inst: &Instance, cert: &Certificate) -> bool {
    check_solution(inst, cert).is_ok()
}

/// Label-side conditions only: every endpoint is red, and every red component
/// is either untouched or fully spanned.
pub fn check_label_constraints(li: &LabeledInstance, cert: &Certificate) -> Result<(), Violation> {
    let spanned = cert.vertices();
    if let Some(&v) = spanned.iter().find(|&&v| v >= li.red.len() || !li.red[v]) {
        return Err(Violation::BlueEndpoint(v));
    }
    let mut in_f = vec![false; li.graph.vertex_count()];
    for &v in &spanned {
        in_f[v] = true;
    }
    for comp in li.red_components() {
        let touched = comp.iter().any(|&v| in_f[v]);
        if touched {
            if let Some(&v) = comp.iter().find(|&&v| !in_f[v]) {
                return Err(Violation::PartialComponent(v));
            }
        }
    }
    Ok(())
}

pub fn check_labeled_solution(li: &LabeledInstance, cert: &Certificate) -> Result<(), Violation> {
    check_solution(&li.unlabeled(), cert)?;
    check_label_constraints(li, cert)
}

pub fn verify_labeled_solution(li: &LabeledInstance, cert: &Certificate) -> bool {
    check_labeled_solution(li, cert).is_ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoReason {
    /// Some vertex has degree at least `d + k + 1`.
    DegreeTooHigh(Vertex),
    /// More than `k (d + 2)` vertices have degree above `d`.
    TooManyHighDegree { count: usize, limit: usize },
    /// At least `k + 1` vertices with pairwise disjoint, independent
    /// neighbourhoods of size above `d`.
    DisjointStars(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precheck {
    /// Already of maximum degree at most `d`; the empty certificate works.
    Yes,
    No(NoReason),
    Unknown,
}

/// Degree-counting pre-check. `Yes` and `No` answers are always correct.
pub fn precheck(inst: &Instance) -> Precheck {
    let g = &inst.graph;
    let (k, d) = (inst.k, inst.d);
    if g.max_degree() <= d {
        return Precheck::Yes;
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > d + k) {
        return Precheck::No(NoReason::DegreeTooHigh(v));
    }
    let count = g.vertices().filter(|&v| g.degree(v) > d).count();
    let limit = k * (d + 2);
    if count > limit {
        return Precheck::No(NoReason::TooManyHighDegree { count, limit });
    }
    Precheck::Unknown
}

/// Greedily collects centres of large independent stars with pairwise
/// disjoint neighbourhoods; `k + 1` of them cannot all be fixed with `k`
/// contractions. Vertices are scanned by decreasing degree, ties by id.
/// Never answers `Yes`.
pub fn disjoint_stars_precheck(inst: &Instance) -> Precheck {
    let g = &inst.graph;
    let mut order: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > inst.d).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut used = vec![false; g.vertex_count()];
    let mut found = 0;
    for v in order {
        let nbrs = g.neighbors(v);
        if nbrs.iter().any(|&w| used[w]) || !g.is_independent(nbrs) {
            continue;
        }
        for &w in nbrs {
            used[w] = true;
        }
        found += 1;
        if found > inst.k {
            return Precheck::No(NoReason::DisjointStars(found));
        }
    }
    Precheck::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn verify_examples() {
        let inst = Instance::new(star(3), 1, 2);
        assert!(verify_solution(&inst, &Certificate::new([Edge::new(0, 1)])));
        assert!(verify_solution(&Instance::new(cycle(5), 0, 2), &Certificate::empty()));
        assert_eq!(
            check_solution(&inst, &Certificate::new([Edge::new(0, 1), Edge::new(0, 2)])),
            Err(Violation::Budget { size: 2, k: 1 })
        );
        assert_eq!(
            check_solution(&inst, &Certificate::new([Edge::new(1, 2)])),
            Err(Violation::NonEdge(Edge::new(1, 2)))
        );
        assert_eq!(
            check_solution(&inst, &Certificate::empty()),
            Err(Violation::Degree { degree: 3, d: 2 })
        );
    }

    #[test]
    fn precheck_examples() {
        assert_eq!(
            precheck(&Instance::new(star(5), 1, 2)),
            Precheck::No(NoReason::DegreeTooHigh(0))
        );
        assert_eq!(precheck(&Instance::new(star(3), 1, 2)), Precheck::Unknown);
        assert_eq!(precheck(&Instance::new(cycle(5), 0, 2)), Precheck::Yes);
    }

    #[test]
    fn too_many_high_degree_vertices() {
        // Five disjoint K_{1,3}, k = 1, d = 2: 5 > 1 * (d + 2).
        let edges: Vec<(usize, usize)> = (0..5)
            .flat_map(|s| (1..4).map(move |l| (4 * s, 4 * s + l)))
            .collect();
        let g = Graph::new(20, edges).unwrap();
        assert_eq!(
            precheck(&Instance::new(g, 1, 2)),
            Precheck::No(NoReason::TooManyHighDegree { count: 5, limit: 4 })
        );
    }

    #[test]
    fn disjoint_stars_examples() {
        let two = Graph::new(8, [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        assert_eq!(
            disjoint_stars_precheck(&Instance::new(two, 1, 2)),
            Precheck::No(NoReason::DisjointStars(2))
        );
        assert_eq!(disjoint_stars_precheck(&Instance::new(star(3), 1, 2)), Precheck::Unknown);
        assert_eq!(disjoint_stars_precheck(&Instance::new(k4(), 1, 2)), Precheck::Unknown);
    }

    #[test]
    fn label_constraints() {
        let li = LabeledInstance::from_red_set(star(3), &[0, 1], 1, 2);
        assert_eq!(check_labeled_solution(&li, &Certificate::new([Edge::new(0, 1)])), Ok(()));
        assert_eq!(
            check_labeled_solution(&li, &Certificate::new([Edge::new(0, 2)])),
            Err(Violation::BlueEndpoint(2))
        );
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let li = LabeledInstance::from_red_set(p3, &[0, 1, 2], 1, 1);
        assert_eq!(
            check_label_constraints(&li, &Certificate::new([Edge::new(0, 1)])),
            Err(Violation::PartialComponent(2))
        );
    }
}
