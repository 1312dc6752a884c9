//! `k × k` permutation independent set and its reduction to MDC.
//!
//! The reduced graph contains the table, a row vertex per row, a column
//! vertex per column, and selectors `s_i` adjacent to every cell, every column
//! vertex and to row vertex `r_i`. Row vertices get `k^2` pendants and column
//! vertices `k^2 - k + 1`, so `R ∪ C ∪ S` sits at degree exactly `d + 1` for
//! `d = k^2 + k` while cells stay below `d`. Contracting `(s_i, v[i, ρ(i)])`
//! for a permutation `ρ` selecting an independent set repairs every degree.

use itertools::Itertools;
use serde_json::json;
use thiserror::Error;

use super::VertexRole;
use crate::graph::{Edge, Graph, GraphError, Vertex};
use crate::instance::{Certificate, Instance};

/// Largest table size the brute-force solver accepts (`k!` permutations).
pub const MAX_PIS_BRUTE_K: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PisError {
    #[error("cells ({0}, {1}) and ({2}, {3}) share a row or a column")]
    SameLine(usize, usize, usize, usize),
    #[error("cell ({0}, {1}) outside the table")]
    CellOutOfRange(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("table size {k} exceeds the brute-force limit of {max}")]
    TooLarge { k: usize, max: usize },
    #[error("not a permutation independent set: {0}")]
    InvalidSolution(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PisInstance {
    k: usize,
    /// Graph on the `k^2` cells, cell `(i, j)` being vertex `i * k + j`.
    graph: Graph,
}

impl PisInstance {
    /// Builds from edges between cells given as `((row, col), (row, col))`.
    /// Edges inside a row or a column are rejected.
    pub fn new<I>(k: usize, edges: I) -> Result<Self, PisError>
    where
        I: IntoIterator<Item = ((usize, usize), (usize, usize))>,
    {
        let mut list = Vec::new();
        for ((a, b), (c, e)) in edges {
            for (r, col) in [(a, b), (c, e)] {
                if r >= k || col >= k {
                    return Err(PisError::CellOutOfRange(r, col));
                }
            }
            if a == c || b == e {
                return Err(PisError::SameLine(a, b, c, e));
            }
            list.push((a * k + b, c * k + e));
        }
        Ok(PisInstance {
            k,
            graph: Graph::new(k * k, list)?,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cell(&self, row: usize, col: usize) -> Vertex {
        row * self.k + col
    }

    /// Whether `rho` is a permutation whose cells `(i, rho[i])` are independent.
    pub fn is_solution(&self, rho: &[usize]) -> bool {
        self.check_solution(rho).is_ok()
    }

    fn check_solution(&self, rho: &[usize]) -> Result<(), PisError> {
        if rho.len() != self.k || rho.iter().copied().sorted().ne(0..self.k) {
            return Err(PisError::InvalidSolution(format!("{rho:?} is not a permutation")));
        }
        let cells: Vec<Vertex> = rho.iter().enumerate().map(|(i, &j)| self.cell(i, j)).collect();
        if !self.graph.is_independent(&cells) {
            return Err(PisError::InvalidSolution(format!("{rho:?} selects adjacent cells")));
        }
        Ok(())
    }
}

/// First permutation, in lexicographic order, selecting an independent set.
pub fn solve_pis_brute(p: &PisInstance) -> Result<Option<Vec<usize>>, PisError> {
    if p.k > MAX_PIS_BRUTE_K {
        return Err(PisError::TooLarge {
            k: p.k,
            max: MAX_PIS_BRUTE_K,
        });
    }
    Ok((0..p.k).permutations(p.k).find(|rho| p.is_solution(rho)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PisReduction {
    pub instance: Instance,
    pub k: usize,
    pub roles: Vec<VertexRole>,
}

impl PisReduction {
    pub fn cell(&self, row: usize, col: usize) -> Vertex {
        row * self.k + col
    }

    pub fn row(&self, i: usize) -> Vertex {
        self.k * self.k + i
    }

    pub fn column(&self, j: usize) -> Vertex {
        self.k * self.k + self.k + j
    }

    pub fn selector(&self, i: usize) -> Vertex {
        self.k * self.k + 2 * self.k + i
    }

    /// Vertices of `R ∪ C ∪ S`.
    pub fn gadget_vertices(&self) -> std::ops::Range<Vertex> {
        self.k * self.k..self.k * self.k + 3 * self.k
    }

    pub fn metadata(&self) -> serde_json::Value {
        json!({
            "reduction": "pis",
            "k": self.k,
            "d": self.instance.d,
            "roles": self.roles,
        })
    }
}

pub fn reduce_pis_to_mdc(p: &PisInstance) -> PisReduction {
    let k = p.k;
    let table = k * k;
    let row = |i: usize| table + i;
    let column = |j: usize| table + k + j;
    let selector = |i: usize| table + 2 * k + i;

    let mut roles: Vec<VertexRole> = (0..table)
        .map(|v| VertexRole::Cell { row: v / k, col: v % k })
        .collect();
    roles.extend((0..k).map(|index| VertexRole::Row { index }));
    roles.extend((0..k).map(|index| VertexRole::Column { index }));
    roles.extend((0..k).map(|index| VertexRole::Selector { index }));

    let mut edges: Vec<Edge> = p.graph.edges().to_vec();
    for i in 0..k {
        for j in 0..k {
            edges.push(Edge::new(row(i), p.cell(i, j)));
            edges.push(Edge::new(column(j), p.cell(i, j)));
        }
    }
    for i in 0..k {
        for v in 0..table {
            edges.push(Edge::new(selector(i), v));
        }
        for j in 0..k {
            edges.push(Edge::new(selector(i), column(j)));
        }
        edges.push(Edge::new(selector(i), row(i)));
    }
    let mut attach = |owner: Vertex, count: usize, roles: &mut Vec<VertexRole>| {
        for _ in 0..count {
            edges.push(Edge::new(owner, roles.len()));
            roles.push(VertexRole::Pendant { of: owner });
        }
    };
    for i in 0..k {
        attach(row(i), k * k, &mut roles);
    }
    for j in 0..k {
        attach(column(j), k * k - k + 1, &mut roles);
    }

    let graph = Graph::new(roles.len(), edges).expect("reduction builds a simple graph");
    PisReduction {
        instance: Instance::new(graph, k, k * k + k),
        k,
        roles,
    }
}

/// Contracting `(s_i, v[i, rho(i)])` for every row gives a solution.
pub fn pis_solution_to_certificate(
    red: &PisReduction,
    p: &PisInstance,
    rho: &[usize],
) -> Result<Certificate, PisError> {
    p.check_solution(rho)?;
    Ok(Certificate::new(
        rho.iter()
            .enumerate()
            .map(|(i, &j)| Edge::new(red.selector(i), red.cell(i, j))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::contract_edge_set;
    use crate::instance::verify_solution;

    #[test]
    fn rejects_edges_inside_lines() {
        assert_eq!(
            PisInstance::new(2, [((0, 0), (0, 1))]),
            Err(PisError::SameLine(0, 0, 0, 1))
        );
        assert_eq!(
            PisInstance::new(2, [((0, 1), (1, 1))]),
            Err(PisError::SameLine(0, 1, 1, 1))
        );
    }

    #[test]
    fn brute_examples() {
        let empty = PisInstance::new(2, []).unwrap();
        assert_eq!(solve_pis_brute(&empty).unwrap(), Some(vec![0, 1]));
        let blocked = PisInstance::new(2, [((0, 0), (1, 1)), ((0, 1), (1, 0))]).unwrap();
        assert_eq!(solve_pis_brute(&blocked).unwrap(), None);
        let big = PisInstance::new(9, []).unwrap();
        assert!(matches!(solve_pis_brute(&big), Err(PisError::TooLarge { .. })));
    }

    #[test]
    fn reduced_structure_for_k2() {
        let p = PisInstance::new(2, []).unwrap();
        let red = reduce_pis_to_mdc(&p);
        let g = &red.instance.graph;
        assert_eq!(g.vertex_count(), 24);
        assert_eq!(red.instance.d, 6);
        assert_eq!(red.instance.k, 2);
        for v in red.gadget_vertices() {
            assert_eq!(g.degree(v), 7, "vertex {v} ({:?})", red.roles[v]);
        }
        for v in 0..4 {
            assert!(g.degree(v) < 6);
        }
    }

    #[test]
    fn lifted_certificate_is_a_matching() {
        let p = PisInstance::new(2, []).unwrap();
        let red = reduce_pis_to_mdc(&p);
        let cert = pis_solution_to_certificate(&red, &p, &[0, 1]).unwrap();
        assert_eq!(cert.len(), 2);
        assert_eq!(cert.vertices().len(), 4);
        assert!(verify_solution(&red.instance, &cert));
        let contracted = contract_edge_set(&red.instance.graph, cert.edges()).unwrap();
        assert_eq!(contracted.contracted.max_degree(), red.instance.d);

        assert!(pis_solution_to_certificate(&red, &p, &[0, 0]).is_err());
    }
}
