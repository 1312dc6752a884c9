//! Hardness reductions used as instance generators.
//!
//! * [`pis`]: `k × k` permutation independent set to MDC with budget `k`.
//! * [`rbds`]: red-blue dominating set to MDC with budget `2|B| log2|R|`.
//!
//! Each reduction records a role for every vertex it creates and can lift a
//! solution of the source problem to a certificate of the produced instance.

pub mod pis;
pub mod random;
pub mod rbds;

use serde::{Deserialize, Serialize};

use crate::graph::Vertex;

pub use pis::{
    pis_solution_to_certificate, reduce_pis_to_mdc, solve_pis_brute, PisError, PisInstance,
    PisReduction, MAX_PIS_BRUTE_K,
};
pub use random::{gen_random_mdc, gen_random_pis, gen_random_rbds, GenError, RbdsParams};
pub use rbds::{
    double_blue, preprocess_rbds, rbds_solution_to_certificate, reduce_rbds_to_mdc,
    solve_rbds_brute, GadgetTree, PreprocessedRbds, RbdsError, RbdsInstance, RbdsReduction,
};

/// What a vertex of a reduced instance stands for. Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum VertexRole {
    /// Table cell `v[row, col]` of a permutation independent set instance.
    Cell { row: usize, col: usize },
    Row { index: usize },
    Column { index: usize },
    Selector { index: usize },
    /// Degree-one vertex attached to `of`.
    Pendant { of: Vertex },
    Red { index: usize },
    /// Copy `copy` (1 or 2) of blue vertex `index`.
    Blue { index: usize, copy: u8 },
    /// Inner vertex of the binary tree hanging below a blue copy.
    TreeInternal { blue: usize, copy: u8, depth: usize },
    /// Member of the set complete to blue copy `copy`.
    Hub { copy: u8, index: usize },
    /// Member of the set joined to both copies of blue vertex `blue`.
    Link { blue: usize, index: usize },
}

impl VertexRole {
    pub fn label(&self) -> &'static str {
        match self {
            VertexRole::Cell { .. } => "cell",
            VertexRole::Row { .. } => "row",
            VertexRole::Column { .. } => "column",
            VertexRole::Selector { .. } => "selector",
            VertexRole::Pendant { .. } => "pendant",
            VertexRole::Red { .. } => "red",
            VertexRole::Blue { .. } => "blue",
            VertexRole::TreeInternal { .. } => "tree_internal",
            VertexRole::Hub { .. } => "hub",
            VertexRole::Link { .. } => "link",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_match_serialized_tags() {
        let roles = [
            VertexRole::Cell { row: 0, col: 1 },
            VertexRole::Selector { index: 0 },
            VertexRole::TreeInternal { blue: 0, copy: 1, depth: 1 },
            VertexRole::Hub { copy: 2, index: 0 },
            VertexRole::Link { blue: 1, index: 3 },
        ];
        for role in roles {
            let value = serde_json::to_value(role).unwrap();
            assert_eq!(value["role"], role.label());
        }
    }
}
