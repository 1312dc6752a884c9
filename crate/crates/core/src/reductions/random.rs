//! Seeded random instance generators.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::pis::PisInstance;
use super::rbds::{RbdsError, RbdsInstance};
use crate::brute::binomial;
use crate::graph::Graph;
use crate::instance::Instance;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("{m} edges requested but a graph on {n} vertices has at most {max}")]
    TooManyEdges { n: usize, m: usize, max: u128 },
    #[error(transparent)]
    Rbds(#[from] RbdsError),
}

fn check_probability(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::Probability(p))
    }
}

/// Each pair of cells in different rows and columns becomes an edge with
/// probability `p`.
pub fn gen_random_pis(k: usize, p: f64, seed: u64) -> Result<PisInstance, GenError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..k * k {
        for b in a + 1..k * k {
            let (ra, ca, rb, cb) = (a / k, a % k, b / k, b % k);
            if ra != rb && ca != cb && rng.gen_bool(p) {
                edges.push(((ra, ca), (rb, cb)));
            }
        }
    }
    Ok(PisInstance::new(k, edges).expect("generated edges avoid shared lines"))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RbdsParams {
    pub red: usize,
    pub blue: usize,
    /// Edge probability.
    pub p: f64,
    /// Budget `l`.
    pub l: usize,
}

/// Random bipartite instance satisfying the assumptions of the reduction:
/// a red vertex drawing `|B| - 1` or more neighbours keeps a random
/// `|B| - 2` of them.
pub fn gen_random_rbds(params: RbdsParams, seed: u64) -> Result<RbdsInstance, GenError> {
    check_probability(params.p)?;
    if params.l == 0 {
        return Err(RbdsError::ZeroBudget.into());
    }
    if params.l + 3 >= params.blue {
        return Err(RbdsError::BudgetTooLarge {
            l: params.l,
            blue: params.blue,
        }
        .into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for r in 0..params.red {
        let mut nbrs: Vec<usize> = (0..params.blue).filter(|_| rng.gen_bool(params.p)).collect();
        if nbrs.len() + 1 >= params.blue {
            nbrs.shuffle(&mut rng);
            nbrs.truncate(params.blue - 2);
            nbrs.sort_unstable();
        }
        edges.extend(nbrs.into_iter().map(|b| (r, b)));
    }
    Ok(RbdsInstance::new(params.red, params.blue, edges, params.l)?)
}

/// Uniform graph with exactly `m` edges on `n` vertices.
pub fn gen_random_mdc(n: usize, m: usize, k: usize, d: usize, seed: u64) -> Result<Instance, GenError> {
    let max = binomial(n, 2);
    if m as u128 > max {
        return Err(GenError::TooManyEdges { n, m, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut chosen: Vec<usize> = index::sample(&mut rng, pairs.len(), m).into_vec();
    chosen.sort_unstable();
    let graph = Graph::new(n, chosen.into_iter().map(|i| pairs[i])).expect("distinct pairs");
    Ok(Instance::new(graph, k, d))
}
