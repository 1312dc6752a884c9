//! Seeded corpora and independent reference implementations shared by the
//! integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mdc_core::reductions::gen_random_mdc;
use mdc_core::{Edge, Graph, Instance, LabeledInstance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random instance with `n ∈ [4, 12]`, `m ≤ min(20, C(n, 2))`, `k ∈ [0, 3]`,
/// `d ∈ [1, 3]`.
pub fn random_instance(seed: u64) -> Instance {
    let mut r = rng(seed);
    let n = r.gen_range(4..=12);
    let m = r.gen_range(0..=20.min(n * (n - 1) / 2));
    let k = r.gen_range(0..=3);
    let d = r.gen_range(1..=3);
    gen_random_mdc(n, m, k, d, r.gen()).unwrap()
}

pub fn instance_corpus(count: u64) -> Vec<Instance> {
    (0..count).map(random_instance).collect()
}

/// Same ranges, every vertex red with probability `red`.
pub fn random_labeled(seed: u64, red: f64) -> LabeledInstance {
    let inst = random_instance(seed);
    let mut r = rng(seed ^ 0x5eed);
    let mask = (0..inst.graph.vertex_count()).map(|_| r.gen_bool(red)).collect();
    LabeledInstance::from_mask(inst.graph, mask, inst.k, inst.d).unwrap()
}

pub fn labeled_corpus(count: u64) -> Vec<LabeledInstance> {
    (0..count)
        .map(|s| {
            let red = [0.5, 0.7, 0.9][(s % 3) as usize];
            random_labeled(1_000_000 + s, red)
        })
        .collect()
}

/// Reference contraction: repeatedly relabel every endpoint of `f` to the
/// smaller label until stable, then build the quotient edge set by brute
/// force. Returns the partition into parts and the quotient edges between
/// parts (parts indexed by their position in the sorted part list).
pub fn naive_contract(g: &Graph, f: &[Edge]) -> (Vec<Vec<usize>>, BTreeSet<(usize, usize)>) {
    let n = g.vertex_count();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for e in f {
            let m = label[e.lo()].min(label[e.hi()]);
            for v in [e.lo(), e.hi()] {
                if label[v] != m {
                    label[v] = m;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let reps: Vec<usize> = label.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let parts: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| (0..n).filter(|&v| label[v] == r).collect())
        .collect();
    let index = |v: usize| reps.binary_search(&label[v]).unwrap();
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) && index(u) != index(v) {
                let (a, b) = (index(u), index(v));
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    (parts, edges)
}

pub fn naive_max_degree(g: &Graph, f: &[Edge]) -> usize {
    let (parts, edges) = naive_contract(g, f);
    (0..parts.len())
        .map(|p| edges.iter().filter(|&&(a, b)| a == p || b == p).count())
        .max()
        .unwrap_or(0)
}

/// Reference labeled-solution check written directly from the definition.
pub fn naive_labeled_ok(li: &LabeledInstance, f: &[Edge]) -> bool {
    let g = &li.graph;
    if f.len() > li.k || f.iter().any(|e| !g.contains_edge(*e)) {
        return false;
    }
    if f.iter().any(|e| !li.is_red(e.lo()) || !li.is_red(e.hi())) {
        return false;
    }
    let touched: BTreeSet<usize> = f.iter().flat_map(|e| e.endpoints()).collect();
    for comp in li.red_components() {
        let hit = comp.iter().any(|v| touched.contains(v));
        if hit && !comp.iter().all(|v| touched.contains(v)) {
            return false;
        }
    }
    naive_max_degree(g, f) <= li.d
}
