//! Seeded instance sets shared by the benchmarks.

use mdc_core::reductions::gen_random_mdc;
use mdc_core::{precheck, Instance, LabeledInstance, Precheck};

/// Random instances on `n` vertices with `m` edges that no pre-check decides,
/// so every solver has to search.
pub fn undecided(n: usize, m: usize, k: usize, d: usize, count: usize) -> Vec<Instance> {
    (0u64..)
        .map(|seed| gen_random_mdc(n, m, k, d, seed).expect("m fits in C(n, 2)"))
        .filter(|inst| precheck(inst) == Precheck::Unknown)
        .take(count)
        .collect()
}

/// The same instances with every vertex red except those whose id is a
/// multiple of `stride`.
pub fn labeled(instances: &[Instance], stride: usize) -> Vec<LabeledInstance> {
    instances
        .iter()
        .map(|inst| {
            let red: Vec<usize> = inst.graph.vertices().filter(|v| v % stride != 0).collect();
            LabeledInstance::from_red_set(inst.graph.clone(), &red, inst.k, inst.d)
        })
        .collect()
}
