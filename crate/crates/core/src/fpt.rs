//! Universal-family driver: tries every red/blue labelling from an
//! `(n, 2k + kd)`-universal family with the labeled solver.
//!
//! If `F` is a solution then `|V(F)| <= 2k` and `|N(V(F))| <= kd`, so some
//! family member is red exactly on `V(F)` within `N[V(F)]`, and that labelling
//! admits `F` as a labeled solution.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;
use crate::instance::{
    check_solution, disjoint_stars_precheck, precheck, Certificate, Instance, LabeledInstance,
    Precheck,
};
use crate::labeled::{solve_labeled, LabeledOptions, SolverStats};
use crate::universal::{build_universal, UniversalError, UniversalMode, UniversalOptions};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FptError {
    #[error(transparent)]
    Universal(#[from] UniversalError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FptOptions {
    pub mode: UniversalMode,
    pub universal: UniversalOptions,
    pub labeled: LabeledOptions,
    pub precheck: bool,
    /// Evaluate family members on the rayon pool. The answer and the returned
    /// certificate are the same as sequentially; the statistics are not.
    pub parallel: bool,
}

impl FptOptions {
    pub fn with_mode(mode: UniversalMode) -> Self {
        FptOptions {
            mode,
            universal: UniversalOptions::default(),
            labeled: LabeledOptions::default(),
            precheck: true,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FptOutcome {
    pub certificate: Option<Certificate>,
    /// Set when the family was Monte Carlo: a No answer may be wrong with at
    /// most this probability. Yes answers are always verified.
    pub monte_carlo_delta: Option<f64>,
    /// `Some` when a pre-check decided the instance.
    pub decided_by_precheck: Option<Precheck>,
    pub family_size: usize,
    pub labelings_tried: u64,
    pub stats: SolverStats,
}

/// Universality parameter `min(n, 2k + kd)`.
pub fn family_parameter(inst: &Instance) -> usize {
    (2 * inst.k + inst.k * inst.d).min(inst.graph.vertex_count())
}

pub fn solve_fpt(inst: &Instance, opts: &FptOptions) -> Result<FptOutcome, FptError> {
    let mut outcome = FptOutcome {
        certificate: None,
        monte_carlo_delta: None,
        decided_by_precheck: None,
        family_size: 0,
        labelings_tried: 0,
        stats: SolverStats::default(),
    };
    if opts.precheck {
        let verdict = match precheck(inst) {
            Precheck::Unknown => disjoint_stars_precheck(inst),
            other => other,
        };
        match verdict {
            Precheck::Yes => {
                outcome.certificate = Some(Certificate::empty());
                outcome.decided_by_precheck = Some(verdict);
                return Ok(outcome);
            }
            Precheck::No(_) => {
                outcome.decided_by_precheck = Some(verdict);
                return Ok(outcome);
            }
            Precheck::Unknown => {}
        }
    }

    let n = inst.graph.vertex_count();
    let family = build_universal(n, family_parameter(inst), opts.mode, &opts.universal)?;
    outcome.family_size = family.len();
    outcome.monte_carlo_delta = family.failure_bound;

    let attempt = |i: usize| {
        let li = labeled(&inst.graph, family.member_mask(i), inst);
        let run = solve_labeled(&li, &opts.labeled);
        (run.certificate, run.stats)
    };

    if opts.parallel {
        let found = (0..family.len())
            .into_par_iter()
            .map(|i| (i, attempt(i)))
            .find_first(|(_, (cert, _))| cert.is_some());
        if let Some((i, (cert, stats))) = found {
            outcome.certificate = cert;
            outcome.stats = stats;
            outcome.labelings_tried = i as u64 + 1;
        } else {
            outcome.labelings_tried = family.len() as u64;
        }
    } else {
        for i in 0..family.len() {
            let (cert, stats) = attempt(i);
            outcome.labelings_tried += 1;
            outcome.stats.absorb(&stats);
            if cert.is_some() {
                outcome.certificate = cert;
                break;
            }
        }
    }

    if let Some(cert) = &outcome.certificate {
        if let Err(violation) = check_solution(inst, cert) {
            panic!("driver produced an invalid certificate {cert}: {violation}");
        }
        outcome.monte_carlo_delta = None;
    }
    Ok(outcome)
}

fn labeled(g: &Graph, red: Vec<bool>, inst: &Instance) -> LabeledInstance {
    LabeledInstance::from_mask(g.clone(), red, inst.k, inst.d).expect("family over V(G)")
}
