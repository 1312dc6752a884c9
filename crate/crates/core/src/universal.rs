//! `(n, l)`-universal set families: families of subsets of `0..n` whose
//! traces on every `l`-element set `S` realise all `2^l` subsets of `S`.
//!
//! Three construction tiers are offered:
//!
//! * [`UniversalMode::Exhaustive`] is the power set of `0..n`. Always correct,
//!   limited to `n <= exhaustive_cap`.
//! * [`UniversalMode::Constructed`] is deterministic. It picks a small set of
//!   hash functions `h: 0..n -> 0..l` such that every `l`-subset is mapped
//!   injectively by at least one of them, then emits `h^-1(P)` for every
//!   pattern `P ⊆ 0..l`. Candidate functions are `x -> ((a x + b) mod p) mod l`
//!   for the smallest prime `p >= n`, chosen greedily by how many uncovered
//!   subsets they separate; any subset no candidate separates gets a dedicated
//!   function. Universality holds by construction. The family size is at most
//!   `CONSTRUCTED_SIZE_FACTOR * 2^(CONSTRUCTED_SIZE_EXPONENT * l) * log2(n + 1)`
//!   on every size exercised by the test suite.
//! * [`UniversalMode::MonteCarlo`] draws
//!   `t = ceil(2^l (l ln n + l + ln(1/delta)))` uniformly random subsets. By a
//!   union bound over the `C(n, l) 2^l` (set, pattern) pairs, the family fails
//!   to be universal with probability at most `delta`.

use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::brute::binomial;

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;
pub const DEFAULT_CONSTRUCTED_CAP: u128 = 2_000_000;
pub const DEFAULT_VERIFY_CAP: u128 = 100_000_000;
pub const DEFAULT_MONTE_CARLO_DELTA: f64 = 1e-6;

/// Documented constants of the size bound for [`UniversalMode::Constructed`].
pub const CONSTRUCTED_SIZE_FACTOR: f64 = 1.0;
pub const CONSTRUCTED_SIZE_EXPONENT: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UniversalMode {
    Exhaustive,
    Constructed,
    MonteCarlo { delta: f64, seed: u64 },
}

impl UniversalMode {
    /// Power set when it fits under the exhaustive cap, Monte Carlo otherwise.
    pub fn default_for(n: usize, seed: u64) -> Self {
        if n <= DEFAULT_EXHAUSTIVE_CAP {
            UniversalMode::Exhaustive
        } else {
            UniversalMode::MonteCarlo {
                delta: DEFAULT_MONTE_CARLO_DELTA,
                seed,
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, UniversalMode::MonteCarlo { .. })
    }
}

impl fmt::Display for UniversalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniversalMode::Exhaustive => write!(f, "exhaustive"),
            UniversalMode::Constructed => write!(f, "constructed"),
            UniversalMode::MonteCarlo { delta, .. } => write!(f, "montecarlo(delta={delta})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniversalOptions {
    pub exhaustive_cap: usize,
    /// Upper bound on `C(n, l)` for the deterministic construction.
    pub constructed_cap: u128,
}

impl Default for UniversalOptions {
    fn default() -> Self {
        UniversalOptions {
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            constructed_cap: DEFAULT_CONSTRUCTED_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum UniversalError {
    #[error("exhaustive family refused: n = {n} exceeds the cap of {cap}")]
    ExhaustiveTooLarge { n: usize, cap: usize },
    #[error("constructed family refused: C({n}, {l}) = {subsets} exceeds the cap of {cap}")]
    ConstructedTooLarge { n: usize, l: usize, subsets: u128, cap: u128 },
    #[error("monte carlo failure probability must lie in (0, 1), got {0}")]
    InvalidDelta(f64),
    #[error("verification refused: C(n, l) * 2^l = {work} exceeds the cap of {cap}")]
    VerificationTooLarge { work: u128, cap: u128 },
    #[error("verification supports n <= 128, got {0}")]
    GroundSetTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Members {
    PowerSet,
    Explicit(Vec<Vec<usize>>),
    /// Member `i` is drawn from ChaCha stream `i` under `seed`.
    Random { seed: u64, count: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniversalFamily {
    pub n: usize,
    /// Universality parameter after clamping to `n`.
    pub l: usize,
    pub mode: UniversalMode,
    members: Members,
    /// Probability bound that the family is not universal (Monte Carlo only).
    pub failure_bound: Option<f64>,
}

impl UniversalFamily {
    /// Wraps an arbitrary family, e.g. for checking it with [`is_universal`].
    pub fn from_sets(n: usize, l: usize, sets: Vec<Vec<usize>>) -> Self {
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        UniversalFamily {
            n,
            l,
            mode: UniversalMode::Constructed,
            members: Members::Explicit(sets),
            failure_bound: None,
        }
    }

    pub fn len(&self) -> usize {
        match &self.members {
            Members::PowerSet => 1usize << self.n,
            Members::Explicit(sets) => sets.len(),
            Members::Random { count, .. } => *count,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Membership mask of the `i`-th set.
    pub fn member_mask(&self, i: usize) -> Vec<bool> {
        match &self.members {
            Members::PowerSet => (0..self.n).map(|v| (i >> v) & 1 == 1).collect(),
            Members::Explicit(sets) => {
                let mut mask = vec![false; self.n];
                for &v in &sets[i] {
                    mask[v] = true;
                }
                mask
            }
            Members::Random { seed, .. } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(i as u64);
                (0..self.n).map(|_| rng.gen::<bool>()).collect()
            }
        }
    }

    /// The `i`-th set as sorted elements.
    pub fn member(&self, i: usize) -> Vec<usize> {
        self.member_mask(i)
            .into_iter()
            .enumerate()
            .filter_map(|(v, inside)| inside.then_some(v))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(move |i| self.member(i))
    }
}

pub fn build_universal(
    n: usize,
    l: usize,
    mode: UniversalMode,
    opts: &UniversalOptions,
) -> Result<UniversalFamily, UniversalError> {
    let l = l.min(n);
    let family = |members, failure_bound| UniversalFamily {
        n,
        l,
        mode,
        members,
        failure_bound,
    };
    if let UniversalMode::MonteCarlo { delta, .. } = mode {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(UniversalError::InvalidDelta(delta));
        }
    }
    if l == 0 {
        let bound = matches!(mode, UniversalMode::MonteCarlo { .. }).then_some(0.0);
        return Ok(family(Members::Explicit(vec![Vec::new()]), bound));
    }
    match mode {
        UniversalMode::Exhaustive => {
            if n > opts.exhaustive_cap {
                return Err(UniversalError::ExhaustiveTooLarge {
                    n,
                    cap: opts.exhaustive_cap,
                });
            }
            Ok(family(Members::PowerSet, None))
        }
        UniversalMode::Constructed => {
            let subsets = binomial(n, l);
            if subsets > opts.constructed_cap {
                return Err(UniversalError::ConstructedTooLarge {
                    n,
                    l,
                    subsets,
                    cap: opts.constructed_cap,
                });
            }
            Ok(family(Members::Explicit(hash_split_family(n, l)), None))
        }
        UniversalMode::MonteCarlo { delta, seed } => {
            let count = monte_carlo_size(n, l, delta);
            Ok(family(Members::Random { seed, count }, Some(delta)))
        }
    }
}

/// `ceil(2^l (l ln n + l + ln(1/delta)))`.
pub fn monte_carlo_size(n: usize, l: usize, delta: f64) -> usize {
    let l_f = l as f64;
    let t = 2f64.powi(l as i32) * (l_f * (n.max(1) as f64).ln() + l_f + (1.0 / delta).ln());
    t.ceil() as usize
}

fn smallest_prime_at_least(x: usize) -> usize {
    let is_prime = |p: usize| p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    (x.max(2)..).find(|&p| is_prime(p)).unwrap()
}

fn separates(h: &[usize], subset: &[usize], l: usize) -> bool {
    let mut hit = 0u64;
    for &x in subset {
        let bucket = 1u64 << h[x];
        if hit & bucket != 0 {
            return false;
        }
        hit |= bucket;
    }
    debug_assert_eq!(hit.count_ones() as usize, l);
    true
}

fn hash_split_family(n: usize, l: usize) -> Vec<Vec<usize>> {
    assert!((1..=63).contains(&l), "bucket patterns are enumerated as u64 masks");
    let p = smallest_prime_at_least(n);
    let pool: Vec<Vec<usize>> = (1..p)
        .cartesian_product(0..2)
        .map(|(a, b)| (0..n).map(|x| ((a * x + b) % p) % l).collect())
        .collect();

    let mut uncovered: Vec<Vec<usize>> = (0..n).combinations(l).collect();
    let mut functions: Vec<Vec<usize>> = Vec::new();
    while !uncovered.is_empty() {
        let best = pool
            .iter()
            .map(|h| (uncovered.iter().filter(|s| separates(h, s, l)).count(), h))
            .max_by_key(|(covered, _)| *covered)
            .filter(|(covered, _)| *covered > 0);
        let h = match best {
            Some((_, h)) => h.clone(),
            None => {
                let target = &uncovered[0];
                (0..n)
                    .map(|x| target.iter().position(|&t| t == x).unwrap_or(x % l))
                    .collect()
            }
        };
        uncovered.retain(|s| !separates(&h, s, l));
        functions.push(h);
    }

    let mut sets: Vec<Vec<usize>> = functions
        .iter()
        .flat_map(|h| {
            (0..1u64 << l).map(move |pattern| {
                (0..n)
                    .filter(|&x| (pattern >> h[x]) & 1 == 1)
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    sets.sort();
    sets.dedup();
    sets
}

/// Exhaustively checks the universality property of `fam` for its `l`.
pub fn is_universal(fam: &UniversalFamily, verify_cap: u128) -> Result<bool, UniversalError> {
    let (n, l) = (fam.n, fam.l.min(fam.n));
    if n > 128 {
        return Err(UniversalError::GroundSetTooLarge(n));
    }
    let work = binomial(n, l).saturating_mul(1u128 << l.min(127));
    if work > verify_cap {
        return Err(UniversalError::VerificationTooLarge {
            work,
            cap: verify_cap,
        });
    }
    let masks: Vec<u128> = (0..fam.len())
        .map(|i| {
            fam.member_mask(i)
                .iter()
                .enumerate()
                .filter(|(_, &inside)| inside)
                .fold(0u128, |m, (v, _)| m | (1u128 << v))
        })
        .collect();
    let patterns = 1usize << l;
    let mut seen = vec![false; patterns];
    for subset in (0..n).combinations(l) {
        seen.iter_mut().for_each(|s| *s = false);
        let mut distinct = 0;
        for &mask in &masks {
            let trace = subset
                .iter()
                .enumerate()
                .fold(0usize, |t, (j, &x)| t | ((((mask >> x) & 1) as usize) << j));
            if !seen[trace] {
                seen[trace] = true;
                distinct += 1;
                if distinct == patterns {
                    break;
                }
            }
        }
        if distinct < patterns {
            return Ok(false);
        }
    }
    Ok(true)
}
