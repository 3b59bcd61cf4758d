//! The Moore bound, candidate group enumeration, and the seeded random
//! generator-set search.
//!
//! Reproducibility: trial `t` of a search with seed `s` draws from
//! ChaCha8 seeded with `seed_from_u64(s)` on stream `t`
//! ([`trial_rng`]). Trials are independent, so the hit list and counters
//! do not depend on how many worker threads run them.

mod enumerate;

use std::collections::HashSet;

use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cayley::{bfs_stats, close_under_inverses, CayleyStats, GeneratorSet};
use crate::error::{Error, Result};
use crate::group::{Element, GroupSpec};

pub use enumerate::enumerate_cyclic_specs;

/// Rejection-sampling budget per generator slot, as a multiple of the degree.
pub const DRAWS_PER_SLOT: u64 = 64;

/// A degree/diameter pair to bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MooreQuery {
    pub delta: u64,
    pub diameter: u32,
}

impl MooreQuery {
    pub fn new(delta: u64, diameter: u32) -> Result<Self> {
        if delta < 2 {
            return Err(Error::BadParameter(format!("degree {delta} must be at least 2")));
        }
        if diameter < 1 {
            return Err(Error::BadParameter("diameter must be at least 1".into()));
        }
        Ok(MooreQuery { delta, diameter })
    }

    /// `1 + Δ + Δ(Δ-1) + ... + Δ(Δ-1)^(D-1)`, evaluated in closed form:
    /// `2D + 1` for `Δ = 2`, otherwise `(Δ(Δ-1)^D - 2) / (Δ - 2)`.
    pub fn bound(&self) -> Result<u64> {
        let (delta, d) = (self.delta, self.diameter);
        if delta == 2 {
            return Ok(2 * d as u64 + 1);
        }
        let overflow = || Error::MooreOverflow { delta, diameter: d };
        let delta = delta as u128;
        let top = (delta - 1).checked_pow(d).and_then(|p| p.checked_mul(delta)).ok_or_else(overflow)?;
        u64::try_from((top - 2) / (delta - 2)).map_err(|_| overflow())
    }
}

/// Upper bound on the order of any graph with maximum degree `delta` and
/// diameter `diameter`.
pub fn moore_bound(delta: u64, diameter: u32) -> Result<u64> {
    MooreQuery::new(delta, diameter)?.bound()
}

/// RNG for trial `trial` of a search seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Draws an inverse-closed generator set of exactly `delta` elements.
///
/// The set is `i` involutions plus `(delta - i) / 2` inverse pairs, with
/// `i` uniform over the values of the right parity. Elements are drawn
/// uniformly by index and rejected when they are the identity, already
/// taken, or of the wrong kind. When an involution slot runs out of draws,
/// two involution slots are traded for one pair.
pub fn sample_generator_set<R: Rng + ?Sized>(
    spec: &GroupSpec,
    delta: usize,
    rng: &mut R,
) -> Result<GeneratorSet> {
    let order = spec.order();
    if delta < 2 {
        return Err(Error::BadParameter(format!("degree {delta} must be at least 2")));
    }
    if delta as u64 > order - 1 {
        return Err(Error::InfeasibleDegree(format!(
            "degree {delta} needs more than the {} non-identity elements",
            order - 1
        )));
    }
    if delta % 2 == 1 && order % 2 == 1 {
        return Err(Error::InfeasibleDegree(format!(
            "odd degree {delta} needs an involution, but the group order {order} is odd"
        )));
    }
    let id = spec.identity();
    if delta as u64 == order - 1 {
        let all: Vec<Element> = (1..order).map(|i| spec.unindex_unchecked(i)).collect();
        return close_under_inverses(spec, &all);
    }

    let parity = delta % 2;
    let mut want_involutions =
        if order % 2 == 1 { 0 } else { parity + 2 * rng.gen_range(0..=(delta - parity) / 2) };

    let budget = DRAWS_PER_SLOT * delta as u64;
    let mut draws = 0u64;
    let mut taken: HashSet<Element> = HashSet::with_capacity(delta);
    let mut raw = Vec::with_capacity(delta);

    let mut involutions = 0;
    while want_involutions > 0 {
        let mut found = None;
        for _ in 0..budget {
            draws += 1;
            let g = spec.unindex_unchecked(rng.gen_range(0..order));
            if g != id && !taken.contains(&g) && spec.inv_unchecked(&g) == g {
                found = Some(g);
                break;
            }
        }
        match found {
            Some(g) => {
                taken.insert(g);
                raw.push(g);
                involutions += 1;
                want_involutions -= 1;
            }
            None if want_involutions >= 2 => want_involutions -= 2,
            None => return Err(Error::RetryBudgetExhausted { delta, draws }),
        }
    }

    for _ in 0..(delta - involutions) / 2 {
        let mut found = None;
        for _ in 0..budget {
            draws += 1;
            let g = spec.unindex_unchecked(rng.gen_range(0..order));
            if g == id || taken.contains(&g) {
                continue;
            }
            let inv = spec.inv_unchecked(&g);
            if inv != g {
                found = Some((g, inv));
                break;
            }
        }
        let (g, inv) = found.ok_or(Error::RetryBudgetExhausted { delta, draws })?;
        taken.insert(g);
        taken.insert(inv);
        raw.push(g);
    }

    let set = close_under_inverses(spec, &raw)?;
    debug_assert_eq!(set.degree(), delta);
    Ok(set)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub spec: GroupSpec,
    pub delta: usize,
    pub target_diameter: u32,
    pub trials: u64,
    pub seed: u64,
    pub max_hits: usize,
}

/// A generator set meeting the search target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub generators: GeneratorSet,
    pub stats: CayleyStats,
    pub trial_index: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub trials: u64,
    pub connected: u64,
    pub best_diameter: Option<u32>,
    /// Trials whose generator set could not be sampled within budget.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub sampling_failures: u64,
}

fn is_zero(v: &u64) -> bool {
    *v == 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    pub hits: Vec<SearchHit>,
    pub summary: SearchSummary,
}

/// JSON form of a search: `{"config", "hits", "summary"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub hits: Vec<HitRecord>,
    pub summary: SearchSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRecord {
    pub trial: u64,
    pub generators: Vec<Element>,
    pub diameter: u32,
    pub order: u64,
}

impl SearchOutcome {
    pub fn report(&self) -> SearchReport {
        SearchReport {
            config: self.config.clone(),
            hits: self
                .hits
                .iter()
                .map(|h| HitRecord {
                    trial: h.trial_index,
                    generators: h.generators.elements().to_vec(),
                    diameter: h.stats.diameter.expect("hits are connected"),
                    order: h.stats.order,
                })
                .collect(),
            summary: self.summary.clone(),
        }
    }
}

enum TrialResult {
    SamplingFailed,
    Measured(GeneratorSet, CayleyStats),
}

fn run_trial(config: &SearchConfig, trial: u64) -> Result<TrialResult> {
    let mut rng = trial_rng(config.seed, trial);
    let set = match sample_generator_set(&config.spec, config.delta, &mut rng) {
        Ok(set) => set,
        Err(Error::RetryBudgetExhausted { .. }) => return Ok(TrialResult::SamplingFailed),
        Err(e) => return Err(e),
    };
    let stats = bfs_stats(&config.spec, &set, u64::MAX)?;
    Ok(TrialResult::Measured(set, stats))
}

/// Runs `config.trials` independent random trials on up to `threads`
/// workers and collects the generator sets reaching the target diameter.
pub fn random_search(config: &SearchConfig, threads: usize) -> Result<SearchOutcome> {
    let order = config.spec.order();
    let delta = config.delta;
    if delta < 2 || delta as u64 > order - 1 {
        return Err(Error::BadParameter(format!(
            "degree {delta} must lie in [2, {}] for a group of order {order}",
            order - 1
        )));
    }
    match moore_bound(delta as u64, config.target_diameter) {
        Ok(bound) if order > bound => {
            return Err(Error::MooreInfeasible {
                order,
                bound,
                delta: delta as u64,
                diameter: config.target_diameter,
            })
        }
        Ok(_) | Err(Error::MooreOverflow { .. }) => {}
        Err(e) => return Err(e),
    }
    if config.spec.is_abelian() {
        warn!("{} is abelian; its Cayley graphs cannot be dense", config.spec);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::BadParameter(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<TrialResult>> =
        pool.install(|| (0..config.trials).into_par_iter().map(|t| run_trial(config, t)).collect());

    let mut summary = SearchSummary { trials: config.trials, ..Default::default() };
    let mut hits = Vec::new();
    for (trial, result) in results.into_iter().enumerate() {
        let (set, stats) = match result? {
            TrialResult::SamplingFailed => {
                summary.sampling_failures += 1;
                continue;
            }
            TrialResult::Measured(set, stats) => (set, stats),
        };
        let Some(diameter) = stats.diameter else { continue };
        summary.connected += 1;
        summary.best_diameter = Some(summary.best_diameter.map_or(diameter, |b| b.min(diameter)));
        if diameter <= config.target_diameter && stats.degree == delta && hits.len() < config.max_hits {
            hits.push(SearchHit { generators: set, stats, trial_index: trial as u64 });
        }
    }
    if summary.sampling_failures > 0 {
        warn!("{} trials could not sample a degree-{delta} set", summary.sampling_failures);
    }
    Ok(SearchOutcome { config: config.clone(), hits, summary })
}
