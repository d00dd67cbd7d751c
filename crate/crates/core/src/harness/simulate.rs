//! Seeded i.i.d.-increment random walks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::absolute::equations::side_exact;
use crate::error::{Error, Result};
use crate::latgeo::DistributionPoint;
use crate::presentation::ExponentVector;
use crate::rational::{format_rational, to_f64, Rational};
use crate::wordcalc::{multiset_count, multisets, RewriteSystem};

/// Trials per rayon task; each chunk owns its own ChaCha stream.
pub const CHUNK: u64 = 4096;
/// Largest number of step multisets for which exact endpoint laws are computed.
pub const EXACT_LAW_CAP: u128 = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkSample {
    pub seed: u64,
    pub steps: Vec<usize>,
    pub endpoint: ExponentVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationStats {
    pub trials: u64,
    pub steps: usize,
    pub seed: u64,
    /// Endpoint (normal form) to number of walks ending there.
    pub counts: BTreeMap<ExponentVector, u64>,
    /// Exact endpoint law when the step multisets are few enough.
    pub exact: Option<BTreeMap<ExponentVector, Rational>>,
    /// Largest `|freq − p| / sqrt(p(1 − p)/trials)` over endpoints with `0 < p < 1`.
    pub max_sigma: Option<f64>,
}

impl SimulationStats {
    pub fn frequencies(&self) -> BTreeMap<ExponentVector, f64> {
        self.counts.iter().map(|(k, &c)| (k.clone(), c as f64 / self.trials as f64)).collect()
    }

    /// Standardized deviation of every endpoint with `0 < p < 1`.
    pub fn sigmas(&self) -> BTreeMap<ExponentVector, f64> {
        let Some(exact) = &self.exact else { return BTreeMap::new() };
        if self.trials == 0 {
            return BTreeMap::new();
        }
        let t = self.trials as f64;
        exact
            .iter()
            .filter_map(|(k, p)| {
                let p = to_f64(p);
                if p <= 0.0 || p >= 1.0 {
                    return None;
                }
                let freq = self.counts.get(k).copied().unwrap_or(0) as f64 / t;
                Some((k.clone(), (freq - p).abs() / (p * (1.0 - p) / t).sqrt()))
            })
            .collect()
    }

    /// `{trials, steps, freq: {...}, exact: {...}, max_sigma}` keyed by the
    /// endpoint rendered with `names`.
    pub fn to_json(&self, names: &[String]) -> Value {
        let freq: serde_json::Map<String, Value> =
            self.frequencies().into_iter().map(|(k, f)| (k.render(names), json!(f))).collect();
        let exact: Option<serde_json::Map<String, Value>> = self.exact.as_ref().map(|e| {
            e.iter().map(|(k, p)| (k.render(names), json!(format_rational(p)))).collect()
        });
        json!({
            "trials": self.trials,
            "steps": self.steps,
            "seed": self.seed,
            "freq": freq,
            "exact": exact,
            "max_sigma": self.max_sigma,
        })
    }
}

fn sampler(mu: &DistributionPoint) -> Result<WeightedIndex<f64>> {
    WeightedIndex::new(mu.to_f64()).map_err(|e| Error::InvalidDistribution(e.to_string()))
}

fn walk(rs: &RewriteSystem, dist: &WeightedIndex<f64>, steps: usize, rng: &mut ChaCha8Rng) -> (Vec<usize>, ExponentVector) {
    let n = rs.num_vars;
    let path: Vec<usize> = (0..steps).map(|_| dist.sample(rng)).collect();
    let endpoint = rs.normal_form(&ExponentVector::from_word(n, &path));
    (path, endpoint)
}

pub fn sample_walk(rs: &RewriteSystem, mu: &DistributionPoint, steps: usize, seed: u64) -> Result<WalkSample> {
    check_len(rs, mu)?;
    let dist = sampler(mu)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (steps, endpoint) = walk(rs, &dist, steps, &mut rng);
    Ok(WalkSample { seed, steps, endpoint })
}

fn check_len(rs: &RewriteSystem, mu: &DistributionPoint) -> Result<()> {
    if mu.len() != rs.num_vars {
        return Err(Error::Precondition(format!("expected {} weights, got {}", rs.num_vars, mu.len())));
    }
    Ok(())
}

pub fn simulate(
    rs: &RewriteSystem,
    mu: &DistributionPoint,
    steps: usize,
    trials: u64,
    seed: u64,
) -> Result<SimulationStats> {
    check_len(rs, mu)?;
    let exact = match mu {
        DistributionPoint::Exact(w) if multiset_count(rs.num_vars, steps as u32) <= EXACT_LAW_CAP => {
            Some(exact_endpoint_law(rs, w, steps)?)
        }
        _ => None,
    };
    let mut stats = SimulationStats { trials, steps, seed, counts: BTreeMap::new(), exact, max_sigma: None };
    if trials == 0 {
        return Ok(stats);
    }
    let dist = sampler(mu)?;
    let chunks = trials.div_ceil(CHUNK);
    let partial: Vec<BTreeMap<ExponentVector, u64>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = CHUNK.min(trials - c * CHUNK);
            let mut local = BTreeMap::new();
            for _ in 0..count {
                let (_, end) = walk(rs, &dist, steps, &mut rng);
                *local.entry(end).or_insert(0) += 1;
            }
            local
        })
        .collect();
    for local in partial {
        for (k, c) in local {
            *stats.counts.entry(k).or_insert(0) += c;
        }
    }
    if stats.exact.is_some() {
        stats.max_sigma = stats.sigmas().values().copied().fold(None, |m: Option<f64>, s| Some(m.map_or(s, |m| m.max(s))));
    }
    Ok(stats)
}

/// `P(endpoint = v) = Σ_{m ↦ v} multinomial(steps; m) ∏ μ^m`.
pub fn exact_endpoint_law(
    rs: &RewriteSystem,
    mu: &[Rational],
    steps: usize,
) -> Result<BTreeMap<ExponentVector, Rational>> {
    let n = rs.num_vars;
    let mut law: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
    for m in multisets(n, steps as u32, EXACT_LAW_CAP as usize)? {
        let p = side_exact(&m, mu);
        if p.is_zero() {
            continue;
        }
        let weight = Rational::from_integer(multinomial(m.as_slice()));
        *law.entry(rs.normal_form(&m)).or_insert_with(Rational::zero) += weight * p;
    }
    Ok(law)
}

fn multinomial(counts: &[u32]) -> BigInt {
    let mut result = BigInt::one();
    let mut total = 0u32;
    for &c in counts {
        for i in 1..=c {
            total += 1;
            result = result * BigInt::from(total) / BigInt::from(i);
        }
    }
    result
}
