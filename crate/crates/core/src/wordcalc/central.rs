//! Equal-length relation pairs: the relations of the branching monoid.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::levels::cayley_levels_with_limits;
use super::order::MonomialOrder;
use super::rewrite::{complete_pairs, complete_with_limits, Limits, RewriteSystem};
use super::multisets;
use crate::error::{Error, Result};
use crate::presentation::{ExponentVector, Presentation, RelationPair};

/// Generating family of equal-length pairs `(m, n)` with `m = n` in `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralPairSet {
    pub pairs: Vec<RelationPair>,
    /// True when produced by elimination, false for bounded enumeration.
    pub exact: bool,
    pub depth_bound: Option<usize>,
}

impl CentralPairSet {
    pub fn differences(&self) -> Vec<Vec<i64>> {
        self.pairs.iter().map(RelationPair::difference).collect()
    }

    pub fn max_length(&self) -> u64 {
        self.pairs.iter().map(|p| p.lhs.degree()).max().unwrap_or(0)
    }
}

pub const DEFAULT_FALLBACK_DEPTH: usize = 6;

pub fn central_pairs_exact(p: &Presentation) -> Result<CentralPairSet> {
    central_pairs_exact_with(p, &Limits::default(), DEFAULT_FALLBACK_DEPTH)
}

/// Computes the kernel congruence of `ℕ₀^S → G × ℕ, s ↦ (s, 1)`.
///
/// Coordinates of the auxiliary system: `x_s` (the original symbols), then
/// `y_s` (the generators of `G`), then a degree symbol `t`. The binomials
/// `x_s − y_s·t` together with the defining relations written in `y` are
/// completed under an order eliminating `y, t`; the surviving binomials in
/// `x` alone generate the kernel.
///
/// Falls back to [`central_pairs_enumerated`] at `fallback_depth` when
/// completion exceeds its caps.
pub fn central_pairs_exact_with(
    p: &Presentation,
    limits: &Limits,
    fallback_depth: usize,
) -> Result<CentralPairSet> {
    let n = p.rank();
    let total = 2 * n + 1;
    let embed_y = |v: &ExponentVector| {
        let mut out = vec![0u32; total];
        out[n..2 * n].copy_from_slice(v.as_slice());
        ExponentVector::new(out)
    };
    let mut aux: Vec<RelationPair> = (0..n)
        .map(|s| {
            let mut yt = vec![0u32; total];
            yt[n + s] = 1;
            yt[2 * n] = 1;
            RelationPair::new(ExponentVector::unit(total, s), ExponentVector::new(yt))
        })
        .collect();
    aux.extend(p.relations.iter().map(|r| RelationPair::new(embed_y(&r.lhs), embed_y(&r.rhs))));

    let rs = complete_pairs(total, &aux, MonomialOrder::Elimination { split: n }, limits);
    if !rs.confluent {
        let base = complete_with_limits(p, MonomialOrder::DegRevLex, limits);
        if !base.confluent {
            return Err(Error::ResourceLimit { what: "binomial completion rules", limit: limits.max_rules });
        }
        return central_pairs_enumerated_with(&base, fallback_depth, limits);
    }

    let pairs: Vec<RelationPair> = rs
        .rules
        .iter()
        .filter(|r| r.lead.as_slice()[n..].iter().chain(&r.trail.as_slice()[n..]).all(|&c| c == 0))
        .map(|r| {
            let pair = RelationPair::new(
                ExponentVector::new(r.lead.as_slice()[..n].to_vec()),
                ExponentVector::new(r.trail.as_slice()[..n].to_vec()),
            );
            debug_assert!(pair.is_homogeneous());
            pair
        })
        .collect();
    Ok(CentralPairSet { pairs: minimalize(pairs), exact: true, depth_bound: None })
}

pub fn central_pairs_enumerated(rs: &RewriteSystem, depth: usize) -> Result<CentralPairSet> {
    central_pairs_enumerated_with(rs, depth, &Limits::default())
}

/// All equal-length pairs up to `depth` with equal normal form, reduced to a
/// generating subset.
pub fn central_pairs_enumerated_with(
    rs: &RewriteSystem,
    depth: usize,
    limits: &Limits,
) -> Result<CentralPairSet> {
    let n = rs.num_vars;
    let mut pairs = Vec::new();
    for len in 1..=depth {
        let mut classes: HashMap<ExponentVector, Vec<ExponentVector>> = HashMap::new();
        for m in multisets(n, len as u32, limits.max_level_width)? {
            classes.entry(rs.normal_form(&m)).or_default().push(m);
        }
        for members in classes.values_mut() {
            if members.len() < 2 {
                continue;
            }
            members.sort_by(|a, b| rs.order.compare(b.as_slice(), a.as_slice()));
            let first = &members[0];
            pairs.extend(members[1..].iter().map(|m| RelationPair::new(first.clone(), m.clone())));
        }
    }
    Ok(CentralPairSet { pairs: minimalize(pairs), exact: false, depth_bound: Some(depth) })
}

/// Puts the lexicographically larger side first.
pub fn orient(pair: RelationPair) -> RelationPair {
    if pair.lhs < pair.rhs {
        pair.swapped()
    } else {
        pair
    }
}

const CLOSURE_VISIT_CAP: usize = 200_000;

/// Drops pairs implied by the remaining ones through translation and
/// transitivity (checked within the degree of each pair). Pairs are processed
/// shortest first; a pair is kept when the closure search cannot connect it.
pub fn minimalize(pairs: Vec<RelationPair>) -> Vec<RelationPair> {
    let mut pairs: Vec<RelationPair> =
        pairs.into_iter().filter(|p| !p.is_trivial()).map(orient).collect();
    pairs.sort_by(|a, b| {
        a.lhs
            .degree()
            .cmp(&b.lhs.degree())
            .then_with(|| b.lhs.cmp(&a.lhs))
            .then_with(|| b.rhs.cmp(&a.rhs))
    });
    pairs.dedup();
    let mut kept: Vec<RelationPair> = Vec::new();
    for p in pairs {
        if !connected(&kept, &p.lhs, &p.rhs) {
            kept.push(p);
        }
    }
    kept
}

/// Whether `from` and `to` are linked by moves `u ↦ u − l + r` (both
/// directions) along `pairs`.
pub(crate) fn connected(pairs: &[RelationPair], from: &ExponentVector, to: &ExponentVector) -> bool {
    if from == to {
        return true;
    }
    let mut seen: HashSet<ExponentVector> = HashSet::from([from.clone()]);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(u) = queue.pop_front() {
        for p in pairs {
            for (a, b) in [(&p.lhs, &p.rhs), (&p.rhs, &p.lhs)] {
                if a.divides(&u) {
                    let v = u.minus(a).plus(b);
                    if &v == to {
                        return true;
                    }
                    if seen.len() >= CLOSURE_VISIT_CAP {
                        return false;
                    }
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
    }
    false
}

/// True iff every rule identifies words of equal length.
pub fn is_branching(rs: &RewriteSystem) -> bool {
    rs.is_homogeneous()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CancellativityWitness {
    /// `a ≠ b` but `a + c = b + c`.
    NotCancellative { a: ExponentVector, b: ExponentVector, c: ExponentVector },
    NoWitnessUpToDepth(usize),
}

impl CancellativityWitness {
    pub fn is_cancellative_so_far(&self) -> bool {
        matches!(self, CancellativityWitness::NoWitnessUpToDepth(_))
    }
}

/// Searches elements reachable within `depth` steps for a failure of
/// cancellation by a single generator (enough: a failure by `c₁ + … + c_k`
/// shows up at some single generator along the way).
pub fn cancellativity_witness(rs: &RewriteSystem, depth: usize) -> Result<CancellativityWitness> {
    let n = rs.num_vars;
    let levels = cayley_levels_with_limits(rs, depth, &Limits::default())?;
    let mut elements: Vec<&ExponentVector> = Vec::new();
    let mut seen: HashSet<&ExponentVector> = HashSet::new();
    for v in levels.levels.iter().flatten() {
        if seen.insert(v) {
            elements.push(v);
        }
    }
    let mut images: Vec<HashMap<ExponentVector, &ExponentVector>> = vec![HashMap::new(); n];
    for x in elements {
        for (g, seen_images) in images.iter_mut().enumerate() {
            let image = rs.normal_form(&x.add_unit(g));
            if let Some(&y) = seen_images.get(&image) {
                return Ok(CancellativityWitness::NotCancellative {
                    a: y.clone(),
                    b: x.clone(),
                    c: ExponentVector::unit(n, g),
                });
            }
            seen_images.insert(image, x);
        }
    }
    Ok(CancellativityWitness::NoWitnessUpToDepth(depth))
}

/// Sort key used for deterministic pair listings.
pub fn pair_cmp(a: &RelationPair, b: &RelationPair) -> Ordering {
    a.lhs.degree().cmp(&b.lhs.degree()).then_with(|| b.lhs.cmp(&a.lhs)).then_with(|| b.rhs.cmp(&a.rhs))
}
