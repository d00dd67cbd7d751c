//! Completion of pure-difference binomial systems.
//!
//! A rule `lead → trail` rewrites any exponent vector divisible by `lead`.
//! Critical pairs are formed at least common multiples of overlapping leads;
//! coprime leads are skipped (their pair always resolves).

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::order::MonomialOrder;
use crate::presentation::{ExponentVector, Presentation, RelationPair};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialRule {
    pub lead: ExponentVector,
    pub trail: ExponentVector,
}

impl BinomialRule {
    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.trail.degree()
    }
}

/// Resource caps for completion and level expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_rules: usize,
    pub max_steps: usize,
    pub max_level_width: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_rules: 10_000, max_steps: 1_000_000, max_level_width: 1_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteSystem {
    pub rules: Vec<BinomialRule>,
    pub order: MonomialOrder,
    pub confluent: bool,
    pub num_vars: usize,
}

impl RewriteSystem {
    /// Fully reduces `v`.
    pub fn normal_form(&self, v: &ExponentVector) -> ExponentVector {
        let mut steps = 0usize;
        reduce(&self.rules, v.clone(), &mut steps)
    }

    pub fn equivalent(&self, a: &ExponentVector, b: &ExponentVector) -> bool {
        self.normal_form(a) == self.normal_form(b)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rules.iter().all(BinomialRule::is_homogeneous)
    }
}

pub fn normal_form(rs: &RewriteSystem, v: &ExponentVector) -> ExponentVector {
    rs.normal_form(v)
}

fn reduce(rules: &[BinomialRule], mut v: ExponentVector, steps: &mut usize) -> ExponentVector {
    'outer: loop {
        for r in rules {
            if r.lead.divides(&v) {
                v = v.minus(&r.lead).plus(&r.trail);
                *steps += 1;
                continue 'outer;
            }
        }
        return v;
    }
}

pub fn complete(p: &Presentation, order: MonomialOrder) -> RewriteSystem {
    complete_with_limits(p, order, &Limits::default())
}

pub fn complete_with_limits(p: &Presentation, order: MonomialOrder, limits: &Limits) -> RewriteSystem {
    complete_pairs(p.rank(), &p.relations, order, limits)
}

/// Completes an arbitrary family of pairs over `num_vars` coordinates. On
/// hitting a cap the partial, inter-reduced system is returned with
/// `confluent = false`.
pub fn complete_pairs(
    num_vars: usize,
    pairs: &[RelationPair],
    order: MonomialOrder,
    limits: &Limits,
) -> RewriteSystem {
    let mut rules: Vec<BinomialRule> = Vec::new();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let mut steps = 0usize;
    let mut confluent = true;

    let add = |rules: &mut Vec<BinomialRule>,
                   queue: &mut VecDeque<(usize, usize)>,
                   a: ExponentVector,
                   b: ExponentVector| {
        let (lead, trail) = match order.compare(a.as_slice(), b.as_slice()) {
            Ordering::Greater => (a, b),
            Ordering::Less => (b, a),
            Ordering::Equal => return,
        };
        let idx = rules.len();
        for j in 0..idx {
            queue.push_back((j, idx));
        }
        rules.push(BinomialRule { lead, trail });
    };

    for pair in pairs {
        let a = reduce(&rules, pair.lhs.clone(), &mut steps);
        let b = reduce(&rules, pair.rhs.clone(), &mut steps);
        add(&mut rules, &mut queue, a, b);
    }

    while let Some((i, j)) = queue.pop_front() {
        if rules.len() > limits.max_rules || steps > limits.max_steps {
            confluent = false;
            break;
        }
        let (ri, rj) = (&rules[i], &rules[j]);
        if ri.lead.is_coprime(&rj.lead) {
            continue;
        }
        let m = ri.lead.lcm(&rj.lead);
        let a = m.minus(&ri.lead).plus(&ri.trail);
        let b = m.minus(&rj.lead).plus(&rj.trail);
        let a = reduce(&rules, a, &mut steps);
        let b = reduce(&rules, b, &mut steps);
        if a != b {
            add(&mut rules, &mut queue, a, b);
        }
    }
    if rules.len() > limits.max_rules || steps > limits.max_steps {
        confluent = false;
    }

    RewriteSystem { rules: inter_reduce(rules, order), order, confluent, num_vars }
}

/// Drops rules whose lead is divisible by another lead and reduces trails.
fn inter_reduce(mut rules: Vec<BinomialRule>, order: MonomialOrder) -> Vec<BinomialRule> {
    rules.sort_by(|a, b| {
        order
            .compare(a.lead.as_slice(), b.lead.as_slice())
            .then_with(|| order.compare(a.trail.as_slice(), b.trail.as_slice()))
    });
    let mut kept: Vec<BinomialRule> = Vec::new();
    for r in rules {
        if kept.iter().any(|k| k.lead.divides(&r.lead)) {
            continue;
        }
        kept.push(r);
    }
    let mut steps = 0;
    let trails: Vec<ExponentVector> =
        kept.iter().map(|r| reduce(&kept, r.trail.clone(), &mut steps)).collect();
    for (r, t) in kept.iter_mut().zip(trails) {
        r.trail = t;
    }
    kept
}
