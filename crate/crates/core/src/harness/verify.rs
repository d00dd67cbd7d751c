use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::absolute::equations::side_exact;
use crate::error::{Error, Result};
use crate::latgeo::DistributionPoint;
use crate::presentation::ExponentVector;
use crate::rational::Rational;
use crate::wordcalc::{multisets, Limits, RewriteSystem};

pub const DEFAULT_DEPTH: usize = 6;
const MAX_WITNESSES: usize = 16;

/// Two equal-length paths into the same vertex with different probability.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub vertex: ExponentVector,
    pub level: usize,
    pub path_a: Vec<usize>,
    pub path_b: Vec<usize>,
    #[serde(with = "crate::rational::serde_str")]
    pub prob_a: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub prob_b: Rational,
}

impl Witness {
    pub fn render_path(path: &[usize], names: &[String]) -> String {
        path.iter().map(|&g| names[g].as_str()).collect::<Vec<_>>().join("")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub depth: usize,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub arithmetic: String,
}

fn exact_weights(mu: &DistributionPoint, n: usize) -> Result<&[Rational]> {
    let w = mu
        .as_exact()
        .ok_or_else(|| Error::Precondition("path verification needs an exact distribution".into()))?;
    if w.len() != n {
        return Err(Error::Precondition(format!("expected {n} weights, got {}", w.len())));
    }
    Ok(w)
}

/// Checks that all paths of length `≤ depth` into a common vertex carry the
/// same probability. Paths are represented by their multisets, which fix
/// both the endpoint and the probability.
pub fn verify_central(rs: &RewriteSystem, mu: &DistributionPoint, depth: usize) -> Result<VerificationReport> {
    verify_central_with(rs, mu, depth, &Limits::default())
}

pub fn verify_central_with(
    rs: &RewriteSystem,
    mu: &DistributionPoint,
    depth: usize,
    limits: &Limits,
) -> Result<VerificationReport> {
    let n = rs.num_vars;
    let w = exact_weights(mu, n)?;
    let mut witnesses = Vec::new();
    for level in 1..=depth {
        let words = multisets(n, level as u32, limits.max_level_width)?;
        let keyed: Vec<(ExponentVector, Rational)> =
            words.par_iter().map(|m| (rs.normal_form(m), side_exact(m, w))).collect();
        // first member of each class, in decreasing order
        let mut first: HashMap<&ExponentVector, usize> = HashMap::new();
        for (i, (vertex, prob)) in keyed.iter().enumerate() {
            match first.get(vertex) {
                None => {
                    first.insert(vertex, i);
                }
                Some(&j) if keyed[j].1 != *prob => {
                    if witnesses.len() < MAX_WITNESSES {
                        witnesses.push(Witness {
                            vertex: vertex.clone(),
                            level,
                            path_a: words[j].word(),
                            path_b: words[i].word(),
                            prob_a: keyed[j].1.clone(),
                            prob_b: prob.clone(),
                        });
                    }
                }
                Some(_) => {}
            }
        }
    }
    Ok(VerificationReport { depth, passed: witnesses.is_empty(), witnesses, arithmetic: "exact".into() })
}

/// Conditioning on `prefix` and translating back reproduces the original
/// measure on all continuations of length `≤ depth`, and the translation is
/// a well-defined map on vertices.
pub fn verify_shift(rs: &RewriteSystem, mu: &DistributionPoint, prefix: &[usize], depth: usize) -> Result<bool> {
    let n = rs.num_vars;
    let w = exact_weights(mu, n)?;
    if prefix.iter().any(|&g| g >= n) {
        return Err(Error::Precondition("prefix uses an unknown generator".into()));
    }
    let p = ExponentVector::from_word(n, prefix);
    let p_prob = side_exact(&p, w);
    if p_prob.is_zero() {
        return Err(Error::ZeroProbabilityPrefix);
    }
    for level in 0..=depth {
        let mut image: HashMap<ExponentVector, ExponentVector> = HashMap::new();
        for m in multisets(n, level as u32, Limits::default().max_level_width)? {
            let joint = side_exact(&p.plus(&m), w);
            if joint / &p_prob != side_exact(&m, w) {
                return Ok(false);
            }
            let vertex = rs.normal_form(&m);
            let shifted = rs.normal_form(&p.plus(&m));
            if let Some(prev) = image.insert(vertex, shifted.clone()) {
                if prev != shifted {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
