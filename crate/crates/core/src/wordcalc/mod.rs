//! Word problem, Cayley-level expansion and central relation pairs.

mod central;
mod levels;
mod order;
mod rewrite;

pub use central::{
    cancellativity_witness, central_pairs_enumerated, central_pairs_enumerated_with,
    central_pairs_exact, central_pairs_exact_with, is_branching, minimalize, orient, pair_cmp,
    CancellativityWitness, CentralPairSet, DEFAULT_FALLBACK_DEPTH,
};
pub use levels::{cayley_levels, cayley_levels_with_limits, CayleyLevels};
pub use order::MonomialOrder;
pub use rewrite::{
    complete, complete_pairs, complete_with_limits, normal_form, BinomialRule, Limits,
    RewriteSystem,
};

use crate::error::{Error, Result};
use crate::presentation::ExponentVector;

/// All exponent vectors of the given degree, in lexicographically
/// decreasing order. Errors when there would be more than `cap`.
pub fn multisets(num_vars: usize, degree: u32, cap: usize) -> Result<Vec<ExponentVector>> {
    if multiset_count(num_vars, degree) > cap as u128 {
        return Err(Error::ResourceLimit { what: "multisets per level", limit: cap });
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; num_vars];
    fill(&mut cur, 0, degree, &mut out);
    Ok(out)
}

fn fill(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<ExponentVector>) {
    if cur.is_empty() {
        if remaining == 0 {
            out.push(ExponentVector::new(Vec::new()));
        }
        return;
    }
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(ExponentVector::new(cur.clone()));
        cur[pos] = 0;
        return;
    }
    for k in (0..=remaining).rev() {
        cur[pos] = k;
        fill(cur, pos + 1, remaining - k, out);
    }
    cur[pos] = 0;
}

/// `C(degree + n − 1, n − 1)`, saturating.
pub fn multiset_count(num_vars: usize, degree: u32) -> u128 {
    if num_vars == 0 {
        return u128::from(degree == 0);
    }
    let (n, k) = (degree as u128 + num_vars as u128 - 1, num_vars as u128 - 1);
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}
