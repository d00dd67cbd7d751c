use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::equations::CentralityEquation;
use crate::error::{Error, Result};
use crate::latgeo::{DistributionPoint, IntegerLattice};

pub const MAX_STRATA_GENERATORS: usize = 20;

/// Precentral distributions with support exactly `support`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stratum {
    /// Generator indices, ascending.
    pub support: Vec<usize>,
    pub lattice: IntegerLattice,
    pub dimension: usize,
    pub sample: DistributionPoint,
    pub is_main: bool,
    pub exact: bool,
}

impl Stratum {
    pub fn support_mask(&self) -> u64 {
        self.support.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn is_point(&self) -> bool {
        self.dimension == 0
    }
}

fn inside(side: u64, t: u64) -> bool {
    side & !t == 0
}

/// The stratum for support `t`, or `None` when some equation has exactly one
/// side supported in `t`.
pub fn stratum_for_support(
    eqs: &[CentralityEquation],
    num_generators: usize,
    t: u64,
    exact: bool,
) -> Option<Stratum> {
    let mut diffs = Vec::new();
    for e in eqs {
        let l = inside(e.pair.lhs.support_mask(), t);
        let r = inside(e.pair.rhs.support_mask(), t);
        match (l, r) {
            (true, true) => diffs.push(e.kappa()),
            (false, false) => {}
            _ => return None,
        }
    }
    let lattice = IntegerLattice::from_generators(num_generators, &diffs);
    let size = t.count_ones() as usize;
    let dimension = size - 1 - lattice.rank();
    let support: Vec<usize> = (0..num_generators).filter(|&i| t >> i & 1 == 1).collect();
    let is_main = size == num_generators;
    Some(Stratum {
        support,
        lattice,
        dimension,
        sample: DistributionPoint::uniform_on(num_generators, t),
        is_main,
        exact,
    })
}

/// All strata ordered by support bitmask.
pub fn strata(eqs: &[CentralityEquation], num_generators: usize, exact: bool) -> Result<Vec<Stratum>> {
    strata_with_cap(eqs, num_generators, exact, MAX_STRATA_GENERATORS)
}

pub fn strata_with_cap(
    eqs: &[CentralityEquation],
    num_generators: usize,
    exact: bool,
    cap: usize,
) -> Result<Vec<Stratum>> {
    if num_generators > cap || num_generators >= 64 {
        return Err(Error::ResourceLimit { what: "generators for support enumeration", limit: cap });
    }
    let total: u64 = 1 << num_generators;
    Ok((1..total)
        .into_par_iter()
        .filter_map(|t| stratum_for_support(eqs, num_generators, t, exact))
        .collect())
}
