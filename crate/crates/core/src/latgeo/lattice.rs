use serde::{Deserialize, Serialize};

use super::hnf::{hermite_basis, integer_kernel};
use crate::presentation::Presentation;

/// Sublattice of ℤ^S kept in Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerLattice {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<i64>>,
}

impl IntegerLattice {
    pub fn zero(ambient_dim: usize) -> Self {
        IntegerLattice { ambient_dim, basis: Vec::new() }
    }

    pub fn from_generators(ambient_dim: usize, generators: &[Vec<i64>]) -> Self {
        IntegerLattice { ambient_dim, basis: hermite_basis(generators, ambient_dim) }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        hermite_basis(&rows, self.ambient_dim) == self.basis
    }

    pub fn is_sum_zero(&self) -> bool {
        self.basis.iter().all(|r| r.iter().sum::<i64>() == 0)
    }
}

/// R̄r: the lattice of reduced relation vectors `lhs − rhs`.
pub fn difference_lattice(p: &Presentation) -> IntegerLattice {
    let diffs: Vec<Vec<i64>> = p.relations.iter().map(|r| r.difference()).collect();
    IntegerLattice::from_generators(p.rank(), &diffs)
}

/// `L ∩ {Σ coordinates = 0}`.
pub fn central_sublattice(l: &IntegerLattice) -> IntegerLattice {
    if l.rank() == 0 {
        return IntegerLattice::zero(l.ambient_dim);
    }
    let sums: Vec<i64> = l.basis.iter().map(|r| r.iter().sum()).collect();
    let combos = integer_kernel(&[sums], l.rank());
    let generators: Vec<Vec<i64>> = combos
        .iter()
        .map(|c| {
            (0..l.ambient_dim)
                .map(|j| c.iter().zip(&l.basis).map(|(k, row)| k * row[j]).sum())
                .collect()
        })
        .collect();
    IntegerLattice::from_generators(l.ambient_dim, &generators)
}

/// `|S| − 1 − rank(Lc)`.
pub fn absolute_dimension(central: &IntegerLattice, num_generators: usize) -> usize {
    debug_assert!(central.is_sum_zero());
    (num_generators - 1).saturating_sub(central.rank())
}

/// Rank of the group of fractions, `|S| − rank(R̄r)`.
pub fn group_of_fractions_rank(l: &IntegerLattice, num_generators: usize) -> usize {
    num_generators - l.rank()
}
