//! The exp/log chart between the complement of `span(Lc)` in the sum-zero
//! hyperplane and the interior of Λ.

use nalgebra::{DMatrix, DVector};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::distribution::DistributionPoint;
use super::hnf::integer_kernel;
use super::lattice::IntegerLattice;
use crate::error::{Error, Result};
use crate::rational::{pow_signed, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartBasis {
    /// Primitive integer rows (HNF) of the saturated lattice orthogonal to
    /// `Lc` and to the all-ones vector.
    pub complement_basis: Vec<Vec<i64>>,
    pub dimension: usize,
}

impl ChartBasis {
    pub fn num_generators(&self, fallback: usize) -> usize {
        self.complement_basis.first().map_or(fallback, Vec::len)
    }

    fn matrix(&self, n: usize) -> DMatrix<f64> {
        DMatrix::from_fn(self.dimension, n, |i, j| self.complement_basis[i][j] as f64)
    }
}

pub fn chart(central: &IntegerLattice) -> ChartBasis {
    let n = central.ambient_dim;
    let mut constraints = central.basis.clone();
    constraints.push(vec![1; n]);
    let complement_basis = integer_kernel(&constraints, n);
    let dimension = complement_basis.len();
    debug_assert_eq!(dimension, (n - 1).saturating_sub(central.rank()));
    ChartBasis { complement_basis, dimension }
}

/// `μ_s = e^{v_s} / Σ e^{v_r}` with `v = Σ_j w_j A_j`.
pub fn exp_map(c: &ChartBasis, n: usize, w: &[f64]) -> Result<DistributionPoint> {
    if w.len() != c.dimension {
        return Err(Error::Precondition(format!(
            "expected {} chart coordinates, got {}",
            c.dimension,
            w.len()
        )));
    }
    if w.iter().any(|x| !x.is_finite()) {
        return Err(Error::Domain("chart coordinates must be finite".into()));
    }
    let v: Vec<f64> = (0..n)
        .map(|s| c.complement_basis.iter().zip(w).map(|(row, wj)| row[s] as f64 * wj).sum())
        .collect();
    Ok(DistributionPoint::Float(softmax(&v)))
}

pub(crate) fn softmax(v: &[f64]) -> Vec<f64> {
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let e: Vec<f64> = v.iter().map(|x| (x - max).exp()).collect();
    let z: f64 = e.iter().sum();
    e.into_iter().map(|x| x / z).collect()
}

/// Chart coordinates of a strictly positive point. The log-vector is
/// centered by its mean before projecting onto the complement basis.
pub fn log_map(c: &ChartBasis, mu: &DistributionPoint) -> Result<Vec<f64>> {
    let p = mu.to_f64();
    if p.iter().any(|&x| x <= 0.0) {
        return Err(Error::Domain("log_map needs a strictly positive distribution".into()));
    }
    if c.dimension == 0 {
        return Ok(Vec::new());
    }
    let n = p.len();
    let logs: Vec<f64> = p.iter().map(|x| x.ln()).collect();
    let mean = logs.iter().sum::<f64>() / n as f64;
    let centered = DVector::from_iterator(n, logs.iter().map(|l| l - mean));
    let a = c.matrix(n);
    let gram = &a * a.transpose();
    let rhs = &a * centered;
    let solution = gram
        .cholesky()
        .ok_or_else(|| Error::Domain("degenerate chart basis".into()))?
        .solve(&rhs);
    Ok(solution.iter().cloned().collect())
}

/// Exact point `μ_s ∝ ∏_j t_j^{A_js}` of Λ for positive rational `t`.
pub fn rational_point_on_lambda(central: &IntegerLattice, t: &[Rational]) -> Result<DistributionPoint> {
    rational_point(&chart(central), central.ambient_dim, t)
}

pub fn rational_point(c: &ChartBasis, n: usize, t: &[Rational]) -> Result<DistributionPoint> {
    if t.len() != c.dimension {
        return Err(Error::Precondition(format!(
            "expected {} parameters, got {}",
            c.dimension,
            t.len()
        )));
    }
    if t.iter().any(|x| !x.is_positive()) {
        return Err(Error::Precondition("toric parameters must be positive".into()));
    }
    let raw: Vec<Rational> = (0..n)
        .map(|s| {
            c.complement_basis.iter().zip(t).fold(Rational::one(), |acc, (row, tj)| {
                acc * pow_signed(tj, row[s]).expect("positive base")
            })
        })
        .collect();
    let z: Rational = raw.iter().sum();
    DistributionPoint::exact(raw.into_iter().map(|x| x / &z).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latgeo::distribution::lambda_membership;
    use crate::rational::{int, rat};

    fn z2_central() -> IntegerLattice {
        IntegerLattice::from_generators(4, &[vec![1, 1, -1, -1]])
    }

    fn six_and_minus_one_central() -> IntegerLattice {
        IntegerLattice::from_generators(3, &[vec![7, -1, -6]])
    }

    #[test]
    fn chart_bases() {
        let c = chart(&z2_central());
        assert_eq!(c.dimension, 2);
        assert_eq!(c.complement_basis, vec![vec![1, -1, 0, 0], vec![0, 0, 1, -1]]);

        let c = chart(&IntegerLattice::zero(3));
        assert_eq!(c.dimension, 2);
        for row in &c.complement_basis {
            assert_eq!(row.iter().sum::<i64>(), 0);
        }

        let c = chart(&six_and_minus_one_central());
        assert_eq!(c.dimension, 1);
        let row = &c.complement_basis[0];
        assert_eq!(row.iter().sum::<i64>(), 0);
        assert_eq!(row.iter().zip([7, -1, -6]).map(|(a, b)| a * b).sum::<i64>(), 0);
        assert_eq!(row, &vec![5, -13, 8]);
    }

    #[test]
    fn exp_of_zero_is_uniform() {
        let c = chart(&z2_central());
        let mu = exp_map(&c, 4, &[0.0, 0.0]).unwrap().to_f64();
        for x in mu {
            assert!((x - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn exp_lands_on_lambda() {
        let c = chart(&z2_central());
        let mu = exp_map(&c, 4, &[2f64.ln(), 0.0]).unwrap();
        let p = mu.to_f64();
        assert!((p[0] / p[1] - 4.0).abs() < 1e-12);
        assert!((p[0] * p[1] - p[2] * p[3]).abs() < 1e-12);
        assert!(lambda_membership(&z2_central().basis, &mu));
    }

    #[test]
    fn round_trips() {
        let c = chart(&z2_central());
        for w in [[0.3, -1.7], [9.0, 4.0], [-6.5, 0.0]] {
            let back = log_map(&c, &exp_map(&c, 4, &w).unwrap()).unwrap();
            for (a, b) in back.iter().zip(w) {
                assert!((a - b).abs() < 1e-10, "{back:?} vs {w:?}");
            }
        }
        assert_eq!(log_map(&c, &DistributionPoint::uniform(4)).unwrap(), vec![0.0, 0.0]);
    }

    #[test]
    fn log_rejects_boundary_points() {
        let c = chart(&z2_central());
        let mu = DistributionPoint::exact(vec![rat(1, 2), rat(1, 2), int(0), int(0)]).unwrap();
        assert!(matches!(log_map(&c, &mu), Err(Error::Domain(_))));
    }

    #[test]
    fn toric_points_are_exact() {
        let uniform = rational_point_on_lambda(&z2_central(), &[int(1), int(1)]).unwrap();
        assert_eq!(uniform, DistributionPoint::uniform(4));

        let mu = rational_point_on_lambda(&z2_central(), &[int(2), int(1)]).unwrap();
        let w = mu.as_exact().unwrap();
        assert_eq!(&w[0] * &w[1], &w[2] * &w[3]);
        assert!(lambda_membership(&z2_central().basis, &mu));

        let mu = rational_point_on_lambda(&six_and_minus_one_central(), &[int(2)]).unwrap();
        let w = mu.as_exact().unwrap();
        assert_eq!(num_traits::pow(w[0].clone(), 7), &w[1] * num_traits::pow(w[2].clone(), 6));
    }
}
