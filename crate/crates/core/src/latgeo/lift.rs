use nalgebra::{DMatrix, DVector};

use super::chart::softmax;
use super::distribution::{equation_residual, DistributionPoint};
use super::lattice::IntegerLattice;
use super::polytope::ProjectedPolytope;
use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

pub const MAX_ITERATIONS: usize = 100_000;
/// Iterations without a new best gradient norm before giving up.
const STALL_LIMIT: usize = 50;

/// The unique `μ ∈ Λ` in the interior of the simplex with `ρ(μ) = target`.
///
/// Minimizes the dual of the maximum-entropy problem on the fiber,
/// `log Σ_s exp((Aᵀθ)_s) − θ·y`, by damped Newton steps; the minimizer's
/// softmax lies on Λ by construction.
pub fn birch_lift(
    poly: &ProjectedPolytope,
    central: &IntegerLattice,
    target: &[Rational],
    tol: f64,
) -> Result<DistributionPoint> {
    let d = poly.dimension;
    let n = poly.num_generators();
    if target.len() != d {
        return Err(Error::Precondition(format!("target has {} coordinates, expected {d}", target.len())));
    }
    if !poly.contains_strictly(target) {
        return Err(Error::Precondition("target is not interior to the projected polytope".into()));
    }
    let a = DMatrix::from_fn(d, n, |i, j| poly.projection[i][j] as f64);
    let y = DVector::from_iterator(d, target.iter().map(to_f64));

    let objective = |theta: &DVector<f64>| -> f64 {
        let v = a.transpose() * theta;
        let max = v.max();
        max + v.iter().map(|x| (x - max).exp()).sum::<f64>().ln() - theta.dot(&y)
    };
    let mu_of = |theta: &DVector<f64>| -> Vec<f64> {
        let v = a.transpose() * theta;
        softmax(v.as_slice())
    };

    let mut theta = DVector::zeros(d);
    let mut residual = f64::INFINITY;
    let mut best = f64::INFINITY;
    let mut stalled = 0;
    for iteration in 0..MAX_ITERATIONS {
        let mu = mu_of(&theta);
        let m = DVector::from_column_slice(&mu);
        let mean = &a * &m;
        let grad = &mean - &y;
        residual = grad.amax();
        if residual < best {
            best = residual;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled > STALL_LIMIT {
                return Err(Error::NoConvergence { iterations: iteration, residual: best });
            }
        }
        if residual <= tol {
            let point = DistributionPoint::Float(mu);
            let eq = equation_residual(&central.basis, &point);
            if eq <= tol {
                return Ok(point);
            }
            return Err(Error::NoConvergence { iterations: iteration, residual: eq });
        }
        let weighted = DMatrix::from_fn(d, n, |i, j| a[(i, j)] * mu[j]);
        let hessian = &weighted * a.transpose() - &mean * mean.transpose();
        let step = match hessian.clone().cholesky() {
            Some(c) => c.solve(&grad),
            None => grad.clone(),
        };
        let f0 = objective(&theta);
        let slope = grad.dot(&step);
        let mut alpha = 1.0;
        loop {
            let candidate = &theta - alpha * &step;
            let armijo = objective(&candidate) <= f0 - 1e-4 * alpha * slope;
            // near the optimum the objective decrease drops below rounding
            let flatter = || (&a * DVector::from_vec(mu_of(&candidate)) - &y).amax() < residual;
            if armijo || alpha < 1e-12 || flatter() {
                theta = candidate;
                break;
            }
            alpha *= 0.5;
        }
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS, residual })
}
