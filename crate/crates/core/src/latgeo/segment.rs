use num_traits::{Signed, Zero};

use super::distribution::{monomial_sides_f64, DistributionPoint};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

const BISECTION_STEPS: usize = 200;

/// The unique point of `{F_L(κ) = F_R(κ)}` on the open segment `(a, b)`.
///
/// The segment must run parallel to κ with `F_R` vanishing at one end and
/// `F_L` at the other; the endpoints may be given in either order.
pub fn segment_root(kappa: &[i64], a: &DistributionPoint, b: &DistributionPoint) -> Result<DistributionPoint> {
    let n = kappa.len();
    if a.len() != n || b.len() != n {
        return Err(Error::Precondition("κ and the endpoints must have the same length".into()));
    }
    if kappa.iter().sum::<i64>() != 0 || kappa.iter().all(|&k| k == 0) {
        return Err(Error::Precondition("κ must be a nonzero sum-zero vector".into()));
    }
    let (a, b) = oriented(kappa, a, b)?;
    let fa = monomial_sides_f64(kappa, &a);
    let fb = monomial_sides_f64(kappa, &b);
    if !(fa.1 == 0.0 && fa.0 > 0.0 && fb.0 == 0.0 && fb.1 > 0.0) {
        return Err(Error::Precondition(
            "endpoints are not where the line leaves the simplex on opposite sides".into(),
        ));
    }

    let point = |t: f64| -> Vec<f64> { a.iter().zip(&b).map(|(x, y)| (1.0 - t) * x + t * y).collect() };
    // log F_L − log F_R decreases strictly along the segment
    let g = |t: f64| -> f64 {
        let mu = point(t);
        kappa
            .iter()
            .zip(&mu)
            .filter(|(&k, _)| k != 0)
            .map(|(&k, m)| k as f64 * m.ln())
            .sum()
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mu = point(0.5 * (lo + hi));
    let total: f64 = mu.iter().sum();
    Ok(DistributionPoint::Float(mu.into_iter().map(|x| x / total).collect()))
}

/// Returns the endpoints as floats with `a − b` a positive multiple of κ.
fn oriented(kappa: &[i64], a: &DistributionPoint, b: &DistributionPoint) -> Result<(Vec<f64>, Vec<f64>)> {
    let diff: Vec<Rational> = match (a, b) {
        (DistributionPoint::Exact(x), DistributionPoint::Exact(y)) => x.iter().zip(y).map(|(p, q)| p - q).collect(),
        _ => {
            let (x, y) = (a.to_f64(), b.to_f64());
            x.iter()
                .zip(&y)
                .map(|(p, q)| Rational::from_float(p - q).unwrap_or_else(Rational::zero))
                .collect()
        }
    };
    let pivot = kappa.iter().position(|&k| k != 0).expect("κ is nonzero");
    let scale = &diff[pivot] / int(kappa[pivot]);
    let exact = a.is_exact() && b.is_exact();
    let collinear = kappa.iter().zip(&diff).all(|(&k, d)| {
        let err = &scale * int(k) - d;
        if exact {
            err.is_zero()
        } else {
            crate::rational::to_f64(&err).abs() <= 1e-12
        }
    });
    if !collinear || scale.is_zero() {
        return Err(Error::Precondition("segment is not parallel to κ".into()));
    }
    if scale.is_positive() {
        Ok((a.to_f64(), b.to_f64()))
    } else {
        Ok((b.to_f64(), a.to_f64()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn exact(w: &[(i64, i64)]) -> DistributionPoint {
        DistributionPoint::exact(w.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    fn assert_close(mu: &DistributionPoint, want: &[f64]) {
        for (x, y) in mu.to_f64().iter().zip(want) {
            assert!((x - y).abs() < 1e-12, "{mu:?} vs {want:?}");
        }
    }

    #[test]
    fn symmetric_edge() {
        let mu = segment_root(&[1, -1, 0], &exact(&[(1, 1), (0, 1), (0, 1)]), &exact(&[(0, 1), (1, 1), (0, 1)])).unwrap();
        assert_close(&mu, &[0.5, 0.5, 0.0]);
    }

    #[test]
    fn through_the_centre() {
        let third = 1.0 / 3.0;
        let mu = segment_root(&[2, -1, -1], &exact(&[(1, 1), (0, 1), (0, 1)]), &exact(&[(0, 1), (1, 2), (1, 2)])).unwrap();
        assert_close(&mu, &[third; 3]);
        let mu = segment_root(&[1, 1, -2], &exact(&[(1, 2), (1, 2), (0, 1)]), &exact(&[(0, 1), (0, 1), (1, 1)])).unwrap();
        assert_close(&mu, &[third; 3]);
        // endpoints swapped
        let mu = segment_root(&[1, 1, -2], &exact(&[(0, 1), (0, 1), (1, 1)]), &exact(&[(1, 2), (1, 2), (0, 1)])).unwrap();
        assert_close(&mu, &[third; 3]);
    }

    #[test]
    fn residual_is_tiny() {
        let kappa = [3, -1, -2];
        let a = exact(&[(1, 1), (0, 1), (0, 1)]);
        let b = exact(&[(0, 1), (1, 3), (2, 3)]);
        let mu = segment_root(&kappa, &a, &b).unwrap().to_f64();
        let (l, r) = monomial_sides_f64(&kappa, &mu);
        assert!((l - r).abs() <= 1e-12);
    }

    #[test]
    fn rejects_bad_configurations() {
        let a = exact(&[(1, 1), (0, 1), (0, 1)]);
        let b = exact(&[(0, 1), (1, 1), (0, 1)]);
        assert!(matches!(segment_root(&[1, 0, -1], &a, &b), Err(Error::Precondition(_))));
        // parallel to κ but not cut out of the simplex
        let a = exact(&[(3, 4), (1, 4), (0, 1)]);
        let b = exact(&[(1, 4), (3, 4), (0, 1)]);
        assert!(matches!(segment_root(&[1, -1, 0], &a, &b), Err(Error::Precondition(_))));
    }
}
