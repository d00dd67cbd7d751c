use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, is_probability_vector, to_f64, Rational};

pub const FLOAT_SUM_TOLERANCE: f64 = 1e-12;
pub const FLOAT_EQUATION_TOLERANCE: f64 = 1e-12;

/// A point of the simplex Δ_S.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "Repr", into = "Repr")]
pub enum DistributionPoint {
    Exact(Vec<Rational>),
    Float(Vec<f64>),
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
enum Repr {
    Exact {
        #[serde(with = "crate::rational::serde_str::vec")]
        weights: Vec<Rational>,
    },
    Float {
        weights: Vec<f64>,
    },
}

impl From<Repr> for DistributionPoint {
    fn from(r: Repr) -> Self {
        match r {
            Repr::Exact { weights } => DistributionPoint::Exact(weights),
            Repr::Float { weights } => DistributionPoint::Float(weights),
        }
    }
}

impl From<DistributionPoint> for Repr {
    fn from(p: DistributionPoint) -> Self {
        match p {
            DistributionPoint::Exact(weights) => Repr::Exact { weights },
            DistributionPoint::Float(weights) => Repr::Float { weights },
        }
    }
}

impl DistributionPoint {
    pub fn exact(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("no weights".into()));
        }
        if !is_probability_vector(&weights) {
            let shown: Vec<String> = weights.iter().map(format_rational).collect();
            return Err(Error::InvalidDistribution(format!(
                "weights [{}] must be nonnegative and sum to 1",
                shown.join(", ")
            )));
        }
        Ok(DistributionPoint::Exact(weights))
    }

    pub fn float(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidDistribution("no weights".into()));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidDistribution("weights must be finite and nonnegative".into()));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > FLOAT_SUM_TOLERANCE {
            return Err(Error::InvalidDistribution(format!("weights sum to {sum}, not 1")));
        }
        Ok(DistributionPoint::Float(weights))
    }

    pub fn uniform(n: usize) -> Self {
        DistributionPoint::Exact(vec![Rational::new(1.into(), (n as i64).into()); n])
    }

    /// Uniform distribution on the generators in `support` (a bitmask).
    pub fn uniform_on(n: usize, support: u64) -> Self {
        let k = support.count_ones() as i64;
        let w = Rational::new(1.into(), k.into());
        DistributionPoint::Exact(
            (0..n).map(|i| if support >> i & 1 == 1 { w.clone() } else { Rational::zero() }).collect(),
        )
    }

    pub fn point_mass(n: usize, at: usize) -> Self {
        DistributionPoint::Exact(
            (0..n).map(|i| if i == at { Rational::one() } else { Rational::zero() }).collect(),
        )
    }

    pub fn len(&self) -> usize {
        match self {
            DistributionPoint::Exact(w) => w.len(),
            DistributionPoint::Float(w) => w.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, DistributionPoint::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&[Rational]> {
        match self {
            DistributionPoint::Exact(w) => Some(w),
            DistributionPoint::Float(_) => None,
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            DistributionPoint::Exact(w) => w.iter().map(to_f64).collect(),
            DistributionPoint::Float(w) => w.clone(),
        }
    }

    pub fn is_positive_at(&self, i: usize) -> bool {
        match self {
            DistributionPoint::Exact(w) => w[i].is_positive(),
            DistributionPoint::Float(w) => w[i] > 0.0,
        }
    }

    pub fn support_mask(&self) -> u64 {
        (0..self.len()).filter(|&i| self.is_positive_at(i)).fold(0, |m, i| m | 1 << i)
    }

    pub fn is_strictly_positive(&self) -> bool {
        (0..self.len()).all(|i| self.is_positive_at(i))
    }

    pub fn render(&self) -> String {
        match self {
            DistributionPoint::Exact(w) => {
                w.iter().map(format_rational).collect::<Vec<_>>().join(",")
            }
            DistributionPoint::Float(w) => {
                w.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(",")
            }
        }
    }
}

/// `∏_{κ_s>0} μ(s)^{κ_s}` and `∏_{κ_r<0} μ(r)^{|κ_r|}` in exact arithmetic.
pub(crate) fn monomial_sides(kappa: &[i64], mu: &[Rational]) -> (Rational, Rational) {
    let mut lhs = Rational::one();
    let mut rhs = Rational::one();
    for (&k, m) in kappa.iter().zip(mu) {
        if k > 0 {
            lhs *= num_traits::pow(m.clone(), k as usize);
        } else if k < 0 {
            rhs *= num_traits::pow(m.clone(), k.unsigned_abs() as usize);
        }
    }
    (lhs, rhs)
}

pub(crate) fn monomial_sides_f64(kappa: &[i64], mu: &[f64]) -> (f64, f64) {
    let mut lhs = 1.0;
    let mut rhs = 1.0;
    for (&k, &m) in kappa.iter().zip(mu) {
        if k > 0 {
            lhs *= m.powi(k as i32);
        } else if k < 0 {
            rhs *= m.powi(-k as i32);
        }
    }
    (lhs, rhs)
}

/// Whether `mu` satisfies the monomial identity of every `κ ∈ K`: exact in
/// exact mode, within 10⁻¹² in float mode.
pub fn lambda_membership(k_vectors: &[Vec<i64>], mu: &DistributionPoint) -> bool {
    match mu {
        DistributionPoint::Exact(w) => k_vectors.iter().all(|k| {
            let (l, r) = monomial_sides(k, w);
            l == r
        }),
        DistributionPoint::Float(w) => k_vectors.iter().all(|k| {
            let (l, r) = monomial_sides_f64(k, w);
            (l - r).abs() <= FLOAT_EQUATION_TOLERANCE
        }),
    }
}

/// Largest `|F_L − F_R|` over `K` (float evaluation).
pub fn equation_residual(k_vectors: &[Vec<i64>], mu: &DistributionPoint) -> f64 {
    let w = mu.to_f64();
    k_vectors
        .iter()
        .map(|k| {
            let (l, r) = monomial_sides_f64(k, &w);
            (l - r).abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn exact(w: &[(i64, i64)]) -> DistributionPoint {
        DistributionPoint::exact(w.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    const K: &[&[i64]] = &[&[1, 1, -2], &[1, -2, 1]];

    fn k() -> Vec<Vec<i64>> {
        K.iter().map(|v| v.to_vec()).collect()
    }

    #[test]
    fn two_point_identities() {
        assert!(lambda_membership(&k(), &exact(&[(1, 3), (1, 3), (1, 3)])));
        assert!(lambda_membership(&k(), &exact(&[(1, 1), (0, 1), (0, 1)])));
        assert!(!lambda_membership(&k(), &exact(&[(1, 2), (1, 4), (1, 4)])));
    }

    #[test]
    fn float_membership_uses_tolerance() {
        let mu = DistributionPoint::float(vec![1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]).unwrap();
        assert!(lambda_membership(&k(), &mu));
        assert!(equation_residual(&k(), &mu) < 1e-15);
    }

    #[test]
    fn validation() {
        assert!(DistributionPoint::exact(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(DistributionPoint::exact(vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(DistributionPoint::float(vec![0.5, 0.5 + 1e-9]).is_err());
        assert!(DistributionPoint::float(vec![0.5, 0.5 + 1e-14]).is_ok());
        assert_eq!(DistributionPoint::uniform_on(4, 0b0101), exact(&[(1, 2), (0, 1), (1, 2), (0, 1)]));
        assert_eq!(exact(&[(1, 2), (0, 1), (1, 2)]).support_mask(), 0b101);
    }

    #[test]
    fn json_shape() {
        let mu = exact(&[(1, 2), (1, 2)]);
        let text = serde_json::to_string(&mu).unwrap();
        assert_eq!(text, r#"{"mode":"exact","weights":["1/2","1/2"]}"#);
        assert_eq!(serde_json::from_str::<DistributionPoint>(&text).unwrap(), mu);
    }
}
