use serde::{Deserialize, Serialize};

use crate::latgeo::DistributionPoint;
use crate::latgeo::distribution::{monomial_sides, monomial_sides_f64, FLOAT_EQUATION_TOLERANCE};
use crate::presentation::{ExponentVector, RelationPair};
use crate::rational::Rational;
use crate::wordcalc::CentralPairSet;

/// `∏ μ(s)^{m_s} = ∏ μ(s)^{n_s}` for an equal-length pair `(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralityEquation {
    pub pair: RelationPair,
    /// Both sides with their common part `min(m_s, n_s)` removed.
    pub reduced_pair: RelationPair,
}

impl CentralityEquation {
    pub fn new(pair: RelationPair) -> Self {
        let common = pair.lhs.gcd(&pair.rhs);
        let reduced_pair = RelationPair::new(pair.lhs.minus(&common), pair.rhs.minus(&common));
        CentralityEquation { pair, reduced_pair }
    }

    pub fn kappa(&self) -> Vec<i64> {
        self.pair.difference()
    }

    /// Monomial form, e.g. `x1*x2 = x3*x4`.
    pub fn render_monomial(&self) -> String {
        format!("{} = {}", self.pair.lhs.monomial("x"), self.pair.rhs.monomial("x"))
    }

    /// Same equation written with `μ(name)` factors.
    pub fn render_named(&self, names: &[String]) -> String {
        format!("{} = {}", product(&self.pair.lhs, names), product(&self.pair.rhs, names))
    }

    /// Exact check on the unreduced sides; both sides vanishing counts as
    /// equality.
    pub fn holds_exact(&self, mu: &[Rational]) -> bool {
        side_exact(&self.pair.lhs, mu) == side_exact(&self.pair.rhs, mu)
    }

    pub fn holds_float(&self, mu: &[f64]) -> bool {
        (side_f64(&self.pair.lhs, mu) - side_f64(&self.pair.rhs, mu)).abs() <= FLOAT_EQUATION_TOLERANCE
    }
}

pub(crate) fn side_exact(v: &ExponentVector, mu: &[Rational]) -> Rational {
    let exps: Vec<i64> = v.as_slice().iter().map(|&c| c as i64).collect();
    monomial_sides(&exps, mu).0
}

fn side_f64(v: &ExponentVector, mu: &[f64]) -> f64 {
    let exps: Vec<i64> = v.as_slice().iter().map(|&c| c as i64).collect();
    monomial_sides_f64(&exps, mu).0
}

fn product(v: &ExponentVector, names: &[String]) -> String {
    if v.is_zero() {
        return "1".into();
    }
    v.as_slice()
        .iter()
        .zip(names)
        .filter(|(&c, _)| c > 0)
        .map(|(&c, name)| if c == 1 { format!("μ({name})") } else { format!("μ({name})^{c}") })
        .collect::<Vec<_>>()
        .join("·")
}

pub fn centrality_equations(cp: &CentralPairSet) -> Vec<CentralityEquation> {
    cp.pairs.iter().cloned().map(CentralityEquation::new).collect()
}

/// Index of the first equation `mu` violates.
pub fn first_violation(eqs: &[CentralityEquation], mu: &DistributionPoint) -> Option<usize> {
    match mu {
        DistributionPoint::Exact(w) => eqs.iter().position(|e| !e.holds_exact(w)),
        DistributionPoint::Float(w) => eqs.iter().position(|e| !e.holds_float(w)),
    }
}

pub fn is_precentral(eqs: &[CentralityEquation], mu: &DistributionPoint) -> bool {
    first_violation(eqs, mu).is_none()
}
