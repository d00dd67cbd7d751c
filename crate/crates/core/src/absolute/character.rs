//! Multiplicative functionals on the branching monoid given by path measures.

use num_traits::{One, Signed, Zero};

use super::equations::{first_violation, side_exact, CentralityEquation};
use crate::error::{Error, Result};
use crate::latgeo::DistributionPoint;
use crate::presentation::ExponentVector;
use crate::rational::{format_rational, Rational};
use crate::wordcalc::{multisets, RewriteSystem};

const SEARCH_CAP: usize = 1_000_000;

/// `(element, level) ↦ ∏ μ(s)^{w_s}` for any length-`level` word `w`
/// reaching `element`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    pub mu: Vec<Rational>,
    pub rewrite_system: RewriteSystem,
}

impl CharacterTable {
    pub fn num_generators(&self) -> usize {
        self.mu.len()
    }

    /// Value of the path labelled by the multiset `word`.
    pub fn value_of_word(&self, word: &ExponentVector) -> Rational {
        side_exact(word, &self.mu)
    }

    /// Value at the vertex `(element, level)`; `None` if no word of that
    /// length reaches `element`.
    pub fn value(&self, element: &ExponentVector, level: usize) -> Result<Option<Rational>> {
        let target = self.rewrite_system.normal_form(element);
        Ok(self.representative(&target, level)?.map(|w| self.value_of_word(&w)))
    }

    fn representative(&self, target: &ExponentVector, level: usize) -> Result<Option<ExponentVector>> {
        if target.degree() == level as u64 {
            return Ok(Some(target.clone()));
        }
        Ok(multisets(self.num_generators(), level as u32, SEARCH_CAP)?
            .into_iter()
            .find(|m| &self.rewrite_system.normal_form(m) == target))
    }

    pub fn generator_values(&self) -> Vec<Rational> {
        self.mu.clone()
    }

    pub fn scale(&self, lambda: Rational) -> Result<ScaledCharacter> {
        ScaledCharacter::new(self.clone(), lambda)
    }
}

/// `λ^level` times a normalized character.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledCharacter {
    pub base: CharacterTable,
    pub lambda: Rational,
}

impl ScaledCharacter {
    fn new(base: CharacterTable, lambda: Rational) -> Result<Self> {
        if !lambda.is_positive() {
            return Err(Error::Domain(format!("scale {} is not positive", format_rational(&lambda))));
        }
        Ok(ScaledCharacter { base, lambda })
    }

    pub fn value(&self, element: &ExponentVector, level: usize) -> Result<Option<Rational>> {
        Ok(self.base.value(element, level)?.map(|v| v * num_traits::pow(self.lambda.clone(), level)))
    }

    pub fn generator_values(&self) -> Vec<Rational> {
        self.base.mu.iter().map(|m| m * &self.lambda).collect()
    }

    pub fn scale(&self, lambda: Rational) -> Result<ScaledCharacter> {
        ScaledCharacter::new(self.base.clone(), &self.lambda * lambda)
    }

    pub fn is_normalized(&self) -> bool {
        self.generator_values().iter().sum::<Rational>() == Rational::one()
    }
}

pub fn character_from(
    mu: &DistributionPoint,
    rs: &RewriteSystem,
    eqs: &[CentralityEquation],
) -> Result<CharacterTable> {
    let DistributionPoint::Exact(w) = mu else {
        return Err(Error::Precondition("characters need an exact distribution".into()));
    };
    if w.len() != rs.num_vars {
        return Err(Error::Precondition("distribution length differs from the generator count".into()));
    }
    if let Some(i) = first_violation(eqs, mu) {
        return Err(Error::NotPrecentral(format!("equation {} fails", i + 1)));
    }
    Ok(CharacterTable { mu: w.clone(), rewrite_system: rs.clone() })
}

/// Multiplies the values at level `n` by `lam^n`.
pub fn scale_character(ct: &CharacterTable, lam: f64) -> Result<ScaledCharacter> {
    if !(lam.is_finite() && lam > 0.0) {
        return Err(Error::Domain(format!("scale {lam} is not positive")));
    }
    let lambda = Rational::from_float(lam).unwrap_or_else(Rational::zero);
    ct.scale(lambda)
}
