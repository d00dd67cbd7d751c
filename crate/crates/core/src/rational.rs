//! Arbitrary-precision rationals and their textual form (`p/q`, integers,
//! or finite decimals).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `3`, `-2/7`, or `0.125`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit()) || frac.is_empty() && whole_digits.is_empty()
        {
            return None;
        }
        let w: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits.parse().ok()?
        };
        let f: BigInt = if frac.is_empty() {
            BigInt::zero()
        } else {
            frac.parse().ok()?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(w * &scale + f, scale);
        return Some(if negative { -value } else { value });
    }
    let n: BigInt = t.parse().ok()?;
    Some(Rational::from_integer(n))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Fall back on separate conversion when numerator/denominator are huge.
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// `base^exp` for a signed exponent; `None` for `0^negative`.
pub fn pow_signed(base: &Rational, exp: i64) -> Option<Rational> {
    if exp >= 0 {
        Some(num_traits::pow(base.clone(), exp as usize))
    } else if base.is_zero() {
        None
    } else {
        Some(num_traits::pow(base.recip(), exp.unsigned_abs() as usize))
    }
}

pub fn is_probability_vector(weights: &[Rational]) -> bool {
    weights.iter().all(|w| !w.is_negative()) && weights.iter().sum::<Rational>() == Rational::one()
}

/// Serde adapters that write rationals as strings.
pub mod serde_str {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("bad rational `{text}`")))
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&format_rational(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts
                .iter()
                .map(|t| parse_rational(t).ok_or_else(|| D::Error::custom(format!("bad rational `{t}`"))))
                .collect()
        }
    }

    pub mod matrix {
        use super::*;

        pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
            let rows: Vec<Vec<String>> =
                m.iter().map(|r| r.iter().map(format_rational).collect()).collect();
            serde::Serialize::serialize(&rows, s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<Vec<Vec<Rational>>, D::Error> {
            let rows = Vec::<Vec<String>>::deserialize(d)?;
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|t| {
                            parse_rational(t)
                                .ok_or_else(|| D::Error::custom(format!("bad rational `{t}`")))
                        })
                        .collect()
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("1/8"), Some(rat(1, 8)));
        assert_eq!(parse_rational(" -3 "), Some(int(-3)));
        assert_eq!(parse_rational("0.125"), Some(rat(1, 8)));
        assert_eq!(parse_rational(".5"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-1.5"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&rat(2, 4)), "1/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(format_rational(&rat(-6, 3)), "-2");
    }

    #[test]
    fn signed_powers() {
        assert_eq!(pow_signed(&rat(1, 2), -3), Some(int(8)));
        assert_eq!(pow_signed(&int(0), -1), None);
        assert_eq!(pow_signed(&int(0), 0), Some(int(1)));
    }
}
