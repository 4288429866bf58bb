//! Exact ordered-field scalars.
//!
//! Every algorithm in this crate is a decision procedure: sign tests, rank
//! tests and LP optimality must be exact. The [`Scalar`] trait therefore asks
//! for an ordered field with exact arithmetic. It is implemented for every
//! `num_rational::Ratio<T>` over a signed integer type, so `BigRational` (the
//! default, see [`crate::Rat`]) and fixed-width rationals such as
//! `Ratio<i64>` both work. Fixed-width rationals overflow on large inputs and
//! are only suitable for small examples.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// An exact, totally ordered field.
pub trait Scalar: Clone + Ord + Hash + Debug + Display + Num + Signed + Send + Sync + 'static {
    /// Embeds an integer.
    fn from_int(v: i64) -> Self;

    /// The fraction `numer / denom`; `denom` must be non-zero.
    fn from_frac(numer: i64, denom: i64) -> Self;

    /// Positive factor `c` such that `c * v` is a primitive integer vector
    /// (integer entries with gcd 1). Returns one for the zero vector.
    fn primitive_factor(v: &[Self]) -> Self;

    /// True when the value is an integer.
    fn is_integral(&self) -> bool;

    /// Lossy conversion, used only for diagnostics.
    fn approx_f64(&self) -> f64;
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Hash + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Ratio::new(
            T::from_i64(numer).expect("integer out of range for scalar type"),
            T::from_i64(denom).expect("integer out of range for scalar type"),
        )
    }

    fn primitive_factor(v: &[Self]) -> Self {
        let mut lcm = T::one();
        for x in v.iter().filter(|x| !x.is_zero()) {
            lcm = lcm.lcm(x.denom());
        }
        let mut gcd = T::zero();
        for x in v.iter().filter(|x| !x.is_zero()) {
            let scaled = x.numer().clone() * (lcm.clone() / x.denom().clone());
            gcd = gcd.gcd(&scaled);
        }
        if gcd.is_zero() {
            return <Self as num_traits::One>::one();
        }
        Ratio::new(lcm, gcd)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn approx_f64(&self) -> f64 {
        let n = self.numer().to_f64().unwrap_or(f64::NAN);
        let d = self.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

fn is_integer_literal(s: &str, allow_sign: bool) -> bool {
    let digits = if allow_sign { s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s) } else { s };
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `"p/q"` or `"p"`. The sign may only appear on the numerator.
pub fn parse_rat(text: &str) -> Result<BigRational, ParseRatError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRatError::Empty);
    }
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    if !is_integer_literal(numer, true) {
        return Err(ParseRatError::Invalid(text.to_string()));
    }
    let numer = BigInt::from_str(numer).map_err(|_| ParseRatError::Invalid(text.to_string()))?;
    let denom = match denom {
        None => BigInt::from(1),
        Some(d) => {
            if !is_integer_literal(d, false) {
                return Err(ParseRatError::Invalid(text.to_string()));
            }
            BigInt::from_str(d).map_err(|_| ParseRatError::Invalid(text.to_string()))?
        }
    };
    if denom.is_zero() {
        return Err(ParseRatError::ZeroDenominator(text.to_string()));
    }
    Ok(BigRational::new(numer, denom))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat<S: Scalar>(value: &S) -> String {
    // `Ratio`'s Display already follows this convention.
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::from_frac(n, d)
    }

    #[test]
    fn parse_accepts_canonical_forms() {
        assert_eq!(parse_rat("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rat("-6/8").unwrap(), q(-3, 4));
        assert_eq!(parse_rat(" 7 ").unwrap(), q(7, 1));
        assert_eq!(parse_rat("+2").unwrap(), q(2, 1));
        assert_eq!(parse_rat("0/5").unwrap(), q(0, 1));
    }

    #[test]
    fn parse_rejects_bad_literals() {
        assert_eq!(parse_rat("1/0"), Err(ParseRatError::ZeroDenominator("1/0".into())));
        assert!(matches!(parse_rat("1/-2"), Err(ParseRatError::Invalid(_))));
        assert!(matches!(parse_rat("0.5"), Err(ParseRatError::Invalid(_))));
        assert!(matches!(parse_rat("a"), Err(ParseRatError::Invalid(_))));
        assert!(matches!(parse_rat("1/2/3"), Err(ParseRatError::Invalid(_))));
        assert_eq!(parse_rat(""), Err(ParseRatError::Empty));
    }

    #[test]
    fn format_puts_sign_on_numerator() {
        assert_eq!(format_rat(&q(3, -4)), "-3/4");
        assert_eq!(format_rat(&q(4, 2)), "2");
        assert_eq!(format_rat(&q(0, 3)), "0");
    }

    #[test]
    fn primitive_factor_clears_denominators_and_gcd() {
        let v = vec![q(1, 2), q(-1, 3), q(0, 1)];
        let c = BigRational::primitive_factor(&v);
        assert_eq!(c, q(6, 1));
        let w = vec![q(4, 1), q(6, 1)];
        assert_eq!(BigRational::primitive_factor(&w), q(1, 2));
        assert_eq!(BigRational::primitive_factor(&[q(0, 1)]), q(1, 1));
    }

    #[test]
    fn fixed_width_rationals_implement_scalar() {
        let v = vec![Ratio::<i64>::from_frac(2, 4), Ratio::<i64>::from_frac(3, 1)];
        assert_eq!(Ratio::<i64>::primitive_factor(&v), Ratio::from_integer(2));
    }
}
