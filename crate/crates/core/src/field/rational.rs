use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Field, FieldSpec};
use crate::error::{Error, Result};

/// The rationals with unbounded numerator and denominator.
///
/// [`BigRational`] keeps every value reduced with a positive denominator,
/// so structural equality is value equality.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn embed_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn invert(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn normalize(&self, a: &BigRational) -> BigRational {
        BigRational::new(a.numer().clone(), a.denom().clone())
    }

    fn parse_elem(&self, token: &str) -> Result<BigRational> {
        let token = token.trim();
        let bad = |reason: &str| Error::BadToken {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let (num, den) = match token.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (token, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("expected p or p/q"))?;
        let den: BigInt = den.parse().map_err(|_| bad("expected p or p/q"))?;
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let num = rng.gen_range(-5i64..=5);
        let den = rng.gen_range(1i64..=5);
        BigRational::new(num.into(), den.into())
    }
}

impl Rationals {
    /// Largest bit length among numerator and denominator.
    pub fn bits(a: &BigRational) -> u64 {
        a.numer().abs().bits().max(a.denom().bits())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        Rationals.parse_elem(s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(Rationals.mul(&q("2/3"), &q("3/4")), q("1/2"));
        assert_eq!(Rationals.invert(&q("2/3")).unwrap(), q("3/2"));
        assert_eq!(Rationals.invert(&q("0")), Err(Error::DivisionByZero));
        assert!(Rationals.is_zero(&q("0/1")));
        assert!(!Rationals.is_zero(&q("1/1000000000")));
    }

    #[test]
    fn canonical_form() {
        let a = q("4/-6");
        assert_eq!(a.numer(), &BigInt::from(-2));
        assert_eq!(a.denom(), &BigInt::from(3));
        assert_eq!(Rationals.normalize(&a), a);
        assert_eq!(Rationals.format_elem(&q("6/3")), "2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Rationals.parse_elem("1/0"),
            Err(Error::BadToken { .. })
        ));
        assert!(matches!(
            Rationals.parse_elem("x"),
            Err(Error::BadToken { .. })
        ));
        assert!(matches!(
            Rationals.parse_elem("1/2/3"),
            Err(Error::BadToken { .. })
        ));
    }

    #[test]
    fn no_overflow() {
        let big = q("123456789012345678901234567890");
        let sq = Rationals.mul(&big, &big);
        assert_eq!(Rationals.div(&sq, &big).unwrap(), big);
        assert!(Rationals::bits(&sq) > 64);
    }
}
