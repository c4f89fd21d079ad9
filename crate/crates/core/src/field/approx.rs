use rand::Rng;

use super::{Field, FieldSpec};
use crate::error::{Error, Result};

/// Machine reals with a zero tolerance. Best effort only: a pivot within
/// `tol` of zero is declared zero, which can misclassify near-singular
/// matrices in either direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Approx {
    tol: f64,
}

impl Approx {
    pub fn new(tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidTolerance(tol));
        }
        Ok(Self { tol })
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }
}

impl Field for Approx {
    type Elem = f64;

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn embed_int(&self, v: i64) -> f64 {
        v as f64
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }

    fn sub(&self, a: &f64, b: &f64) -> f64 {
        a - b
    }

    fn neg(&self, a: &f64) -> f64 {
        -a
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }

    fn invert(&self, a: &f64) -> Result<f64> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(1.0 / a)
    }

    fn is_zero(&self, a: &f64) -> bool {
        a.abs() <= self.tol
    }

    fn normalize(&self, a: &f64) -> f64 {
        *a
    }

    fn parse_elem(&self, token: &str) -> Result<f64> {
        let token = token.trim();
        let bad = || Error::BadToken {
            token: token.to_string(),
            reason: "expected a real number or p/q".to_string(),
        };
        match token.split_once('/') {
            Some((n, d)) => {
                let n: f64 = n.trim().parse().map_err(|_| bad())?;
                let d: f64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0.0 {
                    return Err(Error::BadToken {
                        token: token.to_string(),
                        reason: "zero denominator".to_string(),
                    });
                }
                Ok(n / d)
            }
            None => token.parse().map_err(|_| bad()),
        }
    }

    fn format_elem(&self, a: &f64) -> String {
        a.to_string()
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Approx(self.tol)
    }

    fn magnitude(&self, a: &f64) -> Option<f64> {
        Some(a.abs())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        rng.gen_range(-1.0..1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_zero() {
        let f = Approx::new(1e-9).unwrap();
        assert!(f.is_zero(&1e-12));
        assert!(!f.is_zero(&1e-6));
        assert_eq!(f.invert(&1e-12), Err(Error::DivisionByZero));
        assert_eq!(f.invert(&4.0).unwrap(), 0.25);
        assert!(!f.is_exact());
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(Approx::new(0.0).is_err());
        assert!(Approx::new(f64::NAN).is_err());
        assert!(Approx::new(f64::INFINITY).is_err());
    }
}
