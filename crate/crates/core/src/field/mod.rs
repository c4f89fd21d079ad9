//! Field arithmetic used by every algorithm in the crate.
//!
//! Algorithms are generic over [`Field`]; elements are plain values
//! (`u32` residues, [`BigRational`](num_rational::BigRational), `f64`)
//! and all arithmetic goes through the field object so that a single
//! element type can serve any modulus or tolerance.
//!
//! Counted arithmetic lives on [`OpCounter`]: calling `counter.mul(field,
//! a, b)` multiplies and bumps the tally of the active [`Phase`].

mod approx;
mod counter;
mod prime;
mod rational;

use std::fmt;
use std::str::FromStr;

use rand::Rng;

pub use approx::Approx;
pub use counter::{OpCounter, Phase, Tally};
pub use prime::{is_prime, PrimeField};
pub use rational::Rationals;

use crate::error::{Error, Result};

/// A field with a chosen element representation.
///
/// Implementations are cheap to clone and immutable; all methods are pure.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed_int(&self, v: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; fails on zero (or, for [`Approx`], on
    /// anything within tolerance of zero).
    fn invert(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.invert(b)?))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Brings an element into canonical form. Elements produced by the
    /// field's own operations are already canonical.
    fn normalize(&self, a: &Self::Elem) -> Self::Elem;

    /// Parses one coefficient token (`7`, `-3`, `2/5`, `1e-3`, ...).
    fn parse_elem(&self, token: &str) -> Result<Self::Elem>;

    fn format_elem(&self, a: &Self::Elem) -> String;

    fn spec(&self) -> FieldSpec;

    /// Pivot weight for magnitude pivoting; `None` for exact fields where
    /// any nonzero pivot is as good as another.
    fn magnitude(&self, _a: &Self::Elem) -> Option<f64> {
        None
    }

    /// Whether `is_zero` decides exactly.
    fn is_exact(&self) -> bool {
        self.magnitude(&self.one()).is_none()
    }

    /// Draws a random element. Rationals are kept small (|num|, den ≤ 5)
    /// so that test oracles stay fast.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Draws a random nonzero element.
    fn sample_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.sample(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// Which field a computation runs over.
///
/// Textual form: `gf:<p>`, `rational`, `approx:<tol>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldSpec {
    Prime(u32),
    Rational,
    Approx(f64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|f| FieldSpec::Prime(f.modulus()))
    }

    pub fn approx(tol: f64) -> Result<Self> {
        Approx::new(tol).map(|f| FieldSpec::Approx(f.tolerance()))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
            FieldSpec::Rational => f.write_str("rational"),
            FieldSpec::Approx(tol) => write!(f, "approx:{tol:e}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| Error::UnknownField(s.to_string()))?;
            return FieldSpec::prime(p);
        }
        if let Some(tol) = s.strip_prefix("approx:") {
            let tol: f64 = tol
                .trim()
                .parse()
                .map_err(|_| Error::UnknownField(s.to_string()))?;
            return FieldSpec::approx(tol);
        }
        Err(Error::UnknownField(s.to_string()))
    }
}

/// Calls `$body` with `$f` bound to the concrete field named by a
/// [`FieldSpec`]. Lets front ends dispatch once into generic code.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            $crate::field::FieldSpec::Prime(p) => {
                let $f = $crate::field::PrimeField::new(u64::from(p))
                    .expect("FieldSpec holds a validated prime");
                $body
            }
            $crate::field::FieldSpec::Rational => {
                let $f = $crate::field::Rationals;
                $body
            }
            $crate::field::FieldSpec::Approx(tol) => {
                let $f =
                    $crate::field::Approx::new(tol).expect("FieldSpec holds a validated tolerance");
                $body
            }
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_strings() {
        assert_eq!("gf:2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("gf:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!(
            "rational".parse::<FieldSpec>().unwrap(),
            FieldSpec::Rational
        );
        assert_eq!(
            "approx:1e-9".parse::<FieldSpec>().unwrap(),
            FieldSpec::Approx(1e-9)
        );
        assert_eq!(
            "gf:2147483647".parse::<FieldSpec>().unwrap().to_string(),
            "gf:2147483647"
        );
        assert_eq!(
            FieldSpec::Approx(1e-9)
                .to_string()
                .parse::<FieldSpec>()
                .unwrap(),
            FieldSpec::Approx(1e-9)
        );
    }

    #[test]
    fn bad_spec_strings() {
        assert_eq!("gf:8".parse::<FieldSpec>(), Err(Error::InvalidModulus(8)));
        assert_eq!("gf:1".parse::<FieldSpec>(), Err(Error::InvalidModulus(1)));
        assert_eq!(
            "gf:2147483659".parse::<FieldSpec>(),
            Err(Error::InvalidModulus(2147483659))
        );
        assert!(matches!(
            "approx:0".parse::<FieldSpec>(),
            Err(Error::InvalidTolerance(_))
        ));
        assert!(matches!(
            "approx:-1".parse::<FieldSpec>(),
            Err(Error::InvalidTolerance(_))
        ));
        assert!(matches!(
            "real".parse::<FieldSpec>(),
            Err(Error::UnknownField(_))
        ));
        assert!(matches!(
            "gf:x".parse::<FieldSpec>(),
            Err(Error::UnknownField(_))
        ));
    }
}
