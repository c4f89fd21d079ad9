use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

use super::{Field, FieldSpec};
use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// Deterministic primality by trial division; fine for moduli below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// GF(p) with residues stored as `u32` in `[0, p)`.
///
/// Products are below 2^62 and reduced with a Barrett step against the
/// precomputed `⌊(2^64 - 1) / p⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    barrett: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Self {
            p: p as u32,
            barrett: u64::MAX / p,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// `x mod p` for `x < 2^62`.
    #[inline]
    fn reduce(&self, x: u64) -> u32 {
        let q = ((u128::from(x) * u128::from(self.barrett)) >> 64) as u64;
        let p = u64::from(self.p);
        let mut r = x - q * p;
        while r >= p {
            r -= p;
        }
        r as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1 % self.p
    }

    fn embed_int(&self, v: i64) -> u32 {
        v.rem_euclid(i64::from(self.p)) as u32
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = u64::from(*a) + u64::from(*b);
        let p = u64::from(self.p);
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            // a + p - b < p < 2^31, no overflow
            a + (self.p - b)
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(u64::from(*a) * u64::from(*b))
    }

    fn invert(&self, a: &u32) -> Result<u32> {
        if (*a).is_multiple_of(self.p) {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid on (p, a); t tracks the coefficient of a
        let (mut r0, mut r1) = (i64::from(self.p), i64::from(*a % self.p));
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(i64::from(self.p)) as u32)
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn normalize(&self, a: &u32) -> u32 {
        a % self.p
    }

    fn parse_elem(&self, token: &str) -> Result<u32> {
        let token = token.trim();
        let v: BigInt = token.parse().map_err(|_| Error::BadToken {
            token: token.to_string(),
            reason: "expected an integer".to_string(),
        })?;
        let r = v.mod_floor(&BigInt::from(self.p));
        Ok(r.to_u32().expect("residue below modulus"))
    }

    fn format_elem(&self, a: &u32) -> String {
        a.to_string()
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
}
