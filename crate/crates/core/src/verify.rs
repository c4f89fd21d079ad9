//! Cross-checks: sliding vs naive vs dense sequences, plus the block
//! identity at every order above the half-bandwidth.

use std::fmt;

use rand::{Rng, SeedableRng};

use crate::baseline::naive_sequence;
use crate::error::Result;
use crate::field::Field;
use crate::oracle::{dense_sequence, theorem1_blocks};
use crate::sequence::InvertibilitySequence;
use crate::sliding::invertibility_sequence;
use crate::stencil::Stencil;

/// Deliberate corruption of the sliding result, for exercising the
/// mismatch path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    None,
    FlipLastBit,
}

/// Outcome of checking one stencil.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub stencil: String,
    pub n: usize,
    pub sliding: InvertibilitySequence,
    pub naive: InvertibilitySequence,
    pub dense: InvertibilitySequence,
    /// Orders `m` in `k < m <= n` where the block identity failed.
    pub block_failures: Vec<usize>,
}

impl Check {
    pub fn agree(&self) -> bool {
        self.sliding == self.naive && self.sliding == self.dense && self.block_failures.is_empty()
    }

    /// Smallest order at which any two sequences disagree.
    pub fn first_mismatch(&self) -> Option<usize> {
        [
            self.sliding.first_difference(&self.naive),
            self.sliding.first_difference(&self.dense),
            self.naive.first_difference(&self.dense),
        ]
        .into_iter()
        .flatten()
        .min()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "stencil: {}", self.stencil)?;
        writeln!(f, "n:       {}", self.n)?;
        if let Some(m) = self.first_mismatch() {
            writeln!(f, "first differing order: {m}")?;
            let cut = |s: &InvertibilitySequence| s.truncated(m).expect("m >= 1").to_string();
            writeln!(f, "sliding: {}", cut(&self.sliding))?;
            writeln!(f, "naive:   {}", cut(&self.naive))?;
            writeln!(f, "dense:   {}", cut(&self.dense))?;
        }
        if !self.block_failures.is_empty() {
            writeln!(
                f,
                "block identity fails at orders {:?}",
                self.block_failures
            )?;
        }
        Ok(())
    }
}

pub fn check_stencil<F: Field>(s: &Stencil<F>, n: usize, fault: Fault) -> Result<Check> {
    let mut sliding = invertibility_sequence(s, n)?;
    if fault == Fault::FlipLastBit {
        let mut bits = sliding.bits().to_vec();
        let last = bits.len() - 1;
        bits[last] = !bits[last];
        sliding = InvertibilitySequence::new(bits)?;
    }
    let naive = naive_sequence(s, n)?;
    let dense = dense_sequence(s, n)?;
    let norm = s.normalize();
    let mut block_failures = Vec::new();
    if norm.k() > 0 && norm.field().is_exact() {
        for m in norm.k() + 1..=n {
            if !theorem1_blocks(&norm, m)?.holds() {
                block_failures.push(m);
            }
        }
    }
    Ok(Check {
        stencil: s.display(),
        n,
        sliding,
        naive,
        dense,
        block_failures,
    })
}

/// A stencil of half-bandwidth exactly `k` with uniformly drawn
/// coefficients; edges may be zero, so normalization gets exercised.
pub fn random_stencil<F: Field, R: Rng + ?Sized>(field: &F, k: usize, rng: &mut R) -> Stencil<F> {
    let coeffs = (0..2 * k + 1).map(|_| field.sample(rng)).collect();
    Stencil::new(field.clone(), coeffs).expect("odd length")
}

/// Like [`random_stencil`] but with both band edges nonzero.
pub fn random_full_band_stencil<F: Field, R: Rng + ?Sized>(
    field: &F,
    k: usize,
    rng: &mut R,
) -> Stencil<F> {
    let coeffs = (0..2 * k + 1)
        .map(|i| {
            if i == 0 || i == 2 * k {
                field.sample_nonzero(rng)
            } else {
                field.sample(rng)
            }
        })
        .collect();
    Stencil::new(field.clone(), coeffs).expect("odd length")
}

/// Summary of a seeded random verification run.
#[derive(Debug, Clone)]
pub struct RandomReport {
    pub total: usize,
    pub passed: usize,
    /// The failing instance with the smallest first differing order.
    pub worst: Option<Check>,
}

/// `count` instances with `k` uniform in `1..=max_k` and length `max_n`
/// (every shorter length is a prefix). Deterministic in `seed`.
pub fn verify_random<F: Field>(
    field: &F,
    count: usize,
    max_k: usize,
    max_n: usize,
    seed: u64,
    fault: Fault,
) -> Result<RandomReport> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut passed = 0;
    let mut worst: Option<Check> = None;
    for _ in 0..count {
        let k = rng.gen_range(1..=max_k.max(1));
        let s = random_stencil(field, k, &mut rng);
        let check = check_stencil(&s, max_n, fault)?;
        if check.agree() {
            passed += 1;
        } else {
            let key = |c: &Check| (c.first_mismatch().unwrap_or(usize::MAX), c.stencil.len());
            if worst.as_ref().is_none_or(|w| key(&check) < key(w)) {
                worst = Some(check);
            }
        }
    }
    Ok(RandomReport {
        total: count,
        passed,
        worst,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn single_stencil_agrees() {
        let s = Stencil::from_ints(PrimeField::new(2).unwrap(), &[1, 1, 1]).unwrap();
        let c = check_stencil(&s, 12, Fault::None).unwrap();
        assert!(c.agree());
        assert_eq!(c.first_mismatch(), None);
    }

    #[test]
    fn fault_is_reported() {
        let s = Stencil::from_ints(Rationals, &[1, 0, 1]).unwrap();
        let c = check_stencil(&s, 6, Fault::FlipLastBit).unwrap();
        assert!(!c.agree());
        assert_eq!(c.first_mismatch(), Some(6));
        assert!(c.to_string().contains("first differing order: 6"));
    }

    #[test]
    fn random_run_is_deterministic() {
        let f = PrimeField::new(7).unwrap();
        let a = verify_random(&f, 30, 4, 12, 42, Fault::None).unwrap();
        assert_eq!((a.total, a.passed), (30, 30));
        let b = verify_random(&f, 30, 4, 12, 42, Fault::FlipLastBit).unwrap();
        assert_eq!(b.passed, 0);
        let c = verify_random(&f, 30, 4, 12, 42, Fault::FlipLastBit).unwrap();
        assert_eq!(b.worst, c.worst);
    }
}
