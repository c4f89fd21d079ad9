use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Bit `i` (1-based) records whether the order-`i` matrix of a family is
/// invertible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvertibilitySequence {
    bits: Vec<bool>,
}

impl InvertibilitySequence {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Invertibility of the order-`i` matrix, `1 <= i <= len`.
    pub fn is_invertible(&self, order: usize) -> bool {
        assert!(
            order >= 1 && order <= self.bits.len(),
            "order {order} out of range"
        );
        self.bits[order - 1]
    }

    /// 1-based orders whose matrix is singular.
    pub fn singular_orders(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| !b)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Run-length encoding as `(bit, run length)` pairs.
    pub fn runs(&self) -> Vec<(bool, usize)> {
        let mut out: Vec<(bool, usize)> = Vec::new();
        for &b in &self.bits {
            match out.last_mut() {
                Some((v, len)) if *v == b => *len += 1,
                _ => out.push((b, 1)),
            }
        }
        out
    }

    /// First 1-based order where two sequences differ, comparing over the
    /// shorter length.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.bits
            .iter()
            .zip(&other.bits)
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
    }

    pub fn truncated(&self, n: usize) -> Result<Self> {
        Self::new(self.bits[..n.min(self.bits.len())].to_vec())
    }
}

impl fmt::Display for InvertibilitySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl FromStr for InvertibilitySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::BadToken {
                    token: s.to_string(),
                    reason: "expected a string of 0 and 1".to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}
