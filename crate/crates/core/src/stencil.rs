//! Band stencils: the 2k+1 coefficients `x_{-k}, ..., x_k` that generate
//! every matrix of a banded Toeplitz family.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Coefficients `x_{-k}, ..., x_0, ..., x_k` over a field, lowest offset
/// first.
#[derive(Clone, PartialEq)]
pub struct Stencil<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Stencil<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyStencil);
        }
        if coeffs.len() % 2 == 0 {
            return Err(Error::EvenLength(coeffs.len()));
        }
        let coeffs = coeffs.iter().map(|c| field.normalize(c)).collect();
        Ok(Self { field, coeffs })
    }

    /// Builds a stencil from small integers, mapped into the field.
    pub fn from_ints(field: F, coeffs: &[i64]) -> Result<Self> {
        let coeffs = coeffs.iter().map(|&c| field.embed_int(c)).collect();
        Self::new(field, coeffs)
    }

    /// Parses a comma-separated list such as `1,0,1` or `1/2,0,3`.
    pub fn parse(text: &str, field: F) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyStencil);
        }
        let coeffs = text
            .split(',')
            .map(|tok| field.parse_elem(tok))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, coeffs)
    }

    /// Parses the stencil file format: one coefficient line, with blank
    /// lines and `#` comment lines ignored.
    pub fn parse_file(contents: &str, field: F) -> Result<Self> {
        let mut lines = contents
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let line = lines.next().ok_or(Error::EmptyStencil)?;
        if let Some(extra) = lines.next() {
            return Err(Error::BadToken {
                token: extra.to_string(),
                reason: "stencil file must contain a single coefficient line".to_string(),
            });
        }
        Self::parse(line, field)
    }

    /// Half-bandwidth.
    pub fn k(&self) -> usize {
        self.coeffs.len() / 2
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// `x_offset` for `-k <= offset <= k`.
    pub fn coeff(&self, offset: isize) -> &F::Elem {
        let k = self.k() as isize;
        assert!(
            offset.abs() <= k,
            "offset {offset} outside band of half-width {k}"
        );
        &self.coeffs[(offset + k) as usize]
    }

    /// `x_offset`, or zero outside the band.
    pub fn coeff_or_zero(&self, offset: isize) -> F::Elem {
        if offset.unsigned_abs() <= self.k() {
            self.coeff(offset).clone()
        } else {
            self.field.zero()
        }
    }

    /// The stencil of the transposed matrices: `x_j ↦ x_{-j}`.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Every coefficient multiplied by `c`.
    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|x| self.field.mul(x, c)).collect();
        Self {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Trims zero band edges and, when only the lower edge is nonzero,
    /// reverses so that `x_k ≠ 0`. Neither step changes any matrix's
    /// invertibility (the reversal is a transpose).
    pub fn normalize(&self) -> NormalizedStencil<F> {
        let f = &self.field;
        let k = self.k();
        let upper = (1..=k)
            .rev()
            .find(|&j| !f.is_zero(self.coeff(j as isize)))
            .unwrap_or(0);
        let lower = (1..=k)
            .rev()
            .find(|&j| !f.is_zero(self.coeff(-(j as isize))))
            .unwrap_or(0);
        let k_eff = upper.max(lower);
        let trimmed = &self.coeffs[k - k_eff..=k + k_eff];
        let mut inner = Stencil {
            field: f.clone(),
            coeffs: trimmed.to_vec(),
        };
        let reversed = k_eff > 0 && upper < lower;
        if reversed {
            inner = inner.reverse();
        }
        NormalizedStencil { inner, reversed }
    }

    pub fn display(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| self.field.format_elem(c))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl<F: Field> fmt::Debug for Stencil<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Stencil[{}]({})", self.field.spec(), self.display())
    }
}

impl<F: Field> fmt::Display for Stencil<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// A stencil with `x_k ≠ 0` whenever `k ≥ 1`, and `k` minimal.
#[derive(Clone, PartialEq, Debug)]
pub struct NormalizedStencil<F: Field> {
    inner: Stencil<F>,
    reversed: bool,
}

impl<F: Field> NormalizedStencil<F> {
    pub fn stencil(&self) -> &Stencil<F> {
        &self.inner
    }

    pub fn into_stencil(self) -> Stencil<F> {
        self.inner
    }

    /// Whether normalization flipped the coefficient order.
    pub fn reversed(&self) -> bool {
        self.reversed
    }

    pub fn k(&self) -> usize {
        self.inner.k()
    }

    pub fn field(&self) -> &F {
        self.inner.field()
    }
}

impl<F: Field> std::ops::Deref for NormalizedStencil<F> {
    type Target = Stencil<F>;

    fn deref(&self) -> &Stencil<F> {
        &self.inner
    }
}
