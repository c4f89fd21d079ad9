//! Reference computations, independent of the sliding kernel: dense
//! matrices with textbook elimination, the three-term determinant
//! recurrence for tridiagonal families, and a direct check of the block
//! identity `M_n [I_k; V] = [O; Q W_n]` that ties `M_n` to its window.
//!
//! Everything here is `O(n³)` or worse per order and meant for small `n`.

use crate::error::{Error, Result};
use crate::field::{Field, OpCounter, Phase};
use crate::matrix::DenseMatrix;
use crate::sequence::InvertibilitySequence;
use crate::stencil::{NormalizedStencil, Stencil};

/// `M_n` with entry `(r, c) = x_{c-r}` inside the band, zero outside.
pub fn dense_matrix<F: Field>(s: &Stencil<F>, n: usize) -> DenseMatrix<F::Elem> {
    DenseMatrix::from_fn(n, n, |r, c| s.coeff_or_zero(c as isize - r as isize))
}

pub fn dense_invertible<F: Field>(s: &Stencil<F>, n: usize) -> bool {
    dense_invertible_counted(s, n, &mut OpCounter::new())
}

/// Rank test on `M_n`, charged to the counter's active phase.
pub fn dense_invertible_counted<F: Field>(
    s: &Stencil<F>,
    n: usize,
    counter: &mut OpCounter,
) -> bool {
    dense_matrix(s, n).rank(s.field(), counter) == n
}

/// One dense rank test per order. The stencil is used as given, without
/// normalization.
pub fn dense_sequence<F: Field>(s: &Stencil<F>, n: usize) -> Result<InvertibilitySequence> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let mut counter = OpCounter::new();
    counter.set_phase(Phase::Oracle);
    let bits = (1..=n)
        .map(|i| dense_invertible_counted(s, i, &mut counter))
        .collect();
    InvertibilitySequence::new(bits)
}

/// `D_i = x_0 D_{i-1} - x_1 x_{-1} D_{i-2}` with `D_0 = 1`, `D_{-1} = 0`;
/// bit `i` is `D_i ≠ 0`. Tridiagonal (`k = 1`) stencils only.
pub fn tridiag_recurrence_sequence<F: Field>(
    s: &Stencil<F>,
    n: usize,
) -> Result<InvertibilitySequence> {
    if s.k() != 1 {
        return Err(Error::BandwidthMismatch {
            expected: 1,
            found: s.k(),
        });
    }
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let f = s.field();
    let diag = s.coeff(0);
    let off = f.mul(s.coeff(1), s.coeff(-1));
    let (mut prev, mut cur) = (f.zero(), f.one());
    let mut bits = Vec::with_capacity(n);
    for _ in 0..n {
        let next = f.sub(&f.mul(diag, &cur), &f.mul(&off, &prev));
        bits.push(!f.is_zero(&next));
        prev = cur;
        cur = next;
    }
    InvertibilitySequence::new(bits)
}

/// Result of evaluating the block identity for one order.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockCheckReport<E> {
    /// The top `(n-k)×k` block of `M_n [I_k; V]` vanishes.
    pub top_block_zero: bool,
    /// The bottom `k×k` block of `M_n [I_k; V]`.
    pub p_block: DenseMatrix<E>,
    /// `Q W_n` with `Q` lower triangular, `Q(r, c) = -x_{k-(r-c)}`.
    pub q_times_w: DenseMatrix<E>,
    pub matches: bool,
}

impl<E> BlockCheckReport<E> {
    pub fn holds(&self) -> bool {
        self.top_block_zero && self.matches
    }
}

/// Recurrence rows `v_{1-k}, ..., v_last` by direct evaluation.
/// Entry `t` is logical row `t + 1 - k`.
fn v_table<F: Field>(s: &NormalizedStencil<F>, last: usize) -> Vec<Vec<F::Elem>> {
    let f = s.field();
    let k = s.k() as isize;
    let mut table: Vec<Vec<F::Elem>> = Vec::new();
    for idx in (1 - k)..=(last as isize) {
        let row: Vec<F::Elem> = if idx <= k {
            (1..=k)
                .map(|j| if j == idx { f.one() } else { f.zero() })
                .collect()
        } else {
            let t = table.len();
            (0..k as usize)
                .map(|j| {
                    // x_{k-1} v_{i-1} + ... + x_{-k} v_{i-2k}
                    let sum = (1..=2 * k).fold(f.zero(), |acc, l| {
                        f.add(&acc, &f.mul(s.coeff(k - l), &table[t - l as usize][j]))
                    });
                    f.div(&f.neg(&sum), s.coeff(k)).expect("x_k is nonzero")
                })
                .collect()
        };
        table.push(row);
    }
    table
}

/// Evaluates `M_n [I_k; v_{k+1}; ...; v_n]` and compares it with
/// `[O; Q W_n]`.
pub fn theorem1_blocks<F: Field>(
    s: &NormalizedStencil<F>,
    n: usize,
) -> Result<BlockCheckReport<F::Elem>> {
    let k = s.k();
    if n <= k {
        return Err(Error::OrderTooSmall { n, k });
    }
    let f = s.field();
    let table = v_table(s, n + k);
    // logical row i lives at table[i + k - 1]
    let row = |i: usize| &table[i + k - 1];

    let basis = DenseMatrix::from_fn(n, k, |r, c| row(r + 1)[c].clone());
    let product = dense_matrix(s, n).mul(f, &basis);
    let top_block_zero = product.row_block(0, n - k).is_zero(f);
    let p_block = product.row_block(n - k, n);

    let q = DenseMatrix::from_fn(k, k, |r, c| {
        if c <= r {
            f.neg(s.coeff((k - (r - c)) as isize))
        } else {
            f.zero()
        }
    });
    let w = DenseMatrix::from_fn(k, k, |r, c| row(n + 1 + r)[c].clone());
    let q_times_w = q.mul(f, &w);
    let matches = p_block == q_times_w;
    Ok(BlockCheckReport {
        top_block_zero,
        p_block,
        q_times_w,
        matches,
    })
}
