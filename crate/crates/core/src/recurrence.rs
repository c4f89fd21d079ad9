//! Streaming evaluation of the window recurrence.
//!
//! For a stencil with half-bandwidth `k ≥ 1` and `x_k ≠ 0`, row `i` is the
//! vector `v_i = (v_{i,1}, ..., v_{i,k})` with
//!
//! ```text
//! v_{i,j} = [i == j]                                    for i ≤ k
//! v_{i,j} = -(x_{k-1} v_{i-1,j} + ... + x_{-k} v_{i-2k,j}) / x_k   for i > k
//! ```
//!
//! Only the last `2k` rows are ever needed, so they live in a circular
//! buffer.

use crate::error::{Error, Result};
use crate::field::{Field, OpCounter, Phase};
use crate::stencil::NormalizedStencil;

/// Circular buffer of the `2k` most recent recurrence rows.
#[derive(Debug, Clone)]
pub struct RowGenerator<F: Field> {
    field: F,
    k: usize,
    /// `taps[l - 1] = x_{k-l}` multiplies `v_{i-l}`, for lags `l = 1..=2k`.
    taps: Vec<F::Elem>,
    /// `-1 / x_k`.
    scale: F::Elem,
    rows: Vec<F::Elem>,
    newest_slot: usize,
    newest: i64,
}

impl<F: Field> RowGenerator<F> {
    /// Loads the base rows `v_{1-k}, ..., v_k`. The single inversion of
    /// `x_k` is charged to the generate phase of `counter`.
    pub fn new(s: &NormalizedStencil<F>, counter: &mut OpCounter) -> Result<Self> {
        let k = s.k();
        if k == 0 {
            return Err(Error::DiagonalStencil);
        }
        let f = s.field().clone();
        let taps = (1..=2 * k as isize)
            .map(|l| s.coeff(k as isize - l).clone())
            .collect();
        let phase = counter.phase();
        counter.set_phase(Phase::Generate);
        let inv = counter.invert(&f, s.coeff(k as isize))?;
        let scale = counter.neg(&f, &inv);
        counter.set_phase(phase);

        // slot m holds logical row m + 1 - k; rows 1..=k form the identity
        let mut rows = vec![f.zero(); 2 * k * k];
        for j in 0..k {
            rows[(k + j) * k + j] = f.one();
        }
        Ok(Self {
            field: f,
            k,
            taps,
            scale,
            rows,
            newest_slot: 2 * k - 1,
            newest: k as i64,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Logical index of the newest row held.
    pub fn newest_index(&self) -> i64 {
        self.newest
    }

    /// Row `newest_index() - lag`, for `lag < 2k`.
    pub fn row_at_lag(&self, lag: usize) -> &[F::Elem] {
        debug_assert!(lag < 2 * self.k);
        let slot = (self.newest_slot + 2 * self.k - lag) % (2 * self.k);
        &self.rows[slot * self.k..(slot + 1) * self.k]
    }

    /// Number of field elements held: `2k·k`.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Evaluates the next row in place of the oldest one and returns it.
    ///
    /// Costs `2k + 1` multiplications per element (`2k` taps plus the
    /// scale by `-1/x_k`), charged to the counter's active phase.
    pub fn next_row(&mut self, counter: &mut OpCounter) -> &[F::Elem] {
        let k = self.k;
        let width = 2 * k;
        let f = &self.field;
        // the oldest slot (lag 2k for the new row) is overwritten column by
        // column, each column read before it is written
        let target = (self.newest_slot + 1) % width;
        for j in 0..k {
            let mut slot = self.newest_slot;
            let mut acc = counter.mul(f, &self.taps[0], &self.rows[slot * k + j]);
            for tap in &self.taps[1..] {
                slot = if slot == 0 { width - 1 } else { slot - 1 };
                let t = counter.mul(f, tap, &self.rows[slot * k + j]);
                acc = counter.add(f, &acc, &t);
            }
            self.rows[target * k + j] = counter.mul(f, &self.scale, &acc);
        }
        self.newest_slot = target;
        self.newest += 1;
        &self.rows[target * k..(target + 1) * k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::stencil::Stencil;

    fn gen(coeffs: &[i64], p: u64) -> (RowGenerator<PrimeField>, OpCounter) {
        let f = PrimeField::new(p).unwrap();
        let s = Stencil::from_ints(f, coeffs).unwrap().normalize();
        let mut c = OpCounter::new();
        let g = RowGenerator::new(&s, &mut c).unwrap();
        (g, c)
    }

    #[test]
    fn base_rows() {
        let (g, _) = gen(&[1, 2, 3, 4, 5, 6, 7], 11);
        assert_eq!(g.newest_index(), 3);
        // v_3, v_2, v_1 then v_0, v_{-1}, v_{-2}
        assert_eq!(g.row_at_lag(0), &[0, 0, 1]);
        assert_eq!(g.row_at_lag(1), &[0, 1, 0]);
        assert_eq!(g.row_at_lag(2), &[1, 0, 0]);
        for lag in 3..6 {
            assert_eq!(g.row_at_lag(lag), &[0, 0, 0]);
        }
    }

    #[test]
    fn tridiagonal_gf2_rows() {
        let (mut g, mut c) = gen(&[1, 1, 1], 2);
        // v_2 = v_1 + v_0 = 1, v_3 = v_2 + v_1 = 0, v_4 = 1
        assert_eq!(g.next_row(&mut c), &[1]);
        assert_eq!(g.next_row(&mut c), &[0]);
        assert_eq!(g.next_row(&mut c), &[1]);
        assert_eq!(g.newest_index(), 4);
    }

    #[test]
    fn pentadiagonal_gf2_row() {
        let (mut g, mut c) = gen(&[1, 1, 1, 1, 1], 2);
        assert_eq!(g.next_row(&mut c), &[1, 1]);
    }

    #[test]
    fn charges_2k_plus_1_per_element() {
        let (mut g, mut c) = gen(&[3, 1, 4, 1, 5, 9, 2], 101);
        assert_eq!(c.tally(Phase::Generate).divs, 1);
        c.reset();
        for _ in 0..10 {
            g.next_row(&mut c);
        }
        let t = c.tally(Phase::Generate);
        assert_eq!(t.muls, 10 * 3 * 7);
        assert_eq!(t.divs, 0);
        assert_eq!(t.adds, 10 * 3 * 5);
    }
}
