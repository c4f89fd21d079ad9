//! Sliding-window invertibility sequence.
//!
//! For `n > k` the order-`n` matrix is invertible iff the `k×k` window
//! `W_n` (rows `v_{n+1}, ..., v_{n+k}` of the recurrence) is. Consecutive
//! windows share `k - 1` rows, so the state keeps a reduced copy `Y` of
//! the current window in quasi-row-echelon form (pairwise distinct pivot
//! columns among nonzero rows) and updates it one row at a time: drop the
//! oldest row, append the new recurrence row, then let newer rows
//! eliminate older ones until pivots are distinct again.
//!
//! Because an older row is only ever reduced by newer rows, the row of
//! `Y` with age rank `j` is `W` row `j` plus a combination of `W` rows
//! `j+1..k`. `Y` is therefore a unit-triangular transform of `W` and the
//! two have the same rank, and the oldest row of `Y` can be dropped
//! together with the oldest row of `W`.

use crate::error::{Error, Result};
use crate::field::{Field, OpCounter, Phase};
use crate::matrix::DenseMatrix;
use crate::oracle;
use crate::recurrence::RowGenerator;
use crate::sequence::InvertibilitySequence;
use crate::stencil::{NormalizedStencil, Stencil};

/// Working set of the sliding algorithm: `2k·k` recurrence elements, the
/// `k·k` reduced window, and `k` pivot slots.
#[derive(Debug, Clone)]
pub struct SlidingState<F: Field> {
    field: F,
    k: usize,
    rows: RowGenerator<F>,
    ybuf: Vec<F::Elem>,
    /// Pivot column (0-based) of each `ybuf` slot; `None` for a zero row.
    pivot: Vec<Option<usize>>,
    /// Slot holding the oldest row; slots age in circular order from here.
    oldest: usize,
    step: u64,
    counter: OpCounter,
    last_eliminations: usize,
    max_eliminations: usize,
}

impl<F: Field> SlidingState<F> {
    /// State for `i = 0`: `W_0 = Y_0 = I`.
    pub fn new(s: &NormalizedStencil<F>) -> Result<Self> {
        let k = s.k();
        if k == 0 {
            return Err(Error::DiagonalStencil);
        }
        let field = s.field().clone();
        let mut counter = OpCounter::new();
        let rows = RowGenerator::new(s, &mut counter)?;
        let mut ybuf = vec![field.zero(); k * k];
        for r in 0..k {
            ybuf[r * k + r] = field.one();
        }
        Ok(Self {
            field,
            k,
            rows,
            ybuf,
            pivot: (0..k).map(Some).collect(),
            oldest: 0,
            step: 0,
            counter,
            last_eliminations: 0,
            max_eliminations: 0,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Index `i` of the window `W_i` currently reduced in `ybuf`.
    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn counter(&self) -> &OpCounter {
        &self.counter
    }

    pub fn pivots(&self) -> &[Option<usize>] {
        &self.pivot
    }

    pub fn generator(&self) -> &RowGenerator<F> {
        &self.rows
    }

    /// Eliminations performed by the latest [`advance`](Self::advance).
    pub fn last_eliminations(&self) -> usize {
        self.last_eliminations
    }

    pub fn max_eliminations(&self) -> usize {
        self.max_eliminations
    }

    /// `ybuf` slot holding the row of the given age rank (0 = oldest).
    pub fn slot_of_rank(&self, rank: usize) -> usize {
        (self.oldest + rank) % self.k
    }

    fn rank_of_slot(&self, slot: usize) -> usize {
        (slot + self.k - self.oldest) % self.k
    }

    fn yrow(&self, slot: usize) -> &[F::Elem] {
        &self.ybuf[slot * self.k..(slot + 1) * self.k]
    }

    /// Reduced window rows ordered oldest first.
    pub fn rows_by_age(&self) -> Vec<Vec<F::Elem>> {
        (0..self.k)
            .map(|r| self.yrow(self.slot_of_rank(r)).to_vec())
            .collect()
    }

    /// Pivots listed oldest row first.
    pub fn pivots_by_age(&self) -> Vec<Option<usize>> {
        (0..self.k)
            .map(|r| self.pivot[self.slot_of_rank(r)])
            .collect()
    }

    /// Field elements in the working set. Always `3k²`.
    pub fn working_set_len(&self) -> usize {
        self.rows.len() + self.ybuf.len()
    }

    pub fn pivot_slots(&self) -> usize {
        self.pivot.len()
    }

    /// Whether the nonzero rows of `ybuf` have pairwise distinct pivots.
    pub fn is_quasi_row_echelon(&self) -> bool {
        let mut seen = vec![false; self.k];
        for p in self.pivot.iter().flatten() {
            if std::mem::replace(&mut seen[*p], true) {
                return false;
            }
        }
        true
    }

    /// Whether the current window has full rank.
    pub fn is_full_rank(&self) -> bool {
        self.pivot.iter().all(Option::is_some)
    }

    fn leading(&self, slot: usize, from: usize) -> Option<usize> {
        let row = self.yrow(slot);
        (from..self.k).find(|&c| !self.field.is_zero(&row[c]))
    }

    /// Moves from `W_{i-1}` to `W_i` and returns whether `W_i` is
    /// invertible.
    pub fn advance(&mut self) -> bool {
        let k = self.k;
        self.counter.set_phase(Phase::Generate);
        let slot = self.oldest;
        let fresh = self.rows.next_row(&mut self.counter);
        self.ybuf[slot * k..(slot + 1) * k].clone_from_slice(fresh);
        self.oldest = (slot + 1) % k;
        self.step += 1;
        self.pivot[slot] = self.leading(slot, 0);

        self.counter.set_phase(Phase::Eliminate);
        let mut eliminations = 0;
        let mut cur = slot;
        while let Some(p) = self.pivot[cur] {
            let Some(other) = (0..k).find(|&s| s != cur && self.pivot[s] == Some(p)) else {
                break;
            };
            let (victim, by) = if self.rank_of_slot(other) < self.rank_of_slot(cur) {
                (other, cur)
            } else {
                (cur, other)
            };
            self.eliminate(victim, by, p);
            eliminations += 1;
            cur = victim;
        }
        // each elimination pushes the colliding pivot column strictly right
        debug_assert!(eliminations <= k);
        debug_assert!(self.is_quasi_row_echelon());
        self.last_eliminations = eliminations;
        self.max_eliminations = self.max_eliminations.max(eliminations);
        self.is_full_rank()
    }

    /// `ybuf[victim] -= (ybuf[victim][p] / ybuf[by][p]) · ybuf[by]`.
    fn eliminate(&mut self, victim: usize, by: usize, p: usize) {
        let k = self.k;
        let f = &self.field;
        let (v0, b0) = (victim * k, by * k);
        let factor = self
            .counter
            .div(f, &self.ybuf[v0 + p], &self.ybuf[b0 + p])
            .expect("pivot entries are nonzero");
        self.ybuf[v0 + p] = f.zero();
        for c in p + 1..k {
            let t = self.counter.mul(f, &factor, &self.ybuf[b0 + c]);
            self.ybuf[v0 + c] = self.counter.sub(f, &self.ybuf[v0 + c], &t);
        }
        self.pivot[victim] = self.leading(victim, p + 1);
    }
}

/// The window matrix `W_i` (rows `v_{i+1}, ..., v_{i+k}`), evaluated from
/// scratch into a full table. Reference path, not used by the kernel.
pub fn w_matrix<F: Field>(s: &NormalizedStencil<F>, i: usize) -> Result<DenseMatrix<F::Elem>> {
    let k = s.k();
    if k == 0 {
        return Err(Error::DiagonalStencil);
    }
    let f = s.field();
    // table[t] holds logical row t + 1 - k
    let last = i + k;
    let len = last + k;
    let mut table: Vec<Vec<F::Elem>> = Vec::with_capacity(len);
    let top = f.invert(s.coeff(k as isize))?;
    for t in 0..len {
        let idx = t as isize + 1 - k as isize;
        let row = if idx <= k as isize {
            (1..=k as isize)
                .map(|j| if j == idx { f.one() } else { f.zero() })
                .collect()
        } else {
            (0..k)
                .map(|j| {
                    let mut acc = f.zero();
                    for l in 1..=2 * k {
                        let x = s.coeff(k as isize - l as isize);
                        acc = f.add(&acc, &f.mul(x, &table[t - l][j]));
                    }
                    f.neg(&f.mul(&acc, &top))
                })
                .collect()
        };
        table.push(row);
    }
    // logical i + 1 sits at t = i + k
    Ok(DenseMatrix::from_rows(table[i + k..i + 2 * k].to_vec()))
}

/// Invertibility of `M_1, ..., M_n` for the family of `s`.
pub fn invertibility_sequence<F: Field>(s: &Stencil<F>, n: usize) -> Result<InvertibilitySequence> {
    invertibility_sequence_counted(s, n, &mut OpCounter::new())
}

/// As [`invertibility_sequence`], adding the work done to `counter`.
///
/// Orders `i ≤ k` are decided by the dense oracle (charged to
/// [`Phase::Oracle`]); the window criterion only covers `i > k`.
pub fn invertibility_sequence_counted<F: Field>(
    s: &Stencil<F>,
    n: usize,
    counter: &mut OpCounter,
) -> Result<InvertibilitySequence> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let s = s.normalize();
    let k = s.k();
    if k == 0 {
        return Ok(diagonal_sequence(&s, n));
    }
    let mut bits = Vec::with_capacity(n);
    let mut state = SlidingState::new(&s)?;
    for i in 1..=n {
        let b = state.advance();
        bits.push(if i <= k { false } else { b });
    }
    counter.absorb(state.counter());
    counter.set_phase(Phase::Oracle);
    for (i, bit) in bits.iter_mut().enumerate().take(k) {
        *bit = oracle::dense_invertible_counted(&s, i + 1, counter);
    }
    InvertibilitySequence::new(bits)
}

/// `x_0 I`: every order is invertible iff `x_0 ≠ 0`.
pub(crate) fn diagonal_sequence<F: Field>(
    s: &NormalizedStencil<F>,
    n: usize,
) -> InvertibilitySequence {
    debug_assert_eq!(s.k(), 0);
    let bit = !s.field().is_zero(s.coeff(0));
    InvertibilitySequence::new(vec![bit; n]).expect("n >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn norm(coeffs: &[i64], p: u64) -> NormalizedStencil<PrimeField> {
        Stencil::from_ints(gf(p), coeffs).unwrap().normalize()
    }

    #[test]
    fn init_is_identity() {
        let st = SlidingState::new(&norm(&[1, 2, 3, 4, 5], 7)).unwrap();
        assert_eq!(st.rows_by_age(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(st.pivots(), &[Some(0), Some(1)]);
        assert_eq!(st.step(), 0);

        let st = SlidingState::new(&norm(&[1, 1, 1], 2)).unwrap();
        assert_eq!(st.rows_by_age(), vec![vec![1]]);
        assert_eq!(st.pivots(), &[Some(0)]);
    }

    #[test]
    fn init_rejects_diagonal() {
        assert_eq!(
            SlidingState::new(&norm(&[0, 5, 0], 7)).unwrap_err(),
            Error::DiagonalStencil
        );
    }

    #[test]
    fn tridiagonal_gf2_steps() {
        let mut st = SlidingState::new(&norm(&[1, 1, 1], 2)).unwrap();
        assert!(st.advance());
        assert_eq!(st.rows_by_age(), vec![vec![1]]);
        assert!(!st.advance());
        assert_eq!(st.pivots(), &[None]);
        assert!(st.advance());
        assert_eq!(st.step(), 3);
    }

    #[test]
    fn w_matrix_examples() {
        let s = norm(&[3, 1, 4, 1, 5, 9, 2], 11);
        let id = DenseMatrix::from_fn(3, 3, |r, c| u32::from(r == c));
        assert_eq!(w_matrix(&s, 0).unwrap(), id);

        assert_eq!(
            w_matrix(&norm(&[1, 1, 1], 2), 2).unwrap(),
            DenseMatrix::from_rows(vec![vec![0]])
        );
        assert_eq!(
            w_matrix(&norm(&[1, 1, 1, 1, 1], 2), 1).unwrap(),
            DenseMatrix::from_rows(vec![vec![0, 1], vec![1, 1]])
        );
    }

    #[test]
    fn generator_matches_table() {
        let s = norm(&[2, 0, 5, 1, 3], 7);
        let mut c = OpCounter::new();
        let mut g = RowGenerator::new(&s, &mut c).unwrap();
        for i in 0..20 {
            let w = w_matrix(&s, i).unwrap();
            assert_eq!(g.row_at_lag(0), w.row(1), "row v_{}", i + 2);
            g.next_row(&mut c);
        }
    }

    #[test]
    fn sequence_examples() {
        let seq = |coeffs: &[i64], p: u64, n| {
            invertibility_sequence(&Stencil::from_ints(gf(p), coeffs).unwrap(), n)
                .unwrap()
                .to_string()
        };
        assert_eq!(seq(&[1, 1, 1], 2, 9), "101101101");
        assert_eq!(seq(&[0, 0, 0], 3, 3), "000");

        let q = |coeffs: &[i64], n| {
            invertibility_sequence(&Stencil::from_ints(Rationals, coeffs).unwrap(), n)
                .unwrap()
                .to_string()
        };
        assert_eq!(q(&[1, 0, 1], 6), "010101");
        assert_eq!(q(&[0, 5, 0], 4), "1111");
    }

    #[test]
    fn zero_length_is_an_error() {
        let s = Stencil::from_ints(gf(2), &[1, 1, 1]).unwrap();
        assert_eq!(invertibility_sequence(&s, 0), Err(Error::EmptySequence));
    }

    #[test]
    fn working_set_is_3k2() {
        for k in 1..6 {
            let coeffs = vec![1; 2 * k + 1];
            let mut st = SlidingState::new(&norm(&coeffs, 13)).unwrap();
            for _ in 0..100 {
                st.advance();
            }
            assert_eq!(st.working_set_len(), 3 * k * k);
            assert_eq!(st.pivot_slots(), k);
        }
    }
}
