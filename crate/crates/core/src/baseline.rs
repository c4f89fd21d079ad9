//! Naive reference: the same streamed recurrence rows, but every window
//! `W_i` is reduced from scratch by full Gaussian elimination, costing
//! `O(k³)` per order instead of `O(k²)`.

use crate::error::{Error, Result};
use crate::field::{Field, OpCounter, Phase};
use crate::matrix::DenseMatrix;
use crate::oracle;
use crate::recurrence::RowGenerator;
use crate::sequence::InvertibilitySequence;
use crate::sliding::diagonal_sequence;
use crate::stencil::Stencil;

pub fn naive_sequence<F: Field>(s: &Stencil<F>, n: usize) -> Result<InvertibilitySequence> {
    naive_sequence_counted(s, n, &mut OpCounter::new())
}

pub fn naive_sequence_counted<F: Field>(
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
    let f = s.field();
    let mut rows = RowGenerator::new(&s, counter)?;
    let mut bits = Vec::with_capacity(n);
    for i in 1..=n {
        counter.set_phase(Phase::Generate);
        rows.next_row(counter);
        if i <= k {
            counter.set_phase(Phase::Oracle);
            bits.push(oracle::dense_invertible_counted(&s, i, counter));
        } else {
            counter.set_phase(Phase::Eliminate);
            // W_i: newest row is v_{i+k}, oldest v_{i+1}
            let window = DenseMatrix::from_fn(k, k, |r, c| rows.row_at_lag(k - 1 - r)[c].clone());
            bits.push(window.rank(f, counter) == k);
        }
    }
    InvertibilitySequence::new(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn examples() {
        let s = Stencil::from_ints(PrimeField::new(2).unwrap(), &[1, 1, 1]).unwrap();
        assert_eq!(naive_sequence(&s, 5).unwrap().to_string(), "10110");
        let d = Stencil::from_ints(Rationals, &[0, 5, 0]).unwrap();
        assert_eq!(naive_sequence(&d, 3).unwrap().to_string(), "111");
        assert_eq!(naive_sequence(&d, 0), Err(Error::EmptySequence));
    }
}
