//! Invertibility sequences of banded Toeplitz matrices.
//!
//! A stencil `x_{-k}, ..., x_k` over a field defines matrices `M_1, M_2,
//! ...` with `M_n(r, c) = x_{c-r}` inside the band. The crate computes the
//! bit sequence "is `M_i` invertible" for `i = 1..n` in `O(k²n)` field
//! operations and `3k²` elements of working memory, by tracking a reduced
//! `k×k` window matrix instead of the matrices themselves.
//!
//! ```
//! use bandinv::field::PrimeField;
//! use bandinv::{invertibility_sequence, Stencil};
//!
//! let gf2 = PrimeField::new(2).unwrap();
//! let s = Stencil::parse("1,1,1", gf2).unwrap();
//! assert_eq!(invertibility_sequence(&s, 9).unwrap().to_string(), "101101101");
//! ```
//!
//! [`naive_sequence`] (full elimination per order) and the dense routines
//! in [`oracle`] compute the same sequence by independent means.

pub mod baseline;
pub mod error;
pub mod field;
pub mod matrix;
pub mod oracle;
pub mod recurrence;
pub mod sequence;
pub mod sliding;
pub mod stencil;
pub mod verify;

use std::fmt;
use std::str::FromStr;

pub use baseline::{naive_sequence, naive_sequence_counted};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, OpCounter, Phase, Tally};
pub use matrix::DenseMatrix;
pub use sequence::InvertibilitySequence;
pub use sliding::{invertibility_sequence, invertibility_sequence_counted, w_matrix, SlidingState};
pub use stencil::{NormalizedStencil, Stencil};

/// Which sequence algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Sliding,
    Naive,
    Dense,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Sliding => "sliding",
            Algorithm::Naive => "naive",
            Algorithm::Dense => "dense",
        }
    }

    pub fn run<F: Field>(
        self,
        s: &Stencil<F>,
        n: usize,
        counter: &mut OpCounter,
    ) -> Result<InvertibilitySequence> {
        match self {
            Algorithm::Sliding => invertibility_sequence_counted(s, n, counter),
            Algorithm::Naive => naive_sequence_counted(s, n, counter),
            Algorithm::Dense => {
                if n == 0 {
                    return Err(Error::EmptySequence);
                }
                counter.set_phase(Phase::Oracle);
                let bits = (1..=n)
                    .map(|i| oracle::dense_invertible_counted(s, i, counter))
                    .collect();
                InvertibilitySequence::new(bits)
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sliding" => Ok(Algorithm::Sliding),
            "naive" => Ok(Algorithm::Naive),
            "dense" => Ok(Algorithm::Dense),
            other => Err(format!(
                "unknown algorithm `{other}` (expected sliding, naive or dense)"
            )),
        }
    }
}
