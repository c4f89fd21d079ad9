#![allow(dead_code)]

use bandinv::field::{Field, OpCounter};
use bandinv::{DenseMatrix, NormalizedStencil};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Runs `$body` once per exact test field, binding the field to `$f`.
#[macro_export]
macro_rules! each_exact_field {
    (|$f:ident| $body:block) => {{
        for p in [2u64, 3, 5, 7] {
            let $f = bandinv::field::PrimeField::new(p).unwrap();
            $body
        }
        {
            let $f = bandinv::field::Rationals;
            $body
        }
    }};
}

pub fn rank<F: Field>(f: &F, rows: Vec<Vec<F::Elem>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    DenseMatrix::from_rows(rows).rank(f, &mut OpCounter::new())
}

pub fn is_invertible<F: Field>(f: &F, m: &DenseMatrix<F::Elem>) -> bool {
    m.rank(f, &mut OpCounter::new()) == m.rows()
}

/// Whether `y` lies in the span of `basis`.
pub fn in_span<F: Field>(f: &F, y: &[F::Elem], basis: &[Vec<F::Elem>]) -> bool {
    let r = rank(f, basis.to_vec());
    let mut ext = basis.to_vec();
    ext.push(y.to_vec());
    rank(f, ext) == r
}

pub fn k_of<F: Field>(s: &NormalizedStencil<F>) -> usize {
    s.k()
}
