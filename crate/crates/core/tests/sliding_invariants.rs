mod common;

use bandinv::field::{Field, PrimeField, Rationals};
use bandinv::oracle::{dense_invertible, dense_sequence, tridiag_recurrence_sequence};
use bandinv::verify::random_stencil;
use bandinv::{invertibility_sequence, naive_sequence, w_matrix, SlidingState, Stencil};
use common::{in_span, is_invertible, rank, rng};
use rand::Rng;

/// Quasi-row-echelon form, rank preservation, the row-space property and
/// the elimination bound, after every single advance.
fn check_state_invariants<F: Field>(f: &F, seed: u64, cases: usize, steps: usize) {
    let mut r = rng(seed);
    let mut checked = 0;
    while checked < cases {
        let k = r.gen_range(1..=3);
        let s = random_stencil(f, k, &mut r).normalize();
        if s.k() == 0 {
            continue;
        }
        checked += 1;
        let k = s.k();
        let mut st = SlidingState::new(&s).unwrap();
        for i in 1..=steps {
            st.advance();
            assert_eq!(st.step(), i as u64);
            assert!(st.is_quasi_row_echelon(), "{s:?} step {i}");
            assert!(st.last_eliminations() <= k);

            let w = w_matrix(&s, i).unwrap().to_rows();
            let y = st.rows_by_age();
            assert_eq!(rank(f, y.clone()), rank(f, w.clone()), "{s:?} step {i}");

            for (j, row) in y.iter().enumerate() {
                assert!(in_span(f, row, &w[j..]), "{s:?} step {i} rank {j}");
                // the own-row coefficient stays 1: y_j - w_j ∈ span(w_{j+1..})
                let diff: Vec<_> = row.iter().zip(&w[j]).map(|(a, b)| f.sub(a, b)).collect();
                assert!(in_span(f, &diff, &w[j + 1..]), "{s:?} step {i} rank {j}");
            }

            let pivots = st.pivots_by_age();
            for (row, p) in y.iter().zip(&pivots) {
                let lead = row.iter().position(|e| !f.is_zero(e));
                assert_eq!(lead, *p);
            }
        }
    }
}

#[test]
fn state_invariants_gf2() {
    check_state_invariants(&PrimeField::new(2).unwrap(), 1, 150, 20);
}

#[test]
fn state_invariants_gf3() {
    check_state_invariants(&PrimeField::new(3).unwrap(), 2, 150, 20);
}

#[test]
fn state_invariants_gf7() {
    check_state_invariants(&PrimeField::new(7).unwrap(), 3, 150, 20);
}

#[test]
fn state_invariants_rational() {
    check_state_invariants(&Rationals, 4, 60, 12);
}

#[test]
fn oracle_equivalence_small() {
    let mut r = rng(5);
    each_exact_field!(|f| {
        for _ in 0..40 {
            let k = r.gen_range(1..=4);
            let s = random_stencil(&f, k, &mut r);
            let dense = dense_sequence(&s, 12).unwrap();
            assert_eq!(invertibility_sequence(&s, 12).unwrap(), dense, "{s:?}");
            assert_eq!(naive_sequence(&s, 12).unwrap(), dense, "{s:?}");
        }
    });
}

#[test]
fn normalization_preserves_dense_sequence() {
    let mut r = rng(6);
    each_exact_field!(|f| {
        for _ in 0..60 {
            let k = r.gen_range(0..=4);
            let mut s = random_stencil(&f, k, &mut r);
            // force zero edges half the time
            if k > 0 && r.gen_bool(0.5) {
                let mut c = s.coeffs().to_vec();
                c[2 * k] = f.zero();
                s = Stencil::new(f, c).unwrap();
            }
            let n = s.normalize();
            assert_eq!(
                dense_sequence(&s, 12).unwrap(),
                dense_sequence(n.stencil(), 12).unwrap(),
                "{s:?}"
            );
        }
    });
}

#[test]
fn tridiagonal_closed_form_exhaustive() {
    // every k = 1 stencil over GF(2), GF(3), GF(5)
    for p in [2u64, 3, 5] {
        let f = PrimeField::new(p).unwrap();
        let p = p as u32;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let s = Stencil::new(f, vec![a, b, c]).unwrap();
                    let n = if p == 2 { 200 } else { 40 };
                    let expected = tridiag_recurrence_sequence(&s, n).unwrap();
                    assert_eq!(dense_sequence(&s, n).unwrap(), expected, "{s:?}");
                    assert_eq!(
                        invertibility_sequence(&s, 2000)
                            .unwrap()
                            .truncated(n)
                            .unwrap(),
                        expected
                    );
                }
            }
        }
    }
    let mut r = rng(7);
    for _ in 0..20 {
        let s = random_stencil(&Rationals, 1, &mut r);
        assert_eq!(
            dense_sequence(&s, 30).unwrap(),
            tridiag_recurrence_sequence(&s, 30).unwrap()
        );
    }
}

#[test]
fn long_tridiagonal_matches_recurrence() {
    let f = PrimeField::new(7).unwrap();
    let mut r = rng(8);
    for _ in 0..50 {
        let s = random_stencil(&f, 1, &mut r);
        assert_eq!(
            invertibility_sequence(&s, 5000).unwrap(),
            tridiag_recurrence_sequence(&s, 5000).unwrap()
        );
    }
}

/// The window criterion is only claimed for orders above k. This records
/// what happens below: for every order i <= k the window W_i is invertible
/// exactly when M_i is.
#[test]
fn low_orders_window_agrees_with_dense() {
    let mut r = rng(9);
    let mut compared = 0;
    each_exact_field!(|f| {
        for _ in 0..100 {
            let k = r.gen_range(1..=4);
            let s = random_stencil(&f, k, &mut r).normalize();
            for i in 1..=s.k() {
                let w = w_matrix(&s, i).unwrap();
                assert_eq!(
                    is_invertible(&f, &w),
                    dense_invertible(&s, i),
                    "{s:?} i={i}"
                );
                compared += 1;
            }
        }
    });
    assert!(compared > 500);
}
