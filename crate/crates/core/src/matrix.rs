use crate::field::{Field, OpCounter};

/// Row-major dense matrix of field elements.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Clone> DenseMatrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        Self {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Rows `start..end` as a new matrix.
    pub fn row_block(&self, start: usize, end: usize) -> Self {
        Self {
            rows: end - start,
            cols: self.cols,
            entries: self.entries[start * self.cols..end * self.cols].to_vec(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |r, c| {
            (0..self.cols).fold(f.zero(), |acc, i| {
                f.add(&acc, &f.mul(self.get(r, i), rhs.get(i, c)))
            })
        })
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.entries.iter().all(|e| f.is_zero(e))
    }

    /// Rank by textbook Gaussian elimination on a copy. Exact fields take
    /// the first nonzero pivot in each column; fields with a magnitude
    /// take the largest.
    pub fn rank<F: Field<Elem = E>>(&self, f: &F, counter: &mut OpCounter) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let mut candidates = (rank..m.rows).filter(|&r| !f.is_zero(m.get(r, col)));
            let pivot = if f.is_exact() {
                candidates.next()
            } else {
                candidates.max_by(|&a, &b| {
                    let ma = f.magnitude(m.get(a, col)).unwrap_or(0.0);
                    let mb = f.magnitude(m.get(b, col)).unwrap_or(0.0);
                    ma.total_cmp(&mb)
                })
            };
            let Some(pivot) = pivot else { continue };
            m.swap_rows(rank, pivot);
            let inv = counter
                .invert(f, m.get(rank, col))
                .expect("pivot is nonzero");
            for r in rank + 1..m.rows {
                if f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = counter.mul(f, m.get(r, col), &inv);
                m.set(r, col, f.zero());
                for c in col + 1..m.cols {
                    let t = counter.mul(f, &factor, m.get(rank, c));
                    let v = counter.sub(f, m.get(r, c), &t);
                    m.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}
