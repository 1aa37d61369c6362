use num_traits::{One, Zero};

use super::Rational;

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Rational>]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        QMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        qrank(self)
    }
}

/// Exact rank over the rationals by Gaussian elimination.
pub fn qrank(m: &QMatrix) -> usize {
    let mut rows: Vec<Vec<Rational>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] / &pivot;
            let (top, bottom) = rows.split_at_mut(r);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x -= &f * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> QMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        QMatrix::from_rows(cols, &rows)
    }

    #[test]
    fn examples() {
        assert_eq!(qrank(&QMatrix::identity(2)), 2);
        assert_eq!(qrank(&QMatrix::zeros(3, 3)), 0);
        assert_eq!(qrank(&mat(&[&[1, 0, -1], &[0, 1, -1], &[1, 1, -2]])), 2);
        assert_eq!(qrank(&QMatrix::zeros(0, 4)), 0);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_invariances(rows in small_matrix(), swap in any::<(usize, usize)>(), scale in 1i64..5, neg in any::<bool>()) {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let m = mat(&refs);
            let r = qrank(&m);
            prop_assert!(r <= m.rows().min(m.cols()));
            prop_assert_eq!(qrank(&m.transpose()), r);

            let mut swapped = rows.clone();
            let (a, b) = (swap.0 % rows.len(), swap.1 % rows.len());
            swapped.swap(a, b);
            let refs: Vec<&[i64]> = swapped.iter().map(|r| r.as_slice()).collect();
            prop_assert_eq!(qrank(&mat(&refs)), r);

            let mut scaled = m.clone();
            let factor = Rational::new(if neg { -scale } else { scale }.into(), 7.into());
            for c in 0..m.cols() {
                let v = scaled.get(a, c) * &factor;
                scaled.set(a, c, v);
            }
            prop_assert_eq!(qrank(&scaled), r);
        }
    }
}
