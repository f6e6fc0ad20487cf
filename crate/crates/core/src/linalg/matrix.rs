use crate::error::{Error, Result};
use crate::linalg::field::Field;

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> FieldMatrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        FieldMatrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, m.field.one());
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        FieldMatrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(field: F, rows: &[Vec<i64>]) -> Self {
        let converted = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.element(v)).collect())
            .collect();
        Self::from_rows(field, converted)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Submatrix on the given row and column indices, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        FieldMatrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn rank(&self) -> usize {
        rank_in_place(&self.field, self.rows, self.cols, &mut self.entries.clone())
    }

    pub fn determinant(&self) -> Result<F::Elem> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(determinant_in_place(
            &self.field,
            self.rows,
            &mut self.entries.clone(),
        ))
    }
}

/// Row reduction of a row-major buffer; returns the rank.
pub(crate) fn rank_in_place<F: Field>(
    field: &F,
    rows: usize,
    cols: usize,
    a: &mut [F::Elem],
) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !field.is_zero(&a[r * cols + c])) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let inv = field.inv(&a[rank * cols + c]);
        for r in rank + 1..rows {
            if field.is_zero(&a[r * cols + c]) {
                continue;
            }
            let factor = field.mul(&a[r * cols + c], &inv);
            for j in c..cols {
                let v = field.sub_mul(&a[r * cols + j], &factor, &a[rank * cols + j]);
                a[r * cols + j] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of an `n x n` row-major buffer by LU elimination.
pub(crate) fn determinant_in_place<F: Field>(field: &F, n: usize, a: &mut [F::Elem]) -> F::Elem {
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !field.is_zero(&a[r * n + c])) else {
            return field.zero();
        };
        if p != c {
            for j in 0..n {
                a.swap(p * n + j, c * n + j);
            }
            det = field.neg(&det);
        }
        let pivot = a[c * n + c].clone();
        det = field.mul(&det, &pivot);
        let inv = field.inv(&pivot);
        for r in c + 1..n {
            if field.is_zero(&a[r * n + c]) {
                continue;
            }
            let factor = field.mul(&a[r * n + c], &inv);
            for j in c + 1..n {
                let v = field.sub_mul(&a[r * n + j], &factor, &a[c * n + j]);
                a[r * n + j] = v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{PrimeField, RationalField};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pf() -> PrimeField {
        PrimeField::mersenne61()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(FieldMatrix::identity(pf(), 3).rank(), 3);
        assert_eq!(FieldMatrix::zeros(pf(), 3, 4).rank(), 0);
        let m = FieldMatrix::from_i64_rows(pf(), &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(FieldMatrix::identity(pf(), 4).determinant().unwrap(), 1);
        let (a, b, c, d) = (3i64, 7, -2, 5);
        let m = FieldMatrix::from_i64_rows(pf(), &[vec![a, b], vec![c, d]]);
        assert_eq!(m.determinant().unwrap(), pf().element(a * d - b * c));
        let s = FieldMatrix::from_i64_rows(pf(), &[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(s.determinant().unwrap(), 0);
        let r = FieldMatrix::zeros(pf(), 2, 3);
        assert!(matches!(r.determinant(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn rational_determinant() {
        let m = FieldMatrix::from_i64_rows(RationalField, &[vec![2, 1], vec![1, 3]]);
        assert_eq!(m.determinant().unwrap(), RationalField.element(5));
    }

    fn random_matrix(seed: u64, rows: usize, cols: usize, p: u64) -> FieldMatrix<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows = (0..rows)
            .map(|_| (0..cols).map(|_| f.sample(&mut rng)).collect())
            .collect();
        FieldMatrix::from_rows(f, rows)
    }

    /// Leibniz expansion, the oracle for small determinants.
    fn leibniz(m: &FieldMatrix<PrimeField>) -> u64 {
        let f = *m.field();
        let n = m.rows();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0;
        loop {
            let mut term = 1;
            for (r, &c) in perm.iter().enumerate() {
                term = f.mul(&term, m.get(r, c));
            }
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            total = if inversions % 2 == 0 {
                f.add(&total, &term)
            } else {
                f.sub(&total, &term)
            };
            // next permutation in lex order
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        total
    }

    proptest! {
        #[test]
        fn rank_of_transpose(seed in any::<u64>(), r in 1usize..6, c in 1usize..6, p in prop::sample::select(vec![2u64, 3, 5, 101])) {
            let m = random_matrix(seed, r, c, p);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn det_nonzero_iff_full_rank(seed in any::<u64>(), n in 1usize..6, p in prop::sample::select(vec![2u64, 3, 7, 1_000_003])) {
            let m = random_matrix(seed, n, n, p);
            let det = m.determinant().unwrap();
            prop_assert_eq!(det != 0, m.rank() == n);
        }

        #[test]
        fn det_matches_leibniz(seed in any::<u64>(), n in 1usize..6) {
            let m = random_matrix(seed, n, n, crate::linalg::field::MERSENNE_61);
            prop_assert_eq!(m.determinant().unwrap(), leibniz(&m));
        }
    }
}
