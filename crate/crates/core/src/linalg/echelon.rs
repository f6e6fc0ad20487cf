use crate::linalg::field::Field;

/// Incremental basis of a span, used for greedy column selection.
///
/// Each stored vector is normalized to 1 at its pivot and vanishes at the
/// pivots of all vectors stored before it. Reducing a candidate against the
/// stored vectors in insertion order therefore clears every pivot coordinate,
/// and the candidate is independent exactly when something nonzero remains.
#[derive(Clone, Debug)]
pub struct EchelonState<F: Field> {
    field: F,
    len: usize,
    basis: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> EchelonState<F> {
    pub fn new(field: F, len: usize) -> Self {
        EchelonState {
            field,
            len,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis.iter().map(|(p, _)| *p)
    }

    /// Reduces `v` against the current basis; returns the residue.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        debug_assert_eq!(v.len(), self.len);
        let f = &self.field;
        for (p, b) in &self.basis {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(b).skip(*p) {
                if !f.is_zero(y) {
                    *x = f.sub_mul(x, &c, y);
                }
            }
        }
        v
    }

    /// Whether `v` lies in the current span.
    pub fn is_spanned(&self, v: Vec<F::Elem>) -> bool {
        let r = self.reduce(v);
        r.iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` if it is independent of the basis; reports whether it was.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !self.field.is_zero(x)) else {
            return false;
        };
        let inv = self.field.inv(&r[p]);
        for x in r.iter_mut().skip(p) {
            *x = self.field.mul(x, &inv);
        }
        self.basis.push((p, r));
        true
    }
}

/// Greedy basis of a stream of labeled vectors: a vector is accepted when it
/// is not spanned by the vectors accepted before it. Stops once `target_rank`
/// vectors are accepted.
pub fn greedy_column_basis<F, L, I>(field: &F, columns: I, target_rank: usize) -> Vec<L>
where
    F: Field,
    I: IntoIterator<Item = (L, Vec<F::Elem>)>,
{
    let mut chosen = Vec::new();
    if target_rank == 0 {
        return chosen;
    }
    let mut state: Option<EchelonState<F>> = None;
    for (label, v) in columns {
        let st = state.get_or_insert_with(|| EchelonState::new(field.clone(), v.len()));
        if st.insert(v) {
            chosen.push(label);
            if chosen.len() == target_rank {
                break;
            }
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::PrimeField;
    use crate::linalg::matrix::FieldMatrix;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn greedy_examples() {
        let f = PrimeField::mersenne61();
        let cols = vec![("a", vec![1, 0]), ("b", vec![2, 0]), ("c", vec![0, 1])];
        assert_eq!(greedy_column_basis(&f, cols, 2), vec!["a", "c"]);
        let zeros = vec![("a", vec![0u64, 0]), ("b", vec![0, 0])];
        assert!(greedy_column_basis(&f, zeros, 2).is_empty());
        let indep = vec![(1, vec![1, 0, 0]), (2, vec![1, 1, 0]), (3, vec![1, 1, 1])];
        assert_eq!(greedy_column_basis(&f, indep, 3), vec![1, 2, 3]);
    }

    #[test]
    fn stops_at_target() {
        let f = PrimeField::mersenne61();
        let cols = (0..5).map(|i| (i, vec![1u64, i as u64, (i * i) as u64]));
        assert_eq!(greedy_column_basis(&f, cols, 2), vec![0, 1]);
    }

    proptest! {
        /// Accepted columns are independent and each rejected column is in the
        /// span of the columns accepted before it, certified by rank counts.
        #[test]
        fn greedy_certificate(seed in any::<u64>(), len in 1usize..5, count in 1usize..9, p in prop::sample::select(vec![2u64, 3, 5])) {
            let f = PrimeField::new(p).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let cols: Vec<Vec<u64>> = (0..count)
                .map(|_| (0..len).map(|_| f.sample(&mut rng)).collect())
                .collect();
            let chosen = greedy_column_basis(&f, cols.iter().cloned().enumerate(), usize::MAX);
            let rank_of = |idx: &[usize]| {
                if idx.is_empty() {
                    return 0;
                }
                FieldMatrix::from_rows(f, idx.iter().map(|&i| cols[i].clone()).collect()).rank()
            };
            prop_assert_eq!(rank_of(&chosen), chosen.len());
            for j in 0..count {
                if chosen.contains(&j) {
                    continue;
                }
                let before: Vec<usize> = chosen.iter().copied().filter(|&i| i < j).collect();
                let mut with = before.clone();
                with.push(j);
                prop_assert_eq!(rank_of(&with), rank_of(&before));
            }
            let all: Vec<usize> = (0..count).collect();
            prop_assert_eq!(chosen.len(), rank_of(&all));
        }
    }
}
