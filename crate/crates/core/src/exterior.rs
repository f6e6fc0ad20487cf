//! Exterior shifting through compound matrices.
//!
//! For a `k`-uniform `H`, the rows of the compound matrix `X(H, ([n] choose k))`
//! hold the `k x k` minors of a generic `X`. Walking the columns in lex order
//! and keeping each column not spanned by the kept ones yields `Δ^e(H)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{
    binomial, enumerate_k_subsets, lex_rank, KSubset, SimplicialComplex, UniformHypergraph,
};
use crate::error::{ConsensusFailure, Error, Result};
use crate::linalg::{determinant_in_place, EchelonState, Field, FieldConfig, FieldMatrix, PrimeField};

/// An `n x n` matrix with entries sampled from a seed, standing in for a
/// matrix with algebraically independent entries.
#[derive(Clone, Debug)]
pub struct GenericMatrix<F: Field = PrimeField> {
    seed: u64,
    entries: FieldMatrix<F>,
}

impl GenericMatrix<PrimeField> {
    /// Samples over `F_p` with `p` and the seed taken from `config`.
    pub fn sample(n: usize, config: &FieldConfig) -> Self {
        Self::sample_in(config.field(), n, config.seed)
    }
}

impl<F: Field> GenericMatrix<F> {
    /// Entries are drawn row by row from ChaCha8 seeded with `seed`, so the
    /// matrix is reproducible from `(n, field, seed)`.
    pub fn sample_in(field: F, n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows = (0..n)
            .map(|_| (0..n).map(|_| field.sample(&mut rng)).collect())
            .collect();
        GenericMatrix {
            seed,
            entries: FieldMatrix::from_rows(field, rows),
        }
    }

    /// Wraps an explicit square matrix (useful for tests with known entries).
    pub fn from_matrix(entries: FieldMatrix<F>, seed: u64) -> Result<Self> {
        if entries.rows() != entries.cols() {
            return Err(Error::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        Ok(GenericMatrix { seed, entries })
    }

    pub fn n(&self) -> usize {
        self.entries.rows()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn field(&self) -> &F {
        self.entries.field()
    }

    pub fn entries(&self) -> &FieldMatrix<F> {
        &self.entries
    }

    /// `x_{ij}` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &F::Elem {
        self.entries.get(i - 1, j - 1)
    }

    /// Minor on rows `s` and columns `t`, sizes assumed equal and in range.
    pub(crate) fn minor(&self, s: KSubset, t: KSubset) -> F::Elem {
        let f = self.field();
        let r: Vec<usize> = s.iter().map(|v| v - 1).collect();
        let c: Vec<usize> = t.iter().map(|v| v - 1).collect();
        let x = |a: usize, b: usize| self.entries.get(r[a], c[b]);
        match r.len() {
            0 => f.one(),
            1 => x(0, 0).clone(),
            2 => f.sub(&f.mul(x(0, 0), x(1, 1)), &f.mul(x(0, 1), x(1, 0))),
            3 => {
                let m0 = f.sub(&f.mul(x(1, 1), x(2, 2)), &f.mul(x(1, 2), x(2, 1)));
                let m1 = f.sub(&f.mul(x(1, 0), x(2, 2)), &f.mul(x(1, 2), x(2, 0)));
                let m2 = f.sub(&f.mul(x(1, 0), x(2, 1)), &f.mul(x(1, 1), x(2, 0)));
                let acc = f.sub(&f.mul(x(0, 0), &m0), &f.mul(x(0, 1), &m1));
                f.add(&acc, &f.mul(x(0, 2), &m2))
            }
            k => {
                let mut buf: Vec<F::Elem> = (0..k)
                    .flat_map(|a| (0..k).map(move |b| (a, b)))
                    .map(|(a, b)| x(a, b).clone())
                    .collect();
                determinant_in_place(f, k, &mut buf)
            }
        }
    }
}

/// `X_{ST}`: the determinant of the submatrix with rows `S` and columns `T`.
pub fn compound_minor<F: Field>(x: &GenericMatrix<F>, s: KSubset, t: KSubset) -> Result<F::Elem> {
    if s.len() != t.len() {
        return Err(Error::SizeMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    for u in [s, t] {
        if u.last().is_some_and(|m| m > x.n()) {
            return Err(Error::InvalidSubset(format!("{u} leaves [{}]", x.n())));
        }
    }
    Ok(x.minor(s, t))
}

fn check_dimension<F: Field>(h: &UniformHypergraph, x: &GenericMatrix<F>) -> Result<()> {
    if h.n() != x.n() {
        return Err(Error::InvalidHypergraph(format!(
            "hypergraph on [{}] shifted with a {}x{} matrix",
            h.n(),
            x.n(),
            x.n()
        )));
    }
    Ok(())
}

/// `Δ^e(H)` under one sampled matrix.
///
/// Columns are generated in lex order and dropped after the echelon update;
/// the walk stops once `|H|` columns are kept. A degenerate sample can keep
/// fewer than `|H|` columns, in which case the short result is returned and
/// the consensus layer reports it.
pub fn exterior_shift_uniform<F: Field>(
    h: &UniformHypergraph,
    x: &GenericMatrix<F>,
) -> Result<UniformHypergraph> {
    check_dimension(h, x)?;
    let mut kept = Vec::with_capacity(h.len());
    if !h.is_empty() {
        let mut echelon = EchelonState::new(x.field().clone(), h.len());
        for t in enumerate_k_subsets(h.n(), h.k()) {
            let column = h.iter().map(|&s| x.minor(s, t)).collect();
            if echelon.insert(column) {
                kept.push(t);
                if kept.len() == h.len() {
                    break;
                }
            }
        }
    }
    Ok(UniformHypergraph::from_sorted_unchecked(h.n(), h.k(), kept))
}

/// `Δ^e(K)`, shifting every layer separately.
pub fn exterior_shift_complex<F: Field>(
    k: &SimplicialComplex,
    x: &GenericMatrix<F>,
) -> Result<SimplicialComplex> {
    let mut layers = vec![vec![KSubset::EMPTY]];
    for size in 1..k.layers().len() {
        let layer = k.uniform_layer(size);
        check_dimension(&layer, x)?;
        layers.push(exterior_shift_uniform(&layer, x)?.edges().to_vec());
    }
    SimplicialComplex::from_layers(k.n(), layers)
}

/// Every `k x k` minor of one matrix, indexed by lex ranks of rows and columns.
///
/// Repeated shifts of many hypergraphs on the same `[n]` (as in preimage
/// enumeration) reuse the table instead of recomputing minors.
#[derive(Clone, Debug)]
pub struct CompoundTable<F: Field = PrimeField> {
    field: F,
    n: usize,
    k: usize,
    size: usize,
    minors: Vec<F::Elem>,
}

impl<F: Field> CompoundTable<F> {
    /// Tables are only built when `C(n, k)` is at most this many subsets.
    pub const MAX_SUBSETS: usize = 256;

    pub fn new(x: &GenericMatrix<F>, k: usize) -> Result<Self> {
        let n = x.n();
        let size = binomial(n, k);
        if size > Self::MAX_SUBSETS as u128 {
            return Err(Error::Unsupported(format!(
                "compound table with C({n},{k}) = {size} rows"
            )));
        }
        let size = size as usize;
        let subsets: Vec<KSubset> = enumerate_k_subsets(n, k).collect();
        let mut minors = Vec::with_capacity(size * size);
        for &s in &subsets {
            for &t in &subsets {
                minors.push(x.minor(s, t));
            }
        }
        Ok(CompoundTable {
            field: x.field().clone(),
            n,
            k,
            size,
            minors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn minor(&self, row: usize, col: usize) -> &F::Elem {
        &self.minors[row * self.size + col]
    }

    fn column(&self, rows: &[usize], col: usize) -> Vec<F::Elem> {
        rows.iter().map(|&r| self.minor(r, col).clone()).collect()
    }

    /// Lex-ranked column indices of the greedy basis for the given rows.
    pub fn shift_ranks(&self, rows: &[usize]) -> Vec<usize> {
        let mut kept = Vec::with_capacity(rows.len());
        if rows.is_empty() {
            return kept;
        }
        let mut echelon = EchelonState::new(self.field.clone(), rows.len());
        for col in 0..self.size {
            if echelon.insert(self.column(rows, col)) {
                kept.push(col);
                if kept.len() == rows.len() {
                    break;
                }
            }
        }
        kept
    }

    pub fn shift(&self, h: &UniformHypergraph) -> UniformHypergraph {
        debug_assert_eq!((h.n(), h.k()), (self.n, self.k));
        let rows: Vec<usize> = h.iter().map(|&e| lex_rank(e, self.n)).collect();
        let universe: Vec<KSubset> = enumerate_k_subsets(self.n, self.k).collect();
        let edges = self.shift_ranks(&rows).into_iter().map(|c| universe[c]).collect();
        UniformHypergraph::from_sorted_unchecked(self.n, self.k, edges)
    }

    /// Whether the greedy basis for `rows` is exactly `target`, given as a
    /// membership mask over column ranks with `target_len` entries set. Stops
    /// at the first column whose fate differs from the target.
    pub fn shifts_onto(&self, rows: &[usize], target: &[bool], target_len: usize) -> bool {
        if rows.len() != target_len {
            return false;
        }
        if rows.is_empty() {
            return true;
        }
        let mut echelon = EchelonState::new(self.field.clone(), rows.len());
        for (col, &wanted) in target.iter().enumerate() {
            let v = self.column(rows, col);
            let kept = if wanted {
                echelon.insert(v)
            } else {
                !echelon.is_spanned(v)
            };
            if kept != wanted {
                return false;
            }
            if echelon.rank() == target_len {
                return true;
            }
        }
        false
    }
}

/// Result of a multi-seed shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub input: UniformHypergraph,
    pub output: UniformHypergraph,
    pub seeds_used: Vec<u64>,
    pub consensus: bool,
}

/// Shifts `h` under `num_seeds` matrices drawn from the seed schedule of
/// `config` and requires all of them to agree.
pub fn shift_consensus(
    h: &UniformHypergraph,
    config: FieldConfig,
    num_seeds: usize,
) -> Result<ShiftReport> {
    if num_seeds == 0 {
        return Err(Error::Precondition("at least one seed is required".into()));
    }
    let seeds = config.seeds(num_seeds);
    let mut outputs = Vec::with_capacity(num_seeds);
    for &seed in &seeds {
        let x = GenericMatrix::sample_in(config.field(), h.n(), seed);
        outputs.push(exterior_shift_uniform(h, &x)?);
    }
    let agreed = outputs.iter().all(|o| *o == outputs[0] && o.len() == h.len());
    if !agreed {
        return Err(Error::NoConsensus(Box::new(ConsensusFailure {
            seeds,
            outputs: outputs.iter().map(|o| o.edges().to_vec()).collect(),
        })));
    }
    Ok(ShiftReport {
        input: h.clone(),
        output: outputs.swap_remove(0),
        seeds_used: seeds,
        consensus: true,
    })
}
