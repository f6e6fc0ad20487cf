//! Fixed-size bitsets over the `k`-subsets of `[n]`, indexed by lex rank.

use std::ops::{BitAnd, BitOr};

use crate::combinatorics::{binomial, enumerate_k_subsets, lex_rank, KSubset, UniformHypergraph};
use crate::error::{Error, Result};

/// Largest universe an [`EdgeBits`] can index.
pub const MAX_EDGES: usize = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeBits([u64; 4]);

impl EdgeBits {
    pub const EMPTY: EdgeBits = EdgeBits([0; 4]);

    pub fn singleton(i: usize) -> Self {
        EdgeBits::EMPTY.with(i)
    }

    pub fn with(mut self, i: usize) -> Self {
        self.0[i / 64] |= 1 << (i % 64);
        self
    }

    pub fn without(mut self, i: usize) -> Self {
        self.0[i / 64] &= !(1 << (i % 64));
        self
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..4).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                (word != 0).then(|| {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    w * 64 + b
                })
            })
        })
    }
}

impl BitOr for EdgeBits {
    type Output = EdgeBits;

    fn bitor(self, rhs: Self) -> Self {
        EdgeBits(std::array::from_fn(|i| self.0[i] | rhs.0[i]))
    }
}

impl BitAnd for EdgeBits {
    type Output = EdgeBits;

    fn bitand(self, rhs: Self) -> Self {
        EdgeBits(std::array::from_fn(|i| self.0[i] & rhs.0[i]))
    }
}

/// The `k`-subsets of `[n]` in lex order, for translating between
/// hypergraphs and [`EdgeBits`].
#[derive(Clone, Debug)]
pub struct EdgeUniverse {
    n: usize,
    k: usize,
    subsets: Vec<KSubset>,
}

impl EdgeUniverse {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let size = binomial(n, k);
        if size > MAX_EDGES as u128 {
            return Err(Error::Unsupported(format!(
                "C({n},{k}) = {size} subsets exceed the {MAX_EDGES} supported here"
            )));
        }
        Ok(EdgeUniverse {
            n,
            k,
            subsets: enumerate_k_subsets(n, k).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subset(&self, i: usize) -> KSubset {
        self.subsets[i]
    }

    pub fn subsets(&self) -> &[KSubset] {
        &self.subsets
    }

    pub fn rank(&self, s: KSubset) -> usize {
        lex_rank(s, self.n)
    }

    pub fn bits(&self, h: &UniformHypergraph) -> EdgeBits {
        h.iter().fold(EdgeBits::EMPTY, |acc, &e| acc.with(self.rank(e)))
    }

    pub fn hypergraph(&self, bits: &EdgeBits) -> UniformHypergraph {
        let edges = bits.iter().map(|i| self.subsets[i]).collect();
        UniformHypergraph::new(self.n, self.k, edges).expect("ranks index the universe")
    }
}
