use std::fmt;

use crate::combinatorics::subset::{binomial, enumerate_k_subsets, lex_rank, KSubset, MAX_VERTEX};
use crate::combinatorics::VertexPermutation;
use crate::error::{Error, Result};

/// A `k`-uniform hypergraph on `[n]` with its edges kept in lex order.
///
/// Equality, hashing and ordering compare `(n, k)` and then the sorted edge
/// lists, so two hypergraphs on the same ground set are compared
/// lexicographically edge by edge.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniformHypergraph {
    n: usize,
    k: usize,
    edges: Vec<KSubset>,
}

impl UniformHypergraph {
    /// Validates and canonicalizes; duplicate edges are rejected.
    pub fn new(n: usize, k: usize, mut edges: Vec<KSubset>) -> Result<Self> {
        if n > MAX_VERTEX {
            return Err(Error::InvalidHypergraph(format!(
                "{n} vertices exceed the supported {MAX_VERTEX}"
            )));
        }
        if k > n {
            return Err(Error::InvalidHypergraph(format!(
                "uniformity {k} exceeds the vertex count {n}"
            )));
        }
        for e in &edges {
            if e.len() != k {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e} does not have {k} elements"
                )));
            }
            if e.last().is_some_and(|m| m > n) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e} leaves the vertex set [{n}]"
                )));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!(
                "edge {} appears twice",
                w[0]
            )));
        }
        Ok(UniformHypergraph { n, k, edges })
    }

    /// Skips validation; `edges` must already be valid, sorted and distinct.
    pub(crate) fn from_sorted_unchecked(n: usize, k: usize, edges: Vec<KSubset>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        UniformHypergraph { n, k, edges }
    }

    /// Parses edges written as digit strings, e.g. `"12 13 23"`.
    pub fn from_digits(n: usize, k: usize, edges: &str) -> Result<Self> {
        let edges = edges.split_whitespace().map(KSubset::digits).collect();
        Self::new(n, k, edges)
    }

    pub fn empty(n: usize, k: usize) -> Self {
        UniformHypergraph {
            n,
            k,
            edges: Vec::new(),
        }
    }

    /// All `k`-subsets of `[n]`.
    pub fn complete(n: usize, k: usize) -> Self {
        UniformHypergraph {
            n,
            k,
            edges: enumerate_k_subsets(n, k).collect(),
        }
    }

    /// `st(1)`: every `k`-subset containing vertex 1.
    pub fn star(n: usize, k: usize) -> Self {
        let edges = enumerate_k_subsets(n, k).filter(|e| e.contains(1)).collect();
        UniformHypergraph { n, k, edges }
    }

    /// The initial lex-segment ending at `last`.
    pub fn lex_segment(n: usize, last: KSubset) -> Result<Self> {
        let k = last.len();
        if last.last().is_some_and(|m| m > n) {
            return Err(Error::InvalidSubset(format!("{last} leaves [{n}]")));
        }
        let edges = enumerate_k_subsets(n, k)
            .take(lex_rank(last, n) + 1)
            .collect();
        Ok(UniformHypergraph { n, k, edges })
    }

    /// The smallest shifted hypergraph containing every generator.
    pub fn shifted_closure(n: usize, k: usize, generators: &[KSubset]) -> Result<Self> {
        let base = Self::new(n, k, {
            let mut g = generators.to_vec();
            g.sort_unstable();
            g.dedup();
            g
        })?;
        let edges = enumerate_k_subsets(n, k)
            .filter(|s| {
                base.edges
                    .iter()
                    .any(|&t| crate::combinatorics::subset::dominated(*s, t))
            })
            .collect();
        Ok(UniformHypergraph { n, k, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[KSubset] {
        &self.edges
    }

    pub fn iter(&self) -> std::slice::Iter<'_, KSubset> {
        self.edges.iter()
    }

    pub fn contains(&self, e: KSubset) -> bool {
        e.len() == self.k && self.edges.binary_search(&e).is_ok()
    }

    /// `m_H`, the lex-largest edge.
    pub fn max_lex(&self) -> Result<KSubset> {
        self.edges.last().copied().ok_or(Error::EmptyHypergraph)
    }

    /// Closed under replacing an element of an edge by a smaller absent vertex.
    pub fn is_shifted(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.lower_covers().all(|c| self.contains(c)))
    }

    /// Equal to `{T : T <=_lex m_H}`; the empty hypergraph counts as a segment.
    pub fn is_initial_lex_segment(&self) -> bool {
        match self.edges.last() {
            None => true,
            Some(&m) => lex_rank(m, self.n) + 1 == self.edges.len(),
        }
    }

    /// `π(H) = {π(T) : T ∈ H}`.
    pub fn apply_permutation(&self, pi: &VertexPermutation) -> Result<Self> {
        if pi.n() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "permutation of [{}] applied to a hypergraph on [{}]",
                pi.n(),
                self.n
            )));
        }
        let mut edges: Vec<KSubset> = self.edges.iter().map(|&e| pi.apply_subset(e)).collect();
        edges.sort_unstable();
        Ok(UniformHypergraph {
            n: self.n,
            k: self.k,
            edges,
        })
    }

    /// Cone over a new vertex placed before all others: the result lives on
    /// `[n + 1]`, the apex is vertex 1 and every old label moves up by one.
    pub fn cone(&self) -> Self {
        UniformHypergraph {
            n: self.n + 1,
            k: self.k + 1,
            edges: self.edges.iter().map(|e| e.shift_up().with(1)).collect(),
        }
    }

    /// `H(S) = {T ∈ H : T <=_lex S}`.
    pub fn lex_prefix(&self, s: KSubset) -> Self {
        let cut = self.edges.partition_point(|&e| e <= s);
        UniformHypergraph {
            n: self.n,
            k: self.k,
            edges: self.edges[..cut].to_vec(),
        }
    }

    /// `(H ∖ {remove}) ∪ {insert}`.
    pub fn exchange(&self, remove: KSubset, insert: KSubset) -> Result<Self> {
        let mut edges: Vec<KSubset> = self.edges.iter().copied().filter(|&e| e != remove).collect();
        edges.push(insert);
        Self::new(self.n, self.k, edges)
    }

    /// Edges of `self` not in `other`.
    pub fn difference(&self, other: &Self) -> Vec<KSubset> {
        self.edges
            .iter()
            .copied()
            .filter(|&e| !other.contains(e))
            .collect()
    }

    /// The same edges viewed on a larger vertex set.
    pub fn on_vertices(&self, n: usize) -> Result<Self> {
        Self::new(n, self.k, self.edges.clone())
    }

    /// Edges avoiding vertex 1, relabeled to `[n - 1]` by `v -> v - 1`.
    pub fn link_free_part(&self) -> Self {
        UniformHypergraph {
            n: self.n.saturating_sub(1),
            k: self.k,
            edges: self
                .edges
                .iter()
                .filter(|e| !e.contains(1))
                .map(|e| e.shift_down())
                .collect(),
        }
    }

    /// Number of `k`-subsets of `[n]`.
    pub fn universe_size(&self) -> u128 {
        binomial(self.n, self.k)
    }

    /// Edges in the file format, one per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.k);
        for e in &self.edges {
            out.push_str(&e.to_line());
            out.push('\n');
        }
        out
    }

    /// Compact form `{12,13,23}` when all labels are single digits, otherwise
    /// edges are written as `{1,2}` sets.
    pub fn compact(&self) -> String {
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|e| {
                if self.n <= 9 {
                    e.iter().map(|v| v.to_string()).collect()
                } else {
                    e.to_string()
                }
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Debug for UniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H[n={}, k={}]{}", self.n, self.k, self.compact())
    }
}

impl<'a> IntoIterator for &'a UniformHypergraph {
    type Item = &'a KSubset;
    type IntoIter = std::slice::Iter<'a, KSubset>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, k: usize, s: &str) -> UniformHypergraph {
        UniformHypergraph::from_digits(n, k, s).unwrap()
    }

    #[test]
    fn shiftedness() {
        assert!(h(4, 2, "12 13 14").is_shifted());
        assert!(h(5, 2, "12 13 23").is_shifted());
        assert!(!h(3, 2, "13").is_shifted());
        assert!(UniformHypergraph::empty(4, 2).is_shifted());
    }

    #[test]
    fn segments() {
        for n in 2..=7 {
            let star = UniformHypergraph::star(n, 2);
            assert!(star.is_initial_lex_segment());
        }
        assert!(!h(5, 2, "12 13 23").is_initial_lex_segment());
        assert!(UniformHypergraph::empty(5, 2).is_initial_lex_segment());
        let seg = UniformHypergraph::lex_segment(5, KSubset::digits("135")).unwrap();
        assert_eq!(seg.len(), 5);
        assert!(seg.is_initial_lex_segment());
    }

    #[test]
    fn max_lex_examples() {
        assert_eq!(h(3, 2, "12 13 23").max_lex().unwrap(), KSubset::digits("23"));
        assert_eq!(h(6, 2, "12 13 14 15 16").max_lex().unwrap(), KSubset::digits("16"));
        assert_eq!(h(4, 3, "123 124 134").max_lex().unwrap(), KSubset::digits("134"));
        assert_eq!(
            UniformHypergraph::empty(3, 2).max_lex(),
            Err(Error::EmptyHypergraph)
        );
    }

    #[test]
    fn permutation_examples() {
        let swap = VertexPermutation::transposition(3, 1, 3).unwrap();
        assert_eq!(h(3, 2, "12 13").apply_permutation(&swap).unwrap(), h(3, 2, "23 13"));
        let flip = VertexPermutation::transposition(5, 1, 5).unwrap();
        assert_eq!(
            h(5, 2, "12 13 23").apply_permutation(&flip).unwrap(),
            h(5, 2, "25 35 23")
        );
        let g = h(5, 2, "14 25 34");
        assert_eq!(g.apply_permutation(&VertexPermutation::identity(5)).unwrap(), g);
    }

    #[test]
    fn cone_examples() {
        assert_eq!(h(2, 2, "12").cone(), h(3, 3, "123"));
        assert_eq!(UniformHypergraph::empty(3, 2).cone(), UniformHypergraph::empty(4, 3));
        assert_eq!(h(3, 2, "12 13").cone(), h(4, 3, "123 124"));
    }

    #[test]
    fn prefix_examples() {
        let g = h(5, 2, "12 13 23");
        assert_eq!(g.lex_prefix(g.max_lex().unwrap()), g);
        assert_eq!(g.lex_prefix(KSubset::digits("13")), h(5, 2, "12 13"));
        assert!(h(5, 2, "23 24").lex_prefix(KSubset::digits("15")).is_empty());
    }

    #[test]
    fn validation() {
        assert!(UniformHypergraph::from_digits(3, 2, "12 12").is_err());
        assert!(UniformHypergraph::from_digits(3, 2, "14").is_err());
        assert!(UniformHypergraph::from_digits(3, 2, "123").is_err());
    }

    #[test]
    fn shifted_closure_is_shifted() {
        let g = UniformHypergraph::shifted_closure(6, 3, &[KSubset::digits("246")]).unwrap();
        assert!(g.is_shifted());
        assert!(g.contains(KSubset::digits("145")));
        assert!(!g.contains(KSubset::digits("156")));
    }
}
