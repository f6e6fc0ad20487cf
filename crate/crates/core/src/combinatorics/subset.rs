use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex label. Subsets are stored as 64-bit masks.
pub const MAX_VERTEX: usize = 64;

/// A finite subset of `[64]`, stored as a bitmask (vertex `i` is bit `i - 1`).
///
/// Elements are always reported in increasing order, matching the convention
/// that `{i_1, ..., i_k}` is written sorted. The derived `Ord` compares by
/// cardinality first and lexicographically within one cardinality, so sorting
/// a list of equal-size subsets yields lex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KSubset(u64);

impl KSubset {
    pub const EMPTY: KSubset = KSubset(0);

    /// Builds a subset from strictly increasing labels in `1..=64`.
    pub fn new(elements: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        let mut prev = 0usize;
        for &v in elements {
            if v == 0 || v > MAX_VERTEX {
                return Err(Error::InvalidSubset(format!(
                    "vertex {v} outside 1..={MAX_VERTEX}"
                )));
            }
            if v <= prev {
                return Err(Error::InvalidSubset(format!(
                    "elements {elements:?} are not strictly increasing"
                )));
            }
            prev = v;
            bits |= 1 << (v - 1);
        }
        Ok(KSubset(bits))
    }

    /// Builds a subset from labels in any order; repeated labels are an error.
    pub fn from_unsorted(elements: &[usize]) -> Result<Self> {
        let mut sorted = elements.to_vec();
        sorted.sort_unstable();
        Self::new(&sorted)
    }

    /// Panicking shorthand for literals in tests and examples.
    ///
    /// ```
    /// use algshift::KSubset;
    /// assert_eq!(KSubset::of(&[1, 3]).to_string(), "{1,3}");
    /// ```
    pub fn of(elements: &[usize]) -> Self {
        Self::new(elements).expect("invalid subset literal")
    }

    /// Parses a digit string such as `"124"` (vertices 1..=9 only).
    pub fn digits(s: &str) -> Self {
        let elements: Vec<usize> = s
            .chars()
            .map(|c| c.to_digit(10).expect("digit") as usize)
            .collect();
        Self::of(&elements)
    }

    pub const fn from_bits(bits: u64) -> Self {
        KSubset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// The `j`-th smallest element, 0-based.
    pub fn nth(self, j: usize) -> Option<usize> {
        self.iter().nth(j)
    }

    pub fn with(self, v: usize) -> Self {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        KSubset(self.0 | 1 << (v - 1))
    }

    pub fn without(self, v: usize) -> Self {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        KSubset(self.0 & !(1 << (v - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        KSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        KSubset(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        KSubset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Relabels every vertex `v` to `v + 1`.
    pub fn shift_up(self) -> Self {
        debug_assert!(self.0 >> 63 == 0);
        KSubset(self.0 << 1)
    }

    /// Relabels every vertex `v` to `v - 1`; vertex 1 must be absent.
    pub fn shift_down(self) -> Self {
        debug_assert!(self.0 & 1 == 0);
        KSubset(self.0 >> 1)
    }

    /// Lexicographic comparison of two sets of the same size, without the size
    /// check. The smaller set is the one containing `min(S △ T)`.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            Ordering::Equal
        } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// The subsets covered by `self` in the dominance order: replace one
    /// element `v > 1` by `v - 1` when `v - 1` is not already present.
    pub fn lower_covers(self) -> impl Iterator<Item = KSubset> {
        self.iter()
            .filter(move |&v| v > 1 && !self.contains(v - 1))
            .map(move |v| self.without(v).with(v - 1))
    }

    /// The subsets covering `self` in the dominance order inside `[n]`.
    pub fn upper_covers(self, n: usize) -> impl Iterator<Item = KSubset> {
        self.iter()
            .filter(move |&v| v < n && !self.contains(v + 1))
            .map(move |v| self.without(v).with(v + 1))
    }

    /// Subsets obtained by removing exactly one element.
    pub fn facets(self) -> impl Iterator<Item = KSubset> {
        self.iter().map(move |v| self.without(v))
    }

    /// Space-separated elements, the line format of hypergraph files.
    pub fn to_line(self) -> String {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        parts.join(" ")
    }
}

impl Ord for KSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for KSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Increasing iterator over the elements of a [`KSubset`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

impl DoubleEndedIterator for Elements {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let top = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1 << top);
        Some(top + 1)
    }
}

fn check_sizes(s: KSubset, t: KSubset) -> Result<()> {
    if s.len() != t.len() {
        return Err(Error::SizeMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    Ok(())
}

/// `S <_lex T` iff the minimum of the symmetric difference lies in `S`.
pub fn lex_compare(s: KSubset, t: KSubset) -> Result<Ordering> {
    check_sizes(s, t)?;
    Ok(s.lex_cmp(t))
}

/// Componentwise comparison of the sorted elements (`S <=_p T`).
pub fn dominance_leq(s: KSubset, t: KSubset) -> Result<bool> {
    check_sizes(s, t)?;
    Ok(dominated(s, t))
}

pub(crate) fn dominated(s: KSubset, t: KSubset) -> bool {
    s.iter().zip(t.iter()).all(|(a, b)| a <= b)
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Position of `s` in the lex enumeration of the `|s|`-subsets of `[n]`.
pub fn lex_rank(s: KSubset, n: usize) -> usize {
    let k = s.len();
    let mut rank = 0u128;
    let mut prev = 0;
    for (j, v) in s.iter().enumerate() {
        for w in prev + 1..v {
            rank += binomial(n - w, k - j - 1);
        }
        prev = v;
    }
    rank as usize
}

/// All `k`-subsets of `[n]` in increasing lex order.
pub fn enumerate_k_subsets(n: usize, k: usize) -> KSubsets {
    assert!(n <= MAX_VERTEX, "at most {MAX_VERTEX} vertices are supported");
    let state = (k <= n).then(|| (1..=k).collect());
    KSubsets { n, state }
}

/// Iterator returned by [`enumerate_k_subsets`].
pub struct KSubsets {
    n: usize,
    state: Option<Vec<usize>>,
}

impl Iterator for KSubsets {
    type Item = KSubset;

    fn next(&mut self) -> Option<KSubset> {
        let cur = self.state.as_mut()?;
        let out = KSubset::of(cur);
        let k = cur.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - (k - 1 - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// A bijection of `[n]`, stored as its images (`images[i - 1] = π(i)`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexPermutation {
    images: Vec<usize>,
}

impl VertexPermutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_VERTEX {
            return Err(Error::InvalidPermutation(format!(
                "{n} points exceed the supported {MAX_VERTEX}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(VertexPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        VertexPermutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!(
                "transposition ({a} {b}) outside [{n}]"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(VertexPermutation { images })
    }

    /// Extends a partial assignment `v -> π(v)` to a permutation of `[n]` by
    /// mapping the unassigned points onto the unused images in increasing order.
    pub fn with_order_preserving_rest(n: usize, assigned: &[(usize, usize)]) -> Result<Self> {
        let mut images = vec![0usize; n];
        let mut used = vec![false; n + 1];
        for &(v, w) in assigned {
            if v == 0 || v > n || w == 0 || w > n || images[v - 1] != 0 || used[w] {
                return Err(Error::InvalidPermutation(format!(
                    "partial assignment {assigned:?} is not injective on [{n}]"
                )));
            }
            images[v - 1] = w;
            used[w] = true;
        }
        let mut free = (1..=n).filter(|&w| !used[w]);
        for slot in images.iter_mut().filter(|s| **s == 0) {
            *slot = free.next().expect("counts match");
        }
        Ok(VertexPermutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn apply_subset(&self, s: KSubset) -> KSubset {
        s.iter()
            .fold(KSubset::EMPTY, |acc, v| acc.with(self.apply(v)))
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &w) in self.images.iter().enumerate() {
            images[w - 1] = i + 1;
        }
        VertexPermutation { images }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        VertexPermutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &w)| w == i + 1)
    }

    /// Permutation of `[n + 1]` fixing 1 and acting as `self` on the labels
    /// shifted up by one.
    pub fn lift_fixing_one(&self) -> Self {
        let mut images = vec![1];
        images.extend(self.images.iter().map(|&w| w + 1));
        VertexPermutation { images }
    }
}

impl fmt::Display for VertexPermutation {
    /// One-line notation: the images of `1, 2, ..., n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for VertexPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ks(s: &str) -> KSubset {
        KSubset::digits(s)
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(lex_compare(ks("13"), ks("23")).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(ks("124"), ks("134")).unwrap(), Ordering::Less);
        assert_eq!(lex_compare(ks("23"), ks("23")).unwrap(), Ordering::Equal);
        assert!(matches!(
            lex_compare(ks("1"), ks("12")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(ks("12"), ks("13")).unwrap());
        assert!(!dominance_leq(ks("23"), ks("14")).unwrap());
        assert!(dominance_leq(ks("245"), ks("245")).unwrap());
        assert!(dominance_leq(ks("12"), ks("123")).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<String> = enumerate_k_subsets(3, 2).map(|s| s.to_line()).collect();
        assert_eq!(got, ["1 2", "1 3", "2 3"]);
        let got: Vec<KSubset> = enumerate_k_subsets(4, 1).collect();
        assert_eq!(got, vec![ks("1"), ks("2"), ks("3"), ks("4")]);
        let got: Vec<KSubset> = enumerate_k_subsets(4, 3).collect();
        assert_eq!(got, vec![ks("123"), ks("124"), ks("134"), ks("234")]);
        assert_eq!(enumerate_k_subsets(3, 0).collect::<Vec<_>>(), vec![KSubset::EMPTY]);
        assert_eq!(enumerate_k_subsets(2, 3).count(), 0);
    }

    #[test]
    fn ranks_follow_enumeration() {
        for n in 0..=8 {
            for k in 0..=n {
                for (i, s) in enumerate_k_subsets(n, k).enumerate() {
                    assert_eq!(lex_rank(s, n), i);
                }
                assert_eq!(enumerate_k_subsets(n, k).count() as u128, binomial(n, k));
            }
        }
    }

    #[test]
    fn permutation_basics() {
        let p = VertexPermutation::transposition(3, 1, 3).unwrap();
        assert_eq!(p.apply_subset(ks("12")), ks("23"));
        assert!(p.compose(&p).is_identity());
        assert!(VertexPermutation::new(vec![1, 1, 2]).is_err());
        let q = VertexPermutation::with_order_preserving_rest(5, &[(2, 5)]).unwrap();
        assert_eq!(q.images(), &[1, 5, 2, 3, 4]);
        assert!(q.compose(&q.inverse()).is_identity());
        assert_eq!(q.to_string(), "[1 5 2 3 4]");
    }

    #[test]
    fn covers() {
        let mut lower: Vec<KSubset> = ks("245").lower_covers().collect();
        lower.sort();
        assert_eq!(lower, vec![ks("145"), ks("235")]);
        let mut upper: Vec<KSubset> = ks("245").upper_covers(6).collect();
        upper.sort();
        assert_eq!(upper, vec![ks("246"), ks("345")]);
    }

    fn subset_pair(n: usize) -> impl Strategy<Value = (KSubset, KSubset)> {
        (1..=n).prop_flat_map(move |k| {
            let pick = proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k);
            (pick.clone(), pick).prop_map(|(a, b)| (KSubset::of(&a), KSubset::of(&b)))
        })
    }

    proptest! {
        #[test]
        fn lex_matches_tuple_order((s, t) in subset_pair(10)) {
            prop_assert_eq!(s.lex_cmp(t), s.elements().cmp(&t.elements()));
        }

        #[test]
        fn dominance_refined_by_lex((s, t) in subset_pair(10)) {
            if dominance_leq(s, t).unwrap() {
                prop_assert_ne!(lex_compare(s, t).unwrap(), Ordering::Greater);
            }
        }

        #[test]
        fn lex_is_antisymmetric((s, t) in subset_pair(12)) {
            prop_assert_eq!(s.lex_cmp(t), t.lex_cmp(s).reverse());
        }
    }
}
