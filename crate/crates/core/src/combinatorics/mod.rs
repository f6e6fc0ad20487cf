//! Subsets, orders, shifted families, complexes and their invariants.

mod complex;
mod hypergraph;
pub mod io;
mod subset;

pub use complex::{top_betti, BettiVector, FVector, SimplicialComplex};
pub use hypergraph::UniformHypergraph;
pub use subset::{
    binomial, dominance_leq, enumerate_k_subsets, lex_compare, lex_rank, Elements, KSubset,
    KSubsets, VertexPermutation, MAX_VERTEX,
};

/// Every shifted `k`-uniform hypergraph on `[n]` with exactly `m` edges, in
/// increasing order.
///
/// Generated by walking the `k`-subsets in lex order (a linear extension of
/// the dominance order) and admitting a subset only when all the subsets it
/// covers were admitted.
pub fn enumerate_shifted(n: usize, k: usize, m: usize) -> Vec<UniformHypergraph> {
    let universe: Vec<KSubset> = enumerate_k_subsets(n, k).collect();
    if m > universe.len() {
        return Vec::new();
    }
    let covers: Vec<Vec<usize>> = universe
        .iter()
        .map(|s| s.lower_covers().map(|c| lex_rank(c, n)).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen = vec![false; universe.len()];
    let mut stack = Vec::with_capacity(m);
    walk(&universe, &covers, m, 0, &mut chosen, &mut stack, &mut |edges| {
        out.push(UniformHypergraph::from_sorted_unchecked(n, k, edges.to_vec()));
    });
    out.sort();
    out
}

/// Every shifted `k`-uniform hypergraph on `[n]` with between `lo` and `hi`
/// edges.
pub fn enumerate_shifted_range(n: usize, k: usize, lo: usize, hi: usize) -> Vec<UniformHypergraph> {
    (lo..=hi).flat_map(|m| enumerate_shifted(n, k, m)).collect()
}

fn walk(
    universe: &[KSubset],
    covers: &[Vec<usize>],
    m: usize,
    idx: usize,
    chosen: &mut [bool],
    stack: &mut Vec<KSubset>,
    emit: &mut dyn FnMut(&[KSubset]),
) {
    if stack.len() == m {
        emit(stack);
        return;
    }
    if m - stack.len() > universe.len() - idx {
        return;
    }
    if covers[idx].iter().all(|&c| chosen[c]) {
        chosen[idx] = true;
        stack.push(universe[idx]);
        walk(universe, covers, m, idx + 1, chosen, stack, emit);
        stack.pop();
        chosen[idx] = false;
    }
    walk(universe, covers, m, idx + 1, chosen, stack, emit);
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Filters every `m`-subset of the universe through `is_shifted`.
    fn brute_force(n: usize, k: usize, m: usize) -> Vec<UniformHypergraph> {
        let universe: Vec<KSubset> = enumerate_k_subsets(n, k).collect();
        let mut out = Vec::new();
        for pick in enumerate_k_subsets(universe.len(), m) {
            let edges = pick.iter().map(|i| universe[i - 1]).collect();
            let h = UniformHypergraph::new(n, k, edges).unwrap();
            if h.is_shifted() {
                out.push(h);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn shifted_examples() {
        let h = |n, k, s| UniformHypergraph::from_digits(n, k, s).unwrap();
        assert_eq!(enumerate_shifted(3, 2, 2), vec![h(3, 2, "12 13")]);
        assert_eq!(
            enumerate_shifted(5, 2, 3),
            vec![h(5, 2, "12 13 14"), h(5, 2, "12 13 23")]
        );
        assert_eq!(enumerate_shifted(4, 3, 0), vec![UniformHypergraph::empty(4, 3)]);
    }

    #[test]
    fn matches_brute_force_up_to_five_vertices() {
        for n in 1..=5 {
            for k in 1..=n {
                let total = binomial(n, k) as usize;
                for m in 0..=total {
                    assert_eq!(enumerate_shifted(n, k, m), brute_force(n, k, m), "n={n} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn every_output_is_shifted_and_distinct() {
        let all = enumerate_shifted_range(7, 3, 0, 12);
        assert!(all.iter().all(UniformHypergraph::is_shifted));
        let mut d = all.clone();
        d.dedup();
        assert_eq!(d.len(), all.len());
    }

    #[test]
    fn segments_are_shifted() {
        for n in 2..=6 {
            for k in 1..=3.min(n) {
                for last in enumerate_k_subsets(n, k) {
                    let seg = UniformHypergraph::lex_segment(n, last).unwrap();
                    assert!(seg.is_initial_lex_segment() && seg.is_shifted());
                }
            }
        }
    }
}
