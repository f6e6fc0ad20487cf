//! `M(H) = {G : |G| = |H|, Δ(G) = H}` by filtered exhaustive search.
//!
//! Candidates are the `|H|`-subsets of `([n] choose k)`. Before shifting, a
//! candidate must pass two invariants of `Δ(G) = H`:
//! - for every size `j < k`, the `j`-shadow of `G` is at least as large as
//!   that of `H`, because `Δ(K(G))` is a complex with `f`-vector `f(K(G))`
//!   whose size-`k` layer is `H`;
//! - the top reduced Betti number `β_{k-1}(K(G))` equals the number of edges
//!   of `H` avoiding vertex 1, which is its value on the shifted complex
//!   `Δ(K(G))`.

use rayon::prelude::*;

use super::edges::{EdgeBits, EdgeUniverse, MAX_EDGES};
use crate::combinatorics::{binomial, enumerate_k_subsets, top_betti, UniformHypergraph};
use crate::error::{Error, Result};
use crate::linalg::{Field, PrimeField};
use crate::shift::{ShiftEngine, ShiftMode};

/// Default cap on the number of candidate hypergraphs examined.
pub const DEFAULT_BUDGET: u128 = 2_000_000;

/// Number of candidates the search for `h` would examine.
pub fn candidate_count(h: &UniformHypergraph) -> u128 {
    let universe = h.universe_size();
    if universe > usize::MAX as u128 {
        return u128::MAX;
    }
    binomial(universe as usize, h.len())
}

struct ShadowLevel {
    /// `shadows[r]`: the `j`-subsets of the edge of rank `r`.
    shadows: Vec<EdgeBits>,
    required: usize,
}

struct Search<'a, F: Field> {
    engine: &'a ShiftEngine<F>,
    mode: ShiftMode,
    target: &'a UniformHypergraph,
    universe: EdgeUniverse,
    levels: Vec<ShadowLevel>,
    betti: usize,
    prime: PrimeField,
}

impl<F: Field> Search<'_, F> {
    fn walk(
        &self,
        next: usize,
        chosen: &mut Vec<usize>,
        frames: &mut Vec<Vec<EdgeBits>>,
        out: &mut Vec<UniformHypergraph>,
    ) -> Result<()> {
        let m = self.target.len();
        let depth = chosen.len();
        if depth == m {
            return self.leaf(chosen, &frames[depth], out);
        }
        for r in next..=self.universe.len() - (m - depth) {
            let grown: Vec<EdgeBits> = self
                .levels
                .iter()
                .zip(&frames[depth])
                .map(|(level, acc)| *acc | level.shadows[r])
                .collect();
            frames.truncate(depth + 1);
            frames.push(grown);
            chosen.push(r);
            self.walk(r + 1, chosen, frames, out)?;
            chosen.pop();
        }
        Ok(())
    }

    fn leaf(&self, chosen: &[usize], shadows: &[EdgeBits], out: &mut Vec<UniformHypergraph>) -> Result<()> {
        if self
            .levels
            .iter()
            .zip(shadows)
            .any(|(level, acc)| acc.count() < level.required)
        {
            return Ok(());
        }
        let edges = chosen.iter().map(|&r| self.universe.subset(r)).collect();
        let g = UniformHypergraph::new(self.universe.n(), self.universe.k(), edges)?;
        if top_betti(&self.prime, &g) != self.betti {
            return Ok(());
        }
        if self.engine.shifts_to(&g, self.target, self.mode)? {
            out.push(g);
        }
        Ok(())
    }
}

/// Every `G` with `Δ(G) = h` under `mode`, in increasing order.
///
/// Fails with `BudgetExceeded` when `C(C(n,k), |h|)` exceeds `budget`, and
/// with `Unsupported` when `C(n,k)` is above the bitset limit. The search is
/// split over the first edge of the candidate and runs on the rayon pool; the
/// result does not depend on the number of threads.
pub fn enumerate_preimage<F: Field>(
    engine: &ShiftEngine<F>,
    h: &UniformHypergraph,
    mode: ShiftMode,
    budget: u128,
) -> Result<Vec<UniformHypergraph>> {
    if !h.is_shifted() {
        return Err(Error::NotShifted);
    }
    let needed = candidate_count(h);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    if h.is_empty() {
        return Ok(vec![h.clone()]);
    }
    let (n, k) = (h.n(), h.k());
    let universe = EdgeUniverse::new(n, k)?;
    let mut levels = Vec::new();
    for j in 1..k {
        let Ok(lower) = EdgeUniverse::new(n, j) else {
            continue;
        };
        debug_assert!(lower.len() <= MAX_EDGES);
        let patterns: Vec<Vec<usize>> = enumerate_k_subsets(k, j)
            .map(|p| p.iter().map(|i| i - 1).collect())
            .collect();
        let shadows: Vec<EdgeBits> = universe
            .subsets()
            .iter()
            .map(|e| {
                let elems = e.elements();
                patterns.iter().fold(EdgeBits::EMPTY, |acc, p| {
                    let face = p.iter().fold(crate::KSubset::EMPTY, |f, &i| f.with(elems[i]));
                    acc.with(lower.rank(face))
                })
            })
            .collect();
        let required = universe
            .bits(h)
            .iter()
            .fold(EdgeBits::EMPTY, |acc, r| acc | shadows[r])
            .count();
        levels.push(ShadowLevel { shadows, required });
    }
    let search = Search {
        engine,
        mode,
        target: h,
        universe,
        levels,
        betti: h.iter().filter(|e| !e.contains(1)).count(),
        prime: PrimeField::mersenne61(),
    };
    let m = h.len();
    let firsts = search.universe.len() + 1 - m;
    let parts: Vec<Result<Vec<UniformHypergraph>>> = (0..firsts)
        .into_par_iter()
        .map(|r| {
            let mut out = Vec::new();
            let start: Vec<EdgeBits> = search.levels.iter().map(|l| l.shadows[r]).collect();
            let mut frames = vec![Vec::new(), start];
            let mut chosen = vec![r];
            search.walk(r + 1, &mut chosen, &mut frames, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for part in parts {
        all.extend(part?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldConfig;

    fn h(n: usize, k: usize, s: &str) -> UniformHypergraph {
        UniformHypergraph::from_digits(n, k, s).unwrap()
    }

    /// Shifts every candidate without filters.
    fn unfiltered(engine: &ShiftEngine, target: &UniformHypergraph) -> Vec<UniformHypergraph> {
        let universe: Vec<_> = enumerate_k_subsets(target.n(), target.k()).collect();
        enumerate_k_subsets(universe.len(), target.len())
            .map(|pick| {
                UniformHypergraph::new(target.n(), target.k(), pick.iter().map(|i| universe[i - 1]).collect())
                    .unwrap()
            })
            .filter(|g| engine.shift_uniform(g, ShiftMode::Exterior).unwrap() == *target)
            .collect()
    }

    #[test]
    fn filters_lose_nothing() {
        let engine = ShiftEngine::new(5, &FieldConfig::default(), 3).unwrap();
        for target in [
            h(5, 2, "12 13 23"),
            h(5, 2, "12 13 14 23"),
            h(5, 2, "12 13 14 15 23"),
            h(5, 3, "123 124 134 234"),
            h(5, 3, "123 124 125 134"),
        ] {
            let got = enumerate_preimage(&engine, &target, ShiftMode::Exterior, DEFAULT_BUDGET).unwrap();
            assert_eq!(got, unfiltered(&engine, &target), "{target}");
        }
    }

    #[test]
    fn triangles_and_trees() {
        let engine = ShiftEngine::new(5, &FieldConfig::default(), 3).unwrap();
        let tri = enumerate_preimage(&engine, &h(5, 2, "12 13 23"), ShiftMode::Exterior, DEFAULT_BUDGET).unwrap();
        assert_eq!(tri.len(), 10);
        let trees = enumerate_preimage(&engine, &UniformHypergraph::star(5, 2), ShiftMode::Symmetric, DEFAULT_BUDGET).unwrap();
        assert_eq!(trees.len(), 125);
    }

    #[test]
    fn errors() {
        let engine = ShiftEngine::new(5, &FieldConfig::default(), 1).unwrap();
        assert!(matches!(
            enumerate_preimage(&engine, &h(5, 2, "12 13 23"), ShiftMode::Exterior, 100),
            Err(Error::BudgetExceeded { needed: 120, budget: 100 })
        ));
        assert!(matches!(
            enumerate_preimage(&engine, &h(5, 2, "13"), ShiftMode::Exterior, DEFAULT_BUDGET),
            Err(Error::NotShifted)
        ));
        let full = UniformHypergraph::complete(5, 2);
        assert_eq!(
            enumerate_preimage(&engine, &full, ShiftMode::Exterior, DEFAULT_BUDGET).unwrap(),
            vec![full]
        );
    }
}
