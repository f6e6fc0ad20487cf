//! The basis exchange axiom on an explicit family of hypergraphs.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::edges::{EdgeBits, EdgeUniverse};
use super::lemmas::LemmaTag;
use crate::combinatorics::{KSubset, UniformHypergraph};
use crate::error::{Error, Result};

/// Why `(B₁ ∖ e₁) ∪ e₂` is not in the family, for one `e₂ ∈ B₂ ∖ B₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Evidence {
    pub e2: KSubset,
    /// The recomputed shift of `(B₁ ∖ e₁) ∪ e₂`, when a shift was run.
    pub shifted: Option<UniformHypergraph>,
    /// Lemmas whose hypotheses predict the failure.
    pub lemmas: Vec<LemmaTag>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeViolation {
    pub b1: UniformHypergraph,
    pub b2: UniformHypergraph,
    pub e1: KSubset,
    pub evidence: Vec<E2Evidence>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExchangeVerdict {
    Matroid,
    Violation(Box<ExchangeViolation>),
}

impl ExchangeVerdict {
    pub fn is_matroid(&self) -> bool {
        matches!(self, ExchangeVerdict::Matroid)
    }

    pub fn violation(&self) -> Option<&ExchangeViolation> {
        match self {
            ExchangeVerdict::Matroid => None,
            ExchangeVerdict::Violation(v) => Some(v),
        }
    }
}

impl fmt::Display for ExchangeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExchangeVerdict::Matroid => f.write_str("matroid"),
            ExchangeVerdict::Violation(v) => {
                write!(f, "violation: B1={} B2={} e1={}", v.b1.compact(), v.b2.compact(), v.e1)
            }
        }
    }
}

fn validate(bases: &[UniformHypergraph]) -> Result<()> {
    let first = bases.first().ok_or(Error::EmptyFamily)?;
    for b in bases {
        if (b.n(), b.k()) != (first.n(), first.k()) {
            return Err(Error::InvalidHypergraph(format!(
                "family mixes (n,k) = ({},{}) and ({},{})",
                first.n(),
                first.k(),
                b.n(),
                b.k()
            )));
        }
        if b.len() != first.len() {
            return Err(Error::CardinalityMismatch {
                left: first.len(),
                right: b.len(),
            });
        }
    }
    Ok(())
}

/// Checks that for all `B₁, B₂` in the family and every `e₁ ∈ B₁ ∖ B₂` some
/// `e₂ ∈ B₂ ∖ B₁` makes `(B₁ ∖ e₁) ∪ e₂` a member.
///
/// Members are visited in increasing order and so are the `e₁` of each
/// `B₁`. For the first `(B₁, e₁)` that admits a counterexample, the reported
/// `B₂` is the one farthest from `B₁` (most edges outside `B₁`), ties broken
/// by the smaller hypergraph.
pub fn check_exchange(bases: &[UniformHypergraph]) -> Result<ExchangeVerdict> {
    validate(bases)?;
    let mut sorted = bases.to_vec();
    sorted.sort();
    sorted.dedup();
    let first = &sorted[0];
    let found = match EdgeUniverse::new(first.n(), first.k()) {
        Ok(universe) => search_bits(&universe, &sorted),
        Err(_) => search_sets(&sorted),
    };
    Ok(match found {
        None => ExchangeVerdict::Matroid,
        Some((i1, e1, i2)) => {
            let (b1, b2) = (&sorted[i1], &sorted[i2]);
            let evidence = b2
                .difference(b1)
                .into_iter()
                .map(|e2| E2Evidence {
                    e2,
                    shifted: None,
                    lemmas: Vec::new(),
                })
                .collect();
            ExchangeVerdict::Violation(Box::new(ExchangeViolation {
                b1: b1.clone(),
                b2: b2.clone(),
                e1,
                evidence,
            }))
        }
    })
}

fn search_bits(universe: &EdgeUniverse, sorted: &[UniformHypergraph]) -> Option<(usize, KSubset, usize)> {
    let bits: Vec<EdgeBits> = sorted.iter().map(|b| universe.bits(b)).collect();
    let members: HashSet<EdgeBits> = bits.iter().copied().collect();
    for (i1, b1) in bits.iter().enumerate() {
        for e1 in b1.iter() {
            let rest = b1.without(e1);
            let mut forbidden = EdgeBits::singleton(e1);
            for x in 0..universe.len() {
                if !b1.contains(x) && members.contains(&rest.with(x)) {
                    forbidden = forbidden.with(x);
                }
            }
            let best = bits
                .iter()
                .enumerate()
                .filter(|(_, b2)| (**b2 & forbidden).is_empty())
                .min_by_key(|(i2, b2)| ((**b2 & *b1).count(), *i2));
            if let Some((i2, _)) = best {
                return Some((i1, universe.subset(e1), i2));
            }
        }
    }
    None
}

fn search_sets(sorted: &[UniformHypergraph]) -> Option<(usize, KSubset, usize)> {
    let members: BTreeSet<&UniformHypergraph> = sorted.iter().collect();
    for (i1, b1) in sorted.iter().enumerate() {
        for &e1 in b1.iter() {
            let mut best: Option<(usize, usize)> = None;
            for (i2, b2) in sorted.iter().enumerate() {
                if b2.contains(e1) {
                    continue;
                }
                let outside = b2.difference(b1);
                let ok = outside.iter().any(|&e2| {
                    b1.exchange(e1, e2)
                        .map(|g| members.contains(&g))
                        .unwrap_or(false)
                });
                if !ok && best.is_none_or(|(d, _)| outside.len() > d) {
                    best = Some((outside.len(), i2));
                }
            }
            if let Some((_, i2)) = best {
                return Some((i1, e1, i2));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_k_subsets;

    fn family(n: usize, k: usize, m: usize, keep: impl Fn(&UniformHypergraph) -> bool) -> Vec<UniformHypergraph> {
        let universe: Vec<KSubset> = enumerate_k_subsets(n, k).collect();
        enumerate_k_subsets(universe.len(), m)
            .map(|p| UniformHypergraph::new(n, k, p.iter().map(|i| universe[i - 1]).collect()).unwrap())
            .filter(keep)
            .collect()
    }

    fn is_forest(g: &UniformHypergraph) -> bool {
        let mut parent: Vec<usize> = (0..=g.n()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for e in g.iter() {
            let v = e.elements();
            let (a, b) = (find(&mut parent, v[0]), find(&mut parent, v[1]));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    fn is_triangle(g: &UniformHypergraph) -> bool {
        let support = g.iter().fold(KSubset::EMPTY, |a, &e| a.union(e));
        support.len() == 3
    }

    #[test]
    fn graphic_matroid() {
        let trees = family(4, 2, 3, is_forest);
        assert_eq!(trees.len(), 16);
        assert_eq!(check_exchange(&trees).unwrap(), ExchangeVerdict::Matroid);
        let forests = family(5, 2, 3, is_forest);
        assert!(check_exchange(&forests).unwrap().is_matroid());
    }

    #[test]
    fn triangles_violate() {
        let triangles = family(5, 2, 3, is_triangle);
        assert_eq!(triangles.len(), 10);
        let verdict = check_exchange(&triangles).unwrap();
        let v = verdict.violation().unwrap();
        assert_eq!(v.b1, UniformHypergraph::from_digits(5, 2, "12 13 23").unwrap());
        assert_eq!(v.b2, UniformHypergraph::from_digits(5, 2, "14 15 45").unwrap());
        assert!(v.b1.contains(v.e1) && !v.b2.contains(v.e1));
        assert_eq!(v.evidence.len(), 3);
        assert_eq!(search_sets(&triangles), {
            let u = EdgeUniverse::new(5, 2).unwrap();
            search_bits(&u, &triangles)
        });
    }

    #[test]
    fn edge_cases() {
        let single = vec![UniformHypergraph::from_digits(4, 2, "12").unwrap()];
        assert!(check_exchange(&single).unwrap().is_matroid());
        assert_eq!(check_exchange(&[]), Err(Error::EmptyFamily));
        let mixed = vec![
            UniformHypergraph::from_digits(4, 2, "12").unwrap(),
            UniformHypergraph::from_digits(4, 2, "12 13").unwrap(),
        ];
        assert!(check_exchange(&mixed).is_err());
    }

    #[test]
    fn set_search_matches_bit_search() {
        let u = EdgeUniverse::new(5, 2).unwrap();
        for m in 2..=4 {
            let forests = family(5, 2, m, is_forest);
            assert_eq!(search_bits(&u, &forests), search_sets(&forests));
            let paths: Vec<_> = family(5, 2, m, |g| g.iter().all(|e| !e.contains(5)) || is_triangle(g));
            assert_eq!(search_bits(&u, &paths), search_sets(&paths));
        }
    }
}
