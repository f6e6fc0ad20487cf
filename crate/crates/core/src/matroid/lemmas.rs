//! Sufficient conditions for `Δ((H ∖ e₁) ∪ e₂) ≠ H`, with checks by
//! recomputation and random instance generators.
//!
//! Every condition assumes `H` shifted, `e₁ ∈ H` and `e₂ ∉ H`.

use std::fmt;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::combinatorics::{enumerate_k_subsets, KSubset, UniformHypergraph};
use crate::error::Result;
use crate::linalg::Field;
use crate::shift::{ShiftEngine, ShiftMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaTag {
    /// All facets of some `∂T` are edges with `e₁` among them, and `e₂`
    /// contains an `R` with `{1} ∪ R ∉ H`: removing `e₁` kills a top cycle
    /// that `e₂` cannot restore.
    Homology,
    /// `e₂ <_lex e₁` (exterior shifting only).
    SmallE2,
    /// `e₁ = m_H` and `e₂ <_lex m_H`.
    BelowMax,
    /// `max e₂ < max e₁`.
    InducedSubgraph,
    /// Some `S ∉ H` with `S <_lex e₁` differs from `e₂` in one element
    /// (exterior shifting only).
    AlmostSmall,
}

impl LemmaTag {
    pub const ALL: [LemmaTag; 5] = [
        LemmaTag::Homology,
        LemmaTag::SmallE2,
        LemmaTag::BelowMax,
        LemmaTag::InducedSubgraph,
        LemmaTag::AlmostSmall,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaTag::Homology => "homology",
            LemmaTag::SmallE2 => "small-e2",
            LemmaTag::BelowMax => "below-max",
            LemmaTag::InducedSubgraph => "induced-subgraph",
            LemmaTag::AlmostSmall => "almost-small",
        }
    }

    pub fn holds_for(self, mode: ShiftMode) -> bool {
        match self {
            LemmaTag::SmallE2 | LemmaTag::AlmostSmall => mode == ShiftMode::Exterior,
            _ => true,
        }
    }
}

impl fmt::Display for LemmaTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn base_ok(h: &UniformHypergraph, e1: KSubset, e2: KSubset) -> bool {
    h.contains(e1) && !h.contains(e2) && e2.len() == h.k() && e2.last().is_some_and(|v| v <= h.n())
}

/// A vertex `v` such that every facet of `e₁ ∪ {v}` is an edge.
pub fn boundary_apex(h: &UniformHypergraph, e1: KSubset) -> Option<usize> {
    (1..=h.n())
        .filter(|&v| !e1.contains(v))
        .find(|&v| e1.with(v).facets().all(|f| h.contains(f)))
}

/// A `(k-1)`-subset `R ⊆ e₂` avoiding 1 with `{1} ∪ R ∉ H`.
pub fn missing_link(h: &UniformHypergraph, e2: KSubset) -> Option<KSubset> {
    let candidates: Vec<KSubset> = if e2.contains(1) {
        vec![e2.without(1)]
    } else {
        e2.facets().collect()
    };
    candidates.into_iter().find(|r| !h.contains(r.with(1)))
}

/// An `S ∉ H` with `S <_lex e₁`, `|e₂ ∖ S| = |S ∖ e₂| = 1`.
pub fn almost_small_witness(h: &UniformHypergraph, e1: KSubset, e2: KSubset) -> Option<KSubset> {
    for out in e2.iter() {
        for inn in (1..=h.n()).filter(|&v| !e2.contains(v)) {
            let s = e2.without(out).with(inn);
            if s < e1 && !h.contains(s) {
                return Some(s);
            }
        }
    }
    None
}

fn almost_small_with(h: &UniformHypergraph, e1: KSubset, e2: KSubset, s: KSubset) -> bool {
    s.len() == h.k() && s < e1 && !h.contains(s) && e2.difference(s).len() == 1 && s.difference(e2).len() == 1
}

/// Whether the hypotheses of `tag` hold. For [`LemmaTag::AlmostSmall`] an
/// explicit `s` is tested if given, otherwise a witness is searched for.
pub fn lemma_applies(
    tag: LemmaTag,
    h: &UniformHypergraph,
    e1: KSubset,
    e2: KSubset,
    s: Option<KSubset>,
) -> bool {
    if !h.is_shifted() || !base_ok(h, e1, e2) {
        return false;
    }
    match tag {
        LemmaTag::Homology => boundary_apex(h, e1).is_some() && missing_link(h, e2).is_some(),
        LemmaTag::SmallE2 => e2 < e1,
        LemmaTag::BelowMax => h.edges().last() == Some(&e1) && e2 < e1,
        LemmaTag::InducedSubgraph => e2.last() < e1.last(),
        LemmaTag::AlmostSmall => match s {
            Some(s) => almost_small_with(h, e1, e2, s),
            None => almost_small_witness(h, e1, e2).is_some(),
        },
    }
}

/// The lemmas valid for `mode` whose hypotheses hold.
pub fn predicting_lemmas(
    h: &UniformHypergraph,
    e1: KSubset,
    e2: KSubset,
    s: Option<KSubset>,
    mode: ShiftMode,
) -> Vec<LemmaTag> {
    LemmaTag::ALL
        .into_iter()
        .filter(|t| t.holds_for(mode) && lemma_applies(*t, h, e1, e2, s))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaOutcome {
    Inapplicable,
    Confirmed,
    Refuted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub tag: LemmaTag,
    pub outcome: LemmaOutcome,
}

/// For each lemma valid under `mode`: `Inapplicable` when its hypotheses
/// fail, otherwise `Confirmed` or `Refuted` by recomputing the shift.
pub fn lemma_checks<F: Field>(
    engine: &ShiftEngine<F>,
    mode: ShiftMode,
    h: &UniformHypergraph,
    e1: KSubset,
    e2: KSubset,
    s: Option<KSubset>,
) -> Result<Vec<LemmaCheck>> {
    let applicable = predicting_lemmas(h, e1, e2, s, mode);
    let differs = if applicable.is_empty() {
        false
    } else {
        !engine.shifts_to(&h.exchange(e1, e2)?, h, mode)?
    };
    Ok(LemmaTag::ALL
        .into_iter()
        .filter(|t| t.holds_for(mode))
        .map(|tag| LemmaCheck {
            tag,
            outcome: if !applicable.contains(&tag) {
                LemmaOutcome::Inapplicable
            } else if differs {
                LemmaOutcome::Confirmed
            } else {
                LemmaOutcome::Refuted
            },
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaInstance {
    pub h: UniformHypergraph,
    pub e1: KSubset,
    pub e2: KSubset,
    pub s: Option<KSubset>,
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, k: usize) -> KSubset {
    let all: Vec<usize> = (1..=n).collect();
    let picked: Vec<usize> = all.choose_multiple(rng, k).copied().collect();
    KSubset::from_unsorted(&picked).expect("distinct picks")
}

/// Shifted closure of one to three random generators, plus the given sets.
pub fn random_shifted<R: Rng>(rng: &mut R, n: usize, k: usize, extra: &[KSubset]) -> UniformHypergraph {
    let count = rng.random_range(1..=3);
    let mut gens: Vec<KSubset> = (0..count).map(|_| random_subset(rng, n, k)).collect();
    gens.extend_from_slice(extra);
    UniformHypergraph::shifted_closure(n, k, &gens).expect("generators are k-subsets of [n]")
}

/// One random instance satisfying the hypotheses of `tag` on `[n]`, or
/// `None` if the draw was rejected.
pub fn random_instance<R: Rng>(tag: LemmaTag, n: usize, k: usize, rng: &mut R) -> Option<LemmaInstance> {
    let outside = |h: &UniformHypergraph| -> Vec<KSubset> {
        enumerate_k_subsets(n, k).filter(|s| !h.contains(*s)).collect()
    };
    let inst = match tag {
        LemmaTag::Homology => {
            let t = random_subset(rng, n, k + 1);
            let facets: Vec<KSubset> = t.facets().collect();
            let h = random_shifted(rng, n, k, &facets);
            let e1 = *facets.choose(rng)?;
            let links: Vec<KSubset> = enumerate_k_subsets(n, k - 1)
                .filter(|r| !r.contains(1) && !h.contains(r.with(1)))
                .collect();
            let r = *links.choose(rng)?;
            let v = *(1..=n).filter(|&v| !r.contains(v)).collect::<Vec<_>>().choose(rng)?;
            LemmaInstance { e2: r.with(v), h, e1, s: None }
        }
        LemmaTag::SmallE2 | LemmaTag::InducedSubgraph | LemmaTag::BelowMax => {
            let h = random_shifted(rng, n, k, &[]);
            let e1 = if tag == LemmaTag::BelowMax {
                *h.edges().last()?
            } else {
                *h.edges().choose(rng)?
            };
            let candidates: Vec<KSubset> = outside(&h)
                .into_iter()
                .filter(|&e2| match tag {
                    LemmaTag::InducedSubgraph => e2.last() < e1.last(),
                    _ => e2 < e1,
                })
                .collect();
            LemmaInstance { e2: *candidates.choose(rng)?, h, e1, s: None }
        }
        LemmaTag::AlmostSmall => {
            let h = random_shifted(rng, n, k, &[]);
            let e1 = *h.edges().choose(rng)?;
            let below: Vec<KSubset> = outside(&h).into_iter().filter(|&s| s < e1).collect();
            let s = *below.choose(rng)?;
            let swaps: Vec<KSubset> = s
                .iter()
                .flat_map(|o| {
                    (1..=n)
                        .filter(move |&v| !s.contains(v))
                        .map(move |i| s.without(o).with(i))
                })
                .filter(|e2| !h.contains(*e2))
                .collect();
            LemmaInstance { e2: *swaps.choose(rng)?, h, e1, s: Some(s) }
        }
    };
    lemma_applies(tag, &inst.h, inst.e1, inst.e2, inst.s).then_some(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldConfig;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn h(n: usize, k: usize, s: &str) -> UniformHypergraph {
        UniformHypergraph::from_digits(n, k, s).unwrap()
    }

    #[test]
    fn hypotheses_on_examples() {
        let tri = h(5, 2, "12 13 23");
        let d = KSubset::digits;
        assert!(lemma_applies(LemmaTag::Homology, &tri, d("12"), d("45"), None));
        assert!(lemma_applies(LemmaTag::Homology, &tri, d("12"), d("14"), None));
        assert!(!lemma_applies(LemmaTag::SmallE2, &tri, d("12"), d("45"), None));
        assert!(lemma_applies(LemmaTag::SmallE2, &tri, d("23"), d("14"), None));
        assert!(lemma_applies(LemmaTag::BelowMax, &tri, d("23"), d("15"), None));
        assert!(!lemma_applies(LemmaTag::BelowMax, &tri, d("13"), d("12"), None));
        assert!(lemma_applies(LemmaTag::InducedSubgraph, &h(5, 2, "12 13 14"), d("14"), d("23"), None));
        assert!(!lemma_applies(LemmaTag::InducedSubgraph, &tri, d("12"), d("13"), None));
        let star = h(5, 2, "12 13 14");
        assert!(!lemma_applies(LemmaTag::AlmostSmall, &star, d("14"), d("25"), Some(d("15"))));
        assert!(lemma_applies(LemmaTag::AlmostSmall, &h(5, 2, "12 13 14 23"), d("23"), d("25"), Some(d("15"))));
    }

    #[test]
    fn random_instances_confirm() {
        let engine = ShiftEngine::new(6, &FieldConfig::default(), 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for tag in LemmaTag::ALL {
            let mut seen = 0;
            while seen < 40 {
                let k = if seen % 2 == 0 { 2 } else { 3 };
                let Some(inst) = random_instance(tag, 6, k, &mut rng) else {
                    continue;
                };
                seen += 1;
                for mode in ShiftMode::ALL.into_iter().filter(|m| tag.holds_for(*m)) {
                    let checks = lemma_checks(&engine, mode, &inst.h, inst.e1, inst.e2, inst.s).unwrap();
                    let mine = checks.iter().find(|c| c.tag == tag).unwrap();
                    assert_eq!(mine.outcome, LemmaOutcome::Confirmed, "{tag} {inst:?} {mode}");
                }
            }
        }
    }
}
