//! Matroids from shifting.
//!
//! A shifted `H` is *matroidal* when `M(H) = {G : |G| = |H|, Δ(G) = H}` is
//! the basis set of a matroid. [`Lab`] bundles a [`Shifter`] with a search
//! budget and answers the matroidality questions; the submodules hold the
//! pieces: preimage search, the exchange check, explicit violations, the
//! lemma checks and the represented matroids `M'(H)` and `N'(H)`.

pub mod construction;
pub mod edges;
pub mod exchange;
pub mod lemmas;
pub mod preimage;
pub mod symmetric;

use std::fmt;

pub use construction::{
    build_violation_permutation, check_skip_claims, classify_m_and_s, verify_violation, Branch, CaseSplit,
    Reduction, SkipClaims, SMatrixSpec, ViolationCheck, ViolationConstruction,
};
pub use exchange::{check_exchange, E2Evidence, ExchangeVerdict, ExchangeViolation};
pub use lemmas::{lemma_checks, predicting_lemmas, LemmaCheck, LemmaOutcome, LemmaTag};
pub use preimage::{candidate_count, enumerate_preimage, DEFAULT_BUDGET};
pub use symmetric::{nprime_is_basis, y_matrix};

use crate::combinatorics::{enumerate_k_subsets, KSubset, UniformHypergraph};
use crate::error::{Error, Result};
use crate::exterior::GenericMatrix;
use crate::linalg::{Field, FieldMatrix, PrimeField};
use crate::shift::{ShiftMode, Shifter};

/// Whether the rows of `X(B, H)`, the `|B| x |H|` block of the compound
/// matrix, are linearly independent: `B` is independent in `M'(H)`.
pub fn mprime_is_independent<F: Field>(b: &UniformHypergraph, h: &UniformHypergraph, x: &GenericMatrix<F>) -> bool {
    if b.len() > h.len() {
        return false;
    }
    let rows = b
        .iter()
        .map(|&s| h.iter().map(|&t| x.minor(s, t)).collect())
        .collect();
    FieldMatrix::from_rows(x.field().clone(), rows).rank() == b.len()
}

/// All `|H|`-subsets of `([n] choose k)` that are bases of `M'(H)`.
pub fn mprime_bases<F: Field>(h: &UniformHypergraph, x: &GenericMatrix<F>) -> Result<Vec<UniformHypergraph>> {
    let universe: Vec<KSubset> = enumerate_k_subsets(h.n(), h.k()).collect();
    let mut out = Vec::new();
    for pick in enumerate_k_subsets(universe.len(), h.len()) {
        let b = UniformHypergraph::new(h.n(), h.k(), pick.iter().map(|i| universe[i - 1]).collect())?;
        if mprime_is_independent(&b, h, x) {
            out.push(b);
        }
    }
    Ok(out)
}

/// Non-segment shifted hypergraphs of the form `L ∪ {e}` with `L` a nonempty
/// initial lex-segment and `e` a single extra edge.
pub fn segment_plus_one_edge(n: usize, k: usize) -> Vec<UniformHypergraph> {
    let all: Vec<KSubset> = enumerate_k_subsets(n, k).collect();
    let mut out = Vec::new();
    for cut in 1..all.len() {
        for &e in &all[cut + 1..] {
            let mut edges = all[..cut].to_vec();
            edges.push(e);
            let h = UniformHypergraph::new(n, k, edges).expect("k-subsets of [n]");
            if h.is_shifted() {
                out.push(h);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidalReport {
    pub h: UniformHypergraph,
    pub mode: ShiftMode,
    pub preimage: Vec<UniformHypergraph>,
    /// On a violation, every `e₂` carries its recomputed shift and, when
    /// `B₁ = H`, the lemmas predicting the failure.
    pub verdict: ExchangeVerdict,
}

impl MatroidalReport {
    pub fn is_matroidal(&self) -> bool {
        self.verdict.is_matroid()
    }
}

impl fmt::Display for MatroidalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.is_matroidal() { "matroidal" } else { "NOT matroidal" };
        write!(f, "{} {word} ({}, |M(H)| = {})", self.h.compact(), self.mode, self.preimage.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMatroidalReport {
    pub report: MatroidalReport,
    /// For initial lex-segments: whether `M^s(H)` equals the bases of
    /// `N'(H)`. `None` otherwise.
    pub nprime_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexMatroidalReport {
    pub h: UniformHypergraph,
    pub prefixes_checked: usize,
    /// The first `S ∈ H` whose prefix `H(S)` is not matroidal.
    pub failure: Option<(KSubset, MatroidalReport)>,
}

impl LexMatroidalReport {
    pub fn is_lex_matroidal(&self) -> bool {
        self.failure.is_none()
    }
}

/// Matroidality questions under a fixed shifter and preimage budget.
#[derive(Debug)]
pub struct Lab<F: Field = PrimeField> {
    shifter: Shifter<F>,
    budget: u128,
}

impl Default for Lab<PrimeField> {
    fn default() -> Self {
        Lab::new(Shifter::default(), DEFAULT_BUDGET)
    }
}

impl<F: Field> Lab<F> {
    pub fn new(shifter: Shifter<F>, budget: u128) -> Self {
        Lab { shifter, budget }
    }

    pub fn shifter(&self) -> &Shifter<F> {
        &self.shifter
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    pub fn preimage(&self, h: &UniformHypergraph, mode: ShiftMode) -> Result<Vec<UniformHypergraph>> {
        enumerate_preimage(&self.shifter.engine(h.n()), h, mode, self.budget)
    }

    pub fn is_matroidal(&self, h: &UniformHypergraph, mode: ShiftMode) -> Result<MatroidalReport> {
        let preimage = self.preimage(h, mode)?;
        let mut verdict = check_exchange(&preimage)?;
        if let ExchangeVerdict::Violation(v) = &mut verdict {
            let engine = self.shifter.engine(h.n());
            for ev in &mut v.evidence {
                ev.shifted = Some(engine.shift_uniform(&v.b1.exchange(v.e1, ev.e2)?, mode)?);
                if v.b1 == *h {
                    ev.lemmas = predicting_lemmas(h, v.e1, ev.e2, None, mode);
                }
            }
        }
        Ok(MatroidalReport {
            h: h.clone(),
            mode,
            preimage,
            verdict,
        })
    }

    /// Symmetric matroidality of a shifted graph, cross-checked against
    /// `N'(H)` when `H` is an initial lex-segment.
    pub fn is_s_matroidal_graph(&self, h: &UniformHypergraph) -> Result<SMatroidalReport> {
        if h.k() != 2 {
            return Err(Error::NotApplicable(format!("uniformity {} is not a graph", h.k())));
        }
        let report = self.is_matroidal(h, ShiftMode::Symmetric)?;
        let nprime_agrees = if h.is_initial_lex_segment() {
            let engine = self.shifter.engine(h.n());
            let y = &engine.linear_forms()[0];
            let universe: Vec<KSubset> = enumerate_k_subsets(h.n(), 2).collect();
            let mut bases = Vec::new();
            for pick in enumerate_k_subsets(universe.len(), h.len()) {
                let b = UniformHypergraph::new(h.n(), 2, pick.iter().map(|i| universe[i - 1]).collect())?;
                if nprime_is_basis(&b, h, y)? {
                    bases.push(b);
                }
            }
            Some(bases == report.preimage)
        } else {
            None
        };
        Ok(SMatroidalReport { report, nprime_agrees })
    }

    /// Checks `H(S)` for `S ∈ H` in increasing order and stops at the first
    /// prefix that is not matroidal.
    pub fn is_lex_matroidal(&self, h: &UniformHypergraph, mode: ShiftMode) -> Result<LexMatroidalReport> {
        if !h.is_shifted() {
            return Err(Error::NotShifted);
        }
        let mut checked = 0;
        for &s in h.iter() {
            checked += 1;
            let report = self.is_matroidal(&h.lex_prefix(s), mode)?;
            if !report.is_matroidal() {
                return Ok(LexMatroidalReport {
                    h: h.clone(),
                    prefixes_checked: checked,
                    failure: Some((s, report)),
                });
            }
        }
        Ok(LexMatroidalReport {
            h: h.clone(),
            prefixes_checked: checked,
            failure: None,
        })
    }

    /// Builds `(π, e₁)` for `h` and checks it by recomputation.
    pub fn construct_violation(
        &self,
        h: &UniformHypergraph,
        mode: ShiftMode,
    ) -> Result<(ViolationConstruction, ViolationCheck)> {
        let c = build_violation_permutation(h)?;
        let check = verify_violation(&self.shifter.engine(h.n()), h, &c.pi, c.e1, c.s, mode)?;
        Ok((c, check))
    }
}
