//! Explicit exchange-axiom violations for shifted hypergraphs that are not
//! initial lex-segments.
//!
//! For such `H` a permutation `π` and an edge `e₁ ∈ H ∖ π(H)` are built so
//! that `(H, π(H))` is a violating pair inside `M(H)`: `Δ(π(H)) = H`, yet
//! `Δ((H ∖ e₁) ∪ e₂) ≠ H` for every `e₂ ∈ π(H) ∖ H`.
//!
//! Graphs and 3-uniform hypergraphs go through two reductions first: if
//! `{2,..,k+1} ∉ H` then `H` is a cone with apex 1, and if every `k`-set
//! through 1 is an edge then the edges avoiding 1 are handled on
//! `{2,..,n}`. In both cases the construction for the smaller instance lifts
//! by fixing vertex 1. Uniformity 4 and above uses the `s_H` construction,
//! which needs `s_H ∉ H`.

use std::fmt;

use super::exchange::E2Evidence;
use super::lemmas::predicting_lemmas;
use crate::combinatorics::{binomial, KSubset, UniformHypergraph, VertexPermutation};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::shift::{ShiftEngine, ShiftMode};

/// Decomposition of `m_H`, the lex-largest edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseSplit {
    /// `m_H = P ∪ {c,..,c+l} ∪ {d}` with `d < n`, where `{c,..,c+l}` is the
    /// maximal run of consecutive labels ending just before `d`.
    Case1 { prefix: KSubset, c: usize, l: usize, d: usize },
    /// `m_H = P ∪ {c,..,c+l} ∪ {n-m,..,n}` with the last run maximal.
    Case2 { prefix: KSubset, c: usize, l: usize, m: usize },
    /// `c = 1`, which only happens for initial lex-segments.
    LexSegmentForced,
    /// `m_H = {n-k+1,..,n}`: `H` is complete.
    Complete,
}

impl fmt::Display for CaseSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseSplit::Case1 { prefix, c, l, d } => write!(f, "case1 prefix={prefix} c={c} l={l} d={d}"),
            CaseSplit::Case2 { prefix, c, l, m } => write!(f, "case2 prefix={prefix} c={c} l={l} m={m}"),
            CaseSplit::LexSegmentForced => f.write_str("lex-segment-forced"),
            CaseSplit::Complete => f.write_str("complete"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SMatrixSpec {
    pub m_h: KSubset,
    pub case: CaseSplit,
    /// Present for `Case1` and `Case2`.
    pub s_h: Option<KSubset>,
    pub s_in_h: bool,
}

fn range(lo: usize, hi: usize) -> KSubset {
    (lo..=hi).fold(KSubset::EMPTY, |acc, v| acc.with(v))
}

/// Splits `elems` (increasing) into the part before the maximal run of
/// consecutive labels that ends at its last element, and that run `(c, l)`.
fn trailing_run(elems: &[usize]) -> (KSubset, usize, usize) {
    let last = *elems.last().expect("nonempty");
    let mut c = last;
    let mut i = elems.len() - 1;
    while i > 0 && elems[i - 1] + 1 == c {
        i -= 1;
        c -= 1;
    }
    let prefix = elems[..i].iter().fold(KSubset::EMPTY, |acc, &v| acc.with(v));
    (prefix, c, last - c)
}

pub fn classify_m_and_s(h: &UniformHypergraph) -> Result<SMatrixSpec> {
    if !h.is_shifted() {
        return Err(Error::NotShifted);
    }
    let m_h = h.max_lex()?;
    let (n, k) = (h.n(), h.k());
    let elems = m_h.elements();
    let plain = |case| {
        Ok(SMatrixSpec {
            m_h,
            case,
            s_h: None,
            s_in_h: false,
        })
    };
    let (case, s_h) = if elems[k - 1] == n {
        let (_, start, _) = trailing_run(&elems);
        let m = n - start;
        if m + 1 == k {
            return plain(CaseSplit::Complete);
        }
        let (prefix, c, l) = trailing_run(&elems[..k - m - 1]);
        if c == 1 {
            return plain(CaseSplit::LexSegmentForced);
        }
        let s = prefix.with(c - 1).union(range(n - m - l, n));
        (CaseSplit::Case2 { prefix, c, l, m }, s)
    } else {
        if k == 1 {
            return plain(CaseSplit::LexSegmentForced);
        }
        let d = elems[k - 1];
        let (prefix, c, l) = trailing_run(&elems[..k - 1]);
        if c == 1 {
            return plain(CaseSplit::LexSegmentForced);
        }
        let s = prefix.with(c - 1).union(range(n - l - 1, n - 1));
        (CaseSplit::Case1 { prefix, c, l, d }, s)
    };
    Ok(SMatrixSpec {
        m_h,
        case,
        s_h: Some(s_h),
        s_in_h: h.contains(s_h),
    })
}

/// The base construction that produced `π`, after any reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Graphs with `n` isolated and `{2,3}` an edge: swap 1 and `n`.
    IsolatedVertexFlip,
    /// 3-uniform with `{2,3,n} ∈ H`: the transposition `(1, i-1)`.
    TripleTransposition,
    /// 3-uniform, `m_H = {a,b,c}` with `{a,b} ≠ {2,3}`: `b -> n`.
    TripleSkip,
    /// 3-uniform, `m_H = {2,3,c}`: `2 -> n-1`, `3 -> n`.
    TripleTopPair,
    /// The `s_H` construction with `max m_H < n`.
    SkipCase1,
    /// The `s_H` construction with `max m_H = n`.
    SkipCase2,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::IsolatedVertexFlip => "isolated-vertex-flip",
            Branch::TripleTransposition => "triple-transposition",
            Branch::TripleSkip => "triple-skip",
            Branch::TripleTopPair => "triple-top-pair",
            Branch::SkipCase1 => "skip-case1",
            Branch::SkipCase2 => "skip-case2",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// `H = {1} * H'` on `{2,..,n}`, one uniformity lower.
    Cone,
    /// `H ⊇ st(1)`; continue with the edges avoiding 1.
    StarRemoval,
}

impl Reduction {
    pub fn name(self) -> &'static str {
        match self {
            Reduction::Cone => "cone",
            Reduction::StarRemoval => "star-removal",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationConstruction {
    pub pi: VertexPermutation,
    pub e1: KSubset,
    /// Reductions applied, outermost first.
    pub reductions: Vec<Reduction>,
    pub branch: Branch,
    /// The auxiliary set used by the almost-small argument, if any.
    pub s: Option<KSubset>,
}

impl ViolationConstruction {
    /// `reduction/…/branch`, e.g. `cone/isolated-vertex-flip`.
    pub fn path(&self) -> String {
        let mut parts: Vec<&str> = self.reductions.iter().map(|r| r.name()).collect();
        parts.push(self.branch.name());
        parts.join("/")
    }

    fn lift(mut self, reduction: Reduction) -> Self {
        self.pi = self.pi.lift_fixing_one();
        let up = match reduction {
            Reduction::Cone => |s: KSubset| s.shift_up().with(1),
            Reduction::StarRemoval => |s: KSubset| s.shift_up(),
        };
        self.e1 = up(self.e1);
        self.s = self.s.map(up);
        self.reductions.insert(0, reduction);
        self
    }
}

pub fn build_violation_permutation(h: &UniformHypergraph) -> Result<ViolationConstruction> {
    if !h.is_shifted() {
        return Err(Error::NotShifted);
    }
    if h.is_initial_lex_segment() {
        return Err(Error::NotApplicable(format!("{} is an initial lex-segment", h.compact())));
    }
    let (n, k) = (h.n(), h.k());
    if k >= 4 {
        return build_skip(h);
    }
    if !h.contains(range(2, k + 1)) {
        let inner = UniformHypergraph::new(
            n - 1,
            k - 1,
            h.iter().map(|e| e.without(1).shift_down()).collect(),
        )?;
        return Ok(build_violation_permutation(&inner)?.lift(Reduction::Cone));
    }
    let through_one = h.iter().filter(|e| e.contains(1)).count() as u128;
    if through_one == binomial(n - 1, k - 1) {
        let inner = h.link_free_part();
        return Ok(build_violation_permutation(&inner)?.lift(Reduction::StarRemoval));
    }
    match k {
        2 => Ok(ViolationConstruction {
            pi: VertexPermutation::transposition(n, 1, n)?,
            e1: KSubset::of(&[1, 2]),
            reductions: Vec::new(),
            branch: Branch::IsolatedVertexFlip,
            s: None,
        }),
        3 => build_triple(h),
        _ => Err(Error::NotApplicable(format!("uniformity {k}"))),
    }
}

fn build_triple(h: &UniformHypergraph) -> Result<ViolationConstruction> {
    let n = h.n();
    let (i, _j) = (3..=n)
        .flat_map(|i| (2..i).map(move |j| (i, j)))
        .find(|&(i, j)| !h.contains(KSubset::of(&[1, j, i])))
        .ok_or_else(|| Error::NotApplicable("every triple through 1 is an edge".into()))?;
    let done = |pi, e1, branch, s| {
        Ok(ViolationConstruction {
            pi,
            e1,
            reductions: Vec::new(),
            branch,
            s,
        })
    };
    if h.contains(KSubset::of(&[2, 3, n])) {
        let pi = VertexPermutation::transposition(n, 1, i - 1)?;
        return done(pi, KSubset::of(&[1, 2, n]), Branch::TripleTransposition, None);
    }
    let m_h = h.max_lex()?;
    let [a, b, _c] = m_h.elements()[..] else {
        unreachable!("3-uniform")
    };
    if (a, b) != (2, 3) {
        let mut assigned: Vec<(usize, usize)> = (1..b).map(|v| (v, v)).collect();
        assigned.push((b, n));
        let pi = VertexPermutation::with_order_preserving_rest(n, &assigned)?;
        let s = if a != 2 {
            KSubset::of(&[2, a, n])
        } else {
            KSubset::of(&[2, b - 1, n])
        };
        done(pi, m_h, Branch::TripleSkip, Some(s))
    } else {
        let pi = VertexPermutation::with_order_preserving_rest(n, &[(1, 1), (2, n - 1), (3, n)])?;
        done(pi, m_h, Branch::TripleTopPair, None)
    }
}

fn build_skip(h: &UniformHypergraph) -> Result<ViolationConstruction> {
    let n = h.n();
    let spec = classify_m_and_s(h)?;
    let Some(s_h) = spec.s_h else {
        return Err(Error::NotApplicable(format!("m_H splits as {}", spec.case)));
    };
    if spec.s_in_h {
        return Err(Error::NotApplicable(format!("s_H = {s_h} is an edge")));
    }
    let (assigned, branch): (Vec<(usize, usize)>, Branch) = match spec.case {
        CaseSplit::Case1 { prefix, c, l, d } => {
            let mut a: Vec<(usize, usize)> = prefix.iter().map(|v| (v, v)).collect();
            a.extend((0..=l).map(|t| (c + t, n - (l + 1) + t)));
            a.push((d, n));
            (a, Branch::SkipCase1)
        }
        CaseSplit::Case2 { prefix, c, l, m } => {
            let mut a: Vec<(usize, usize)> = prefix.iter().map(|v| (v, v)).collect();
            a.extend((0..=l).map(|t| (c + t, n - m - (l + 1) + t)));
            a.extend((n - m..=n).map(|v| (v, v)));
            (a, Branch::SkipCase2)
        }
        _ => unreachable!("s_H present"),
    };
    Ok(ViolationConstruction {
        pi: VertexPermutation::with_order_preserving_rest(n, &assigned)?,
        e1: spec.m_h,
        reductions: Vec::new(),
        branch,
        s: Some(s_h),
    })
}

/// Structural facts about the `s_H` construction, each recomputed on the
/// instance at hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkipClaims {
    /// A vertex below `c` that `π` moves.
    pub moved_below_c: Option<usize>,
    /// Edges of `π(H)` lex-above `m_H` without the predicted shape: in the
    /// first case `P ∪ {n-l-1,..,n-1} ∪ {π(i)}` with `c+l < i <= d`, in the
    /// second exactly `P ∪ {n-m-l-1,..,n}`.
    pub unexpected_above_max: Vec<KSubset>,
    pub max_in_image: bool,
}

impl SkipClaims {
    pub fn hold(&self) -> bool {
        self.moved_below_c.is_none() && self.unexpected_above_max.is_empty() && !self.max_in_image
    }
}

pub fn check_skip_claims(h: &UniformHypergraph, c: &ViolationConstruction) -> Result<SkipClaims> {
    let spec = classify_m_and_s(h)?;
    let n = h.n();
    let pi_h = h.apply_permutation(&c.pi)?;
    let (prefix, first, l) = match spec.case {
        CaseSplit::Case1 { prefix, c, l, .. } | CaseSplit::Case2 { prefix, c, l, .. } => (prefix, c, l),
        _ => return Err(Error::NotApplicable(format!("m_H splits as {}", spec.case))),
    };
    let shaped = |e: KSubset| match spec.case {
        CaseSplit::Case1 { d, .. } => {
            let core = prefix.union(range(n - l - 1, n - 1));
            ((first + l + 1)..=d).any(|i| e == core.with(c.pi.apply(i)))
        }
        CaseSplit::Case2 { m, .. } => e == prefix.union(range(n - m - l - 1, n)),
        _ => false,
    };
    Ok(SkipClaims {
        moved_below_c: (1..first).find(|&x| c.pi.apply(x) != x),
        unexpected_above_max: pi_h.iter().copied().filter(|&e| e >= spec.m_h && !shaped(e)).collect(),
        max_in_image: pi_h.contains(spec.m_h),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationCheck {
    /// Whether every `e₂ ∈ π(H) ∖ H` fails to restore `H`.
    pub holds: bool,
    pub pi_h: UniformHypergraph,
    pub evidence: Vec<E2Evidence>,
}

/// Recomputes `Δ((H ∖ e₁) ∪ e₂)` for every `e₂ ∈ π(H) ∖ H`. Evidence is
/// tagged with the lemmas whose hypotheses hold; `s` is passed to the
/// almost-small test when given.
pub fn verify_violation<F: Field>(
    engine: &ShiftEngine<F>,
    h: &UniformHypergraph,
    pi: &VertexPermutation,
    e1: KSubset,
    s: Option<KSubset>,
    mode: ShiftMode,
) -> Result<ViolationCheck> {
    if !h.is_shifted() {
        return Err(Error::NotShifted);
    }
    let pi_h = h.apply_permutation(pi)?;
    if !h.contains(e1) || pi_h.contains(e1) {
        return Err(Error::Precondition(format!("e1 = {e1} is not in H ∖ π(H)")));
    }
    if !engine.shifts_to(&pi_h, h, mode)? {
        return Err(Error::Precondition("Δ(π(H)) differs from H".into()));
    }
    let mut evidence = Vec::new();
    let mut holds = true;
    for e2 in pi_h.difference(h) {
        let shifted = engine.shift_uniform(&h.exchange(e1, e2)?, mode)?;
        holds &= shifted != *h;
        evidence.push(E2Evidence {
            e2,
            lemmas: predicting_lemmas(h, e1, e2, s, mode),
            shifted: Some(shifted),
        });
    }
    Ok(ViolationCheck { holds, pi_h, evidence })
}
