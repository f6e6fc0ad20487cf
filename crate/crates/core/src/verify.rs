//! Reproduction suites.
//!
//! Each [`Suite`] recomputes one family of facts about shifting at desk
//! scale and returns a [`SuiteReport`] with one aggregated [`Check`] per
//! property. Randomized suites draw from ChaCha8 seeded by the lab's base
//! seed, so a report depends only on the configuration.

use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{
    binomial, enumerate_k_subsets, enumerate_shifted_range, KSubset, SimplicialComplex, UniformHypergraph,
};
use crate::error::{Error, Result};
use crate::linalg::{derive_seed, FieldConfig, PrimeField};
use crate::matroid::{
    build_violation_permutation, check_exchange, check_skip_claims, classify_m_and_s, lemma_checks,
    lemmas::random_instance, mprime_bases, segment_plus_one_edge, verify_violation, Lab, LemmaOutcome, LemmaTag,
};
use crate::shift::{ShiftEngine, ShiftMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Shifted inputs are fixed by both shifts.
    FixedPoint,
    /// `f`- and Betti vectors survive both shifts.
    Preservation,
    /// The preimage of the star is the set of spanning trees.
    SpanningTrees,
    /// The triangle on `[5]` and its exchange violation.
    Triangle,
    /// `M(H) = M'(H)` and the exchange axiom for initial lex-segments.
    Segments,
    /// Graphs and 3-uniform hypergraphs: non-segments are not matroidal and
    /// the explicit violation is confirmed.
    SmallUniformity,
    /// The `s_H` violation for 4-uniform hypergraphs.
    SkipConstruction,
    /// Shifting commutes with coning.
    Cone,
    /// Symmetric matroidality of graphs and the `N'(H)` cross-check.
    SymmetricGraphs,
    /// Lex-matroidality and segments plus one edge.
    LexPrefixes,
    /// Random instances of each lemma hypothesis.
    Lemmas,
    /// Multi-seed agreement, and disagreement surfacing at a tiny prime.
    Genericity,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::FixedPoint,
        Suite::Preservation,
        Suite::SpanningTrees,
        Suite::Triangle,
        Suite::Segments,
        Suite::SmallUniformity,
        Suite::SkipConstruction,
        Suite::Cone,
        Suite::SymmetricGraphs,
        Suite::LexPrefixes,
        Suite::Lemmas,
        Suite::Genericity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FixedPoint => "fixed-point",
            Suite::Preservation => "preservation",
            Suite::SpanningTrees => "spanning-trees",
            Suite::Triangle => "triangle",
            Suite::Segments => "segments",
            Suite::SmallUniformity => "small-uniformity",
            Suite::SkipConstruction => "skip-construction",
            Suite::Cone => "cone",
            Suite::SymmetricGraphs => "symmetric-graphs",
            Suite::LexPrefixes => "lex-prefixes",
            Suite::Lemmas => "lemmas",
            Suite::Genericity => "genericity",
        }
    }

    fn index(self) -> u64 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Precondition(format!("unknown suite {s:?}, expected one of {}", names.join(", ")))
            })
    }
}

/// Overrides for a suite's default range. Each suite reads the fields it
/// understands and ignores the rest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteBounds {
    /// Largest vertex count.
    pub n: Option<usize>,
    /// Largest uniformity.
    pub k: Option<usize>,
    /// Largest number of edges.
    pub max_edges: Option<usize>,
    /// Number of random samples.
    pub samples: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{status} {}: {}", c.name, c.detail)?;
        }
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "suite {} {status}", self.suite)
    }
}

/// Counts cases of one property and remembers the first failure.
struct Tally {
    name: String,
    total: usize,
    failed: usize,
    first: Option<String>,
}

impl Tally {
    fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            total: 0,
            failed: 0,
            first: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failed += 1;
            self.first.get_or_insert_with(what);
        }
    }

    /// Records `Ok(true)` as a pass and anything else as a failure.
    fn record_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, what),
            Err(e) => self.record(false, || format!("{}: {e}", what())),
        }
    }

    fn finish(self) -> Check {
        let mut detail = format!("{}/{} hold", self.total - self.failed, self.total);
        if let Some(first) = self.first {
            detail.push_str(&format!("; first failure {first}"));
        }
        Check {
            name: self.name,
            passed: self.failed == 0,
            detail,
        }
    }
}

fn note(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

pub fn run_suite(suite: Suite, lab: &Lab, bounds: &SuiteBounds) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(lab.shifter().base_seed(), 1000 + suite.index()));
    let checks = match suite {
        Suite::FixedPoint => fixed_point(lab, bounds.n.unwrap_or(6), bounds.k.unwrap_or(3)),
        Suite::Preservation => preservation(lab, bounds.samples.unwrap_or(2000), &mut rng)?,
        Suite::SpanningTrees => spanning_trees(lab, bounds.n.unwrap_or(5))?,
        Suite::Triangle => triangle(lab)?,
        Suite::Segments => segments(lab, bounds.n.unwrap_or(5), bounds.k.unwrap_or(3), bounds.max_edges.unwrap_or(5))?,
        Suite::SmallUniformity => small_uniformity(lab, bounds.n.unwrap_or(6), bounds.max_edges.unwrap_or(8)),
        Suite::SkipConstruction => skip_construction(lab, bounds.n.unwrap_or(8), bounds.max_edges.unwrap_or(10)),
        Suite::Cone => cone(lab, bounds.n.unwrap_or(6), bounds.samples.unwrap_or(200), &mut rng)?,
        Suite::SymmetricGraphs => symmetric_graphs(lab, bounds.n.unwrap_or(5)),
        Suite::LexPrefixes => lex_prefixes(lab, bounds.n.unwrap_or(5), bounds.k.unwrap_or(3)),
        Suite::Lemmas => lemmas(lab, bounds.n.unwrap_or(6), bounds.samples.unwrap_or(5000), &mut rng),
        Suite::Genericity => genericity(lab, bounds.samples.unwrap_or(1000), &mut rng)?,
    };
    Ok(SuiteReport { suite, checks })
}

fn all_shifted(n: usize, k: usize) -> Vec<UniformHypergraph> {
    enumerate_shifted_range(n, k, 0, binomial(n, k) as usize)
}

fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, k: usize) -> UniformHypergraph {
    let edges = enumerate_k_subsets(n, k).filter(|_| rng.random_bool(0.5)).collect();
    UniformHypergraph::new(n, k, edges).expect("k-subsets of [n]")
}

fn fixed_point(lab: &Lab, n_max: usize, k_max: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for mode in ShiftMode::ALL {
        for k in 1..=k_max {
            let mut t = Tally::new(format!("fixed-point {mode} k={k} n<={n_max}"));
            for n in k..=n_max {
                for h in all_shifted(n, k) {
                    let r = lab.shifter().shift_uniform(&h, mode).map(|d| d == h);
                    t.record_result(r, || h.compact());
                }
            }
            checks.push(t.finish());
        }
    }
    checks
}

fn preservation(lab: &Lab, samples: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut inputs: Vec<UniformHypergraph> = (0..1u32 << 10)
        .map(|mask| {
            let edges = enumerate_k_subsets(5, 2)
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e)
                .collect();
            UniformHypergraph::new(5, 2, edges).expect("graph on [5]")
        })
        .collect();
    inputs.extend((0..samples).map(|_| random_hypergraph(rng, 6, 3)));
    let p = PrimeField::mersenne61().modulus();
    let mut checks = Vec::new();
    for mode in ShiftMode::ALL {
        let mut f = Tally::new(format!("f-vector {mode}"));
        let mut b = Tally::new(format!("betti {mode}"));
        let mut layer = Tally::new(format!("uniform layer {mode}"));
        for g in &inputs {
            let k = SimplicialComplex::downward_closure(g).with_all_vertices();
            let d = match lab.shifter().shift_complex(&k, mode) {
                Ok(d) => d,
                Err(e) => {
                    f.record(false, || format!("{}: {e}", g.compact()));
                    continue;
                }
            };
            f.record(d.f_vector() == k.f_vector(), || g.compact());
            let before = k.betti_homology(p)?;
            b.record(
                d.betti_homology(p)? == before && d.betti_shifted()? == before,
                || g.compact(),
            );
            let r = lab.shifter().shift_uniform(g, mode).map(|u| u == d.uniform_layer(g.k()));
            layer.record_result(r, || g.compact());
        }
        checks.extend([f.finish(), b.finish(), layer.finish()]);
    }
    Ok(checks)
}

/// Spanning trees of `K_n` by union-find over all `(n-1)`-edge subsets.
fn spanning_trees_oracle(n: usize) -> Vec<UniformHypergraph> {
    let edges: Vec<KSubset> = enumerate_k_subsets(n, 2).collect();
    let mut out = Vec::new();
    for pick in enumerate_k_subsets(edges.len(), n - 1) {
        let chosen: Vec<KSubset> = pick.iter().map(|i| edges[i - 1]).collect();
        let mut parent: Vec<usize> = (0..=n).collect();
        let root = |p: &mut Vec<usize>, mut x: usize| {
            while p[x] != x {
                x = p[x];
            }
            x
        };
        let acyclic = chosen.iter().all(|e| {
            let v = e.elements();
            let (a, b) = (root(&mut parent, v[0]), root(&mut parent, v[1]));
            parent[a] = b;
            a != b
        });
        if acyclic {
            out.push(UniformHypergraph::new(n, 2, chosen).expect("graph"));
        }
    }
    out.sort();
    out
}

fn spanning_trees(lab: &Lab, n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 4..=n_max {
        let oracle = spanning_trees_oracle(n);
        let cayley = n.pow(n as u32 - 2);
        for mode in ShiftMode::ALL {
            let got = lab.preimage(&UniformHypergraph::star(n, 2), mode)?;
            checks.push(note(
                &format!("star preimage {mode} n={n}"),
                got == oracle && got.len() == cayley,
                format!("{} found, {} spanning trees, {cayley} expected", got.len(), oracle.len()),
            ));
        }
    }
    Ok(checks)
}

fn triangle(lab: &Lab) -> Result<Vec<Check>> {
    let h = UniformHypergraph::from_digits(5, 2, "12 13 23")?;
    let mut triangles: Vec<UniformHypergraph> = enumerate_k_subsets(5, 3)
        .map(|t| UniformHypergraph::new(5, 2, t.facets().collect()).expect("graph"))
        .collect();
    triangles.sort();
    let mut checks = Vec::new();
    let engine = lab.shifter().engine(5);
    for mode in ShiftMode::ALL {
        let pre = lab.preimage(&h, mode)?;
        checks.push(note(
            &format!("preimage {mode}"),
            pre == triangles,
            format!("{} hypergraphs, the 10 triangles expected", pre.len()),
        ));
        let verdict = check_exchange(&pre)?;
        checks.push(note(&format!("exchange {mode}"), !verdict.is_matroid(), verdict.to_string()));
        let b2 = UniformHypergraph::from_digits(5, 2, "14 15 45")?;
        let mut stuck = Vec::new();
        for e1 in h.difference(&b2) {
            let mut blocked = true;
            for e2 in b2.difference(&h) {
                let g = h.exchange(e1, e2)?;
                blocked &= !engine.shifts_to(&g, &h, mode)? && !pre.contains(&g);
            }
            if blocked {
                stuck.push(e1.to_string());
            }
        }
        checks.push(note(
            &format!("pair {{12,13,23}} {{14,15,45}} {mode}"),
            !stuck.is_empty(),
            format!("e1 without a valid e2: {}", stuck.join(" ")),
        ));
    }
    Ok(checks)
}

fn segments(lab: &Lab, n_max: usize, k_max: usize, max_edges: usize) -> Result<Vec<Check>> {
    let mut oracle = Tally::new("M(H) equals bases of M'(H)");
    let mut exchange = Tally::new("M(H) satisfies exchange");
    for k in 2..=k_max {
        for n in k..=n_max {
            let engine = lab.shifter().engine(n);
            for last in enumerate_k_subsets(n, k).take(max_edges) {
                let h = UniformHypergraph::lex_segment(n, last)?;
                let pre = lab.preimage(&h, ShiftMode::Exterior)?;
                for x in engine.matrices() {
                    oracle.record(mprime_bases(&h, x)? == pre, || format!("{} seed {}", h.compact(), x.seed()));
                }
                exchange.record(check_exchange(&pre)?.is_matroid(), || h.compact());
            }
        }
    }
    Ok(vec![oracle.finish(), exchange.finish()])
}

fn small_uniformity(lab: &Lab, n_max: usize, max_edges: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for k in 2..=3 {
        let mut matroidal = Tally::new(format!("non-segments not matroidal k={k}"));
        let mut violation = Tally::new(format!("constructed violation k={k}"));
        for n in k..=n_max {
            let hi = if k == 2 { binomial(n, 2) as usize } else { max_edges };
            for h in enumerate_shifted_range(n, k, 1, hi) {
                if h.is_initial_lex_segment() {
                    continue;
                }
                let r = lab.is_matroidal(&h, ShiftMode::Exterior).map(|r| !r.is_matroidal());
                matroidal.record_result(r, || h.compact());
                let r = lab.construct_violation(&h, ShiftMode::Exterior).map(|(_, c)| c.holds);
                violation.record_result(r, || h.compact());
            }
        }
        checks.extend([matroidal.finish(), violation.finish()]);
    }
    checks
}

fn skip_construction(lab: &Lab, n_max: usize, max_edges: usize) -> Vec<Check> {
    let mut violation = Tally::new("constructed violation k=4");
    let mut fixed = Tally::new("pi fixes every vertex below c");
    let mut shape = Tally::new("edges of pi(H) above m_H have the predicted shape");
    let mut image = Tally::new("m_H not in pi(H)");
    let mut covered = Tally::new("every e2 predicted by a lemma");
    let mut outside = 0;
    for n in 5..=n_max {
        let engine = lab.shifter().engine(n);
        for h in enumerate_shifted_range(n, 4, 1, max_edges) {
            if h.is_initial_lex_segment() {
                continue;
            }
            match classify_m_and_s(&h) {
                Ok(spec) if spec.s_in_h => {
                    outside += 1;
                    continue;
                }
                Ok(_) => {}
                Err(e) => {
                    violation.record(false, || format!("{}: {e}", h.compact()));
                    continue;
                }
            }
            let c = match build_violation_permutation(&h) {
                Ok(c) => c,
                Err(e) => {
                    violation.record(false, || format!("{}: {e}", h.compact()));
                    continue;
                }
            };
            match check_skip_claims(&h, &c) {
                Ok(claims) => {
                    fixed.record(claims.moved_below_c.is_none(), || h.compact());
                    shape.record(claims.unexpected_above_max.is_empty(), || {
                        format!("{} pi={} edge {}", h.compact(), c.pi, claims.unexpected_above_max[0])
                    });
                    image.record(!claims.max_in_image, || h.compact());
                }
                Err(e) => fixed.record(false, || format!("{}: {e}", h.compact())),
            }
            match verify_violation(&engine, &h, &c.pi, c.e1, c.s, ShiftMode::Exterior) {
                Ok(check) => {
                    violation.record(check.holds, || h.compact());
                    for ev in &check.evidence {
                        covered.record(!ev.lemmas.is_empty(), || format!("{} e2={}", h.compact(), ev.e2));
                    }
                }
                Err(e) => violation.record(false, || format!("{}: {e}", h.compact())),
            }
        }
    }
    let mut v = violation.finish();
    v.detail.push_str(&format!("; {outside} with s_H in H skipped"));
    vec![v, fixed.finish(), shape.finish(), image.finish(), covered.finish()]
}

fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let count = rng.random_range(1..=4);
    let vertices: Vec<usize> = (1..=n).collect();
    let gens: Vec<KSubset> = (0..count)
        .map(|_| {
            let size = rng.random_range(1..=3.min(n));
            let picked: Vec<usize> = vertices.choose_multiple(rng, size).copied().collect();
            KSubset::from_unsorted(&picked).expect("distinct")
        })
        .collect();
    SimplicialComplex::closure_of(n, &gens).expect("subsets of [n]")
}

fn cone(lab: &Lab, n_max: usize, samples: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let complexes: Vec<SimplicialComplex> = (0..samples)
        .map(|_| {
            let n = rng.random_range(2..n_max);
            random_complex(rng, n)
        })
        .collect();
    for mode in ShiftMode::ALL {
        let mut t = Tally::new(format!("shift of cone is cone of shift {mode}"));
        for k in &complexes {
            let r = lab
                .shifter()
                .shift_complex(&k.cone(), mode)
                .and_then(|c| Ok(c == lab.shifter().shift_complex(k, mode)?.cone()));
            t.record_result(r, || format!("{:?}", k.faces().map(|f| f.to_string()).collect::<Vec<_>>()));
        }
        checks.push(t.finish());
    }
    Ok(checks)
}

fn symmetric_graphs(lab: &Lab, n_max: usize) -> Vec<Check> {
    let mut verdict = Tally::new("s-matroidal iff segment");
    let mut nprime = Tally::new("segments: M^s(H) equals bases of N'(H)");
    for n in 2..=n_max {
        for h in all_shifted(n, 2) {
            match lab.is_s_matroidal_graph(&h) {
                Ok(r) => {
                    verdict.record(r.report.is_matroidal() == h.is_initial_lex_segment(), || h.compact());
                    if h.is_initial_lex_segment() {
                        nprime.record(r.nprime_agrees == Some(true), || h.compact());
                    }
                }
                Err(e) => verdict.record(false, || format!("{}: {e}", h.compact())),
            }
        }
    }
    vec![verdict.finish(), nprime.finish()]
}

fn lex_prefixes(lab: &Lab, n_max: usize, k_max: usize) -> Vec<Check> {
    let mut lex = Tally::new("lex-matroidal iff segment");
    let mut plus = Tally::new("segment plus one edge not matroidal");
    for k in 2..=k_max {
        for n in k..=n_max {
            for h in all_shifted(n, k) {
                let r = lab
                    .is_lex_matroidal(&h, ShiftMode::Exterior)
                    .map(|r| r.is_lex_matroidal() == h.is_initial_lex_segment());
                lex.record_result(r, || h.compact());
            }
            for h in segment_plus_one_edge(n, k) {
                let r = lab.is_matroidal(&h, ShiftMode::Exterior).map(|r| !r.is_matroidal());
                plus.record_result(r, || h.compact());
            }
        }
    }
    vec![lex.finish(), plus.finish()]
}

fn lemmas(lab: &Lab, n: usize, samples: usize, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let engine = lab.shifter().engine(n);
    let mut checks = Vec::new();
    for tag in LemmaTag::ALL {
        let mut t = Tally::new(format!("{tag} conclusion"));
        let mut drawn = 0;
        let mut attempts = 0;
        while drawn < samples && attempts < samples * 50 {
            attempts += 1;
            let k = 2 + drawn % 2;
            let Some(inst) = random_instance(tag, n, k, rng) else {
                continue;
            };
            drawn += 1;
            for mode in ShiftMode::ALL.into_iter().filter(|m| tag.holds_for(*m)) {
                let r = lemma_checks(&engine, mode, &inst.h, inst.e1, inst.e2, inst.s).map(|checks| {
                    checks
                        .iter()
                        .find(|c| c.tag == tag)
                        .is_some_and(|c| c.outcome == LemmaOutcome::Confirmed)
                });
                t.record_result(r, || format!("{} e1={} e2={} {mode}", inst.h.compact(), inst.e1, inst.e2));
            }
        }
        let mut c = t.finish();
        c.passed &= drawn == samples;
        c.detail.push_str(&format!("; {drawn} instances"));
        checks.push(c);
    }
    checks
}

fn genericity(lab: &Lab, samples: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let inputs: Vec<UniformHypergraph> = (0..samples)
        .map(|_| {
            let n = rng.random_range(4..=7);
            let k = rng.random_range(2..=3);
            random_hypergraph(rng, n, k)
        })
        .collect();
    let base = lab.shifter().base_seed();
    let mut checks = Vec::new();
    for (prime, must_agree) in [(PrimeField::mersenne61().modulus(), true), (101, false)] {
        let config = FieldConfig::new(prime, base)?;
        let engines: Vec<ShiftEngine> = (0..=7).map(|n| ShiftEngine::new(n, &config, 3)).collect::<Result<_>>()?;
        for mode in ShiftMode::ALL {
            let mut honest = Tally::new(format!("p={prime} {mode}: agreement or reported disagreement"));
            let mut disagreements = 0;
            for h in &inputs {
                let engine = &engines[h.n()];
                let outputs = (0..3)
                    .map(|i| engine.shift_uniform_with_seed(h, mode, i))
                    .collect::<Result<Vec<_>>>()?;
                let agree = outputs.iter().all(|o| *o == outputs[0] && o.len() == h.len());
                let ok = match engine.shift_uniform(h, mode) {
                    Ok(d) => agree && d == outputs[0],
                    Err(Error::NoConsensus(_)) => {
                        disagreements += 1;
                        !agree
                    }
                    Err(_) => false,
                };
                honest.record(ok, || h.compact());
            }
            let mut c = honest.finish();
            c.detail.push_str(&format!("; {disagreements} disagreements"));
            if must_agree {
                c.passed &= disagreements == 0;
            }
            checks.push(c);
        }
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(spanning_trees_oracle(4).len(), 16);
        assert_eq!(spanning_trees_oracle(5).len(), 125);
    }

    #[test]
    fn small_runs_pass() {
        let lab = Lab::default();
        let small = SuiteBounds {
            n: Some(4),
            k: Some(2),
            max_edges: Some(4),
            samples: Some(20),
        };
        for suite in [Suite::Triangle, Suite::FixedPoint, Suite::Cone, Suite::Genericity] {
            let report = run_suite(suite, &lab, &small).unwrap();
            assert!(report.passed(), "{report}");
        }
        // Four vertices cannot supply twenty instances of every lemma.
        let lemmas = run_suite(Suite::Lemmas, &lab, &SuiteBounds { n: Some(6), ..small }).unwrap();
        assert!(lemmas.passed(), "{lemmas}");
        let starved = run_suite(Suite::Lemmas, &lab, &small).unwrap();
        assert!(!starved.passed());
    }
}
