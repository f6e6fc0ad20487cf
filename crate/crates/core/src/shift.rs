//! Seeded shifting engines with multi-seed consensus.
//!
//! A [`ShiftEngine`] fixes `n` and a list of seeds, samples one generic
//! matrix and one set of generic linear forms per seed, and answers every
//! shifting query by running all seeds and requiring identical answers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::combinatorics::{binomial, lex_rank, KSubset, SimplicialComplex, UniformHypergraph};
use crate::error::{ConsensusFailure, Error, Result};
use crate::exterior::{
    exterior_shift_complex, exterior_shift_uniform, CompoundTable, GenericMatrix, ShiftReport,
};
use crate::linalg::{Field, FieldConfig, PrimeField};
use crate::symmetric::{symmetric_shift_complex, symmetric_shift_uniform, GenericLinearForms};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShiftMode {
    #[default]
    Exterior,
    Symmetric,
}

impl ShiftMode {
    pub const ALL: [ShiftMode; 2] = [ShiftMode::Exterior, ShiftMode::Symmetric];

    pub fn name(self) -> &'static str {
        match self {
            ShiftMode::Exterior => "exterior",
            ShiftMode::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for ShiftMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShiftMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exterior" | "e" => Ok(ShiftMode::Exterior),
            "symmetric" | "s" => Ok(ShiftMode::Symmetric),
            other => Err(Error::Precondition(format!(
                "unknown shifting mode `{other}` (expected exterior or symmetric)"
            ))),
        }
    }
}

type Tables<F> = Option<Arc<Vec<CompoundTable<F>>>>;

pub struct ShiftEngine<F: Field = PrimeField> {
    n: usize,
    seeds: Vec<u64>,
    matrices: Vec<GenericMatrix<F>>,
    forms: Vec<GenericLinearForms<F>>,
    tables: Vec<OnceLock<Tables<F>>>,
}

impl ShiftEngine<PrimeField> {
    /// An engine over `F_p` using the first `num_seeds` seeds of the schedule
    /// derived from `config.seed`.
    pub fn new(n: usize, config: &FieldConfig, num_seeds: usize) -> Result<Self> {
        Self::with_field(config.field(), n, config.seeds(num_seeds))
    }
}

impl<F: Field> ShiftEngine<F> {
    pub fn with_field(field: F, n: usize, seeds: Vec<u64>) -> Result<Self> {
        if seeds.is_empty() {
            return Err(Error::Precondition("at least one seed is required".into()));
        }
        let matrices = seeds
            .iter()
            .map(|&s| GenericMatrix::sample_in(field.clone(), n, s))
            .collect();
        let forms = seeds
            .iter()
            .map(|&s| GenericLinearForms::sample_in(field.clone(), n, s))
            .collect();
        Ok(ShiftEngine {
            n,
            seeds,
            matrices,
            forms,
            tables: (0..=n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seeds(&self) -> &[u64] {
        &self.seeds
    }

    pub fn matrices(&self) -> &[GenericMatrix<F>] {
        &self.matrices
    }

    pub fn linear_forms(&self) -> &[GenericLinearForms<F>] {
        &self.forms
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::InvalidHypergraph(format!(
                "engine is set up for n = {}, input has n = {n}",
                self.n
            )));
        }
        Ok(())
    }

    /// Compound tables for uniformity `k`, one per seed, when `C(n, k)` is
    /// small enough to tabulate.
    fn tables(&self, k: usize) -> Option<&Arc<Vec<CompoundTable<F>>>> {
        if k > self.n || binomial(self.n, k) > CompoundTable::<F>::MAX_SUBSETS as u128 {
            return None;
        }
        self.tables[k]
            .get_or_init(|| {
                self.matrices
                    .iter()
                    .map(|x| CompoundTable::new(x, k))
                    .collect::<Result<Vec<_>>>()
                    .ok()
                    .map(Arc::new)
            })
            .as_ref()
    }

    /// The shift of `h` under the seed at position `index` only.
    pub fn shift_uniform_with_seed(
        &self,
        h: &UniformHypergraph,
        mode: ShiftMode,
        index: usize,
    ) -> Result<UniformHypergraph> {
        self.check_n(h.n())?;
        match mode {
            ShiftMode::Exterior => match self.tables(h.k()) {
                Some(t) => Ok(t[index].shift(h)),
                None => exterior_shift_uniform(h, &self.matrices[index]),
            },
            ShiftMode::Symmetric => symmetric_shift_uniform(h, &self.forms[index]),
        }
    }

    fn all_seeds(&self, h: &UniformHypergraph, mode: ShiftMode) -> Result<Vec<UniformHypergraph>> {
        (0..self.seeds.len())
            .map(|i| self.shift_uniform_with_seed(h, mode, i))
            .collect()
    }

    fn consensus(&self, h: &UniformHypergraph, outputs: Vec<UniformHypergraph>) -> Result<UniformHypergraph> {
        let agreed = outputs
            .iter()
            .all(|o| *o == outputs[0] && o.len() == h.len());
        if !agreed {
            return Err(self.failure(outputs.iter().map(|o| o.edges().to_vec()).collect()));
        }
        Ok(outputs.into_iter().next().expect("at least one seed"))
    }

    fn failure(&self, outputs: Vec<Vec<KSubset>>) -> Error {
        Error::NoConsensus(Box::new(ConsensusFailure {
            seeds: self.seeds.clone(),
            outputs,
        }))
    }

    /// `Δ(h)`, agreed on by every seed. A seed whose output has the wrong
    /// size counts as a disagreement.
    pub fn shift_uniform(&self, h: &UniformHypergraph, mode: ShiftMode) -> Result<UniformHypergraph> {
        let outputs = self.all_seeds(h, mode)?;
        self.consensus(h, outputs)
    }

    pub fn report(&self, h: &UniformHypergraph, mode: ShiftMode) -> Result<ShiftReport> {
        let output = self.shift_uniform(h, mode)?;
        Ok(ShiftReport {
            input: h.clone(),
            output,
            seeds_used: self.seeds.clone(),
            consensus: true,
        })
    }

    pub fn shift_complex(&self, k: &SimplicialComplex, mode: ShiftMode) -> Result<SimplicialComplex> {
        self.check_n(k.n())?;
        let outputs = (0..self.seeds.len())
            .map(|i| match mode {
                ShiftMode::Exterior => exterior_shift_complex(k, &self.matrices[i]),
                ShiftMode::Symmetric => symmetric_shift_complex(k, &self.forms[i]),
            })
            .collect::<Result<Vec<_>>>()?;
        let agreed = outputs
            .iter()
            .all(|o| *o == outputs[0] && o.f_vector() == k.f_vector());
        if !agreed {
            return Err(self.failure(outputs.iter().map(|o| o.faces().collect()).collect()));
        }
        Ok(outputs.into_iter().next().expect("at least one seed"))
    }

    /// Whether `Δ(g) = target`, agreed on by every seed.
    ///
    /// With compound tables available the exterior check stops at the first
    /// column that deviates from `target`, which makes rejecting a candidate
    /// much cheaper than shifting it.
    pub fn shifts_to(&self, g: &UniformHypergraph, target: &UniformHypergraph, mode: ShiftMode) -> Result<bool> {
        self.check_n(g.n())?;
        if g.len() != target.len() || g.k() != target.k() {
            return Ok(false);
        }
        if let (ShiftMode::Exterior, Some(tables)) = (mode, self.tables(g.k())) {
            let rows: Vec<usize> = g.iter().map(|&e| lex_rank(e, self.n)).collect();
            let mut mask = vec![false; binomial(self.n, g.k()) as usize];
            for &e in target.iter() {
                mask[lex_rank(e, self.n)] = true;
            }
            let verdicts: Vec<bool> = tables
                .iter()
                .map(|t| t.shifts_onto(&rows, &mask, target.len()))
                .collect();
            if verdicts.iter().all(|&v| v == verdicts[0]) {
                return Ok(verdicts[0]);
            }
            let outputs = self.all_seeds(g, mode)?;
            return Err(self.failure(outputs.iter().map(|o| o.edges().to_vec()).collect()));
        }
        Ok(self.shift_uniform(g, mode)? == *target)
    }
}

impl<F: Field> fmt::Debug for ShiftEngine<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ShiftEngine")
            .field("n", &self.n)
            .field("seeds", &self.seeds)
            .finish_non_exhaustive()
    }
}

/// Engines for every `n` encountered, built lazily from one configuration.
pub struct Shifter<F: Field = PrimeField> {
    field: F,
    base_seed: u64,
    num_seeds: usize,
    engines: Mutex<BTreeMap<usize, Arc<ShiftEngine<F>>>>,
}

impl Shifter<PrimeField> {
    pub fn new(config: FieldConfig, num_seeds: usize) -> Result<Self> {
        Self::with_field(config.field(), config.seed, num_seeds)
    }
}

impl Default for Shifter<PrimeField> {
    fn default() -> Self {
        Shifter::new(FieldConfig::default(), 3).expect("default configuration")
    }
}

impl<F: Field> Shifter<F> {
    pub fn with_field(field: F, base_seed: u64, num_seeds: usize) -> Result<Self> {
        if num_seeds == 0 {
            return Err(Error::Precondition("at least one seed is required".into()));
        }
        Ok(Shifter {
            field,
            base_seed,
            num_seeds,
            engines: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn num_seeds(&self) -> usize {
        self.num_seeds
    }

    pub fn base_seed(&self) -> u64 {
        self.base_seed
    }

    pub fn engine(&self, n: usize) -> Arc<ShiftEngine<F>> {
        let mut engines = self.engines.lock().expect("engine cache poisoned");
        engines
            .entry(n)
            .or_insert_with(|| {
                let seeds = crate::linalg::seed_schedule(self.base_seed, self.num_seeds);
                Arc::new(
                    ShiftEngine::with_field(self.field.clone(), n, seeds)
                        .expect("seed count checked at construction"),
                )
            })
            .clone()
    }

    pub fn shift_uniform(&self, h: &UniformHypergraph, mode: ShiftMode) -> Result<UniformHypergraph> {
        self.engine(h.n()).shift_uniform(h, mode)
    }

    pub fn shift_complex(&self, k: &SimplicialComplex, mode: ShiftMode) -> Result<SimplicialComplex> {
        self.engine(k.n()).shift_complex(k, mode)
    }

    pub fn shifts_to(&self, g: &UniformHypergraph, target: &UniformHypergraph, mode: ShiftMode) -> Result<bool> {
        self.engine(g.n()).shifts_to(g, target, mode)
    }

    pub fn report(&self, h: &UniformHypergraph, mode: ShiftMode) -> Result<ShiftReport> {
        self.engine(h.n()).report(h, mode)
    }
}

impl<F: Field> fmt::Debug for Shifter<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Shifter")
            .field("base_seed", &self.base_seed)
            .field("num_seeds", &self.num_seeds)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_k_subsets;
    use crate::linalg::RationalField;

    fn h(n: usize, k: usize, s: &str) -> UniformHypergraph {
        UniformHypergraph::from_digits(n, k, s).unwrap()
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("exterior".parse::<ShiftMode>().unwrap(), ShiftMode::Exterior);
        assert_eq!("symmetric".parse::<ShiftMode>().unwrap(), ShiftMode::Symmetric);
        assert!("other".parse::<ShiftMode>().is_err());
        assert_eq!(ShiftMode::Symmetric.to_string(), "symmetric");
    }

    #[test]
    fn tree_goes_to_star_in_both_modes() {
        let s = Shifter::default();
        let tree = h(5, 2, "12 23 34 45");
        for mode in ShiftMode::ALL {
            assert_eq!(s.shift_uniform(&tree, mode).unwrap(), h(5, 2, "12 13 14 15"));
            let r = s.report(&tree, mode).unwrap();
            assert!(r.consensus);
            assert_eq!(r.seeds_used.len(), 3);
        }
    }

    #[test]
    fn shifts_to_agrees_with_shift() {
        let s = Shifter::default();
        let engine = s.engine(5);
        let universe: Vec<KSubset> = enumerate_k_subsets(5, 2).collect();
        for pick in enumerate_k_subsets(10, 3) {
            let g = UniformHypergraph::new(5, 2, pick.iter().map(|i| universe[i - 1]).collect()).unwrap();
            let shifted = engine.shift_uniform(&g, ShiftMode::Exterior).unwrap();
            for target in [h(5, 2, "12 13 14"), h(5, 2, "12 13 23")] {
                assert_eq!(
                    engine.shifts_to(&g, &target, ShiftMode::Exterior).unwrap(),
                    shifted == target
                );
            }
        }
    }

    #[test]
    fn rational_engine_matches_prime_engine() {
        let q = ShiftEngine::with_field(RationalField, 5, vec![1, 2]).unwrap();
        let p = ShiftEngine::new(5, &FieldConfig::default(), 3).unwrap();
        for g in [h(5, 2, "14 15 45"), h(5, 2, "13 24 35 45"), h(5, 2, "12 34")] {
            for mode in ShiftMode::ALL {
                assert_eq!(q.shift_uniform(&g, mode).unwrap(), p.shift_uniform(&g, mode).unwrap());
            }
        }
    }

    #[test]
    fn wrong_n_is_rejected() {
        let engine = ShiftEngine::new(4, &FieldConfig::default(), 1).unwrap();
        assert!(engine.shift_uniform(&h(5, 2, "12"), ShiftMode::Exterior).is_err());
        assert!(ShiftEngine::new(4, &FieldConfig::default(), 0).is_err());
    }
}
