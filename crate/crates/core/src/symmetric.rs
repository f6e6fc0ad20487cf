//! Symmetric shifting through generic initial monomials of the face ring.
//!
//! `R(K) = L[x_1..x_n] / I_K` has, in degree `d`, the basis of monomials whose
//! support is a face. With generic linear forms `y_i = Σ_j C[i][j] x_j`, the
//! degree-`d` part of `GIN(K)` is the greedy basis of `y`-monomials in the
//! `y`-lex order. Its members `y_{i_1}..y_{i_d}` with `d <= i_1` unsquare to
//! the faces of `Δ^s(K)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{KSubset, SimplicialComplex, UniformHypergraph};
use crate::error::{Error, Result};
use crate::linalg::{derive_seed, EchelonState, Field, FieldConfig, FieldMatrix, PrimeField};

/// A monomial as its sorted list of variable indices with repetition, so
/// `y_1^2 y_3` is `[1, 1, 3]`. Whether it is read in `x` or `y` depends on
/// context.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    indices: Vec<usize>,
}

impl Monomial {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::InvalidSubset("variable indices start at 1".into()));
        }
        indices.sort_unstable();
        Ok(Monomial { indices })
    }

    pub fn one() -> Self {
        Monomial {
            indices: Vec::new(),
        }
    }

    pub fn of(indices: &[usize]) -> Self {
        Self::new(indices.to_vec()).expect("invalid monomial literal")
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The set of variables that occur.
    pub fn support(&self) -> KSubset {
        self.indices
            .iter()
            .fold(KSubset::EMPTY, |acc, &i| acc.with(i))
    }

    pub fn times(&self, i: usize) -> Self {
        let mut indices = self.indices.clone();
        let at = indices.partition_point(|&v| v <= i);
        indices.insert(at, i);
        Monomial { indices }
    }

    /// Renders as a product of named variables, e.g. `y1^2y3`.
    pub fn render(&self, var: char) -> String {
        if self.indices.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.indices.len() {
            let v = self.indices[i];
            let run = self.indices[i..].iter().take_while(|&&w| w == v).count();
            out.push_str(&format!("{var}{v}"));
            if run > 1 {
                out.push_str(&format!("^{run}"));
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render('y'))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Order on `y`-monomials of one degree: `∏ y_i^{a_i} < ∏ y_i^{b_i}` when
/// `a_j > b_j` at the first differing exponent. On sorted index lists this is
/// plain lexicographic order, so `y_1^2 < y_1 y_2 < ... < y_1 y_n < y_2^2`.
pub fn y_monomial_order(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.indices.cmp(&b.indices))
}

/// Degree-`d` monomials whose support is a face, in lex order of index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRingBasis {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
}

impl FaceRingBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }
}

pub fn face_monomial_basis(k: &SimplicialComplex, d: usize) -> FaceRingBasis {
    let mut level = vec![Monomial::one()];
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &level {
            let from = m.indices.last().copied().unwrap_or(1);
            for i in from..=k.n() {
                let grown = m.times(i);
                if k.contains(grown.support()) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    FaceRingBasis {
        degree: d,
        monomials: level,
    }
}

/// Generic linear forms `y_i = Σ_j C[i][j] x_j` with an invertible `C`.
#[derive(Clone, Debug)]
pub struct GenericLinearForms<F: Field = PrimeField> {
    seed: u64,
    coefficients: FieldMatrix<F>,
}

impl GenericLinearForms<PrimeField> {
    pub fn sample(n: usize, config: &FieldConfig) -> Self {
        Self::sample_in(config.field(), n, config.seed)
    }
}

impl<F: Field> GenericLinearForms<F> {
    /// Draws `C` from ChaCha8 seeded with `seed`. A singular draw is replaced
    /// by a draw from `derive_seed(seed, attempt)`; the seed actually used is
    /// kept in [`Self::seed`].
    pub fn sample_in(field: F, n: usize, seed: u64) -> Self {
        let mut used = seed;
        for attempt in 1u64.. {
            let mut rng = ChaCha8Rng::seed_from_u64(used);
            let rows = (0..n)
                .map(|_| (0..n).map(|_| field.sample(&mut rng)).collect())
                .collect();
            let c = FieldMatrix::from_rows(field.clone(), rows);
            if c.rank() == n {
                return GenericLinearForms {
                    seed: used,
                    coefficients: c,
                };
            }
            log::warn!("singular linear forms from seed {used}; resampling");
            used = derive_seed(seed, attempt);
        }
        unreachable!()
    }

    pub fn from_matrix(coefficients: FieldMatrix<F>) -> Result<Self> {
        let n = coefficients.rows();
        if coefficients.cols() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: coefficients.cols(),
            });
        }
        if coefficients.rank() != n {
            return Err(Error::Precondition("linear forms must be invertible".into()));
        }
        Ok(GenericLinearForms {
            seed: 0,
            coefficients,
        })
    }

    pub fn n(&self) -> usize {
        self.coefficients.rows()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn field(&self) -> &F {
        self.coefficients.field()
    }

    /// `C[i][j]`, 1-based.
    pub fn coefficient(&self, i: usize, j: usize) -> &F::Elem {
        self.coefficients.get(i - 1, j - 1)
    }

    pub fn coefficients(&self) -> &FieldMatrix<F> {
        &self.coefficients
    }
}

/// The full product `∏ y_{i_j}` in `L[x]`, without any quotient.
pub fn expand_polynomial<F: Field>(
    m: &Monomial,
    y: &GenericLinearForms<F>,
) -> BTreeMap<Monomial, F::Elem> {
    let f = y.field();
    let mut poly = BTreeMap::from([(Monomial::one(), f.one())]);
    for &i in &m.indices {
        let mut next: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (mono, c) in &poly {
            for j in 1..=y.n() {
                let term = f.mul(c, y.coefficient(i, j));
                let slot = next.entry(mono.times(j)).or_insert_with(|| f.zero());
                *slot = f.add(slot, &term);
            }
        }
        poly = next;
    }
    poly
}

/// Coordinates of the image of `∏ y_{i_j}` in `R(K)_d` with respect to
/// `basis`. Terms whose support is not a face vanish in `R(K)` and are
/// dropped.
pub fn expand_y_monomial<F: Field>(
    m: &Monomial,
    y: &GenericLinearForms<F>,
    basis: &FaceRingBasis,
) -> Result<Vec<F::Elem>> {
    if m.degree() != basis.degree {
        return Err(Error::DegreeMismatch {
            left: m.degree(),
            right: basis.degree,
        });
    }
    let f = y.field();
    let mut out = vec![f.zero(); basis.len()];
    for (mono, c) in expand_polynomial(m, y) {
        if let Some(pos) = basis.position(&mono) {
            out[pos] = c;
        }
    }
    Ok(out)
}

/// Face-supported monomials of degrees `0..=d` with multiplication tables:
/// `times[j][m][v]` is the index in level `j + 1` of `x_v` times monomial `m`
/// of level `j`, or `None` when that product vanishes in `R(K)`.
struct FaceRingLevels {
    n: usize,
    sizes: Vec<usize>,
    times: Vec<Vec<Vec<Option<u32>>>>,
}

impl FaceRingLevels {
    fn new(k: &SimplicialComplex, d: usize) -> Self {
        let n = k.n();
        let bases: Vec<FaceRingBasis> = (0..=d).map(|j| face_monomial_basis(k, j)).collect();
        let mut times = Vec::with_capacity(d);
        for j in 0..d {
            let index: HashMap<&Monomial, u32> = bases[j + 1]
                .monomials
                .iter()
                .enumerate()
                .map(|(i, m)| (m, i as u32))
                .collect();
            let table = bases[j]
                .monomials
                .iter()
                .map(|m| {
                    (1..=n)
                        .map(|v| index.get(&m.times(v)).copied())
                        .collect()
                })
                .collect();
            times.push(table);
        }
        FaceRingLevels {
            n,
            sizes: bases.iter().map(FaceRingBasis::len).collect(),
            times,
        }
    }

    /// `vec * y_i` from level `j` to level `j + 1`.
    fn multiply<F: Field>(
        &self,
        y: &GenericLinearForms<F>,
        j: usize,
        vec: &[F::Elem],
        i: usize,
    ) -> Vec<F::Elem> {
        let f = y.field();
        let mut out = vec![f.zero(); self.sizes[j + 1]];
        for (m, c) in vec.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for v in 1..=self.n {
                if let Some(t) = self.times[j][m][v - 1] {
                    let term = f.mul(c, y.coefficient(i, v));
                    let t = t as usize;
                    out[t] = f.add(&out[t], &term);
                }
            }
        }
        out
    }
}

/// Degree-`d` part of `GIN(K)`: the `y`-monomials, taken in `y`-lex order,
/// whose images in `R(K)_d` are not spanned by the images of smaller ones.
///
/// Candidates are visited depth-first over nondecreasing index sequences,
/// which is exactly `y`-lex order; each prefix is multiplied out once and
/// reduced modulo `I_K` after every factor. The walk ends as soon as the rank
/// reaches `dim R(K)_d`.
pub fn gin_degree<F: Field>(
    k: &SimplicialComplex,
    d: usize,
    y: &GenericLinearForms<F>,
) -> Result<Vec<Monomial>> {
    if y.n() != k.n() {
        return Err(Error::InvalidComplex(format!(
            "complex on [{}] with {} linear forms",
            k.n(),
            y.n()
        )));
    }
    let levels = FaceRingLevels::new(k, d);
    let target = levels.sizes[d];
    let mut chosen = Vec::new();
    if target == 0 {
        return Ok(chosen);
    }
    let mut echelon = EchelonState::new(y.field().clone(), target);
    let start = vec![y.field().one()];
    let mut prefix = Vec::with_capacity(d);
    gin_walk(&levels, y, d, 1, &start, &mut prefix, &mut echelon, &mut chosen, target);
    Ok(chosen)
}

#[allow(clippy::too_many_arguments)]
fn gin_walk<F: Field>(
    levels: &FaceRingLevels,
    y: &GenericLinearForms<F>,
    d: usize,
    from: usize,
    vec: &[F::Elem],
    prefix: &mut Vec<usize>,
    echelon: &mut EchelonState<F>,
    chosen: &mut Vec<Monomial>,
    target: usize,
) {
    let j = prefix.len();
    for i in from..=levels.n {
        if echelon.rank() == target {
            return;
        }
        let next = levels.multiply(y, j, vec, i);
        if next.iter().all(|c| y.field().is_zero(c)) {
            continue;
        }
        prefix.push(i);
        if j + 1 == d {
            if echelon.insert(next) {
                chosen.push(Monomial {
                    indices: prefix.clone(),
                });
            }
        } else {
            gin_walk(levels, y, d, i, &next, prefix, echelon, chosen, target);
        }
        prefix.pop();
    }
}

/// `S_un(y_{i_1}..y_{i_r}) = {i_1 - r + 1, i_2 - r + 2, ..., i_r}`; requires
/// `r <= i_1`.
pub fn unsquare(m: &Monomial) -> Result<KSubset> {
    let r = m.degree();
    if m.indices.first().is_some_and(|&i| i < r) {
        return Err(Error::Unsquarable(m.to_string()));
    }
    let elements: Vec<usize> = m
        .indices
        .iter()
        .enumerate()
        .map(|(j, &i)| i + j + 1 - r)
        .collect();
    KSubset::new(&elements)
}

/// Inverse of [`unsquare`]: `{s_1 < .. < s_r}` maps to `∏ y_{s_j + r - j}`.
pub fn squaring(s: KSubset) -> Monomial {
    let r = s.len();
    Monomial {
        indices: s.iter().enumerate().map(|(j, v)| v + r - j - 1).collect(),
    }
}

fn gin_faces<F: Field>(k: &SimplicialComplex, r: usize, y: &GenericLinearForms<F>) -> Result<Vec<KSubset>> {
    let mut faces = Vec::new();
    for m in gin_degree(k, r, y)? {
        if m.indices[0] >= r {
            faces.push(unsquare(&m)?);
        }
    }
    faces.sort_unstable();
    Ok(faces)
}

/// `Δ^s(K)`: for each degree `r` up to `dim K + 1`, the unsquared gin
/// monomials of degree `r` form the faces of size `r`.
pub fn symmetric_shift_complex<F: Field>(
    k: &SimplicialComplex,
    y: &GenericLinearForms<F>,
) -> Result<SimplicialComplex> {
    let mut layers = vec![vec![KSubset::EMPTY]];
    for r in 1..k.layers().len() {
        layers.push(gin_faces(k, r, y)?);
    }
    SimplicialComplex::from_layers(k.n(), layers)
}

/// The size-`k` faces of `Δ^s(K(H))`; only degree `k` is computed.
pub fn symmetric_shift_uniform<F: Field>(
    h: &UniformHypergraph,
    y: &GenericLinearForms<F>,
) -> Result<UniformHypergraph> {
    let k = SimplicialComplex::downward_closure(h);
    let faces = if h.is_empty() {
        Vec::new()
    } else {
        gin_faces(&k, h.k(), y)?
    };
    UniformHypergraph::new(h.n(), h.k(), faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_k_subsets;

    fn forms(n: usize, seed: u64) -> GenericLinearForms {
        GenericLinearForms::sample(n, &FieldConfig::with_seed(seed))
    }

    fn closure(n: usize, k: usize, s: &str) -> SimplicialComplex {
        SimplicialComplex::downward_closure(&UniformHypergraph::from_digits(n, k, s).unwrap())
    }

    fn m(idx: &[usize]) -> Monomial {
        Monomial::of(idx)
    }

    #[test]
    fn order_examples() {
        assert_eq!(y_monomial_order(&m(&[1, 1]), &m(&[1, 2])).unwrap(), Ordering::Less);
        assert_eq!(y_monomial_order(&m(&[1, 7]), &m(&[2, 2])).unwrap(), Ordering::Less);
        assert_eq!(y_monomial_order(&m(&[2, 3]), &m(&[2, 3])).unwrap(), Ordering::Equal);
        assert_eq!(y_monomial_order(&m(&[1, 1, 5]), &m(&[1, 2, 3])).unwrap(), Ordering::Less);
        assert!(y_monomial_order(&m(&[1]), &m(&[1, 1])).is_err());
    }

    /// Direct comparison of exponent vectors, as in the definition.
    fn exponent_order(a: &Monomial, b: &Monomial, n: usize) -> Ordering {
        let exps = |x: &Monomial| -> Vec<usize> {
            (1..=n).map(|i| x.indices.iter().filter(|&&v| v == i).count()).collect()
        };
        let (ea, eb) = (exps(a), exps(b));
        match (0..n).find(|&i| ea[i] != eb[i]) {
            None => Ordering::Equal,
            Some(i) if ea[i] > eb[i] => Ordering::Less,
            Some(_) => Ordering::Greater,
        }
    }

    #[test]
    fn order_matches_exponent_definition() {
        let n = 4;
        let all: Vec<Monomial> = face_monomial_basis(&SimplicialComplex::closure_of(n, &[KSubset::digits("1234")]).unwrap(), 3).monomials;
        for a in &all {
            for b in &all {
                assert_eq!(y_monomial_order(a, b).unwrap(), exponent_order(a, b, n));
            }
        }
    }

    #[test]
    fn face_basis_examples() {
        let b = face_monomial_basis(&closure(2, 2, "12"), 2);
        assert_eq!(b.monomials, vec![m(&[1, 1]), m(&[1, 2]), m(&[2, 2])]);
        let points = SimplicialComplex::closure_of(2, &[KSubset::digits("1"), KSubset::digits("2")]).unwrap();
        assert_eq!(face_monomial_basis(&points, 2).monomials, vec![m(&[1, 1]), m(&[2, 2])]);
        let k = closure(4, 2, "12 34");
        assert_eq!(face_monomial_basis(&k, 1).len(), 4);
    }

    #[test]
    fn expansion_examples() {
        let y = forms(4, 7);
        let k = closure(4, 2, "12 34");
        let basis = face_monomial_basis(&k, 1);
        let v = expand_y_monomial(&m(&[3]), &y, &basis).unwrap();
        let row: Vec<u64> = (1..=4).map(|j| *y.coefficient(3, j)).collect();
        assert_eq!(v, row);

        let full = SimplicialComplex::closure_of(3, &[KSubset::digits("123")]).unwrap();
        let basis = face_monomial_basis(&full, 2);
        let v = expand_y_monomial(&m(&[1, 2]), &y_small(), &basis).unwrap();
        let poly = expand_polynomial(&m(&[1, 2]), &y_small());
        assert_eq!(v.len(), poly.len());

        let f = PrimeField::mersenne61();
        let id = GenericLinearForms::from_matrix(FieldMatrix::identity(f, 4)).unwrap();
        let basis = face_monomial_basis(&k, 2);
        for mono in &basis.monomials {
            let v = expand_y_monomial(mono, &id, &basis).unwrap();
            let pos = basis.position(mono).unwrap();
            for (i, c) in v.iter().enumerate() {
                assert_eq!(*c, u64::from(i == pos));
            }
        }
        assert!(expand_y_monomial(&m(&[1, 3]), &id, &basis).unwrap().iter().all(|&c| c == 0));
        assert!(expand_y_monomial(&m(&[1]), &id, &basis).is_err());
    }

    fn y_small() -> GenericLinearForms {
        forms(3, 1)
    }

    /// Brute-force GIN: expand every candidate independently and test rank
    /// growth with whole-matrix ranks.
    fn gin_brute(k: &SimplicialComplex, d: usize, y: &GenericLinearForms) -> Vec<Monomial> {
        let basis = face_monomial_basis(k, d);
        let all = face_monomial_basis(
            &SimplicialComplex::closure_of(k.n(), &[KSubset::from_bits((1u64 << k.n()) - 1)]).unwrap(),
            d,
        )
        .monomials;
        let f = *y.field();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut out = Vec::new();
        let rank = |rows: &Vec<Vec<u64>>| {
            if rows.is_empty() || basis.is_empty() {
                0
            } else {
                FieldMatrix::from_rows(f, rows.clone()).rank()
            }
        };
        for cand in all {
            let v = expand_y_monomial(&cand, y, &basis).unwrap();
            let before = rank(&rows);
            rows.push(v);
            if rank(&rows) > before {
                out.push(cand);
            } else {
                rows.pop();
            }
        }
        out
    }

    #[test]
    fn gin_matches_brute_force() {
        let cases = [
            closure(3, 2, "12 13"),
            closure(4, 2, "12 34"),
            closure(5, 2, "14 15 45"),
            closure(4, 3, "123 234"),
            closure(5, 3, "123 145 245"),
        ];
        for (i, k) in cases.iter().enumerate() {
            let y = forms(k.n(), i as u64);
            for d in 1..=4 {
                assert_eq!(gin_degree(k, d, &y).unwrap(), gin_brute(k, d, &y), "case {i} d={d}");
            }
        }
    }

    #[test]
    fn gin_examples() {
        let y = forms(5, 3);
        let k = closure(5, 2, "12 23 45");
        let deg1 = gin_degree(&k, 1, &y).unwrap();
        assert_eq!(deg1, (1..=5).map(|i| m(&[i])).collect::<Vec<_>>());

        let y = forms(3, 4);
        let k = closure(3, 2, "12 13");
        let deg2 = gin_degree(&k, 2, &y).unwrap();
        assert_eq!(deg2, vec![m(&[1, 1]), m(&[1, 2]), m(&[1, 3]), m(&[2, 2]), m(&[2, 3])]);

        let y = forms(5, 5);
        let h = UniformHypergraph::from_digits(5, 2, "12 13 14 15 23 24").unwrap();
        let k = SimplicialComplex::downward_closure(&h);
        let mut expect: Vec<Monomial> = (1..=5).map(|i| m(&[1, i])).collect();
        expect.extend(h.iter().map(|&e| squaring(e)));
        expect.sort();
        let got = gin_degree(&k, 2, &y).unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn unsquare_examples() {
        assert_eq!(unsquare(&m(&[2, 2])).unwrap(), KSubset::digits("12"));
        assert_eq!(unsquare(&m(&[2, 3])).unwrap(), KSubset::digits("13"));
        assert_eq!(unsquare(&m(&[3, 4, 5])).unwrap(), KSubset::digits("135"));
        assert!(matches!(unsquare(&m(&[1, 2])), Err(Error::Unsquarable(_))));
        for k in 1..=4 {
            for s in enumerate_k_subsets(7, k) {
                assert_eq!(unsquare(&squaring(s)).unwrap(), s);
            }
        }
        assert_eq!(squaring(KSubset::digits("12")), m(&[2, 2]));
        assert_eq!(squaring(KSubset::digits("13")), m(&[2, 3]));
    }

    #[test]
    fn shifting_examples() {
        let y = forms(5, 8);
        let shifted = closure(5, 2, "12 13 23");
        assert_eq!(symmetric_shift_complex(&shifted, &y).unwrap(), shifted);
        let path = closure(3, 2, "13 23");
        assert_eq!(symmetric_shift_complex(&path, &forms(3, 2)).unwrap(), closure(3, 2, "12 13"));
        let tri = closure(5, 2, "14 15 45");
        assert_eq!(symmetric_shift_complex(&tri, &y).unwrap(), shifted);

        let h = |s| UniformHypergraph::from_digits(5, 2, s).unwrap();
        assert_eq!(symmetric_shift_uniform(&h("14 15 45"), &y).unwrap(), h("12 13 23"));
        assert_eq!(symmetric_shift_uniform(&h("13 34 25 45"), &y).unwrap(), h("12 13 14 15"));
        assert_eq!(symmetric_shift_uniform(&h("12 13 14 23"), &y).unwrap(), h("12 13 14 23"));
    }

    #[test]
    fn singular_draws_are_replaced() {
        let f = PrimeField::new(2).unwrap();
        for seed in 0..20 {
            let y = GenericLinearForms::sample_in(f, 4, seed);
            assert_eq!(y.coefficients().rank(), 4);
        }
    }
}
