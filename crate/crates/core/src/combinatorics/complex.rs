use std::fmt;

use crate::combinatorics::subset::KSubset;
use crate::combinatorics::UniformHypergraph;
use crate::error::{Error, Result};
use crate::linalg::{rank_in_place, Field, PrimeField};

/// Face counts `(f_{-1}, f_0, f_1, ...)`; `f_i` counts faces of dimension `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<usize>);

/// Reduced Betti numbers `(β_0, β_1, ..., β_dim)`.
///
/// Reduced throughout: a single point has `β_0 = 0` and two points have
/// `β_0 = 1`. The complex `{∅}` has an empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector(pub Vec<usize>);

fn fmt_tuple(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    write!(f, "({})", parts.join(","))
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

/// A simplicial complex on `[n]`, always containing the empty face.
///
/// `layers[s]` holds the faces with `s` vertices in lex order; trailing empty
/// layers are trimmed, so `layers.len() - 2` is the dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    layers: Vec<Vec<KSubset>>,
}

impl SimplicialComplex {
    /// `{∅}` on `[n]`.
    pub fn void_face(n: usize) -> Self {
        SimplicialComplex {
            n,
            layers: vec![vec![KSubset::EMPTY]],
        }
    }

    /// Validates downward closure of an explicit face list. The empty face
    /// is added if missing.
    pub fn from_faces(n: usize, faces: Vec<KSubset>) -> Result<Self> {
        let mut layers: Vec<Vec<KSubset>> = vec![vec![KSubset::EMPTY]];
        for f in faces {
            if f.last().is_some_and(|m| m > n) {
                return Err(Error::InvalidComplex(format!("face {f} leaves [{n}]")));
            }
            if f.is_empty() {
                continue;
            }
            if layers.len() <= f.len() {
                layers.resize(f.len() + 1, Vec::new());
            }
            layers[f.len()].push(f);
        }
        for layer in &mut layers {
            layer.sort_unstable();
            layer.dedup();
        }
        let k = SimplicialComplex { n, layers };
        k.check_closed()?;
        Ok(k)
    }

    /// Assembles a complex from per-size layers and checks downward closure.
    pub fn from_layers(n: usize, mut layers: Vec<Vec<KSubset>>) -> Result<Self> {
        if layers.is_empty() {
            layers.push(vec![KSubset::EMPTY]);
        }
        for layer in &mut layers {
            layer.sort_unstable();
        }
        while layers.len() > 1 && layers.last().is_some_and(Vec::is_empty) {
            layers.pop();
        }
        let k = SimplicialComplex { n, layers };
        for (s, layer) in k.layers.iter().enumerate() {
            if layer.iter().any(|f| f.len() != s || f.last().is_some_and(|m| m > n)) {
                return Err(Error::InvalidComplex(format!("layer {s} is malformed")));
            }
        }
        if k.layers[0] != [KSubset::EMPTY] {
            return Err(Error::InvalidComplex("missing the empty face".into()));
        }
        k.check_closed()?;
        Ok(k)
    }

    fn check_closed(&self) -> Result<()> {
        for s in 2..self.layers.len() {
            for f in &self.layers[s] {
                if let Some(g) = f.facets().find(|&g| !self.contains(g)) {
                    return Err(Error::InvalidComplex(format!(
                        "face {f} present but its subset {g} is not"
                    )));
                }
            }
        }
        Ok(())
    }

    /// All subsets of the given generators.
    pub fn closure_of(n: usize, generators: &[KSubset]) -> Result<Self> {
        let mut faces = Vec::new();
        for &g in generators {
            if g.last().is_some_and(|m| m > n) {
                return Err(Error::InvalidComplex(format!("face {g} leaves [{n}]")));
            }
            let bits = g.bits();
            let mut sub = bits;
            loop {
                faces.push(KSubset::from_bits(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        Self::from_faces(n, faces)
    }

    /// `K(H)`: the smallest complex containing every edge of `H`. Vertices of
    /// `[n]` outside all edges are not faces; see [`Self::with_all_vertices`].
    pub fn downward_closure(h: &UniformHypergraph) -> Self {
        Self::closure_of(h.n(), h.edges()).expect("edges lie in [n]")
    }

    /// Adds every vertex of `[n]` as a face.
    pub fn with_all_vertices(&self) -> Self {
        let mut layers = self.layers.clone();
        if layers.len() < 2 {
            layers.push(Vec::new());
        }
        layers[1] = (1..=self.n).map(|v| KSubset::of(&[v])).collect();
        SimplicialComplex { n: self.n, layers }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.layers.len() as isize - 2
    }

    /// Faces with exactly `size` vertices.
    pub fn layer(&self, size: usize) -> &[KSubset] {
        self.layers.get(size).map_or(&[], Vec::as_slice)
    }

    pub fn layers(&self) -> &[Vec<KSubset>] {
        &self.layers
    }

    /// Faces of the given size as a uniform hypergraph on `[n]`.
    pub fn uniform_layer(&self, size: usize) -> UniformHypergraph {
        UniformHypergraph::from_sorted_unchecked(self.n, size, self.layer(size).to_vec())
    }

    pub fn faces(&self) -> impl Iterator<Item = KSubset> + '_ {
        self.layers.iter().flatten().copied()
    }

    pub fn num_faces(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, f: KSubset) -> bool {
        self.layer(f.len()).binary_search(&f).is_ok()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.layers.iter().map(Vec::len).collect())
    }

    pub fn is_shifted(&self) -> bool {
        (1..self.layers.len()).all(|s| self.uniform_layer(s).is_shifted())
    }

    /// `β_i = |{S ∈ K_i : S ∪ {1} ∉ K}|`, valid for shifted complexes only.
    pub fn betti_shifted(&self) -> Result<BettiVector> {
        if !self.is_shifted() {
            return Err(Error::NotShifted);
        }
        let counts = (1..self.layers.len())
            .map(|s| {
                self.layers[s]
                    .iter()
                    .filter(|f| !self.contains(f.with(1)))
                    .count()
            })
            .collect();
        Ok(BettiVector(counts))
    }

    /// Reduced Betti numbers over `F_p` from ranks of boundary matrices.
    pub fn betti_homology(&self, p: u64) -> Result<BettiVector> {
        let field = PrimeField::new(p)?;
        Ok(self.betti_over(&field))
    }

    pub(crate) fn betti_over(&self, field: &PrimeField) -> BettiVector {
        let top = self.layers.len() - 1;
        // ranks[s] = rank of the boundary map from faces of size s to size s - 1
        let mut ranks = vec![0usize; top + 2];
        for (s, rank) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
            *rank = boundary_rank(field, &self.layers[s], &self.layers[s - 1]);
        }
        let counts = (1..=top)
            .map(|s| self.layers[s].len() - ranks[s] - ranks[s + 1])
            .collect();
        BettiVector(counts)
    }

    /// Cone with a new first vertex: the result lives on `[n + 1]`, the apex
    /// is vertex 1 and all old labels move up by one.
    pub fn cone(&self) -> Self {
        let mut layers: Vec<Vec<KSubset>> = vec![Vec::new(); self.layers.len() + 1];
        for (s, layer) in self.layers.iter().enumerate() {
            for f in layer {
                let up = f.shift_up();
                layers[s].push(up);
                layers[s + 1].push(up.with(1));
            }
        }
        for layer in &mut layers {
            layer.sort_unstable();
        }
        SimplicialComplex {
            n: self.n + 1,
            layers,
        }
    }

    /// The image under a vertex permutation of `[n]`.
    pub fn apply_permutation(&self, pi: &crate::VertexPermutation) -> Result<Self> {
        if pi.n() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "permutation of [{}] applied to a complex on [{}]",
                pi.n(),
                self.n
            )));
        }
        let layers = self
            .layers
            .iter()
            .map(|l| {
                let mut v: Vec<KSubset> = l.iter().map(|&f| pi.apply_subset(f)).collect();
                v.sort_unstable();
                v
            })
            .collect();
        Ok(SimplicialComplex { n: self.n, layers })
    }

    /// Whether every face of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.faces().all(|f| other.contains(f))
    }
}

fn boundary_rank(field: &PrimeField, faces: &[KSubset], lower: &[KSubset]) -> usize {
    if faces.is_empty() || lower.is_empty() {
        return 0;
    }
    let cols = lower.len();
    let mut a = vec![0u64; faces.len() * cols];
    for (r, f) in faces.iter().enumerate() {
        for (j, v) in f.iter().enumerate() {
            let g = f.without(v);
            let c = lower.binary_search(&g).expect("complex is closed");
            a[r * cols + c] = if j % 2 == 0 { 1 } else { field.neg(&1) };
        }
    }
    rank_in_place(field, faces.len(), cols, &mut a)
}

/// Top reduced Betti number of `K(G)` for a `k`-uniform `G`:
/// `|G| - rank ∂_{k-1}`, since `K(G)` has no larger faces.
pub fn top_betti(field: &PrimeField, g: &UniformHypergraph) -> usize {
    let k = g.k();
    if k == 0 {
        return 0;
    }
    let mut lower: Vec<KSubset> = g.iter().flat_map(|e| e.facets()).collect();
    lower.sort_unstable();
    lower.dedup();
    g.len() - boundary_rank(field, g.edges(), &lower)
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .faces()
            .map(|s| {
                if s.is_empty() {
                    "∅".to_string()
                } else if self.n <= 9 {
                    s.iter().map(|v| v.to_string()).collect()
                } else {
                    s.to_string()
                }
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[n={}]{}", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::MERSENNE_61;

    fn h(n: usize, k: usize, s: &str) -> UniformHypergraph {
        UniformHypergraph::from_digits(n, k, s).unwrap()
    }

    fn closure(n: usize, k: usize, s: &str) -> SimplicialComplex {
        SimplicialComplex::downward_closure(&h(n, k, s))
    }

    fn faces_of(k: &SimplicialComplex) -> Vec<String> {
        k.faces().map(|f| f.to_line()).collect()
    }

    #[test]
    fn closure_examples() {
        let k = closure(3, 3, "123");
        assert_eq!(faces_of(&k), ["", "1", "2", "3", "1 2", "1 3", "2 3", "1 2 3"]);
        let e = SimplicialComplex::downward_closure(&UniformHypergraph::empty(4, 2));
        assert_eq!(e, SimplicialComplex::void_face(4));
        let k = closure(4, 2, "12 34");
        assert_eq!(faces_of(&k), ["", "1", "2", "3", "4", "1 2", "3 4"]);
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(closure(3, 3, "123").f_vector(), FVector(vec![1, 3, 3, 1]));
        assert_eq!(closure(3, 2, "12 13 23").f_vector(), FVector(vec![1, 3, 3]));
        assert_eq!(SimplicialComplex::void_face(3).f_vector(), FVector(vec![1]));
    }

    #[test]
    fn betti_shifted_examples() {
        let circle = closure(3, 2, "12 13 23");
        assert_eq!(circle.betti_shifted().unwrap(), BettiVector(vec![0, 1]));
        let star = closure(6, 2, "12 13 14 15 16");
        assert_eq!(star.betti_shifted().unwrap(), BettiVector(vec![0, 0]));
        // the isolated vertices 4 and 5 must be faces for β_0 = 2
        let with_points = closure(5, 2, "12 13 23").with_all_vertices();
        assert_eq!(with_points.betti_shifted().unwrap(), BettiVector(vec![2, 1]));
        assert_eq!(with_points.betti_homology(MERSENNE_61).unwrap(), BettiVector(vec![2, 1]));
        assert_eq!(closure(3, 2, "13").betti_shifted(), Err(Error::NotShifted));
    }

    #[test]
    fn betti_homology_examples() {
        let p = MERSENNE_61;
        assert_eq!(closure(3, 2, "12 13 23").betti_homology(p).unwrap(), BettiVector(vec![0, 1]));
        assert_eq!(closure(3, 3, "123").betti_homology(p).unwrap(), BettiVector(vec![0, 0, 0]));
        let two_points = SimplicialComplex::closure_of(2, &[KSubset::of(&[1]), KSubset::of(&[2])]).unwrap();
        assert_eq!(two_points.betti_homology(p).unwrap(), BettiVector(vec![1]));
        let octahedron_free = closure(4, 3, "123 124 134 234");
        assert_eq!(octahedron_free.betti_homology(2).unwrap(), BettiVector(vec![0, 0, 1]));
    }

    #[test]
    fn cone_f_vector_identity() {
        let k = closure(5, 2, "12 34 45");
        let c = k.cone();
        let f = k.f_vector().0;
        let fc = c.f_vector().0;
        for i in 0..fc.len() {
            let here = f.get(i).copied().unwrap_or(0);
            let below = if i == 0 { 0 } else { f[i - 1] };
            assert_eq!(fc[i], here + below);
        }
        assert_eq!(c.uniform_layer(3), h(5, 2, "12 34 45").cone().on_vertices(6).unwrap());
    }

    #[test]
    fn rejects_open_families() {
        assert!(SimplicialComplex::from_faces(3, vec![KSubset::digits("12")]).is_err());
        assert!(SimplicialComplex::from_faces(
            3,
            vec![KSubset::digits("1"), KSubset::digits("2"), KSubset::digits("12")]
        )
        .is_ok());
    }

    #[test]
    fn top_betti_of_triangle_boundary() {
        let f = PrimeField::mersenne61();
        assert_eq!(top_betti(&f, &h(5, 2, "14 15 45")), 1);
        assert_eq!(top_betti(&f, &h(5, 2, "12 13 14")), 0);
    }
}
