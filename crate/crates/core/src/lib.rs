//! Algebraic shifting of uniform hypergraphs and simplicial complexes.
//!
//! The crate computes exterior shifting (greedy lex column bases of compound
//! matrices) and symmetric shifting (generic initial monomials of the face
//! ring), and uses them to decide at desk scale whether a shifted hypergraph
//! is *matroidal*: whether the set of hypergraphs shifting onto it is the
//! basis set of a matroid.
//!
//! Genericity is simulated by sampling matrix entries uniformly from a large
//! prime field. Every shift is run under several independent seeds and the
//! results must agree exactly, see [`shift::ShiftEngine`].
//!
//! Module map:
//! - [`combinatorics`]: subsets, orders, shiftedness, complexes, Betti numbers.
//! - [`linalg`]: prime and rational fields, ranks, determinants, greedy bases.
//! - [`exterior`] and [`symmetric`]: the two shifting operators.
//! - [`shift`]: seeded engines with multi-seed consensus.
//! - [`matroid`]: preimages, the exchange axiom, violation constructions.
//! - [`verify`]: reproduction suites driving the acceptance checks.

pub mod combinatorics;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod matroid;
pub mod shift;
pub mod symmetric;
pub mod verify;

pub use combinatorics::{
    BettiVector, FVector, KSubset, SimplicialComplex, UniformHypergraph, VertexPermutation,
};
pub use error::{ConsensusFailure, Error, Result};
pub use linalg::{FieldConfig, PrimeField, RationalField};
pub use shift::{ShiftEngine, ShiftMode, Shifter};
