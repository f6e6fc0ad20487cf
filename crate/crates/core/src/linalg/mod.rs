//! Exact linear algebra over prime fields and the rationals.

mod echelon;
mod field;
mod matrix;

pub use echelon::{greedy_column_basis, EchelonState};
pub use field::{
    derive_seed, is_prime, seed_schedule, Field, FieldConfig, PrimeField, RationalField,
    MERSENNE_61,
};
pub use matrix::FieldMatrix;
pub(crate) use matrix::{determinant_in_place, rank_in_place};
