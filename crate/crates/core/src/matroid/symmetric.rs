//! The represented matroid `N'(H)` for graphs under symmetric shifting.
//!
//! `Y(B, H)` has rows `x₁², .., xₙ²` followed by the monomials `x_a x_b` of
//! the edges of `B`, and columns `y₁y₁, .., y₁yₙ` followed by the squared
//! forms of the edges of `H`. The entry at `(x_S, y_T)` is the coefficient of
//! `x_S` in the full expansion of `y_T`.

use crate::combinatorics::UniformHypergraph;
use crate::error::{Error, Result};
use crate::linalg::{Field, FieldMatrix};
use crate::symmetric::{expand_polynomial, squaring, GenericLinearForms, Monomial};

fn check_graphs(b: &UniformHypergraph, h: &UniformHypergraph) -> Result<()> {
    for g in [b, h] {
        if g.k() != 2 {
            return Err(Error::NotApplicable(format!("Y(B,H) needs graphs, got uniformity {}", g.k())));
        }
    }
    if b.n() != h.n() {
        return Err(Error::InvalidHypergraph(format!("B on [{}] and H on [{}]", b.n(), h.n())));
    }
    Ok(())
}

/// `Y(B, H)`, an `(n + |B|) x (n + |H|)` matrix.
pub fn y_matrix<F: Field>(
    b: &UniformHypergraph,
    h: &UniformHypergraph,
    y: &GenericLinearForms<F>,
) -> Result<FieldMatrix<F>> {
    check_graphs(b, h)?;
    let n = h.n();
    if y.n() != n {
        return Err(Error::InvalidHypergraph(format!("graphs on [{n}] with {} linear forms", y.n())));
    }
    let rows: Vec<Monomial> = (1..=n)
        .map(|i| Monomial::of(&[i, i]))
        .chain(b.iter().map(|e| Monomial::of(&e.elements())))
        .collect();
    let columns = (1..=n)
        .map(|i| Monomial::of(&[1, i]))
        .chain(h.iter().map(|&e| squaring(e)));
    let f = y.field();
    let mut m = FieldMatrix::zeros(f.clone(), rows.len(), n + h.len());
    for (c, col) in columns.enumerate() {
        let poly = expand_polynomial(&col, y);
        for (r, row) in rows.iter().enumerate() {
            if let Some(v) = poly.get(row) {
                m.set(r, c, v.clone());
            }
        }
    }
    Ok(m)
}

/// Whether `B` is a basis of `N'(H)`: `Y(B, H)` has full row rank.
pub fn nprime_is_basis<F: Field>(
    b: &UniformHypergraph,
    h: &UniformHypergraph,
    y: &GenericLinearForms<F>,
) -> Result<bool> {
    check_graphs(b, h)?;
    if b.len() != h.len() {
        return Err(Error::CardinalityMismatch {
            left: b.len(),
            right: h.len(),
        });
    }
    Ok(y_matrix(b, h, y)?.rank() == h.n() + b.len())
}
