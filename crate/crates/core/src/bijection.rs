//! The bijection between sets independent in `M` and spanning in `M′` and
//! the compatible family `D(M, M′, <)`.
//!
//! Forward: `B ↦ (B \ Int_M′(B)) ∪ Ext_M(B)`.
//! Backward: `X ↦ (X \ B_min((M|X)*)) ∪ B_min(M′/X)`.

use crate::activities::{externally_active, internally_active};
use crate::compatible::is_in_family;
use crate::error::{Error, Result};
use crate::perspective::Perspective;
use crate::polynomial::{Exponents, Polynomial};
use crate::setcore::Subset;

/// One row of the bijection table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BijectionRow {
    pub basis: Subset,
    /// `Int_M′(B)`.
    pub internal: Subset,
    /// `Ext_M(B)`.
    pub external: Subset,
    /// The image `f(B)` in `D(M, M′, <)`.
    pub compatible: Subset,
    pub exponents: Exponents,
}

impl BijectionRow {
    /// The row's monomial as a polynomial with coefficient one.
    pub fn term(&self) -> Polynomial {
        Polynomial::term(1, self.exponents)
    }

    /// The Boolean interval `[B \ Int, B ∪ Ext]`.
    pub fn interval(&self) -> (Subset, Subset) {
        (self.basis.difference(self.internal), self.basis.union(self.external))
    }
}

pub fn is_independent_spanning(p: &Perspective, b: Subset) -> bool {
    p.matroid().is_independent(b) && p.quotient().is_spanning(b)
}

/// All sets independent in `M` and spanning in `M′`, by size then
/// lexicographically.
pub fn independent_spanning_sets(p: &Perspective) -> Vec<Subset> {
    let mut sets: Vec<Subset> = p
        .matroid()
        .independent_sets()
        .into_iter()
        .filter(|&b| p.quotient().is_spanning(b))
        .collect();
    sets.sort_by(|&a, &b| p.ground().size_then_lex(a, b));
    sets
}

pub(crate) fn forward_unchecked(p: &Perspective, b: Subset) -> Subset {
    b.difference(internally_active(p.quotient(), b))
        .union(externally_active(p.matroid(), b))
}

pub(crate) fn backward_unchecked(p: &Perspective, x: Subset) -> Subset {
    let removed = p.matroid().restrict(x).dual().min_basis();
    let added = p.quotient().contract(x).min_basis();
    x.difference(removed).union(added)
}

/// `f(B)`. Fails unless `B` is independent in `M` and spanning in `M′`.
pub fn forward(p: &Perspective, b: Subset) -> Result<Subset> {
    p.ground().check(b)?;
    if !is_independent_spanning(p, b) {
        return Err(Error::Precondition(format!(
            "{b} is not independent in M and spanning in M′"
        )));
    }
    Ok(forward_unchecked(p, b))
}

/// `g(X)`. Fails unless `X ∈ D(M, M′, <)`.
pub fn backward(p: &Perspective, x: Subset) -> Result<Subset> {
    p.ground().check(x)?;
    if !is_in_family(p, x) {
        return Err(Error::Precondition(format!("{x} is not in the compatible family")));
    }
    Ok(backward_unchecked(p, x))
}

pub fn row(p: &Perspective, b: Subset) -> Result<BijectionRow> {
    let internal = internally_active(p.quotient(), b);
    let external = externally_active(p.matroid(), b);
    Ok(BijectionRow {
        basis: b,
        internal,
        external,
        compatible: forward_unchecked(p, b),
        exponents: Exponents::new(internal.len() as u32, external.len() as u32, p.rank_defect(b)? as u32),
    })
}

/// One row per set independent in `M` and spanning in `M′`, ordered by
/// size and then lexicographically.
pub fn bijection_table(p: &Perspective) -> Result<Vec<BijectionRow>> {
    independent_spanning_sets(p).into_iter().map(|b| row(p, b)).collect()
}
