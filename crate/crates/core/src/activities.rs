//! Internal and external activity.
//!
//! `e ∉ X` is externally active when `X ∪ e` contains a circuit whose least
//! element is `e`; `e ∈ X` is internally active when `(E \ X) ∪ e` contains
//! such a cocircuit. Both work for arbitrary `X`.

use crate::matroid::Matroid;
use crate::setcore::{GroundSet, Subset};

/// Least elements `e ∉ x` of circuits `C` with `C \ e ⊆ x`.
fn active_minima(family: &[Subset], ground: &GroundSet, x: Subset) -> Subset {
    family.iter().fold(Subset::EMPTY, |acc, &c| match ground.least(c) {
        Some(e) if !x.contains(e) && c.without(e).is_subset(x) => acc.with(e),
        _ => acc,
    })
}

/// `Ext_M(X)`.
pub fn externally_active(m: &Matroid, x: Subset) -> Subset {
    active_minima(m.circuits(), m.ground(), x.intersection(m.elements()))
}

/// `Int_M(X)`.
pub fn internally_active(m: &Matroid, x: Subset) -> Subset {
    let outside = m.elements().difference(x);
    active_minima(m.cocircuits(), m.ground(), outside)
}
