//! Compatible sets and the families `D(M, <)` and `D(M, M′, <)`.

use crate::matroid::Matroid;
use crate::perspective::Perspective;
use crate::setcore::Subset;

/// `X` is compatible with `M` when no circuit `C` meets `X` in exactly
/// `{min C}`.
pub fn is_compatible(m: &Matroid, x: Subset) -> bool {
    let ground = m.ground();
    !m.circuits().iter().any(|&c| {
        let meet = c.intersection(x);
        meet.len() == 1 && ground.least(c).is_some_and(|e| meet.contains(e))
    })
}

/// Membership in `D(M, M′, <)`: `X` compatible with `(M′)*` and `E \ X`
/// compatible with `M`.
pub fn is_in_family(p: &Perspective, x: Subset) -> bool {
    let q = p.quotient();
    let ground = p.ground();
    let cocompatible = !q.cocircuits().iter().any(|&c| {
        let meet = c.intersection(x);
        meet.len() == 1 && ground.least(c).is_some_and(|e| meet.contains(e))
    });
    cocompatible && is_compatible(p.matroid(), p.elements().difference(x))
}

/// `D(M, M′, <)` by enumerating every subset of `E`, sorted by size then
/// lexicographically under the ground set's order.
pub fn compatible_family(p: &Perspective) -> Vec<Subset> {
    let mut family: Vec<Subset> = p.elements().subsets().filter(|&x| is_in_family(p, x)).collect();
    family.sort_by(|&a, &b| p.ground().size_then_lex(a, b));
    family
}

/// `D(M, <)`, the family of the perspective `(M, M)`.
pub fn compatible_family_single(m: &Matroid) -> Vec<Subset> {
    compatible_family(&Perspective::identity(m.clone()))
}
