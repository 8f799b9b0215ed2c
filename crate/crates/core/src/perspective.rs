//! Matroid perspectives `(M, M′)`: every circuit of `M` is a union of
//! circuits of `M′`.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::setcore::{GroundSet, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perspective {
    matroid: Matroid,
    quotient: Matroid,
}

/// First circuit of `m` that is not covered by the circuits of `quotient`
/// it contains.
pub fn uncovered_circuit(m: &Matroid, quotient: &Matroid) -> Result<Option<Subset>> {
    if m.ground() != quotient.ground() || m.elements() != quotient.elements() {
        return Err(Error::GroundMismatch);
    }
    let qc = quotient.circuits();
    Ok(m.circuits().iter().copied().find(|&c| {
        let covered = qc
            .iter()
            .filter(|q| q.is_subset(c))
            .fold(Subset::EMPTY, |acc, q| acc.union(*q));
        covered != c
    }))
}

/// Whether `(m, quotient)` is a matroid perspective.
pub fn validate_perspective(m: &Matroid, quotient: &Matroid) -> Result<bool> {
    Ok(uncovered_circuit(m, quotient)?.is_none())
}

impl Perspective {
    pub fn new(matroid: Matroid, quotient: Matroid) -> Result<Self> {
        if let Some(circuit) = uncovered_circuit(&matroid, &quotient)? {
            return Err(Error::NotPerspective { circuit });
        }
        debug_assert!(matroid.rank() >= quotient.rank());
        Ok(Perspective { matroid, quotient })
    }

    /// `(M, M)`.
    pub fn identity(m: Matroid) -> Self {
        Perspective {
            quotient: m.clone(),
            matroid: m,
        }
    }

    /// `(M, 0)` with `0` the rank-zero matroid on the same elements.
    pub fn onto_rank_zero(m: Matroid) -> Self {
        let quotient = Matroid::trusted(m.ground().clone(), m.elements(), vec![Subset::EMPTY]);
        Perspective { matroid: m, quotient }
    }

    /// `M`.
    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// `M′`.
    pub fn quotient(&self) -> &Matroid {
        &self.quotient
    }

    pub fn ground(&self) -> &GroundSet {
        self.matroid.ground()
    }

    pub fn elements(&self) -> Subset {
        self.matroid.elements()
    }

    /// `((M′)*, M*)`, again a perspective.
    pub fn dual(&self) -> Perspective {
        Perspective {
            matroid: self.quotient.dual(),
            quotient: self.matroid.dual(),
        }
    }

    pub fn with_order(&self, ground: &GroundSet) -> Result<Perspective> {
        Ok(Perspective {
            matroid: self.matroid.with_order(ground)?,
            quotient: self.quotient.with_order(ground)?,
        })
    }

    /// `r(M) - r(M′) - (r_M(X) - r_M′(X))`, the `z` exponent.
    pub fn rank_defect(&self, x: Subset) -> Result<usize> {
        let total = self.matroid.rank() as isize - self.quotient.rank() as isize;
        let local = self.matroid.rank_of(x) as isize - self.quotient.rank_of(x) as isize;
        usize::try_from(total - local)
            .map_err(|_| Error::Inconsistent(format!("negative rank defect at {x}; not a perspective")))
    }
}
