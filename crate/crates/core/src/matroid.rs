//! Matroids stored by their basis family.
//!
//! A [`Matroid`] lives on a subset of a labelled [`GroundSet`] so minors keep
//! the original labels and the global order. Circuits and cocircuits are
//! derived on first use and cached.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::setcore::{GroundSet, Subset};

#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    elements: Subset,
    /// Sorted by bit value, no duplicates, all of size `rank`.
    bases: Vec<Subset>,
    rank: usize,
    circuits: OnceLock<Vec<Subset>>,
    cocircuits: OnceLock<Vec<Subset>>,
}

impl Matroid {
    /// Validated construction on the whole ground set.
    pub fn from_bases(ground: &GroundSet, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        Matroid::from_bases_on(ground, ground.full(), bases)
    }

    /// Validated construction on `elements ⊆ ground`.
    ///
    /// Checks that the family is nonempty, lies inside `elements`, is
    /// equicardinal and satisfies basis exchange.
    pub fn from_bases_on(
        ground: &GroundSet,
        elements: Subset,
        bases: impl IntoIterator<Item = Subset>,
    ) -> Result<Self> {
        ground.check(elements)?;
        let bases = canonical(bases);
        let Some(&first) = bases.first() else {
            return Err(Error::Axiom("a matroid needs at least one basis".into()));
        };
        for &b in &bases {
            if !b.is_subset(elements) {
                return Err(Error::ElementOutOfRange {
                    element: b.difference(elements).max_label(),
                    size: ground.size(),
                });
            }
            if b.len() != first.len() {
                return Err(Error::Axiom(format!("bases {first} and {b} have different sizes")));
            }
        }
        check_exchange(&bases)?;
        Ok(Matroid::trusted(ground.clone(), elements, bases))
    }

    pub fn from_circuits(ground: &GroundSet, circuits: impl IntoIterator<Item = Subset>) -> Result<Self> {
        Matroid::from_circuits_on(ground, ground.full(), circuits)
    }

    /// Validated construction from a circuit family on `elements ⊆ ground`.
    ///
    /// Checks the antichain and circuit elimination axioms; bases are the
    /// maximal circuit-free subsets.
    pub fn from_circuits_on(
        ground: &GroundSet,
        elements: Subset,
        circuits: impl IntoIterator<Item = Subset>,
    ) -> Result<Self> {
        ground.check(elements)?;
        let circuits = canonical(circuits);
        for &c in &circuits {
            if c.is_empty() {
                return Err(Error::Axiom("the empty set cannot be a circuit".into()));
            }
            if !c.is_subset(elements) {
                return Err(Error::ElementOutOfRange {
                    element: c.difference(elements).max_label(),
                    size: ground.size(),
                });
            }
        }
        for (i, &c1) in circuits.iter().enumerate() {
            for &c2 in &circuits[i + 1..] {
                if c1.is_subset(c2) || c2.is_subset(c1) {
                    return Err(Error::Axiom(format!("circuits {c1} and {c2} are comparable")));
                }
                for e in c1.intersection(c2).iter() {
                    let pool = c1.union(c2).without(e);
                    if !circuits.iter().any(|c3| c3.is_subset(pool)) {
                        return Err(Error::Axiom(format!(
                            "circuit elimination fails for {c1} and {c2} at {e}"
                        )));
                    }
                }
            }
        }
        let circuit_free = |x: Subset| !circuits.iter().any(|c| c.is_subset(x));
        let rank = elements
            .iter()
            .fold(Subset::EMPTY, |kept, e| {
                let next = kept.with(e);
                if circuit_free(next) {
                    next
                } else {
                    kept
                }
            })
            .len();
        let bases = elements.subsets().filter(|s| s.len() == rank && circuit_free(*s));
        let m = Matroid::trusted(ground.clone(), elements, canonical(bases));
        let _ = m.circuits.set(circuits);
        Ok(m)
    }

    /// Every subset of `ground` independent.
    pub fn free(ground: &GroundSet) -> Self {
        Matroid::trusted(ground.clone(), ground.full(), vec![ground.full()])
    }

    /// Every element a loop.
    pub fn rank_zero(ground: &GroundSet) -> Self {
        Matroid::trusted(ground.clone(), ground.full(), vec![Subset::EMPTY])
    }

    /// The uniform matroid `U_{r,n}` on the whole ground set.
    pub fn uniform(ground: &GroundSet, rank: usize) -> Result<Self> {
        if rank > ground.size() {
            return Err(Error::Precondition(format!(
                "uniform rank {rank} exceeds ground set size {}",
                ground.size()
            )));
        }
        let bases = ground.full().subsets().filter(|s| s.len() == rank);
        Ok(Matroid::trusted(ground.clone(), ground.full(), canonical(bases)))
    }

    /// Skips axiom checks. Only for families known to be basis families
    /// (duals, minors, reorderings).
    pub(crate) fn trusted(ground: GroundSet, elements: Subset, bases: Vec<Subset>) -> Self {
        debug_assert!(!bases.is_empty());
        let rank = bases[0].len();
        Matroid {
            ground,
            elements,
            bases,
            rank,
            circuits: OnceLock::new(),
            cocircuits: OnceLock::new(),
        }
    }

    /// The same matroid with a different total order on the ground set.
    pub fn with_order(&self, ground: &GroundSet) -> Result<Self> {
        if ground.size() != self.ground.size() {
            return Err(Error::GroundMismatch);
        }
        let mut m = self.clone();
        m.ground = ground.clone();
        Ok(m)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// The elements this matroid lives on.
    pub fn elements(&self) -> Subset {
        self.elements
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    /// `r(M)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `r_M(X)`: the largest intersection of `X` with a basis. Elements of
    /// `X` outside the matroid are ignored.
    pub fn rank_of(&self, x: Subset) -> usize {
        self.bases.iter().map(|b| b.intersection(x).len()).max().unwrap_or(0)
    }

    /// Rank of `X` in the dual: `|X| - r(M) + r_M(E \ X)`.
    pub fn corank_of(&self, x: Subset) -> usize {
        let x = x.intersection(self.elements);
        x.len() + self.rank_of(self.elements.difference(x)) - self.rank
    }

    pub fn is_independent(&self, x: Subset) -> bool {
        self.bases.iter().any(|b| x.is_subset(*b))
    }

    pub fn is_spanning(&self, x: Subset) -> bool {
        self.rank_of(x) == self.rank
    }

    pub fn is_basis(&self, x: Subset) -> bool {
        self.bases.binary_search(&x).is_ok()
    }

    /// Every independent subset, in increasing bit value.
    pub fn independent_sets(&self) -> Vec<Subset> {
        let mut all: Vec<Subset> = self
            .bases
            .iter()
            .flat_map(|b| b.subsets())
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        all.sort_unstable();
        all
    }

    /// All circuits, sorted by bit value.
    ///
    /// Every circuit is the fundamental circuit of some element with respect
    /// to some basis, so scanning basis/element pairs finds them all.
    pub fn circuits(&self) -> &[Subset] {
        self.circuits.get_or_init(|| {
            let lookup: HashSet<Subset> = self.bases.iter().copied().collect();
            let mut found = BTreeSet::new();
            for &b in &self.bases {
                for e in self.elements.difference(b).iter() {
                    let c = b
                        .iter()
                        .filter(|&f| lookup.contains(&b.without(f).with(e)))
                        .fold(Subset::singleton(e), Subset::with);
                    found.insert(c);
                }
            }
            found.into_iter().collect()
        })
    }

    /// Circuits of the dual matroid.
    pub fn cocircuits(&self) -> &[Subset] {
        self.cocircuits.get_or_init(|| self.dual().circuits().to_vec())
    }

    /// Circuits contained in `x`.
    pub fn circuits_within(&self, x: Subset) -> Vec<Subset> {
        self.circuits().iter().copied().filter(|c| c.is_subset(x)).collect()
    }

    pub fn loops(&self) -> Subset {
        self.elements
            .difference(self.bases.iter().fold(Subset::EMPTY, |acc, b| acc.union(*b)))
    }

    pub fn coloops(&self) -> Subset {
        self.bases.iter().fold(self.elements, |acc, b| acc.intersection(*b))
    }

    /// `M*`: bases are complements of bases of `M`.
    pub fn dual(&self) -> Matroid {
        let bases = self.bases.iter().map(|b| self.elements.difference(*b));
        let d = Matroid::trusted(self.ground.clone(), self.elements, canonical(bases));
        if let Some(c) = self.cocircuits.get() {
            let _ = d.circuits.set(c.clone());
        }
        if let Some(c) = self.circuits.get() {
            let _ = d.cocircuits.set(c.clone());
        }
        d
    }

    /// `M|X`, living on `X ∩ E` with the inherited labels and order.
    pub fn restrict(&self, x: Subset) -> Matroid {
        let x = x.intersection(self.elements);
        let r = self.rank_of(x);
        let bases = self.bases.iter().map(|b| b.intersection(x)).filter(|b| b.len() == r);
        Matroid::trusted(self.ground.clone(), x, canonical(bases))
    }

    pub fn delete(&self, x: Subset) -> Matroid {
        self.restrict(self.elements.difference(x))
    }

    /// `M/X`, living on `E \ X`: the bases are `B \ X` for the bases `B`
    /// meeting `X` in a basis of `M|X`.
    pub fn contract(&self, x: Subset) -> Matroid {
        let x = x.intersection(self.elements);
        let r = self.rank_of(x);
        let bases = self
            .bases
            .iter()
            .filter(|b| b.intersection(x).len() == r)
            .map(|b| b.difference(x));
        Matroid::trusted(self.ground.clone(), self.elements.difference(x), canonical(bases))
    }

    /// The lexicographically least basis under the ground set's order,
    /// built greedily.
    pub fn min_basis(&self) -> Subset {
        self.ground
            .sorted(self.elements)
            .into_iter()
            .fold(Subset::EMPTY, |kept, e| {
                let next = kept.with(e);
                if self.is_independent(next) {
                    next
                } else {
                    kept
                }
            })
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.elements == other.elements && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("elements", &self.elements)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

fn canonical(family: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let mut v: Vec<Subset> = family.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn check_exchange(bases: &[Subset]) -> Result<()> {
    let lookup: HashSet<Subset> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for e in b1.difference(b2).iter() {
                let ok = b2
                    .difference(b1)
                    .iter()
                    .any(|f| lookup.contains(&b1.without(e).with(f)));
                if !ok {
                    return Err(Error::Axiom(format!("basis exchange fails for {b1} and {b2} at {e}")));
                }
            }
        }
    }
    Ok(())
}
