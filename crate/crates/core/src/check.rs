//! Runnable property suite for one perspective: the four round trips
//! of the bijection, the interval partition, polynomial agreement across
//! methods and element orders, and the bivariate specializations.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bijection::{
    backward_unchecked, bijection_table, forward_unchecked, independent_spanning_sets, is_independent_spanning,
    BijectionRow,
};
use crate::compatible::{compatible_family, is_in_family};
use crate::error::Result;
use crate::matroid::Matroid;
use crate::perspective::{uncovered_circuit, Perspective};
use crate::setcore::GroundSet;
use crate::tutte::{
    specialize_m0, tutte, tutte_bivariate_activities, tutte_bivariate_compatible, tutte_m0_expansion, Method,
};

/// Number of shuffled orders tried by the order-invariance check.
pub const ORDER_TRIALS: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Summary on success, counterexample on failure.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    fn record(&mut self, name: &'static str, verdict: std::result::Result<String, String>) {
        let (passed, detail) = match verdict {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.outcomes.push(CheckOutcome { name, passed, detail });
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let tag = if o.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", o.name, o.detail)?;
        }
        let failed = self.failures().count();
        if failed == 0 {
            writeln!(f, "all {} checks passed", self.outcomes.len())
        } else {
            writeln!(f, "{failed} of {} checks failed", self.outcomes.len())
        }
    }
}

/// `count` shuffled orders of `1..=n`, reproducible from `seed`.
pub fn random_orders(n: usize, seed: u64, count: usize) -> Vec<GroundSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut order: Vec<usize> = (1..=n).collect();
            order.shuffle(&mut rng);
            GroundSet::with_order(order).expect("permutation")
        })
        .collect()
}

/// Validates `(m, quotient)` as a perspective and, if it is one, runs every
/// check on it.
pub fn check_pair(m: &Matroid, quotient: &Matroid, seed: u64) -> Result<CheckReport> {
    match uncovered_circuit(m, quotient)? {
        Some(c) => {
            let mut report = CheckReport::default();
            report.record(
                "perspective",
                Err(format!("circuit {c} of M is not a union of circuits of M′")),
            );
            Ok(report)
        }
        None => check_perspective(&Perspective::new(m.clone(), quotient.clone())?, seed),
    }
}

fn first<T: Copy>(items: &[T], bad: impl Fn(T) -> bool) -> Option<T> {
    items.iter().copied().find(|&t| bad(t))
}

pub fn check_perspective(p: &Perspective, seed: u64) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let (m, q) = (p.matroid(), p.quotient());
    report.record("perspective", Ok(format!("r(M) = {}, r(M′) = {}", m.rank(), q.rank())));

    let bases = independent_spanning_sets(p);
    let family = compatible_family(p);
    let table = bijection_table(p)?;

    report.record(
        "forward lands in D",
        match first(&bases, |b| !is_in_family(p, forward_unchecked(p, b))) {
            None => Ok(format!("{} sets", bases.len())),
            Some(b) => Err(format!("B = {b}")),
        },
    );
    report.record(
        "backward is independent and spanning",
        match first(&family, |x| !is_independent_spanning(p, backward_unchecked(p, x))) {
            None => Ok(format!("{} sets", family.len())),
            Some(x) => Err(format!("X = {x}")),
        },
    );
    report.record(
        "backward after forward is identity",
        match first(&bases, |b| backward_unchecked(p, forward_unchecked(p, b)) != b) {
            None => Ok(format!("{} sets", bases.len())),
            Some(b) => Err(format!("B = {b}")),
        },
    );
    report.record(
        "forward after backward is identity",
        match first(&family, |x| forward_unchecked(p, backward_unchecked(p, x)) != x) {
            None => Ok(format!("{} sets", family.len())),
            Some(x) => Err(format!("X = {x}")),
        },
    );
    report.record(
        "family size",
        if family.len() == bases.len() {
            Ok(format!("|D| = {}", family.len()))
        } else {
            Err(format!(
                "|D| = {} but {} independent-spanning sets",
                family.len(),
                bases.len()
            ))
        },
    );
    report.record("proof identities", proof_identities(p, &table));
    report.record("interval partition", interval_partition(p, &table));

    let polys = Method::ALL
        .iter()
        .map(|&method| tutte(p, method).map(|t| (method, t)))
        .collect::<Result<Vec<_>>>()?;
    let reference = polys[0].1.clone();
    report.record(
        "methods agree",
        match polys.iter().find(|(_, t)| *t != reference) {
            None => Ok(reference.to_string()),
            Some((method, t)) => Err(format!("{} gives {reference}, {method} gives {t}", Method::Activities)),
        },
    );

    let mut mismatch = None;
    for ground in random_orders(p.ground().size(), seed, ORDER_TRIALS) {
        let reordered = p.with_order(&ground)?;
        let t = tutte(&reordered, Method::Activities)?;
        if t != reference {
            mismatch = Some(format!("order {:?} gives {t}", ground.order()));
            break;
        }
    }
    report.record(
        "order invariance",
        mismatch.map_or_else(|| Ok(format!("{ORDER_TRIALS} orders, seed {seed}")), Err),
    );

    report.record(
        "specializations",
        specializations(m).and_then(|tm| specializations(q).map(|tq| format!("T_M = {tm}, T_M′ = {tq}"))),
    );

    if m == q {
        report.record(
            "identity pair has no z",
            if reference.is_z_free() {
                Ok("all z-exponents 0".into())
            } else {
                Err(format!("polynomial {reference} involves z"))
            },
        );
    }
    Ok(report)
}

fn proof_identities(p: &Perspective, table: &[BijectionRow]) -> std::result::Result<String, String> {
    let (m, q) = (p.matroid(), p.quotient());
    for r in table {
        let x = r.compatible;
        let restricted_dual = m.restrict(x).dual();
        let contracted = q.contract(x);
        let ok = r.external == restricted_dual.min_basis()
            && r.internal == contracted.min_basis()
            && r.internal.len() == contracted.rank()
            && r.external.len() == restricted_dual.rank()
            && m.rank_of(r.basis) as isize - q.rank_of(r.basis) as isize
                == m.rank_of(x) as isize - q.rank_of(x) as isize;
        if !ok {
            return Err(format!("B = {}, X = {x}", r.basis));
        }
    }
    Ok(format!("{} pairs", table.len()))
}

fn interval_partition(p: &Perspective, table: &[BijectionRow]) -> std::result::Result<String, String> {
    let e = p.elements();
    let mut weight: u64 = 0;
    for r in table {
        let (lo, hi) = r.interval();
        if !(lo.is_subset(r.compatible) && r.compatible.is_subset(hi)) {
            return Err(format!("X = {} outside the interval of B = {}", r.compatible, r.basis));
        }
        weight += 1u64 << (r.internal.len() + r.external.len());
    }
    let total = 1u64 << e.len();
    if weight != total {
        return Err(format!("interval sizes sum to {weight}, expected {total}"));
    }
    // with the sizes summing to 2^n, covering every subset once is the same
    // as pairwise disjointness; count directly while the power set is small
    if e.len() <= 20 {
        let mut hits = vec![0u8; 1usize << e.max_label()];
        for r in table {
            let (lo, hi) = r.interval();
            for s in hi.difference(lo).subsets() {
                let slot = &mut hits[lo.union(s).bits() as usize];
                *slot = slot.saturating_add(1);
            }
        }
        if let Some(s) = e.subsets().find(|s| hits[s.bits() as usize] != 1) {
            return Err(format!("subset {s} lies in {} intervals", hits[s.bits() as usize]));
        }
    } else {
        for (i, a) in table.iter().enumerate() {
            let (alo, ahi) = a.interval();
            for b in &table[i + 1..] {
                let (blo, bhi) = b.interval();
                if alo.union(blo).is_subset(ahi.intersection(bhi)) {
                    return Err(format!("intervals of B = {} and B = {} overlap", a.basis, b.basis));
                }
            }
        }
    }
    Ok(format!("{total} subsets"))
}

fn specializations(m: &Matroid) -> std::result::Result<String, String> {
    let run = || -> Result<std::result::Result<String, String>> {
        let by_activities = tutte_bivariate_activities(m)?;
        let by_compatible = tutte_bivariate_compatible(m)?;
        if by_compatible != by_activities {
            return Ok(Err(format!(
                "compatible-set expansion {by_compatible} differs from {by_activities}"
            )));
        }
        let shifted = tutte_m0_expansion(m)?;
        if shifted != by_activities {
            return Ok(Err(format!("(x-1) expansion {shifted} differs from {by_activities}")));
        }
        match specialize_m0(m) {
            Ok(_) => Ok(Ok(by_activities.to_string())),
            Err(e) => Ok(Err(e.to_string())),
        }
    };
    run().unwrap_or_else(|e| Err(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::fixtures::*;

    #[test]
    fn two_triangle_pair_passes_everything() {
        let report = check_pair(&two_triangles(), &two_triangles_identified(), 7).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.outcomes.len(), 11);
    }

    #[test]
    fn identity_pair_reports_no_z() {
        let m = two_triangles();
        let report = check_pair(&m, &m, 1).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report
            .to_string()
            .contains("PASS identity pair has no z: all z-exponents 0"));
    }

    #[test]
    fn invalid_pair_fails_validation() {
        let quotient = Matroid::from_circuits(&natural(5), sets(&[&[4, 5]])).unwrap();
        let report = check_pair(&two_triangles(), &quotient, 1).unwrap();
        assert!(!report.passed());
        let text = report.to_string();
        assert!(text.starts_with("FAIL perspective: circuit {1,2,3}"), "{text}");
    }

    #[test]
    fn orders_are_reproducible() {
        let a = random_orders(6, 42, 3);
        assert_eq!(a, random_orders(6, 42, 3));
        assert_ne!(a, random_orders(6, 43, 3));
    }
}
