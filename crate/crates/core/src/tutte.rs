//! The trivariate Tutte polynomial of a perspective and the bivariate
//! Tutte polynomial of a matroid, each by several independent routes.
//!
//! * activities: sum over sets independent in `M`, spanning in `M′`;
//! * compatible: sum over `D(M, M′, <)`;
//! * rank generating: sum over all subsets, order free. Used as the
//!   cross-check oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::activities::{externally_active, internally_active};
use crate::bijection::independent_spanning_sets;
use crate::compatible::{compatible_family, is_compatible};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::perspective::Perspective;
use crate::polynomial::{Exponents, Polynomial};
use crate::setcore::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Activities,
    Compatible,
    RankGenerating,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Activities, Method::Compatible, Method::RankGenerating];

    pub fn name(self) -> &'static str {
        match self {
            Method::Activities => "activities",
            Method::Compatible => "compatible",
            Method::RankGenerating => "rank-gen",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "activities" => Ok(Method::Activities),
            "compatible" => Ok(Method::Compatible),
            "rank-gen" | "rank-generating" => Ok(Method::RankGenerating),
            other => Err(Error::Semantic(format!(
                "unknown method {other:?}; expected activities, compatible or rank-gen"
            ))),
        }
    }
}

pub fn tutte(p: &Perspective, method: Method) -> Result<Polynomial> {
    match method {
        Method::Activities => tutte_activities(p),
        Method::Compatible => tutte_compatible(p),
        Method::RankGenerating => tutte_rank_generating(p),
    }
}

/// Sums exponent triples, possibly in parallel. The result does not depend
/// on the reduction order.
fn sum_monomials<F>(items: &[Subset], f: F) -> Result<Polynomial>
where
    F: Fn(Subset) -> Result<Exponents> + Sync + Send,
{
    let counts = count_exponents(items, f)?;
    let mut out = Polynomial::zero();
    for (e, c) in counts {
        out.add_term(e, i64::try_from(c).map_err(|_| Error::Overflow)?)?;
    }
    Ok(out)
}

type Counts = BTreeMap<Exponents, u64>;

#[cfg(feature = "parallel")]
fn merge(mut a: Counts, b: Counts) -> Counts {
    for (e, c) in b {
        *a.entry(e).or_insert(0) += c;
    }
    a
}

#[cfg(feature = "parallel")]
fn count_exponents<F>(items: &[Subset], f: F) -> Result<Counts>
where
    F: Fn(Subset) -> Result<Exponents> + Sync + Send,
{
    use rayon::prelude::*;
    const SEQUENTIAL_BELOW: usize = 4096;
    if items.len() < SEQUENTIAL_BELOW {
        return count_sequential(items, f);
    }
    items
        .par_chunks(1024)
        .map(|chunk| count_sequential(chunk, &f))
        .try_reduce(Counts::new, |a, b| Ok(merge(a, b)))
}

#[cfg(not(feature = "parallel"))]
fn count_exponents<F>(items: &[Subset], f: F) -> Result<Counts>
where
    F: Fn(Subset) -> Result<Exponents>,
{
    count_sequential(items, f)
}

fn count_sequential<F>(items: &[Subset], f: F) -> Result<Counts>
where
    F: Fn(Subset) -> Result<Exponents>,
{
    let mut counts = Counts::new();
    for &s in items {
        *counts.entry(f(s)?).or_insert(0) += 1;
    }
    Ok(counts)
}

/// `Σ x^|Int_M′(B)| y^|Ext_M(B)| z^defect(B)` over `B` independent in `M`
/// and spanning in `M′`.
pub fn tutte_activities(p: &Perspective) -> Result<Polynomial> {
    let sets = independent_spanning_sets(p);
    sum_monomials(&sets, |b| {
        Ok(Exponents::new(
            internally_active(p.quotient(), b).len() as u32,
            externally_active(p.matroid(), b).len() as u32,
            p.rank_defect(b)? as u32,
        ))
    })
}

/// `Σ x^r(M′/X) y^r*(M|X) z^defect(X)` over `X ∈ D(M, M′, <)`.
pub fn tutte_compatible(p: &Perspective) -> Result<Polynomial> {
    let family = compatible_family(p);
    let (m, q) = (p.matroid(), p.quotient());
    sum_monomials(&family, |x| {
        Ok(Exponents::new(
            (q.rank() - q.rank_of(x)) as u32,
            (x.len() - m.rank_of(x)) as u32,
            p.rank_defect(x)? as u32,
        ))
    })
}

/// `Σ_A (x-1)^(r(M′) - r_M′(A)) (y-1)^(|A| - r_M(A)) z^defect(A)` over all
/// subsets `A`.
pub fn tutte_rank_generating(p: &Perspective) -> Result<Polynomial> {
    let all: Vec<Subset> = p.elements().subsets().collect();
    let (m, q) = (p.matroid(), p.quotient());
    let shifted = sum_monomials(&all, |a| {
        Ok(Exponents::new(
            (q.rank() - q.rank_of(a)) as u32,
            (a.len() - m.rank_of(a)) as u32,
            p.rank_defect(a)? as u32,
        ))
    })?;
    shifted.substitute(&x_minus_one(), &y_minus_one(), &Polynomial::z())
}

fn x_minus_one() -> Polynomial {
    Polynomial::x().checked_sub(&Polynomial::one()).expect("small")
}

fn y_minus_one() -> Polynomial {
    Polynomial::y().checked_sub(&Polynomial::one()).expect("small")
}

/// `T_M(x, y) = Σ_B x^|Int_M(B)| y^|Ext_M(B)|` over bases.
pub fn tutte_bivariate_activities(m: &Matroid) -> Result<Polynomial> {
    sum_monomials(m.bases(), |b| {
        Ok(Exponents::new(
            internally_active(m, b).len() as u32,
            externally_active(m, b).len() as u32,
            0,
        ))
    })
}

/// `T_M(x, y) = Σ x^r(M/X) y^r*(M|X)` over `X ∈ D(M, <)`.
pub fn tutte_bivariate_compatible(m: &Matroid) -> Result<Polynomial> {
    let family = compatible_family(&Perspective::identity(m.clone()));
    sum_monomials(&family, |x| {
        Ok(Exponents::new(
            (m.rank() - m.rank_of(x)) as u32,
            (x.len() - m.rank_of(x)) as u32,
            0,
        ))
    })
}

/// `T_M(x, y) = Σ (x-1)^r(M/X) y^r*(M|X)` over `X` whose complement is
/// compatible with `M`.
pub fn tutte_m0_expansion(m: &Matroid) -> Result<Polynomial> {
    let sets: Vec<Subset> = m
        .elements()
        .subsets()
        .filter(|&x| is_compatible(m, m.elements().difference(x)))
        .collect();
    let shifted = sum_monomials(&sets, |x| {
        Ok(Exponents::new(
            (m.rank() - m.rank_of(x)) as u32,
            (x.len() - m.rank_of(x)) as u32,
            0,
        ))
    })?;
    shifted.substitute(&x_minus_one(), &Polynomial::y(), &Polynomial::z())
}

/// `T_{M,0}(x, y, z)`, checked against `T_M(z + 1, y)`.
pub fn specialize_m0(m: &Matroid) -> Result<Polynomial> {
    let direct = tutte_activities(&Perspective::onto_rank_zero(m.clone()))?;
    let z_plus_one = Polynomial::z().checked_add(&Polynomial::one())?;
    let shifted = tutte_bivariate_activities(m)?.substitute(&z_plus_one, &Polynomial::y(), &Polynomial::z())?;
    if direct != shifted {
        return Err(Error::Inconsistent(format!(
            "T_(M,0) = {direct} but T_M(z+1, y) = {shifted}"
        )));
    }
    Ok(direct)
}
