//! Sparse integer polynomials in `x`, `y`, `z`.
//!
//! Bivariate Tutte polynomials are stored here too, with every `z` exponent
//! equal to zero. Coefficient arithmetic is checked; overflow surfaces as
//! [`Error::Overflow`] from the `checked_*` methods and as a panic from the
//! operator impls.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exponent triple of a monomial `x^x * y^y * z^z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Exponents {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Exponents { x, y, z }
    }
}

impl From<(u32, u32, u32)> for Exponents {
    fn from((x, y, z): (u32, u32, u32)) -> Self {
        Exponents { x, y, z }
    }
}

/// `Σ coeff · x^a y^b z^c`. No stored coefficient is zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Polynomial::term(c, Exponents::default())
    }

    pub fn term(coeff: i64, exps: impl Into<Exponents>) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exps.into(), coeff);
        }
        Polynomial { terms }
    }

    pub fn x() -> Self {
        Polynomial::term(1, (1, 0, 0))
    }

    pub fn y() -> Self {
        Polynomial::term(1, (0, 1, 0))
    }

    pub fn z() -> Self {
        Polynomial::term(1, (0, 0, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`Polynomial::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: impl Into<Exponents>) -> i64 {
        self.terms.get(&exps.into()).copied().unwrap_or(0)
    }

    /// Terms in canonical order: descending lexicographic on `(x, y, z)`.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn is_z_free(&self) -> bool {
        self.terms.keys().all(|e| e.z == 0)
    }

    /// Adds `coeff · x^a y^b z^c` in place.
    pub fn add_term(&mut self, exps: impl Into<Exponents>, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let exps = exps.into();
        let slot = self.terms.entry(exps).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&exps);
        }
        Ok(())
    }

    /// Adds the monomial `x^a y^b z^c` with coefficient one.
    pub fn add_monomial(&mut self, exps: impl Into<Exponents>) -> Result<()> {
        self.add_term(exps, 1)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| c.checked_neg().map(|c| (e, c)).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Polynomial { terms })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (&e, &c) in &self.terms {
            out.add_term(e, c.checked_mul(k).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (&a, &ca) in &self.terms {
            for (&b, &cb) in &other.terms {
                let exps = Exponents {
                    x: a.x.checked_add(b.x).ok_or(Error::Overflow)?,
                    y: a.y.checked_add(b.y).ok_or(Error::Overflow)?,
                    z: a.z.checked_add(b.z).ok_or(Error::Overflow)?,
                };
                out.add_term(exps, ca.checked_mul(cb).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one();
        for _ in 0..k {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Replaces `x`, `y`, `z` by the given polynomials and expands.
    pub fn substitute(&self, x: &Polynomial, y: &Polynomial, z: &Polynomial) -> Result<Polynomial> {
        let mut powers = [PowerCache::new(x), PowerCache::new(y), PowerCache::new(z)];
        let mut out = Polynomial::zero();
        for (&e, &c) in &self.terms {
            let px = powers[0].get(e.x)?;
            let py = powers[1].get(e.y)?;
            let pz = powers[2].get(e.z)?;
            let term = px.checked_mul(&py)?.checked_mul(&pz)?.checked_scale(c)?;
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    pub fn evaluate(&self, x: i64, y: i64, z: i64) -> Result<i128> {
        fn pow(base: i64, k: u32) -> Result<i128> {
            (base as i128).checked_pow(k).ok_or(Error::Overflow)
        }
        self.terms.iter().try_fold(0i128, |acc, (&e, &c)| {
            let t = pow(x, e.x)?
                .checked_mul(pow(y, e.y)?)
                .and_then(|t| t.checked_mul(pow(z, e.z).ok()?))
                .and_then(|t| t.checked_mul(c as i128))
                .ok_or(Error::Overflow)?;
            acc.checked_add(t).ok_or(Error::Overflow)
        })
    }

    /// Canonical text form, e.g. `x^2*z + 2*x - y + 1`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

struct PowerCache<'a> {
    base: &'a Polynomial,
    powers: Vec<Polynomial>,
}

impl<'a> PowerCache<'a> {
    fn new(base: &'a Polynomial) -> Self {
        PowerCache {
            base,
            powers: vec![Polynomial::one()],
        }
    }

    fn get(&mut self, k: u32) -> Result<Polynomial> {
        while self.powers.len() <= k as usize {
            let next = self.powers.last().unwrap().checked_mul(self.base)?;
            self.powers.push(next);
        }
        Ok(self.powers[k as usize].clone())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: Exponents, abs: u64) -> fmt::Result {
    let mut factors: Vec<String> = Vec::with_capacity(4);
    let vars = [("x", e.x), ("y", e.y), ("z", e.z)];
    if abs != 1 || vars.iter().all(|&(_, k)| k == 0) {
        factors.push(abs.to_string());
    }
    for (name, k) in vars {
        match k {
            0 => {}
            1 => factors.push(name.to_string()),
            k => factors.push(format!("{name}^{k}")),
        }
    }
    f.write_str(&factors.join("*"))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            write_monomial(f, e, c.unsigned_abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial coefficient overflow")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial coefficient overflow")
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial coefficient overflow")
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.checked_neg().expect("polynomial coefficient overflow")
    }
}
