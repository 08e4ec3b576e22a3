//! Exact base rings: ℤ, ℚ, 𝔽ₚ, polynomial rings over them and univariate
//! quotients by a monic polynomial.
//!
//! Elements are [`Poly`] values in canonical form: terms sorted by
//! graded-lexicographic order (largest first, variables ordered as declared),
//! no zero coefficients, coefficients reduced for the base and degree below the
//! quotient's degree when a quotient is present. Canonical forms make equality
//! a structural comparison.
//!
//! Arithmetic goes through a [`Ring`] handle, which carries the descriptor and
//! is cheap to clone.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exact coefficient. Integers and residues mod p are stored with denominator 1.
pub type Coeff = BigRational;

/// The coefficient base of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl Base {
    pub fn is_field(&self) -> bool {
        !matches!(self, Base::Integers)
    }

    fn modulus(&self) -> Option<BigInt> {
        match self {
            Base::PrimeField(p) => Some(BigInt::from(*p)),
            _ => None,
        }
    }

    /// Brings an arbitrary rational into this base, failing when it has no image
    /// (a fraction over ℤ, a denominator divisible by p over 𝔽ₚ).
    pub fn coerce(&self, c: &BigRational) -> Option<Coeff> {
        match self {
            Base::Rationals => Some(c.clone()),
            Base::Integers => c.is_integer().then(|| c.clone()),
            Base::PrimeField(_) => {
                let p = self.modulus().unwrap();
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                let inv = mod_inverse(&den, &p)?;
                Some(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    // Cheap re-normalization after ring operations on already-coerced values.
    fn reduce(&self, c: Coeff) -> Coeff {
        match self {
            Base::PrimeField(p) => {
                debug_assert!(c.is_integer());
                BigRational::from_integer(c.to_integer().mod_floor(&BigInt::from(*p)))
            }
            _ => c,
        }
    }

    pub fn is_unit(&self, c: &Coeff) -> bool {
        match self {
            Base::Integers => c.is_integer() && c.abs().is_one(),
            _ => !c.is_zero(),
        }
    }

    /// Multiplicative inverse, if `c` is a unit.
    pub fn inv(&self, c: &Coeff) -> Option<Coeff> {
        match self {
            Base::Integers => self.is_unit(c).then(|| c.clone()),
            Base::Rationals => (!c.is_zero()).then(|| c.recip()),
            Base::PrimeField(p) => {
                let p = BigInt::from(*p);
                mod_inverse(&c.to_integer(), &p).map(BigRational::from_integer)
            }
        }
    }

    pub(crate) fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a + b)
    }

    pub(crate) fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a * b)
    }

    pub(crate) fn neg(&self, a: &Coeff) -> Coeff {
        self.reduce(-a)
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(p);
    e.gcd.is_one().then(|| e.x.mod_floor(p))
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent vector, one entry per declared variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The zero polynomial, for handing out references to absent entries.
pub(crate) static ZERO: Poly = Poly { terms: Vec::new() };

/// A polynomial in canonical form. Only meaningful together with its [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Coeff)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms, largest monomial first.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// The constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    fn from_sorted(terms: Vec<(Monomial, Coeff)>) -> Self {
        Poly { terms }
    }
}

/// The descriptor behind a [`Ring`].
#[derive(Debug, PartialEq, Eq)]
pub struct RingDescriptor {
    base: Base,
    vars: Vec<String>,
    quotient: Option<Poly>,
}

/// Shared handle on a ring descriptor; all arithmetic goes through it.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingDescriptor>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Builds a ring, checking every descriptor invariant.
    pub fn new<S: AsRef<str>>(base: Base, vars: &[S], quotient: Option<&str>) -> Result<Ring> {
        if let Base::PrimeField(p) = base {
            if !is_prime(p) {
                return Err(Error::InvalidRing(alloc::format!("{p} is not prime")));
            }
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(alloc::format!(
                    "{v:?} is not an identifier"
                )));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(alloc::format!(
                    "variable {v:?} declared twice"
                )));
            }
        }
        let free = Ring(Arc::new(RingDescriptor {
            base: base.clone(),
            vars: vars.clone(),
            quotient: None,
        }));
        let Some(q) = quotient else {
            return Ok(free);
        };
        if vars.len() != 1 {
            return Err(Error::InvalidRing(
                "a quotient needs exactly one variable".into(),
            ));
        }
        let q = free.parse(q)?;
        match q.leading() {
            Some((m, c)) if m.degree() >= 1 && c.is_one() => {}
            _ => {
                return Err(Error::InvalidRing(
                    "quotient must be monic of degree at least 1".into(),
                ))
            }
        }
        Ok(Ring(Arc::new(RingDescriptor {
            base,
            vars,
            quotient: Some(q),
        })))
    }

    pub fn integers() -> Ring {
        Ring::new::<&str>(Base::Integers, &[], None).unwrap()
    }

    pub fn rationals() -> Ring {
        Ring::new::<&str>(Base::Rationals, &[], None).unwrap()
    }

    /// Polynomial ring over `base` in the given variables.
    pub fn polynomial(base: Base, vars: &[&str]) -> Result<Ring> {
        Ring::new(base, vars, None)
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0
    }

    pub fn base(&self) -> &Base {
        &self.0.base
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn quotient(&self) -> Option<&Poly> {
        self.0.quotient.as_ref()
    }

    pub fn same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn zero(&self) -> Poly {
        Poly::zero()
    }

    pub fn one(&self) -> Poly {
        self.from_coeff(Coeff::one())
    }

    pub fn from_int(&self, n: i64) -> Poly {
        self.from_coeff(BigRational::from_integer(BigInt::from(n)))
    }

    /// Constant polynomial; the coefficient is coerced into the base.
    ///
    /// Panics if `c` has no image in the base (e.g. 1/2 over ℤ).
    pub fn from_coeff(&self, c: Coeff) -> Poly {
        let c = self
            .base()
            .coerce(&c)
            .expect("coefficient has no image in the base ring");
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly::from_sorted(vec![(Monomial::one(self.nvars()), c)])
        }
    }

    /// The variable with index `i`.
    pub fn var(&self, i: usize) -> Poly {
        let mut m = Monomial::one(self.nvars());
        m.0[i] = 1;
        self.normalize_terms(vec![(m, Coeff::one())])
    }

    pub fn var_named(&self, name: &str) -> Option<Poly> {
        self.vars().iter().position(|v| v == name).map(|i| self.var(i))
    }

    /// `c * x^e` for a monomial given by exponents.
    pub fn monomial(&self, c: Coeff, exps: &[u32]) -> Poly {
        assert_eq!(exps.len(), self.nvars());
        let c = self.base().coerce(&c).expect("coefficient not in base");
        self.normalize_terms(vec![(Monomial::from_exponents(exps), c)])
    }

    /// Canonical form of an arbitrary term list.
    pub fn normalize_terms(&self, terms: Vec<(Monomial, Coeff)>) -> Poly {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        let base = self.base();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert_with(Coeff::zero);
            *e = base.add(e, &c);
        }
        let terms: Vec<_> = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        self.reduce_quotient(Poly::from_sorted(terms))
    }

    /// Idempotent canonicalization.
    pub fn normalize(&self, p: &Poly) -> Poly {
        self.normalize_terms(p.terms.clone())
    }

    fn reduce_quotient(&self, p: Poly) -> Poly {
        let Some(q) = self.quotient() else {
            return p;
        };
        let d = q.leading().unwrap().0.degree() as usize;
        let top = match p.total_degree() {
            Some(t) if t as usize >= d => t as usize,
            _ => return p,
        };
        let base = self.base();
        let mut dense = vec![Coeff::zero(); top + 1];
        for (m, c) in &p.terms {
            dense[m.degree() as usize] = c.clone();
        }
        for e in (d..=top).rev() {
            if dense[e].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut dense[e], Coeff::zero());
            for (m, qc) in q.terms.iter().skip(1) {
                let k = e - d + m.degree() as usize;
                let sub = base.mul(&c, qc);
                dense[k] = base.add(&dense[k], &base.neg(&sub));
            }
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial::from_exponents(&[e as u32]), c))
            .collect();
        Poly::from_sorted(terms)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let base = self.base();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match a.terms[i].0.cmp(&b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = base.add(&a.terms[i].1, &b.terms[j].1);
                    if !c.is_zero() {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Poly::from_sorted(out)
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        let base = self.base();
        Poly::from_sorted(
            a.terms
                .iter()
                .map(|(m, c)| (m.clone(), base.neg(c)))
                .collect(),
        )
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = a.as_constant() {
            return self.scale(&c, b);
        }
        if let Some(c) = b.as_constant() {
            return self.scale(&c, a);
        }
        let base = self.base();
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero);
                *e = base.add(e, &base.mul(ca, cb));
            }
        }
        let terms: Vec<_> = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        self.reduce_quotient(Poly::from_sorted(terms))
    }

    /// Multiplies by a base coefficient.
    pub fn scale(&self, c: &Coeff, a: &Poly) -> Poly {
        let base = self.base();
        Poly::from_sorted(
            a.terms
                .iter()
                .map(|(m, x)| (m.clone(), base.mul(c, x)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        )
    }

    pub fn pow(&self, a: &Poly, mut e: u32) -> Poly {
        let mut result = self.one();
        let mut sq = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        result
    }

    pub fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }

    /// Whether `a` is invertible in this ring.
    ///
    /// Without a quotient the units are the constant units of the base. With a
    /// quotient `q` of degree `d` the ring is free of rank `d` over the base and
    /// `a` is a unit iff the determinant of multiplication by `a` is.
    pub fn is_unit(&self, a: &Poly) -> bool {
        if let Some(c) = a.as_constant() {
            return self.base().is_unit(&c);
        }
        let Some(q) = self.quotient() else {
            return false;
        };
        let d = q.leading().unwrap().0.degree() as usize;
        // column j holds the coefficients of a * x^j mod q
        let mut m = vec![vec![Coeff::zero(); d]; d];
        let x = self.var(0);
        let mut col = a.clone();
        for j in 0..d {
            for (mono, c) in &col.terms {
                m[mono.degree() as usize][j] = c.clone();
            }
            col = self.mul(&col, &x);
        }
        let det = rational_det(m);
        match self.base() {
            Base::PrimeField(p) => {
                let p = BigInt::from(*p);
                !det.to_integer().mod_floor(&p).is_zero()
            }
            base => base.is_unit(&det),
        }
    }

    /// Wraps a polynomial as a self-describing element.
    pub fn element(&self, value: Poly) -> RingElement {
        RingElement {
            ring: self.clone(),
            value,
        }
    }

    /// Ring on the concatenated variables of two pure polynomial rings over the
    /// same base, used for external products.
    pub fn join(&self, other: &Ring) -> Result<Ring> {
        if self.base() != other.base() {
            return Err(Error::BaseMismatch);
        }
        if self.quotient().is_some() || other.quotient().is_some() {
            return Err(Error::QuotientNotSupported);
        }
        if let Some(v) = self.vars().iter().find(|v| other.vars().contains(v)) {
            return Err(Error::VariableCollision(v.clone()));
        }
        let vars: Vec<&str> = self
            .vars()
            .iter()
            .chain(other.vars())
            .map(String::as_str)
            .collect();
        Ring::new(self.base().clone(), &vars, None)
    }

    /// Moves a polynomial of `from` into `self`, whose variables must contain
    /// those of `from` as the contiguous block starting at `offset`.
    pub fn embed(&self, from: &Ring, offset: usize, p: &Poly) -> Poly {
        debug_assert!(offset + from.nvars() <= self.nvars());
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(self.nvars());
                e.0[offset..offset + from.nvars()].copy_from_slice(&m.0);
                (e, c.clone())
            })
            .collect();
        self.normalize_terms(terms)
    }

    /// Renders a polynomial in the canonical string syntax, e.g. `3*x^2*y - 1/2`.
    pub fn format(&self, p: &Poly) -> String {
        crate::parse::format_poly(self, p)
    }

    /// Parses the canonical string syntax (and the usual infix variations).
    pub fn parse(&self, s: &str) -> Result<Poly> {
        crate::parse::parse_poly(self, s)
    }

    /// Whether the ring is a domain where every element divides cleanly into
    /// quotient and remainder: ℤ, a field, or one variable over a field.
    pub fn euclidean_kind(&self) -> Option<EuclideanKind> {
        if self.quotient().is_some() {
            return None;
        }
        match (self.base(), self.nvars()) {
            (Base::Integers, 0) => Some(EuclideanKind::Integers),
            (b, 0) if b.is_field() => Some(EuclideanKind::Field),
            (b, 1) if b.is_field() => Some(EuclideanKind::UnivariateOverField),
            _ => None,
        }
    }
}

/// The three Euclidean shapes supported by Smith normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EuclideanKind {
    Integers,
    Field,
    UnivariateOverField,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base() {
            Base::Integers => "ZZ".to_string(),
            Base::Rationals => "QQ".to_string(),
            Base::PrimeField(p) => alloc::format!("F{p}"),
        };
        f.write_str(&base)?;
        if !self.vars().is_empty() {
            write!(f, "[{}]", self.vars().join(","))?;
        }
        if let Some(q) = self.quotient() {
            write!(f, "/({})", self.format(q))?;
        }
        Ok(())
    }
}

// Determinant over ℚ by Gaussian elimination; used only on small matrices.
pub(crate) fn rational_det(mut m: Vec<Vec<Coeff>>) -> Coeff {
    let n = m.len();
    let mut det = Coeff::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Coeff::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// A ring element that knows its ring; arithmetic checks the rings agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    value: Poly,
}

impl RingElement {
    pub fn parse(ring: &Ring, s: &str) -> Result<Self> {
        Ok(ring.element(ring.parse(s)?))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn into_value(self) -> Poly {
        self.value
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.same(&other.ring)?;
        Ok(self.ring.element(self.ring.add(&self.value, &other.value)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ring.same(&other.ring)?;
        Ok(self.ring.element(self.ring.sub(&self.value, &other.value)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.same(&other.ring)?;
        Ok(self.ring.element(self.ring.mul(&self.value, &other.value)))
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(&self.value)
    }
}

impl core::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.ring.element(self.ring.neg(&self.value))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(&self.value))
    }
}

/// Small-integer view of a coefficient, for display and tests.
pub fn coeff_to_i64(c: &Coeff) -> Option<i64> {
    if c.is_integer() {
        c.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qx() -> Ring {
        Ring::polynomial(Base::Rationals, &["x"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = qx();
        let a = r.parse("x + 1").unwrap();
        let b = r.parse("x - 1").unwrap();
        assert_eq!(r.mul(&a, &b), r.parse("x^2 - 1").unwrap());
    }

    #[test]
    fn nilpotent_in_quotient() {
        let r = Ring::new(Base::Rationals, &["x"], Some("x^2")).unwrap();
        let x = r.var(0);
        assert!(r.mul(&x, &x).is_zero());
        assert!(!r.is_unit(&x));
        assert!(r.is_unit(&r.parse("1 + x").unwrap()));
    }

    #[test]
    fn prime_field_addition() {
        let r = Ring::new::<&str>(Base::PrimeField(5), &[], None).unwrap();
        assert_eq!(r.add(&r.from_int(3), &r.from_int(4)), r.from_int(2));
        assert_eq!(r.neg(&r.from_int(1)), r.from_int(4));
    }

    #[test]
    fn descriptor_checks() {
        assert!(Ring::new::<&str>(Base::PrimeField(6), &[], None).is_err());
        assert!(Ring::new(Base::Rationals, &["x", "x"], None).is_err());
        assert!(Ring::new(Base::Rationals, &["x", "y"], Some("x^2")).is_err());
        assert!(Ring::new(Base::Rationals, &["x"], Some("2*x^2")).is_err());
        assert!(Ring::new(Base::Rationals, &["x"], Some("3")).is_err());
        assert!(Ring::new(Base::Rationals, &["1x"], None).is_err());
    }

    #[test]
    fn units_over_integers_with_quotient() {
        // x^2 - 2 : 1 + x has norm -1, 2 + x has norm 2
        let r = Ring::new(Base::Integers, &["x"], Some("x^2 - 2")).unwrap();
        assert!(r.is_unit(&r.parse("1 + x").unwrap()));
        assert!(!r.is_unit(&r.parse("2 + x").unwrap()));
    }

    #[test]
    fn element_ring_mismatch() {
        let a = RingElement::parse(&qx(), "x").unwrap();
        let b = RingElement::parse(&Ring::rationals(), "1").unwrap();
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
        assert_eq!((-&a).to_string(), "-x");
    }

    #[test]
    fn grlex_order() {
        let r = Ring::polynomial(Base::Rationals, &["x", "y"]).unwrap();
        let p = r.parse("y + x^2 + x*y + x + 1 + y^2").unwrap();
        assert_eq!(r.format(&p), "x^2 + x*y + y^2 + x + y + 1");
    }

    #[test]
    fn join_and_embed() {
        let a = qx();
        let b = Ring::polynomial(Base::Rationals, &["y"]).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.vars(), &["x".to_string(), "y".to_string()]);
        let y = j.embed(&b, 1, &b.var(0));
        assert_eq!(j.format(&y), "y");
        assert_eq!(a.join(&a), Err(Error::VariableCollision("x".into())));
    }
}
