//! Euclidean division and Smith normal form over ℤ, fields, and univariate
//! polynomial rings over a field.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{EuclideanKind, Poly, Ring};

impl Ring {
    fn kind(&self) -> Result<EuclideanKind> {
        self.euclidean_kind().ok_or(Error::NotEuclidean)
    }

    /// Euclidean size; only compared between elements of the same ring.
    pub fn euclidean_size(&self, a: &Poly) -> Result<BigInt> {
        Ok(match self.kind()? {
            EuclideanKind::Integers => a.as_constant().unwrap().to_integer().abs(),
            EuclideanKind::Field => BigInt::zero(),
            EuclideanKind::UnivariateOverField => BigInt::from(a.total_degree().unwrap_or(0)),
        })
    }

    /// Quotient and remainder with `size(r) < size(b)` or `r = 0`.
    pub fn div_rem(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        assert!(!b.is_zero(), "division by zero");
        match self.kind()? {
            EuclideanKind::Integers => {
                let x = a.as_constant().unwrap().to_integer();
                let y = b.as_constant().unwrap().to_integer();
                let (q, r) = x.div_mod_floor(&y);
                Ok((
                    self.from_coeff(BigRational::from_integer(q)),
                    self.from_coeff(BigRational::from_integer(r)),
                ))
            }
            EuclideanKind::Field => {
                let inv = self.base().inv(&b.as_constant().unwrap()).unwrap();
                Ok((self.scale(&inv, a), Poly::zero()))
            }
            EuclideanKind::UnivariateOverField => {
                let (bm, bc) = b.leading().unwrap();
                let bdeg = bm.degree();
                let binv = self.base().inv(bc).unwrap();
                let mut q = Poly::zero();
                let mut r = a.clone();
                while let Some((rm, rc)) = r.leading() {
                    if rm.degree() < bdeg {
                        break;
                    }
                    let c = rc * &binv;
                    let t = self.monomial(c, &[rm.degree() - bdeg]);
                    q = self.add(&q, &t);
                    r = self.sub(&r, &self.mul(&t, b));
                }
                Ok((q, r))
            }
        }
    }

    /// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.div_rem(a, b)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Unit `u` such that `u * a` is the canonical associate of `a`
    /// (non-negative integer, 1 in a field, monic polynomial).
    pub fn normalizing_unit(&self, a: &Poly) -> Result<Poly> {
        let one = self.one();
        let Some((_, lc)) = a.leading() else {
            return Ok(one);
        };
        Ok(match self.kind()? {
            EuclideanKind::Integers if lc.is_negative() => self.neg(&one),
            EuclideanKind::Integers => one,
            _ => self.from_coeff(self.base().inv(lc).unwrap()),
        })
    }

    pub fn canonical_associate(&self, a: &Poly) -> Result<Poly> {
        Ok(self.mul(&self.normalizing_unit(a)?, a))
    }

    /// Greatest common divisor in canonical form.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = self.div_rem(&a, &b)?;
            a = core::mem::replace(&mut b, r);
        }
        self.canonical_associate(&a)
    }
}

/// `u * a * v = s` with `u`, `v` invertible and `s` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub s: RingMatrix,
    pub u: RingMatrix,
    pub v: RingMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<Poly> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s.get(i, i).clone())
            .filter(|p| !p.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Work {
    ring: Ring,
    s: Vec<Vec<Poly>>,
    u: Vec<Vec<Poly>>,
    v: Vec<Vec<Poly>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.s.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.s.iter_mut().chain(self.v.iter_mut()) {
            row.swap(i, j);
        }
    }

    // row_i += c * row_t
    fn add_row(&mut self, i: usize, t: usize, c: &Poly) {
        let r = &self.ring;
        for m in [&mut self.s, &mut self.u] {
            for k in 0..m[i].len() {
                if m[t][k].is_zero() {
                    continue;
                }
                let delta = r.mul(c, &m[t][k]);
                m[i][k] = r.add(&m[i][k], &delta);
            }
        }
    }

    // col_j += c * col_t
    fn add_col(&mut self, j: usize, t: usize, c: &Poly) {
        let r = &self.ring;
        for m in [&mut self.s, &mut self.v] {
            for row in m.iter_mut() {
                if row[t].is_zero() {
                    continue;
                }
                let delta = r.mul(c, &row[t]);
                row[j] = r.add(&row[j], &delta);
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: &Poly) {
        let r = &self.ring;
        for m in [&mut self.s, &mut self.u] {
            for e in m[i].iter_mut() {
                *e = r.mul(c, e);
            }
        }
    }
}

fn to_rows(m: &RingMatrix) -> Vec<Vec<Poly>> {
    (0..m.rows()).map(|i| m.dense_row(i)).collect()
}

fn from_rows(ring: &Ring, rows: Vec<Vec<Poly>>, cols: usize) -> RingMatrix {
    RingMatrix::from_rows(ring, rows, cols).expect("rectangular")
}

/// Smith normal form with transformation matrices.
///
/// Fails with [`Error::NotEuclidean`] outside ℤ, fields and `K[x]`.
pub fn smith_normal_form(a: &RingMatrix) -> Result<SmithForm> {
    let ring = a.ring().clone();
    ring.euclidean_kind().ok_or(Error::NotEuclidean)?;
    let (rows, cols) = a.shape();
    let mut w = Work {
        ring: ring.clone(),
        s: to_rows(a),
        u: to_rows(&RingMatrix::identity(&ring, rows)),
        v: to_rows(&RingMatrix::identity(&ring, cols)),
    };
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(BigInt, usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if w.s[i][j].is_zero() {
                        continue;
                    }
                    let size = ring.euclidean_size(&w.s[i][j])?;
                    if best.as_ref().is_none_or(|(b, _, _)| size < *b) {
                        best = Some((size, i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                break;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let pivot = w.s[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if w.s[i][t].is_zero() {
                    continue;
                }
                let (q, r) = ring.div_rem(&w.s[i][t], &pivot)?;
                w.add_row(i, t, &ring.neg(&q));
                clean &= r.is_zero();
            }
            for j in t + 1..cols {
                if w.s[t][j].is_zero() {
                    continue;
                }
                let (q, r) = ring.div_rem(&w.s[t][j], &pivot)?;
                w.add_col(j, t, &ring.neg(&q));
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !w.s[i][j].is_zero() && ring.div_exact(&w.s[i][j], &pivot)?.is_none() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => w.add_row(t, i, &ring.one()),
                None => break,
            }
        }
        if !w.s[t][t].is_zero() {
            let unit = ring.normalizing_unit(&w.s[t][t])?;
            w.scale_row(t, &unit);
        }
    }
    Ok(SmithForm {
        s: from_rows(&ring, w.s, cols),
        u: from_rows(&ring, w.u, rows),
        v: from_rows(&ring, w.v, cols),
    })
}

impl RingMatrix {
    /// Determinant by fraction-free elimination (Euclidean rings only).
    pub fn det(&self) -> Result<Poly> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let ring = self.ring().clone();
        ring.euclidean_kind().ok_or(Error::NotEuclidean)?;
        let n = self.rows();
        let mut m = to_rows(self);
        let mut sign = false;
        let mut prev = ring.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            if p != k {
                m.swap(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = ring.sub(&ring.mul(&m[i][j], &m[k][k]), &ring.mul(&m[i][k], &m[k][j]));
                    m[i][j] = ring.div_exact(&t, &prev)?.expect("Bareiss division is exact");
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = if n == 0 { ring.one() } else { m[n - 1][n - 1].clone() };
        Ok(if sign { ring.neg(&det) } else { det })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Base;

    fn check(a: &RingMatrix) -> SmithForm {
        let f = smith_normal_form(a).unwrap();
        assert_eq!(&(&f.u * a) * &f.v, f.s);
        assert!(a.ring().is_unit(&f.u.det().unwrap()));
        assert!(a.ring().is_unit(&f.v.det().unwrap()));
        let d = f.invariant_factors();
        for w in d.windows(2) {
            assert!(a.ring().div_exact(&w[1], &w[0]).unwrap().is_some());
        }
        f
    }

    #[test]
    fn diag_two_three() {
        let z = Ring::integers();
        let a = RingMatrix::parse(&z, &[&["2", "0"], &["0", "3"]]).unwrap();
        let f = check(&a);
        assert_eq!(f.s, RingMatrix::parse(&z, &[&["1", "0"], &["0", "6"]]).unwrap());
    }

    #[test]
    fn zero_matrix() {
        let z = Ring::integers();
        let a = RingMatrix::zero(&z, 2, 3);
        let f = check(&a);
        assert_eq!(f.s, a);
        assert!(f.u.is_identity() && f.v.is_identity());
    }

    #[test]
    fn single_x() {
        let r = Ring::polynomial(Base::Rationals, &["x"]).unwrap();
        let a = RingMatrix::parse(&r, &[&["x"]]).unwrap();
        assert_eq!(check(&a).s, a);
    }

    #[test]
    fn polynomial_example() {
        let r = Ring::polynomial(Base::Rationals, &["x"]).unwrap();
        let a = RingMatrix::parse(&r, &[&["x^2", "x + 1"], &["2*x", "x^2 - 1"], &["0", "x"]]).unwrap();
        check(&a);
    }

    #[test]
    fn refuses_multivariate() {
        let r = Ring::polynomial(Base::Rationals, &["x", "y"]).unwrap();
        let a = RingMatrix::parse(&r, &[&["x"]]).unwrap();
        assert_eq!(smith_normal_form(&a), Err(Error::NotEuclidean));
        let zx = Ring::polynomial(Base::Integers, &["x"]).unwrap();
        assert_eq!(zx.euclidean_kind(), None);
    }

    #[test]
    fn gcd_and_division() {
        let r = Ring::polynomial(Base::Rationals, &["x"]).unwrap();
        let a = r.parse("x^3 - x").unwrap();
        let b = r.parse("2*x^2 + 2*x").unwrap();
        assert_eq!(r.format(&r.gcd(&a, &b).unwrap()), "x^2 + x");
        let (q, rem) = r.div_rem(&a, &r.parse("x - 2").unwrap()).unwrap();
        assert_eq!(r.format(&q), "x^2 + 2*x + 3");
        assert_eq!(r.format(&rem), "6");
    }
}
