//! Sparse matrices over a [`Ring`].
//!
//! Arithmetic operators on references panic on shape or ring mismatch, the way
//! linear-algebra crates usually behave; the `try_*` methods report the
//! mismatch as an [`Error`] instead.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{Poly, Ring, ZERO};

/// Rows hold their nonzero entries sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Poly)>>,
}

impl RingMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        RingMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    /// `c` times the identity.
    pub fn scalar(ring: &Ring, n: usize, c: &Poly) -> Self {
        let mut m = Self::zero(ring, n, n);
        if !c.is_zero() {
            for (i, row) in m.data.iter_mut().enumerate() {
                row.push((i, c.clone()));
            }
        }
        m
    }

    /// Calls `f` once per entry in row-major order.
    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let data = (0..rows)
            .map(|i| (0..cols).map(|j| (j, f(i, j))).filter(|(_, p)| !p.is_zero()).collect())
            .collect();
        RingMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from row vectors; `cols` fixes the width when there are no rows.
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Poly>>, cols: usize) -> Result<Self> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r);
        for row in rows {
            if row.len() != cols {
                return Err(Error::ShapeMismatch {
                    op: "from_rows",
                    left: (r, cols),
                    right: (1, row.len()),
                });
            }
            data.push(
                row.iter()
                    .map(|p| ring.normalize(p))
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .collect(),
            );
        }
        Ok(RingMatrix {
            ring: ring.clone(),
            rows: r,
            cols,
            data,
        })
    }

    /// Parses a matrix given as rows of polynomial strings.
    pub fn parse(ring: &Ring, rows: &[&[&str]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, parsed, cols)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        let row = &self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => &row[k].1,
            Err(_) => &ZERO,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: Poly) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        let row = &mut self.data[i];
        match (row.binary_search_by_key(&j, |e| e.0), value.is_zero()) {
            (Ok(k), true) => {
                row.remove(k);
            }
            (Ok(k), false) => row[k].1 = value,
            (Err(k), false) => row.insert(k, (j, value)),
            (Err(_), true) => {}
        }
    }

    /// Nonzero entries of row `i` as `(column, value)`, by increasing column.
    pub fn row_entries(&self, i: usize) -> &[(usize, Poly)] {
        &self.data[i]
    }

    /// Row `i` with zeros filled in.
    pub fn dense_row(&self, i: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.cols];
        for (j, p) in &self.data[i] {
            out[*j] = p.clone();
        }
        out
    }

    /// Nonzero entries as `(row, column, value)` in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Poly)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, p)| (i, *j, p)))
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        let one = self.ring.one();
        self.is_square() && self.data.iter().enumerate().all(|(i, row)| matches!(row.as_slice(), [(j, p)] if *j == i && *p == one))
    }

    fn check(&self, other: &Self, op: &'static str, same_shape: bool) -> Result<()> {
        self.ring.same(&other.ring)?;
        let ok = if same_shape {
            self.shape() == other.shape()
        } else {
            self.cols == other.rows
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            })
        }
    }

    fn map_entries(&self, ring: &Ring, f: impl Fn(&Poly) -> Poly) -> Self {
        RingMatrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|row| row.iter().map(|(j, p)| (*j, f(p))).filter(|(_, p)| !p.is_zero()).collect())
                .collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other, "add", true)?;
        let r = &self.ring;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut x, mut y) = (a.iter().peekable(), b.iter().peekable());
                loop {
                    match (x.peek(), y.peek()) {
                        (Some((i, p)), Some((j, q))) if i == j => {
                            let s = r.add(p, q);
                            if !s.is_zero() {
                                out.push((*i, s));
                            }
                            x.next();
                            y.next();
                        }
                        (Some((i, p)), Some((j, _))) if i < j => {
                            out.push((*i, p.clone()));
                            x.next();
                        }
                        (_, Some((j, q))) => {
                            out.push((*j, q.clone()));
                            y.next();
                        }
                        (Some((i, p)), None) => {
                            out.push((*i, p.clone()));
                            x.next();
                        }
                        (None, None) => break,
                    }
                }
                out
            })
            .collect();
        Ok(RingMatrix {
            ring: r.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other, "mul", false)?;
        let r = &self.ring;
        let mut acc: Vec<Option<Poly>> = vec![None; other.cols];
        let mut touched = Vec::new();
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        let prod = r.mul(a, b);
                        match &mut acc[*j] {
                            Some(s) => *s = r.add(s, &prod),
                            slot => {
                                *slot = Some(prod);
                                touched.push(*j);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let out = touched
                    .drain(..)
                    .filter_map(|j| acc[j].take().filter(|p| !p.is_zero()).map(|p| (j, p)))
                    .collect();
                out
            })
            .collect();
        Ok(RingMatrix {
            ring: r.clone(),
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &Poly) -> Self {
        self.map_entries(&self.ring, |a| self.ring.mul(c, a))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(&self.ring, self.cols, self.rows);
        for (i, j, p) in self.nonzero() {
            out.data[j].push((i, p.clone()));
        }
        out
    }

    /// Copy of rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        let data = self.data[r0..r1]
            .iter()
            .map(|row| row.iter().filter(|(j, _)| (c0..c1).contains(j)).map(|(j, p)| (j - c0, p.clone())).collect())
            .collect();
        RingMatrix {
            ring: self.ring.clone(),
            rows: r1 - r0,
            cols: c1 - c0,
            data,
        }
    }

    /// Overwrites the block with top-left corner `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RingMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        let c1 = c0 + block.cols;
        for (row, src) in self.data[r0..r0 + block.rows].iter_mut().zip(&block.data) {
            let start = row.partition_point(|e| e.0 < c0);
            let end = row.partition_point(|e| e.0 < c1);
            row.splice(start..end, src.iter().map(|(j, p)| (c0 + j, p.clone())));
        }
    }

    /// Horizontal concatenation `[A | B | …]`.
    pub fn hcat(ring: &Ring, parts: &[&RingMatrix]) -> Result<Self> {
        Self::block(ring, &[parts.to_vec()])
    }

    /// Vertical concatenation.
    pub fn vcat(ring: &Ring, parts: &[&RingMatrix]) -> Result<Self> {
        let rows: Vec<Vec<&RingMatrix>> = parts.iter().map(|p| vec![*p]).collect();
        Self::block(ring, &rows)
    }

    /// Block matrix from a grid; every block row must share a height and every
    /// block column a width.
    pub fn block(ring: &Ring, grid: &[Vec<&RingMatrix>]) -> Result<Self> {
        let ncols = grid.first().map_or(0, Vec::len);
        let heights: Vec<usize> = grid.iter().map(|row| row.first().map_or(0, |m| m.rows)).collect();
        let widths: Vec<usize> = (0..ncols).map(|j| grid[0][j].cols).collect();
        for (bi, row) in grid.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::ShapeMismatch {
                    op: "block",
                    left: (grid.len(), ncols),
                    right: (bi, row.len()),
                });
            }
            for (bj, m) in row.iter().enumerate() {
                ring.same(&m.ring)?;
                if m.rows != heights[bi] || m.cols != widths[bj] {
                    return Err(Error::ShapeMismatch {
                        op: "block",
                        left: (heights[bi], widths[bj]),
                        right: m.shape(),
                    });
                }
            }
        }
        let mut out = Self::zero(ring, heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (bj, m) in row.iter().enumerate() {
                out.set_block(r0, c0, m);
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    /// Block-diagonal matrix.
    pub fn block_diag(ring: &Ring, parts: &[&RingMatrix]) -> Self {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zero(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.set_block(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Kronecker product; the left factor indexes the outer blocks.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let r = &self.ring;
        let mut out = Self::zero(r, self.rows * other.rows, self.cols * other.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (k, orow) in other.data.iter().enumerate() {
                let target = &mut out.data[i * other.rows + k];
                for (j, a) in row {
                    for (l, b) in orow {
                        let p = r.mul(a, b);
                        if !p.is_zero() {
                            target.push((j * other.cols + l, p));
                        }
                    }
                }
            }
        }
        out
    }

    /// Row `i` of the result is row `perm[i]` of `self`.
    pub fn select_rows(&self, perm: &[usize]) -> Self {
        RingMatrix {
            ring: self.ring.clone(),
            rows: perm.len(),
            cols: self.cols,
            data: perm.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn select_cols(&self, perm: &[usize]) -> Self {
        self.transpose().select_rows(perm).transpose()
    }

    /// Rewrites every entry into another ring through `f`.
    pub fn map_ring(&self, ring: &Ring, f: impl Fn(&Poly) -> Poly) -> Self {
        self.map_entries(ring, f)
    }

    /// Entries rendered in the canonical polynomial syntax, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.dense_row(i).iter().map(|p| self.ring.format(p)).collect())
            .collect()
    }
}

impl Add for &RingMatrix {
    type Output = RingMatrix;
    fn add(self, rhs: &RingMatrix) -> RingMatrix {
        self.try_add(rhs).expect("matrix addition")
    }
}

impl Sub for &RingMatrix {
    type Output = RingMatrix;
    fn sub(self, rhs: &RingMatrix) -> RingMatrix {
        self.try_sub(rhs).expect("matrix subtraction")
    }
}

impl Mul for &RingMatrix {
    type Output = RingMatrix;
    fn mul(self, rhs: &RingMatrix) -> RingMatrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl Neg for &RingMatrix {
    type Output = RingMatrix;
    fn neg(self) -> RingMatrix {
        self.map_entries(&self.ring, |a| self.ring.neg(a))
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.to_strings().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}


#[cfg(test)]
mod sparse_tests {
    use super::*;
    use crate::ring::Base;

    #[test]
    fn set_and_get_keep_rows_canonical() {
        let r = Ring::polynomial(Base::Rationals, &["x"]).unwrap();
        let mut m = RingMatrix::zero(&r, 2, 3);
        m.set(0, 2, r.var(0));
        m.set(0, 0, r.one());
        m.set(0, 2, Poly::zero());
        assert_eq!(m, RingMatrix::parse(&r, &[&["1", "0", "0"], &["0", "0", "0"]]).unwrap());
        assert_eq!(m.nnz(), 1);
        assert!(m.get(1, 1).is_zero());
    }

    #[test]
    fn block_overwrite_and_cancellation() {
        let z = Ring::integers();
        let a = RingMatrix::parse(&z, &[&["1", "2", "3"], &["4", "5", "6"]]).unwrap();
        let mut b = a.clone();
        b.set_block(0, 1, &RingMatrix::parse(&z, &[&["0", "7"]]).unwrap());
        assert_eq!(b, RingMatrix::parse(&z, &[&["1", "0", "7"], &["4", "5", "6"]]).unwrap());
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).nnz(), 0);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.select_cols(&[2, 0]), RingMatrix::parse(&z, &[&["3", "1"], &["6", "4"]]).unwrap());
    }
}
