//! Gaussian elimination of complexes: cancelling a unit entry of `d_m`
//! removes one basis vector in degrees `m` and `m + 1` and yields a
//! homotopy equivalent complex.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::PerfectComplex;
use crate::matrix::RingMatrix;
use crate::ring::{Poly, Ring};

struct Sparse {
    rows: Vec<BTreeMap<usize, Poly>>,
    cols: Vec<BTreeSet<usize>>,
}

impl Sparse {
    fn new(d: &RingMatrix) -> Self {
        let mut rows: Vec<BTreeMap<usize, Poly>> = vec![BTreeMap::new(); d.rows()];
        let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); d.cols()];
        for (i, j, v) in d.nonzero() {
            rows[i].insert(j, v.clone());
            cols[j].insert(i);
        }
        Sparse { rows, cols }
    }

    fn drop_row(&mut self, i: usize) {
        for j in core::mem::take(&mut self.rows[i]).into_keys() {
            self.cols[j].remove(&i);
        }
    }

    fn drop_col(&mut self, j: usize) {
        for i in core::mem::take(&mut self.cols[j]) {
            self.rows[i].remove(&j);
        }
    }

    /// Constant unit entry minimising `(row weight - 1)(column weight - 1)`.
    fn pivot(&self, ring: &Ring) -> Option<(usize, usize)> {
        let mut best: Option<(usize, (usize, usize))> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row {
                let unit = v.as_constant().is_some_and(|c| ring.base().is_unit(&c));
                if !unit {
                    continue;
                }
                let cost = (row.len() - 1) * (self.cols[j].len() - 1);
                if best.is_none_or(|(b, _)| cost < b) {
                    best = Some((cost, (i, j)));
                    if cost == 0 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, p)| p)
    }

    /// `d[a][b] -= d[a][j] u⁻¹ d[i][b]` away from the pivot row and column.
    fn eliminate(&mut self, ring: &Ring, i: usize, j: usize) {
        let c = self.rows[i][&j].as_constant().unwrap();
        let u_inv = ring.from_coeff(ring.base().inv(&c).unwrap());
        let pivot_row: Vec<(usize, Poly)> = self.rows[i]
            .iter()
            .filter(|&(&b, _)| b != j)
            .map(|(&b, v)| (b, ring.mul(&u_inv, v)))
            .collect();
        let pivot_col: Vec<usize> = self.cols[j].iter().copied().filter(|&a| a != i).collect();
        for a in pivot_col {
            let factor = self.rows[a][&j].clone();
            for (b, w) in &pivot_row {
                let old = self.rows[a].remove(b).unwrap_or_else(Poly::zero);
                let new = ring.sub(&old, &ring.mul(&factor, w));
                if new.is_zero() {
                    self.cols[*b].remove(&a);
                } else {
                    self.rows[a].insert(*b, new);
                    self.cols[*b].insert(a);
                }
            }
        }
        self.drop_row(i);
        self.drop_col(j);
    }
}

impl PerfectComplex {
    /// Homotopy equivalent complex obtained by cancelling constant unit
    /// entries of the differentials until none remain.
    pub fn cancel_units(&self) -> PerfectComplex {
        let ring = self.ring();
        let mut alive: BTreeMap<i32, Vec<bool>> = self.ranks().iter().map(|(&m, &r)| (m, vec![true; r])).collect();
        let mut sparse: BTreeMap<i32, Sparse> = self.differentials().iter().map(|(&m, d)| (m, Sparse::new(d))).collect();
        let degrees: Vec<i32> = sparse.keys().copied().collect();
        for m in degrees {
            while let Some((i, j)) = sparse[&m].pivot(ring) {
                sparse.get_mut(&m).unwrap().eliminate(ring, i, j);
                alive.get_mut(&m).unwrap()[j] = false;
                alive.get_mut(&(m + 1)).unwrap()[i] = false;
                if let Some(below) = sparse.get_mut(&(m - 1)) {
                    below.drop_row(j);
                }
                if let Some(above) = sparse.get_mut(&(m + 1)) {
                    above.drop_col(i);
                }
            }
        }
        // old index -> new index for surviving basis vectors
        let index: BTreeMap<i32, Vec<Option<usize>>> = alive
            .iter()
            .map(|(&m, live)| {
                let mut next = 0;
                let map = live
                    .iter()
                    .map(|&keep| {
                        keep.then(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect();
                (m, map)
            })
            .collect();
        let ranks: BTreeMap<i32, usize> = alive.iter().map(|(&m, live)| (m, live.iter().filter(|&&k| k).count())).collect();
        let rank = |m: i32| ranks.get(&m).copied().unwrap_or(0);
        let diffs = sparse
            .iter()
            .map(|(&m, s)| {
                let mut d = RingMatrix::zero(ring, rank(m + 1), rank(m));
                for (i, row) in s.rows.iter().enumerate() {
                    for (&j, v) in row {
                        d.set(index[&(m + 1)][i].unwrap(), index[&m][j].unwrap(), v.clone());
                    }
                }
                (m, d)
            })
            .collect();
        PerfectComplex::unchecked(ring, ranks, diffs).unwrap()
    }
}
