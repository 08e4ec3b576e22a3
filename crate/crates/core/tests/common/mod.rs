//! Seeded random objects shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use singcat_core::ring::Base;
use singcat_core::{
    phi_morphism, tensor_with_koszul, KoszulAlgebra, KoszulModule, KoszulMorphism, MFMorphism, MatrixFactorization,
    PerfectComplex, Poly, Ring, RingMatrix,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn qx() -> Ring {
    Ring::polynomial(Base::Rationals, &["x"]).unwrap()
}

pub fn qxy() -> Ring {
    Ring::polynomial(Base::Rationals, &["x", "y"]).unwrap()
}

pub fn int(ring: &Ring, n: i64) -> Poly {
    ring.from_coeff(BigRational::from_integer(BigInt::from(n)))
}

/// Polynomial with small integer coefficients and total degree ≤ `deg`.
pub fn poly(r: &mut impl Rng, ring: &Ring, deg: u32) -> Poly {
    let n = ring.nvars();
    let mut acc = ring.zero();
    for _ in 0..r.gen_range(1..=3) {
        let mut exps = vec![0u32; n];
        let mut budget = r.gen_range(0..=deg);
        for e in exps.iter_mut() {
            let take = r.gen_range(0..=budget);
            *e = take;
            budget -= take;
        }
        let c: i64 = r.gen_range(-3..=3);
        acc = ring.add(&acc, &ring.monomial(BigRational::from_integer(c.into()), &exps));
    }
    acc
}

pub fn matrix(r: &mut impl Rng, ring: &Ring, rows: usize, cols: usize, deg: u32) -> RingMatrix {
    RingMatrix::from_fn(ring, rows, cols, |_, _| if r.gen_bool(0.6) { poly(r, ring, deg) } else { ring.zero() })
}

/// Random invertible matrix and its inverse, built from elementary operations.
pub fn unimodular(r: &mut impl Rng, ring: &Ring, n: usize) -> (RingMatrix, RingMatrix) {
    let mut u = RingMatrix::identity(ring, n);
    let mut inv = RingMatrix::identity(ring, n);
    if n < 2 {
        if n == 1 && r.gen_bool(0.5) {
            let m1 = RingMatrix::scalar(ring, 1, &int(ring, -1));
            return (m1.clone(), m1);
        }
        return (u, inv);
    }
    for _ in 0..n + 1 {
        let i = r.gen_range(0..n);
        let mut j = r.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = poly(r, ring, 1);
        let mut e = RingMatrix::identity(ring, n);
        e.set(i, j, c.clone());
        let mut e_inv = RingMatrix::identity(ring, n);
        e_inv.set(i, j, ring.neg(&c));
        u = &e * &u;
        inv = &inv * &e_inv;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(r);
    let p = RingMatrix::identity(ring, n).select_rows(&perm);
    (&p * &u, &inv * &p.transpose())
}

/// Complex with nonzero rank in every degree of `[lo, hi]`: a direct sum of
/// two-term pieces and single modules, conjugated by random unimodular
/// changes of basis.
pub fn complex(r: &mut impl Rng, ring: &Ring, lo: i32, hi: i32, max_rank: usize) -> PerfectComplex {
    let mut c = PerfectComplex::zero(ring);
    for m in lo..hi {
        if r.gen_bool(0.7) {
            let (a, b) = (r.gen_range(1..=max_rank), r.gen_range(1..=max_rank));
            let d = matrix(r, ring, b, a, 2);
            c = c.direct_sum(&PerfectComplex::two_term(m, &d)).unwrap();
        }
    }
    for m in lo..=hi {
        if c.rank(m) == 0 || r.gen_bool(0.2) {
            c = c.direct_sum(&PerfectComplex::concentrated(ring, m, 1)).unwrap();
        }
    }
    let bases: BTreeMap<i32, (RingMatrix, RingMatrix)> =
        c.ranks().iter().map(|(&m, &k)| (m, unimodular(r, ring, k))).collect();
    let diffs = c
        .differentials()
        .iter()
        .map(|(&m, d)| (m, &(&bases[&(m + 1)].0 * d) * &bases[&m].1))
        .collect();
    PerfectComplex::new(ring, c.ranks().clone(), diffs).unwrap()
}

pub fn algebra(r: &mut impl Rng, ring: &Ring, n: usize) -> KoszulAlgebra {
    KoszulAlgebra::new(ring, (0..n).map(|_| poly(r, ring, 2)).collect()).unwrap()
}

/// Nonzero potentials that are products of small linear factors.
pub fn factored_algebra(r: &mut impl Rng, ring: &Ring, n: usize) -> KoszulAlgebra {
    KoszulAlgebra::new(ring, (0..n).map(|_| factored_poly(r, ring).0).collect()).unwrap()
}

/// `(f, factors)` with `f` the product of 1–3 linear factors in `x`.
pub fn factored_poly(r: &mut impl Rng, ring: &Ring) -> (Poly, Vec<Poly>) {
    let x = ring.var(0);
    let factors: Vec<Poly> = (0..r.gen_range(1..=3))
        .map(|_| ring.add(&x, &int(ring, r.gen_range(-2..=2))))
        .collect();
    let f = factors.iter().fold(ring.one(), |acc, p| ring.mul(&acc, p));
    (f, factors)
}

/// Random module over `alg`: a tensor with `K`, optionally followed by a
/// cone of `φ`, a shift or a direct sum.
pub fn module(r: &mut impl Rng, alg: &KoszulAlgebra, amplitude: usize) -> KoszulModule {
    let ring = alg.ring();
    let n = alg.n();
    let base = |r: &mut ChaCha8Rng, amp: usize| {
        let amp = amp.max(n + 1);
        let lo = r.gen_range(-3..=1);
        tensor_with_koszul(alg, &complex(r, ring, lo, lo + (amp - n) as i32 - 1, 1)).unwrap()
    };
    let mut seeded = ChaCha8Rng::seed_from_u64(r.gen());
    let m = base(&mut seeded, amplitude);
    match r.gen_range(0..4) {
        0 => m,
        1 => m.shift(r.gen_range(-2..=2)),
        2 => {
            let (lo, hi) = m.support().unwrap();
            let other = base(&mut seeded, n + 1);
            let (olo, _) = other.support().unwrap();
            let shift = olo - r.gen_range(lo..=hi - n as i32);
            m.direct_sum(&other.shift(shift)).unwrap()
        }
        _ => {
            // the cone of φ spans n + 1 more degrees than the module
            if amplitude >= 2 * n + 2 {
                let small = base(&mut seeded, amplitude - n - 1);
                phi_morphism(&small).unwrap().cone().unwrap()
            } else {
                m.shift(1)
            }
        }
    }
}

/// Matrix factorization of `f` with `p_0 = U diag(a_i) V`, `p_1 = V⁻¹ diag(b_i) U⁻¹`, `a_i b_i = f`.
pub fn mf_with(r: &mut impl Rng, ring: &Ring, f: &Poly, factors: &[Poly], size: usize) -> MatrixFactorization {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for _ in 0..size {
        let mut left = ring.one();
        let mut right = ring.one();
        for p in factors {
            if r.gen_bool(0.5) {
                left = ring.mul(&left, p);
            } else {
                right = ring.mul(&right, p);
            }
        }
        a.push(left);
        b.push(right);
    }
    debug_assert!(a.iter().zip(&b).all(|(x, y)| &ring.mul(x, y) == f));
    let diag = |v: &[Poly]| RingMatrix::from_fn(ring, size, size, |i, j| if i == j { v[i].clone() } else { ring.zero() });
    let (u, u_inv) = unimodular(r, ring, size);
    let (v, v_inv) = unimodular(r, ring, size);
    let p0 = &(&u * &diag(&a)) * &v;
    let p1 = &(&v_inv * &diag(&b)) * &u_inv;
    MatrixFactorization::new(ring, f.clone(), p0, p1).unwrap()
}

pub fn mf(r: &mut impl Rng, ring: &Ring) -> MatrixFactorization {
    let (f, factors) = factored_poly(r, ring);
    let size = r.gen_range(1..=3);
    mf_with(r, ring, &f, &factors, size)
}

/// Random parity-0 closed morphism `X → Y`: `δ` of a random odd map, plus a
/// multiple of the identity when `X = Y`.
pub fn closed_morphism(r: &mut impl Rng, x: &MatrixFactorization, y: &MatrixFactorization) -> MFMorphism {
    let ring = x.ring();
    let odd = MFMorphism::new(x, y, 1, matrix(r, ring, y.e1(), x.e0(), 1), matrix(r, ring, y.e0(), x.e1(), 1)).unwrap();
    let d = odd.delta();
    if x == y {
        let c = int(ring, r.gen_range(-2..=2));
        let chi0 = d.chi0() + &RingMatrix::scalar(ring, x.e0(), &c);
        let chi1 = d.chi1() + &RingMatrix::scalar(ring, x.e1(), &c);
        MFMorphism::new(x, y, 0, chi0, chi1).unwrap()
    } else {
        d
    }
}

/// The module morphism `unfold(X) → unfold(Y)` with components `χ_0, χ_1`.
pub fn unfolded_morphism(chi: &MFMorphism) -> KoszulMorphism {
    let src = singcat_core::unfold(chi.source()).unwrap();
    let tgt = singcat_core::unfold(chi.target()).unwrap();
    KoszulMorphism::new(&src, &tgt, [(-1, chi.chi0().clone()), (0, chi.chi1().clone())].into()).unwrap()
}

/// At least `count` modules for each `n` in `ns`, built over `ring` with
/// amplitudes between `n + 1` and `n + 1 + extra`.
pub fn corpus(seed: u64, ring: &Ring, ns: &[usize], count: usize, extra: usize) -> Vec<KoszulModule> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for &n in ns {
        for i in 0..count {
            let alg = factored_algebra(&mut r, ring, n);
            let amp = n + 1 + (i % (extra + 1));
            out.push(module(&mut r, &alg, amp));
        }
    }
    out
}
