mod common;

use proptest::prelude::*;
use rand::Rng as _;
use singcat_core::koszul::{k_subsets, KoszulElement};
use singcat_core::{koszul_product, KoszulAlgebra, Poly, Ring, RingMatrix, Subset};

/// Matrix of `d : Λ^k → Λ^{k−1}` written out from `d(ε_S) = Σ_{i∈S} (−1)^{#{s∈S : s<i}} f_i ε_{S∖i}`.
fn oracle_differential(ring: &Ring, f: &[Poly], k: usize) -> RingMatrix {
    let n = f.len();
    let src = k_subsets(n, k);
    let tgt = k_subsets(n, k - 1);
    RingMatrix::from_fn(ring, tgt.len(), src.len(), |row, col| {
        let (s, t) = (src[col], tgt[row]);
        let removed: Vec<usize> = s.indices().filter(|&i| !t.contains(i)).collect();
        if removed.len() != 1 || t.indices().any(|i| !s.contains(i)) {
            return ring.zero();
        }
        let i = removed[0];
        let below = s.indices().filter(|&j| j < i).count();
        if below % 2 == 0 {
            f[i].clone()
        } else {
            ring.neg(&f[i])
        }
    })
}

fn element(r: &mut impl rand::Rng, alg: &KoszulAlgebra, k: usize) -> KoszulElement {
    alg.basis(k)
        .iter()
        .filter_map(|&s| {
            let p = common::poly(r, alg.ring(), 1);
            (!p.is_zero()).then_some((s, p))
        })
        .collect()
}

fn add(ring: &Ring, a: &KoszulElement, b: &KoszulElement) -> KoszulElement {
    let mut out = a.clone();
    for (s, p) in b {
        let v = ring.add(out.get(s).unwrap_or(&ring.zero()), p);
        if v.is_zero() {
            out.remove(s);
        } else {
            out.insert(*s, v);
        }
    }
    out
}

fn negate(ring: &Ring, a: &KoszulElement) -> KoszulElement {
    a.iter().map(|(s, p)| (*s, ring.neg(p))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn differential_matches_sign_rule(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = common::rng(seed);
        let ring = common::qxy();
        let alg = common::algebra(&mut r, &ring, n);
        for k in 1..=n {
            prop_assert_eq!(alg.differential(k), oracle_differential(&ring, alg.potentials(), k));
        }
        let c = alg.complex();
        prop_assert!(c.d_squared_violations().is_empty());
        prop_assert_eq!(c.support(), Some((-(n as i32), 0)));
        prop_assert_eq!(c.euler_characteristic(), 0);
        for k in 0..=n {
            prop_assert_eq!(c.rank(-(k as i32)), k_subsets(n, k).len());
        }
    }

    #[test]
    fn graded_leibniz_and_associativity(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = common::rng(seed);
        let ring = common::qxy();
        let alg = common::algebra(&mut r, &ring, n);
        let (i, j, l) = (r.gen_range(0..=n), r.gen_range(0..=n), r.gen_range(0..=n));
        let (a, b, c) = (element(&mut r, &alg, i), element(&mut r, &alg, j), element(&mut r, &alg, l));
        let lhs = alg.d_element(&alg.multiply(&a, &b));
        let first = alg.multiply(&alg.d_element(&a), &b);
        let second = alg.multiply(&a, &alg.d_element(&b));
        let rhs = add(&ring, &first, &if i % 2 == 1 { negate(&ring, &second) } else { second });
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(alg.multiply(&alg.multiply(&a, &b), &c), alg.multiply(&a, &alg.multiply(&b, &c)));
        let ba = alg.multiply(&b, &a);
        prop_assert_eq!(alg.multiply(&a, &b), if i * j % 2 == 1 { negate(&ring, &ba) } else { ba });
        prop_assert!(alg.d_element(&alg.d_element(&a)).is_empty());
    }

    #[test]
    fn product_sign_is_inversion_parity(a in 0u32..256, b in 0u32..256) {
        let (sa, sb) = (Subset::from_indices(&bits(a), 8).unwrap(), Subset::from_indices(&bits(b), 8).unwrap());
        let got = koszul_product(sa, sb);
        if a & b != 0 {
            prop_assert!(got.is_none());
        } else {
            let seq: Vec<usize> = bits(a).into_iter().chain(bits(b)).collect();
            let inversions = (0..seq.len()).flat_map(|x| (x + 1..seq.len()).map(move |y| (x, y))).filter(|&(x, y)| seq[x] > seq[y]).count();
            prop_assert_eq!(got, Some((inversions % 2 == 1, Subset::from_indices(&bits(a | b), 8).unwrap())));
        }
    }
}

fn bits(x: u32) -> Vec<usize> {
    (0..8).filter(|i| x >> i & 1 == 1).collect()
}

#[test]
fn basis_order_is_size_then_lex() {
    let r = common::qx();
    let alg = KoszulAlgebra::new(&r, vec![r.one(), r.one(), r.one()]).unwrap();
    let names: Vec<Vec<usize>> = alg.basis(2).iter().map(|s| s.indices().collect()).collect();
    assert_eq!(names, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    assert!(Subset::singleton(2) < Subset::from_indices(&[0, 1], 3).unwrap());
}

#[test]
fn zero_potential_has_zero_differentials() {
    let r = common::qx();
    let alg = KoszulAlgebra::new(&r, vec![r.zero()]).unwrap();
    assert!(alg.complex().d(-1).is_zero());
    assert!(KoszulAlgebra::new(&r, vec![]).is_err());
}
