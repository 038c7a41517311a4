mod common;

use common::{circulant, poly_mul, rank};
use proptest::prelude::*;
use qcldpc_core::poly::gcd_with_modulus;
use qcldpc_core::{circulant_from_poly, circulant_rank, poly_gcd, BitMatrix, PlainPoly, RingPoly};

fn ring(r: usize, exps: &[i64]) -> RingPoly {
    RingPoly::from_exponents(r, exps).unwrap()
}

fn exps(p: &RingPoly) -> Vec<usize> {
    p.exponents().collect()
}

#[test]
fn construction_examples() {
    assert_eq!(exps(&ring(16, &[1, 4])), vec![1, 4]);
    assert!(ring(16, &[]).is_zero());
    assert!(ring(16, &[3, 19]).is_zero());
    assert!(RingPoly::zero(0).is_err());
}

#[test]
fn addition_examples() {
    let a = ring(16, &[1, 4]);
    assert!(a.add(&a).unwrap().is_zero());
    assert_eq!(exps(&ring(16, &[1]).add(&ring(16, &[2])).unwrap()), vec![1, 2]);
}

fn ex1_g() -> RingPoly {
    let low: Vec<i64> = (0..8).map(|k| 16 + k).collect();
    let high: Vec<i64> = (0..8).map(|k| 32 + 2 * k).collect();
    ring(48, &low).add(&ring(48, &high)).unwrap()
}

#[test]
fn ex1_g_as_sum() {
    let expected: Vec<usize> = (16..24).chain((0..8).map(|k| 32 + 2 * k)).collect();
    assert_eq!(exps(&ex1_g()), expected);
}

#[test]
fn ex1_g_gcd_matches_elimination_oracle() {
    // The literal g(X) has a gcd of degree 9 with X^48 - 1, so its circulant
    // has rank 39; the oracle below is plain Gaussian elimination.
    let g = ex1_g();
    let oracle = rank(&circulant(48, &exps(&g)));
    assert_eq!(oracle, 39);
    assert_eq!(circulant_rank(&g), oracle);
    assert_eq!(gcd_with_modulus(&g).degree(), Some(48 - oracle));
}

#[test]
fn multiplication_examples() {
    for (k, m) in [(3usize, 5usize), (15, 9), (0, 0)] {
        let prod = RingPoly::monomial(16, k).unwrap().mul(&RingPoly::monomial(16, m).unwrap()).unwrap();
        assert_eq!(exps(&prod), vec![(k + m) % 16]);
    }
    let a = ring(16, &[0, 4, 8, 12]);
    let b = ring(16, &[0, 4]);
    let c = a.mul(&b).unwrap();
    // Oracle: first row of the product of the two circulant matrices.
    let m = common::product(&circulant(16, &[0, 4, 8, 12]), &circulant(16, &[0, 4]));
    let first: Vec<usize> = (0..16).filter(|&j| m[0][j] == 1).collect();
    assert_eq!(exps(&c), first);
    assert!(c.is_zero());
    assert_eq!(a.mul(&RingPoly::one(16).unwrap()).unwrap(), a);
    assert!(a.mul(&ring(8, &[0])).is_err());
}

#[test]
fn transpose_examples() {
    assert_eq!(exps(&ring(16, &[5]).transpose()), vec![11]);
    assert_eq!(exps(&ring(16, &[0]).transpose()), vec![0]);
    assert_eq!(exps(&ring(16, &[1, 4]).transpose()), vec![12, 15]);
}

#[test]
fn gcd_examples() {
    let k = PlainPoly::from_exponents(&[0, 4, 8, 12]);
    let g = poly_gcd(&k, &PlainPoly::x_pow_minus_one(16)).unwrap();
    assert_eq!(g, k);
    assert_eq!(g.degree(), Some(12));
    let one = PlainPoly::from_exponents(&[0]);
    assert_eq!(poly_gcd(&k, &one).unwrap(), one);
    assert!(poly_gcd(&PlainPoly::zero(), &PlainPoly::zero()).is_err());
}

#[test]
fn rank_examples() {
    assert_eq!(circulant_rank(&ring(16, &[0, 4, 8, 12])), 4);
    assert_eq!(circulant_rank(&ring(16, &[0, 1, 2, 3])), 13);
    assert_eq!(circulant_rank(&RingPoly::zero(16).unwrap()), 0);
}

/// Every `(r, p, q, k)` with `r = pq`, `p, q` in `[2, 8]` and `k` in `[0, r)`.
fn factorisation_grid() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (2..=8usize).flat_map(|p| (2..=8usize).flat_map(move |q| (0..p * q).map(move |k| (p * q, p, q, k))))
}

#[test]
fn comb_rows_have_rank_p() {
    for (r, p, q, k) in factorisation_grid() {
        let row: Vec<i64> = (0..q).map(|i| (k + p * i) as i64).collect();
        let poly = ring(r, &row);
        assert_eq!(circulant_rank(&poly), p, "r={r} p={p} k={k}");
        let oracle = rank(&circulant(r, &exps(&poly)));
        assert_eq!(oracle, p, "oracle r={r} p={p} k={k}");
    }
}

#[test]
fn run_rows_have_rank_r_minus_p_plus_one() {
    for (r, p, _, k) in factorisation_grid() {
        let row: Vec<i64> = (0..p).map(|i| (k + i) as i64).collect();
        let poly = ring(r, &row);
        assert_eq!(circulant_rank(&poly), r - p + 1, "r={r} p={p} k={k}");
        let oracle = rank(&circulant(r, &exps(&poly)));
        assert_eq!(oracle, r - p + 1, "oracle r={r} p={p} k={k}");
    }
}

/// All weight-`p` first rows for `r <= 16`, `r = pq`, `p, q > 1`, whose gcd
/// with `X^r - 1` is nontrivial, as `(r, p, row)`.
fn weight_p_rows_with_common_factor() -> Vec<(usize, usize, RingPoly)> {
    let mut out = Vec::new();
    for r in 4..=16usize {
        for p in (2..r).filter(|p| r % p == 0) {
            for mask in 0u32..(1 << r) {
                // Rotations share a rank, so fix the lowest exponent at 0.
                if mask & 1 == 0 || mask.count_ones() as usize != p {
                    continue;
                }
                let row: Vec<i64> = (0..r as i64).filter(|&i| mask >> i & 1 == 1).collect();
                let poly = ring(r, &row);
                if gcd_with_modulus(&poly).degree().is_some_and(|d| d > 0) {
                    out.push((r, p, poly));
                }
            }
        }
    }
    out
}

#[test]
fn corollary_counterexample_is_genuine() {
    // 1 + X + X^2 + X^4 over r = 8 has weight p = 4 and shares only 1 + X
    // with X^8 - 1; elimination confirms rank 7 > r - p + 1 = 5.
    let poly = ring(8, &[0, 1, 2, 4]);
    assert_eq!(gcd_with_modulus(&poly).degree(), Some(1));
    assert_eq!(rank(&circulant(8, &[0, 1, 2, 4])), 7);
    assert_eq!(circulant_rank(&poly), 7);
}

#[test]
fn weight_p_rank_bound_exhaustive() {
    let mut violations = Vec::new();
    let cases = weight_p_rows_with_common_factor();
    for (r, p, poly) in &cases {
        let rank = circulant_rank(poly);
        if rank > r - p + 1 {
            violations.push((*r, *p, exps(poly), rank));
        }
    }
    assert!(
        violations.is_empty(),
        "{} of {} weight-p rows exceed r - p + 1, first: {:?}",
        violations.len(),
        cases.len(),
        violations.first()
    );
}

fn ring_poly(max_r: usize) -> impl Strategy<Value = RingPoly> {
    (1..=max_r).prop_flat_map(|r| {
        proptest::collection::vec(any::<bool>(), r).prop_map(move |bits| {
            let e: Vec<i64> = (0..r as i64).filter(|&i| bits[i as usize]).collect();
            RingPoly::from_exponents(r, &e).unwrap()
        })
    })
}

fn ring_pair(max_r: usize) -> impl Strategy<Value = (RingPoly, RingPoly)> {
    (1..=max_r).prop_flat_map(|r| {
        let side = proptest::collection::vec(any::<bool>(), r).prop_map(move |bits| {
            let e: Vec<i64> = (0..r as i64).filter(|&i| bits[i as usize]).collect();
            RingPoly::from_exponents(r, &e).unwrap()
        });
        (side.clone(), side)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rank_via_gcd_matches_elimination(p in ring_poly(64)) {
        let oracle = rank(&circulant(p.modulus(), &exps(&p)));
        prop_assert_eq!(circulant_rank(&p), oracle);
        prop_assert_eq!(circulant_from_poly(&p).rank(), oracle);
    }
}

proptest! {
    #[test]
    fn product_matches_convolution((a, b) in ring_pair(32)) {
        let r = a.modulus();
        prop_assert_eq!(exps(&a.mul(&b).unwrap()), poly_mul(r, &exps(&a), &exps(&b)));
    }

    #[test]
    fn circulants_form_a_ring_isomorphism((a, b) in ring_pair(32)) {
        let lhs = circulant_from_poly(&a.mul(&b).unwrap());
        let rhs = circulant_from_poly(&a).multiply(&circulant_from_poly(&b)).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let sum = circulant_from_poly(&a.add(&b).unwrap());
        let oracle = BitMatrix::from_fn(a.modulus(), a.modulus(), |i, j| {
            circulant_from_poly(&a).get(i, j) ^ circulant_from_poly(&b).get(i, j)
        });
        prop_assert_eq!(sum, oracle);
    }

    #[test]
    fn transpose_is_an_involution(p in ring_poly(64)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(circulant_from_poly(&p.transpose()), circulant_from_poly(&p).transpose());
    }

    #[test]
    fn circulant_row_shifts(p in ring_poly(40)) {
        let m = circulant_from_poly(&p);
        let r = p.modulus();
        for i in 0..r {
            for j in 0..r {
                prop_assert_eq!(m.get(i, j), m.get((i + 1) % r, (j + 1) % r));
            }
        }
    }
}
