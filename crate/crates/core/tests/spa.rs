use std::collections::HashMap;

use qcldpc_core::codes::ex1;
use qcldpc_core::spa::MESSAGE_CLAMP;
use qcldpc_core::{spa_decode, tanner_girth, BitMatrix, BitVec, ExponentMatrix, TannerGraph};

/// Two-layer cycle code `[[I, I], [I, X]]` over `r = 5`: `n = 10`, girth 20.
fn toy() -> BitMatrix {
    ExponentMatrix::type_one(5, &[&[0, 0], &[0, 1]]).unwrap().expand_to_binary()
}

/// Minimum-weight coset leaders of every syndrome, found by brute force over
/// all `2^n` error patterns: `syndrome -> (leader weight, number of leaders)`.
fn coset_leaders(h: &BitMatrix) -> HashMap<Vec<bool>, (usize, usize)> {
    let n = h.cols();
    let mut table: HashMap<Vec<bool>, (usize, usize)> = HashMap::new();
    for mask in 0u64..1 << n {
        let support: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        let syndrome: Vec<bool> = (0..h.rows())
            .map(|i| support.iter().filter(|&&j| h.get(i, j)).count() % 2 == 1)
            .collect();
        let w = support.len();
        let slot = table.entry(syndrome).or_insert((usize::MAX, 0));
        if w < slot.0 {
            *slot = (w, 1);
        } else if w == slot.0 {
            slot.1 += 1;
        }
    }
    table
}

fn to_bitvec(bits: &[bool]) -> BitVec {
    BitVec::from_positions(bits.len(), (0..bits.len()).filter(|&i| bits[i]))
}

#[test]
fn toy_code_shape() {
    let h = toy();
    assert_eq!((h.rows(), h.cols()), (10, 10));
    assert_eq!(h.rank(), 9);
    assert!(tanner_girth(&h).at_least(6));
    assert_eq!(coset_leaders(&h).len(), 1 << 9);
}

#[test]
fn toy_code_matches_coset_leaders() {
    let h = toy();
    let g = TannerGraph::new(&h);
    let table = coset_leaders(&h);
    let matched = table
        .iter()
        .filter(|(s, (w, _))| {
            let out = spa_decode(&g, &to_bitvec(s), 0.05, 100).unwrap();
            out.converged && out.estimate.weight() == *w
        })
        .count();
    let fraction = matched as f64 / table.len() as f64;
    assert!(fraction >= 0.95, "matched {matched} of {} syndromes ({fraction:.4})", table.len());
}

#[test]
fn toy_code_decodes_every_unique_leader() {
    let h = toy();
    let g = TannerGraph::new(&h);
    let table = coset_leaders(&h);
    let mut unique = 0;
    for (s, &(w, count)) in &table {
        let out = spa_decode(&g, &to_bitvec(s), 0.05, 100).unwrap();
        if count == 1 {
            unique += 1;
            assert!(out.converged && out.estimate.weight() == w, "syndrome {s:?}");
        }
    }
    // On a 10-cycle every coset with two weight-5 members is a tie.
    assert_eq!(unique, 512 - 126);
}

#[test]
fn converged_fraction_is_monotone_in_max_iter() {
    let h = toy();
    let g = TannerGraph::new(&h);
    let table = coset_leaders(&h);
    let mut last = 0;
    for max_iter in [1, 2, 3, 5, 10, 25, 50, 100] {
        let converged = table
            .keys()
            .filter(|s| spa_decode(&g, &to_bitvec(s), 0.05, max_iter).unwrap().converged)
            .count();
        assert!(converged >= last, "max_iter {max_iter}: {converged} < {last}");
        last = converged;
    }
}

#[test]
fn converged_estimates_reproduce_the_syndrome() {
    let h = toy();
    let g = TannerGraph::new(&h);
    for s in coset_leaders(&h).keys() {
        let target = to_bitvec(s);
        let out = spa_decode(&g, &target, 0.05, 100).unwrap();
        if out.converged {
            assert_eq!(h.mul_vec(&out.estimate).unwrap(), target);
        }
    }
}

#[test]
fn ex1_weight_one_errors() {
    let h = ex1().checks[0].to_binary();
    let g = TannerGraph::new(&h);
    assert_eq!((g.checks(), g.vars(), g.edges()), (48, 128, 384));
    // Oracle: all single-column syndromes are distinct and nonzero, so each
    // weight-1 error is the unique lightest member of its coset.
    let columns: Vec<BitVec> = (0..128).map(|j| h.mul_vec(&BitVec::from_positions(128, [j])).unwrap()).collect();
    for a in 0..128 {
        assert!(!columns[a].is_zero());
        for b in a + 1..128 {
            assert_ne!(columns[a], columns[b]);
        }
    }
    for (j, s) in columns.iter().enumerate() {
        let out = spa_decode(&g, s, 0.02, 100).unwrap();
        assert!(out.converged, "bit {j}");
        assert_eq!(out.estimate, BitVec::from_positions(128, [j]));
    }
}

#[test]
fn output_depends_only_on_the_syndrome() {
    let h = ex1().checks[0].to_binary();
    let g = TannerGraph::new(&h);
    let basis = h.null_space_basis();
    let mut seed = 5u64;
    for _ in 0..50 {
        let mut e = BitVec::zeros(128);
        for _ in 0..4 {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            e.flip((seed >> 33) as usize % 128);
        }
        let mut e2 = e.clone();
        e2.xor_assign(&basis[(seed >> 20) as usize % basis.len()]);
        let (s, s2) = (h.mul_vec(&e).unwrap(), h.mul_vec(&e2).unwrap());
        assert_eq!(s, s2);
        assert_eq!(spa_decode(&g, &s, 0.03, 60).unwrap(), spa_decode(&g, &s2, 0.03, 60).unwrap());
    }
}

#[test]
fn decoding_is_deterministic() {
    let h = ex1().checks[0].to_binary();
    let g = TannerGraph::new(&h);
    let s = h.mul_vec(&BitVec::from_positions(128, [0, 17, 40, 99, 120])).unwrap();
    let a = spa_decode(&g, &s, 0.04, 100).unwrap();
    let b = spa_decode(&g, &s, 0.04, 100).unwrap();
    assert_eq!(a, b);
}

#[test]
fn extreme_priors_stay_finite() {
    // Priors beyond the clamp still produce a decision.
    let h = toy();
    let g = TannerGraph::new(&h);
    assert!((1e-20f64 / (1.0 - 1e-20)).ln().abs() > MESSAGE_CLAMP);
    let s = h.mul_vec(&BitVec::from_positions(10, [3])).unwrap();
    let out = spa_decode(&g, &s, 1e-20, 50).unwrap();
    assert!(out.converged);
    assert_eq!(out.estimate, BitVec::from_positions(10, [3]));
}

#[test]
fn tanner_graph_edges_match_matrix() {
    let h = ex1().checks[0].to_binary();
    let g = TannerGraph::new(&h);
    let mut edges: Vec<(usize, usize)> = g.edge_list().collect();
    edges.sort_unstable();
    let mut expected: Vec<(usize, usize)> = (0..h.rows()).flat_map(|i| h.row_support(i).map(move |j| (i, j))).collect();
    expected.sort_unstable();
    assert_eq!(edges, expected);
}
