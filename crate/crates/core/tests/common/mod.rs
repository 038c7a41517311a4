//! Independent reference implementations shared by the integration tests.
//! Everything here works on plain `Vec<Vec<u8>>` matrices and exponent lists
//! and shares no code with the library.
#![allow(dead_code)]

use proptest::prelude::*;
use qcldpc_core::{BitMatrix, ExpEntry, ExponentMatrix};

pub type Dense = Vec<Vec<u8>>;

pub fn dense(m: &BitMatrix) -> Dense {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| u8::from(m.get(i, j))).collect())
        .collect()
}

pub fn rank(m: &Dense) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] == 1) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && a[i][c] == 1 {
                for j in 0..cols {
                    a[i][j] ^= a[r][j];
                }
            }
        }
        r += 1;
    }
    r
}

pub fn product(a: &Dense, b: &Dense) -> Dense {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(0u8, |acc, k| acc ^ (row[k] & b[k][j])))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Dense) -> Dense {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}

pub fn is_zero(a: &Dense) -> bool {
    a.iter().flatten().all(|&b| b == 0)
}

/// `r x r` circulant whose row `i` has ones at `(i + e) mod r`.
pub fn circulant(r: usize, exps: &[usize]) -> Dense {
    let mut m = vec![vec![0u8; r]; r];
    for (i, row) in m.iter_mut().enumerate() {
        for &e in exps {
            row[(i + e) % r] ^= 1;
        }
    }
    m
}

/// Exponent support of a polynomial product, reduced mod `X^r - 1`.
pub fn poly_mul(r: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut c = vec![0u8; r];
    for &x in a {
        for &y in b {
            c[(x + y) % r] ^= 1;
        }
    }
    (0..r).filter(|&i| c[i] == 1).collect()
}

/// Binary expansion of an exponent matrix built entry by entry.
pub fn expand(e: &ExponentMatrix) -> Dense {
    let r = e.circulant_size();
    let (j, l) = (e.layers(), e.block_cols());
    let mut m = vec![vec![0u8; l * r]; j * r];
    for bi in 0..j {
        for bl in 0..l {
            let exps: Vec<usize> = e.entry(bi, bl).exponents().collect();
            let block = circulant(r, &exps);
            for (i, row) in block.iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    m[bi * r + i][bl * r + c] ^= v;
                }
            }
        }
    }
    m
}

/// Two rows sharing two columns form a 4-cycle.
pub fn has_four_cycle(m: &Dense) -> bool {
    for a in 0..m.len() {
        for b in a + 1..m.len() {
            let common = m[a].iter().zip(&m[b]).filter(|(x, y)| **x == 1 && **y == 1).count();
            if common >= 2 {
                return true;
            }
        }
    }
    false
}

pub fn entry_strategy(r: usize, allow_zero: bool, allow_binomial: bool) -> BoxedStrategy<ExpEntry> {
    let mono = (0..r).prop_map(ExpEntry::Monomial).boxed();
    let mut choices = vec![(4, mono)];
    if allow_zero {
        choices.push((1, Just(ExpEntry::Zero).boxed()));
    }
    if allow_binomial {
        choices.push((
            3,
            (0..r, 1..r)
                .prop_map(move |(a, d)| ExpEntry::Binomial(a, (a + d) % r))
                .boxed(),
        ));
    }
    proptest::strategy::Union::new_weighted(choices).boxed()
}

/// Exponent matrices with `r <= 16`, `J <= 3`, `L <= 8`.
pub fn exponent_matrix(type_one: bool) -> impl Strategy<Value = ExponentMatrix> {
    (2usize..=16, 1usize..=3, 1usize..=8).prop_flat_map(move |(r, j, l)| {
        proptest::collection::vec(
            proptest::collection::vec(entry_strategy(r, !type_one, !type_one), l),
            j,
        )
        .prop_map(move |rows| ExponentMatrix::new(r, rows).expect("strategy yields valid entries"))
    })
}
