//! Named code constructions: the two entanglement-assisted QC-LDPC examples,
//! the Type-I/Type-II teaching fixtures, MacKay's construction B bicycle code
//! and the Hagiwara-Imai CSS pair.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::channel::PreparedCode;
use crate::error::{Error, Result};
use crate::exponent::{ExpEntry, ExponentMatrix};
use crate::gf2::BitMatrix;
use crate::poly::RingPoly;

/// How the check matrices of a code are used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeKind {
    /// One arbitrary check matrix; ebits make up for `H H^T != 0`.
    EntanglementAssisted,
    /// One check matrix with `H H^T = 0`.
    DualContaining,
    /// Two matrices `(H_C, H_D)` with `H_C H_D^T = 0`.
    CssPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckMatrix {
    Exponent(ExponentMatrix),
    Binary(BitMatrix),
}

impl CheckMatrix {
    pub fn to_binary(&self) -> BitMatrix {
        match self {
            CheckMatrix::Exponent(e) => e.expand_to_binary(),
            CheckMatrix::Binary(b) => b.clone(),
        }
    }

    pub fn exponent(&self) -> Option<&ExponentMatrix> {
        match self {
            CheckMatrix::Exponent(e) => Some(e),
            CheckMatrix::Binary(_) => None,
        }
    }
}

/// Parameters a construction is claimed to achieve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeclaredParams {
    pub n: usize,
    pub k_logical: usize,
    pub ebits: usize,
    pub distance: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub name: String,
    pub kind: CodeKind,
    /// One matrix, or `[H_C, H_D]` for a CSS pair.
    pub checks: Vec<CheckMatrix>,
    pub declared: Option<DeclaredParams>,
}

impl CodeSpec {
    /// Matrix whose syndrome reveals the X component of an error.
    pub fn x_detector(&self) -> BitMatrix {
        match self.kind {
            CodeKind::CssPair => self.checks[1].to_binary(),
            _ => self.checks[0].to_binary(),
        }
    }

    /// Matrix whose syndrome reveals the Z component of an error.
    pub fn z_detector(&self) -> BitMatrix {
        self.checks[0].to_binary()
    }

    pub fn block_length(&self) -> usize {
        self.checks[0].to_binary().cols()
    }

    pub fn prepare(&self) -> PreparedCode {
        match self.kind {
            CodeKind::CssPair => PreparedCode::new(self.x_detector(), self.z_detector()),
            _ => PreparedCode::single(self.checks[0].to_binary()),
        }
    }
}

fn single(
    name: &str,
    kind: CodeKind,
    matrix: ExponentMatrix,
    declared: Option<DeclaredParams>,
) -> CodeSpec {
    CodeSpec {
        name: name.into(),
        kind,
        checks: vec![CheckMatrix::Exponent(matrix)],
        declared,
    }
}

/// Type-I code with `hhat_{i,j} = hhat_{i+1,j+1}`, `[[128,58,6;18]]`.
pub fn ex1() -> CodeSpec {
    let rows: [&[i64]; 3] = [
        &[1, 1, 1, 1, 1, 1, 1, 1],
        &[1, 2, 3, 4, 5, 6, 7, 8],
        &[1, 3, 5, 7, 9, 11, 13, 15],
    ];
    single(
        "ex1",
        CodeKind::EntanglementAssisted,
        ExponentMatrix::type_one(16, &rows).expect("valid exponents"),
        Some(DeclaredParams {
            n: 128,
            k_logical: 58,
            ebits: 18,
            distance: Some(6),
        }),
    )
}

/// Type-II code meeting the block-rank bound, `[[128,58,6;18]]`.
pub fn ex2() -> CodeSpec {
    use ExpEntry::{Binomial as B, Monomial as M, Zero as Z};
    let e = ExponentMatrix::new(
        16,
        vec![
            vec![B(1, 2), Z, B(1, 4), Z, B(1, 6), Z, B(1, 8), Z],
            vec![M(5), M(5), M(6), M(6), M(7), M(7), M(8), M(8)],
            vec![Z, B(1, 2), Z, B(1, 4), Z, B(1, 6), Z, B(1, 8)],
        ],
    )
    .expect("valid exponents");
    single(
        "ex2",
        CodeKind::EntanglementAssisted,
        e,
        Some(DeclaredParams {
            n: 128,
            k_logical: 58,
            ebits: 18,
            distance: Some(6),
        }),
    )
}

/// Type-I `(3,8)`-regular fixture with `r = 16`.
pub fn type1_example() -> CodeSpec {
    let rows: [&[i64]; 3] = [
        &[1, 1, 1, 1, 1, 1, 1, 1],
        &[2, 5, 3, 5, 2, 5, 3, 5],
        &[2, 3, 4, 5, 6, 7, 8, 9],
    ];
    single(
        "type1-example",
        CodeKind::EntanglementAssisted,
        ExponentMatrix::type_one(16, &rows).expect("valid exponents"),
        None,
    )
}

/// Type-II `(3,4)`-regular fixture with `r = 16`; its first layer has 4-cycles.
pub fn type2_example() -> CodeSpec {
    use ExpEntry::{Binomial as B, Monomial as M, Zero as Z};
    let e = ExponentMatrix::new(
        16,
        vec![
            vec![B(1, 4), Z, B(7, 10), Z],
            vec![M(5), M(6), M(11), M(12)],
            vec![Z, B(2, 9), Z, B(7, 13)],
        ],
    )
    .expect("valid exponents");
    single("type2-example", CodeKind::EntanglementAssisted, e, None)
}

/// Seed of the candidate stream used to pick MacKay-B's cyclic matrix.
pub const MACKAY_DEFAULT_SEED: u64 = 0x4d61_634b_6179_4221;
/// Number of candidate first rows examined.
pub const MACKAY_DEFAULT_CANDIDATES: usize = 64;

/// Construction B: the first `m` rows of `[C, C^T]`, where `C` is the
/// `n/2 x n/2` circulant with first-row support `first_row`.
pub fn mackay_b(n: usize, m: usize, row_weight: usize, first_row: &[usize]) -> Result<CodeSpec> {
    let matrix = mackay_b_matrix(n, m, row_weight, first_row)?;
    Ok(CodeSpec {
        name: "mackay-b".into(),
        kind: CodeKind::DualContaining,
        checks: vec![CheckMatrix::Binary(matrix)],
        declared: None,
    })
}

fn mackay_b_matrix(n: usize, m: usize, row_weight: usize, first_row: &[usize]) -> Result<BitMatrix> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidConstruction("block length must be even"));
    }
    if !row_weight.is_multiple_of(2) {
        return Err(Error::InvalidConstruction("row weight must be even"));
    }
    let half = n / 2;
    if m > half {
        return Err(Error::InvalidConstruction("more rows requested than [C, C^T] has"));
    }
    let exps: Vec<i64> = first_row.iter().map(|&e| e as i64).collect();
    let c = RingPoly::from_exponents(half, &exps)?;
    if c.weight() != row_weight / 2 || first_row.len() != row_weight / 2 {
        return Err(Error::InvalidConstruction("first row weight must be half the row weight"));
    }
    let blocks = [BitMatrix::circulant(&c), BitMatrix::circulant(&c.transpose())];
    let mut h = BitMatrix::zeros(m, n);
    for i in 0..m {
        for (b, block) in blocks.iter().enumerate() {
            for j in block.row_support(i) {
                h.set(i, b * half + j, true);
            }
        }
    }
    Ok(h)
}

/// First-row support for [`ex_mackay`]: among seeded random candidates, the
/// first one of maximal rank whose matrix has no zero column.
pub fn mackay_default_support(n: usize, m: usize, row_weight: usize, seed: u64, candidates: usize) -> Vec<usize> {
    let half = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for _ in 0..candidates {
        let mut support: Vec<usize> = Vec::with_capacity(row_weight / 2);
        while support.len() < row_weight / 2 {
            let e = (rng.next_u64() % half as u64) as usize;
            if !support.contains(&e) {
                support.push(e);
            }
        }
        support.sort_unstable();
        let h = mackay_b_matrix(n, m, row_weight, &support).expect("valid parameters");
        if h.col_weights().contains(&0) {
            continue;
        }
        let rank = h.rank();
        if best.as_ref().is_none_or(|(r, _)| rank > *r) {
            best = Some((rank, support));
        }
    }
    best.map(|(_, s)| s).expect("at least one candidate passes the screens")
}

/// Construction B with `n = 128`, `m = 48`, row weight 8 and the default
/// cyclic matrix, `[[128,32]]`.
pub fn ex_mackay() -> CodeSpec {
    let support = mackay_default_support(128, 48, 8, MACKAY_DEFAULT_SEED, MACKAY_DEFAULT_CANDIDATES);
    let mut spec = mackay_b(128, 48, 8, &support).expect("default parameters are valid");
    spec.name = "ex-mackay".into();
    spec.declared = Some(DeclaredParams {
        n: 128,
        k_logical: 32,
        ebits: 0,
        distance: None,
    });
    spec
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc
}

fn multiplicative_order(x: u64, modulus: u64) -> u64 {
    let mut acc = x % modulus;
    let mut ord = 1;
    while acc != 1 {
        acc = acc * x % modulus;
        ord += 1;
    }
    ord
}

/// Hagiwara-Imai CSS pair over circulant size `P`.
///
/// With `s = ord(sigma)` and `L = 2s`, for `0 <= l < s`:
/// `c_{j,l} = sigma^{l-j}`, `d_{k,l} = tau sigma^{l-k-1}`, and for
/// `s <= l < L`: `c_{j,l} = -tau sigma^{j-1+l}`, `d_{k,l} = -sigma^{k+l}`,
/// all mod `P`. `tau` must be nonzero and outside the subgroup generated by
/// `sigma`, which requires `ord(sigma) != |Z_P^*|`. It need not be a unit:
/// the `(3, 3, 15, 2, 3)` instance uses `tau = 3`.
pub fn hagiwara_imai(j_rows: usize, k_rows: usize, p: u64, sigma: u64, tau: u64) -> Result<CodeSpec> {
    if p <= 2 {
        return Err(Error::InvalidConstruction("P must exceed 2"));
    }
    if gcd(sigma % p, p) != 1 {
        return Err(Error::InvalidConstruction("sigma is not a unit mod P"));
    }
    let units = (1..p).filter(|&z| gcd(z, p) == 1).count() as u64;
    let ord = multiplicative_order(sigma % p, p);
    if ord == units {
        return Err(Error::InvalidConstruction("ord(sigma) equals the order of Z_P^*"));
    }
    if tau.is_multiple_of(p) {
        return Err(Error::InvalidConstruction("tau is zero mod P"));
    }
    if (0..ord).any(|e| pow_mod(sigma, e, p) == tau % p) {
        return Err(Error::InvalidConstruction("tau lies in the subgroup generated by sigma"));
    }
    let half = ord as usize;
    if j_rows == 0 || j_rows > half {
        return Err(Error::InvalidConstruction("J must lie in 1..=ord(sigma)"));
    }
    if k_rows == 0 || k_rows > half {
        return Err(Error::InvalidConstruction("K must lie in 1..=ord(sigma)"));
    }
    let sig = |e: i64| pow_mod(sigma, e.rem_euclid(ord as i64) as u64, p);
    let neg = |x: u64| (p - x % p) % p;
    let l_total = 2 * half;
    let c_rows: Vec<Vec<ExpEntry>> = (0..j_rows as i64)
        .map(|j| {
            (0..l_total as i64)
                .map(|l| {
                    let v = if (l as usize) < half {
                        sig(l - j)
                    } else {
                        neg(tau * sig(j - 1 + l) % p)
                    };
                    ExpEntry::Monomial(v as usize)
                })
                .collect()
        })
        .collect();
    let d_rows: Vec<Vec<ExpEntry>> = (0..k_rows as i64)
        .map(|k| {
            (0..l_total as i64)
                .map(|l| {
                    let v = if (l as usize) < half {
                        tau % p * sig(l - k - 1) % p
                    } else {
                        neg(sig(k + l))
                    };
                    ExpEntry::Monomial(v as usize)
                })
                .collect()
        })
        .collect();
    let r = p as usize;
    let h_c = ExponentMatrix::new(r, c_rows)?;
    let h_d = ExponentMatrix::new(r, d_rows)?;
    Ok(CodeSpec {
        name: "hagiwara-imai".into(),
        kind: CodeKind::CssPair,
        checks: vec![CheckMatrix::Exponent(h_c), CheckMatrix::Exponent(h_d)],
        declared: None,
    })
}

/// The Hagiwara-Imai pair with `(J, K, P, sigma, tau) = (3, 3, 15, 2, 3)`,
/// `[[120,38,4]]`.
pub fn ex_hi() -> CodeSpec {
    let mut spec = hagiwara_imai(3, 3, 15, 2, 3).expect("valid parameters");
    spec.name = "ex-hi".into();
    spec.declared = Some(DeclaredParams {
        n: 120,
        k_logical: 38,
        ebits: 0,
        distance: Some(4),
    });
    spec
}

/// The four benchmark codes compared under depolarizing noise.
pub fn benchmark_codes() -> Vec<CodeSpec> {
    vec![ex1(), ex2(), ex_mackay(), ex_hi()]
}

/// Every built-in code: benchmarks first, then the teaching fixtures.
pub fn builtin_codes() -> Vec<CodeSpec> {
    let mut all = benchmark_codes();
    all.push(type1_example());
    all.push(type2_example());
    all
}

/// Look up a built-in code by name.
pub fn builtin(name: &str) -> Option<CodeSpec> {
    match name {
        "ex1" => Some(ex1()),
        "ex2" => Some(ex2()),
        "ex-mackay" => Some(ex_mackay()),
        "ex-hi" => Some(ex_hi()),
        "type1-example" => Some(type1_example()),
        "type2-example" => Some(type2_example()),
        _ => None,
    }
}
