//! Exponent-matrix description of Type-I and Type-II QC-LDPC codes.
//!
//! Entry `(i, l)` of an [`ExponentMatrix`] names the `r x r` circulant block
//! in layer `i`, block column `l`: zero, `X^e`, or `X^{e1} + X^{e2}`. Row
//! differences of the exponent matrix decide both dual containment
//! (every residue occurs an even number of times) and the absence of
//! 4-cycles (no residue repeats).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::poly::RingPoly;

/// One circulant block of a QC parity-check matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpEntry {
    /// The all-zero block (`X^inf = 0`).
    Zero,
    Monomial(usize),
    Binomial(usize, usize),
}

impl ExpEntry {
    pub fn exponents(&self) -> impl Iterator<Item = usize> {
        let (terms, n) = match *self {
            ExpEntry::Zero => ([0, 0], 0),
            ExpEntry::Monomial(e) => ([e, 0], 1),
            ExpEntry::Binomial(a, b) => ([a, b], 2),
        };
        terms.into_iter().take(n)
    }

    pub fn weight(&self) -> usize {
        match self {
            ExpEntry::Zero => 0,
            ExpEntry::Monomial(_) => 1,
            ExpEntry::Binomial(..) => 2,
        }
    }

    pub fn to_poly(&self, r: usize) -> RingPoly {
        let exps: Vec<i64> = self.exponents().map(|e| e as i64).collect();
        RingPoly::from_exponents(r, &exps).expect("exponent matrix has r >= 2")
    }
}

/// A `J x L` grid of circulant descriptions over circulant size `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    r: usize,
    entries: Vec<Vec<ExpEntry>>,
}

/// `J x L` grid of ring elements.
pub type PolyMatrix = Vec<Vec<RingPoly>>;

impl ExponentMatrix {
    pub fn new(r: usize, entries: Vec<Vec<ExpEntry>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidExponentMatrix("circulant size must be at least 2"));
        }
        let cols = entries.first().map_or(0, Vec::len);
        if entries.is_empty() || cols == 0 {
            return Err(Error::InvalidExponentMatrix("need at least one row and column"));
        }
        for row in &entries {
            if row.len() != cols {
                return Err(Error::InvalidExponentMatrix("rows have different lengths"));
            }
            for e in row {
                match *e {
                    ExpEntry::Zero => {}
                    ExpEntry::Monomial(a) if a < r => {}
                    ExpEntry::Binomial(a, b) if a < r && b < r && a != b => {}
                    ExpEntry::Binomial(a, b) if a == b => {
                        return Err(Error::InvalidExponentMatrix("binomial exponents coincide"))
                    }
                    _ => return Err(Error::InvalidExponentMatrix("exponent not below r")),
                }
            }
        }
        Ok(Self { r, entries })
    }

    /// All-monomial matrix from a grid of exponents, reduced mod `r`.
    pub fn type_one(r: usize, exps: &[&[i64]]) -> Result<Self> {
        let entries = exps
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| ExpEntry::Monomial(e.rem_euclid(r.max(1) as i64) as usize))
                    .collect()
            })
            .collect();
        Self::new(r, entries)
    }

    #[inline]
    pub fn circulant_size(&self) -> usize {
        self.r
    }

    /// Number of layers `J`.
    #[inline]
    pub fn layers(&self) -> usize {
        self.entries.len()
    }

    /// Number of block columns `L`.
    #[inline]
    pub fn block_cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn block_length(&self) -> usize {
        self.r * self.block_cols()
    }

    #[inline]
    pub fn entry(&self, i: usize, l: usize) -> ExpEntry {
        self.entries[i][l]
    }

    pub fn rows(&self) -> &[Vec<ExpEntry>] {
        &self.entries
    }

    /// Every entry is a nonzero monomial.
    pub fn is_type_one(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|e| matches!(e, ExpEntry::Monomial(_)))
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i >= self.layers() {
            return Err(Error::RowIndex {
                index: i,
                len: self.layers(),
            });
        }
        Ok(())
    }

    /// `c_i - c_j` slot by slot. Indices are zero-based, so the vector
    /// usually written `d_21` is `row_difference(1, 0)`.
    pub fn row_difference(&self, i: usize, j: usize) -> Result<DifferenceVector> {
        self.check_row(i)?;
        self.check_row(j)?;
        let r = self.r;
        let slots = (0..self.block_cols())
            .map(|l| {
                let (a, b) = (self.entries[i][l], self.entries[j][l]);
                if a == ExpEntry::Zero || b == ExpEntry::Zero {
                    return DiffSlot::Infinite;
                }
                let mut res: Vec<usize> = a
                    .exponents()
                    .flat_map(|x| b.exponents().map(move |y| (x + r - y) % r))
                    .collect();
                res.sort_unstable();
                DiffSlot::Residues(res)
            })
            .collect();
        Ok(DifferenceVector { slots })
    }

    /// `c_i - c_i` with the trivial self-pairs `s - s` removed, leaving the
    /// cross terms `s - t` (`s != t`) of each binomial entry. These are the
    /// shifts at which layer `i` meets itself.
    pub fn self_cross_difference(&self, i: usize) -> Result<DifferenceVector> {
        self.check_row(i)?;
        let r = self.r;
        let slots = self.entries[i]
            .iter()
            .map(|e| match *e {
                ExpEntry::Zero => DiffSlot::Infinite,
                ExpEntry::Monomial(_) => DiffSlot::Residues(Vec::new()),
                ExpEntry::Binomial(a, b) => {
                    let mut res = vec![(a + r - b) % r, (b + r - a) % r];
                    res.sort_unstable();
                    DiffSlot::Residues(res)
                }
            })
            .collect();
        Ok(DifferenceVector { slots })
    }

    /// Polynomial parity-check matrix `H(X)`.
    pub fn expand_to_poly(&self) -> PolyMatrix {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_poly(self.r)).collect())
            .collect()
    }

    /// The `Jr x Lr` binary parity-check matrix.
    pub fn expand_to_binary(&self) -> BitMatrix {
        let r = self.r;
        let mut h = BitMatrix::zeros(self.layers() * r, self.block_length());
        for (i, row) in self.entries.iter().enumerate() {
            for (l, e) in row.iter().enumerate() {
                for x in 0..r {
                    for s in e.exponents() {
                        h.set(i * r + x, l * r + (x + s) % r, true);
                    }
                }
            }
        }
        h
    }

    /// `H(X) H(X)^T`, whose entry `(i, j)` is `sum_l h_il(X) h_jl(X)^T`.
    pub fn hhat(&self) -> PolyMatrix {
        let polys = self.expand_to_poly();
        let transposed: PolyMatrix = polys
            .iter()
            .map(|row| row.iter().map(RingPoly::transpose).collect())
            .collect();
        let zero = RingPoly::zero(self.r).expect("r >= 2");
        (0..self.layers())
            .map(|i| {
                (0..self.layers())
                    .map(|j| {
                        polys[i]
                            .iter()
                            .zip(&transposed[j])
                            .fold(zero.clone(), |acc, (a, bt)| {
                                acc.add(&a.mul(bt).expect("same modulus"))
                                    .expect("same modulus")
                            })
                    })
                    .collect()
            })
            .collect()
    }

    /// Dual-containment test on exponents alone: every difference `c_i - c_j`
    /// (diagonal included) is multiplicity even.
    pub fn dual_containing_screen(&self) -> bool {
        let j = self.layers();
        (0..j).all(|a| {
            (a..j).all(|b| {
                self.row_difference(a, b)
                    .expect("indices in range")
                    .is_multiplicity_even()
            })
        })
    }

    /// 4-cycle test on exponents alone: every off-diagonal difference is
    /// multiplicity free, and so is every layer's self cross difference.
    pub fn girth6_screen(&self) -> bool {
        let j = self.layers();
        let off_diagonal = (0..j).all(|a| {
            (a + 1..j).all(|b| {
                self.row_difference(a, b)
                    .expect("indices in range")
                    .is_multiplicity_free()
            })
        });
        off_diagonal
            && (0..j).all(|a| {
                self.self_cross_difference(a)
                    .expect("index in range")
                    .is_multiplicity_free()
            })
    }
}

/// True if `hhat_{i,j} = hhat_{i+1,j+1}` for all `i, j` in `0..J-1`.
pub fn satisfies_circulant_condition(hhat: &PolyMatrix) -> bool {
    let j = hhat.len();
    (0..j.saturating_sub(1)).all(|a| (0..j - 1).all(|b| hhat[a][b] == hhat[a + 1][b + 1]))
}

/// Lifts the first block column of `hhat` to a single element of
/// `F2[X]/(X^{Jr} - 1)`: `g(X) = sum_i X^{i r} hhat_{i,0}(X)`.
pub fn circulant_lift(hhat: &PolyMatrix) -> RingPoly {
    let j = hhat.len();
    let r = hhat[0][0].modulus();
    let exps: Vec<i64> = (0..j)
        .flat_map(|i| hhat[i][0].exponents().map(move |e| (i * r + e) as i64))
        .collect();
    RingPoly::from_exponents(j * r, &exps).expect("Jr >= 1")
}

/// One slot of a row difference.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DiffSlot {
    /// Either operand was the zero block.
    Infinite,
    /// Residues mod `r`, kept sorted (the slot is a multiset).
    Residues(Vec<usize>),
}

/// Row difference `c_i - c_j` of an exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DifferenceVector {
    pub slots: Vec<DiffSlot>,
}

impl DifferenceVector {
    /// Builds a vector from per-slot residue lists (`None` for infinity).
    pub fn from_slots(slots: &[Option<&[usize]>]) -> Self {
        Self {
            slots: slots
                .iter()
                .map(|s| match s {
                    None => DiffSlot::Infinite,
                    Some(v) => {
                        let mut v = v.to_vec();
                        v.sort_unstable();
                        DiffSlot::Residues(v)
                    }
                })
                .collect(),
        }
    }

    /// All residues of finite slots, sorted.
    fn pooled(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self
            .slots
            .iter()
            .filter_map(|s| match s {
                DiffSlot::Infinite => None,
                DiffSlot::Residues(v) => Some(v.iter().copied()),
            })
            .flatten()
            .collect();
        all.sort_unstable();
        all
    }

    fn run_lengths(&self) -> impl Iterator<Item = usize> {
        let all = self.pooled();
        let mut out = Vec::new();
        let mut i = 0;
        while i < all.len() {
            let start = i;
            while i < all.len() && all[i] == all[start] {
                i += 1;
            }
            out.push(i - start);
        }
        out.into_iter()
    }

    /// Every residue occurs an even number of times (infinite slots ignored).
    pub fn is_multiplicity_even(&self) -> bool {
        self.run_lengths().all(|n| n % 2 == 0)
    }

    /// No residue occurs twice (infinite slots ignored).
    pub fn is_multiplicity_free(&self) -> bool {
        self.run_lengths().all(|n| n == 1)
    }
}
