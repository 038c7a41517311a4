//! Dense bit-packed vectors and matrices over GF(2).
//!
//! Rows are stored as `u64` words, least significant bit first. Padding bits
//! past `cols` are always zero, so word-level comparisons and popcounts are
//! exact. Elimination routines work on a private copy and never reorder the
//! caller's matrix.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::poly::RingPoly;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[inline]
fn tail_mask(bits: usize) -> u64 {
    match bits % WORD {
        0 => u64::MAX,
        rem => (1u64 << rem) - 1,
    }
}

/// Fixed-length bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector with the listed positions set. Repeated positions
    /// toggle, mirroring addition over GF(2).
    ///
    /// # Panics
    ///
    /// Panics if a position is `>= len`.
    pub fn from_positions<I: IntoIterator<Item = usize>>(len: usize, positions: I) -> Self {
        let mut v = Self::zeros(len);
        for p in positions {
            v.flip(p);
        }
        v
    }

    pub(crate) fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(len);
        }
        Self { len, words }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        parity_and(&self.words, &other.words)
    }

    /// Positions of set bits in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        iter_ones(&self.words)
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        write!(f, "]")
    }
}

#[inline]
fn parity_and(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        core::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            }
        })
    })
}

/// Dense row-major GF(2) matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Stacks row vectors of a common length.
    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "row length",
                    left: r.len(),
                    right: cols,
                });
            }
            m.row_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// The `r x r` circulant whose first row holds the coefficients of `p`
    /// and whose row `i` is row `i - 1` shifted right cyclically by one.
    pub fn circulant(p: &RingPoly) -> Self {
        let r = p.modulus();
        let mut m = Self::zeros(r, r);
        let exps: Vec<usize> = p.exponents().collect();
        for i in 0..r {
            for &e in &exps {
                m.set(i, (i + e) % r, true);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_vec(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row(i).to_vec())
    }

    /// Column indices of the set bits in row `i`.
    pub fn row_support(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row(i))
    }

    /// `rows[dst] ^= rows[src]`
    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        for (d, x) in b.iter_mut().zip(a) {
            *d ^= x;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// Copies `block` into this matrix with its top-left corner at `(row, col)`.
    pub fn place_block(&mut self, row: usize, col: usize, block: &BitMatrix) {
        assert!(row + block.rows <= self.rows && col + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in block.row_support(i) {
                self.set(row + i, col + j, true);
            }
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_support(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// GF(2) product `self * other`.
    pub fn multiply(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product inner dimension",
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        let s = out.stride;
        for i in 0..self.rows {
            let dst = &mut out.data[i * s..(i + 1) * s];
            for k in iter_ones(&self.data[i * self.stride..(i + 1) * self.stride]) {
                for (d, x) in dst.iter_mut().zip(other.row(k)) {
                    *d ^= x;
                }
            }
        }
        Ok(out)
    }

    /// `self * self^T`, the Gram matrix over GF(2).
    pub fn gram(&self) -> BitMatrix {
        BitMatrix::from_fn(self.rows, self.rows, |i, j| {
            parity_and(self.row(i), self.row(j))
        })
    }

    /// Matrix-vector product `self * x^T`, e.g. a syndrome.
    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                left: self.cols,
                right: x.len(),
            });
        }
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            if parity_and(self.row(i), x.words()) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|w| w.count_ones() as usize).sum())
            .collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for i in 0..self.rows {
            for j in self.row_support(i) {
                w[j] += 1;
            }
        }
        w
    }

    /// Gaussian elimination to reduced row echelon form, visiting columns in
    /// `column_order`. Returns the pivot column of each leading row; rows past
    /// the returned length are zero afterwards.
    pub(crate) fn reduce_in_order(&mut self, column_order: &[usize]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for &c in column_order {
            if next == self.rows {
                break;
            }
            let (w, mask) = (c / WORD, 1u64 << (c % WORD));
            let Some(p) = (next..self.rows).find(|&i| self.data[i * self.stride + w] & mask != 0)
            else {
                continue;
            };
            self.swap_rows(p, next);
            for i in 0..self.rows {
                if i != next && self.data[i * self.stride + w] & mask != 0 {
                    self.xor_row_into(next, i);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    /// Rank over GF(2). Non-destructive.
    pub fn rank(&self) -> usize {
        let order: Vec<usize> = (0..self.cols).collect();
        self.clone().reduce_in_order(&order).len()
    }

    /// Basis of the right null space `{x : self * x^T = 0}`; it has
    /// `cols - rank` elements.
    pub fn null_space_basis(&self) -> Vec<BitVec> {
        let order: Vec<usize> = (0..self.cols).collect();
        let mut m = self.clone();
        let pivots = m.reduce_in_order(&order);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVec::zeros(self.cols);
                x.set(f, true);
                for (r, &p) in pivots.iter().enumerate() {
                    if m.get(r, f) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Binary circulant matrix of a ring element.
pub fn circulant_from_poly(p: &RingPoly) -> BitMatrix {
    BitMatrix::circulant(p)
}
