//! Arithmetic in `F2[X]/(X^r - 1)` and plain `F2[X]`.
//!
//! A [`RingPoly`] is the canonical form of an `r x r` binary circulant matrix:
//! bit `e` of its coefficient vector is the entry in column `e` of the first
//! row. Sums and products of ring elements match sums and products of the
//! corresponding circulants, and the circulant's rank is read off from
//! `gcd(p(X), X^r - 1)` through [`circulant_rank`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gf2::{iter_ones, words_for, BitVec};

/// Element of `F2[X]/(X^r - 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingPoly {
    r: usize,
    coeffs: BitVec,
}

impl RingPoly {
    pub fn zero(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Self {
            r,
            coeffs: BitVec::zeros(r),
        })
    }

    /// Sum of `X^e` over `exps`, with exponents reduced mod `r`. Exponents
    /// occurring an even number of times cancel.
    pub fn from_exponents(r: usize, exps: &[i64]) -> Result<Self> {
        let mut p = Self::zero(r)?;
        for &e in exps {
            p.coeffs.flip(e.rem_euclid(r as i64) as usize);
        }
        Ok(p)
    }

    pub fn monomial(r: usize, e: usize) -> Result<Self> {
        Self::from_exponents(r, &[e as i64])
    }

    pub fn one(r: usize) -> Result<Self> {
        Self::monomial(r, 0)
    }

    #[inline]
    pub fn modulus(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn coeffs(&self) -> &BitVec {
        &self.coeffs
    }

    /// Set exponents in increasing order.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.ones()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.weight()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn check_modulus(&self, other: &RingPoly) -> Result<()> {
        if self.r != other.r {
            return Err(Error::ModulusMismatch {
                left: self.r,
                right: other.r,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RingPoly) -> Result<RingPoly> {
        self.check_modulus(other)?;
        let mut out = self.clone();
        out.coeffs.xor_assign(&other.coeffs);
        Ok(out)
    }

    /// Product reduced mod `X^r - 1`.
    pub fn mul(&self, other: &RingPoly) -> Result<RingPoly> {
        self.check_modulus(other)?;
        let r = self.r;
        let mut out = BitVec::zeros(r);
        let rhs: Vec<usize> = other.exponents().collect();
        for a in self.exponents() {
            for &b in &rhs {
                out.flip((a + b) % r);
            }
        }
        Ok(RingPoly { r, coeffs: out })
    }

    /// Polynomial of the transposed circulant: `X^k -> X^{(r-k) mod r}`.
    pub fn transpose(&self) -> RingPoly {
        let r = self.r;
        let mut out = BitVec::zeros(r);
        for e in self.exponents() {
            out.set((r - e) % r, true);
        }
        RingPoly { r, coeffs: out }
    }

    /// Lift to `F2[X]` (degree below `r`).
    pub fn to_plain(&self) -> PlainPoly {
        PlainPoly::from_words(self.coeffs.words().to_vec())
    }

    /// Rank of the associated circulant matrix.
    pub fn circulant_rank(&self) -> usize {
        circulant_rank(self)
    }
}

impl fmt::Debug for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingPoly(r={}, ", self.r)?;
        fmt_terms(f, self.exponents())?;
        write!(f, ")")
    }
}

impl fmt::Display for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, self.exponents())
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, exps: impl Iterator<Item = usize>) -> fmt::Result {
    let mut first = true;
    for e in exps {
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match e {
            0 => f.write_str("1")?,
            1 => f.write_str("X")?,
            _ => write!(f, "X^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Polynomial in `F2[X]` with no degree bound.
///
/// Trailing zero words are trimmed, so equality is structural and the leading
/// coefficient of a nonzero value is 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PlainPoly {
    words: Vec<u64>,
}

impl PlainPoly {
    fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let top = exps.iter().copied().max().map_or(0, |m| m + 1);
        let mut words = vec![0u64; words_for(top)];
        for &e in exps {
            words[e / 64] ^= 1u64 << (e % 64);
        }
        Self::from_words(words)
    }

    /// `X^r - 1`, which over GF(2) is `X^r + 1`.
    pub fn x_pow_minus_one(r: usize) -> Self {
        Self::from_exponents(&[0, r])
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        iter_ones(&self.words)
    }

    /// `self ^= other * X^shift`
    fn xor_shifted(&mut self, other: &PlainPoly, shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let needed = other.words.len() + ws + 1;
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Remainder of division by a nonzero divisor.
    pub fn rem(&self, divisor: &PlainPoly) -> Result<PlainPoly> {
        let dd = divisor.degree().ok_or(Error::ZeroGcd)?;
        let mut out = self.clone();
        while let Some(d) = out.degree() {
            if d < dd {
                break;
            }
            out.xor_shifted(divisor, d - dd);
        }
        Ok(out)
    }

    /// Monic greatest common divisor by Euclid's algorithm.
    pub fn gcd(&self, other: &PlainPoly) -> Result<PlainPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let rem = a.rem(&b)?;
            a = b;
            b = rem;
        }
        Ok(a)
    }
}

impl fmt::Debug for PlainPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlainPoly(")?;
        fmt_terms(f, self.exponents())?;
        write!(f, ")")
    }
}

/// Monic `gcd(a, b)` in `F2[X]`.
pub fn poly_gcd(a: &PlainPoly, b: &PlainPoly) -> Result<PlainPoly> {
    a.gcd(b)
}

/// `gcd(p(X), X^r - 1)` for a ring element.
pub fn gcd_with_modulus(p: &RingPoly) -> PlainPoly {
    p.to_plain()
        .gcd(&PlainPoly::x_pow_minus_one(p.modulus()))
        .expect("X^r - 1 is nonzero")
}

/// Rank of the circulant associated with `p`, as `r - deg gcd(p, X^r - 1)`.
/// The zero polynomial has rank 0.
pub fn circulant_rank(p: &RingPoly) -> usize {
    if p.is_zero() {
        return 0;
    }
    let k = gcd_with_modulus(p).degree().expect("gcd of nonzero input");
    p.modulus() - k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    fn ring(r: usize, exps: &[i64]) -> RingPoly {
        RingPoly::from_exponents(r, exps).unwrap()
    }

    #[test]
    fn constructor_reduces_and_cancels() {
        assert_eq!(ring(16, &[1, 4]).exponents().collect::<Vec<_>>(), [1, 4]);
        assert!(ring(16, &[]).is_zero());
        assert!(ring(16, &[3, 19]).is_zero());
        assert_eq!(ring(16, &[-1]).exponents().collect::<Vec<_>>(), [15]);
        assert_eq!(RingPoly::from_exponents(0, &[1]), Err(Error::ZeroModulus));
    }

    #[test]
    fn addition() {
        let p = ring(16, &[1, 4]);
        assert!(p.add(&p).unwrap().is_zero());
        assert_eq!(ring(16, &[1]).add(&ring(16, &[2])).unwrap(), ring(16, &[1, 2]));
        assert!(matches!(
            p.add(&ring(15, &[1])),
            Err(Error::ModulusMismatch { left: 16, right: 15 })
        ));
    }

    #[test]
    fn multiplication_small() {
        assert_eq!(ring(16, &[9]).mul(&ring(16, &[11])).unwrap(), ring(16, &[4]));
        let a = ring(16, &[0, 3, 7]);
        assert_eq!(a.mul(&RingPoly::one(16).unwrap()).unwrap(), a);
        assert!(a.mul(&ring(8, &[0])).is_err());
    }

    #[test]
    fn multiplication_matches_circulant_product() {
        // Frozen against the 16x16 circulant product: 1 + X^16 = 0 mod X^16 - 1.
        let a = ring(16, &[0, 4, 8, 12]);
        let b = ring(16, &[0, 4]);
        let via_matrix = BitMatrix::circulant(&a)
            .multiply(&BitMatrix::circulant(&b))
            .unwrap();
        let first_row: Vec<usize> = via_matrix.row_support(0).collect();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.exponents().collect::<Vec<_>>(), first_row);
        assert!(prod.is_zero());
    }

    #[test]
    fn transpose_rule() {
        assert_eq!(ring(16, &[5]).transpose(), ring(16, &[11]));
        assert_eq!(ring(16, &[0]).transpose(), ring(16, &[0]));
        assert_eq!(ring(16, &[1, 4]).transpose(), ring(16, &[15, 12]));
    }

    #[test]
    fn gcd_examples() {
        let k = PlainPoly::from_exponents(&[0, 4, 8, 12]);
        let g = k.gcd(&PlainPoly::x_pow_minus_one(16)).unwrap();
        assert_eq!(g, k);
        assert_eq!(g.degree(), Some(12));
        let one = PlainPoly::from_exponents(&[0]);
        assert_eq!(PlainPoly::from_exponents(&[1, 5, 9]).gcd(&one).unwrap(), one);
        assert_eq!(PlainPoly::zero().gcd(&PlainPoly::zero()), Err(Error::ZeroGcd));
        assert_eq!(PlainPoly::zero().gcd(&k).unwrap(), k);
    }

    #[test]
    fn gcd_across_word_boundary() {
        // (X^70 + 1) = (X^35 + 1)^2, so gcd with X^35 + 1 is X^35 + 1.
        let a = PlainPoly::x_pow_minus_one(70);
        let b = PlainPoly::x_pow_minus_one(35);
        assert_eq!(a.gcd(&b).unwrap(), b);
        assert_eq!(a.rem(&b).unwrap(), PlainPoly::zero());
    }

    #[test]
    fn rank_examples_from_factorisations() {
        assert_eq!(circulant_rank(&ring(16, &[0, 4, 8, 12])), 4);
        assert_eq!(circulant_rank(&ring(16, &[0, 1, 2, 3])), 13);
        assert_eq!(circulant_rank(&RingPoly::zero(16).unwrap()), 0);
        assert_eq!(circulant_rank(&RingPoly::one(9).unwrap()), 9);
    }

    #[test]
    fn display() {
        extern crate std;
        use std::string::ToString;
        assert_eq!(ring(16, &[0, 1, 4]).to_string(), "1 + X + X^4");
        assert_eq!(RingPoly::zero(4).unwrap().to_string(), "0");
    }
}
