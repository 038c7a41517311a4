//! Structural analysis of binary parity-check matrices: Tanner-graph girth,
//! ebit counts and entanglement-assisted code parameters, CSS compatibility,
//! the block-rank bound, and randomized distance search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::exponent::ExponentMatrix;
use crate::gf2::{BitMatrix, BitVec};
use crate::poly::gcd_with_modulus;

/// Length of the shortest cycle of a Tanner graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    /// Acyclic graph, or no cycle within the searched length.
    Infinite,
}

impl Girth {
    pub fn at_least(&self, len: usize) -> bool {
        match *self {
            Girth::Finite(g) => g >= len,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Bipartite adjacency: vertices `0..n` are variables, `n..n+m` checks.
fn tanner_adjacency(h: &BitMatrix) -> Vec<Vec<usize>> {
    let n = h.cols();
    let mut adj = vec![Vec::new(); n + h.rows()];
    for c in 0..h.rows() {
        for v in h.row_support(c) {
            adj[v].push(n + c);
            adj[n + c].push(v);
        }
    }
    adj
}

/// Shortest cycle of length at most `limit`, if any. A BFS is run from
/// every vertex and stopped once no shorter cycle can be closed.
pub fn shortest_cycle_up_to(h: &BitMatrix, limit: usize) -> Option<usize> {
    let adj = tanner_adjacency(h);
    let total = adj.len();
    let mut best = limit.saturating_add(1);
    let mut dist = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for s in 0..total {
        if adj[s].len() < 2 {
            continue;
        }
        dist[s] = 0;
        touched.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            // Any cycle closed from here has length >= 2 * dist[u] + 1.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
        queue.clear();
        for &t in &touched {
            dist[t] = usize::MAX;
            parent[t] = usize::MAX;
        }
        touched.clear();
    }
    (best <= limit).then_some(best)
}

/// Exact girth of the Tanner graph of `h`.
pub fn tanner_girth(h: &BitMatrix) -> Girth {
    match shortest_cycle_up_to(h, usize::MAX - 1) {
        Some(g) => Girth::Finite(g),
        None => Girth::Infinite,
    }
}

/// Girth search truncated at length 6: distinguishes `4` from `>= 6`.
/// Returns `Finite(4)` or `Infinite` meaning "no 4-cycle".
pub fn girth_screen_depth6(h: &BitMatrix) -> Girth {
    match shortest_cycle_up_to(h, 4) {
        Some(g) => Girth::Finite(g),
        None => Girth::Infinite,
    }
}

/// Block length, dimension, rank and girth of `C(H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalCodeInfo {
    pub n: usize,
    pub k: usize,
    pub rank: usize,
    pub girth: Girth,
}

pub fn classical_info(h: &BitMatrix) -> ClassicalCodeInfo {
    let rank = h.rank();
    ClassicalCodeInfo {
        n: h.cols(),
        k: h.cols() - rank,
        rank,
        girth: tanner_girth(h),
    }
}

/// Unreduced fraction, printed as `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rate {
    pub num: i64,
    pub den: u64,
}

impl Rate {
    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Rate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parameters `[[n, k', d; c]]` of the entanglement-assisted code built from
/// one classical check matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EaqeccParams {
    pub n: usize,
    /// Dimension of the classical code.
    pub k: usize,
    pub rank: usize,
    /// `k' = 2k - n + c`
    pub k_logical: usize,
    /// `c = rank(H H^T)`
    pub ebits: usize,
    pub d_upper: Option<usize>,
    /// `(k' - c) / n`
    pub net_rate: Rate,
    /// `c / n`
    pub entanglement_rate: Rate,
}

impl fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}", self.n, self.k_logical)?;
        if let Some(d) = self.d_upper {
            write!(f, ",{d}")?;
        }
        write!(f, ";{}]]", self.ebits)
    }
}

/// Number of ebits needed by the entanglement-assisted code of `h`.
pub fn ebit_count(h: &BitMatrix) -> usize {
    h.gram().rank()
}

pub fn is_dual_containing(h: &BitMatrix) -> bool {
    h.gram().is_zero()
}

pub fn eaqecc_params(h: &BitMatrix, d_upper: Option<usize>) -> Result<EaqeccParams> {
    if h.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let n = h.cols();
    let rank = h.rank();
    let k = n - rank;
    let ebits = ebit_count(h);
    // Sylvester's inequality gives c >= 2 rank - n, so k' >= 0.
    let k_logical = 2 * k + ebits - n;
    Ok(EaqeccParams {
        n,
        k,
        rank,
        k_logical,
        ebits,
        d_upper,
        net_rate: Rate {
            num: k_logical as i64 - ebits as i64,
            den: n as u64,
        },
        entanglement_rate: Rate {
            num: ebits as i64,
            den: n as u64,
        },
    })
}

/// Outcome of pairing two check matrices in a CSS code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CssPairCheck {
    /// `H_C H_D^T = 0`
    pub compatible: bool,
    pub n: usize,
    /// `n - rank(H_C) - rank(H_D)`
    pub k_logical: i64,
}

/// CSS compatibility of `(h_c, h_d)`. By convention `h_c` detects Z errors
/// and `h_d` detects X errors.
pub fn css_pair_check(h_c: &BitMatrix, h_d: &BitMatrix) -> Result<CssPairCheck> {
    if h_c.cols() != h_d.cols() {
        return Err(Error::DimensionMismatch {
            context: "CSS pair column counts",
            left: h_c.cols(),
            right: h_d.cols(),
        });
    }
    let n = h_c.cols();
    let compatible = h_c.multiply(&h_d.transpose())?.is_zero();
    Ok(CssPairCheck {
        compatible,
        n,
        k_logical: n as i64 - h_c.rank() as i64 - h_d.rank() as i64,
    })
}

/// `J (r - L + 1)`, the upper bound on `rank(H H^T)` when
/// [`rank_bound_applies`] holds. Saturates at zero.
pub fn rank_bound(e: &ExponentMatrix) -> usize {
    let (j, r, l) = (e.layers(), e.circulant_size(), e.block_cols());
    j * (r + 1).saturating_sub(l)
}

/// Hypotheses of [`rank_bound`]: `L` is a proper divisor of `r` greater than
/// one, every nonzero `hhat_{i,j}` has exactly `L` terms, and each of them
/// shares a nontrivial factor with `X^r - 1`.
pub fn rank_bound_applies(e: &ExponentMatrix) -> bool {
    let (r, l) = (e.circulant_size(), e.block_cols());
    if l < 2 || l >= r || r % l != 0 {
        return false;
    }
    e.hhat().iter().flatten().filter(|p| !p.is_zero()).all(|p| {
        p.weight() == l && gcd_with_modulus(p).degree().is_some_and(|d| d > 0)
    })
}

/// Lightest nonzero codeword found by the distance search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceEstimate {
    pub weight: usize,
    /// Witness with `H x^T = 0`.
    pub codeword: BitVec,
}

/// Randomized information-set search for a light nonzero codeword of `C(H)`.
///
/// Each of the `budget` rounds permutes the columns at random, brings a
/// generator matrix to systematic form on the permuted order and inspects
/// every row and every sum of two rows. The result bounds the minimum distance
/// from above, is deterministic in `seed`, and never increases with `budget`.
pub fn min_distance_upper_bound(
    h: &BitMatrix,
    budget: usize,
    seed: u64,
) -> Result<DistanceEstimate> {
    let n = h.cols();
    let basis = h.null_space_basis();
    if basis.is_empty() {
        return Err(Error::TrivialCode);
    }
    let generator = BitMatrix::from_rows(n, &basis)?;
    let mut best = basis
        .iter()
        .min_by_key(|v| v.weight())
        .cloned()
        .expect("nonempty basis");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut scratch = vec![0u64; generator.row(0).len()];
    for _ in 0..budget {
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            order.swap(i, j);
        }
        let mut g = generator.clone();
        let k = g.reduce_in_order(&order).len();
        for a in 0..k {
            let ra = g.row(a);
            let wa: u32 = ra.iter().map(|w| w.count_ones()).sum();
            if (wa as usize) < best.weight() {
                best = g.row_vec(a);
            }
            for b in a + 1..k {
                let mut w = 0u32;
                for ((s, x), y) in scratch.iter_mut().zip(ra).zip(g.row(b)) {
                    *s = x ^ y;
                    w += s.count_ones();
                }
                if (w as usize) < best.weight() {
                    best = BitVec::from_words(n, scratch.clone());
                }
            }
        }
    }
    Ok(DistanceEstimate {
        weight: best.weight(),
        codeword: best,
    })
}
