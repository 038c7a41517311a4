//! Syndrome-based sum-product decoding.
//!
//! Messages are log-likelihood ratios `ln(P(bit = 0) / P(bit = 1))` updated on
//! a flooding schedule. The check-node rule is the tanh product with the sign
//! flipped for checks whose syndrome bit is set. Every message is clamped to
//! `[-MESSAGE_CLAMP, MESSAGE_CLAMP]`; a posterior of exactly zero decides 0.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};

/// Magnitude bound applied to every message.
pub const MESSAGE_CLAMP: f64 = 30.0;

/// Edge lists of the bipartite check/variable graph of a check matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    checks: usize,
    vars: usize,
    /// Edges grouped by check: `check_start[c]..check_start[c + 1]`.
    check_start: Vec<usize>,
    edge_var: Vec<usize>,
    /// Edge ids grouped by variable.
    var_start: Vec<usize>,
    var_edges: Vec<usize>,
}

impl TannerGraph {
    pub fn new(h: &BitMatrix) -> Self {
        let (m, n) = (h.rows(), h.cols());
        let mut check_start = Vec::with_capacity(m + 1);
        let mut edge_var = Vec::new();
        check_start.push(0);
        for c in 0..m {
            edge_var.extend(h.row_support(c));
            check_start.push(edge_var.len());
        }
        let mut degree = vec![0usize; n];
        for &v in &edge_var {
            degree[v] += 1;
        }
        let mut var_start = vec![0usize; n + 1];
        for v in 0..n {
            var_start[v + 1] = var_start[v] + degree[v];
        }
        let mut fill = var_start.clone();
        let mut var_edges = vec![0usize; edge_var.len()];
        for (e, &v) in edge_var.iter().enumerate() {
            var_edges[fill[v]] = e;
            fill[v] += 1;
        }
        Self {
            checks: m,
            vars: n,
            check_start,
            edge_var,
            var_start,
            var_edges,
        }
    }

    pub fn checks(&self) -> usize {
        self.checks
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn edges(&self) -> usize {
        self.edge_var.len()
    }

    /// `(check, var)` pairs in check-major order.
    pub fn edge_list(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.checks).flat_map(move |c| {
            self.edge_var[self.check_start[c]..self.check_start[c + 1]]
                .iter()
                .map(move |&v| (c, v))
        })
    }

    /// Syndrome of `x` computed from the edge lists.
    pub fn syndrome(&self, x: &BitVec) -> BitVec {
        let mut s = BitVec::zeros(self.checks);
        for c in 0..self.checks {
            let parity = self.edge_var[self.check_start[c]..self.check_start[c + 1]]
                .iter()
                .fold(false, |acc, &v| acc ^ x.get(v));
            if parity {
                s.set(c, true);
            }
        }
        s
    }
}

/// Output of one decode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub estimate: BitVec,
    /// The estimate reproduces the target syndrome.
    pub converged: bool,
    pub iterations_used: usize,
}

#[inline]
fn clamp(x: f64) -> f64 {
    x.clamp(-MESSAGE_CLAMP, MESSAGE_CLAMP)
}

/// Estimate an error pattern `e` with `H e^T = syndrome`, each bit flipped
/// independently with probability `flip_prob`.
pub fn spa_decode(
    graph: &TannerGraph,
    syndrome: &BitVec,
    flip_prob: f64,
    max_iter: usize,
) -> Result<DecodeResult> {
    if syndrome.len() != graph.checks {
        return Err(Error::DimensionMismatch {
            context: "syndrome length",
            left: syndrome.len(),
            right: graph.checks,
        });
    }
    if !(flip_prob > 0.0 && flip_prob < 0.5) {
        return Err(Error::InvalidProbability(flip_prob));
    }
    if max_iter == 0 {
        return Err(Error::ZeroIterations);
    }

    let prior = libm::log((1.0 - flip_prob) / flip_prob);
    let edges = graph.edges();
    let mut to_check = vec![prior; edges];
    let mut to_var = vec![0.0f64; edges];
    let mut tanhs: Vec<f64> = Vec::new();
    let mut suffix: Vec<f64> = Vec::new();
    let mut estimate = BitVec::zeros(graph.vars);

    for iteration in 1..=max_iter {
        for c in 0..graph.checks {
            let range = graph.check_start[c]..graph.check_start[c + 1];
            let deg = range.len();
            if deg == 0 {
                continue;
            }
            tanhs.clear();
            tanhs.extend(to_check[range.clone()].iter().map(|&m| libm::tanh(0.5 * m)));
            suffix.clear();
            suffix.resize(deg + 1, 1.0);
            for t in (0..deg).rev() {
                suffix[t] = suffix[t + 1] * tanhs[t];
            }
            let sign = if syndrome.get(c) { -1.0 } else { 1.0 };
            let mut prefix = 1.0;
            for (t, e) in range.enumerate() {
                let others = prefix * suffix[t + 1];
                to_var[e] = clamp(sign * 2.0 * libm::atanh(others));
                prefix *= tanhs[t];
            }
        }

        for v in 0..graph.vars {
            let incident = &graph.var_edges[graph.var_start[v]..graph.var_start[v + 1]];
            let total = prior + incident.iter().map(|&e| to_var[e]).sum::<f64>();
            estimate.set(v, total < 0.0);
            for &e in incident {
                to_check[e] = clamp(total - to_var[e]);
            }
        }

        if graph.syndrome(&estimate) == *syndrome {
            return Ok(DecodeResult {
                estimate,
                converged: true,
                iterations_used: iteration,
            });
        }
    }
    Ok(DecodeResult {
        estimate,
        converged: false,
        iterations_used: max_iter,
    })
}
