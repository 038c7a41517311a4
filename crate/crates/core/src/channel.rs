//! Depolarizing noise and single-trial CSS decoding.
//!
//! A Pauli error on `n` qubits is split into its X component `e_x` (set by X
//! and Y) and its Z component `e_z` (set by Z and Y). Each component is decoded
//! on its own check matrix with flip probability `2 f_m`, and a trial succeeds
//! only if both estimates equal the sampled components exactly. For
//! entanglement-assisted codes the receiver's halves of the ebits never see
//! noise, so only the `n` channel qubits are sampled.

use rand_core::RngCore;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::spa::{spa_decode, DecodeResult, TannerGraph};

/// Largest `f_m` accepted: the component prior `2 f_m` must stay below 1/2.
pub const MAX_FM: f64 = 0.25;

/// Uniform sample in `[0, 1)` from the top 53 bits of a 64-bit draw.
#[inline]
pub fn uniform_unit<R: RngCore + ?Sized>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Per qubit: X, Z, Y each with probability `f_m`, identity otherwise.
/// Exactly one uniform draw is consumed per qubit.
pub fn sample_depolarizing<R: RngCore + ?Sized>(n: usize, f_m: f64, rng: &mut R) -> Result<(BitVec, BitVec)> {
    if !(0.0..1.0 / 3.0).contains(&f_m) {
        return Err(Error::InvalidProbability(f_m));
    }
    let mut e_x = BitVec::zeros(n);
    let mut e_z = BitVec::zeros(n);
    for q in 0..n {
        let u = uniform_unit(rng);
        if u < f_m {
            e_x.set(q, true);
        } else if u < 2.0 * f_m {
            e_z.set(q, true);
        } else if u < 3.0 * f_m {
            e_x.set(q, true);
            e_z.set(q, true);
        }
    }
    Ok((e_x, e_z))
}

/// Check matrices and Tanner graphs used to decode the two error components.
#[derive(Clone, Debug)]
pub struct PreparedCode {
    x_check: BitMatrix,
    z_check: BitMatrix,
    x_graph: TannerGraph,
    z_graph: TannerGraph,
}

impl PreparedCode {
    /// `x_check` detects X errors, `z_check` detects Z errors.
    pub fn new(x_check: BitMatrix, z_check: BitMatrix) -> Self {
        assert_eq!(x_check.cols(), z_check.cols(), "both checks act on the same qubits");
        let x_graph = TannerGraph::new(&x_check);
        let z_graph = TannerGraph::new(&z_check);
        Self {
            x_check,
            z_check,
            x_graph,
            z_graph,
        }
    }

    /// One matrix for both components.
    pub fn single(h: BitMatrix) -> Self {
        Self::new(h.clone(), h)
    }

    pub fn qubits(&self) -> usize {
        self.x_check.cols()
    }

    pub fn x_check(&self) -> &BitMatrix {
        &self.x_check
    }

    pub fn z_check(&self) -> &BitMatrix {
        &self.z_check
    }
}

/// Result of one channel use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub x_ok: bool,
    pub z_ok: bool,
    pub x_iterations: usize,
    pub z_iterations: usize,
}

impl TrialOutcome {
    pub fn success(&self) -> bool {
        self.x_ok && self.z_ok
    }
}

fn decode_component(
    graph: &TannerGraph,
    check: &BitMatrix,
    error: &BitVec,
    flip_prob: f64,
    max_iter: usize,
) -> Result<DecodeResult> {
    let syndrome = check.mul_vec(error)?;
    if syndrome.is_zero() {
        // The all-zero pattern is a fixed point of the decoder.
        return Ok(DecodeResult {
            estimate: BitVec::zeros(error.len()),
            converged: true,
            iterations_used: 1,
        });
    }
    let out = spa_decode(graph, &syndrome, flip_prob, max_iter)?;
    debug_assert!(!out.converged || check.mul_vec(&out.estimate)? == syndrome);
    Ok(out)
}

/// Decodes a given error pair as if it had come from a channel with
/// parameter `f_m`.
pub fn decode_errors(
    code: &PreparedCode,
    e_x: &BitVec,
    e_z: &BitVec,
    f_m: f64,
    max_iter: usize,
) -> Result<TrialOutcome> {
    if !(0.0..MAX_FM).contains(&f_m) {
        return Err(Error::InvalidProbability(f_m));
    }
    let prior = 2.0 * f_m;
    let x = decode_component(&code.x_graph, &code.x_check, e_x, prior, max_iter)?;
    let z = decode_component(&code.z_graph, &code.z_check, e_z, prior, max_iter)?;
    Ok(TrialOutcome {
        x_ok: x.estimate == *e_x,
        z_ok: z.estimate == *e_z,
        x_iterations: x.iterations_used,
        z_iterations: z.iterations_used,
    })
}

/// Samples a depolarizing error and decodes both components.
pub fn run_trial<R: RngCore + ?Sized>(
    code: &PreparedCode,
    f_m: f64,
    max_iter: usize,
    rng: &mut R,
) -> Result<TrialOutcome> {
    if !(0.0..MAX_FM).contains(&f_m) {
        return Err(Error::InvalidProbability(f_m));
    }
    if max_iter == 0 {
        return Err(Error::ZeroIterations);
    }
    let (e_x, e_z) = sample_depolarizing(code.qubits(), f_m, rng)?;
    decode_errors(code, &e_x, &e_z, f_m, max_iter)
}
