//! Entanglement-assisted quantum quasi-cyclic LDPC codes.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`poly`]: the ring `F2[X]/(X^r - 1)` of binary circulants and
//!   gcd-based circulant ranks;
//! - [`gf2`]: bit-packed GF(2) vectors and matrices;
//! - [`exponent`]: exponent matrices of Type-I/Type-II QC-LDPC codes, their
//!   row differences, multiplicity screens and `H(X) H(X)^T`;
//! - [`analysis`]: Tanner-graph girth, ebit counts, `[[n, k', d; c]]`
//!   parameters and distance search;
//! - [`codes`]: the benchmark constructions;
//! - [`spa`] and [`channel`]: sum-product syndrome decoding and depolarizing
//!   noise trials.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod channel;
pub mod codes;
pub mod error;
pub mod exponent;
pub mod gf2;
pub mod poly;
pub mod spa;

pub use analysis::{
    css_pair_check, ebit_count, eaqecc_params, is_dual_containing, min_distance_upper_bound,
    rank_bound, rank_bound_applies, tanner_girth, ClassicalCodeInfo, CssPairCheck,
    DistanceEstimate, EaqeccParams, Girth, Rate,
};
pub use channel::{run_trial, sample_depolarizing, PreparedCode, TrialOutcome};
pub use codes::{CheckMatrix, CodeKind, CodeSpec, DeclaredParams};
pub use error::{Error, Result};
pub use exponent::{DiffSlot, DifferenceVector, ExpEntry, ExponentMatrix};
pub use gf2::{circulant_from_poly, BitMatrix, BitVec};
pub use poly::{circulant_rank, poly_gcd, PlainPoly, RingPoly};
pub use spa::{spa_decode, DecodeResult, TannerGraph};
