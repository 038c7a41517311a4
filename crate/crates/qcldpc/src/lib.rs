//! File formats, reports and Monte Carlo simulation on top of
//! [`qcldpc_core`].

pub mod check;
pub mod error;
pub mod format;
pub mod sim;

pub use error::{Error, Result};
