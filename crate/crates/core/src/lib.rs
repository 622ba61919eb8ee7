//! Secret sharing from codes over GF(4).
//!
//! Two schemes share one code engine:
//!
//! * [`linear`]: the one-step scheme over a linear code. The secret is
//!   coordinate 0 of a random codeword, participants hold the remaining
//!   coordinates, and a coalition recovers the secret from a dual codeword
//!   with first coordinate 1 supported on its shares.
//! * [`additive`]: the two-step scheme over an additive (GF(2)-linear) code
//!   over GF(4). A dual codeword only reveals one trace bit of the secret, so
//!   two recovery vectors whose first coordinates differ are combined.
//!
//! [`designs`] checks the block designs held by codeword supports and
//! [`report`] renders access-structure summaries. The `gf4sss` binary wires
//! these to the command line.

pub mod additive;
pub mod catalog;
pub mod cli;
pub mod codes;
pub mod designs;
pub mod error;
pub mod field;
mod linalg;
pub mod linear;
pub mod report;
pub mod shares;

pub use codes::{Code, CodeKind, Codeword, Field, WeightDistribution};
pub use error::{Error, Result};
pub use field::{F2, F4};
