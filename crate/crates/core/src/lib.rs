//! Exact computation of derivatives of the complete weight enumerator of
//! binary self-dual codes, with the spectral, design and balance checks
//! built on them.
//!
//! Arithmetic is carried out in `Q(√2)` via [`QuadRat`]; nothing is rounded.

pub mod balance;
pub mod cli;
pub mod codes;
pub mod designs;
pub mod enumerator;
pub mod error;
pub mod krawtchouk;
pub mod quadring;
pub mod transform;

pub use balance::{
    balance_check, eliminate_length8, BalanceReport, EliminationVerdict, Resolution,
};
pub use codes::{
    builtin_code, BinaryWord, BuiltinCode, LinearCode, RefinedDistribution, WeightDistribution,
};
pub use designs::{derivative_from_designs, DesignProfile};
pub use enumerator::{derivative, derivative_step, Derivative, ExactEnumerator};
pub use error::{Error, Result};
pub use krawtchouk::{
    enumerate_candidates, enumerate_fixed_points, krawtchouk_matrix, KrawtchoukMatrix,
};
pub use quadring::QuadRat;
pub use transform::{is_eigenvector_one, SpectralVector};
