//! Exact-arithmetic machinery for higher Specht polynomials: tableau
//! combinatorics, sparse polynomials over the rationals with a symmetric
//! group action, the normalized Specht construction, orbit decompositions of
//! generalized coinvariant representations, and independent brute-force
//! oracles for all of it.

pub mod combinat;
pub mod error;
pub mod oracle;
pub mod polyring;
pub mod repdecomp;
pub mod specht;

pub use error::{Error, Result};
