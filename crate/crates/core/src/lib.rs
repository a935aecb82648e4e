//! Exact computations in the quotient `S/I` of the ring of symmetric
//! polynomials in `k` variables by the ideal generated by
//! `h_{n-k+1} - a_1, ..., h_n - a_k`.
//!
//! Setting every `a_i` to zero recovers the cohomology ring of the
//! Grassmannian of `k`-planes in `n`-space; setting `a_k = -(-1)^k q` and the
//! rest to zero recovers its quantum cohomology ring.

pub mod bases;
pub mod combinatorics;
pub mod coeffring;
pub mod error;
pub mod grobner;
pub mod quotient;
pub mod tableaux;

mod memo;
mod text;

pub use combinatorics::{IntVector, PartialComparison, Partition, SignedStraightening};
pub use coeffring::{specialize, AMonomial, APoly, QPoly, Specialization};
pub use error::{Error, Result};
pub use quotient::{QuotContext, QuotElem, QuotientRing, SchurCombination};
pub use grobner::{GroebnerBasis, XMonomial, XPoly};
pub use bases::{BasisFamily, BasisMatrix, Classification};
