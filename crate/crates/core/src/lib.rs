//! Hermitian adjacency spectra of mixed multigraphs over the Eisenstein
//! integers.
//!
//! Each edge of a mixed multigraph contributes a sixth root of unity to the
//! adjacency matrix: `1` for an undirected edge, `ω` along an arc and `ω̄`
//! against it, with `ω = 1/2 + (√3/2)i`. The crate provides
//!
//! * exact `Z[ω]` arithmetic ([`eisenstein`]),
//! * the multigraph model, MMG text format and cycle structure ([`multigraph`]),
//! * exact characteristic polynomials by two independent routes and a
//!   floating Hermitian eigensolver ([`spectral`]),
//! * cycle weights, three-way switching and a switching-equivalence decision
//!   with checkable witnesses ([`switching`]),
//! * switching/cospectral class censuses over a fixed underlying graph ([`census`]).
//!
//! The algebra is generic over the integer type (`i64`, [`BigInt`], ...) and the
//! eigensolver over the float type; the aliases below fix the defaults used by
//! the graph-level API.

pub mod census;
pub mod eisenstein;
pub mod error;
pub mod multigraph;
pub mod spectral;
pub mod switching;

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

pub use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub use eisenstein::{EisensteinInt, UnitExponent};
pub use error::{Error, Result};
pub use multigraph::{EdgeKind, EdgeRef, MixedMultigraph, PairCounts};
pub use spectral::{CharPoly, HermitianMatrix};

/// Integer types usable as coefficients of [`EisensteinInt`].
pub trait Scalar:
    Clone + Debug + Display + FromStr + Ord + Hash + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + FromStr + Ord + Hash + Signed + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Arbitrary-precision Eisenstein integer.
pub type Eisenstein = EisensteinInt<BigInt>;
/// Eisenstein integer over machine words, for small inputs only.
pub type EisensteinI64 = EisensteinInt<i64>;
/// Exact Hermitian adjacency matrix.
pub type Matrix = HermitianMatrix<BigInt>;
/// Exact characteristic polynomial.
pub type Poly = CharPoly<BigInt>;
