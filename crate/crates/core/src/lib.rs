//! Symbolic and numeric machinery for multiple zeta values.
//!
//! The crate is organised bottom-up:
//!
//! * [`index`] holds indices (finite sequences of positive integers) and
//!   their combinatorics.
//! * [`poly`] is a sparse exact polynomial ring over the rationals in the
//!   formal variables `x`, `y`, `A`, `B`.
//! * [`algebra`] is the quasi-shuffle Hopf algebra of indices over those
//!   polynomial scalars, with harmonic product, star expansion, coproduct,
//!   antipodes and the `x,y` lift.
//! * [`antihook`] expands Schur symbols of anti-hook shape into the algebra.
//! * [`series`] is truncated power-series arithmetic over any commutative
//!   coefficient ring.
//! * [`genfunc`] builds the index-valued generating functions and checks
//!   the exact identities between them.
//! * [`numeric`] regularizes, evaluates multiple zeta values in
//!   double-double precision and checks the numeric identities.
//! * [`hopf`] runs the Hopf-algebra axiom suites.
//!
//! Everything here is `no_std` with `alloc`; IO lives in the CLI crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod antihook;
pub mod error;
pub mod genfunc;
pub mod hopf;
pub mod index;
pub mod numeric;
pub mod poly;
pub mod series;

pub use algebra::{Combination, IndexAlgebra, Tensor};
pub use antihook::AntiHook;
pub use error::{Error, Result};
pub use index::Index;
pub use poly::{Monomial, PolyScalar, Var};
pub use series::TruncatedSeries;

/// Exact rational numbers used for every symbolic coefficient.
pub type Rational = num_rational::BigRational;
