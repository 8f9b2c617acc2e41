//! Exact-arithmetic interpolation polynomials and difference operators
//! for multiplicity free weight data.
//!
//! The crate builds, over arbitrary-precision rationals and with no
//! floating point anywhere:
//!
//! - the combinatorial data (weights, pseudoroots, reflection group,
//!   degree form) of the rank-one, classical, and semiclassical cases;
//! - the interpolation basis `p_lambda` pinned down by delta conditions
//!   on shifted dominant weights, with its value table, normalizations,
//!   virtual dimensions, and hat transform;
//! - the raising, lowering, Euler, and multiplication operators as exact
//!   matrices on truncated invariant spaces, together with the
//!   eigenvalue, Pieri, transposition, evaluation, symmetry, sl2, and
//!   binomial-limit identities they satisfy;
//! - named verification suites that recheck each identity from scratch
//!   and report exact residuals.
//!
//! The crate is `no_std` (with `alloc`); IO, CLI, and serialization live
//! in the companion `capelli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod datum;
pub mod error;
pub mod ftau;
pub mod interp;
pub mod linalg;
pub mod ops;
pub mod poly;
pub mod rho;
pub mod sample;
pub mod scalar;
pub mod verify;

pub use datum::{Case, LinearForm, RootDatum, Weight};
pub use error::{Error, Result};
pub use interp::{capelli_polynomial, q_polynomial, Tables};
pub use poly::{Monomial, MultiPoly};
pub use rho::{default_parameter_samples, dominance_class, Dominance, Rho};
pub use sample::{PointSource, DEFAULT_SEED};
pub use scalar::{parse_rat, Rat};
