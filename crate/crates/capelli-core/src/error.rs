//! Error type shared by the whole crate.

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported case or dimension: {0}")]
    UnsupportedCase(String),
    #[error("malformed rational literal: {0:?}")]
    BadRational(String),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("interpolation system is singular; rho is not dominant or degenerate")]
    NonUniqueInterpolation,
    #[error("polynomial vanishes at -rho; rho is not strongly dominant")]
    ZeroAtMinusRho,
    #[error("rho is not strongly dominant")]
    NotStronglyDominant,
    #[error("rho is not non-integral")]
    NotNonIntegral,
    #[error("rho is not dominant")]
    NotDominant,
    #[error("operation exceeds the validity window of the truncation")]
    WindowExceeded,
    #[error("evaluate-and-reconstruct failed to produce a polynomial after retries")]
    ReconstructionFailed,
    #[error("no W-fixed generator available for the binomial limit")]
    NoFixedGenerator,
    #[error("invariant basis has {basis} elements of degree <= {degree} but {weights} weights")]
    BasisDimensionMismatch {
        degree: i64,
        basis: usize,
        weights: usize,
    },
    #[error("rational function evaluated at a pole")]
    Pole,
    #[error("unknown verification suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T> = core::result::Result<T, Error>;
