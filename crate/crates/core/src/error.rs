use thiserror::Error;

use crate::root_system::Root;
use crate::scalars::Degree;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("the zero root has no coroot")]
    ZeroCoroot,

    #[error("invalid root {0}")]
    InvalidRoot(String),

    #[error("element is not a monomial")]
    NotMonomial,

    #[error("element is not ad-nilpotent of order 3 (its square is nonzero)")]
    NotAdNilpotent,

    #[error("element is not homogeneous in root space {0}")]
    NotHomogeneous(Root),

    #[error("({0}, {1}) is not an A2-pair")]
    NotA2Pair(Root, Root),

    #[error("no division witness for ({root}, {degree})")]
    NoWitness { root: Root, degree: Degree },

    #[error("quantum matrix is not elementary: q_{i}{j} = {value} is not ±1")]
    NotElementary { i: usize, j: usize, value: String },

    #[error("octonion torus needs rank at least 3, got {0}")]
    OctonionRankBelow3(usize),

    #[error("the octonion torus only coordinatizes type A2 Lie tori, got ell = {0}")]
    OctonionNeedsA2(usize),

    #[error("image of e_alpha(a) is not contained in the root space {0}")]
    NotHomogeneousImage(Root),

    #[error("type A_ell requires ell >= 2, got {0}")]
    RankTooSmall(usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
