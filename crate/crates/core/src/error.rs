use thiserror::Error;

use crate::search::InconclusiveSearch;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genus must be at least {min}, got {genus}")]
    GenusTooSmall { genus: u32, min: u32 },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },

    #[error("inconsistent curve profile: {0}")]
    InvalidProfile(String),

    #[error("class is not symmetric: bidegree ({a}, {a_prime})")]
    NonSymmetricClass { a: String, a_prime: String },

    #[error("class {0} is not integral")]
    NonIntegralClass(String),

    #[error("degenerate class: self-intersection n = {n}")]
    DegenerateClass { n: i64 },

    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),

    #[error("criterion not applicable: {0}")]
    NotApplicable(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no double cover exists: ramification count {0} is negative")]
    RiemannHurwitz(i64),

    #[error("search inconclusive: {}", .0.reason)]
    Inconclusive(Box<InconclusiveSearch>),

    #[error("overlay parse error on line {line}: {message}")]
    OverlayParse { line: usize, message: String },
}

pub(crate) fn require_genus(genus: u32, min: u32) -> Result<()> {
    if genus < min {
        Err(Error::GenusTooSmall { genus, min })
    } else {
        Ok(())
    }
}
