use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("{0} is not prime")]
    NonPrime(u64),

    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("root system is not simply laced: {0}")]
    NotSimplyLaced(String),

    #[error("unsupported folding: {ambient} -> {target}")]
    UnsupportedFolding { ambient: String, target: String },

    #[error("folding verification failed for {ambient} -> {target}: {detail}")]
    FoldingVerification {
        ambient: String,
        target: String,
        detail: String,
    },

    #[error("height {height} out of range 1..{max}")]
    HeightOutOfRange { height: usize, max: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid group parameters: {0}")]
    InvalidGroup(String),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Trial-division primality test; inputs here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NonPrime(p))
    }
}
