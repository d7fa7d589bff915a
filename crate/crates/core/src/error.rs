use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}: argument must be positive")]
    ZeroArgument(&'static str),

    #[error("invalid problem (k={k}, r1={r1}, r2={r2}): need k > r1 > r2 >= 0")]
    InvalidSpec { k: u64, r1: u64, r2: u64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("local density at p={p} for v(a)={va}, v(b)={vb} changed between levels p^{t} and p^({t}+1)")]
    UnstableLocalDensity { p: u64, va: u32, vb: u32, t: u32 },

    #[error("negative tail mass {0}: enumerated cell densities sum above 1")]
    NegativeTail(String),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    #[error("range [{lo}, {hi}] exceeds the segment budget of {budget} values")]
    RangeTooLarge { lo: u64, hi: u64, budget: u64 },

    #[error("gcd({g}, {modulus}) != 1")]
    NotCoprime { g: u64, modulus: u64 },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
