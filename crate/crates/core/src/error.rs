use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precision too low: {0}")]
    PrecisionTooLow(String),

    #[error("closed form did not cancel to an integer: {0}")]
    NonIntegralResult(String),

    #[error("invalid sequence spec: {0}")]
    InvalidSpec(String),

    #[error("imaginary residue {residue} exceeds 2^-{bound_bits}")]
    ImaginaryResidue { residue: String, bound_bits: u32 },

    #[error("word of length {len} exceeds the materialization cap {max_len}")]
    WordTooLong { len: String, max_len: u64 },

    #[error("window length {n} exceeds prefix length {len}")]
    WindowTooLarge { n: usize, len: usize },

    #[error("continued fraction has {have} partial quotients, depth {depth} needs {need}")]
    InsufficientDepth { have: usize, depth: usize, need: usize },

    #[error("degenerate denominator at k={k}")]
    DegenerateDenominator { k: u64 },

    #[error("generating function denominator has zero constant term")]
    ZeroLeadingDenominator,

    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
}
