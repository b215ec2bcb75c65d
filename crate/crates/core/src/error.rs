//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in F_q")]
    DivisionByZero,
    #[error("operands belong to different field/ring specs: {0}")]
    SpecMismatch(String),
    #[error("not a unit: reduction mod p is zero")]
    NotAUnit,
    #[error("invalid field spec: {0}")]
    InvalidSpec(String),
    #[error("dimension {r} out of range for {what} (ambient dimension {ambient})")]
    InvalidDimension { r: i64, ambient: u32, what: &'static str },
    #[error("r = {r} is outside the closed-form range {lo}..={hi}")]
    OutsideTheoremRange { r: u32, lo: u32, hi: u32 },
    #[error("matrix too large: {rows} rows exceeds the cap of {cap}")]
    TooLarge { rows: u64, cap: u64 },
    #[error("the constant monomial has no type tuple")]
    NoType,
    #[error("degenerate characters: b0, b1 and b0+b1 must be nonzero mod q-1")]
    DegenerateCharacters,
    #[error("all coordinates vanish at every tried precision (last N = {n})")]
    PrecisionExhausted { n: u32 },
    #[error("precision N = {n} does not fit the word-sized truncated ring for p = {p}")]
    PrecisionTooLarge { p: u64, n: u32 },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
