//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable '{var}' at byte {pos} (only x, y, z are allowed)")]
    UnknownVariable { var: char, pos: usize },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("curve is not reduced: its singular locus has positive dimension")]
    NonReduced,
    #[error("curve is a cone (a union of lines through a point): it admits a constant Jacobian syzygy")]
    ConeCurve,
    #[error("curve degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("exact division failed: divisor does not divide the dividend")]
    NotDivisible,
    #[error("ambient rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("{0} is not a prime number")]
    NotPrime(u64),
    #[error("characteristic {p} is too small for degree {d}: primes p <= 2d are refused")]
    CharacteristicTooSmall { p: u64, d: u32 },
    #[error("invalid field spec '{0}': expected 'qq' or 'fp:<prime>'")]
    BadFieldSpec(String),
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error("family parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("curve degree {d} exceeds the degree guard {guard}; raise --max-degree-guard to override")]
    DegreeGuard { d: u32, guard: u32 },
    #[error("bound formula out of regime: requires 2*d1 >= d, got d = {d}, d1 = {d1}")]
    OutOfRegime { d: u32, d1: u32 },
    #[error("operation requires a 3-syzygy curve, got m = {0}")]
    NotThreeSyzygy(usize),
    #[error("no degree shift aligns the presentation Hilbert function with the Jacobian module")]
    NoAligningShift,
    #[error("equivalence audit failed: {0}")]
    EquivalenceViolated(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code class: 2 for input/validation errors, 3 for
    /// internal or audit inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoAligningShift | Error::EquivalenceViolated(_) | Error::Internal(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
