use thiserror::Error;

/// Errors produced by the code, verification and simulation layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 1..=16")]
    UnsupportedDegree(u32),
    #[error("polynomial {poly:#x} does not have degree {s}")]
    WrongDegree { s: u32, poly: u32 },
    #[error("polynomial {0:#x} is reducible over F_2")]
    Reducible(u32),
    #[error("element {value} is not in F_(2^{s})")]
    ElementOutOfRange { value: u32, s: u32 },
    #[error("mismatched fields: F_(2^{0}) vs F_(2^{1})")]
    FieldMismatch(u32, u32),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operation requires a binary code (s = 1), found s = {0}")]
    NotBinary(u32),
    #[error("zero code has no minimum distance")]
    ZeroCode,
    #[error("enumeration budget exceeded: {needed} > {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },
    #[error("C2 is not contained in C1")]
    NotNested,
    #[error("pair is not CSS-T; the requested report needs a CSS-T pair")]
    NotCsst,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: usize, q: usize },
    #[error("generator polynomial does not divide x^n - 1")]
    NotDivisor,
    #[error("set is not a union of cyclotomic cosets: {0:?}")]
    NotCosetUnion(Vec<usize>),
    #[error("splitting field F_(2^{0}) exceeds the supported degree 16")]
    SplittingFieldTooLarge(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with [`Error::BudgetExceeded`] unless `base^exp <= cap`.
pub(crate) fn check_budget(base: u64, exp: usize, cap: u128) -> Result<u128> {
    let mut needed: u128 = 1;
    for _ in 0..exp {
        needed = needed.saturating_mul(base as u128);
        if needed > cap {
            return Err(Error::BudgetExceeded { needed: (base as u128).saturating_pow(exp as u32), cap });
        }
    }
    Ok(needed)
}
