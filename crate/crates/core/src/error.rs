use core::fmt;

/// Errors reported by field construction, classification and enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` must be an odd prime.
    NotAnOddPrime(u64),
    /// Extension degree out of range for the requested operation.
    DegreeTooSmall { m: u32, min: u32 },
    /// The exponent parameter must satisfy `1 <= k < m`.
    BadExponent { k: u32, m: u32 },
    /// Supplied modulus is not a monic irreducible of the right degree.
    BadModulus(&'static str),
    /// `p^m` exceeds the supported index range.
    FieldTooLarge { p: u64, m: u32 },
    /// An argument that must be nonzero was zero.
    ZeroOperand(&'static str),
    /// A scalar argument was outside its domain.
    OutOfRange(&'static str),
    /// The operation needs exp/log tables but the field was built without them.
    NoTables,
    /// Requested sweep exceeds the configured work limit.
    WorkLimit { needed: u128, limit: u128 },
    /// No closed form is implemented for these parameters (odd `m/gcd(k,m)`
    /// for the two-parameter code family).
    UnsupportedCase { p: u64, m: u32, k: u32 },
    /// Exact integer evaluation overflowed 128 bits.
    ArithmeticOverflow,
    /// Two independent derivations of the same quantity disagreed; this
    /// signals an arithmetic bug, never a data error.
    Inconsistency(&'static str),
    /// Floating-point residual in the transform path exceeded tolerance;
    /// callers should fall back to the direct path.
    RoundingResidual,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAnOddPrime(p) => write!(f, "{p} is not an odd prime"),
            Error::DegreeTooSmall { m, min } => {
                write!(f, "degree {m} too small (minimum {min})")
            }
            Error::BadExponent { k, m } => {
                write!(f, "exponent k={k} must satisfy 1 <= k < m={m}")
            }
            Error::BadModulus(why) => write!(f, "bad modulus: {why}"),
            Error::FieldTooLarge { p, m } => {
                write!(f, "p^m out of supported range for p={p}, m={m}")
            }
            Error::ZeroOperand(what) => write!(f, "zero operand: {what}"),
            Error::OutOfRange(what) => write!(f, "argument out of range: {what}"),
            Error::NoTables => write!(f, "operation requires exp/log tables"),
            Error::WorkLimit { needed, limit } => {
                write!(f, "work limit exceeded: needs {needed}, limit {limit}")
            }
            Error::UnsupportedCase { p, m, k } => write!(
                f,
                "no closed form for p={p}, m={m}, k={k} (m/gcd(k,m) is odd)"
            ),
            Error::ArithmeticOverflow => write!(f, "exact arithmetic overflowed"),
            Error::Inconsistency(what) => write!(f, "internal consistency fault: {what}"),
            Error::RoundingResidual => {
                write!(f, "transform rounding residual exceeded tolerance")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
