use thiserror::Error;

/// Errors raised by the polynomial engine and the cover-tower computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("direction vector has a zero entry at position {index}")]
    ZeroDirection { index: usize },
    #[error("direction vector has length {got}, expected {expected}")]
    DirectionLength { expected: usize, got: usize },
    #[error("direction vector entries are not coprime (gcd {gcd})")]
    DirectionNotPrimitive { gcd: u64 },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("not a knot polynomial: value at t=1 is {value}, expected +-1")]
    NotAKnotPolynomial { value: String },
    #[error("base order |H1(M_(z,p^v))| is unavailable for {components} components with v = {v}")]
    BaseUnavailable { components: usize, v: u32 },
    #[error("growth formula failed to stabilize at level {level}")]
    StabilizationFailure { level: u32 },
    #[error("negative power of a non-monomial")]
    NotInvertible,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("certificate check failed: {0}")]
    CertificateFailure(String),
    #[error("invalid factorization certificate: {0}")]
    InvalidCertificate(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Stable identifier used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::VariableMismatch { .. } => "variable_mismatch",
            Error::NotDivisible => "not_divisible",
            Error::ZeroDirection { .. } => "zero_direction",
            Error::DirectionLength { .. } => "direction_length",
            Error::DirectionNotPrimitive { .. } => "direction_not_primitive",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::BothZero => "both_zero",
            Error::NotPrime(_) => "not_prime",
            Error::NotAKnotPolynomial { .. } => "not_a_knot_polynomial",
            Error::BaseUnavailable { .. } => "base_unavailable",
            Error::StabilizationFailure { .. } => "stabilization_failure",
            Error::NotInvertible => "not_invertible",
            Error::Unsupported(_) => "unsupported",
            Error::CertificateFailure(_) => "certificate_failure",
            Error::InvalidCertificate(_) => "invalid_certificate",
            Error::InvalidParameter(_) => "invalid_parameter",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
