use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("restriction 1 violated: a^2 + 4b = {discriminant} must be positive (real distinct roots)")]
    NonPositiveDiscriminant { discriminant: f64 },

    #[error("restriction 2 violated: d^2 - a d - b = {value} vanishes (d coincides with a characteristic root)")]
    DegenerateExponentialBase { value: f64 },

    #[error("G({n}) needs d^{n}, which is undefined for d = 0 with c != 0")]
    UndefinedNegativePower { n: i64 },

    #[error("b = 0: the backward recursion and negative indices are undefined")]
    ZeroB,

    #[error("denominator {name} = {value} vanishes")]
    DegenerateDenominator { name: &'static str, value: f64 },

    #[error("dominant magnitude gamma is zero, asymptote slopes are undefined")]
    ZeroGamma,

    #[error("spiral is not outwinding (gamma = {gamma})")]
    NotOutwinding { gamma: f64 },

    #[error("spiral is not inwinding (gamma = {gamma})")]
    NotInwinding { gamma: f64 },

    #[error("zero denominator in {0}")]
    ZeroDenominator(&'static str),

    #[error("real power of a non-positive base: {name} = {value}")]
    NegativeBase { name: &'static str, value: f64 },

    #[error("Horadam form requires c = 0, got c = {c}")]
    NotHoradam { c: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
