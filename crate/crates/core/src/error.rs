use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a unit")]
    NonUnit(String),
    #[error("operands live in different residue rings: {0}")]
    MixedRings(String),
    #[error("generators have different lengths: {0} vs {1}")]
    MixedLengths(usize, usize),
    #[error("x -> -x maps between x^n-1 and x^n+1 only for odd n, got n = {0}")]
    EvenLength(usize),
    #[error("divisor leading coefficient is not a unit: {0}")]
    NonMonicDivisor(String),
    #[error("n must be odd, got {0}")]
    EvenN(usize),
    #[error("lifted polynomial {0} does not divide x^{1}-1")]
    NotADivisor(String, usize),
    #[error("length {0} is not a supported power of two")]
    UnsupportedLength(usize),
    #[error("parameters outside the classified ranges: {0}")]
    BadParameters(String),
    #[error("g+up and a are both zero")]
    DegenerateGenerators,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("n = {0} is beyond the exhaustive enumeration guard")]
    TooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
