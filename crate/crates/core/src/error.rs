use thiserror::Error;

use crate::poly::Rational;

/// Errors raised by the library. Classification outcomes (non-Salem
/// polynomials, reducible traces) are values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("divisor must be monic (leading coefficient {0})")]
    NonMonicDivisor(String),
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("reciprocal polynomial of odd degree {0} has no trace polynomial")]
    OddDegree(usize),
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("endpoint {at} is a root; nudge it by 1/2^k and retry")]
    EndpointIsRoot { at: Box<Rational> },
    #[error("empty interval: lower endpoint {lo} is not below upper endpoint {hi}")]
    EmptyInterval { lo: Box<Rational>, hi: Box<Rational> },
    #[error("interval ({lo}, {hi}) does not isolate a single simple root")]
    NotIsolating { lo: Box<Rational>, hi: Box<Rational> },
    #[error("exponent n = {0} has no coefficient characterization here")]
    UnsupportedExponent(u32),
    #[error("T + 1 is not divisible by the structural factor for n = {0}")]
    NoStructuralForm(u32),
    #[error("chebyshev(0) is not defined; the normalized family starts at k = 1")]
    ChebyshevIndexZero,
    #[error("(n, t) = ({n}, {t}) is not covered: {reason}")]
    Unsupported { n: u32, t: usize, reason: String },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("irreducibility unresolved for {count} consecutive shifts ending at a = {last}")]
    TooManyUnresolved { count: usize, last: String },
}

pub type Result<T> = std::result::Result<T, Error>;
