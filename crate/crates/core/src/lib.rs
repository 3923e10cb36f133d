//! Exact arithmetic for Salem numbers `alpha` with `alpha^n - 1` a unit:
//! integer polynomials, real root isolation, irreducibility certificates,
//! the trace transform, norm certificates and generating constructions.

pub mod error;
pub mod forge;
pub mod irreducible;
pub mod poly;
pub mod trace;
pub mod units;

pub use error::{Error, Result};
pub use irreducible::{is_irreducible, is_irreducible_with, IrrConfig, IrreducibilityVerdict};
pub use poly::{IntPoly, Rational, RootInterval};
pub use trace::{classify_salem, classify_trace, NotSalem, SalemPolynomial, TraceTag, TraceVerdict};
pub use units::{unit_spectrum, UnitCertificate, UnitSpectrum};
