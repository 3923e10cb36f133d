//! Constructions of Salem numbers with prescribed exceptional powers.

mod basis;
mod families;
mod generator;

use std::fmt;

use num_bigint::BigInt;

pub use basis::{chebyshev, chebyshev_coprime, cyclo_coprime, cyclo_trace};
pub use families::{family, family_trace, recurrence_pairs, recurrence_trace, Family, RecurrencePair};
pub use generator::{
    base_degree, coprime_residue_degrees, generate_coprime_residue, generate_coprime_residue_with,
    generate_salem_units,
    generate_with, scan_start, shift_threshold, shifted_trace, standard_cofactor, GenerateOptions,
    Generation, GeneratorSpec, SkippedShift,
};

use crate::irreducible::IrrConfig;
use crate::poly::IntPoly;
use crate::trace::{classify_salem_with, compress_trace, NotSalem, SalemPolynomial};
use crate::units::{certify, UnitCertificate};

/// Which construction produced a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `C_n F D (x - a) - 1` with an explicit or standard cofactor.
    Shifted { n: u32, t: usize, cofactor: IntPoly },
    /// The shifted construction with cofactor `C_{4v+3}`.
    CoprimeResidue { n: u32, v: u64, t: usize },
    /// The cubic trace from a recurrence pair.
    Recurrence { pair: RecurrencePair },
    Family { family: Family, a: BigInt },
    /// User-supplied polynomial.
    Input,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Shifted { .. } => "shifted",
            Provenance::CoprimeResidue { .. } => "coprime-residue",
            Provenance::Recurrence { .. } => "recurrence",
            Provenance::Family { .. } => "family",
            Provenance::Input => "input",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Shifted { n, t, cofactor } => write!(f, "shifted n={n} t={t} D={cofactor}"),
            Provenance::CoprimeResidue { n, v, t } => write!(f, "coprime-residue n={n} v={v} t={t}"),
            Provenance::Recurrence { pair } => {
                write!(f, "recurrence k={} (a,b)=({},{})", pair.index, pair.a, pair.b)
            }
            Provenance::Family { family, a } => write!(f, "family {family} a={a}"),
            Provenance::Input => write!(f, "input"),
        }
    }
}

/// A Salem polynomial with per-exponent norm certificates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalemCertificate {
    pub salem: SalemPolynomial,
    pub trace: IntPoly,
    /// The shift `a` for shifted constructions, the parameter for families.
    pub shift: Option<BigInt>,
    pub certificates: Vec<UnitCertificate>,
    pub provenance: Provenance,
}

impl SalemCertificate {
    /// Exponents `n` whose certificate shows `alpha^n - 1` is a unit.
    pub fn unit_exponents(&self) -> Vec<u32> {
        self.certificates
            .iter()
            .filter(|c| c.is_unit_minus)
            .map(|c| c.n)
            .collect()
    }

    /// Re-derives everything from the polynomial alone: Salem
    /// classification, the trace, and every norm.
    pub fn revalidate(&self) -> bool {
        let poly = self.salem.poly();
        classify_salem_with(poly, &IrrConfig::default()).is_ok()
            && compress_trace(poly).as_ref() == Ok(&self.trace)
            && self.certificates.iter().all(|c| c.check(poly))
    }
}

/// Classifies `poly` and certifies each exponent in `exponents`.
pub fn certify_salem(
    poly: &IntPoly,
    exponents: &[u32],
    shift: Option<BigInt>,
    provenance: Provenance,
    irr: &IrrConfig,
) -> Result<SalemCertificate, NotSalem> {
    let salem = classify_salem_with(poly, irr)?;
    let certificates = exponents.iter().map(|&n| certify(&salem, n)).collect();
    Ok(SalemCertificate {
        trace: salem.trace().clone(),
        salem,
        shift,
        certificates,
        provenance,
    })
}

/// Certificate for a family member at the family's exponents.
pub fn family_certificate(name: Family, a: &BigInt) -> Result<SalemCertificate, NotSalem> {
    certify_salem(
        &family(name, a),
        name.exponents(),
        Some(a.clone()),
        Provenance::Family { family: name, a: a.clone() },
        &IrrConfig::default(),
    )
}

/// Certificates for the first `count` recurrence pairs at exponent 5.
pub fn recurrence_certificates(count: usize) -> crate::error::Result<Vec<SalemCertificate>> {
    let mut out = Vec::with_capacity(count);
    for pair in recurrence_pairs(count)? {
        let trace = recurrence_trace(&pair)?;
        let poly = crate::trace::expand_trace(&trace)?;
        let cert = certify_salem(&poly, &[5], None, Provenance::Recurrence { pair: pair.clone() }, &IrrConfig::default())
            .map_err(|e| crate::error::Error::Internal(format!("pair ({}, {}): {e}", pair.a, pair.b)))?;
        if !cert.certificates[0].is_unit_minus {
            return Err(crate::error::Error::Internal(format!(
                "pair ({}, {}) gave norm {}",
                pair.a, pair.b, cert.certificates[0].norm_minus
            )));
        }
        out.push(cert);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_certificates() {
        let c = family_certificate(Family::F, &BigInt::from(0)).unwrap();
        assert_eq!(c.unit_exponents(), vec![1, 2]);
        assert!(c.revalidate());
        let g = family_certificate(Family::G, &BigInt::from(3)).unwrap();
        assert_eq!(g.unit_exponents(), vec![1, 3]);
    }

    #[test]
    fn recurrence_certificates_hold() {
        let certs = recurrence_certificates(4).unwrap();
        assert_eq!(certs.len(), 4);
        assert!(certs.iter().all(|c| c.revalidate() && c.unit_exponents() == vec![5]));
    }

    #[test]
    fn tampered_certificate_fails() {
        let mut c = family_certificate(Family::F, &BigInt::from(2)).unwrap();
        c.certificates[0].norm_plus += 1;
        assert!(!c.revalidate());
    }
}
