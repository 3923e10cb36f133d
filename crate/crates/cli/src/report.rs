//! Per-polynomial reports and their text/JSON rendering.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use salem_core::forge::{Provenance, SalemCertificate};
use salem_core::trace::{classify_salem_with, SalemPolynomial};
use salem_core::units::{coefficient_criterion, trace_criterion};
use salem_core::{unit_spectrum, IntPoly, IrrConfig};

use crate::error::CliError;

/// Exponents with closed-form criteria.
const CRITERION_EXPONENTS: [u32; 5] = [1, 2, 3, 4, 6];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    /// Ascending coefficients as decimal strings.
    pub input: Vec<String>,
    /// `salem`, `not-salem` or `unresolved`.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub norms: Vec<NormRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub criteria: Vec<CriterionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormRecord {
    pub n: u32,
    /// Norm of `alpha^n - 1`.
    pub minus: String,
    /// Norm of `alpha^n + 1`.
    pub plus: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionRecord {
    pub n: u32,
    /// Coefficient test; absent where none exists.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<bool>,
    /// Trace-value test.
    pub trace: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceRecord {
    pub construction: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cofactor: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Settings {
    pub max_n: u32,
    pub digits: usize,
    pub irr: IrrConfig,
    /// Drop norms and criteria from reports.
    pub spectrum_only: bool,
}

fn decimal(c: &[BigInt]) -> Vec<String> {
    c.iter().map(|v| v.to_string()).collect()
}

impl ProvenanceRecord {
    fn new(construction: &str) -> ProvenanceRecord {
        ProvenanceRecord {
            construction: construction.to_string(),
            n: None,
            t: None,
            cofactor: None,
            shift: None,
            v: None,
            family: None,
            pair: None,
            index: None,
        }
    }

    pub fn from_provenance(p: &Provenance, shift: Option<&BigInt>) -> Option<ProvenanceRecord> {
        let mut r = ProvenanceRecord::new(p.name());
        r.shift = shift.map(|a| a.to_string());
        match p {
            Provenance::Input => return None,
            Provenance::Shifted { n, t, cofactor } => {
                r.n = Some(*n);
                r.t = Some(*t);
                r.cofactor = Some(decimal(cofactor.coeffs()));
            }
            Provenance::CoprimeResidue { n, v, t } => {
                r.n = Some(*n);
                r.t = Some(*t);
                r.v = Some(*v);
            }
            Provenance::Recurrence { pair } => {
                r.n = Some(5);
                r.t = Some(3);
                r.pair = Some([pair.a.to_string(), pair.b.to_string()]);
                r.index = Some(pair.index);
            }
            Provenance::Family { family, a } => {
                r.family = Some(family.to_string());
                r.shift = Some(a.to_string());
            }
        }
        Some(r)
    }
}

/// Report for an arbitrary polynomial.
pub fn report_poly(poly: &IntPoly, settings: &Settings) -> Result<ReportRecord, CliError> {
    match classify_salem_with(poly, &settings.irr) {
        Ok(s) => report_salem(&s, settings.max_n, settings, None),
        Err(why) => Ok(ReportRecord {
            input: decimal(poly.coeffs()),
            verdict: if why.is_unresolved() { "unresolved" } else { "not-salem" }.into(),
            reason: Some(why.to_string()),
            t: None,
            alpha: None,
            spectrum: None,
            norms: Vec::new(),
            criteria: Vec::new(),
            provenance: None,
        }),
    }
}

/// Report for a generated certificate; the spectrum always reaches the
/// certified exponents.
pub fn report_certificate(cert: &SalemCertificate, settings: &Settings) -> Result<ReportRecord, CliError> {
    let max_n = cert
        .unit_exponents()
        .into_iter()
        .chain([settings.max_n])
        .max()
        .unwrap_or(settings.max_n);
    let provenance = ProvenanceRecord::from_provenance(&cert.provenance, cert.shift.as_ref());
    let record = report_salem(&cert.salem, max_n, settings, provenance)?;
    for c in &cert.certificates {
        let listed = record.spectrum.as_ref().is_some_and(|s| s.contains(&c.n));
        if listed != c.is_unit_minus {
            return Err(CliError::Internal(format!(
                "{}: certificate at n = {} disagrees with the spectrum",
                cert.salem.poly(),
                c.n
            )));
        }
    }
    Ok(record)
}

fn report_salem(
    s: &SalemPolynomial,
    max_n: u32,
    settings: &Settings,
    provenance: Option<ProvenanceRecord>,
) -> Result<ReportRecord, CliError> {
    let spectrum = unit_spectrum(s, max_n);
    let mut criteria = Vec::new();
    for n in CRITERION_EXPONENTS.into_iter().filter(|&n| n <= max_n) {
        let trace = trace_criterion(s.trace(), n)?;
        let coefficient = coefficient_criterion(s.poly(), n).ok();
        let certified = spectrum.members.contains(&n);
        if trace != certified || coefficient.is_some_and(|c| c != certified) {
            return Err(CliError::Internal(format!(
                "{}: criteria at n = {n} disagree with the norm",
                s.poly()
            )));
        }
        criteria.push(CriterionRecord { n, coefficient, trace });
    }
    let norms = spectrum
        .certificates
        .iter()
        .map(|c| NormRecord {
            n: c.n,
            minus: c.norm_minus.to_string(),
            plus: c.norm_plus.to_string(),
        })
        .collect();
    let mut record = ReportRecord {
        input: decimal(s.poly().coeffs()),
        verdict: "salem".into(),
        reason: None,
        t: Some(s.half_degree()),
        alpha: Some(s.alpha_decimal(settings.digits)),
        spectrum: Some(spectrum.members.iter().copied().collect()),
        norms,
        criteria,
        provenance,
    };
    if settings.spectrum_only {
        record.norms.clear();
        record.criteria.clear();
    }
    Ok(record)
}

fn set(values: &[u32]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

pub fn render_text(records: &[ReportRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let _ = writeln!(out, "{}", r.input.join(" "));
        if let Some(p) = &r.provenance {
            let _ = write!(out, "  from {}", p.construction);
            if let Some(f) = &p.family {
                let _ = write!(out, " {f}");
            }
            if let Some(n) = p.n {
                let _ = write!(out, " n={n}");
            }
            if let Some(t) = p.t {
                let _ = write!(out, " t={t}");
            }
            if let Some(v) = p.v {
                let _ = write!(out, " v={v}");
            }
            if let Some(c) = &p.cofactor {
                let _ = write!(out, " D=[{}]", c.join(" "));
            }
            if let Some([a, b]) = &p.pair {
                let _ = write!(out, " pair=({a}, {b})");
            }
            if let Some(a) = &p.shift {
                let _ = write!(out, " a={a}");
            }
            out.push('\n');
        }
        match &r.reason {
            Some(why) => {
                let _ = writeln!(out, "  {}: {why}", r.verdict);
            }
            None => {
                let _ = writeln!(
                    out,
                    "  salem t={} alpha={}",
                    r.t.unwrap_or_default(),
                    r.alpha.as_deref().unwrap_or("?")
                );
            }
        }
        if let Some(s) = &r.spectrum {
            let _ = writeln!(out, "  spectrum {}", set(s));
        }
        for nr in &r.norms {
            let _ = writeln!(out, "  n={:<3} N(a^n-1)={}  N(a^n+1)={}", nr.n, nr.minus, nr.plus);
        }
    }
    out
}

pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
