//! The shifted-trace construction `F(x) (x - a) - 1`, where `F` is a fixed
//! product of `C_n`, a cofactor and `x - 2` or `x^2 - 4`, together with the
//! shift threshold above which every shift has the Salem root layout.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::basis::{chebyshev_or_one, cyclo_trace};
use super::{Provenance, SalemCertificate};
use crate::error::{Error, Result};
use crate::irreducible::IrrConfig;
use crate::poly::{gcd_q, is_separable, isolate_roots, IntPoly, Rational, RootInterval};
use crate::trace::{root_counts, salem_from_trace_with, NotSalem};
use crate::units::{certify, fixed_factor};

/// Parameters of the construction: target exponent `n`, trace degree `t`
/// and a cofactor `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    n: u32,
    t: usize,
    cofactor: IntPoly,
}

/// Minimum trace degree for exponent `n` (the cofactor has degree
/// `t` minus this).
pub fn base_degree(n: u32) -> usize {
    if n % 2 == 1 {
        (n as usize + 3) / 2
    } else {
        (n as usize + 4) / 2
    }
}

impl GeneratorSpec {
    /// Checks every hypothesis on `(n, t, D)`: odd `t` for even `n`, the
    /// cofactor degree, monic, separable, all roots in `(-2, 2)`, and
    /// coprime to `C_n`.
    pub fn new(n: u32, t: usize, cofactor: IntPoly) -> Result<GeneratorSpec> {
        let bad = |msg: String| Err(Error::InvalidGenerator(msg));
        if n == 0 {
            return bad("n must be at least 1".into());
        }
        if n.is_multiple_of(2) && t.is_multiple_of(2) {
            return bad(format!("t = {t} must be odd for even n = {n}"));
        }
        let base = base_degree(n);
        if t < base {
            return bad(format!("t = {t} is below the minimum {base} for n = {n}"));
        }
        let want = t - base;
        match cofactor.degree() {
            Some(d) if d == want => {}
            _ => return bad(format!("cofactor must have degree {want}, got {cofactor}")),
        }
        if !cofactor.is_monic() {
            return bad(format!("cofactor {cofactor} is not monic"));
        }
        if want > 0 {
            if !is_separable(&cofactor) {
                return bad(format!("cofactor {cofactor} is not separable"));
            }
            if root_counts(&cofactor).inside != want {
                return bad(format!("cofactor {cofactor} has roots outside (-2, 2)"));
            }
            if !gcd_q(&cofactor, &cyclo_trace(n)).is_constant() {
                return bad(format!("cofactor {cofactor} shares a root with C_{n}"));
            }
        }
        Ok(GeneratorSpec { n, t, cofactor })
    }

    /// Uses [`standard_cofactor`].
    pub fn standard(n: u32, t: usize) -> Result<GeneratorSpec> {
        GeneratorSpec::new(n, t, standard_cofactor(n, t)?)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn cofactor(&self) -> &IntPoly {
        &self.cofactor
    }

    /// The degree `t - 1` product whose roots stay fixed as `a` varies.
    pub fn fixed_part(&self) -> IntPoly {
        &fixed_factor(self.n) * &self.cofactor
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}, t = {}, D = {}", self.n, self.t, self.cofactor)
    }
}

/// A cofactor for `(n, t)` built from Chebyshev and cyclotomic trace
/// polynomials, covering:
/// odd `n` with `t >= (n+3)/2`;
/// `n = 2 mod 4` with odd `t >= (n+4)/2`;
/// `n` a power of two at least 4, with odd `t >= (n+6)/2`;
/// `n = 4 mod 8` not divisible by 3, with odd `t >= (n+6)/2`.
pub fn standard_cofactor(n: u32, t: usize) -> Result<IntPoly> {
    let unsupported = |reason: String| Err(Error::Unsupported { n, t, reason });
    if n == 0 {
        return unsupported("n must be at least 1".into());
    }
    let nn = n as usize;
    if n % 2 == 1 {
        if t < (nn + 3) / 2 {
            return unsupported(format!("odd n needs t >= {}", (nn + 3) / 2));
        }
        return Ok(chebyshev_or_one((t - (nn + 3) / 2) as u32));
    }
    if t.is_multiple_of(2) {
        return unsupported("even n needs odd t".into());
    }
    if n % 4 == 2 {
        if t < (nn + 4) / 2 {
            return unsupported(format!("n = 2 mod 4 needs t >= {}", (nn + 4) / 2));
        }
        return Ok(chebyshev_or_one((t - (nn + 4) / 2) as u32));
    }
    if t < (nn + 6) / 2 {
        return unsupported(format!("n divisible by 4 needs t >= {}", (nn + 6) / 2));
    }
    // odd cofactor degree 2d + 1
    let d = (t - (nn + 4) / 2 - 1) / 2;
    if n.is_power_of_two() {
        return Ok(cyclo_trace(4 * d as u32 + 3));
    }
    if n % 8 == 4 && !n.is_multiple_of(3) {
        return Ok(&IntPoly::linear(1) * &chebyshev_or_one(2 * d as u32));
    }
    let why = if n % 8 != 4 {
        "n is divisible by 8 but not a power of two"
    } else {
        "n = 4 mod 8 but n is divisible by 3"
    };
    unsupported(why.into())
}

/// `R_a = F(x) (x - a) - 1`, monic of degree `t`.
pub fn shifted_trace(spec: &GeneratorSpec, a: &BigInt) -> IntPoly {
    &(&spec.fixed_part() * &IntPoly::linear(a.clone())) - &IntPoly::one()
}

/// Isolating intervals of the fixed roots, refined so each consecutive
/// pair that must capture two roots of `R_a` is split by a rational point.
fn separators(spec: &GeneratorSpec) -> (Vec<RootInterval>, Vec<Rational>) {
    let fixed = spec.fixed_part();
    let mut ivs = isolate_roots(&fixed);
    debug_assert_eq!(ivs.len(), spec.t - 1);
    let first = if spec.t % 2 == 1 { 0 } else { 1 };
    let two = Rational::from_integer(BigInt::from(2));
    let mut gammas = Vec::new();
    let mut i = first;
    while i + 1 < ivs.len() {
        loop {
            let g = (ivs[i].midpoint() + ivs[i + 1].midpoint()) / &two;
            let clear = ivs[i].hi < g
                && g < ivs[i + 1].lo
                && ivs[i].width() <= &g - &ivs[i].hi
                && ivs[i + 1].width() <= &ivs[i + 1].lo - &g;
            if clear {
                gammas.push(g);
                break;
            }
            for j in [i, i + 1] {
                let w = ivs[j].width() / &two;
                ivs[j] = ivs[j].refine(&fixed, &w);
            }
        }
        i += 2;
    }
    (ivs, gammas)
}

/// Largest separating-point bound `|g| + 1 / prod |g - b|` over the fixed
/// roots `b`, each distance bounded below through its isolating interval.
/// `None` when there is no pair to separate.
fn largest_bound(spec: &GeneratorSpec) -> Option<Rational> {
    let (ivs, gammas) = separators(spec);
    gammas
        .iter()
        .map(|g| {
            let mut prod = Rational::one();
            for iv in &ivs {
                let dist = if iv.hi <= *g { g - &iv.hi } else { &iv.lo - g };
                prod *= dist;
            }
            g.abs() + prod.recip()
        })
        .max()
}

/// A rational `A >= 3` such that for every integer `a > A`, `R_a` has `t - 1`
/// roots in `(-2, 2)` and one in `(a, a + 1)`.
pub fn shift_threshold(spec: &GeneratorSpec) -> Rational {
    let three = Rational::from_integer(BigInt::from(3));
    largest_bound(spec).map_or(three.clone(), |m| m.max(three))
}

/// Smallest integer `a >= 3` exceeding every separating-point bound; the
/// layout argument needs only those strict inequalities and `a >= 3`.
pub fn scan_start(spec: &GeneratorSpec) -> BigInt {
    let three = BigInt::from(3);
    match largest_bound(spec) {
        None => three,
        Some(m) => (m.floor().to_integer() + BigInt::one()).max(three),
    }
}

#[derive(Clone, Debug)]
pub struct GenerateOptions {
    pub irr: IrrConfig,
    /// Abort after this many consecutive shifts with undecided
    /// irreducibility.
    pub max_consecutive_unresolved: usize,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        GenerateOptions {
            irr: IrrConfig::default(),
            max_consecutive_unresolved: 8,
        }
    }
}

/// A shift that produced no certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkippedShift {
    pub a: BigInt,
    pub reason: NotSalem,
}

#[derive(Clone, Debug)]
pub struct Generation {
    pub certificates: Vec<SalemCertificate>,
    pub skipped: Vec<SkippedShift>,
}

/// The first `count` certified Salem numbers `alpha` with `alpha^n - 1` a
/// unit from the shifted-trace construction, in increasing shift order.
pub fn generate_salem_units(
    spec: &GeneratorSpec,
    count: usize,
    a_start: Option<&BigInt>,
) -> Result<Vec<SalemCertificate>> {
    Ok(generate_with(spec, count, a_start, &GenerateOptions::default())?.certificates)
}

/// As [`generate_salem_units`], also reporting skipped shifts. Reducible
/// shifts are skipped (finitely many exist); undecided ones are skipped
/// too but abort the scan once too many occur in a row.
pub fn generate_with(
    spec: &GeneratorSpec,
    count: usize,
    a_start: Option<&BigInt>,
    opts: &GenerateOptions,
) -> Result<Generation> {
    let mut a = scan_start(spec);
    if let Some(s) = a_start {
        a = a.max(s.clone());
    }
    let provenance = Provenance::Shifted {
        n: spec.n,
        t: spec.t,
        cofactor: spec.cofactor.clone(),
    };
    let mut out = Generation {
        certificates: Vec::new(),
        skipped: Vec::new(),
    };
    let mut unresolved_run = 0;
    while out.certificates.len() < count {
        let trace = shifted_trace(spec, &a);
        match salem_from_trace_with(&trace, &opts.irr) {
            Ok(salem) => {
                unresolved_run = 0;
                let cert = certify(&salem, spec.n);
                if !cert.is_unit_minus {
                    return Err(Error::Internal(format!(
                        "shift a = {a} for {spec} gave norm {} instead of -1",
                        cert.norm_minus
                    )));
                }
                out.certificates.push(SalemCertificate {
                    salem,
                    trace,
                    shift: Some(a.clone()),
                    certificates: vec![cert],
                    provenance: provenance.clone(),
                });
            }
            Err(reason) => {
                if reason.is_unresolved() {
                    unresolved_run += 1;
                    if unresolved_run > opts.max_consecutive_unresolved {
                        return Err(Error::TooManyUnresolved {
                            count: unresolved_run,
                            last: format!("{spec}, a = {a}: {reason}"),
                        });
                    }
                } else {
                    unresolved_run = 0;
                    if !matches!(&reason, NotSalem::Trace(v) if v.tag == crate::trace::TraceTag::Reducible) {
                        return Err(Error::Internal(format!(
                            "shift a = {a} above the threshold for {spec}: {reason}"
                        )));
                    }
                }
                out.skipped.push(SkippedShift {
                    a: a.clone(),
                    reason,
                });
            }
        }
        a += 1;
    }
    Ok(out)
}

/// The first `how_many` pairs `(v, t)` with `gcd(n, 4v + 3) = 1` and
/// `t = 2v + 3 + n/2`, for `n` divisible by 4. With cofactor `C_{4v+3}` each
/// gives Salem numbers of degree `2t = 4v + n + 6`.
pub fn coprime_residue_degrees(n: u32, how_many: usize) -> Result<Vec<(u64, usize)>> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(Error::Precondition(format!(
            "n = {n} is not divisible by 4; use the standard cofactor instead"
        )));
    }
    let n64 = n as u64;
    Ok((0u64..)
        .filter(|v| n64.gcd(&(4 * v + 3)) == 1)
        .take(how_many)
        .map(|v| (v, (2 * v + 3) as usize + n as usize / 2))
        .collect())
}

/// Certificates from cofactor `C_{4v+3}` at `t = 2v + 3 + n/2`.
pub fn generate_coprime_residue(
    n: u32,
    v: u64,
    count: usize,
    a_start: Option<&BigInt>,
) -> Result<Vec<SalemCertificate>> {
    Ok(generate_coprime_residue_with(n, v, count, a_start, &GenerateOptions::default())?.certificates)
}

pub fn generate_coprime_residue_with(
    n: u32,
    v: u64,
    count: usize,
    a_start: Option<&BigInt>,
    opts: &GenerateOptions,
) -> Result<Generation> {
    if n == 0 || !n.is_multiple_of(4) || (n as u64).gcd(&(4 * v + 3)) != 1 {
        return Err(Error::Precondition(format!(
            "need 4 | n and gcd(n, 4v + 3) = 1, got n = {n}, v = {v}"
        )));
    }
    let t = (2 * v + 3) as usize + n as usize / 2;
    let spec = GeneratorSpec::new(n, t, cyclo_trace(4 * v as u32 + 3))?;
    let mut out = generate_with(&spec, count, a_start, opts)?;
    for c in &mut out.certificates {
        c.provenance = Provenance::CoprimeResidue { n, v, t };
    }
    Ok(out)
}
