//! The trace transform `S(x) = x^t T(x + 1/x)` in both directions, and
//! classification of trace polynomials and Salem polynomials.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::irreducible::{is_irreducible_with, IrrConfig, IrreducibilityVerdict};
use crate::poly::{
    cauchy_bound, is_separable, isolate_roots_in, sturm_count, IntPoly, Rational, RootInterval,
};

/// `x^t T(x + 1/x)` for monic `T` of degree `t`.
pub fn expand_trace(trace: &IntPoly) -> Result<IntPoly> {
    let t = trace.degree().ok_or(Error::ZeroPolynomial)?;
    if !trace.is_monic() {
        return Err(Error::NotMonic);
    }
    let mut out = vec![BigInt::zero(); 2 * t + 1];
    for (k, c) in trace.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // c * x^(t-k) * (x^2 + 1)^k
        let mut binom = BigInt::one();
        for j in 0..=k {
            out[t - k + 2 * j] += c * &binom;
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
    }
    Ok(IntPoly::new(out))
}

/// Inverse of [`expand_trace`]: the monic `T` of degree `t` with
/// `x^t T(x + 1/x) = S`, for monic reciprocal `S` of degree `2t`.
pub fn compress_trace(s: &IntPoly) -> Result<IntPoly> {
    let deg = s.degree().ok_or(Error::ZeroPolynomial)?;
    if !is_reciprocal(s) {
        return Err(Error::NotReciprocal);
    }
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    if !s.is_monic() {
        return Err(Error::NotMonic);
    }
    let t = deg / 2;
    let mut rest: Vec<BigInt> = s.coeffs().to_vec();
    let mut trace = vec![BigInt::zero(); t + 1];
    // Peel off c * x^(t-k) (x^2+1)^k from the top; its x^(t+k) term is c.
    for k in (0..=t).rev() {
        let c = std::mem::take(&mut rest[t + k]);
        if c.is_zero() {
            continue;
        }
        let mut binom = BigInt::one();
        for j in 0..k {
            rest[t - k + 2 * j] -= &c * &binom;
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
        trace[k] = c;
    }
    debug_assert!(rest.iter().all(Zero::is_zero));
    Ok(IntPoly::new(trace))
}

/// Palindromic coefficient sequence: `x^deg S(1/x) = S(x)`.
pub fn is_reciprocal(s: &IntPoly) -> bool {
    let c = s.coeffs();
    c.iter().eq(c.iter().rev())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceTag {
    SalemTrace,
    NotMonic,
    NotSeparable,
    WrongRootLayout,
    Reducible,
    Unresolved,
}

/// Distinct real roots of a trace polynomial by location.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RootCounts {
    /// In `(-inf, -2]`.
    pub at_or_below_minus_two: usize,
    /// In `(-2, 2)`.
    pub inside: usize,
    /// Exactly at `2`.
    pub at_two: usize,
    /// In `(2, inf)`.
    pub above_two: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceVerdict {
    pub tag: TraceTag,
    pub counts: Option<RootCounts>,
    /// Present once the root layout check has passed.
    pub irreducibility: Option<IrreducibilityVerdict>,
}

impl TraceVerdict {
    pub fn is_salem_trace(&self) -> bool {
        self.tag == TraceTag::SalemTrace
    }

    fn bare(tag: TraceTag) -> TraceVerdict {
        TraceVerdict {
            tag,
            counts: None,
            irreducibility: None,
        }
    }
}

impl fmt::Display for TraceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            TraceTag::SalemTrace => write!(f, "salem trace"),
            TraceTag::NotMonic => write!(f, "not monic"),
            TraceTag::NotSeparable => write!(f, "not separable"),
            TraceTag::WrongRootLayout => {
                write!(f, "wrong root layout")?;
                if let Some(c) = &self.counts {
                    write!(
                        f,
                        " ({} at or below -2, {} in (-2,2), {} at 2, {} above 2)",
                        c.at_or_below_minus_two, c.inside, c.at_two, c.above_two
                    )?;
                }
                Ok(())
            }
            TraceTag::Reducible => match &self.irreducibility {
                Some(IrreducibilityVerdict::Reducible { witness }) => {
                    write!(f, "reducible (factor {witness})")
                }
                _ => write!(f, "reducible"),
            },
            TraceTag::Unresolved => match &self.irreducibility {
                Some(IrreducibilityVerdict::Unresolved { reason }) => {
                    write!(f, "irreducibility unresolved: {reason}")
                }
                _ => write!(f, "irreducibility unresolved"),
            },
        }
    }
}

/// Counts the distinct real roots of a square-free `p` relative to `±2`.
pub fn root_counts(p: &IntPoly) -> RootCounts {
    let two = BigInt::from(2);
    let mut counts = RootCounts::default();
    let mut rest = p.clone();
    if rest.eval_int(&-&two).is_zero() {
        counts.at_or_below_minus_two += 1;
        rest = rest.div_exact(&IntPoly::linear(-2)).expect("root at -2");
    }
    if rest.eval_int(&two).is_zero() {
        counts.at_two += 1;
        rest = rest.div_exact(&IntPoly::linear(2)).expect("root at 2");
    }
    if rest.is_constant() {
        return counts;
    }
    let bound = Rational::from_integer(cauchy_bound(&rest).max(BigInt::from(3)));
    let (m2, p2) = (Rational::from_integer(-&two), Rational::from_integer(two));
    let count = |lo: &Rational, hi: &Rational| sturm_count(&rest, lo, hi).expect("endpoints are not roots");
    counts.at_or_below_minus_two += count(&-bound.clone(), &m2);
    counts.inside = count(&m2, &p2);
    counts.above_two = count(&p2, &bound);
    counts
}

pub fn classify_trace(trace: &IntPoly) -> Result<TraceVerdict> {
    classify_trace_with(trace, &IrrConfig::default())
}

/// A Salem trace polynomial is monic, separable and irreducible of degree
/// `t >= 2`, with one root above 2 and the other `t - 1` in `(-2, 2)`.
pub fn classify_trace_with(trace: &IntPoly, config: &IrrConfig) -> Result<TraceVerdict> {
    let t = trace.degree().ok_or(Error::ZeroPolynomial)?;
    if !trace.is_monic() {
        return Ok(TraceVerdict::bare(TraceTag::NotMonic));
    }
    if !is_separable(trace) {
        return Ok(TraceVerdict::bare(TraceTag::NotSeparable));
    }
    let counts = root_counts(trace);
    let layout_ok = t >= 2
        && counts.above_two == 1
        && counts.inside == t - 1
        && counts.at_two == 0
        && counts.at_or_below_minus_two == 0;
    if !layout_ok {
        return Ok(TraceVerdict {
            tag: TraceTag::WrongRootLayout,
            counts: Some(counts),
            irreducibility: None,
        });
    }
    let irr = is_irreducible_with(trace, config)?;
    let tag = match &irr {
        IrreducibilityVerdict::Irreducible(_) => TraceTag::SalemTrace,
        IrreducibilityVerdict::Reducible { .. } => TraceTag::Reducible,
        IrreducibilityVerdict::Unresolved { .. } => TraceTag::Unresolved,
    };
    Ok(TraceVerdict {
        tag,
        counts: Some(counts),
        irreducibility: Some(irr),
    })
}

/// A certified Salem polynomial: monic, reciprocal, irreducible, of degree
/// `2t >= 4`, with exactly one root `alpha > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalemPolynomial {
    poly: IntPoly,
    trace: IntPoly,
    half_degree: usize,
    alpha_interval: RootInterval,
    trace_verdict: TraceVerdict,
}

impl SalemPolynomial {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn trace(&self) -> &IntPoly {
        &self.trace
    }

    /// `t`, half the degree.
    pub fn half_degree(&self) -> usize {
        self.half_degree
    }

    /// Isolating interval for `alpha`, inside `(1, inf)`.
    pub fn alpha_interval(&self) -> &RootInterval {
        &self.alpha_interval
    }

    pub fn trace_verdict(&self) -> &TraceVerdict {
        &self.trace_verdict
    }

    /// `alpha` rounded to `digits` decimals.
    pub fn alpha_decimal(&self, digits: usize) -> String {
        approx_root(&self.poly, &self.alpha_interval, digits).expect("alpha interval isolates alpha")
    }
}

/// Why a polynomial is not a Salem polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotSalem {
    NotMonic,
    NotReciprocal,
    OddDegree(usize),
    DegreeTooSmall(usize),
    Trace(TraceVerdict),
}

impl fmt::Display for NotSalem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSalem::NotMonic => write!(f, "not monic"),
            NotSalem::NotReciprocal => write!(f, "not reciprocal"),
            NotSalem::OddDegree(d) => write!(f, "odd degree {d}"),
            NotSalem::DegreeTooSmall(d) => write!(f, "degree {d} is below 4"),
            NotSalem::Trace(v) => write!(f, "trace polynomial: {v}"),
        }
    }
}

impl NotSalem {
    /// True when the failure is an effort limit, not a disproof.
    pub fn is_unresolved(&self) -> bool {
        matches!(self, NotSalem::Trace(v) if v.tag == TraceTag::Unresolved)
    }
}

pub fn classify_salem(s: &IntPoly) -> std::result::Result<SalemPolynomial, NotSalem> {
    classify_salem_with(s, &IrrConfig::default())
}

/// Irreducibility is decided on the trace polynomial, which has half the
/// degree: `S` is irreducible exactly when its trace is.
pub fn classify_salem_with(
    s: &IntPoly,
    config: &IrrConfig,
) -> std::result::Result<SalemPolynomial, NotSalem> {
    let Some(deg) = s.degree() else {
        return Err(NotSalem::DegreeTooSmall(0));
    };
    if !s.is_monic() {
        return Err(NotSalem::NotMonic);
    }
    if !is_reciprocal(s) {
        return Err(NotSalem::NotReciprocal);
    }
    if deg % 2 == 1 {
        return Err(NotSalem::OddDegree(deg));
    }
    if deg < 4 {
        return Err(NotSalem::DegreeTooSmall(deg));
    }
    let trace = compress_trace(s).expect("monic reciprocal of even degree");
    salem_from_trace_with(&trace, config)
}

/// The Salem polynomial `x^t T(x + 1/x)` of a Salem trace polynomial `T`.
pub fn salem_from_trace_with(
    trace: &IntPoly,
    config: &IrrConfig,
) -> std::result::Result<SalemPolynomial, NotSalem> {
    let Some(t) = trace.degree() else {
        return Err(NotSalem::DegreeTooSmall(0));
    };
    if !trace.is_monic() {
        return Err(NotSalem::NotMonic);
    }
    if t < 2 {
        return Err(NotSalem::DegreeTooSmall(2 * t));
    }
    let verdict = classify_trace_with(trace, config).expect("trace is nonzero");
    if !verdict.is_salem_trace() {
        return Err(NotSalem::Trace(verdict));
    }
    let s = expand_trace(trace).expect("monic");
    let one = Rational::one();
    let bound = Rational::from_integer(cauchy_bound(&s));
    let mut above_one = isolate_roots_in(&s, &one, &bound).expect("S(1) = T(2) is nonzero");
    assert_eq!(above_one.len(), 1, "a Salem trace gives exactly one root above 1");
    Ok(SalemPolynomial {
        poly: s,
        trace: trace.clone(),
        half_degree: t,
        alpha_interval: above_one.pop().unwrap(),
        trace_verdict: verdict,
    })
}

/// Decimal text for the root of `p` isolated by `iv`, rounded to `digits`
/// places, so the error is below `10^-digits`.
pub fn approx_root(p: &IntPoly, iv: &RootInterval, digits: usize) -> Result<String> {
    let not_isolating = || Error::NotIsolating {
        lo: Box::new(iv.lo.clone()),
        hi: Box::new(iv.hi.clone()),
    };
    if iv.lo >= iv.hi {
        return Err(not_isolating());
    }
    let (slo, shi) = (p.sign_at(&iv.lo), p.sign_at(&iv.hi));
    if slo == Ordering::Equal || shi == Ordering::Equal || slo == shi {
        return Err(not_isolating());
    }
    if sturm_count(p, &iv.lo, &iv.hi)? != 1 {
        return Err(not_isolating());
    }
    let scale = num_traits::pow(BigInt::from(10), digits);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let round = |x: &Rational| (x * Rational::from_integer(scale.clone()) + &half).floor().to_integer();
    let mut cur = iv.clone();
    loop {
        let mid = cur.midpoint();
        if p.sign_at(&mid) == Ordering::Equal {
            return Ok(format_scaled(&round(&mid), digits));
        }
        let (a, b) = (round(&cur.lo), round(&cur.hi));
        if a == b {
            return Ok(format_scaled(&a, digits));
        }
        let w = cur.width();
        cur = cur.bisect(p, slo, &w);
    }
}

fn format_scaled(n: &BigInt, digits: usize) -> String {
    let sign = if n.is_negative() { "-" } else { "" };
    let scale = num_traits::pow(BigInt::from(10), digits);
    let (int, frac) = n.abs().div_rem(&scale);
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn f0() -> IntPoly {
        p(&[1, 0, -1, -1, -1, 0, 1])
    }

    fn quartic() -> IntPoly {
        p(&[1, -1, -1, -1, 1])
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand_trace(&p(&[-3, 1])).unwrap(), p(&[1, -3, 1]));
        assert_eq!(expand_trace(&p(&[-1, -4, 0, 1])).unwrap(), f0());
        assert_eq!(expand_trace(&p(&[2, 1])), Ok(p(&[1, 2, 1])));
        assert_eq!(expand_trace(&p(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn compress_examples() {
        assert_eq!(compress_trace(&f0()).unwrap(), p(&[-1, -4, 0, 1]));
        assert_eq!(compress_trace(&quartic()).unwrap(), p(&[-3, -1, 1]));
        assert_eq!(compress_trace(&p(&[0, -1, 1])), Err(Error::NotReciprocal));
        assert_eq!(compress_trace(&p(&[1, 1, 1, 1])), Err(Error::OddDegree(3)));
        assert_eq!(compress_trace(&IntPoly::one()).unwrap(), IntPoly::one());
    }

    #[test]
    fn reciprocity_examples() {
        assert!(is_reciprocal(&f0()));
        assert!(!is_reciprocal(&p(&[0, -1, 1])));
        assert!(is_reciprocal(&IntPoly::one()));
    }

    #[test]
    fn classify_trace_examples() {
        assert!(classify_trace(&p(&[-3, -1, 1])).unwrap().is_salem_trace());
        assert!(classify_trace(&p(&[5, -5, 1])).unwrap().is_salem_trace());
        let v = classify_trace(&p(&[-3, 0, 1])).unwrap();
        assert_eq!(v.tag, TraceTag::WrongRootLayout);
        assert_eq!(v.counts.unwrap().above_two, 0);
    }

    #[test]
    fn classify_trace_failure_reasons() {
        assert_eq!(classify_trace(&p(&[1, 2])).unwrap().tag, TraceTag::NotMonic);
        assert_eq!(classify_trace(&p(&[1, -2, 1])).unwrap().tag, TraceTag::NotSeparable);
        // root exactly at 2
        let v = classify_trace(&p(&[-2, 1])).unwrap();
        assert_eq!(v.tag, TraceTag::WrongRootLayout);
        assert_eq!(v.counts.unwrap().at_two, 1);
        // degree one is never a Salem trace, even with its root above 2
        assert_eq!(classify_trace(&p(&[-3, 1])).unwrap().tag, TraceTag::WrongRootLayout);
        // (x - 1/2 ...) reducible with the right layout: (x - 3)(x - 1)
        let v = classify_trace(&p(&[3, -4, 1])).unwrap();
        assert_eq!(v.tag, TraceTag::Reducible);
        assert!(matches!(
            v.irreducibility,
            Some(IrreducibilityVerdict::Reducible { .. })
        ));
        // root at -2 counts as at-or-below
        let v = classify_trace(&(&p(&[2, 1]) * &p(&[-3, 1]))).unwrap();
        assert_eq!(v.counts.unwrap().at_or_below_minus_two, 1);
    }

    #[test]
    fn classify_salem_examples() {
        let s = classify_salem(&f0()).unwrap();
        assert_eq!(s.half_degree(), 3);
        assert!(classify_salem(&p(&[-1, 0, 0, 0, 1])).is_err());
        match classify_salem(&p(&[1, 1, 1, 1, 1])) {
            Err(NotSalem::Trace(v)) => assert_eq!(v.tag, TraceTag::WrongRootLayout),
            other => panic!("{other:?}"),
        }
        assert_eq!(classify_salem(&p(&[1, -3, 1])), Err(NotSalem::DegreeTooSmall(2)));
        assert_eq!(classify_salem(&p(&[1, 0, 1, 0, 2])), Err(NotSalem::NotMonic));
    }

    #[test]
    fn approx_root_examples() {
        let s = classify_salem(&f0()).unwrap();
        assert_eq!(s.alpha_decimal(5), "1.40127");
        assert_eq!(s.alpha_decimal(6), "1.401268");
        let q = classify_salem(&quartic()).unwrap();
        assert_eq!(q.alpha_decimal(3), "1.722");
        assert_eq!(q.alpha_decimal(5), "1.72208");
        let t = p(&[5, -5, 1]);
        let iv = RootInterval {
            lo: Rational::from_integer(3.into()),
            hi: Rational::from_integer(4.into()),
        };
        assert_eq!(approx_root(&t, &iv, 3).unwrap(), "3.618");
    }

    #[test]
    fn approx_root_negative_and_rational_roots() {
        let t = p(&[-3, -1, 1]); // (1 - sqrt 13)/2 = -1.3027756...
        let iv = RootInterval {
            lo: Rational::from_integer((-2).into()),
            hi: Rational::from_integer(0.into()),
        };
        assert_eq!(approx_root(&t, &iv, 4).unwrap(), "-1.3028");
        let lin = p(&[-2, 1]);
        let iv = RootInterval {
            lo: Rational::from_integer(1.into()),
            hi: Rational::from_integer(3.into()),
        };
        assert_eq!(approx_root(&lin, &iv, 2).unwrap(), "2.00");
        assert_eq!(approx_root(&lin, &iv, 0).unwrap(), "2");
    }

    #[test]
    fn approx_root_rejects_non_isolating_intervals() {
        let t = p(&[5, -5, 1]);
        let iv = RootInterval {
            lo: Rational::from_integer(0.into()),
            hi: Rational::from_integer(5.into()),
        };
        assert!(matches!(approx_root(&t, &iv, 3), Err(Error::NotIsolating { .. })));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-20i64..=20, 0..=max_deg).prop_map(|mut c| {
                c.push(1);
                IntPoly::from_i64(&c)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]
            #[test]
            fn compress_inverts_expand(t in monic(10)) {
                let s = expand_trace(&t).unwrap();
                prop_assert!(is_reciprocal(&s));
                prop_assert_eq!(s.reversed(), s.clone());
                prop_assert_eq!(s.degree(), Some(2 * t.degree().unwrap()));
                prop_assert_eq!(compress_trace(&s).unwrap(), t);
            }

            #[test]
            fn expansion_matches_pointwise(t in monic(6), x in 1i64..=9, y in 1i64..=9) {
                // x^t T(x + 1/x) evaluated in the rationals
                let r = Rational::new(x.into(), y.into());
                let s = expand_trace(&t).unwrap();
                let inner = &r + r.recip();
                let lhs = num_traits::pow(r.clone(), t.degree().unwrap()) * t.eval(&inner);
                prop_assert_eq!(lhs, s.eval(&r));
            }
        }
    }
}
