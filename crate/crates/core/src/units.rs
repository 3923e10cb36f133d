//! Norms of `alpha^n - 1` and `alpha^n + 1`, unit certificates, and the
//! coefficient and trace-value criteria for small `n`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forge::cyclo_trace;
use crate::poly::{resultant, IntPoly};
use crate::trace::{is_reciprocal, SalemPolynomial};

/// `x^n mod s` for monic `s`.
fn x_pow_mod(n: u32, s: &IntPoly) -> IntPoly {
    let mut acc = IntPoly::one();
    let mut base = IntPoly::x().divrem(s).expect("monic modulus").1;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = (&acc * &base).divrem(s).expect("monic modulus").1;
        }
        base = (&base * &base).divrem(s).expect("monic modulus").1;
        e >>= 1;
    }
    acc
}

fn norm_of(s: &IntPoly, n: u32, plus: bool) -> BigInt {
    assert!(n >= 1, "exponent must be at least 1");
    assert!(s.is_monic(), "norms are taken over the roots of a monic polynomial");
    if s.is_constant() {
        return BigInt::one();
    }
    let one = IntPoly::one();
    let reduced = x_pow_mod(n, s);
    let q = if plus { &reduced + &one } else { &reduced - &one };
    // For monic s, res(s, q) depends only on q mod s.
    resultant(s, &q.divrem(s).expect("monic modulus").1)
}

/// `prod (r^n - 1)` over the roots `r` of a monic `s`, i.e. `res(s, x^n - 1)`.
///
/// # Panics
/// If `n == 0` or `s` is not monic.
pub fn poly_norm_minus(s: &IntPoly, n: u32) -> BigInt {
    norm_of(s, n, false)
}

/// `prod (r^n + 1)` over the roots `r` of a monic `s`, i.e. `res(s, x^n + 1)`.
///
/// # Panics
/// If `n == 0` or `s` is not monic.
pub fn poly_norm_plus(s: &IntPoly, n: u32) -> BigInt {
    norm_of(s, n, true)
}

/// `Norm(alpha^n - 1)`; always negative for a Salem number.
pub fn norm_pow_minus(s: &SalemPolynomial, n: u32) -> BigInt {
    poly_norm_minus(s.poly(), n)
}

/// `Norm(alpha^n + 1)`; always positive for a Salem number.
pub fn norm_pow_plus(s: &SalemPolynomial, n: u32) -> BigInt {
    poly_norm_plus(s.poly(), n)
}

/// `alpha^n - 1` is a unit, so `alpha^n` is an exceptional unit.
pub fn is_exceptional_power(s: &SalemPolynomial, n: u32) -> bool {
    norm_pow_minus(s, n) == BigInt::from(-1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCertificate {
    pub n: u32,
    pub norm_minus: BigInt,
    pub norm_plus: BigInt,
    pub is_unit_minus: bool,
    pub is_unit_plus: bool,
}

impl UnitCertificate {
    /// Recomputes both norms from `s`.
    pub fn check(&self, s: &IntPoly) -> bool {
        *self == certify_poly(s, self.n)
    }
}

/// Certificate for `alpha^n +- 1`. For a Salem number the norm of
/// `alpha^n - 1` is negative, so it is a unit exactly when it equals `-1`,
/// and `alpha^n + 1` exactly when its norm equals `1`.
pub fn certify(s: &SalemPolynomial, n: u32) -> UnitCertificate {
    certify_poly(s.poly(), n)
}

pub fn certify_poly(s: &IntPoly, n: u32) -> UnitCertificate {
    let norm_minus = poly_norm_minus(s, n);
    let norm_plus = poly_norm_plus(s, n);
    UnitCertificate {
        n,
        is_unit_minus: norm_minus == BigInt::from(-1),
        is_unit_plus: norm_plus.is_one(),
        norm_minus,
        norm_plus,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSpectrum {
    pub max_n: u32,
    /// Every `n <= max_n` with `alpha^n - 1` a unit.
    pub members: BTreeSet<u32>,
    /// One certificate per `n` in `1..=max_n`.
    pub certificates: Vec<UnitCertificate>,
}

pub fn unit_spectrum(s: &SalemPolynomial, max_n: u32) -> UnitSpectrum {
    let certificates: Vec<UnitCertificate> = (1..=max_n).map(|n| certify(s, n)).collect();
    let members = certificates
        .iter()
        .filter(|c| c.is_unit_minus)
        .map(|c| c.n)
        .collect();
    UnitSpectrum {
        max_n,
        members,
        certificates,
    }
}

/// Upper bound `3 * 7^(3 deg)` on the number of exceptional units in a
/// number field of the given degree.
pub fn exceptional_unit_bound(degree: u32) -> BigInt {
    BigInt::from(3) * num_traits::pow(BigInt::from(7), 3 * degree as usize)
}

fn sum_where(s: &IntPoly, upto: isize, keep: impl Fn(usize) -> bool) -> BigInt {
    if upto < 1 {
        return BigInt::zero();
    }
    (1..=upto as usize).filter(|&k| keep(k)).map(|k| s.coeff(k)).sum()
}

/// Linear conditions on the coefficients of a monic reciprocal `s` of
/// degree `2t`, with `a_k` the coefficient of `x^k`, equivalent to
/// `alpha^n - 1` being a unit for `n` in `{1, 2, 3, 4}`.
pub fn coefficient_criterion(s: &IntPoly, n: u32) -> Result<bool> {
    if !(1..=4).contains(&n) {
        return Err(Error::UnsupportedExponent(n));
    }
    let deg = s.degree().ok_or(Error::ZeroPolynomial)?;
    if !s.is_monic() || !is_reciprocal(s) || deg % 2 == 1 || deg == 0 {
        return Err(Error::Precondition(
            "expected a monic reciprocal polynomial of positive even degree".into(),
        ));
    }
    let t = deg / 2;
    let ti = t as isize;
    let a = |k: usize| s.coeff(k);
    let big = |v: i64| BigInt::from(v);
    let all = sum_where(s, ti - 1, |_| true);
    // a_{t-1} condition shared by n = 2 and n = 4; at t = 1 it reads a_0 = 1.
    let even_tail = || a(t - 1) == big(-1) - sum_where(s, ti - 3, |k| k % 2 == 0);
    let ok = match n {
        1 => a(t) == big(-3) - big(2) * all,
        2 => {
            t % 2 == 1
                && a(t) == big(-1) - big(2) * sum_where(s, ti - 2, |k| k % 2 == 1)
                && even_tail()
        }
        4 => {
            let (lead_res, side_res) = match t % 4 {
                1 => (1, 3),
                3 => (3, 1),
                _ => return Ok(false),
            };
            t >= 3
                && a(t) == big(-1) - big(2) * sum_where(s, ti - 4, |k| k % 4 == lead_res)
                && even_tail()
                && a(t - 2) == -sum_where(s, ti - 6, |k| k % 4 == side_res)
        }
        3 => {
            let r = t % 3;
            let base = if r == 0 { -3 } else { -1 };
            let side = if r == 0 { 0 } else { -1 };
            a(t) == big(base) - big(2) * sum_where(s, ti - 3, |k| k % 3 == r)
                && a(t - 1) == big(side) - sum_where(s, ti - 2, |k| k % 3 != r)
        }
        _ => unreachable!(),
    };
    Ok(ok)
}

/// Value conditions on a monic trace polynomial `T` equivalent to
/// `alpha^n - 1` being a unit for `n` in `{1, 2, 3, 4, 6}`. Even `n`
/// additionally require odd degree.
pub fn trace_criterion(trace: &IntPoly, n: u32) -> Result<bool> {
    let points: &[i64] = match n {
        1 => &[2],
        2 => &[-2, 2],
        3 => &[-1, 2],
        4 => &[-2, 0, 2],
        6 => &[-2, -1, 1, 2],
        _ => return Err(Error::UnsupportedExponent(n)),
    };
    let t = trace.degree().ok_or(Error::ZeroPolynomial)?;
    if !trace.is_monic() || t == 0 {
        return Err(Error::Precondition("expected a monic polynomial of positive degree".into()));
    }
    if n.is_multiple_of(2) && t % 2 == 0 {
        return Ok(false);
    }
    let minus_one = BigInt::from(-1);
    Ok(points.iter().all(|&x| trace.eval_int(&BigInt::from(x)) == minus_one))
}

/// The fixed factor `C_n (x - 2)` for odd `n`, `C_n (x^2 - 4)` for even `n`.
pub fn fixed_factor(n: u32) -> IntPoly {
    let edge = if n % 2 == 1 {
        IntPoly::linear(2)
    } else {
        IntPoly::from_i64(&[-4, 0, 1])
    };
    &cyclo_trace(n) * &edge
}

/// The monic `Q` with `T = C_n (x - 2) Q - 1` (odd `n`) or
/// `T = C_n (x^2 - 4) Q - 1` (even `n`, odd `deg T`). Exists exactly when
/// [`trace_criterion`] holds.
pub fn structural_cofactor(trace: &IntPoly, n: u32) -> Result<IntPoly> {
    if !matches!(n, 1 | 2 | 3 | 4 | 6) {
        return Err(Error::UnsupportedExponent(n));
    }
    let t = trace.degree().ok_or(Error::ZeroPolynomial)?;
    if !trace.is_monic() {
        return Err(Error::NotMonic);
    }
    if n.is_multiple_of(2) && t % 2 == 0 {
        return Err(Error::NoStructuralForm(n));
    }
    let (q, r) = trace.divrem(&fixed_factor(n))?;
    if r != IntPoly::from_i64(&[-1]) {
        return Err(Error::NoStructuralForm(n));
    }
    Ok(q)
}
