//! Chebyshev polynomials, trace polynomials of cyclotomic quotients, and
//! the coprimality predicates between them.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{gcd_q, IntPoly};
use crate::trace::compress_trace;

/// Normalized Chebyshev polynomial `t_k` with `t_k(2 cos u) = 2 cos(k u)`,
/// from `t_1 = x`, `t_2 = x^2 - 2`, `t_{k+2} = x t_{k+1} - t_k`.
pub fn chebyshev(k: u32) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::ChebyshevIndexZero);
    }
    let x = IntPoly::x();
    let (mut prev, mut cur) = (IntPoly::from_i64(&[2]), x.clone());
    for _ in 1..k {
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// `t_k` with `t_0 = 1`, the convention used when building cofactors.
pub(crate) fn chebyshev_or_one(k: u32) -> IntPoly {
    if k == 0 {
        IntPoly::one()
    } else {
        chebyshev(k).expect("k >= 1")
    }
}

/// Trace polynomial of `(x^n - 1)/(x - 1)` for odd `n`, of
/// `(x^n - 1)/(x^2 - 1)` for even `n`. Its roots are `2 cos(2 pi k / n)`.
///
/// # Panics
/// If `n == 0`.
pub fn cyclo_trace(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclo_trace needs n >= 1");
    let step = if n % 2 == 1 { 1 } else { 2 };
    let top = (n - step) as usize;
    let mut coeffs = vec![BigInt::from(0); top + 1];
    for k in (0..=top).step_by(step as usize) {
        coeffs[k] = BigInt::from(1);
    }
    compress_trace(&IntPoly::new(coeffs)).expect("geometric sums are monic and reciprocal")
}

/// `gcd(t_k, C_n) = 1`. Always true unless `4 | n`.
///
/// # Panics
/// If `k == 0` or `n == 0`.
pub fn chebyshev_coprime(k: u32, n: u32) -> bool {
    let tk = chebyshev(k).expect("k >= 1");
    gcd_q(&tk, &cyclo_trace(n)).is_constant()
}

/// `gcd(C_n, C_m) = 1`, which holds exactly when `gcd(n, m)` is 1 or 2.
///
/// # Panics
/// If `n == 0` or `m == 0`.
pub fn cyclo_coprime(n: u32, m: u32) -> bool {
    gcd_q(&cyclo_trace(n), &cyclo_trace(m)).is_constant()
}
