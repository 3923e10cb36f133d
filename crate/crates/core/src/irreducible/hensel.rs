//! Hensel lifting of a modular factorization and exhaustive recombination
//! of the lifted factors into true integer factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{to_bigint, Field, Fp};
use crate::poly::IntPoly;

/// Coefficient bound for any monic integer factor of `f` with degree below
/// `deg f`: `binom(n-1, (n-1)/2) * ceil(||f||_2)`.
pub(crate) fn mignotte_bound(f: &IntPoly) -> BigInt {
    let n = f.degree().unwrap_or(0);
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let mut norm = norm_sq.sqrt();
    if &norm * &norm < norm_sq {
        norm += 1;
    }
    let m = n.saturating_sub(1);
    let mut binom = BigInt::one();
    for i in 0..m / 2 {
        binom = binom * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    binom * norm
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter().map(|c| c.mod_floor(m)).collect()
}

fn product_mod(field: &Field, factors: &[Fp]) -> Fp {
    factors.iter().fold(vec![1], |acc, f| field.mul(&acc, f))
}

/// Lifts `f = g * h (mod p)` to `(mod p^k)` for monic `g`, `h`, linearly.
fn lift_pair(field: &Field, f: &IntPoly, g: &Fp, h: &Fp, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(field.p);
    let (_, s, t) = field.ext_gcd(g, h);
    let mut big_g = to_bigint(g);
    let mut big_h = to_bigint(h);
    let mut pk = p.clone();
    for _ in 1..k {
        let next = &pk * &p;
        let gh = mul_mod(&big_g, &big_h, &next);
        // e = (f - G H) / p^k  (mod p)
        let len = f.coeffs().len().max(gh.len());
        let mut e: Fp = (0..len)
            .map(|i| {
                let diff = f.coeff(i) - gh.get(i).cloned().unwrap_or_else(BigInt::zero);
                let q = diff.mod_floor(&next) / &pk;
                u64::try_from(q).expect("digit below p")
            })
            .collect();
        super::modp::trim(&mut e);
        // h*dg + g*dh = e  with deg dg < deg g
        let te = field.mul(&t, &e);
        let (q, dg) = field.divrem(&te, g);
        let dh = field.add(&field.mul(&s, &e), &field.mul(&q, h));
        add_scaled(&mut big_g, &dg, &pk, &next);
        add_scaled(&mut big_h, &dh, &pk, &next);
        pk = next;
    }
    (big_g, big_h)
}

fn add_scaled(target: &mut Vec<BigInt>, delta: &Fp, scale: &BigInt, m: &BigInt) {
    if target.len() < delta.len() {
        target.resize(delta.len(), BigInt::zero());
    }
    for (i, &d) in delta.iter().enumerate() {
        target[i] = (&target[i] + scale * BigInt::from(d)).mod_floor(m);
    }
}

/// Lifts a complete factorization of `f mod p` into monic factors
/// modulo `p^k`.
pub(crate) fn lift_factors(field: &Field, f: &IntPoly, factors: &[Fp], k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let m = num_traits::pow(BigInt::from(field.p), k as usize);
        return vec![f.coeffs().iter().map(|c| c.mod_floor(&m)).collect()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g = product_mod(field, left);
    let h = product_mod(field, right);
    let (big_g, big_h) = lift_pair(field, f, &g, &h, k);
    let mut out = lift_factors(field, &IntPoly::new(big_g), left, k);
    out.extend(lift_factors(field, &IntPoly::new(big_h), right, k));
    out
}

pub(crate) enum Recombination {
    Factor(IntPoly),
    Exhausted,
    Budget,
}

/// Tries every subset of lifted factors whose degree is allowed, smallest
/// subsets first, and trial-divides `f` by the symmetric lift of each
/// product.
pub(crate) fn recombine(
    f: &IntPoly,
    lifted: &[Vec<BigInt>],
    modulus: &BigInt,
    allowed_degree: impl Fn(usize) -> bool,
    max_subsets: u64,
) -> Recombination {
    let n = f.degree().unwrap();
    let r = lifted.len();
    let degs: Vec<usize> = lifted.iter().map(|g| g.len() - 1).collect();
    let half = modulus / 2;
    let f0 = f.coeff(0);
    let mut tried = 0u64;
    for size in 1..r {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let d: usize = idx.iter().map(|&i| degs[i]).sum();
            if 2 * d <= n && allowed_degree(d) {
                tried += 1;
                if tried > max_subsets {
                    return Recombination::Budget;
                }
                let prod = idx
                    .iter()
                    .fold(vec![BigInt::one()], |acc, &i| mul_mod(&acc, &lifted[i], modulus));
                let cand: Vec<BigInt> = prod
                    .into_iter()
                    .map(|c| if c > half { c - modulus } else { c })
                    .collect();
                let cand = IntPoly::new(cand);
                let c0 = cand.coeff(0);
                let plausible = if c0.is_zero() { f0.is_zero() } else { (&f0 % &c0).is_zero() };
                if plausible && cand.is_monic() && f.div_exact(&cand).is_some() {
                    return Recombination::Factor(cand);
                }
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
    }
    Recombination::Exhausted
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest `k` with `p^k > 2 * bound`.
pub(crate) fn lift_exponent(p: u64, bound: &BigInt) -> u32 {
    let target = bound.abs() * 2;
    let p = BigInt::from(p);
    let mut pk = p.clone();
    let mut k = 1;
    while pk <= target {
        pk *= &p;
        k += 1;
    }
    k
}
