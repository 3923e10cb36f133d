//! Dense polynomials over a small prime field, just enough for
//! distinct-degree and equal-degree factorization.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::Rng;

use crate::poly::IntPoly;

/// Ascending coefficients in `[0, p)`, no trailing zeros.
pub(crate) type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Field {
        debug_assert!((2..(1 << 31)).contains(&p));
        Field { p }
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulm(acc, base);
            }
            base = self.mulm(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn reduce(&self, f: &IntPoly) -> Fp {
        let m = BigInt::from(self.p);
        let mut out: Fp = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &m) + &m) % &m;
                u64::try_from(r).expect("residue fits")
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn add(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let mut out: Fp = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(&mut out);
        out
    }

    pub fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let mut out: Fp = (0..n)
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn scale(&self, a: &Fp, k: u64) -> Fp {
        let mut out: Fp = a.iter().map(|&x| self.mulm(x, k)).collect();
        trim(&mut out);
        out
    }

    pub fn monic(&self, a: &Fp) -> Fp {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        let db = b.len() - 1;
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv_lead = self.inv(b[db]);
        let mut r = a.clone();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mulm(r[k + db], inv_lead);
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - self.mulm(c, bj)) % self.p;
            }
        }
        trim(&mut q);
        trim(&mut r);
        (q, r)
    }

    pub fn rem(&self, a: &Fp, b: &Fp) -> Fp {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &Fp, b: &Fp) -> Fp {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` monic.
    pub fn ext_gcd(&self, a: &Fp, b: &Fp) -> (Fp, Fp, Fp) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
        let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let k = self.inv(*r0.last().expect("nonzero gcd"));
        (self.scale(&r0, k), self.scale(&s0, k), self.scale(&t0, k))
    }

    pub fn derivative(&self, a: &Fp) -> Fp {
        let mut out: Fp = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
            .collect();
        trim(&mut out);
        out
    }

    pub fn powmod(&self, base: &Fp, exp: &BigUint, m: &Fp) -> Fp {
        let mut acc: Fp = self.rem(&vec![1], m);
        let base = self.rem(base, m);
        for i in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), m);
            if exp.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
        }
        acc
    }

    pub fn is_square_free(&self, f: &Fp) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic square-free polynomial:
    /// pairs `(d, product of all irreducible factors of degree d)`.
    pub fn distinct_degree(&self, f: &Fp) -> Vec<(usize, Fp)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x: Fp = vec![0, 1];
        let mut h = self.rem(&x, &rest);
        let p = BigUint::from(self.p);
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((deg, rest));
                break;
            }
            h = self.powmod(&h, &p, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((d, g));
            }
        }
        out
    }

    /// Degrees of the irreducible factors of a monic square-free `f`.
    pub fn factor_degrees(&self, f: &Fp) -> Vec<usize> {
        let mut degs = Vec::new();
        for (d, g) in self.distinct_degree(f) {
            let count = (g.len() - 1) / d;
            degs.extend(std::iter::repeat_n(d, count));
        }
        degs
    }

    /// Splits a product of distinct monic irreducibles of common degree `d`
    /// (Cantor-Zassenhaus; requires odd `p`).
    pub fn equal_degree<R: Rng>(&self, g: &Fp, d: usize, rng: &mut R) -> Vec<Fp> {
        let n = g.len() - 1;
        if n == d {
            return vec![g.clone()];
        }
        let exp = (num_traits::pow(BigUint::from(self.p), d) - BigUint::one()) >> 1;
        let mut done = Vec::new();
        let mut todo = vec![g.clone()];
        while let Some(u) = todo.pop() {
            if u.len() - 1 == d {
                done.push(u);
                continue;
            }
            loop {
                let mut a: Fp = (0..u.len() - 1).map(|_| rng.gen_range(0..self.p)).collect();
                trim(&mut a);
                if a.len() <= 1 {
                    continue;
                }
                let b = self.sub(&self.powmod(&a, &exp, &u), &vec![1]);
                let h = self.gcd(&b, &u);
                if h.len() > 1 && h.len() < u.len() {
                    let other = self.divrem(&u, &h).0;
                    todo.push(h);
                    todo.push(self.monic(&other));
                    break;
                }
            }
        }
        done
    }

    /// Complete factorization of a monic square-free polynomial into monic
    /// irreducibles, sorted for determinism.
    pub fn factor<R: Rng>(&self, f: &Fp, rng: &mut R) -> Vec<Fp> {
        debug_assert!(self.p > 2);
        let mut out = Vec::new();
        for (d, g) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

pub(crate) fn trim(v: &mut Fp) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn to_bigint(f: &Fp) -> Vec<BigInt> {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Primes in increasing order.
pub(crate) fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}
