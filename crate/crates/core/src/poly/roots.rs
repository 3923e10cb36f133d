//! Real-root counting and isolation with exact Sturm sequences.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, Rational, SignOrdering};
use crate::error::{Error, Result};

/// Open interval `(lo, hi)` with rational endpoints isolating exactly one
/// real root of an associated square-free polynomial, which is nonzero at
/// both endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Bisects until the width is at most `max_width`. `p` must be the
    /// polynomial this interval isolates a simple root of.
    pub fn refine(&self, p: &IntPoly, max_width: &Rational) -> RootInterval {
        let mut iv = self.clone();
        let lo_sign = p.sign_at(&iv.lo);
        while &iv.width() > max_width {
            iv = iv.bisect(p, lo_sign, max_width);
        }
        iv
    }

    /// One bisection step. If the midpoint is the root itself, the result
    /// is a small interval centered on it.
    pub(crate) fn bisect(&self, p: &IntPoly, lo_sign: Ordering, max_width: &Rational) -> RootInterval {
        let mid = self.midpoint();
        match p.sign_at(&mid) {
            Ordering::Equal => {
                let quarter = Rational::new(BigInt::one(), BigInt::from(4));
                let half_width = (self.width() * &quarter).min(max_width * &quarter);
                RootInterval {
                    lo: &mid - &half_width,
                    hi: &mid + &half_width,
                }
            }
            s if s == lo_sign => RootInterval {
                lo: mid,
                hi: self.hi.clone(),
            },
            _ => RootInterval {
                lo: self.lo.clone(),
                hi: mid,
            },
        }
    }
}

/// Cauchy bound `1 + max|c_i| / |lead|`, rounded up; every complex root
/// has modulus strictly below it.
pub fn cauchy_bound(p: &IntPoly) -> BigInt {
    let Some(lead) = p.leading() else {
        return BigInt::one();
    };
    let lead = lead.abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    let q = (&max + &lead - BigInt::one()) / &lead;
    q + BigInt::one()
}

/// A Sturm sequence for a fixed polynomial, reusable across many interval
/// queries.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds `p, p', -rem(p, p'), ...` with each term divided by its
    /// positive content, so signs are those of the rational sequence.
    pub fn new(p: &IntPoly) -> SturmChain {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return SturmChain { chain };
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let mut r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem multiplies by lc(b)^(deg a - deg b + 1); undo its sign.
            let e = a.degree().unwrap() - b.degree().unwrap() + 1;
            let lb_negative = b.leading().unwrap().is_negative();
            if !(lb_negative && e % 2 == 1) {
                r = -r;
            }
            let c = r.content();
            r = r.scale_div(&c);
            let done = r.is_constant();
            chain.push(r);
            if done {
                break;
            }
        }
        SturmChain { chain }
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|q| q.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|q| q.leading().unwrap().sign_ordering()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|q| {
            let s = q.leading().unwrap().sign_ordering();
            if q.degree().unwrap() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(lo, hi)`; both endpoints must be
    /// non-roots.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Number of distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

/// Exact number of distinct real roots of `p` in the open interval
/// `(lo, hi)`. Refuses when an endpoint is a root.
pub fn sturm_count(p: &IntPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval {
            lo: Box::new(lo.clone()),
            hi: Box::new(hi.clone()),
        });
    }
    for x in [lo, hi] {
        if p.sign_at(x) == Ordering::Equal {
            return Err(Error::EndpointIsRoot { at: Box::new(x.clone()) });
        }
    }
    Ok(SturmChain::new(p).count(lo, hi))
}

/// Isolating intervals for every distinct real root, in increasing order.
/// `p` should be square-free so that the intervals can be refined by sign.
pub fn isolate_roots(p: &IntPoly) -> Vec<RootInterval> {
    if p.is_constant() {
        return Vec::new();
    }
    let b = Rational::from_integer(cauchy_bound(p));
    isolate_roots_in(p, &-b.clone(), &b).expect("Cauchy bound endpoints are never roots")
}

/// Isolating intervals for the roots in `(lo, hi)`, in increasing order.
pub fn isolate_roots_in(p: &IntPoly, lo: &Rational, hi: &Rational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval {
            lo: Box::new(lo.clone()),
            hi: Box::new(hi.clone()),
        });
    }
    for x in [lo, hi] {
        if p.sign_at(x) == Ordering::Equal {
            return Err(Error::EndpointIsRoot { at: Box::new(x.clone()) });
        }
    }
    let chain = SturmChain::new(p);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), chain.count(lo, hi))];
    // Depth-first, right half pushed first so output comes out ascending.
    while let Some((a, b, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(RootInterval { lo: a, hi: b }),
            _ => {
                let mid = split_point(p, &a, &b);
                let left = chain.count(&a, &mid);
                stack.push((mid.clone(), b, n - left));
                stack.push((a, mid, left));
            }
        }
    }
    Ok(out)
}

/// Midpoint of `(a, b)`, nudged by `(b - a) / 2^k` when it is a root.
fn split_point(p: &IntPoly, a: &Rational, b: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    let mid = (a + b) / &two;
    if p.sign_at(&mid) != Ordering::Equal {
        return mid;
    }
    let mut step = (b - a) / &two;
    loop {
        step /= &two;
        let cand = &mid + &step;
        if p.sign_at(&cand) != Ordering::Equal {
            return cand;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn sturm_examples() {
        let t0 = p(&[-1, -4, 0, 1]);
        assert_eq!(sturm_count(&t0, &r(-2), &r(2)).unwrap(), 2);
        assert_eq!(sturm_count(&t0, &r(2), &r(3)).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &r(-10), &r(10)).unwrap(), 0);
    }

    #[test]
    fn sturm_refuses_root_endpoints() {
        let e = sturm_count(&p(&[-1, 1]), &r(0), &r(1)).unwrap_err();
        assert_eq!(e, Error::EndpointIsRoot { at: Box::new(r(1)) });
        assert!(matches!(
            sturm_count(&p(&[-1, 1]), &r(3), &r(2)),
            Err(Error::EmptyInterval { .. })
        ));
    }

    #[test]
    fn sturm_counts_distinct_roots_of_non_square_free_input() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(sturm_count(&f, &r(-5), &r(5)).unwrap(), 2);
        assert_eq!(SturmChain::new(&f).count_all(), 2);
    }

    #[test]
    fn isolation_examples() {
        let ivs = isolate_roots(&p(&[5, -5, 1]));
        assert_eq!(ivs.len(), 2);
        let a = ivs[0].refine(&p(&[5, -5, 1]), &Rational::new(1.into(), 100.into()));
        assert!(a.lo > r(1) && a.hi < r(2));
        let b = ivs[1].refine(&p(&[5, -5, 1]), &Rational::new(1.into(), 100.into()));
        assert!(b.lo > r(3) && b.hi < r(4));

        assert!(isolate_roots(&p(&[1, 0, 1])).is_empty());

        let t0 = p(&[-1, -4, 0, 1]);
        let ivs = isolate_roots(&t0);
        assert_eq!(ivs.len(), 3);
        let top = ivs[2].refine(&t0, &Rational::new(1.into(), 10.into()));
        assert!(top.lo > r(2) && top.hi < r(3));
        assert!(ivs[0].hi <= ivs[1].lo && ivs[1].hi <= ivs[2].lo);
    }

    #[test]
    fn isolation_handles_rational_roots_at_midpoints() {
        // roots -2, 0, 2: every first split lands on a root.
        let f = p(&[0, -4, 0, 1]);
        let ivs = isolate_roots(&f);
        assert_eq!(ivs.len(), 3);
        for (iv, root) in ivs.iter().zip([-2, 0, 2]) {
            assert!(iv.contains(&r(root)));
            let tight = iv.refine(&f, &Rational::new(1.into(), 1000.into()));
            assert!(tight.contains(&r(root)));
            assert_ne!(f.sign_at(&tight.lo), Ordering::Equal);
        }
    }

    #[test]
    fn cauchy_bound_is_strict() {
        assert_eq!(cauchy_bound(&p(&[-6, 1])), BigInt::from(7));
        assert_eq!(cauchy_bound(&p(&[1, 0, 0, 2])), BigInt::from(2));
    }
}
