use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;

/// Greatest common divisor over the rationals, returned as a primitive
/// integer polynomial with positive leading coefficient. Coprime inputs
/// give `1`. Uses the primitive remainder sequence.
pub fn gcd_q(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (p.primitive_part(), q.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    if a.is_constant() && !a.is_zero() {
        IntPoly::one()
    } else {
        a
    }
}

pub fn is_separable(p: &IntPoly) -> bool {
    gcd_q(p, &p.derivative()).is_constant()
}

/// `p / gcd(p, p')`, primitive with positive leading coefficient.
pub fn square_free_part(p: &IntPoly) -> IntPoly {
    let g = gcd_q(p, &p.derivative());
    if g.is_constant() {
        return p.primitive_part();
    }
    let pp = p.primitive_part();
    // g is primitive and divides pp over Q, so by Gauss it divides over Z.
    pp.div_exact(&g)
        .expect("gcd divides its argument")
        .primitive_part()
}

/// Resultant with the convention `res(p, q) = lc(p)^deg(q) * prod q(r)`
/// over the roots `r` of `p`, so that for monic `p` it is the product of
/// `q` over the roots of `p`.
///
/// Computed with the subresultant remainder sequence; every division in
/// the loop is exact.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return BigInt::zero();
    };
    if dp == 0 {
        return num_traits::pow(p.coeffs()[0].clone(), dq);
    }
    if dq == 0 {
        return num_traits::pow(q.coeffs()[0].clone(), dp);
    }

    let ca = p.content();
    let cb = q.content();
    let mut a = p.scale_div(&ca);
    let mut b = q.scale_div(&cb);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let mut s = BigInt::one();
    let t = num_traits::pow(ca, dq) * num_traits::pow(cb, dp);

    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            s = -s;
        }
    }

    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = r.scale_div(&divisor);
        g = a.leading().unwrap().clone();
        // h <- h^(1 - delta) * g^delta
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let lb = b.leading().unwrap().clone();
            let hh = num_traits::pow(lb, da) / num_traits::pow(h, da - 1);
            return s * t * hh;
        }
    }
}

impl IntPoly {
    /// Divides every coefficient by `d`, which must divide them exactly.
    pub(crate) fn scale_div(&self, d: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs().iter().map(|c| c / d).collect())
    }
}
