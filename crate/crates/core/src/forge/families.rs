//! Named one-parameter families and the integer recurrence for sextic
//! Salem numbers with `alpha^5 - 1` a unit.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::basis::cyclo_trace;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Degree 6; `alpha^2 - 1` is a unit.
    F,
    /// Degree 6; `alpha^3 - 1` is a unit for `a >= 3`.
    G,
    /// Degree 10; `alpha^n - 1` is a unit for `n <= 4` once `a` is large.
    H,
}

impl Family {
    /// Exponents whose units the family is built for.
    pub fn exponents(self) -> &'static [u32] {
        match self {
            Family::F => &[1, 2],
            Family::G => &[1, 3],
            Family::H => &[1, 2, 3, 4],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::F => "F",
            Family::G => "G",
            Family::H => "H",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            "H" | "h" => Ok(Family::H),
            _ => Err(Error::Precondition(format!("unknown family {s:?}, expected F, G or H"))),
        }
    }
}

/// The family member at parameter `a`, ascending coefficients:
/// `F_a = [1, -a, -1, 2a-1, -1, -a, 1]`,
/// `G_a = [1, -a, a, -3, a, -a, 1]`,
/// `H_a = [1, -a, -a, 0, a-1, 2a-1, a-1, 0, -a, -a, 1]`.
pub fn family(name: Family, a: &BigInt) -> IntPoly {
    let one = BigInt::one();
    let zero = BigInt::zero;
    let coeffs = match name {
        Family::F => vec![
            one.clone(),
            -a,
            -&one,
            a * 2 - &one,
            -&one,
            -a,
            one,
        ],
        Family::G => vec![
            one.clone(),
            -a,
            a.clone(),
            BigInt::from(-3),
            a.clone(),
            -a,
            one,
        ],
        Family::H => vec![
            one.clone(),
            -a,
            -a,
            zero(),
            a - &one,
            a * 2 - &one,
            a - &one,
            zero(),
            -a,
            -a,
            one,
        ],
    };
    IntPoly::new(coeffs)
}

/// Trace polynomial of [`family`] in factored form:
/// `F: (x^2 - 4)(x - a) - 1`, `G: (x - 2)(x + 1)(x - a + 1) - 1`,
/// `H: x (x^2 - 4)(x + 1)(x - a - 1) - 1`.
pub fn family_trace(name: Family, a: &BigInt) -> IntPoly {
    let quad = IntPoly::from_i64(&[-4, 0, 1]);
    let prod = match name {
        Family::F => &quad * &IntPoly::linear(a.clone()),
        Family::G => &(&IntPoly::linear(2) * &IntPoly::linear(-1)) * &IntPoly::linear(a - 1),
        Family::H => &(&(&IntPoly::x() * &quad) * &IntPoly::linear(-1)) * &IntPoly::linear(a + 1),
    };
    &prod - &IntPoly::one()
}

/// Integer solution `(a, b)` of `a^2 + b^2 + a + b + 3ab = 0` from the
/// recurrence, with its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrencePair {
    pub index: usize,
    pub a: BigInt,
    pub b: BigInt,
}

impl RecurrencePair {
    /// `a^2 + b^2 + a + b + 3ab`.
    pub fn form(&self) -> BigInt {
        let (a, b) = (&self.a, &self.b);
        a * a + b * b + a + b + BigInt::from(3) * a * b
    }
}

/// `(-(1 + 3y) + sign * sqrt(5y^2 + 2y + 1)) / 2`, which must be exact.
fn other_root(y: &BigInt, sign: i32) -> Result<BigInt> {
    let radicand = BigInt::from(5) * y * y + BigInt::from(2) * y + BigInt::one();
    let root = radicand.sqrt();
    if &root * &root != radicand {
        return Err(Error::Internal(format!("radicand {radicand} is not a perfect square")));
    }
    let num = -(BigInt::from(3) * y + BigInt::one()) + if sign > 0 { root } else { -root };
    if (&num % 2u32).is_zero() {
        Ok(num / 2)
    } else {
        Err(Error::Internal(format!("{num} is odd; the recurrence left the integers")))
    }
}

/// The first `how_many` pairs, starting from `(0, 0)`: `b_k` is the larger
/// root of the form in `b` given `a_k`, and `a_{k+1}` the smaller root in
/// `a` given `b_k`.
pub fn recurrence_pairs(how_many: usize) -> Result<Vec<RecurrencePair>> {
    let mut out = Vec::with_capacity(how_many);
    let mut a = BigInt::zero();
    for index in 0..how_many {
        let b = other_root(&a, 1)?;
        let pair = RecurrencePair { index, a, b };
        if !pair.form().is_zero() {
            return Err(Error::Internal(format!("pair {pair:?} is off the conic")));
        }
        a = other_root(&pair.b, -1)?;
        out.push(pair);
    }
    Ok(out)
}

/// `(x^2 + x - 1)(x - 2) + a x^2 + b x - (1 + 2b + 4a)`, a cubic trace
/// polynomial with value `-1` at 2 whose product over the roots of
/// `C_5 (x - 2)` is `-1` whenever the pair lies on the conic.
pub fn recurrence_trace(pair: &RecurrencePair) -> Result<IntPoly> {
    if !pair.form().is_zero() {
        return Err(Error::Precondition(format!(
            "({}, {}) does not satisfy a^2 + b^2 + a + b + 3ab = 0",
            pair.a, pair.b
        )));
    }
    let (a, b) = (&pair.a, &pair.b);
    let base = &cyclo_trace(5) * &IntPoly::linear(2);
    let c0 = -(BigInt::one() + b * BigInt::from(2) + a * BigInt::from(4));
    Ok(&base + &IntPoly::new(vec![c0, b.clone(), a.clone()]))
}
