//! Certified irreducibility decisions for monic integer polynomials.
//!
//! The procedure never answers wrongly: it either proves irreducibility,
//! exhibits a factor, or reports that the configured effort was not enough.
//! Stages, cheapest first:
//!
//! 1. degree one;
//! 2. integer roots (located through real-root isolation), which settles
//!    degree at most three;
//! 3. a degree-pattern sieve over primes not dividing the discriminant: if
//!    no proper degree is a subset sum of the factor degrees modulo every
//!    sieve prime, the polynomial is irreducible;
//! 4. up to a degree cap, Hensel lifting of one modular factorization and
//!    exhaustive recombination of lifted factors within the factor
//!    coefficient bound.

mod hensel;
mod modp;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{is_separable, isolate_roots, IntPoly, Rational};
use hensel::{lift_exponent, lift_factors, mignotte_bound, recombine, Recombination};
use modp::{primes, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrConfig {
    /// Largest degree for which the exact recombination stage runs.
    pub degree_cap: usize,
    /// Number of usable primes in the sieve.
    pub sieve_primes: usize,
    /// Usable primes to skip before the sieve starts; lets a caller re-run
    /// with a disjoint prime set.
    pub skip_primes: usize,
    /// Run the exact stage even when the sieve already proved irreducibility.
    pub force_exact: bool,
    /// Budget for recombination subsets before giving up.
    pub max_subsets: u64,
}

impl Default for IrrConfig {
    fn default() -> Self {
        IrrConfig {
            degree_cap: 24,
            sieve_primes: 25,
            skip_primes: 0,
            force_exact: false,
            max_subsets: 1 << 22,
        }
    }
}

/// Why a polynomial is irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    Linear,
    /// Degree two or three with no integer root.
    NoRationalRoot,
    /// Factor-degree patterns modulo each prime; no proper degree is
    /// common to all their subset sums.
    DegreeSieve { patterns: Vec<(u64, Vec<usize>)> },
    /// No subset of the factors lifted modulo `prime^exponent` gives a
    /// true factor.
    Recombination { prime: u64, exponent: u32, modular_factors: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible(Evidence),
    /// `witness` is a monic proper factor.
    Reducible { witness: IntPoly },
    Unresolved { reason: String },
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible(_))
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Linear => write!(f, "degree one"),
            Evidence::NoRationalRoot => write!(f, "degree at most three without integer roots"),
            Evidence::DegreeSieve { patterns } => {
                write!(f, "degree sieve over primes")?;
                for (p, _) in patterns {
                    write!(f, " {p}")?;
                }
                Ok(())
            }
            Evidence::Recombination {
                prime,
                exponent,
                modular_factors,
            } => write!(
                f,
                "no recombination of {modular_factors} factors lifted mod {prime}^{exponent}"
            ),
        }
    }
}

impl Evidence {
    /// Re-checks the certificate against `p` from scratch.
    pub fn verify(&self, p: &IntPoly) -> bool {
        let Some(n) = p.degree() else {
            return false;
        };
        match self {
            Evidence::Linear => n == 1,
            Evidence::NoRationalRoot => (2..=3).contains(&n) && integer_root(p).is_none(),
            Evidence::DegreeSieve { patterns } => {
                let mut allowed = vec![true; n + 1];
                for (prime, claimed) in patterns {
                    let field = Field::new(*prime);
                    let fp = field.reduce(p);
                    if fp.len() != n + 1 || !field.is_square_free(&fp) {
                        return false;
                    }
                    let mut degs = field.factor_degrees(&fp);
                    degs.sort_unstable();
                    let mut claimed = claimed.clone();
                    claimed.sort_unstable();
                    if degs != claimed {
                        return false;
                    }
                    intersect(&mut allowed, &subset_sums(&degs, n));
                }
                !(1..n).any(|d| allowed[d])
            }
            Evidence::Recombination { .. } => {
                matches!(
                    is_irreducible_with(p, &IrrConfig { force_exact: true, ..IrrConfig::default() }),
                    Ok(IrreducibilityVerdict::Irreducible(_))
                )
            }
        }
    }
}

pub fn is_irreducible(p: &IntPoly) -> Result<IrreducibilityVerdict> {
    is_irreducible_with(p, &IrrConfig::default())
}

pub fn is_irreducible_with(p: &IntPoly, config: &IrrConfig) -> Result<IrreducibilityVerdict> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 0 {
        return Err(Error::Precondition("irreducibility needs degree at least one".into()));
    }
    if !is_separable(p) {
        return Err(Error::NotSquareFree);
    }
    if n == 1 {
        return Ok(IrreducibilityVerdict::Irreducible(Evidence::Linear));
    }
    if let Some(r) = integer_root(p) {
        return Ok(IrreducibilityVerdict::Reducible {
            witness: IntPoly::linear(r),
        });
    }
    if n <= 3 && !config.force_exact {
        return Ok(IrreducibilityVerdict::Irreducible(Evidence::NoRationalRoot));
    }

    let mut allowed = vec![true; n + 1];
    let mut patterns = Vec::new();
    for prime in primes()
        .filter(|&q| {
            let field = Field::new(q);
            let fp = field.reduce(p);
            field.is_square_free(&fp)
        })
        .skip(config.skip_primes)
        .take(config.sieve_primes)
    {
        let field = Field::new(prime);
        let degs = field.factor_degrees(&field.reduce(p));
        intersect(&mut allowed, &subset_sums(&degs, n));
        patterns.push((prime, degs));
    }
    let splittable = (1..n).any(|d| allowed[d]);
    if !splittable && !config.force_exact {
        return Ok(IrreducibilityVerdict::Irreducible(Evidence::DegreeSieve { patterns }));
    }
    if n > config.degree_cap {
        return Ok(IrreducibilityVerdict::Unresolved {
            reason: format!(
                "degree {n} exceeds the exact-stage cap {} and the sieve left degrees {:?} open",
                config.degree_cap,
                (1..n).filter(|&d| allowed[d]).collect::<Vec<_>>()
            ),
        });
    }

    // Lift modulo the odd sieve prime with the fewest factors.
    let (prime, _) = patterns
        .iter()
        .filter(|(q, _)| *q > 2)
        .min_by_key(|(q, degs)| (degs.len(), *q))
        .cloned()
        .ok_or_else(|| Error::Internal("no odd sieve prime available".into()))?;
    let field = Field::new(prime);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1e_0000 ^ prime);
    let factors = field.factor(&field.reduce(p), &mut rng);
    let exponent = lift_exponent(prime, &mignotte_bound(p));
    let lifted = lift_factors(&field, p, &factors, exponent);
    let modulus = num_traits::pow(BigInt::from(prime), exponent as usize);
    match recombine(p, &lifted, &modulus, |d| config.force_exact || allowed[d], config.max_subsets) {
        Recombination::Factor(witness) => Ok(IrreducibilityVerdict::Reducible { witness }),
        Recombination::Exhausted => Ok(IrreducibilityVerdict::Irreducible(Evidence::Recombination {
            prime,
            exponent,
            modular_factors: factors.len(),
        })),
        Recombination::Budget => Ok(IrreducibilityVerdict::Unresolved {
            reason: format!(
                "recombination of {} modular factors exceeded {} subsets",
                factors.len(),
                config.max_subsets
            ),
        }),
    }
}

/// An integer root (largest first), found by isolating the real roots and testing the
/// integers inside each isolating interval once it is narrower than one.
fn integer_root(p: &IntPoly) -> Option<BigInt> {
    if p.coeff(0).is_zero() {
        return Some(BigInt::zero());
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for iv in isolate_roots(p).into_iter().rev() {
        let iv = iv.refine(p, &half);
        let mut k = iv.lo.ceil().to_integer();
        let top = iv.hi.floor().to_integer();
        while k <= top {
            if p.eval_int(&k).is_zero() {
                return Some(k);
            }
            k += 1;
        }
    }
    None
}

/// `sums[d]` is true when some sub-multiset of `degs` sums to `d`.
fn subset_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut sums = vec![false; n + 1];
    sums[0] = true;
    for &d in degs {
        for s in (d..=n).rev() {
            if sums[s - d] {
                sums[s] = true;
            }
        }
    }
    sums
}

fn intersect(acc: &mut [bool], other: &[bool]) {
    for (a, b) in acc.iter_mut().zip(other) {
        *a &= *b;
    }
}
