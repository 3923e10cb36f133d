//! Acceptance checks. Each test prints one `PASS`/`FAIL` line (visible
//! with `--nocapture`) and fails on any unmet condition.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use salem_core::forge::{
    chebyshev_coprime, coprime_residue_degrees, cyclo_coprime, cyclo_trace, family,
    family_certificate, family_trace, generate_coprime_residue, generate_salem_units,
    recurrence_pairs, recurrence_trace, standard_cofactor, Family, GeneratorSpec,
    SalemCertificate,
};
use salem_core::poly::{cauchy_bound, is_separable, resultant, sturm_count};
use salem_core::trace::{approx_root, compress_trace, expand_trace, TraceTag};
use salem_core::units::{
    coefficient_criterion, is_exceptional_power, norm_pow_minus, poly_norm_minus,
    trace_criterion,
};
use salem_core::{classify_salem, classify_trace, unit_spectrum, IntPoly, Rational};

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rat(v: i64) -> Rational {
    Rational::from_integer(int(v))
}

/// Collects failures; prints the verdict line and panics if any.
struct Check {
    label: &'static str,
    failures: Vec<String>,
}

impl Check {
    fn new(label: &'static str) -> Check {
        Check {
            label,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("PASS  {}", self.label);
        } else {
            println!("FAIL  {}: {}", self.label, self.failures.join("; "));
            panic!("{} failed: {:#?}", self.label, self.failures);
        }
    }
}

fn f64_coeffs(q: &IntPoly) -> Vec<f64> {
    q.coeffs().iter().map(|c| c.to_f64().unwrap()).collect()
}

/// All complex roots by Durand-Kerner, then polished by Newton steps.
fn complex_roots(q: &IntPoly) -> Vec<Complex64> {
    let c = f64_coeffs(q);
    let n = c.len() - 1;
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|v| v / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &v| acc * z + v);
    let deriv = |z: Complex64| {
        monic
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, &v)| acc * z + v * k as f64)
    };
    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * (radius / 2.0).max(1.0))
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm() / z[i].norm().max(1.0));
        }
        if delta < 1e-15 {
            break;
        }
    }
    for r in &mut z {
        for _ in 0..3 {
            let d = deriv(*r);
            if d.norm() > 0.0 {
                *r -= eval(*r) / d;
            }
        }
    }
    z
}

fn float_norm_minus(q: &IntPoly, n: u32) -> f64 {
    let prod = complex_roots(q)
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, r| acc * (r.powu(n) - 1.0));
    prod.re
}

/// Real roots of a square-free polynomial in `f64`: recursively locate the
/// critical points, then bisect between consecutive ones.
fn real_roots(c: &[f64]) -> Vec<f64> {
    let n = c.len() - 1;
    let eval = |x: f64| c.iter().rev().fold(0.0, |acc, v| acc * x + v);
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![-c[0] / c[1]];
    }
    let d: Vec<f64> = c.iter().enumerate().skip(1).map(|(k, v)| v * k as f64).collect();
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, v| m.max((v / c[n]).abs()));
    let mut pts = vec![-bound];
    pts.extend(real_roots(&d).into_iter().filter(|x| x.abs() < bound));
    pts.push(bound);
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut roots = Vec::new();
    for w in pts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (eval(lo), eval(hi));
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if eval(mid).signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    if eval(*pts.last().unwrap()) == 0.0 {
        roots.push(*pts.last().unwrap());
    }
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    roots
}

/// Conditions on a degree-`2t` reciprocal polynomial for three exponents,
/// cross-checked three ways where defined. Returns mismatches.
fn equivalence_mismatches(s: &IntPoly) -> Vec<String> {
    let mut out = Vec::new();
    let t = compress_trace(s).unwrap();
    let salem = classify_salem(s).ok();
    for n in 1..=4u32 {
        let coeff = coefficient_criterion(s, n).unwrap();
        let value = trace_criterion(&t, n).unwrap();
        if coeff != value {
            out.push(format!("{s}: n={n} coefficient {coeff} vs trace {value}"));
        }
        if let Some(sp) = &salem {
            let norm = is_exceptional_power(sp, n);
            if norm != value {
                out.push(format!("{s}: n={n} norm {norm} vs trace {value}"));
            }
        }
    }
    if let Some(sp) = &salem {
        let value = trace_criterion(&t, 6).unwrap();
        let norm = is_exceptional_power(sp, 6);
        if norm != value {
            out.push(format!("{s}: n=6 norm {norm} vs trace {value}"));
        }
    }
    out
}

fn family_sweep() -> &'static Vec<SalemCertificate> {
    static CELL: OnceLock<Vec<SalemCertificate>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for a in 0..=20 {
            out.extend(family_certificate(Family::F, &int(a)));
        }
        for a in 3..=20 {
            out.extend(family_certificate(Family::G, &int(a)));
        }
        for a in 3..=40 {
            out.extend(family_certificate(Family::H, &int(a)));
        }
        out
    })
}

const GENERATOR_CASES: [(u32, usize); 8] = [(1, 2), (3, 3), (5, 4), (7, 5), (2, 3), (6, 5), (4, 5), (8, 7)];

fn generated() -> &'static Vec<(u32, usize, Vec<SalemCertificate>)> {
    static CELL: OnceLock<Vec<(u32, usize, Vec<SalemCertificate>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out: Vec<_> = GENERATOR_CASES
            .iter()
            .map(|&(n, t)| {
                let spec = GeneratorSpec::standard(n, t).unwrap();
                (n, t, generate_salem_units(&spec, 5, None).unwrap())
            })
            .collect();
        let spec = GeneratorSpec::standard(20, 13).unwrap();
        out.push((20, 13, generate_salem_units(&spec, 2, None).unwrap()));
        out
    })
}

fn coprime_residue() -> &'static Vec<SalemCertificate> {
    static CELL: OnceLock<Vec<SalemCertificate>> = OnceLock::new();
    CELL.get_or_init(|| generate_coprime_residue(12, 1, 1, None).unwrap())
}

#[test]
fn criterion_01_smallest_sextic() {
    let mut c = Check::new("1 sextic with alpha^4 - 1 a unit");
    let f0 = family(Family::F, &int(0));
    let s = classify_salem(&f0).expect("F_0 is Salem");
    let alpha = approx_root(s.poly(), s.alpha_interval(), 6).unwrap();
    c.expect(alpha.starts_with("1.401"), || format!("alpha = {alpha}"));
    for n in [1, 2, 4] {
        let v = norm_pow_minus(&s, n);
        c.expect(v == int(-1), || format!("norm at n={n} is {v}"));
    }
    let v3 = norm_pow_minus(&s, 3);
    c.expect(v3 != int(-1), || format!("norm at n=3 is {v3}"));
    let t = compress_trace(&f0).unwrap();
    for n in 1..=4 {
        let (a, b) = (coefficient_criterion(&f0, n).unwrap(), trace_criterion(&t, n).unwrap());
        c.expect(a == b, || format!("criteria disagree at n={n}: {a} vs {b}"));
    }
    c.finish();
}

#[test]
fn criterion_02_quartic() {
    let mut c = Check::new("2 quartic with alpha^3 - 1 a unit (alpha digits in separate check)");
    let q = p(&[1, -1, -1, -1, 1]);
    match classify_salem(&q) {
        Ok(s) => {
            let alpha = s.alpha_decimal(6);
            if !alpha.starts_with("1.422") {
                // stays red: the published digits do not match the root
                println!("FAIL  2 alpha prefix 1.422: computed {alpha}");
            }
            c.expect(is_exceptional_power(&s, 3), || "alpha^3 - 1 not a unit".into());
            c.expect(s.half_degree() == 2, || "t != 2".into());
        }
        Err(e) => c.expect(false, || format!("not Salem: {e}")),
    }
    // Brute force over x^2 + a x + b with the Salem layout checked by the
    // quadratic formula.
    let mut hits = Vec::new();
    for a in -12i64..=12 {
        for b in -12i64..=12 {
            let disc = (a * a - 4 * b) as f64;
            if disc <= 0.0 {
                continue;
            }
            let (r1, r2) = ((-a as f64 + disc.sqrt()) / 2.0, (-a as f64 - disc.sqrt()) / 2.0);
            let rational = is_positive_square(a * a - 4 * b);
            let layout = r1 > 2.0 && r2 > -2.0 && r2 < 2.0 && !rational;
            if layout && 1 - a + b == -1 && 4 + 2 * a + b == -1 {
                hits.push((a, b));
            }
        }
    }
    c.expect(hits == vec![(-1, -3)], || format!("scan found {hits:?}"));
    c.finish();
}

fn is_positive_square(v: i64) -> bool {
    v > 0 && {
        let r = (v as f64).sqrt().round() as i64;
        r * r == v
    }
}

/// The printed decimal for the quartic's Salem number is `1.422...`; the
/// actual root is `1.72208...`, so this check cannot pass.
#[test]
#[ignore = "printed digits 1.422 disagree with the true root 1.72208"]
fn criterion_02_printed_alpha_prefix() {
    let mut c = Check::new("2 quartic alpha prefix 1.422");
    let s = classify_salem(&p(&[1, -1, -1, -1, 1])).unwrap();
    let alpha = s.alpha_decimal(6);
    c.expect(alpha.starts_with("1.422"), || format!("alpha = {alpha}"));
    c.finish();
}

#[test]
fn criterion_02_alpha_value() {
    let mut c = Check::new("2 quartic alpha value against the float root");
    let s = classify_salem(&p(&[1, -1, -1, -1, 1])).unwrap();
    let alpha: f64 = s.alpha_decimal(6).parse().unwrap();
    let largest = real_roots(&[1.0, -1.0, -1.0, -1.0, 1.0]).into_iter().fold(f64::MIN, f64::max);
    c.expect((alpha - largest).abs() < 1e-6, || format!("{alpha} vs {largest}"));
    c.finish();
}

#[test]
fn criterion_03_family_sweeps() {
    let mut c = Check::new("3 family sweeps");
    for a in 0..=20 {
        match classify_salem(&family(Family::F, &int(a))) {
            Ok(s) => c.expect(is_exceptional_power(&s, 2), || format!("F_{a}: alpha^2 - 1 not a unit")),
            Err(e) => c.expect(false, || format!("F_{a}: {e}")),
        }
    }
    for a in 3..=20 {
        match classify_salem(&family(Family::G, &int(a))) {
            Ok(s) => c.expect(is_exceptional_power(&s, 3), || format!("G_{a}: alpha^3 - 1 not a unit")),
            Err(e) => c.expect(false, || format!("G_{a}: {e}")),
        }
    }
    // x^5 h_a(x + 1/x) against H_a at 12 rational points; both sides have
    // degree 10, so agreement at 11 points is equality.
    for a in [3i64, 5, 10, 100] {
        let h = family_trace(Family::H, &int(a));
        let big_h = family(Family::H, &int(a));
        for k in 1..=12i64 {
            let x = Rational::new(int(k), int(k + 3));
            let lhs = num_traits::pow(x.clone(), 5) * h.eval(&(&x + x.recip()));
            c.expect(lhs == big_h.eval(&x), || format!("H_{a} differs at {x}"));
        }
    }
    let want: BTreeSet<u32> = [1, 2, 3, 4].into();
    let mut good = 0;
    for a in 3..=40 {
        if let Ok(s) = classify_salem(&family(Family::H, &int(a))) {
            if unit_spectrum(&s, 4).members.is_superset(&want) {
                good += 1;
            }
        }
    }
    c.expect(good >= 15, || format!("only {good} H_a with spectrum containing 1..4"));
    c.finish();
}

#[test]
fn criterion_04_recurrence() {
    let mut c = Check::new("4 recurrence pairs and degree-6 units at n = 5");
    let pairs = recurrence_pairs(10).unwrap();
    let head: Vec<(BigInt, BigInt)> = pairs.iter().take(3).map(|q| (q.a.clone(), q.b.clone())).collect();
    c.expect(
        head == vec![(int(0), int(0)), (int(-1), int(2)), (int(-6), int(15))],
        || format!("head {head:?}"),
    );
    for q in &pairs {
        let (a, b) = (&q.a, &q.b);
        let form = a * a + b * b + a + b + int(3) * a * b;
        c.expect(form.is_zero(), || format!("({a}, {b}) off the conic"));
    }
    for w in pairs[1..].windows(2) {
        c.expect(w[1].a < w[0].a && w[1].b > w[0].b, || format!("not monotone at {}", w[1].index));
    }
    let base = &p(&[-1, 1, 1]) * &p(&[-2, 1]);
    for q in &pairs {
        let tr = recurrence_trace(q).unwrap();
        let v = classify_trace(&tr).unwrap();
        c.expect(v.tag == TraceTag::SalemTrace, || format!("pair {}: {v}", q.index));
        // product of the trace over the roots of (x^2 + x - 1)(x - 2)
        let r = resultant(&base, &tr);
        c.expect(r == int(-1), || format!("pair {}: resultant {r}", q.index));
        let s = expand_trace(&tr).unwrap();
        let n5 = poly_norm_minus(&s, 5);
        c.expect(n5 == int(-1), || format!("pair {}: norm at 5 is {n5}", q.index));
    }
    c.finish();
}

fn full_revalidation(c: &mut Check, n: u32, t: usize, cert: &SalemCertificate) {
    let tr = &cert.trace;
    let v = classify_trace(tr).unwrap();
    c.expect(v.tag == TraceTag::SalemTrace, || format!("({n},{t}): {v}"));
    let bound = Rational::from_integer(cauchy_bound(tr).max(int(3)));
    let inside = sturm_count(tr, &rat(-2), &rat(2)).unwrap();
    let above = sturm_count(tr, &rat(2), &bound).unwrap();
    c.expect(inside == t - 1 && above == 1, || format!("({n},{t}): layout {inside}/{above}"));
    let s = expand_trace(tr).unwrap();
    c.expect(&s == cert.salem.poly(), || format!("({n},{t}): expansion mismatch"));
    let norm = poly_norm_minus(&s, n);
    c.expect(norm == int(-1), || format!("({n},{t}): norm {norm}"));
    c.expect(n % 2 == 1 || t % 2 == 1, || format!("({n},{t}): even t for even n"));
    c.expect(cert.revalidate(), || format!("({n},{t}): certificate does not revalidate"));
}

#[test]
fn criterion_05_shifted_generator() {
    let mut c = Check::new("5 shifted-trace generator");
    for (n, t, certs) in generated() {
        let want = if *n == 20 { 2 } else { 5 };
        c.expect(certs.len() == want, || format!("({n},{t}): {} certificates", certs.len()));
        for cert in certs {
            full_revalidation(&mut c, *n, *t, cert);
        }
    }
    c.expect(standard_cofactor(20, 13).unwrap() == p(&[-1, 1]), || "cofactor for (20, 13)".into());
    c.expect(standard_cofactor(8, 7).unwrap() == cyclo_trace(3), || "cofactor for (8, 7)".into());
    c.finish();
}

#[test]
fn criterion_06_coprime_residue_degrees() {
    let mut c = Check::new("6 coprime residue degrees for n = 12");
    let degs = coprime_residue_degrees(12, 3).unwrap();
    c.expect(degs == vec![(1, 11), (2, 13), (4, 17)], || format!("{degs:?}"));
    for (v, t) in &degs {
        let v = *v as usize;
        c.expect(2 * t == 4 * v + 12 + 6 && 2 * t == 18 + 4 * v, || format!("degree of v={v}"));
    }
    let certs = coprime_residue();
    c.expect(certs.len() == 1, || "no certificate at (12, 11)".into());
    for cert in certs {
        full_revalidation(&mut c, 12, 11, cert);
    }
    c.finish();
}

#[test]
fn criterion_07_coprimality() {
    let mut c = Check::new("7 coprimality laws");
    for n in 1..=24u32 {
        for m in 1..=24u32 {
            let g = n.gcd(&m);
            c.expect(cyclo_coprime(n, m) == (g == 1 || g == 2), || format!("C_{n}, C_{m}"));
        }
        if n % 4 != 0 {
            for k in 1..=10 {
                c.expect(chebyshev_coprime(k, n), || format!("t_{k}, C_{n}"));
            }
        }
    }
    c.expect(!chebyshev_coprime(1, 4), || "t_1 and C_4 reported coprime".into());
    c.finish();
}

fn random_reciprocal(rng: &mut ChaCha8Rng) -> IntPoly {
    let t = rng.gen_range(2..=6);
    let mut coeffs = vec![0i64; 2 * t + 1];
    coeffs[0] = 1;
    coeffs[2 * t] = 1;
    for k in 1..=t {
        let v = rng.gen_range(-6..=6);
        coeffs[k] = v;
        coeffs[2 * t - k] = v;
    }
    p(&coeffs)
}

#[test]
fn criterion_08_three_way_equivalence() {
    let mut c = Check::new("8 coefficient, value and norm criteria agree");
    let mut polys: Vec<IntPoly> = family_sweep().iter().map(|x| x.salem.poly().clone()).collect();
    for (_, _, certs) in generated() {
        polys.extend(certs.iter().map(|x| x.salem.poly().clone()));
    }
    polys.extend(coprime_residue().iter().map(|x| x.salem.poly().clone()));
    for q in recurrence_pairs(10).unwrap() {
        polys.push(expand_trace(&recurrence_trace(&q).unwrap()).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1e);
    let mut salem_random = 0;
    for _ in 0..200 {
        let s = random_reciprocal(&mut rng);
        if classify_salem(&s).is_ok() {
            salem_random += 1;
        }
        polys.push(s);
    }
    for s in &polys {
        for m in equivalence_mismatches(s) {
            c.expect(false, || m);
        }
    }
    println!("      {} polynomials, {} random ones Salem", polys.len(), salem_random);
    c.finish();
}

#[test]
fn criterion_09_float_norms() {
    let mut c = Check::new("9 exact norms against floating root products");
    let mut pool: Vec<IntPoly> = family_sweep().iter().map(|x| x.salem.poly().clone()).collect();
    pool.truncate(40);
    for (_, _, certs) in generated().iter().take(5) {
        pool.extend(certs.iter().take(2).map(|x| x.salem.poly().clone()));
    }
    pool.truncate(50);
    c.expect(pool.len() == 50, || format!("only {} polynomials", pool.len()));
    for s in &pool {
        for n in 1..=6 {
            let exact = poly_norm_minus(s, n).to_f64().unwrap();
            let approx = float_norm_minus(s, n);
            let rel = (exact - approx).abs() / exact.abs();
            c.expect(rel < 1e-6, || format!("{s} n={n}: {exact} vs {approx}"));
        }
    }
    c.finish();
}

#[test]
fn criterion_10_sturm_against_float_roots() {
    let mut c = Check::new("10 Sturm counts against a floating root finder");
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut polys = 0;
    let mut compared = 0;
    while polys < 200 {
        let deg = rng.gen_range(1..=8);
        let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
        if coeffs[deg] == 0 {
            coeffs[deg] = 1;
        }
        let q = p(&coeffs);
        if !is_separable(&q) {
            continue;
        }
        polys += 1;
        let roots = real_roots(&f64_coeffs(&q));
        for _ in 0..5 {
            let lo = Rational::new(int(rng.gen_range(-400..400)), int(rng.gen_range(1..40)));
            let hi = &lo + Rational::new(int(rng.gen_range(1..400)), int(rng.gen_range(1..40)));
            let (lf, hf) = (lo.to_f64().unwrap(), hi.to_f64().unwrap());
            if roots.iter().any(|r| (r - lf).abs() < 1e-9 || (r - hf).abs() < 1e-9) {
                continue;
            }
            if q.sign_at(&lo).is_eq() || q.sign_at(&hi).is_eq() {
                continue;
            }
            let expect = roots.iter().filter(|&&r| r > lf && r < hf).count();
            let got = sturm_count(&q, &lo, &hi).unwrap();
            compared += 1;
            c.expect(got == expect, || format!("{q} on ({lo}, {hi}): {got} vs {expect}"));
        }
    }
    c.expect(compared > 900, || format!("only {compared} intervals compared"));
    c.finish();
}

#[test]
fn float_helpers_sanity() {
    // sanity for the helpers above
    let r = real_roots(&[-2.0, 0.0, 1.0]);
    assert_eq!(r.len(), 2);
    let z = complex_roots(&p(&[1, 0, 1]));
    assert!(z.iter().all(|w| (w.norm() - 1.0).abs() < 1e-12));
    assert!(BigInt::one() > BigInt::zero());
}
