//! Regression table over the reference examples and constructions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use salem_core::forge::{
    chebyshev_coprime, coprime_residue_degrees, cyclo_coprime, family, family_certificate,
    family_trace, generate_coprime_residue, generate_salem_units, recurrence_certificates,
    recurrence_pairs, Family, GeneratorSpec,
};
use salem_core::trace::compress_trace;
use salem_core::units::trace_criterion;
use salem_core::{classify_salem, classify_trace, unit_spectrum, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub check: String,
    pub pass: bool,
    pub expected: String,
    pub observed: String,
}

fn row(check: &str, pass: bool, expected: impl Into<String>, observed: impl Into<String>) -> CheckRow {
    CheckRow {
        check: check.into(),
        pass,
        expected: expected.into(),
        observed: observed.into(),
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn fmt_set(s: &BTreeSet<u32>) -> String {
    let v: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn sextic() -> Vec<CheckRow> {
    let f0 = family(Family::F, &int(0));
    match classify_salem(&f0) {
        Ok(s) => {
            let alpha = s.alpha_decimal(5);
            let spec = unit_spectrum(&s, 6).members;
            let want: BTreeSet<u32> = [1, 2, 4].into();
            vec![
                row("sextic F_0 alpha", alpha.starts_with("1.401"), "1.401...", alpha),
                row("sextic F_0 spectrum to 6", spec == want, "{1, 2, 4}", fmt_set(&spec)),
            ]
        }
        Err(e) => vec![row("sextic F_0 is Salem", false, "Salem", e.to_string())],
    }
}

fn quartic() -> Vec<CheckRow> {
    let q = IntPoly::from_i64(&[1, -1, -1, -1, 1]);
    let mut rows = Vec::new();
    match classify_salem(&q) {
        Ok(s) => {
            let alpha = s.alpha_decimal(5);
            rows.push(row("quartic alpha", alpha.starts_with("1.422"), "1.422...", alpha));
            let spec = unit_spectrum(&s, 3).members;
            rows.push(row("quartic n=3 unit", spec.contains(&3), "3 in spectrum", fmt_set(&spec)));
        }
        Err(e) => rows.push(row("quartic is Salem", false, "Salem", e.to_string())),
    }
    let mut hits = Vec::new();
    for a in -12i64..=12 {
        for b in -12i64..=12 {
            let tr = IntPoly::from_i64(&[b, a, 1]);
            let salem = classify_trace(&tr).is_ok_and(|v| v.is_salem_trace());
            if salem && trace_criterion(&tr, 3).unwrap_or(false) {
                hits.push(format!("x^2 {a:+}x {b:+}"));
            }
        }
    }
    rows.push(row(
        "quartic trace unique for n=3",
        hits == ["x^2 -1x -3"],
        "x^2 -1x -3",
        hits.join(", "),
    ));
    rows
}

/// Salem and every family exponent certified.
fn family_ok(name: Family, a: i64) -> bool {
    family_certificate(name, &int(a)).is_ok_and(|c| c.certificates.iter().all(|u| u.is_unit_minus))
}

fn families() -> Vec<CheckRow> {
    let mut rows = Vec::new();
    let bad_f: Vec<i64> = (0..=20)
        .filter(|&a| !family_ok(Family::F, a))
        .collect();
    rows.push(row("family F, a in 0..=20, n=2", bad_f.is_empty(), "all certified", format!("failures {bad_f:?}")));
    let bad_g: Vec<i64> = (3..=20)
        .filter(|&a| !family_ok(Family::G, a))
        .collect();
    rows.push(row("family G, a in 3..=20, n=3", bad_g.is_empty(), "all certified", format!("failures {bad_g:?}")));
    let bad_h: Vec<i64> = [3, 5, 10, 100]
        .into_iter()
        .filter(|&a| compress_trace(&family(Family::H, &int(a))).ok() != Some(family_trace(Family::H, &int(a))))
        .collect();
    rows.push(row("family H trace form", bad_h.is_empty(), "exact", format!("failures {bad_h:?}")));
    let good = (3..=40)
        .filter(|&a| family_ok(Family::H, a))
        .count();
    rows.push(row("family H, a in 3..=40, n=1..4", good >= 15, ">= 15", good.to_string()));
    rows
}

fn recurrence() -> Vec<CheckRow> {
    let head_ok = recurrence_pairs(3).is_ok_and(|ps| {
        let got: Vec<(BigInt, BigInt)> = ps.into_iter().map(|p| (p.a, p.b)).collect();
        got == [(int(0), int(0)), (int(-1), int(2)), (int(-6), int(15))]
    });
    let certs = recurrence_certificates(10);
    let observed = match &certs {
        Ok(c) => format!("{} certified, head ok: {head_ok}", c.len()),
        Err(e) => e.to_string(),
    };
    let pass = head_ok && certs.is_ok_and(|c| c.len() == 10 && c.iter().all(|x| x.revalidate()));
    vec![row("recurrence first 10 pairs, n=5", pass, "10 certified", observed)]
}

fn shifted() -> Vec<CheckRow> {
    let cases: [(u32, usize, usize); 9] = [
        (1, 2, 5),
        (3, 3, 5),
        (5, 4, 5),
        (7, 5, 5),
        (2, 3, 5),
        (6, 5, 5),
        (4, 5, 5),
        (8, 7, 5),
        (20, 13, 2),
    ];
    cases
        .iter()
        .map(|&(n, t, count)| {
            let label = format!("shifted n={n} t={t}");
            let result = GeneratorSpec::standard(n, t).and_then(|s| generate_salem_units(&s, count, None));
            match result {
                Ok(certs) => {
                    let ok = certs.len() == count && certs.iter().all(|c| c.revalidate());
                    let shifts: Vec<String> = certs.iter().filter_map(|c| c.shift.as_ref().map(|a| a.to_string())).collect();
                    row(&label, ok, format!("{count} certified"), format!("a = {}", shifts.join(", ")))
                }
                Err(e) => row(&label, false, format!("{count} certified"), e.to_string()),
            }
        })
        .collect()
}

fn coprime_residue() -> Vec<CheckRow> {
    let degs = coprime_residue_degrees(12, 3).unwrap_or_default();
    let want = vec![(1u64, 11usize), (2, 13), (4, 17)];
    let degrees: Vec<String> = degs.iter().map(|(_, t)| (2 * t).to_string()).collect();
    let mut rows = vec![row(
        "coprime residue n=12 degrees",
        degs == want,
        "22, 26, 34",
        degrees.join(", "),
    )];
    let cert = generate_coprime_residue(12, 1, 1, None);
    let observed = match &cert {
        Ok(c) => format!("{} certified", c.len()),
        Err(e) => e.to_string(),
    };
    let pass = cert.is_ok_and(|c| c.len() == 1 && c[0].revalidate());
    rows.push(row("coprime residue n=12 t=11", pass, "1 certified", observed));
    rows
}

fn coprimality() -> Vec<CheckRow> {
    let mut bad = 0;
    for n in 1..=24u32 {
        for m in 1..=24u32 {
            let g = n.gcd(&m);
            if cyclo_coprime(n, m) != (g == 1 || g == 2) {
                bad += 1;
            }
        }
        if n % 4 != 0 {
            bad += (1..=10).filter(|&k| !chebyshev_coprime(k, n)).count();
        }
    }
    let counter = !chebyshev_coprime(1, 4);
    vec![row(
        "coprimality laws to 24",
        bad == 0 && counter,
        "no violations",
        format!("{bad} violations, (1, 4) rejected: {counter}"),
    )]
}

pub fn run() -> Vec<CheckRow> {
    let mut rows = sextic();
    rows.extend(quartic());
    rows.extend(families());
    rows.extend(recurrence());
    rows.extend(shifted());
    rows.extend(coprime_residue());
    rows.extend(coprimality());
    rows
}

pub fn render_text(rows: &[CheckRow]) -> String {
    let width = rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        let status = if r.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {:<width$}  {}", r.check, r.observed));
        if !r.pass {
            out.push_str(&format!("  (expected {})", r.expected));
        }
        out.push('\n');
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    out.push_str(&format!("{} checks, {} failed\n", rows.len(), failed));
    out
}
