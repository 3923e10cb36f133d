mod error;
mod input;
mod report;
mod reproduce;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use salem_core::forge::{
    coprime_residue_degrees, family_certificate, generate_coprime_residue_with, generate_with,
    recurrence_certificates, Family, GenerateOptions, GeneratorSpec, Provenance,
};
use salem_core::units::exceptional_unit_bound;
use salem_core::IrrConfig;

use error::CliError;
use report::{ProvenanceRecord, ReportRecord, Settings};

/// Exit status when `reproduce` finds a failing check.
const REPRODUCE_FAILED: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "salem", version, about = "Classify Salem polynomials and certify unit norms")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest exponent n in the unit spectrum.
    #[arg(long, default_value_t = 10, global = true)]
    max_n: u32,
    /// Decimal digits of alpha.
    #[arg(long, default_value_t = 6, global = true)]
    digits: usize,
    /// Largest degree for which irreducibility is decided exactly.
    #[arg(long, default_value_t = 24, global = true)]
    irr_cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify polynomials and report norms and unit spectra.
    Verify(InputArgs),
    /// Like verify, reporting only the unit spectrum.
    Spectrum(InputArgs),
    /// Generate certified Salem numbers from a construction.
    Generate(GenerateArgs),
    /// Run the reference regression checks.
    Reproduce,
    /// Bound on the number of exceptional units in a field of given degree.
    Bound { degree: u32 },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Polynomial list, one per line, ascending coefficients; `-` for stdin.
    file: Option<PathBuf>,
    /// A single polynomial, ascending coefficients.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "file")]
    coeffs: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    /// Shifted trace `C_n F D (x - a) - 1` for given n and t.
    Shifted,
    /// Shifted trace with cofactor `C_{4v+3}`, for n divisible by 4.
    CoprimeResidue,
    /// Degree-6 examples with alpha^5 - 1 a unit from recurrence pairs.
    Recurrence,
    /// One of the families F, G, H.
    Family,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    kind: Kind,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    t: Option<usize>,
    /// Explicit cofactor, ascending coefficients.
    #[arg(long, allow_hyphen_values = true)]
    cofactor: Option<String>,
    #[arg(long)]
    v: Option<u64>,
    /// First shift to try.
    #[arg(long, allow_hyphen_values = true)]
    a_start: Option<BigInt>,
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Family name: F, G or H.
    #[arg(long)]
    name: Option<Family>,
    /// Family parameter, a value or an inclusive range `lo..hi`.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
}

fn read_input(args: &InputArgs) -> Result<Vec<salem_core::IntPoly>, CliError> {
    if let Some(c) = &args.coeffs {
        return Ok(vec![input::parse_inline(c)?]);
    }
    let Some(path) = &args.file else {
        return Err(CliError::Usage("give a file or --coeffs".into()));
    };
    let mut text = String::new();
    let io = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
    } else {
        text = std::fs::read_to_string(path).map_err(io)?;
    }
    input::parse_list(&text)
}

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{kind} needs --{flag}")))
}

fn parse_range(text: &str) -> Result<(BigInt, BigInt), CliError> {
    let bad = || CliError::Usage(format!("--a expects an integer or lo..hi, got '{text}'"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: BigInt = lo.trim().parse().map_err(|_| bad())?;
    let hi: BigInt = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn generate(args: &GenerateArgs, settings: &Settings) -> Result<Vec<ReportRecord>, CliError> {
    let opts = GenerateOptions {
        irr: settings.irr.clone(),
        ..GenerateOptions::default()
    };
    let certs = match args.kind {
        Kind::Shifted => {
            let n = need(args.n, "n", "shifted")?;
            let t = need(args.t, "t", "shifted")?;
            let spec = match &args.cofactor {
                Some(c) => GeneratorSpec::new(n, t, input::parse_inline(c)?)?,
                None => GeneratorSpec::standard(n, t)?,
            };
            generate_with(&spec, args.count, args.a_start.as_ref(), &opts)?.certificates
        }
        Kind::CoprimeResidue => {
            let n = need(args.n, "n", "coprime-residue")?;
            let v = match args.v {
                Some(v) => v,
                None => coprime_residue_degrees(n, 1)?[0].0,
            };
            generate_coprime_residue_with(n, v, args.count, args.a_start.as_ref(), &opts)?.certificates
        }
        Kind::Recurrence => recurrence_certificates(args.count)?,
        Kind::Family => {
            let name = need(args.name, "name", "family")?;
            let (lo, hi) = parse_range(&need(args.a.clone(), "a", "family")?)?;
            let mut out = Vec::new();
            let mut a = lo;
            while a <= hi {
                match family_certificate(name, &a) {
                    Ok(c) => out.push(report::report_certificate(&c, settings)?),
                    Err(_) => {
                        let mut r = report::report_poly(&salem_core::forge::family(name, &a), settings)?;
                        let p = Provenance::Family { family: name, a: a.clone() };
                        r.provenance = ProvenanceRecord::from_provenance(&p, Some(&a));
                        out.push(r);
                    }
                }
                a += 1;
            }
            return Ok(out);
        }
    };
    certs.iter().map(|c| report::report_certificate(c, settings)).collect()
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = out.write_all(text.as_bytes());
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let c = &cli.common;
    let mut settings = Settings {
        max_n: c.max_n,
        digits: c.digits,
        irr: IrrConfig {
            degree_cap: c.irr_cap,
            ..IrrConfig::default()
        },
        spectrum_only: false,
    };
    let records = match &cli.command {
        Command::Verify(args) | Command::Spectrum(args) => {
            settings.spectrum_only = matches!(cli.command, Command::Spectrum(_));
            read_input(args)?
                .iter()
                .map(|p| report::report_poly(p, &settings))
                .collect::<Result<Vec<_>, _>>()?
        }
        Command::Generate(args) => generate(args, &settings)?,
        Command::Reproduce => {
            let rows = reproduce::run();
            match c.format {
                Format::Text => emit(&reproduce::render_text(&rows)),
                Format::Json => emit(&report::render_json(&rows)),
            }
            return Ok(if rows.iter().all(|r| r.pass) { 0 } else { REPRODUCE_FAILED });
        }
        Command::Bound { degree } => {
            let b = exceptional_unit_bound(*degree);
            match c.format {
                Format::Text => emit(&format!("{b}\n")),
                Format::Json => emit(&report::render_json(&serde_json::json!({
                    "degree": degree,
                    "bound": b.to_string(),
                }))),
            }
            return Ok(0);
        }
    };
    match c.format {
        Format::Text => emit(&report::render_text(&records)),
        Format::Json => emit(&report::render_json(&records)),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
