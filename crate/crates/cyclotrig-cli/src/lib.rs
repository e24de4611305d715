//! `cyclotrig` — classify sin/cos/tan at rational multiples of pi, exactly.
//!
//! Exit codes: 0 on success (poles are results, not errors), 1 when `verify`
//! finds a failing check, 2 on usage or parse errors.

pub mod angle_expr;
pub mod record;
pub mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_integer::Integer;

use cyclotrig::cyclotomic::{cyclotomic_poly, inverse_totient, totient};
use cyclotrig::error::Error;
use cyclotrig::numeric::{approx_f64, eval_numeric};
use cyclotrig::trig::{
    classify, cos_rationality_witness, minimal_polynomial, tan_rationality_witness, trig_element,
    Classification, TrigFunc, TrigQuery,
};
use cyclotrig::verify::run_all;
use cyclotrig::{normalize_angle, NormalizedAngle};

use record::ReportRecord;
use render::{format_significant, poly_text};

const APPROX_DIGITS: u32 = 12;

#[derive(Debug, Parser)]
#[command(
    name = "cyclotrig",
    version,
    about = "Exact classification of sin/cos/tan at rational multiples of pi",
    long_about = "Classifies trigonometric values at rational multiples of pi as rational, \
                  quadratic irrational, or higher-degree algebraic, with exact values, \
                  canonical surds, and integer minimal polynomials computed in cyclotomic fields."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FuncArg {
    Sin,
    Cos,
    Tan,
}

impl From<FuncArg> for TrigFunc {
    fn from(arg: FuncArg) -> TrigFunc {
        match arg {
            FuncArg::Sin => TrigFunc::Sin,
            FuncArg::Cos => TrigFunc::Cos,
            FuncArg::Tan => TrigFunc::Tan,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum WitnessArg {
    Cos,
    Tan,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a trig value: rational, quadratic surd, algebraic, or pole
    Classify {
        func: FuncArg,
        /// Angle as a multiple of pi: a/b, a*pi/b, pi/b, or 0
        #[arg(allow_hyphen_values = true)]
        angle: String,
        #[arg(long)]
        json: bool,
    },
    /// Integer minimal polynomial of a trig value
    Minpoly {
        func: FuncArg,
        #[arg(allow_hyphen_values = true)]
        angle: String,
        #[arg(long)]
        json: bool,
    },
    /// The n-th cyclotomic polynomial
    Cyclotomic {
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Euler's totient of n
    Totient {
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// All n with totient(n) = k
    InverseTotient {
        k: u64,
        #[arg(long)]
        json: bool,
    },
    /// Classify every reduced angle a*pi/b with b up to a bound
    Table {
        func: FuncArg,
        #[arg(long = "max-b")]
        max_b: u64,
        /// Keep only classifications of at most this degree
        #[arg(long = "degree-at-most")]
        degree_at_most: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Root-of-unity witness for a rational cosine or tangent value
    Witness {
        func: WitnessArg,
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the exact invariant suites
    Verify {
        #[arg(long = "max-b", default_value_t = 24)]
        max_b: u64,
        /// Precision in bits for the numeric cross-checks
        #[arg(long, default_value_t = 128)]
        precision: usize,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

/// Writes one output line; returns false when the consumer hung up
/// (broken pipe), so streaming commands can stop quietly.
fn emit(line: std::fmt::Arguments<'_>) -> bool {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_fmt(line).and_then(|()| out.write_all(b"\n")) {
        Ok(()) => true,
        Err(error) if error.kind() == std::io::ErrorKind::BrokenPipe => false,
        Err(error) => {
            eprintln!("error: {error}");
            false
        }
    }
}

fn parse_angle_arg(text: &str) -> Result<NormalizedAngle, String> {
    let (a, b) = angle_expr::parse_angle(text)?;
    normalize_angle(a, b).map_err(|e| e.to_string())
}

fn element_approx(func: TrigFunc, angle: &NormalizedAngle) -> Option<f64> {
    match trig_element(func, angle) {
        Ok(element) => Some(approx_f64(&eval_numeric(&element, 64))),
        Err(_) => None,
    }
}

fn classification_text(
    classification: &Classification,
    approx: Option<f64>,
) -> String {
    let approx_suffix = |text: String| match approx {
        Some(v) => format!("{text} ≈ {}", format_significant(v, APPROX_DIGITS)),
        None => text,
    };
    match classification {
        Classification::Rational(value) => approx_suffix(format!("rational: {value}")),
        Classification::Quadratic(surd) => approx_suffix(format!("quadratic: {surd}")),
        Classification::Algebraic { degree, minpoly } => approx_suffix(format!(
            "algebraic: degree {degree}, minpoly {}",
            poly_text(minpoly)
        )),
        Classification::Pole => "pole".to_string(),
    }
}

fn cmd_classify(func: TrigFunc, angle_text: &str, json: bool) -> ExitCode {
    let angle = match parse_angle_arg(angle_text) {
        Ok(angle) => angle,
        Err(message) => return usage_error(&message),
    };
    let classification = classify(&TrigQuery::new(func, angle.clone()));
    if json {
        let record = ReportRecord::default()
            .with_angle(func, &angle)
            .with_classification(&classification);
        println!("{}", record.to_json());
    } else {
        println!(
            "{}",
            classification_text(&classification, element_approx(func, &angle))
        );
    }
    ExitCode::SUCCESS
}

fn cmd_minpoly(func: TrigFunc, angle_text: &str, json: bool) -> ExitCode {
    let angle = match parse_angle_arg(angle_text) {
        Ok(angle) => angle,
        Err(message) => return usage_error(&message),
    };
    match trig_element(func, &angle) {
        Err(Error::Pole) => {
            if json {
                let record = ReportRecord {
                    kind: Some("pole".into()),
                    ..ReportRecord::default()
                }
                .with_angle(func, &angle);
                println!("{}", record.to_json());
            } else {
                println!("pole");
            }
            ExitCode::SUCCESS
        }
        Err(other) => usage_error(&other.to_string()),
        Ok(element) => {
            let minpoly = minimal_polynomial(&element);
            if json {
                let record = ReportRecord {
                    minpoly: Some(minpoly.coeffs().iter().map(record::bigint_number).collect()),
                    degree: minpoly.degree().map(|d| d as u64),
                    ..ReportRecord::default()
                }
                .with_angle(func, &angle);
                println!("{}", record.to_json());
            } else {
                println!("{}", poly_text(&minpoly));
            }
            ExitCode::SUCCESS
        }
    }
}

fn cmd_cyclotomic(n: u64, json: bool) -> ExitCode {
    match cyclotomic_poly(n) {
        Err(error) => usage_error(&error.to_string()),
        Ok(poly) => {
            if json {
                let record = ReportRecord {
                    n: Some(n),
                    minpoly: Some(poly.coeffs().iter().map(record::bigint_number).collect()),
                    degree: poly.degree().map(|d| d as u64),
                    ..ReportRecord::default()
                };
                println!("{}", record.to_json());
            } else {
                println!("{}", poly_text(&poly));
            }
            ExitCode::SUCCESS
        }
    }
}

fn cmd_totient(n: u64, json: bool) -> ExitCode {
    match totient(n) {
        Err(error) => usage_error(&error.to_string()),
        Ok(phi) => {
            if json {
                let record = ReportRecord {
                    n: Some(n),
                    value: Some(phi.to_string()),
                    ..ReportRecord::default()
                };
                println!("{}", record.to_json());
            } else {
                println!("{phi}");
            }
            ExitCode::SUCCESS
        }
    }
}

fn cmd_inverse_totient(k: u64, json: bool) -> ExitCode {
    match inverse_totient(k) {
        Err(error) => usage_error(&error.to_string()),
        Ok(preimages) => {
            if json {
                let record = ReportRecord {
                    n: Some(k),
                    preimages: Some(preimages),
                    ..ReportRecord::default()
                };
                println!("{}", record.to_json());
            } else {
                println!(
                    "{}",
                    preimages
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            ExitCode::SUCCESS
        }
    }
}

fn cmd_table(func: TrigFunc, max_b: u64, degree_at_most: Option<u64>, json: bool) -> ExitCode {
    if max_b == 0 {
        return usage_error("--max-b must be at least 1");
    }
    if degree_at_most == Some(0) {
        return usage_error("--degree-at-most must be at least 1");
    }
    for b in 1..=max_b {
        for a in (0..2 * b).filter(|a| a.gcd(&b) == 1) {
            let angle = normalize_angle(a as i64, b as i64).expect("b > 0");
            let classification = classify(&TrigQuery::new(func, angle.clone()));
            if let Some(bound) = degree_at_most {
                match classification.degree() {
                    Some(degree) if degree <= bound => {}
                    _ => continue,
                }
            }
            let delivered = if json {
                let record = ReportRecord::default()
                    .with_angle(func, &angle)
                    .with_classification(&classification);
                emit(format_args!("{}", record.to_json()))
            } else {
                emit(format_args!(
                    "{func}({a}*pi/{b}): {}",
                    classification_text(&classification, element_approx(func, &angle))
                ))
            };
            if !delivered {
                return ExitCode::SUCCESS;
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_witness(func: WitnessArg, value_text: &str, json: bool) -> ExitCode {
    let value = match angle_expr::parse_fraction(value_text) {
        Ok(value) => value,
        Err(message) => return usage_error(&message),
    };
    let (func_name, label, witness) = match func {
        WitnessArg::Cos => match cos_rationality_witness(&value) {
            Err(error) => return usage_error(&error.to_string()),
            Ok(w) => ("cos", "d", w),
        },
        WitnessArg::Tan => ("tan", "b", tan_rationality_witness(&value)),
    };
    if json {
        let record = ReportRecord {
            func: Some(func_name.into()),
            witness,
            ..ReportRecord::default()
        }
        .with_value(&value);
        println!("{}", record.to_json());
    } else {
        match witness {
            Some(d) => println!("{label} = {d}"),
            None => println!("none"),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_verify(max_b: u64, precision: usize) -> ExitCode {
    let report = match run_all(max_b, precision) {
        Err(error) => return usage_error(&error.to_string()),
        Ok(report) => report,
    };
    for suite in &report.suites {
        if suite.all_passed() {
            println!("suite {}: pass ({} checks)", suite.name, suite.passed);
        } else {
            println!(
                "suite {}: FAIL ({} of {} checks failed); first counterexample: {}",
                suite.name,
                suite.failed,
                suite.passed + suite.failed,
                suite.first_failure.as_deref().unwrap_or("unavailable")
            );
        }
    }
    if report.all_passed() {
        println!("all suites pass");
        ExitCode::SUCCESS
    } else {
        println!("verification FAILED");
        ExitCode::from(1)
    }
}

pub fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Classify { func, angle, json } => cmd_classify(func.into(), &angle, json),
        Command::Minpoly { func, angle, json } => cmd_minpoly(func.into(), &angle, json),
        Command::Cyclotomic { n, json } => cmd_cyclotomic(n, json),
        Command::Totient { n, json } => cmd_totient(n, json),
        Command::InverseTotient { k, json } => cmd_inverse_totient(k, json),
        Command::Table {
            func,
            max_b,
            degree_at_most,
            json,
        } => cmd_table(func.into(), max_b, degree_at_most, json),
        Command::Witness { func, value, json } => cmd_witness(func, &value, json),
        Command::Verify { max_b, precision } => cmd_verify(max_b, precision),
    }
}
