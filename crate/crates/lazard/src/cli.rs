//! Command-line surface: every computation as a subcommand, JSON or aligned
//! text output, and a persistent cache of universal truncations.
//!
//! Exit codes: 0 on success, 1 when a verify command finds a violated
//! identity, 2 on usage errors (bad flags, malformed expressions,
//! out-of-range parameters). Output for identical invocations is
//! byte-identical: randomized checks run from a fixed seed and the default
//! JSON carries `"timings": null` (pass `--timings` to fill it with
//! wall-clock data at the cost of determinism).

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache;
use crate::error::Error;
use crate::expr;
use crate::fgl::Fgl;
use crate::gysin;
use crate::hopf::{BasisKind, HopfAlgebra};
use crate::report::{Report, Status};
use crate::steenrod::MotRing;
use crate::text;
use crate::verify;

const VERIFY_SEED: u64 = 0x1a2a_5d00;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Beta,
    P,
}

impl From<BasisArg> for BasisKind {
    fn from(b: BasisArg) -> BasisKind {
        match b {
            BasisArg::Beta => BasisKind::Beta,
            BasisArg::P => BasisKind::P,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LawArg {
    Universal,
    Additive,
    Multiplicative,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "lazard",
    version,
    about = "Exact formal group law calculator: Lazard-ring coefficients, \
             bordism Hopf algebra, Gysin pushforwards, motivic Steenrod operations",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Cache directory (overrides LAZARD_CACHE_DIR and the default).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Disable the cache entirely.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Include wall-clock timings in the output (not byte-deterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Coefficients a_ij of the universal formal group law.
    #[command(name = "fgl-coeffs")]
    FglCoeffs {
        /// Truncation: list entries with i + j <= degree.
        #[arg(long, default_value_t = 8, value_parser = positive_u32())]
        degree: u32,
        /// Only the single entry a_{i,j}.
        #[arg(long, requires = "j")]
        i: Option<u32>,
        #[arg(long, requires = "i")]
        j: Option<u32>,
    },
    /// Projective-space classes cp(0..=max) over the Lazard-ring model.
    #[command(name = "cp-classes")]
    CpClasses {
        #[arg(long, default_value_t = 8)]
        max: u32,
        /// Truncation degree (defaults to max + 1).
        #[arg(long, value_parser = positive_u32())]
        degree: Option<u32>,
    },
    /// The eta and eta' coefficient families.
    Eta {
        #[arg(long, default_value_t = 8)]
        max: u32,
        #[arg(long, value_parser = positive_u32())]
        degree: Option<u32>,
    },
    /// Coproduct of a basis element of the bordism Hopf algebra.
    #[command(name = "hopf-coproduct")]
    HopfCoproduct {
        /// Basis index n.
        index: u32,
        #[arg(long, value_enum, default_value = "beta")]
        basis: BasisArg,
        #[arg(long, value_parser = positive_u32())]
        degree: Option<u32>,
    },
    /// Product (Segre pushforward) of two basis elements.
    #[command(name = "hopf-product")]
    HopfProduct {
        n: u32,
        m: u32,
        #[arg(long, value_enum, default_value = "p")]
        basis: BasisArg,
        #[arg(long, value_parser = positive_u32())]
        degree: Option<u32>,
    },
    /// Segre decomposition: coefficients s^(r)_{n,m} expressing the product
    /// of two geometric basis classes in the geometric basis.
    Segre {
        n: u32,
        m: u32,
        #[arg(long, value_parser = positive_u32())]
        degree: Option<u32>,
    },
    /// The diagonal class of P^n in the two-factor model.
    #[command(name = "gysin-diagonal")]
    GysinDiagonal {
        n: u32,
        #[arg(long, value_parser = positive_u32())]
        degree: Option<u32>,
    },
    /// Verify the Gysin identities: section identity, diagonal vs Euler
    /// class, projection formula, double projections.
    #[command(name = "gysin-verify")]
    GysinVerify {
        /// Check the section identity for n <= max.
        #[arg(long, default_value_t = 4)]
        max: u32,
        #[arg(long, value_parser = positive_u32())]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value = "all")]
        fgl: LawArg,
        /// Randomized cases per configuration.
        #[arg(long, default_value_t = 25)]
        cases: u32,
    },
    /// Evaluate a Steenrod operation expression mod l.
    #[command(name = "steenrod-eval")]
    SteenrodEval {
        /// Expression, e.g. "Q1(beta(u1*u2))".
        expression: String,
        /// The prime l.
        #[arg(long, default_value_t = 3)]
        l: u32,
        /// Number of generator pairs u_i, v_i.
        #[arg(long, default_value_t = 2)]
        gens: u32,
    },
    /// Run every verification report.
    #[command(name = "verify-all")]
    VerifyAll {
        #[arg(long, default_value_t = 8, value_parser = positive_u32())]
        degree: u32,
    },
}

fn positive_u32() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

/// Entry point for the binary: parse `std::env::args`, write to the standard
/// streams, return the exit code.
pub fn main() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(&args, &mut stdout.lock(), &mut stderr.lock())
}

/// Testable entry point.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                kind => {
                    let _ = write!(err, "{e}");
                    if kind == ErrorKind::InvalidSubcommand {
                        let _ = writeln!(
                            err,
                            "commands: fgl-coeffs, cp-classes, eta, hopf-coproduct, \
                             hopf-product, segre, gysin-diagonal, gysin-verify, \
                             steenrod-eval, verify-all"
                        );
                    }
                    2
                }
            };
        }
    };
    let start = std::time::Instant::now();
    let mut warnings = Vec::new();
    let outcome = dispatch(&cli, &mut warnings);
    for w in &warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    match outcome {
        Ok(payload) => {
            let timings = cli
                .timings
                .then(|| json!({ "total_ms": start.elapsed().as_millis() as u64 }));
            let envelope = Envelope {
                command: payload.command,
                parameters: payload.parameters,
                results: payload.results,
                timings,
            };
            match cli.format {
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&envelope).expect("serializable")
                    );
                }
                Format::Text => {
                    let _ = write!(out, "{}", payload.text);
                    if let Some(t) = &envelope.timings {
                        let _ = writeln!(out, "elapsed: {} ms", t["total_ms"]);
                    }
                }
            }
            if payload.failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[derive(Serialize)]
struct Envelope {
    command: &'static str,
    parameters: Value,
    results: Value,
    timings: Option<Value>,
}

struct Payload {
    command: &'static str,
    parameters: Value,
    results: Value,
    text: String,
    failed: bool,
}

fn dispatch(cli: &Cli, warnings: &mut Vec<String>) -> Result<Payload, Error> {
    let mut warn = |w: String| warnings.push(w);
    let fgl_at = |degree: u32, warn: &mut dyn FnMut(String)| -> Arc<Fgl> {
        if cli.no_cache {
            Fgl::universal(degree)
        } else {
            cache::load_or_build(cli.cache_dir.as_deref(), degree, warn)
        }
    };
    match &cli.command {
        Cmd::FglCoeffs { degree, i, j } => {
            let fgl = fgl_at(*degree, &mut warn);
            let entries: Vec<(u32, u32, String)> = match (i, j) {
                (Some(i), Some(j)) => {
                    if i + j > *degree {
                        return Err(Error::Bound { need: i + j, have: *degree });
                    }
                    vec![(*i, *j, text::to_canonical(&fgl.a(*i as i64, *j as i64)))]
                }
                _ => {
                    let mut rows: Vec<(u32, u32, String)> = fgl
                        .entries(*degree)
                        .into_iter()
                        .map(|(i, j, p)| (i, j, text::to_canonical(&p)))
                        .collect();
                    rows.sort_by_key(|&(i, j, _)| (i + j, i, j));
                    rows
                }
            };
            let results: Vec<Value> = entries
                .iter()
                .map(|(i, j, c)| json!({ "i": i, "j": j, "coefficient": c }))
                .collect();
            let text = align_table(
                &["i", "j", "coefficient"],
                entries
                    .iter()
                    .map(|(i, j, c)| vec![i.to_string(), j.to_string(), c.clone()]),
            );
            Ok(Payload {
                command: "fgl-coeffs",
                parameters: json!({ "degree": degree, "i": i, "j": j }),
                results: Value::Array(results),
                text,
                failed: false,
            })
        }
        Cmd::CpClasses { max, degree } => {
            let need = max + 1;
            let degree = degree.unwrap_or(need);
            if degree < need {
                return Err(Error::Bound { need, have: degree });
            }
            let fgl = fgl_at(degree, &mut warn);
            let mut rows = Vec::new();
            for n in 0..=*max {
                rows.push((n, text::to_canonical(&fgl.cp_class(n)?)));
            }
            let results: Vec<Value> = rows
                .iter()
                .map(|(n, c)| json!({ "n": n, "class": c }))
                .collect();
            let text = align_table(
                &["n", "class"],
                rows.iter().map(|(n, c)| vec![n.to_string(), c.clone()]),
            );
            Ok(Payload {
                command: "cp-classes",
                parameters: json!({ "max": max, "degree": degree }),
                results: Value::Array(results),
                text,
                failed: false,
            })
        }
        Cmd::Eta { max, degree } => {
            let need = max + 1;
            let degree = degree.unwrap_or(need);
            if degree < need {
                return Err(Error::Bound { need, have: degree });
            }
            let fgl = fgl_at(degree, &mut warn);
            let mut rows = Vec::new();
            for n in 0..=*max {
                rows.push((
                    n,
                    text::to_canonical(&fgl.eta(n as i64)),
                    text::to_canonical(&fgl.eta_prime(n)),
                ));
            }
            let results: Vec<Value> = rows
                .iter()
                .map(|(n, e, ep)| json!({ "n": n, "eta": e, "eta_prime": ep }))
                .collect();
            let text = align_table(
                &["n", "eta", "eta_prime"],
                rows.iter()
                    .map(|(n, e, ep)| vec![n.to_string(), e.clone(), ep.clone()]),
            );
            Ok(Payload {
                command: "eta",
                parameters: json!({ "max": max, "degree": degree }),
                results: Value::Array(results),
                text,
                failed: false,
            })
        }
        Cmd::HopfCoproduct { index, basis, degree } => {
            let need = index + 1;
            let degree = degree.unwrap_or_else(|| need.max(8));
            if degree < need {
                return Err(Error::Bound { need, have: degree });
            }
            let fgl = fgl_at(degree, &mut warn);
            let alg = HopfAlgebra::new(fgl);
            let class = alg.basis_element((*basis).into(), *index);
            let cop = alg.coproduct(&class);
            let rows: Vec<(u32, u32, String)> = cop
                .terms
                .iter()
                .map(|(&(i, j), c)| (i, j, text::to_canonical(c)))
                .collect();
            let results: Vec<Value> = rows
                .iter()
                .map(|(i, j, c)| json!({ "left": i, "right": j, "coefficient": c }))
                .collect();
            let text = align_table(
                &["left", "right", "coefficient"],
                rows.iter()
                    .map(|(i, j, c)| vec![i.to_string(), j.to_string(), c.clone()]),
            );
            Ok(Payload {
                command: "hopf-coproduct",
                parameters: json!({
                    "index": index,
                    "basis": basis_label(*basis),
                    "degree": degree
                }),
                results: Value::Array(results),
                text,
                failed: false,
            })
        }
        Cmd::HopfProduct { n, m, basis, degree } => {
            let need = n + m;
            let degree = degree.unwrap_or_else(|| need.max(8));
            if degree < need {
                return Err(Error::Bound { need, have: degree });
            }
            let fgl = fgl_at(degree, &mut warn);
            let alg = HopfAlgebra::new(fgl);
            let a = alg.basis_element((*basis).into(), *n);
            let b = alg.basis_element((*basis).into(), *m);
            let prod = alg.product(&a, &b)?;
            let rows: Vec<(u32, String)> = prod
                .terms
                .iter()
                .map(|(&k, c)| (k, text::to_canonical(c)))
                .collect();
            let results: Vec<Value> = rows
                .iter()
                .map(|(k, c)| json!({ "index": k, "coefficient": c }))
                .collect();
            let text = align_table(
                &["index", "coefficient"],
                rows.iter().map(|(k, c)| vec![k.to_string(), c.clone()]),
            );
            Ok(Payload {
                command: "hopf-product",
                parameters: json!({
                    "n": n,
                    "m": m,
                    "basis": basis_label(*basis),
                    "degree": degree
                }),
                results: Value::Array(results),
                text,
                failed: false,
            })
        }
        Cmd::Segre { n, m, degree } => {
            let need = n + m;
            let degree = degree.unwrap_or_else(|| need.max(8));
            if degree < need {
                return Err(Error::Bound { need, have: degree });
            }
            let fgl = fgl_at(degree, &mut warn);
            let alg = HopfAlgebra::new(fgl);
            let rows: Vec<(u32, String)> = alg
                .segre_decomposition(*n, *m)?
                .into_iter()
                .map(|(r, c)| (r, text::to_canonical(&c)))
                .collect();
            let results: Vec<Value> = rows
                .iter()
                .map(|(r, c)| json!({ "r": r, "coefficient": c }))
                .collect();
            let text = align_table(
                &["r", "coefficient"],
                rows.iter().map(|(r, c)| vec![r.to_string(), c.clone()]),
            );
            Ok(Payload {
                command: "segre",
                parameters: json!({ "n": n, "m": m, "degree": degree }),
                results: Value::Array(results),
                text,
                failed: false,
            })
        }
        Cmd::GysinDiagonal { n, degree } => {
            let need = n + 1;
            let degree = degree.unwrap_or_else(|| need.max(8));
            if degree < need {
                return Err(Error::Bound { need, have: degree });
            }
            let fgl = fgl_at(degree, &mut warn);
            let (model, diag) = gysin::diagonal_square(fgl, *n)?;
            let x1 = model.table().require("x1")?;
            let x2 = model.table().require("x2")?;
            let mut by_exp: std::collections::BTreeMap<(u16, u16), crate::GradedPoly> =
                std::collections::BTreeMap::new();
            for (mono, c) in diag.terms() {
                let (i, rest) = mono.split_off(x1);
                let (j, rest) = rest.split_off(x2);
                by_exp
                    .entry((i, j))
                    .or_insert_with(|| crate::GradedPoly::zero(model.table()))
                    .add_term(rest, c.clone());
            }
            let rows: Vec<(u16, u16, String)> = by_exp
                .into_iter()
                .map(|((i, j), c)| (i, j, text::to_canonical(&c)))
                .collect();
            let results: Vec<Value> = rows
                .iter()
                .map(|(i, j, c)| json!({ "i": i, "j": j, "coefficient": c }))
                .collect();
            let text = align_table(
                &["x1^i", "x2^j", "coefficient"],
                rows.iter()
                    .map(|(i, j, c)| vec![i.to_string(), j.to_string(), c.clone()]),
            );
            Ok(Payload {
                command: "gysin-diagonal",
                parameters: json!({ "n": n, "degree": degree }),
                results: Value::Array(results),
                text,
                failed: false,
            })
        }
        Cmd::GysinVerify { max, degree, fgl: law, cases } => {
            let euler_max = 5u32.min(*max + 1);
            let need = (max + 1).max(2 * euler_max);
            let degree = degree.unwrap_or_else(|| need.max(10));
            if degree < max + 1 {
                return Err(Error::Bound { need: max + 1, have: degree });
            }
            let universal = fgl_at(degree, &mut warn);
            let laws: Vec<Arc<Fgl>> = match law {
                LawArg::Universal => vec![universal],
                LawArg::Additive => vec![Fgl::additive(degree)],
                LawArg::Multiplicative => vec![Fgl::multiplicative(degree)],
                LawArg::All => vec![
                    universal,
                    Fgl::additive(degree),
                    Fgl::multiplicative(degree),
                ],
            };
            let mut reports = Vec::new();
            for law in &laws {
                let mut merged =
                    Report::new(format!("section-identity[{}]", law.kind().label()));
                for n in 0..=(*max).min(degree.saturating_sub(1)) {
                    merged.extend(gysin::verify_section_identity(Arc::clone(law), n));
                }
                reports.push(merged);
                for n in 1..=euler_max.min(degree / 2) {
                    reports.push(gysin::verify_diagonal_equals_euler(Arc::clone(law), n));
                }
                let cap = degree.saturating_sub(1).max(1);
                reports.push(gysin::projection_properties_randomized(
                    Arc::clone(law),
                    (4.min(*max).max(1).min(cap), 3.min(*max).max(1).min(cap)),
                    *cases,
                    VERIFY_SEED,
                ));
            }
            Ok(report_payload(
                "gysin-verify",
                json!({
                    "max": max,
                    "degree": degree,
                    "fgl": law_label(*law),
                    "cases": cases,
                }),
                reports,
            ))
        }
        Cmd::SteenrodEval { expression, l, gens } => {
            let ring = MotRing::new(*l, *gens)?;
            let ast = expr::parse_expression(expression)?;
            let value = expr::evaluate(&ring, &ast)?;
            let canonical = text::to_canonical(&value);
            let bidegree = ring.bidegree(&value);
            let results = json!({
                "value": canonical,
                "bidegree": bidegree.map(|(d, w)| vec![d, w]),
            });
            let text = format!("{canonical}\n");
            Ok(Payload {
                command: "steenrod-eval",
                parameters: json!({
                    "expression": expression,
                    "l": l,
                    "gens": gens
                }),
                results,
                text,
                failed: false,
            })
        }
        Cmd::VerifyAll { degree } => {
            let fgl = fgl_at(*degree, &mut warn);
            let reports = verify::verify_all(&fgl, VERIFY_SEED);
            Ok(report_payload(
                "verify-all",
                json!({ "degree": degree }),
                reports,
            ))
        }
    }
}

fn basis_label(b: BasisArg) -> &'static str {
    match b {
        BasisArg::Beta => "beta",
        BasisArg::P => "p",
    }
}

fn law_label(l: LawArg) -> &'static str {
    match l {
        LawArg::Universal => "universal",
        LawArg::Additive => "additive",
        LawArg::Multiplicative => "multiplicative",
        LawArg::All => "all",
    }
}

fn report_payload(command: &'static str, parameters: Value, reports: Vec<Report>) -> Payload {
    let failed = reports.iter().any(|r| !r.passed());
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let nfail: usize = reports
        .iter()
        .map(|r| r.checks.iter().filter(|c| c.status == Status::Fail).count())
        .sum();
    let nwarn: usize = reports
        .iter()
        .map(|r| r.checks.iter().filter(|c| c.status == Status::Warn).count())
        .sum();
    let results = json!({
        "reports": reports,
        "summary": { "checks": total, "failed": nfail, "warnings": nwarn }
    });
    let mut text = String::new();
    for r in &reports {
        for c in &r.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Warn => "WARN",
                Status::Fail => "FAIL",
            };
            text.push_str(&format!("{tag} {}: {}", r.name, c.name));
            if !c.details.is_empty() {
                text.push_str(&format!(" ({})", c.details));
            }
            text.push('\n');
        }
    }
    text.push_str(&format!("{total} checks, {nfail} failed, {nwarn} warnings\n"));
    Payload { command, parameters, results, text, failed }
}

/// Simple column alignment for the text format.
fn align_table(headers: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let rows: Vec<Vec<String>> = rows.collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (k, cell) in row.iter().enumerate() {
            widths[k] = widths[k].max(cell.len());
        }
    }
    let render = |cells: &[String], widths: &[usize]| -> String {
        let mut line = String::new();
        for (k, cell) in cells.iter().enumerate() {
            if k + 1 == cells.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}  ", width = widths[k]));
            }
        }
        line.trim_end().to_string()
    };
    let mut out = String::new();
    let header_cells: Vec<String> = headers.iter().map(|s| s.to_string()).collect();
    out.push_str(&render(&header_cells, &widths));
    out.push('\n');
    for row in rows {
        out.push_str(&render(&row, &widths));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let args: Vec<String> =
            std::iter::once("lazard".to_string())
                .chain(args.iter().map(|s| s.to_string()))
                .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&args, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn segre_json_schema() {
        let (code, out, _) = run_capture(&["segre", "1", "1", "--no-cache"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], "segre");
        assert!(v["timings"].is_null());
        let results = v["results"].as_array().unwrap();
        let rs: Vec<u64> = results.iter().map(|r| r["r"].as_u64().unwrap()).collect();
        assert_eq!(rs, vec![0, 1, 2]);
        assert_eq!(results[2]["coefficient"], "2");
        assert_eq!(results[1]["coefficient"], "2*b1");
        assert_eq!(results[0]["coefficient"], "-4*b1^2 + 6*b2");
    }

    #[test]
    fn steenrod_eval_lemma_value() {
        let (code, out, _) = run_capture(&[
            "steenrod-eval",
            "--l",
            "3",
            "--gens",
            "2",
            "Q1(beta(u1*u2))",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"]["value"], "2*v1^3*v2 + v1*v2^3");
        assert_eq!(v["results"]["bidegree"][0], 8);
        assert_eq!(v["results"]["bidegree"][1], 4);
    }

    #[test]
    fn unknown_verb_lists_commands() {
        let (code, _, err) = run_capture(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("verify-all"), "{err}");
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, _, _) = run_capture(&["segre", "1", "1", "--bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn malformed_expression_reports_offset() {
        let (code, _, err) =
            run_capture(&["steenrod-eval", "--l", "3", "beta(u1"]);
        assert_eq!(code, 2);
        assert!(err.contains("offset 8"), "{err}");
    }

    #[test]
    fn bound_violation_is_usage_error() {
        let (code, _, err) =
            run_capture(&["cp-classes", "--max", "9", "--degree", "4", "--no-cache"]);
        assert_eq!(code, 2);
        assert!(err.contains("insufficient"), "{err}");
    }

    #[test]
    fn text_format_aligns_columns() {
        let (code, out, _) =
            run_capture(&["segre", "1", "1", "--format", "text", "--no-cache"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["r", "coefficient"]);
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn verify_all_is_deterministic_and_green() {
        let (code1, out1, _) =
            run_capture(&["verify-all", "--degree", "4", "--no-cache"]);
        let (code2, out2, _) =
            run_capture(&["verify-all", "--degree", "4", "--no-cache"]);
        assert_eq!(code1, 0);
        assert_eq!(code2, 0);
        assert_eq!(out1, out2);
        let v: Value = serde_json::from_str(&out1).unwrap();
        assert_eq!(v["results"]["summary"]["failed"], 0);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("steenrod-eval"));
    }
}
