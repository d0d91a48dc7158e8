//! Command-line front end for the jagged partition toolkit: enumeration,
//! counting, generating functions, progression slices, congruence checks,
//! identity verification, and the full suite.
//!
//! Exit status: 0 on success or verification pass, 1 on verification
//! failure, 2 on usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

use jagged::counting;
use jagged::families::FamilySpec;
use jagged::genfun;
use jagged::identities;
use jagged::qseries;
use jagged::suite;

#[derive(Parser)]
#[command(
    name = "jagged",
    version,
    about = "Exact computations and verified identities for jagged partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for stdout
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Also write the JSON report to this path
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List all members of a family with the given weight
    Enumerate {
        /// Family name (01, 02, 012, 001, 0p1:<p>) or constraint string
        /// like "d1:1,d2:0;tail=1"
        #[arg(long)]
        family: String,
        #[arg(long)]
        weight: u32,
        /// Restrict to an exact number of parts
        #[arg(long)]
        length: Option<usize>,
    },
    /// Tabulate member counts by weight
    Count {
        #[arg(long)]
        family: String,
        /// Largest weight to include
        #[arg(long)]
        upto: u32,
        /// Count members with exactly this many parts
        #[arg(long)]
        length: Option<usize>,
    },
    /// Length-graded generating function, printed as rows by z-degree
    Genfun {
        /// One of the closed-form families: 01, 02, 012, 001
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 8)]
        zmax: usize,
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// The series of counts along an arithmetic progression rn + s
    Slice {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 30)]
        order: usize,
    },
    /// Predict and verify a power-of-two congruence for counts on rn + s
    Congruence {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
        /// Divisor to verify; defaults to the predicted one
        #[arg(long)]
        modulus: Option<u64>,
        /// Verify progression members up to this bound
        #[arg(long, default_value_t = 400)]
        upto: u64,
    },
    /// Verify a named series identity (or all of them)
    Identity {
        #[arg(long, conflicts_with = "all")]
        name: Option<String>,
        /// Verify every registered identity
        #[arg(long)]
        all: bool,
        /// Comparison order (defaults to each entry's own)
        #[arg(long)]
        order: Option<usize>,
    },
    /// Run the complete verification suite
    Suite,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(
    cli_format: Format,
    out: &Option<PathBuf>,
    text: String,
    report: Value,
) -> Option<ExitCode> {
    match cli_format {
        Format::Text => println!("{text}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("valid json")
        ),
    }
    if let Some(path) = out {
        if let Err(e) = std::fs::write(
            path,
            serde_json::to_string_pretty(&report).expect("valid json"),
        ) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return Some(ExitCode::from(2));
        }
    }
    None
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out = cli.out.clone();

    let (text, report, code) = match run(cli.command) {
        Ok(t) => t,
        Err(msg) => return usage_error(&msg),
    };
    if let Some(early) = emit(format, &out, text, report) {
        return early;
    }
    code
}

/// Dispatch a parsed command; `Err` means a usage problem (exit 2).
fn run(command: Command) -> Result<(String, Value, ExitCode), String> {
    match command {
        Command::Enumerate {
            family,
            weight,
            length,
        } => {
            let spec = FamilySpec::parse(&family).map_err(|e| e.to_string())?;
            let members = spec.enumerate(weight, length);
            let mut text = String::new();
            for p in &members {
                text.push_str(&p.to_string());
                text.push('\n');
            }
            text.push_str(&format!("{} members", members.len()));
            let report = json!({
                "family": spec.name(),
                "weight": weight,
                "length": length,
                "count": members.len(),
                "members": members.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
            });
            Ok((text, report, ExitCode::SUCCESS))
        }

        Command::Count {
            family,
            upto,
            length,
        } => {
            let spec = FamilySpec::parse(&family).map_err(|e| e.to_string())?;
            // The 01 family has a fast exact table; everything else counts by
            // enumeration.
            let counts: Vec<String> = if spec.name() == "01" && length.is_none() {
                counting::j_by_recurrence(upto as usize)
                    .iter()
                    .map(|v| v.to_string())
                    .collect()
            } else {
                (0..=upto)
                    .map(|n| match length {
                        Some(m) => spec.enumerate(n, Some(m)).len().to_string(),
                        None => {
                            if n == 0 {
                                "1".to_string()
                            } else {
                                spec.enumerate(n, None).len().to_string()
                            }
                        }
                    })
                    .collect()
            };
            let mut text = String::new();
            for (n, c) in counts.iter().enumerate() {
                text.push_str(&format!("{n}\t{c}\n"));
            }
            text.pop();
            let report = json!({
                "family": spec.name(),
                "upto": upto,
                "length": length,
                "counts": counts,
            });
            Ok((text, report, ExitCode::SUCCESS))
        }

        Command::Genfun {
            family,
            zmax,
            order,
        } => {
            let gf = genfun::closed_form(&family, zmax, order).map_err(|e| e.to_string())?;
            let rows: Vec<Vec<String>> = (0..=gf.z_max())
                .map(|m| gf.row(m).coeffs().iter().map(|c| c.to_string()).collect())
                .collect();
            let mut text = String::new();
            for (m, row) in rows.iter().enumerate() {
                text.push_str(&format!("z^{m}: {}\n", row.join(" ")));
            }
            text.pop();
            let report = json!({
                "family": family,
                "zmax": zmax,
                "order": order,
                "rows": rows,
            });
            Ok((text, report, ExitCode::SUCCESS))
        }

        Command::Slice { r, s, order } => {
            if r < 1 || s >= r {
                return Err(format!(
                    "slice requires r >= 1 and 0 <= s < r (got r = {r}, s = {s})"
                ));
            }
            let series = qseries::slice(&qseries::jagged_gf(r * order + s + 1), r, s);
            let coeffs: Vec<String> = series
                .coeffs()
                .iter()
                .take(order)
                .map(|c| c.to_string())
                .collect();
            let mut text = String::new();
            for (n, c) in coeffs.iter().enumerate() {
                text.push_str(&format!("q^{n}\t{c}\n"));
            }
            text.pop();
            let report = json!({
                "r": r,
                "s": s,
                "order": order,
                "coefficients": coeffs,
            });
            Ok((text, report, ExitCode::SUCCESS))
        }

        Command::Congruence {
            r,
            s,
            modulus,
            upto,
        } => {
            if r < 1 || s >= r {
                return Err(format!(
                    "congruence requires r >= 1 and 0 <= s < r (got r = {r}, s = {s})"
                ));
            }
            let prediction = if s >= 1 {
                Some(counting::congruence_predict(r, s).map_err(|e| e.to_string())?)
            } else {
                None
            };
            let m = match (modulus, &prediction) {
                (Some(m), _) => m,
                (None, Some(p)) => p.modulus,
                (None, None) => return Err("s = 0 requires an explicit --modulus".into()),
            };
            if m == 0 {
                return Err("modulus must be positive".into());
            }
            let table = counting::j_by_recurrence(upto as usize);
            let verdict = counting::congruence_verify(&table, r, s, m, upto, 0);
            let claim = format!("j({r}n+{s}) == 0 (mod {m})");
            let mut text = String::new();
            if let Some(p) = &prediction {
                text.push_str(&format!(
                    "predicted modulus {} (p' = {}, c = {}{})\n",
                    p.modulus,
                    p.p_prime,
                    p.c,
                    if p.premise_holds() {
                        ""
                    } else {
                        "; square-count premise fails on the progression"
                    },
                ));
            }
            let status = if verdict.passed() { "pass" } else { "fail" };
            match &verdict.counterexample {
                None => text.push_str(&format!(
                    "{claim}: pass ({} values checked up to {upto})",
                    verdict.checked
                )),
                Some((n, v)) => {
                    text.push_str(&format!("{claim}: fail at {n}: j({n}) = {v}"));
                }
            }
            let report = json!({
                "claim": claim,
                "range": upto,
                "status": status,
                "prediction": prediction.as_ref().map(|p| json!({
                    "p_prime": p.p_prime,
                    "c": p.c,
                    "modulus": p.modulus,
                    "strengthened": p.strengthened,
                    "premise_holds": p.premise_holds(),
                })),
                "counterexample": verdict.counterexample.as_ref().map(|(n, v)| json!({
                    "n": n,
                    "value": v.to_string(),
                })),
            });
            let code = if verdict.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            Ok((text, report, code))
        }

        Command::Identity { name, all, order } => {
            let reports = if all {
                identities::verify_all(order.unwrap_or(0))
            } else {
                let name = name.ok_or("identity requires --name or --all")?;
                let case =
                    identities::find(&name).ok_or_else(|| format!("no identity named `{name}`"))?;
                vec![case.verify(order.unwrap_or(case.default_order))]
            };
            let mut text = String::new();
            let mut all_passed = true;
            for r in &reports {
                all_passed &= r.passed();
                match &r.mismatch {
                    None => text.push_str(&format!(
                        "{} ({}) order {}: pass\n",
                        r.name, r.paper_ref, r.order
                    )),
                    Some(mm) => text.push_str(&format!(
                        "{} ({}) order {}: FAIL at q^{} ({} vs {}){}\n",
                        r.name,
                        r.paper_ref,
                        r.order,
                        mm.exponent,
                        mm.lhs,
                        mm.rhs,
                        if mm.check.is_empty() {
                            String::new()
                        } else {
                            format!(" [{}]", mm.check)
                        },
                    )),
                }
            }
            text.pop();
            let entries: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "paper_ref": r.paper_ref,
                        "order": r.order,
                        "status": if r.passed() { "pass" } else { "fail" },
                        "mismatch": r.mismatch.as_ref().map(|mm| json!({
                            "check": mm.check,
                            "exponent": mm.exponent,
                            "lhs": mm.lhs.to_string(),
                            "rhs": mm.rhs.to_string(),
                        })),
                    })
                })
                .collect();
            let report = if entries.len() == 1 {
                entries.into_iter().next().expect("one entry")
            } else {
                Value::Array(entries)
            };
            let code = if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            Ok((text, report, code))
        }

        Command::Suite => {
            let outcomes = suite::run_all();
            let mut text = String::new();
            let mut all_passed = true;
            for o in &outcomes {
                all_passed &= o.passed;
                text.push_str(&format!(
                    "[{}] criterion {:2} {:30} {}\n",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.id,
                    o.name,
                    o.detail
                ));
            }
            text.push_str(if all_passed {
                "suite: all criteria passed"
            } else {
                "suite: FAILURES"
            });
            let report = Value::Array(
                outcomes
                    .iter()
                    .map(|o| {
                        json!({
                            "id": o.id,
                            "name": o.name,
                            "status": if o.passed { "pass" } else { "fail" },
                            "detail": o.detail,
                        })
                    })
                    .collect(),
            );
            let code = if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            Ok((text, report, code))
        }
    }
}
