//! `ro2`: command-line front end for the representation-ring engines.
//!
//! Every subcommand prints to stdout and reserves stderr for
//! diagnostics. Exit codes: 0 on success, 1 on a domain error (bad
//! mathematical input, failed check), 2 on a usage error. `--format
//! json` emits a single JSON document whose representation values are
//! canonical strings accepted back by the library parser.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ro2::dualizing::{dualizing_rep, orbit_types};
use ro2::ledger::Ledger;
use ro2::shift::{candidate_reps, descriptor_name, duality_shift, rebase, ShiftReport};
use ro2::two_adic::{all_autos_field_degree, lemma_check, LemmaPart};
use ro2::VirtualRep;
use serde_json::{json, Value};

/// The `(h, g)` pairs of the standard shift table, in display order.
const TABLE_ROWS: [(u64, u32); 5] = [(1, 1), (2, 2), (4, 2), (8, 2), (4, 3)];

/// Every standard ledger with a solved shift, for `certify`.
const CERTIFIED_ROWS: [(u64, u32); 8] =
    [(1, 1), (2, 1), (4, 1), (8, 1), (2, 2), (4, 2), (8, 2), (4, 3)];

#[derive(Parser)]
#[command(name = "ro2", version, about = "Representation-ring arithmetic for cyclic 2-groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Render σ, λ and separators in plain ASCII (s, l0, *).
    #[arg(long, global = true)]
    ascii: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Part {
    A,
    B,
    C,
}

#[derive(Subcommand)]
enum Command {
    /// The dualizing representation of height 2^(n-1)·m over C_{2^n}.
    DualizingRep {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
    },
    /// The signed-permutation orbit decomposition behind it.
    Orbits {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
    },
    /// Evaluate one 2-adic congruence lemma instance.
    Lemmas {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        part: Part,
        #[arg(long, required_if_eq_any([("part", "b"), ("part", "c")]))]
        ell: Option<u64>,
        #[arg(long, required_if_eq_any([("part", "b"), ("part", "c")]))]
        m: Option<u64>,
    },
    /// Degree of a field on which all automorphisms act, if one exists.
    AllAutos {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u64,
    },
    /// Entries of the standard periodicity ledger at (h, g).
    Ledger {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        g: u32,
    },
    /// Minimal positive integer periodicity of the standard ledger.
    IntPeriodicity {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        g: u32,
    },
    /// The integer duality shift at (h, g), with its certificate.
    Shift {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        g: u32,
        /// Report the solution representative nearest this anchor.
        #[arg(long, allow_hyphen_values = true)]
        near: Option<i64>,
    },
    /// Candidate readings of the dualizing class as ℓ·ρ plus an integer.
    Candidates {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        ell_bound: u64,
    },
    /// The standard shift table.
    Table {
        /// Compare the table against a golden file; exit 1 on drift.
        #[arg(long, value_name = "PATH")]
        check: Option<PathBuf>,
        /// Write the table to a file instead of stdout.
        #[arg(long, value_name = "PATH")]
        write: Option<PathBuf>,
    },
    /// Re-verify every certificate in the shift table by recombination.
    Certify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<String, String> {
    let ascii = cli.ascii;
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::DualizingRep { n, m } => {
            let rep = dualizing_rep(*n, *m).map_err(domain)?;
            Ok(if json {
                doc(json!({ "rep": rep.render(ascii) }))
            } else {
                format!("{}\n", rep.render(ascii))
            })
        }
        Command::Orbits { n, m } => {
            let types = orbit_types(*n, *m).map_err(domain)?;
            if json {
                let rows: Result<Vec<Value>, String> = types
                    .iter()
                    .map(|t| {
                        let count = u64::try_from(t.count)
                            .map_err(|_| format!("error: orbit count {} exceeds u64", t.count))?;
                        Ok(json!({ "d": t.d, "eps": t.eps, "count": count }))
                    })
                    .collect();
                Ok(doc(json!({ "orbit_types": rows? })))
            } else {
                let mut out = String::new();
                for t in types {
                    let eps = if t.eps == 1 { '+' } else { '-' };
                    let _ = writeln!(out, "d={} eps={} count={}", t.d, eps, t.count);
                }
                Ok(out)
            }
        }
        Command::Lemmas { n, part, ell, m } => {
            let part = match part {
                Part::A => LemmaPart::A,
                Part::B => LemmaPart::B { ell: ell.unwrap(), mult: m.unwrap() },
                Part::C => LemmaPart::C { ell: ell.unwrap(), mult: m.unwrap() },
            };
            let holds = lemma_check(*n, part).map_err(domain)?;
            Ok(if json {
                doc(json!({ "holds": holds }))
            } else {
                format!("{}\n", if holds { "holds" } else { "fails" })
            })
        }
        Command::AllAutos { n, m } => {
            let degree = all_autos_field_degree(*n, *m).map_err(domain)?;
            if json {
                let value = match degree {
                    Some(d) => Value::from(
                        u64::try_from(d).map_err(|_| format!("error: degree {d} exceeds u64"))?,
                    ),
                    None => Value::Null,
                };
                Ok(doc(json!({ "degree": value })))
            } else {
                Ok(match degree {
                    Some(d) => format!("degree={d}\n"),
                    None => "degree=none\n".to_string(),
                })
            }
        }
        Command::Ledger { h, g } => {
            let ledger = Ledger::standard(*h, *g).map_err(domain)?;
            if json {
                let rows: Vec<Value> = ledger
                    .entries()
                    .iter()
                    .map(|p| {
                        json!({
                            "provenance": p.provenance().render(ascii),
                            "rep": p.rep().render(ascii),
                        })
                    })
                    .collect();
                Ok(doc(json!({ "h": h, "g": g, "ledger": rows })))
            } else {
                let mut out = String::new();
                for p in ledger.entries() {
                    let _ = writeln!(
                        out,
                        "{}: {}",
                        p.provenance().render(ascii),
                        p.rep().render(ascii)
                    );
                }
                Ok(out)
            }
        }
        Command::IntPeriodicity { h, g } => {
            let ledger = Ledger::standard(*h, *g).map_err(domain)?;
            let k = ledger
                .integer_periodicity()
                .ok_or_else(|| "error: ledger has no integer periodicity".to_string())?;
            Ok(if json {
                doc(json!({ "h": h, "g": g, "modulus": int(k)? }))
            } else {
                format!("{k}\n")
            })
        }
        Command::Shift { h, g, near } => {
            let report = duality_shift(*h, *g).map_err(domain)?;
            shift_output(&report, *near, ascii, json)
        }
        Command::Candidates { h, g, ell_bound } => {
            let cs = candidate_reps(*h, *g, *ell_bound).map_err(domain)?;
            if json {
                let rows: Result<Vec<Value>, String> = cs
                    .iter()
                    .map(|c| {
                        Ok(json!({
                            "ell": c.ell(),
                            "shift": int(c.shift())?,
                            "rep": c.rep().render(ascii),
                            "descriptor": c.descriptor().map(|d| descriptor_name(d, ascii)),
                        }))
                    })
                    .collect();
                Ok(doc(json!({ "h": h, "g": g, "candidates": rows? })))
            } else {
                let mut out = String::new();
                for c in cs {
                    let descriptor = c
                        .descriptor()
                        .map_or_else(|| "none".to_string(), |d| descriptor_name(d, ascii));
                    let _ = writeln!(
                        out,
                        "ell={}  s={}  W={}  descriptor={}",
                        c.ell(),
                        c.shift(),
                        c.rep().render(ascii),
                        descriptor
                    );
                }
                Ok(out)
            }
        }
        Command::Table { check, write } => {
            let rendered = if json {
                let rows: Result<Vec<Value>, String> = TABLE_ROWS
                    .iter()
                    .map(|&(h, g)| {
                        let report = duality_shift(h, g).map_err(domain)?;
                        let sol = report.solution().expect("table rows all solve");
                        Ok(json!({
                            "group": format!("C_{}", 1u64 << g),
                            "h": h,
                            "shift": int(sol.base())?,
                            "modulus": int(sol.modulus())?,
                        }))
                    })
                    .collect();
                doc(json!({ "table": rows? }))
            } else {
                let mut out = String::new();
                for (h, g) in TABLE_ROWS {
                    let report = duality_shift(h, g).map_err(domain)?;
                    out.push_str(&table_row(&report, ascii));
                }
                out
            };
            if let Some(path) = check {
                let golden = std::fs::read_to_string(path)
                    .map_err(|e| format!("error: cannot read {}: {e}", path.display()))?;
                if golden == rendered {
                    return Ok(format!("table matches {}\n", path.display()));
                }
                return Err(format!("error: table drifted from {}", path.display()));
            }
            if let Some(path) = write {
                std::fs::write(path, &rendered)
                    .map_err(|e| format!("error: cannot write {}: {e}", path.display()))?;
                return Ok(String::new());
            }
            Ok(rendered)
        }
        Command::Certify => {
            let mut out = String::new();
            let mut checked = 0u32;
            for (h, g) in CERTIFIED_ROWS {
                let report = duality_shift(h, g).map_err(domain)?;
                let ledger = Ledger::standard(h, g).map_err(domain)?;
                let sol = report.solution().expect("certified rows all solve");
                let target =
                    report.rep().clone() + VirtualRep::trivial(ledger.group()) * sol.base();
                if ledger.recombine(sol.certificate()) != target
                    || ledger.integer_periodicity() != Some(sol.modulus())
                {
                    return Err(format!("error: certificate mismatch at (h, g) = ({h}, {g})"));
                }
                checked += 1;
                if !json {
                    let _ = writeln!(out, "{}  certificate ok", row_core(&report, sol.base()));
                }
            }
            if json {
                Ok(doc(json!({ "checked": checked, "ok": true })))
            } else {
                let _ = writeln!(out, "{checked} certificates verified");
                Ok(out)
            }
        }
    }
}

fn domain(e: ro2::Error) -> String {
    format!("error: {e}")
}

fn doc(v: Value) -> String {
    format!("{v}\n")
}

fn int(x: i128) -> Result<i64, String> {
    i64::try_from(x).map_err(|_| format!("error: value {x} exceeds i64 for JSON output"))
}

fn row_core(report: &ShiftReport, base: i128) -> String {
    format!(
        "G=C_{}  h={}  s_h={}  (mod {})",
        1u64 << report.g(),
        report.h(),
        base,
        report.solution().expect("caller checked").modulus()
    )
}

/// One table row plus its certificate line.
fn table_row(report: &ShiftReport, ascii: bool) -> String {
    let sol = report.solution().expect("table rows all solve");
    let ledger = Ledger::standard(report.h(), report.g()).expect("table rows are standard");
    format!(
        "{}\n  certificate: {}\n",
        row_core(report, sol.base()),
        certificate_line(&ledger, sol.certificate(), ascii)
    )
}

/// Renders a certificate as a signed combination of provenance tags,
/// e.g. `16·rho + 1·special(u_{12σ+32λ0+12λ1})`.
fn certificate_line(ledger: &Ledger, cert: &[i128], ascii: bool) -> String {
    let dot = if ascii { "*" } else { "·" };
    let mut out = String::new();
    for (p, &c) in ledger.entries().iter().zip(cert) {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let _ = write!(out, "{}{dot}{}", c.unsigned_abs(), p.provenance().render(ascii));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn shift_output(
    report: &ShiftReport,
    near: Option<i64>,
    ascii: bool,
    json: bool,
) -> Result<String, String> {
    let Some(sol) = report.solution() else {
        return Ok(if json {
            doc(json!({
                "h": report.h(),
                "g": report.g(),
                "rep": report.rep().render(ascii),
                "shift": Value::Null,
                "modulus": Value::Null,
                "certificate": Value::Null,
                "c2_consistent": Value::Null,
            }))
        } else {
            format!(
                "G=C_{}  h={}  s_h=none  (no integer shift derivable from this ledger)\n",
                1u64 << report.g(),
                report.h()
            )
        });
    };
    let ledger = Ledger::standard(report.h(), report.g()).map_err(domain)?;
    let (base, cert) = match near {
        None => (sol.base(), sol.certificate().to_vec()),
        Some(anchor) => {
            let base = rebase(sol, anchor as i128);
            let target = report.rep().clone() + VirtualRep::trivial(ledger.group()) * base;
            let cert = ledger
                .contains(&target)
                .map_err(domain)?
                .expect("every representative of the solved class is a member");
            (base, cert)
        }
    };
    if json {
        let cert_json: Result<Vec<i64>, String> = cert.iter().map(|&c| int(c)).collect();
        Ok(doc(json!({
            "h": report.h(),
            "g": report.g(),
            "rep": report.rep().render(ascii),
            "shift": int(base)?,
            "modulus": int(sol.modulus())?,
            "certificate": cert_json?,
            "c2_consistent": report.c2_consistent(),
        })))
    } else {
        Ok(format!(
            "{}\n  certificate: {}\n",
            row_core(report, base),
            certificate_line(&ledger, &cert, ascii)
        ))
    }
}
