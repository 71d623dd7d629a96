//! Command-line front end. All commands route through the library; the
//! binary in `src/main.rs` only forwards `std::env::args` here.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classifier::{self, ClassificationReport, IntroTable};
use crate::error::{Error, Result};
use crate::intlinalg::{smith_normal_form, IntMatrix};
use crate::root_datum::datum_from_str;
use crate::root_system::{RootSystem, RootSystemType};
use crate::verifier::{self, AppendixReport};

#[derive(Debug, Parser)]
#[command(
    name = "orbitclass",
    about = "Classify split reductive groups by prime and verify graded bracket computations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a group at a prime: the eight properties plus kappa_v, rho_v
    Classify {
        /// Group spec, e.g. SL:5, SOodd:7, sc:E6, SL:2xPGL:3xT:1
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reproduce the nine-row summary table
    Table {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-derive the graded bracket computations (one cell or the full sweep)
    #[command(name = "verify-appendix")]
    VerifyAppendix {
        /// Simple type, e.g. E8, D4, B3 (requires --prime)
        #[arg(long = "type", requires = "prime")]
        type_: Option<String>,
        #[arg(long, requires = "type_")]
        prime: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Smith normal form of an integer matrix literal
    Snf {
        /// Bracket-of-rows literal, e.g. [[1,1,0],[1,0,1],[0,1,1]]
        #[arg(long)]
        matrix: String,
    },
    /// Layer dimensions of a root system, e.g. E8 or A3xB2
    Roots {
        #[arg(long = "type")]
        type_: String,
    },
}

/// Parse and run. Returns the process exit code; output goes to stdout,
/// diagnostics to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap reports help/version through Err as well; keep its code
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Classify {
            group,
            prime,
            format,
            output,
        } => {
            let rd = datum_from_str(&group)?;
            let report = classifier::classify(&rd, prime)?;
            let text = match format {
                Format::Json => canonical_json(&report)?,
                Format::Text => classify_text(&report),
                Format::Csv => return Err(Error::Invalid("classify has no csv format".into())),
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::Table { format, output } => {
            let table = classifier::intro_table()?;
            let text = match format {
                Format::Csv => table_csv(&table),
                Format::Text => table_text(&table),
                Format::Json => canonical_json(&table)?,
            };
            emit(&text, output.as_deref())?;
            Ok(0)
        }
        Command::VerifyAppendix {
            type_,
            prime,
            format,
            output,
        } => {
            let reports: Vec<AppendixReport> = match (type_, prime) {
                (Some(t), Some(p)) => {
                    let ty = RootSystemType::parse(&t)?;
                    vec![verifier::verify_appendix_theorem(ty, p)?]
                }
                _ => verifier::appendix_sweep()?,
            };
            let text = match format {
                Format::Json => canonical_json(&reports)?,
                Format::Text => appendix_text(&reports),
                Format::Csv => {
                    return Err(Error::Invalid("verify-appendix has no csv format".into()))
                }
            };
            emit(&text, output.as_deref())?;
            let failed = reports.iter().any(|r| r.applicable && !r.passed);
            Ok(if failed { 1 } else { 0 })
        }
        Command::Snf { matrix } => {
            let m = parse_matrix_literal(&matrix)?;
            let snf = smith_normal_form(&m);
            let parts: Vec<String> = snf.diag.iter().map(|d| d.to_string()).collect();
            println!("d = [{}]", parts.join(", "));
            Ok(0)
        }
        Command::Roots { type_ } => {
            let rs = RootSystem::parse(&type_)?;
            let mut out = String::new();
            let _ = writeln!(out, "type: {rs}");
            let _ = writeln!(out, "rank: {}", rs.rank());
            let _ = writeln!(out, "positive roots: {}", rs.positive_roots().len());
            let _ = writeln!(out, "max height: {}", rs.max_height());
            for (h, dim) in rs.layer_dims().iter().enumerate() {
                let _ = writeln!(out, "layer {:>2}: dim {}", h + 1, dim);
            }
            print!("{out}");
            Ok(0)
        }
    }
}

/// Compact JSON with struct-declaration field order; re-serializing the
/// parsed value is byte-identical.
fn canonical_json<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Invalid(e.to_string()))
}

fn emit(text: &str, output: Option<&std::path::Path>) -> Result<()> {
    match output {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
            writeln!(f, "{text}").map_err(|e| Error::Invalid(e.to_string()))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn parse_matrix_literal(s: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(s)
        .map_err(|e| Error::Invalid(format!("matrix literal: {e}")))?;
    if rows.is_empty() || rows[0].is_empty() {
        return Err(Error::Invalid("matrix literal: empty matrix".into()));
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Invalid("matrix literal: ragged rows".into()));
    }
    Ok(IntMatrix::from_rows(&rows))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn classify_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", r.group_label);
    let _ = writeln!(out, "p: {}", r.p);
    let bad = if r.bad_primes.is_empty() {
        "-".to_string()
    } else {
        r.bad_primes
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    let _ = writeln!(out, "bad primes: {bad}");
    let _ = writeln!(out, "kappa_v: {}", r.kappa_v);
    let _ = writeln!(out, "rho_v: {}", r.rho_v);
    let exps = r
        .exponents
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(out, "regular orbit exponents: [{exps}]");
    let _ = writeln!(out, "(1) p is good:                      {}", yes_no(r.s1_good));
    let _ = writeln!(out, "(2) p is very good:                 {}", yes_no(r.s2_very_good));
    let _ = writeln!(out, "(3) p does not divide kappa_v:      {}", yes_no(r.s3_p_not_div_kappa));
    let _ = writeln!(out, "(4) p does not divide rho_v:        {}", yes_no(r.s4_p_not_div_rho));
    let _ = writeln!(out, "(5) all nilpotent orbits separable: {}", yes_no(r.s5_all_separable));
    let _ = writeln!(out, "(6) regular orbit separable:        {}", yes_no(r.s6_regular_separable));
    let _ = writeln!(out, "(7) finitely many nilpotent orbits: {}", yes_no(r.s7_finitely_many_orbits));
    let _ = writeln!(out, "(8) Howe's conjecture holds:        {}", yes_no(r.s8_howe_holds));
    let _ = write!(out, "note: verdicts assume a split group");
    out
}

fn table_text(t: &IntroTable) -> String {
    let mut out = String::new();
    let header = ["G", "bad p", "kappa_v", "rho_v", "nHwC", "INO"];
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    let cells = |row: &classifier::IntroTableRow| -> Vec<String> {
        vec![
            row.group_label.clone(),
            row.bad_primes.clone(),
            row.kappa_v.clone(),
            row.rho_v.clone(),
            row.nhwc.clone(),
            row.ino.clone(),
        ]
    };
    for row in &t.rows {
        for (i, c) in cells(row).iter().enumerate() {
            widths[i] = widths[i].max(c.len());
        }
    }
    let fmt_row = |cols: &[String]| -> String {
        cols.iter()
            .enumerate()
            .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let header_cells: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    let _ = writeln!(out, "{}", fmt_row(&header_cells));
    for row in &t.rows {
        let _ = writeln!(out, "{}", fmt_row(&cells(row)));
    }
    let _ = writeln!(
        out,
        "sampled n in {}..{}, p in {:?}",
        t.sample_range.0, t.sample_range.1, t.sample_primes
    );
    for note in &t.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out.truncate(out.trim_end().len());
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn table_csv(t: &IntroTable) -> String {
    let mut out = String::from("group,bad_primes,kappa_v,rho_v,nHwC,INO\n");
    for row in &t.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            csv_field(&row.group_label),
            csv_field(&row.bad_primes),
            csv_field(&row.kappa_v),
            csv_field(&row.rho_v),
            csv_field(&row.nhwc),
            csv_field(&row.ino),
        );
    }
    out.truncate(out.trim_end().len());
    out
}

fn appendix_text(reports: &[AppendixReport]) -> String {
    let mut out = String::new();
    for r in reports {
        if !r.applicable {
            let _ = writeln!(
                out,
                "{:>3} p={}: not applicable ({})",
                r.type_label,
                r.prime,
                r.note.as_deref().unwrap_or("")
            );
            continue;
        }
        let mark = |b: bool| if b { "\u{2713}" } else { "\u{2717}" };
        let _ = writeln!(
            out,
            "{:>3} p={}: [1] surjective below p {}  [2] coker dim at p = {} {}  [3] dim identity {}  => {}",
            r.type_label,
            r.prime,
            mark(r.surjective_below_p),
            r.coker_dim_at_p,
            mark(r.coker_dim_at_p == 1),
            mark(r.dim_identity),
            if r.passed { "pass" } else { "FAIL" }
        );
        for layer in &r.layers {
            let snf = layer
                .snf
                .as_ref()
                .map(|d| {
                    let parts: Vec<String> = d.iter().map(u64::to_string).collect();
                    format!("[{}]", parts.join(","))
                })
                .unwrap_or_else(|| "-".to_string());
            let rank = layer
                .rank_mod_p
                .map(|r| r.to_string())
                .unwrap_or_else(|| "-".to_string());
            let _ = writeln!(
                out,
                "      h={:<2} dim={:<2} snf={:<12} rank mod p={}",
                layer.height, layer.dim, snf, rank
            );
        }
    }
    out.truncate(out.trim_end().len());
    out
}
