//! Text and TSV rendering of gap tables and verification reports.

use std::fmt::Write as _;

use crate::constructions::{Check, VerificationReport};
use crate::partitions::Bipartition;
use crate::spectral::GapValue;

/// C-style `%.15g`.
pub fn format_number(x: f64) -> String {
    format_significant(x, 15)
}

/// C-style `%.{digits}g`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `LABEL\tPSI` per row, then `RESULT psi=<v> argmin=<label>`.
pub fn gap_table_tsv(table: &[(Bipartition, GapValue)], result: Option<(&GapValue, &Bipartition)>) -> String {
    let rows: Vec<(String, f64)> = table.iter().map(|(l, g)| (l.to_string(), g.psi)).collect();
    gap_rows_tsv(&rows, result.map(|(g, l)| (g.psi, l.to_string())))
}

pub fn gap_rows_tsv(rows: &[(String, f64)], result: Option<(f64, String)>) -> String {
    let mut out = String::new();
    for (label, psi) in rows {
        writeln!(out, "{label}\t{}", format_number(*psi)).expect("string write");
    }
    if let Some((psi, label)) = result {
        writeln!(out, "RESULT psi={} argmin={label}", format_number(psi)).expect("string write");
    }
    out
}

fn check_record(c: &Check) -> String {
    format!(
        "CHECK\t{}\t{}\t{}\t{}\t{}\tmargin={}\ttol={}",
        if c.passed { "PASS" } else { "FAIL" },
        c.name,
        format_number(c.lhs),
        c.relation.symbol(),
        format_number(c.rhs),
        format_number(c.margin),
        format_number(c.tolerance)
    )
}

/// One record per line: `PSI`, `TRIAL`, `CHECK`, `NOTE`, then a final
/// `RESULT`. Wall time is left out so that output is reproducible.
pub fn report_records(r: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "REPORT\t{}\tn={}", r.title, r.n).expect("string write");
    if let Some(seed) = r.seed {
        writeln!(out, "SEED\t{seed}").expect("string write");
    }
    for (label, psi) in &r.psi_table {
        writeln!(out, "PSI\t{label}\t{}", format_number(*psi)).expect("string write");
    }
    for t in &r.trials {
        writeln!(
            out,
            "TRIAL\t{}\t{:#018x}\t{}\t{}\t{}\t{}\t{}",
            t.index,
            t.sub_seed,
            format_number(t.psi_global),
            t.global_argmin,
            format_number(t.psi_family),
            t.family_argmin,
            if t.passed { "PASS" } else { "FAIL" }
        )
        .expect("string write");
    }
    for c in &r.checks {
        writeln!(out, "{}", check_record(c)).expect("string write");
    }
    for note in &r.notes {
        writeln!(out, "NOTE\t{note}").expect("string write");
    }
    writeln!(
        out,
        "RESULT status={} checks={}/{}",
        if r.passed() { "pass" } else { "fail" },
        r.passed_count(),
        r.checks.len()
    )
    .expect("string write");
    out
}

/// Readable summary; failed checks are listed individually.
pub fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "{}", r.title).expect("string write");
    if let Some(seed) = r.seed {
        writeln!(out, "  seed {seed}").expect("string write");
    }
    for note in &r.notes {
        writeln!(out, "  {note}").expect("string write");
    }
    let width = r.psi_table.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    for (label, psi) in &r.psi_table {
        writeln!(out, "  psi {label:<width$}  {}", format_number(*psi)).expect("string write");
    }
    for c in r.checks.iter().filter(|c| !c.passed) {
        writeln!(
            out,
            "  FAILED {}: {} {} {} (margin {})",
            c.name,
            format_number(c.lhs),
            c.relation.symbol(),
            format_number(c.rhs),
            format_number(c.margin)
        )
        .expect("string write");
    }
    let min_margin = r
        .checks
        .iter()
        .filter(|c| c.passed && c.relation == crate::constructions::Relation::Less)
        .map(|c| c.margin)
        .fold(f64::INFINITY, f64::min);
    if min_margin.is_finite() {
        writeln!(out, "  smallest strict margin {}", format_number(min_margin)).expect("string write");
    }
    writeln!(
        out,
        "  {}: {}/{} checks passed",
        if r.passed() { "PASS" } else { "FAIL" },
        r.passed_count(),
        r.checks.len()
    )
    .expect("string write");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(format_number(8.0 / 3.0), "2.66666666666667");
        assert_eq!(format_number(16.0), "16");
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-1.5), "-1.5");
        assert_eq!(format_number(1e-5), "1e-05");
        assert_eq!(format_number(1.25e-12), "1.25e-12");
        assert_eq!(format_number(123456789012345678.0), "1.23456789012346e+17");
        assert_eq!(format_number(0.0001), "0.0001");
        assert_eq!(format_number(999999999999999.9), "1e+15");
        assert_eq!(format_significant(3.14159, 3), "3.14");
    }
}
