use std::fmt::Write as _;

use anyhow::Result;
use hookbias_core::bias::{BiasReport, Finding};
use hookbias_core::Coeff;
use serde::Serialize;

use crate::config::Format;

#[derive(Debug, Serialize)]
pub struct TableDump<'a> {
    pub table: &'a str,
    /// `cells[k - 1][n - 1]`
    pub cells: Vec<Vec<u64>>,
    pub matches_reference: bool,
    pub mismatches: Vec<TableMismatch>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableMismatch {
    pub k: usize,
    pub n: usize,
    pub computed: u64,
    pub reference: u64,
}

#[derive(Debug, Serialize)]
pub struct CoeffDump<'a> {
    pub id: &'a str,
    pub from: usize,
    pub to: usize,
    pub values: &'a [Coeff],
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn table(dump: &TableDump<'_>, format: Format) -> Result<String> {
    let width = dump.cells.first().map_or(0, Vec::len);
    let mut out = String::new();
    match format {
        Format::Json => return json(dump),
        Format::Csv => {
            out.push('k');
            for n in 1..=width {
                write!(out, ",{n}")?;
            }
            out.push('\n');
            for (i, row) in dump.cells.iter().enumerate() {
                write!(out, "{}", i + 1)?;
                for v in row {
                    write!(out, ",{v}")?;
                }
                out.push('\n');
            }
        }
        Format::Text => {
            write!(out, "{:>6} |", "k \\ n")?;
            for n in 1..=width {
                write!(out, "{n:>5}")?;
            }
            out.push('\n');
            writeln!(out, "{}", "-".repeat(8 + 5 * width))?;
            for (i, row) in dump.cells.iter().enumerate() {
                write!(out, "{:>6} |", i + 1)?;
                for v in row {
                    write!(out, "{v:>5}")?;
                }
                out.push('\n');
            }
            if dump.matches_reference {
                writeln!(out, "matches reference table ({}x{width})", dump.cells.len())?;
            } else {
                for m in &dump.mismatches {
                    writeln!(out, "MISMATCH k={} n={}: computed {} reference {}", m.k, m.n, m.computed, m.reference)?;
                }
            }
        }
    }
    Ok(out)
}

pub fn coeffs(dump: &CoeffDump<'_>, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(dump),
        Format::Csv => {
            out.push_str("n,value\n");
            for (i, v) in dump.values.iter().enumerate() {
                writeln!(out, "{},{v}", dump.from + i)?;
            }
        }
        // b-file layout: one "n value" pair per line
        Format::Text => {
            for (i, v) in dump.values.iter().enumerate() {
                writeln!(out, "{} {v}", dump.from + i)?;
            }
        }
    }
    Ok(out)
}

fn opt(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn finding_line(f: &Finding) -> String {
    let mut s = String::new();
    if let Some(t) = f.t {
        let _ = write!(s, "t={t} ");
    }
    if let Some(k) = f.k {
        let _ = write!(s, "k={k} ");
    }
    let _ = write!(s, "n={} value={}", f.n, f.value);
    if let Some(e) = f.expected {
        let _ = write!(s, " expected={e}");
    }
    s
}

pub fn report(r: &BiasReport, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => return json(r),
        Format::Csv => {
            out.push_str("label,t,k,n,value\n");
            for row in &r.differences {
                for (i, v) in row.values.iter().enumerate() {
                    writeln!(out, "\"{}\",{},{},{},{v}", row.label, opt(row.t), opt(row.k), row.n_start as usize + i)?;
                }
            }
        }
        Format::Text => {
            writeln!(out, "check: {}", r.check_id)?;
            let g = &r.range;
            write!(out, "range: n={}..={}", g.n_min, g.n_max)?;
            if let (Some(a), Some(b)) = (g.k_min, g.k_max) {
                write!(out, " k={a}..={b}")?;
            }
            if let Some(t) = g.t {
                write!(out, " t={t}")?;
            }
            out.push('\n');
            let sections: [(&str, &[Finding]); 5] = [
                ("violations", &r.violations),
                ("exceptions confirmed", &r.exceptions_confirmed),
                ("missing exceptions", &r.missing_exceptions),
                ("observations", &r.observations),
                ("reference mismatches", &r.reference_mismatches),
            ];
            for (name, items) in sections {
                if name == "reference mismatches" && items.is_empty() {
                    continue;
                }
                writeln!(out, "{name}: {}", items.len())?;
                for f in items {
                    writeln!(out, "  {}", finding_line(f))?;
                }
            }
            writeln!(out, "verdict: {}", serde_json::to_value(r.verdict)?.as_str().unwrap_or("?"))?;
        }
    }
    Ok(out)
}
