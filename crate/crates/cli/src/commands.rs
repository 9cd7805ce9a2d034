use anyhow::{bail, Context, Result};
use hookbias_core::bias::{self, BiasReport, CheckId};
use hookbias_core::genfun::{gf_b_2_k, gf_b_t_1, gf_p_k, B2Form};
use hookbias_core::reference::{ORDINARY_TABLE, TWO_REGULAR_TABLE};
use hookbias_core::{GfId, Oracle, TruncatedSeries};

use crate::config::RunConfig;
use crate::render::{self, CoeffDump, TableDump, TableMismatch};

/// Rendered output plus whether the command found what it was checking for.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Ordinary,
    #[value(name = "2regular")]
    TwoRegular,
}

pub const TABLE_SIZE: usize = 10;

/// Rows `k = 1..=10`, columns `n = 1..=10`, computed from the series.
pub fn compute_table(kind: TableKind) -> Result<Vec<Vec<u64>>> {
    let order = TABLE_SIZE;
    let rows: Vec<TruncatedSeries> = (1..=TABLE_SIZE as u32)
        .map(|k| match kind {
            TableKind::Ordinary => gf_p_k(k, order),
            TableKind::TwoRegular => two_regular_row(k, order),
        })
        .collect::<Result<_, _>>()?;
    Ok(rows
        .iter()
        .map(|s| (1..=TABLE_SIZE).map(|n| u64::try_from(s.coeff(n)).expect("counts are nonnegative")).collect())
        .collect())
}

/// `b_{2,k}` for the table: series for `k <= 3`, enumeration beyond.
fn two_regular_row(k: u32, order: usize) -> Result<TruncatedSeries, hookbias_core::GfError> {
    match k {
        1 => gf_b_t_1(2, order),
        2 | 3 => gf_b_2_k(k, order, B2Form::Original),
        _ => {
            let oracle = Oracle::default();
            let coeffs: Vec<i128> = (0..=order as u32)
                .map(|n| oracle.regular(n, 2, k).map(i128::from))
                .collect::<Result<_, _>>()
                .expect("table weights are far below the enumeration guard");
            Ok(TruncatedSeries::new(order, &coeffs))
        }
    }
}

pub fn tables(kind: TableKind, cfg: &RunConfig) -> Result<Outcome> {
    let (name, reference) = match kind {
        TableKind::Ordinary => ("ordinary", &ORDINARY_TABLE),
        TableKind::TwoRegular => ("2regular", &TWO_REGULAR_TABLE),
    };
    let cells = compute_table(kind)?;
    let mismatches: Vec<TableMismatch> = cells
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &v)| (i, j, v)))
        .filter(|&(i, j, v)| reference[i][j] != v)
        .map(|(i, j, v)| TableMismatch { k: i + 1, n: j + 1, computed: v, reference: reference[i][j] })
        .collect();
    let dump = TableDump { table: name, cells, matches_reference: mismatches.is_empty(), mismatches };
    Ok(Outcome { output: render::table(&dump, cfg.format)?, passed: dump.matches_reference })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckArgs {
    pub n_max: Option<u32>,
    pub k_max: Option<u32>,
    pub t: Option<u32>,
}

fn finish(report: BiasReport, cfg: &RunConfig) -> Result<Outcome> {
    Ok(Outcome { output: render::report(&report, cfg.format)?, passed: report.passed() })
}

pub fn verify(check: &str, args: CheckArgs, cfg: &RunConfig) -> Result<Outcome> {
    let id: CheckId = check.parse().map_err(|_| {
        let names: Vec<&str> = CheckId::VERIFY.iter().map(|c| c.as_str()).collect();
        anyhow::anyhow!("unknown check `{check}`; expected one of: {}", names.join(", "))
    })?;
    let n_max = args.n_max.unwrap_or(cfg.truncation as u32);
    let report = match id {
        CheckId::OrdinaryBias => {
            cfg.check_n_max(n_max)?;
            bias::verify_ordinary_bias(args.k_max.unwrap_or(50), n_max)?
        }
        CheckId::TwoRegularK1K2 => {
            cfg.check_n_max(n_max)?;
            bias::verify_2regular_12(n_max)?
        }
        CheckId::TwoRegularK2K3 => {
            cfg.check_n_max(n_max)?;
            bias::verify_2regular_23(n_max)?
        }
        CheckId::ClosedForms => {
            let (t_max, k_max) = (args.t.unwrap_or(6), args.k_max.unwrap_or(20));
            for t in 2..=t_max {
                cfg.check_guard(Some(t), k_max + 2)?;
            }
            bias::verify_closed_forms(t_max, k_max, &Oracle::new(cfg.guard))?
        }
        other => bail!("`{other}` is a scan; run `hookbias scan {other}`"),
    };
    finish(report, cfg)
}

pub fn scan(check: &str, args: CheckArgs, cfg: &RunConfig) -> Result<Outcome> {
    let id = CheckId::SCAN.iter().copied().find(|c| c.as_str() == check).with_context(|| {
        let names: Vec<&str> = CheckId::SCAN.iter().map(|c| c.as_str()).collect();
        format!("unknown scan `{check}`; expected one of: {}", names.join(", "))
    })?;
    let oracle = Oracle::new(cfg.guard);
    let report = match id {
        CheckId::ScanTwoRegular => {
            let n_max = args.n_max.unwrap_or(cfg.guard.two_regular);
            cfg.check_guard(Some(2), n_max)?;
            bias::scan_conjecture_2regular(args.k_max.unwrap_or(30), n_max, &oracle)?
        }
        CheckId::ScanThreeRegular => {
            let n_max = args.n_max.unwrap_or(cfg.truncation as u32);
            cfg.check_n_max(n_max)?;
            bias::scan_conjecture_3regular(n_max)?
        }
        CheckId::Exploratory => {
            let t = args.t.unwrap_or(3);
            let n_max = args.n_max.unwrap_or(40);
            cfg.check_guard(Some(t), n_max)?;
            bias::exploratory_table(t, args.k_max.unwrap_or(5), n_max, &oracle)?
        }
        _ => unreachable!("only scan ids are searched"),
    };
    finish(report, cfg)
}

/// Parses `A..B` or `A..=B` (both inclusive) or a single `N`.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().with_context(|| format!("bad range start in `{s}`"))?;
    let b: usize = b.trim().parse().with_context(|| format!("bad range end in `{s}`"))?;
    if a > b {
        bail!("empty range `{s}`");
    }
    Ok((a, b))
}

pub fn coeffs(name: &str, k: Option<u32>, t: Option<u32>, range: &str, cfg: &RunConfig) -> Result<Outcome> {
    let (from, to) = parse_range(range)?;
    if to > cfg.truncation {
        bail!("n = {to} is beyond the truncation order {} (raise --truncation)", cfg.truncation);
    }
    let id = GfId::parse_with(name, k, t)?;
    let series = id.evaluate(to)?;
    let dump = CoeffDump { id: id.name(), from, to, values: &series.coeffs()[from..=to] };
    Ok(Outcome { output: render::coeffs(&dump, cfg.format)?, passed: true })
}
