//! Hook-length inequality checks, closed-form evaluators and conjecture scans.
//!
//! Every check produces a [`BiasReport`]. A difference that breaks a claimed
//! inequality inside its stated range is a *violation*. A stated exception seen
//! with its stated value is *confirmed*, and one that is absent or has another
//! value is *missing*. Values outside the claimed range are *observations* only.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::genfun::{gf_b_2_k, gf_b_t_1, gf_diff, gf_p_k, B2Form, GfError, GfId};
use crate::partitions::{Oracle, OracleError};
use crate::qseries::{Coeff, TruncatedSeries};
use crate::reference::{diff_3_12_printed_dense, DIFF_3_12_PRINTED_MAX};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiasError {
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

type Result<T> = std::result::Result<T, BiasError>;

/// Registered checks, named as on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// `p_(k)(n) >= p_(k+1)(n)` for `n != k+1`.
    OrdinaryBias,
    /// `b_{2,2}(n) >= b_{2,1}(n)` for `n > 4`.
    TwoRegularK1K2,
    /// `b_{2,2}(n) >= b_{2,3}(n)` for all `n`.
    TwoRegularK2K3,
    /// Closed forms for `b_{t,k}(k)` and `b_{t,k}(k+1)` against enumeration.
    ClosedForms,
    /// `b_{2,k}(n) >= b_{2,k+1}(n)` for `k >= 3`, `n != k+1`, by enumeration.
    ScanTwoRegular,
    /// `b_{3,2}(n) >= b_{3,1}(n)` for `n >= 28`.
    ScanThreeRegular,
    /// `b_{t,k} − b_{t,k+1}` tables with no claimed direction.
    Exploratory,
}

impl CheckId {
    pub const VERIFY: [CheckId; 4] =
        [CheckId::OrdinaryBias, CheckId::TwoRegularK1K2, CheckId::TwoRegularK2K3, CheckId::ClosedForms];
    pub const SCAN: [CheckId; 3] = [CheckId::ScanTwoRegular, CheckId::ScanThreeRegular, CheckId::Exploratory];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::OrdinaryBias => "ordinary-bias",
            CheckId::TwoRegularK1K2 => "two-regular-k1-k2",
            CheckId::TwoRegularK2K3 => "two-regular-k2-k3",
            CheckId::ClosedForms => "closed-forms",
            CheckId::ScanTwoRegular => "two-regular",
            CheckId::ScanThreeRegular => "three-regular",
            CheckId::Exploratory => "exploratory",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = BiasError;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::VERIFY
            .iter()
            .chain(&CheckId::SCAN)
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| BiasError::InvalidParameter(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Nothing is claimed, so nothing can fail.
    Exploratory,
}

/// Parameters a report was computed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRange {
    pub n_min: u32,
    pub n_max: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k_min: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<u32>,
}

/// One row of differences, `values[i]` belonging to `n = n_start + i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceRow {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<u32>,
    pub n_start: u32,
    pub values: Vec<Coeff>,
}

/// A single noteworthy coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Finding {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    pub n: u32,
    pub value: Coeff,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<Coeff>,
}

impl Finding {
    fn at(k: Option<u32>, n: u32, value: Coeff) -> Self {
        Self { t: None, k, n, value, expected: None }
    }

    fn expecting(mut self, expected: Coeff) -> Self {
        self.expected = Some(expected);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiasReport {
    pub check_id: CheckId,
    pub range: ReportRange,
    pub differences: Vec<DifferenceRow>,
    pub violations: Vec<Finding>,
    pub exceptions_confirmed: Vec<Finding>,
    /// Stated exceptions that were not seen with their stated value.
    pub missing_exceptions: Vec<Finding>,
    /// Values outside the claimed range, recorded but never counted against the claim.
    pub observations: Vec<Finding>,
    /// Computed values that disagree with a published listing of the same values.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub reference_mismatches: Vec<Finding>,
    pub verdict: Verdict,
}

impl BiasReport {
    fn new(check_id: CheckId, range: ReportRange) -> Self {
        Self {
            check_id,
            range,
            differences: Vec::new(),
            violations: Vec::new(),
            exceptions_confirmed: Vec::new(),
            missing_exceptions: Vec::new(),
            observations: Vec::new(),
            reference_mismatches: Vec::new(),
            verdict: Verdict::Pass,
        }
    }

    fn finish(mut self) -> Self {
        for v in [
            &mut self.violations,
            &mut self.exceptions_confirmed,
            &mut self.missing_exceptions,
            &mut self.observations,
            &mut self.reference_mismatches,
        ] {
            v.sort();
        }
        if self.verdict != Verdict::Exploratory {
            self.verdict = if self.violations.is_empty() && self.missing_exceptions.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
        }
        self
    }

    /// Merges a report over a disjoint chunk of the same check.
    fn absorb(&mut self, other: BiasReport) {
        self.differences.extend(other.differences);
        self.violations.extend(other.violations);
        self.exceptions_confirmed.extend(other.exceptions_confirmed);
        self.missing_exceptions.extend(other.missing_exceptions);
        self.observations.extend(other.observations);
        self.reference_mismatches.extend(other.reference_mismatches);
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

fn diff_values(a: &TruncatedSeries, b: &TruncatedSeries, n_max: u32) -> Result<Vec<Coeff>> {
    (0..=n_max as usize)
        .map(|n| {
            a.coeff(n)
                .checked_sub(b.coeff(n))
                .ok_or_else(|| BiasError::InvalidParameter("difference overflows i128".into()))
        })
        .collect()
}

/// Splits a difference row into violations, confirmed/missing exceptions and
/// observations. `expect(n)` gives the stated exception value at `n`, if any;
/// `claimed(n)` says whether the inequality is claimed at `n`.
fn classify_row(
    report: &mut BiasReport,
    k: Option<u32>,
    values: &[Coeff],
    expect: impl Fn(u32) -> Option<Coeff>,
    claimed: impl Fn(u32) -> bool,
) {
    for (n, &v) in values.iter().enumerate() {
        let n = n as u32;
        if let Some(e) = expect(n) {
            let f = Finding::at(k, n, v).expecting(e);
            if v == e {
                report.exceptions_confirmed.push(f);
            } else {
                report.missing_exceptions.push(f);
            }
        } else if !claimed(n) {
            report.observations.push(Finding::at(k, n, v));
        } else if v < 0 {
            report.violations.push(Finding::at(k, n, v));
        }
    }
}

/// `p_(k)(n) − p_(k+1)(n) >= 0` for `1 <= k <= k_max`, `n <= n_max`, with the single
/// exception `n = k+1` (for `k >= 2`) where the difference must be exactly −1.
pub fn verify_ordinary_bias(k_max: u32, n_max: u32) -> Result<BiasReport> {
    if k_max == 0 {
        return Err(BiasError::InvalidParameter("k_max must be at least 1".into()));
    }
    let order = n_max as usize;
    let series = (1..=k_max + 1)
        .into_par_iter()
        .map(|k| gf_p_k(k, order))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let range = ReportRange { n_min: 0, n_max, k_min: Some(1), k_max: Some(k_max), t: None };
    let mut report = BiasReport::new(CheckId::OrdinaryBias, range);
    for k in 1..=k_max {
        let values = diff_values(&series[k as usize - 1], &series[k as usize], n_max)?;
        classify_row(&mut report, Some(k), &values, |n| (k >= 2 && n == k + 1).then_some(-1), |_| true);
        report.differences.push(DifferenceRow {
            label: format!("p_({k}) - p_({})", k + 1),
            k: Some(k),
            t: None,
            n_start: 0,
            values,
        });
    }
    Ok(report.finish())
}

/// `b_{2,2}(n) − b_{2,1}(n) >= 0` for `4 < n <= n_max`; differences at `n <= 4` are observations.
pub fn verify_2regular_12(n_max: u32) -> Result<BiasReport> {
    let order = n_max as usize;
    let values = diff_values(&gf_b_2_k(2, order, B2Form::Original)?, &gf_b_t_1(2, order)?, n_max)?;
    let range = ReportRange { n_min: 0, n_max, k_min: Some(1), k_max: Some(2), t: Some(2) };
    let mut report = BiasReport::new(CheckId::TwoRegularK1K2, range);
    classify_row(&mut report, None, &values, |_| None, |n| n > 4);
    report.differences.push(DifferenceRow { label: "b_(2,2) - b_(2,1)".into(), k: None, t: Some(2), n_start: 0, values });
    Ok(report.finish())
}

/// `b_{2,2}(n) − b_{2,3}(n) >= 0` for all `n <= n_max`, read from the reduced product form.
pub fn verify_2regular_23(n_max: u32) -> Result<BiasReport> {
    let values = gf_diff(GfId::Diff223, n_max as usize)?.into_coeffs();
    let range = ReportRange { n_min: 0, n_max, k_min: Some(2), k_max: Some(3), t: Some(2) };
    let mut report = BiasReport::new(CheckId::TwoRegularK2K3, range);
    classify_row(&mut report, None, &values, |_| None, |_| true);
    report.differences.push(DifferenceRow { label: "b_(2,2) - b_(2,3)".into(), k: None, t: Some(2), n_start: 0, values });
    Ok(report.finish())
}

/// Closed-form values of `b_{2,k}` at `n = k` and `n = k+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedB2 {
    pub at_k: u64,
    pub at_k_plus_1: u64,
    /// `b_{2,k}(k+1) − b_{2,k+1}(k+1)`
    pub diff_next: i64,
}

/// `b_{2,k}(k)`, `b_{2,k}(k+1)` and `b_{2,k}(k+1) − b_{2,k+1}(k+1)` for `k >= 1`.
pub fn closed_b2(k: u32) -> Result<ClosedB2> {
    if k == 0 {
        return Err(BiasError::InvalidParameter("k must be at least 1".into()));
    }
    let k = k as u64;
    let odd = k % 2 == 1;
    Ok(ClosedB2 {
        at_k: if odd { (k + 1) / 2 } else { k / 2 },
        at_k_plus_1: if odd { 1 } else { 2 },
        diff_next: -(if odd { (k as i64 - 1) / 2 } else { (k as i64 - 2) / 2 }),
    })
}

/// `(b_{t,k}(k), b_{t,k}(k+1))` for `t >= 3`, `k >= 1`.
///
/// For `k <= 3` the second value comes from a fixed list of small cases. The
/// listed `b_{3,3}(4)` is 3 (the partitions (4), (2,2) and (1,1,1,1) each carry one 3-hook).
pub fn closed_bt(t: u32, k: u32) -> Result<(u64, u64)> {
    if t < 3 {
        return Err(BiasError::InvalidParameter(format!("closed_bt needs t >= 3, got {t} (use closed_b2 for t = 2)")));
    }
    if k == 0 {
        return Err(BiasError::InvalidParameter("k must be at least 1".into()));
    }
    let (t, k) = (t as u64, k as u64);
    let r = k % t;
    let exact = |num: u64| {
        debug_assert_eq!(num % t, 0, "closed form must divide exactly");
        num / t
    };
    let at_k = exact((t - 1) * k + r);
    let at_k_plus_1 = match k {
        1 => 2,
        2 => {
            if t == 3 {
                1
            } else {
                2
            }
        }
        3 => {
            if t == 4 {
                2
            } else {
                3
            }
        }
        _ if r == 0 => exact((t - 1) * k + t),
        _ if r <= t - 2 => exact((t - 1) * k + r),
        _ => exact((t - 1) * k - 1),
    };
    Ok((at_k, at_k_plus_1))
}

/// Compares [`closed_b2`] (t = 2) and [`closed_bt`] (3 <= t <= t_max) with enumeration for `1 <= k <= k_max`.
pub fn verify_closed_forms(t_max: u32, k_max: u32, oracle: &Oracle) -> Result<BiasReport> {
    if t_max < 2 || k_max == 0 {
        return Err(BiasError::InvalidParameter("closed forms need t_max >= 2 and k_max >= 1".into()));
    }
    let range = ReportRange { n_min: 1, n_max: k_max + 1, k_min: Some(1), k_max: Some(k_max), t: Some(t_max) };
    let chunks = (2..=t_max)
        .into_par_iter()
        .map(|t| -> Result<BiasReport> {
            let mut chunk = BiasReport::new(CheckId::ClosedForms, range);
            let table = oracle.hook_table(Some(t), k_max + 2)?;
            let mut at_k = Vec::new();
            let mut at_k1 = Vec::new();
            for k in 1..=k_max {
                let (ck, ck1) = if t == 2 {
                    let c = closed_b2(k)?;
                    // the difference identity is part of the same closed form
                    let next = table[k as usize + 1][k as usize + 1] as i64;
                    let d = table[k as usize + 1][k as usize] as i64 - next;
                    if d != c.diff_next {
                        chunk.violations.push(Finding {
                            t: Some(2),
                            k: Some(k),
                            n: k + 1,
                            value: d as Coeff,
                            expected: Some(c.diff_next as Coeff),
                        });
                    }
                    (c.at_k, c.at_k_plus_1)
                } else {
                    closed_bt(t, k)?
                };
                for (n, closed, row) in [(k, ck, &mut at_k), (k + 1, ck1, &mut at_k1)] {
                    let seen = table[n as usize][k as usize];
                    row.push(seen as Coeff - closed as Coeff);
                    if seen != closed {
                        chunk.violations.push(Finding {
                            t: Some(t),
                            k: Some(k),
                            n,
                            value: seen as Coeff,
                            expected: Some(closed as Coeff),
                        });
                    }
                }
            }
            chunk.differences.push(DifferenceRow {
                label: format!("b_({t},k)(k) enumerated - closed"),
                k: None,
                t: Some(t),
                n_start: 1,
                values: at_k,
            });
            chunk.differences.push(DifferenceRow {
                label: format!("b_({t},k)(k+1) enumerated - closed"),
                k: None,
                t: Some(t),
                n_start: 1,
                values: at_k1,
            });
            Ok(chunk)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = BiasReport::new(CheckId::ClosedForms, range);
    for c in chunks {
        report.absorb(c);
    }
    Ok(report.finish())
}

/// Enumerative scan of `b_{2,k}(n) >= b_{2,k+1}(n)` for `3 <= k <= k_max`,
/// `n <= n_max`, `n != k+1`. The differences at `n = k+1` must equal
/// [`ClosedB2::diff_next`].
pub fn scan_conjecture_2regular(k_max: u32, n_max: u32, oracle: &Oracle) -> Result<BiasReport> {
    if k_max < 3 {
        return Err(BiasError::InvalidParameter("the two-regular scan starts at k = 3".into()));
    }
    let table = oracle.hook_table(Some(2), n_max)?;
    let at = |n: usize, k: u32| table[n].get(k as usize).copied().unwrap_or(0) as Coeff;
    let range = ReportRange { n_min: 0, n_max, k_min: Some(3), k_max: Some(k_max), t: Some(2) };
    let chunks = (3..=k_max)
        .into_par_iter()
        .map(|k| -> Result<BiasReport> {
            let mut chunk = BiasReport::new(CheckId::ScanTwoRegular, range);
            let values: Vec<Coeff> = (0..=n_max as usize).map(|n| at(n, k) - at(n, k + 1)).collect();
            let expected = closed_b2(k)?.diff_next as Coeff;
            classify_row(&mut chunk, Some(k), &values, |n| (n == k + 1).then_some(expected), |_| true);
            chunk.differences.push(DifferenceRow {
                label: format!("b_(2,{k}) - b_(2,{})", k + 1),
                k: Some(k),
                t: Some(2),
                n_start: 0,
                values,
            });
            Ok(chunk)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = BiasReport::new(CheckId::ScanTwoRegular, range);
    for c in chunks {
        report.absorb(c);
    }
    Ok(report.finish())
}

/// First `n` from which `b_{3,2}(n) >= b_{3,1}(n)` is claimed.
pub const THREE_REGULAR_THRESHOLD: u32 = 28;

/// `b_{3,2}(n) − b_{3,1}(n) >= 0` for `28 <= n <= n_max`. Negative values below 28
/// are observations. Coefficients through `n = 70` are compared with the
/// published listing, and disagreements go to `reference_mismatches`.
pub fn scan_conjecture_3regular(n_max: u32) -> Result<BiasReport> {
    let values = gf_diff(GfId::Diff312, n_max as usize)?.into_coeffs();
    let range = ReportRange { n_min: 0, n_max, k_min: Some(1), k_max: Some(2), t: Some(3) };
    let mut report = BiasReport::new(CheckId::ScanThreeRegular, range);
    for (n, &v) in values.iter().enumerate() {
        let n32 = n as u32;
        if n32 < THREE_REGULAR_THRESHOLD {
            if v < 0 {
                report.observations.push(Finding::at(None, n32, v));
            }
        } else if v < 0 {
            report.violations.push(Finding::at(None, n32, v));
        }
    }
    let printed = diff_3_12_printed_dense();
    for n in 0..=DIFF_3_12_PRINTED_MAX.min(n_max as usize) {
        if printed[n] != values[n] {
            report.reference_mismatches.push(Finding::at(None, n as u32, values[n]).expecting(printed[n]));
        }
    }
    report.differences.push(DifferenceRow { label: "b_(3,2) - b_(3,1)".into(), k: None, t: Some(3), n_start: 0, values });
    Ok(report.finish())
}

/// `b_{t,k}(n) − b_{t,k+1}(n)` for `1 <= k <= k_max`, `n <= n_max`, by enumeration.
/// No direction is claimed; negative entries are listed as observations.
pub fn exploratory_table(t: u32, k_max: u32, n_max: u32, oracle: &Oracle) -> Result<BiasReport> {
    if t < 2 || k_max == 0 {
        return Err(BiasError::InvalidParameter("exploratory tables need t >= 2 and k_max >= 1".into()));
    }
    let table = oracle.hook_table(Some(t), n_max)?;
    let at = |n: usize, k: u32| table[n].get(k as usize).copied().unwrap_or(0) as Coeff;
    let range = ReportRange { n_min: 0, n_max, k_min: Some(1), k_max: Some(k_max), t: Some(t) };
    let mut report = BiasReport::new(CheckId::Exploratory, range);
    report.verdict = Verdict::Exploratory;
    for k in 1..=k_max {
        let values: Vec<Coeff> = (0..=n_max as usize).map(|n| at(n, k) - at(n, k + 1)).collect();
        for (n, &v) in values.iter().enumerate().filter(|(_, &v)| v < 0) {
            report.observations.push(Finding { t: Some(t), ..Finding::at(Some(k), n as u32, v) });
        }
        report.differences.push(DifferenceRow {
            label: format!("b_({t},{k}) - b_({t},{})", k + 1),
            k: Some(k),
            t: Some(t),
            n_start: 0,
            values,
        });
    }
    Ok(report.finish())
}
