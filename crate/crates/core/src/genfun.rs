//! Generating functions for `p(n)`, `p_(k)(n)` and `b_{t,k}(n)`.
//!
//! Rational terms `q^a/(1 − q^m)` become geometric series and infinite products
//! become truncated q-Pochhammer symbols, so every function here is an exact
//! [`TruncatedSeries`] of the requested order. Several functions also have a
//! second construction (`*_via_dual`, `*_bivariate`, [`B2Form::Rewritten`])
//! that reaches the same series along an independent algebraic route.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qseries::{BivariateSeries, Coeff, DualSeries, SeriesError, Sign, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown generating function `{0}`")]
    UnknownId(String),
}

type Result<T> = std::result::Result<T, GfError>;

/// Registry of the implemented generating functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GfId {
    /// `Σ p(n) q^n`
    P,
    /// `Σ p_(k)(n) q^n`
    PK { k: u32 },
    /// `Σ_m m·p_(k)(m, n)` read off the bivariate series.
    PKBivariate { k: u32 },
    /// `Σ b_{t,1}(n) q^n`
    BT1 { t: u32 },
    B22,
    B22Alt,
    B23,
    B23Alt,
    B32,
    B42,
    /// `b_{2,2} − b_{2,3}` in its fully reduced product form.
    Diff223,
    /// `b_{3,2} − b_{3,1}`
    Diff312,
    /// `p_(k) − p_(k+1)`
    GK { k: u32 },
    /// `(q^k − q^(k+1))/(q²;q)_∞ + q^(k+1)`
    HKCorollary { k: u32 },
}

impl GfId {
    /// Registry names accepted by [`GfId::parse_with`].
    pub const NAMES: [&'static str; 14] = [
        "p",
        "p_k",
        "p_k_bivariate",
        "b_t_1",
        "b_2_2",
        "b_2_2_alt",
        "b_2_3",
        "b_2_3_alt",
        "b_3_2",
        "b_4_2",
        "diff_2_23",
        "diff_3_12",
        "g_k",
        "h_k",
    ];

    /// Resolves a registry name, taking `k` or `t` from the arguments where the
    /// function is parameterized.
    pub fn parse_with(name: &str, k: Option<u32>, t: Option<u32>) -> Result<Self> {
        let need_k = || k.ok_or_else(|| GfError::InvalidParameter(format!("`{name}` requires k")));
        let id = match name.to_ascii_lowercase().as_str() {
            "p" => GfId::P,
            "p_k" => GfId::PK { k: need_k()? },
            "p_k_bivariate" => GfId::PKBivariate { k: need_k()? },
            "b_t_1" => GfId::BT1 { t: t.ok_or_else(|| GfError::InvalidParameter("`b_t_1` requires t".into()))? },
            "b_2_2" => GfId::B22,
            "b_2_2_alt" => GfId::B22Alt,
            "b_2_3" => GfId::B23,
            "b_2_3_alt" => GfId::B23Alt,
            "b_3_2" => GfId::B32,
            "b_4_2" => GfId::B42,
            "diff_2_23" => GfId::Diff223,
            "diff_3_12" => GfId::Diff312,
            "g_k" => GfId::GK { k: need_k()? },
            "h_k" => GfId::HKCorollary { k: need_k()? },
            _ => return Err(GfError::UnknownId(name.to_string())),
        };
        id.validate()?;
        Ok(id)
    }

    fn validate(self) -> Result<()> {
        match self {
            GfId::PK { k } | GfId::PKBivariate { k } | GfId::GK { k } | GfId::HKCorollary { k } if k == 0 => {
                Err(GfError::InvalidParameter("k must be at least 1".into()))
            }
            GfId::BT1 { t } if t < 2 => Err(GfError::InvalidParameter(format!("t must be at least 2, got {t}"))),
            _ => Ok(()),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GfId::P => "p",
            GfId::PK { .. } => "p_k",
            GfId::PKBivariate { .. } => "p_k_bivariate",
            GfId::BT1 { .. } => "b_t_1",
            GfId::B22 => "b_2_2",
            GfId::B22Alt => "b_2_2_alt",
            GfId::B23 => "b_2_3",
            GfId::B23Alt => "b_2_3_alt",
            GfId::B32 => "b_3_2",
            GfId::B42 => "b_4_2",
            GfId::Diff223 => "diff_2_23",
            GfId::Diff312 => "diff_3_12",
            GfId::GK { .. } => "g_k",
            GfId::HKCorollary { .. } => "h_k",
        }
    }

    /// Series of this generating function modulo `q^(order+1)`.
    pub fn evaluate(self, order: usize) -> Result<TruncatedSeries> {
        self.validate()?;
        match self {
            GfId::P => gf_p(order),
            GfId::PK { k } => gf_p_k(k, order),
            GfId::PKBivariate { k } => {
                let z_degree = order / k as usize;
                Ok(gf_p_k_bivariate(k, order, z_degree)?.z_derivative_at_one()?)
            }
            GfId::BT1 { t } => gf_b_t_1(t, order),
            GfId::B22 => gf_b_2_k(2, order, B2Form::Original),
            GfId::B22Alt => gf_b_2_k(2, order, B2Form::Rewritten),
            GfId::B23 => gf_b_2_k(3, order, B2Form::Original),
            GfId::B23Alt => gf_b_2_k(3, order, B2Form::Rewritten),
            GfId::B32 => gf_b_3_2(order),
            GfId::B42 => gf_b_4_2(order),
            GfId::Diff223 | GfId::Diff312 | GfId::GK { .. } | GfId::HKCorollary { .. } => gf_diff(self, order),
        }
    }
}

impl fmt::Display for GfId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfId::PK { k } | GfId::PKBivariate { k } | GfId::GK { k } | GfId::HKCorollary { k } => {
                write!(f, "{}[k={k}]", self.name())
            }
            GfId::BT1 { t } => write!(f, "{}[t={t}]", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

impl FromStr for GfId {
    type Err = GfError;

    /// Parses unparameterized names only; use [`GfId::parse_with`] for `k`/`t`.
    fn from_str(s: &str) -> Result<Self> {
        GfId::parse_with(s, None, None)
    }
}

/// Which of the two equivalent closed forms to use for `b_{2,2}` and `b_{2,3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum B2Form {
    /// Expressed through `1/(q;q²)_∞` and `(−q;q)_∞`.
    Original,
    /// Factored through `(−q³;q)_∞` with `1/(1 − q²)` denominators.
    Rewritten,
}

fn series(r: std::result::Result<TruncatedSeries, SeriesError>) -> Result<TruncatedSeries> {
    r.map_err(GfError::from)
}

/// `(Σ c·q^e) / (1 − q^m)`.
fn over_one_minus(terms: &[(usize, Coeff)], m: usize, order: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::polynomial(terms, order)?;
    s.mul_geometric_in_place(m)?;
    Ok(s)
}

/// `1/(q;q)_∞`.
fn inverse_euler(order: usize) -> Result<TruncatedSeries> {
    series(TruncatedSeries::pochhammer(1, 1, Sign::Plus, order)?.invert_unit())
}

/// `(q^t;q^t)_∞ / (q;q)_∞`, the generating function of t-regular partitions.
pub fn regular_partition_gf(t: u32, order: usize) -> Result<TruncatedSeries> {
    if t < 2 {
        return Err(GfError::InvalidParameter(format!("t must be at least 2, got {t}")));
    }
    let num = TruncatedSeries::pochhammer(t as usize, t as usize, Sign::Plus, order)?;
    series(num.checked_mul(&inverse_euler(order)?))
}

/// `Σ p(n) q^n = 1/(q;q)_∞`.
pub fn gf_p(order: usize) -> Result<TruncatedSeries> {
    inverse_euler(order)
}

/// `Σ p_(k)(n) q^n = k q^k / ((1 − q^k)(q;q)_∞)`.
pub fn gf_p_k(k: u32, order: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(GfError::InvalidParameter("k must be at least 1".into()));
    }
    let k = k as usize;
    let geo = TruncatedSeries::geometric(k, k, order)?.checked_scale(k as Coeff)?;
    series(geo.checked_mul(&inverse_euler(order)?))
}

/// `F_k(z; q) = (−(z−1)q^k; q^k)^k_∞ / (q;q)_∞ = Σ p_(k)(m, n) z^m q^n`.
///
/// `z_degree = order / k` is always enough: a partition of `n` has at most
/// `n / k` hooks of length `k`.
pub fn gf_p_k_bivariate(k: u32, order: usize, z_degree: usize) -> Result<BivariateSeries> {
    if k == 0 {
        return Err(GfError::InvalidParameter("k must be at least 1".into()));
    }
    let k = k as usize;
    let mut b = BivariateSeries::one(order, z_degree);
    for e in (k..=order).step_by(k) {
        // 1 + (z − 1) q^e = 1 − q^e + z q^e
        let factor = [(0, 0, 1), (0, e, -1), (1, e, 1)];
        for _ in 0..k {
            b = b.mul_sparse(&factor)?;
        }
    }
    Ok(b.mul_q_series(&inverse_euler(order)?)?)
}

/// `∂F_k/∂z` at `z = 1`, propagated through the product as a dual number.
pub fn gf_p_k_via_dual(k: u32, order: usize) -> Result<TruncatedSeries> {
    if k == 0 {
        return Err(GfError::InvalidParameter("k must be at least 1".into()));
    }
    let k = k as usize;
    let factors: Vec<(TruncatedSeries, TruncatedSeries)> = (k..=order)
        .step_by(k)
        .flat_map(|e| {
            let mut value = TruncatedSeries::one(order);
            value.mul_binomial_in_place(e, -1).expect("binomial on unit series");
            std::iter::repeat((value, TruncatedSeries::monomial(e, 1, order))).take(k)
        })
        .collect();
    let d = crate::qseries::dual_product(factors.iter().map(|(v, z)| (v, z)), order)?;
    Ok(d.mul_q_series(&inverse_euler(order)?)?.deriv().clone())
}

/// `Σ b_{t,1}(n) q^n = (q^t;q^t)_∞/(q;q)_∞ · (q/(1−q) − q^t/(1−q^t))`, `t ≥ 2`.
pub fn gf_b_t_1(t: u32, order: usize) -> Result<TruncatedSeries> {
    let eta = regular_partition_gf(t, order)?;
    let t = t as usize;
    let inner = TruncatedSeries::geometric(1, 1, order)?.checked_sub(&TruncatedSeries::geometric(t, t, order)?)?;
    series(eta.checked_mul(&inner))
}

/// `b_{t,1}` as `∂/∂z ∏_{t ∤ n} (1 + z q^n/(1 − q^n))` at `z = 1`: each distinct
/// part size contributes exactly one hook of length 1.
pub fn gf_b_t_1_via_dual(t: u32, order: usize) -> Result<TruncatedSeries> {
    if t < 2 {
        return Err(GfError::InvalidParameter(format!("t must be at least 2, got {t}")));
    }
    let one = TruncatedSeries::one(order);
    let zcoeffs = (1..=order)
        .filter(|n| n % t as usize != 0)
        .map(|n| TruncatedSeries::geometric(n, n, order))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let d = crate::qseries::dual_product(zcoeffs.iter().map(|z| (&one, z)), order)?;
    Ok(d.into_parts().1)
}

/// `Σ b_{2,k}(n) q^n` for `k ∈ {2, 3}` in either closed form.
pub fn gf_b_2_k(k: u32, order: usize, form: B2Form) -> Result<TruncatedSeries> {
    let neg_q1 = || TruncatedSeries::pochhammer(1, 1, Sign::Minus, order);
    let neg_q3 = || TruncatedSeries::pochhammer(3, 1, Sign::Minus, order);
    match (k, form) {
        (2, B2Form::Original) => {
            // 1/(q;q²)_∞ · (q² + Σ_{m odd ≥ 3} (q^m + q^(2m)))
            let mut inner = TruncatedSeries::monomial(2, 1, order);
            let mut odd = TruncatedSeries::geometric(3, 2, order)?;
            odd = odd.checked_add(&TruncatedSeries::geometric(6, 4, order)?)?;
            inner = inner.checked_add(&odd)?;
            let odd_parts = TruncatedSeries::pochhammer(1, 2, Sign::Plus, order)?.invert_unit()?;
            series(odd_parts.checked_mul(&inner))
        }
        (2, B2Form::Rewritten) => {
            // (−q³;q)_∞ (q² + 2q³ + q⁴ + q⁵ + q⁶)/(1 − q²)
            let frac = over_one_minus(&[(2, 1), (3, 2), (4, 1), (5, 1), (6, 1)], 2, order)?;
            series(neg_q3()?.checked_mul(&frac))
        }
        (3, B2Form::Original) => {
            // (−q³;q)_∞ q³(1 + q³)/(1 − q²) + (−q;q)_∞ (q⁶/(1 − q⁴) + q³/(1 − q⁶))
            let a = neg_q3()?.checked_mul(&over_one_minus(&[(3, 1), (6, 1)], 2, order)?)?;
            let inner = TruncatedSeries::geometric(6, 4, order)?.checked_add(&TruncatedSeries::geometric(3, 6, order)?)?;
            let b = neg_q1()?.checked_mul(&inner)?;
            series(a.checked_add(&b))
        }
        (3, B2Form::Rewritten) => {
            // (−q³;q)_∞ (q³ + 2q⁶ + q⁷)/(1 − q²) + (−q;q)_∞ q³/(1 − q⁶)
            let a = neg_q3()?.checked_mul(&over_one_minus(&[(3, 1), (6, 2), (7, 1)], 2, order)?)?;
            let b = neg_q1()?.checked_mul(&TruncatedSeries::geometric(3, 6, order)?)?;
            series(a.checked_add(&b))
        }
        _ => Err(GfError::InvalidParameter(format!("b_(2,k) closed forms exist for k = 2, 3 only, got k = {k}"))),
    }
}

/// `Σ b_{3,2}(n) q^n = (q³;q³)_∞/(q;q)_∞ (q²/(1−q) + q²/(1−q²) − 2q³/(1−q³))`.
pub fn gf_b_3_2(order: usize) -> Result<TruncatedSeries> {
    let eta = regular_partition_gf(3, order)?;
    let inner = TruncatedSeries::geometric(2, 1, order)?
        .checked_add(&TruncatedSeries::geometric(2, 2, order)?)?
        .checked_sub(&TruncatedSeries::geometric(3, 3, order)?.checked_scale(2)?)?;
    series(eta.checked_mul(&inner))
}

/// `Σ b_{4,2}(n) q^n = (q⁴;q⁴)_∞/(q;q)_∞ (q² + Σ_{n≥2, 4∤n} (q^n + q^(2n)) − Σ_{n≥0} (q^(8n+3) + q^(8n+5)))`.
///
/// The subtracted sum counts adjacent part pairs `(4n+2, 4n+1)` and
/// `(4n+3, 4n+2)`; its logarithmic derivative carries no extra product factor.
pub fn gf_b_4_2(order: usize) -> Result<TruncatedSeries> {
    let inner = b_t_2_repeat_and_gap_terms(4, order)?
        .checked_sub(&TruncatedSeries::geometric(3, 8, order)?)?
        .checked_sub(&TruncatedSeries::geometric(5, 8, order)?)?;
    series(regular_partition_gf(4, order)?.checked_mul(&inner))
}

/// `q² + Σ_{n ≥ 2, t ∤ n} (q^n + q^(2n))`.
fn b_t_2_repeat_and_gap_terms(t: usize, order: usize) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::monomial(2, 1, order);
    for n in (2..=order).filter(|n| n % t != 0) {
        s = s.checked_add(&TruncatedSeries::polynomial(&[(n, 1), (2 * n, 1)], order)?)?;
    }
    Ok(s)
}

/// Dual factors of the series tracking repeated part sizes plus part sizes
/// above 1, for `t`-regular partitions:
/// `(1 + q + z q²/(1−q)) ∏_{n≥2, t∤n} (1 + z q^n + z² q^(2n)/(1−q^n))`.
fn repeat_and_size_factors(t: usize, order: usize) -> Result<DualSeries> {
    let first = DualSeries::from_z_poly(&[
        TruncatedSeries::polynomial(&[(0, 1), (1, 1)], order)?,
        TruncatedSeries::geometric(2, 1, order)?,
    ])?;
    let rest = (2..=order).filter(|n| n % t != 0).map(|n| {
        DualSeries::from_z_poly(&[
            TruncatedSeries::one(order),
            TruncatedSeries::monomial(n, 1, order),
            TruncatedSeries::geometric(2 * n, n, order)?,
        ])
    });
    let mut acc = first;
    for f in rest {
        acc = acc.checked_mul(&f?)?;
    }
    Ok(acc)
}

/// `b_{3,2}` as the difference of two `z`-derivatives at `z = 1`: hooks of length 2
/// are repeated part sizes plus part sizes followed by a gap of at least 2.
pub fn gf_b_3_2_via_dual(order: usize) -> Result<TruncatedSeries> {
    let u = repeat_and_size_factors(3, order)?;
    // adjacent pairs (3n+2, 3n+1) are the only gaps of exactly 1 above the smallest part
    let mut v = DualSeries::one(order);
    for n in (0..).map(|n| 3 * n + 1).take_while(|&a| a <= order) {
        let a = TruncatedSeries::geometric(n, n, order)?;
        let b = TruncatedSeries::geometric(n + 1, n + 1, order)?;
        let ab = a.checked_mul(&b)?;
        let none_or_one = TruncatedSeries::one(order).checked_add(&a)?.checked_add(&b)?;
        v = v.checked_mul(&DualSeries::from_z_poly(&[none_or_one, ab])?)?;
    }
    series(u.deriv().checked_sub(v.deriv()))
}

/// `b_{4,2}` by the same two-derivative construction as [`gf_b_3_2_via_dual`].
pub fn gf_b_4_2_via_dual(order: usize) -> Result<TruncatedSeries> {
    let u = repeat_and_size_factors(4, order)?;
    let mut v = DualSeries::one(order);
    for base in (0..).map(|n| 4 * n).take_while(|&b| b < order) {
        let g = |r: usize| TruncatedSeries::geometric(base + r, base + r, order);
        let (a, b, c) = (g(1)?, g(2)?, g(3)?);
        // subsets of {4n+1, 4n+2, 4n+3} by number of unit gaps: {}, {a}, {b}, {c}, {a,c} → 0;
        // {a,b}, {b,c} → 1; {a,b,c} → 2
        let ac = a.checked_mul(&c)?;
        let z0 = TruncatedSeries::one(order).checked_add(&a)?.checked_add(&b)?.checked_add(&c)?.checked_add(&ac)?;
        let z1 = a.checked_mul(&b)?.checked_add(&b.checked_mul(&c)?)?;
        let z2 = ac.checked_mul(&b)?;
        v = v.checked_mul(&DualSeries::from_z_poly(&[z0, z1, z2])?)?;
    }
    series(u.deriv().checked_sub(v.deriv()))
}

/// Difference series: `diff_2_23`, `diff_3_12`, `G_k` and `H_k`.
pub fn gf_diff(id: GfId, order: usize) -> Result<TruncatedSeries> {
    match id {
        GfId::Diff223 => {
            // (−q⁴;q)_∞ ((q² + q⁷)/(1 − q³) + q⁴ + q⁵ + q⁷ + q⁸)
            let frac = over_one_minus(&[(2, 1), (7, 1)], 3, order)?
                .checked_add(&TruncatedSeries::polynomial(&[(4, 1), (5, 1), (7, 1), (8, 1)], order)?)?;
            series(TruncatedSeries::pochhammer(4, 1, Sign::Minus, order)?.checked_mul(&frac))
        }
        GfId::Diff312 => series(gf_b_3_2(order)?.checked_sub(&gf_b_t_1(3, order)?)),
        GfId::GK { k } => series(gf_p_k(k, order)?.checked_sub(&gf_p_k(k + 1, order)?)),
        GfId::HKCorollary { k } => {
            if k == 0 {
                return Err(GfError::InvalidParameter("k must be at least 1".into()));
            }
            let k = k as usize;
            let a = TruncatedSeries::pochhammer(2, 1, Sign::Plus, order)?.invert_unit()?;
            let num = TruncatedSeries::polynomial(&[(k, 1), (k + 1, -1)], order)?;
            series(num.checked_mul(&a)?.checked_add(&TruncatedSeries::monomial(k + 1, 1, order)))
        }
        other => Err(GfError::InvalidParameter(format!("`{other}` is not a difference series"))),
    }
}
