use std::fmt;

use super::{add, mul_add, sub, Coeff, SeriesError};

/// Sign of the base in a q-Pochhammer symbol `(±q^a; q^step)_∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// `(q^a; q^step)_∞ = ∏ (1 − q^(a + j·step))`
    Plus,
    /// `(−q^a; q^step)_∞ = ∏ (1 + q^(a + j·step))`
    Minus,
}

/// A power series `c_0 + c_1 q + … + c_N q^N` modulo `q^(N+1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Coeff>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![0; order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 1, order)
    }

    /// `c·q^exp`, or zero when `exp > order`.
    pub fn monomial(exp: usize, c: Coeff, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Series with the given leading coefficients, zero-padded or cut to `order`.
    pub fn new(order: usize, coeffs: &[Coeff]) -> Self {
        let mut s = Self::zero(order);
        let n = coeffs.len().min(order + 1);
        s.coeffs[..n].copy_from_slice(&coeffs[..n]);
        s
    }

    /// Sparse polynomial `Σ c·q^e`; terms beyond `order` are dropped.
    pub fn polynomial(terms: &[(usize, Coeff)], order: usize) -> Result<Self, SeriesError> {
        let mut s = Self::zero(order);
        for &(e, c) in terms {
            if e <= order {
                s.coeffs[e] = add(s.coeffs[e], c)?;
            }
        }
        Ok(s)
    }

    /// `q^a / (1 − q^m) = q^a + q^(a+m) + q^(a+2m) + …`
    pub fn geometric(a: usize, m: usize, order: usize) -> Result<Self, SeriesError> {
        if m == 0 {
            return Err(SeriesError::InvalidArgument("geometric ratio exponent must be positive"));
        }
        let mut s = Self::zero(order);
        for e in (a..=order).step_by(m) {
            s.coeffs[e] = 1;
        }
        Ok(s)
    }

    /// `(±q^a; q^step)_∞` truncated at `order`; factors with exponent above
    /// `order` are 1 and skipped.
    pub fn pochhammer(a: usize, step: usize, sign: Sign, order: usize) -> Result<Self, SeriesError> {
        if a == 0 || step == 0 {
            return Err(SeriesError::InvalidArgument("pochhammer needs a >= 1 and step >= 1"));
        }
        let c = match sign {
            Sign::Plus => -1,
            Sign::Minus => 1,
        };
        let mut s = Self::one(order);
        for e in (a..=order).step_by(step) {
            s.mul_binomial_in_place(e, c)?;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`.
    ///
    /// # Panics
    /// If `n` exceeds the truncation order (the value is unknown there).
    pub fn coeff(&self, n: usize) -> Coeff {
        assert!(n <= self.order(), "q^{n} is beyond truncation order {}", self.order());
        self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coeff> {
        self.coeffs
    }

    /// Reduces modulo `q^(order+1)`; no-op when `order` is not smaller.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// True when every coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(Coeff, Coeff) -> Result<Coeff, SeriesError>,
    ) -> Result<Self, SeriesError> {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f(a, b)).collect::<Result<_, _>>()?;
        Ok(Self { coeffs })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.zip_with(other, add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.zip_with(other, sub)
    }

    pub fn checked_neg(&self) -> Result<Self, SeriesError> {
        self.checked_scale(-1)
    }

    pub fn checked_scale(&self, c: Coeff) -> Result<Self, SeriesError> {
        let coeffs =
            self.coeffs.iter().map(|&a| a.checked_mul(c).ok_or(SeriesError::Overflow)).collect::<Result<_, _>>()?;
        Ok(Self { coeffs })
    }

    /// Cauchy product modulo `q^(min order + 1)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let order = self.order().min(other.order());
        // iterate over the sparser operand's nonzero terms
        let (sparse, dense) = if nonzero_count(&self.coeffs[..=order]) <= nonzero_count(&other.coeffs[..=order]) {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![0; order + 1];
        for (i, &a) in sparse.coeffs[..=order].iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in out[i..].iter_mut().zip(&dense.coeffs) {
                *slot = mul_add(*slot, a, b)?;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies in place by `1 + c·q^e`.
    pub fn mul_binomial_in_place(&mut self, e: usize, c: Coeff) -> Result<(), SeriesError> {
        if e == 0 {
            return self.coeffs.iter_mut().try_for_each(|x| {
                *x = x.checked_mul(add(1, c)?).ok_or(SeriesError::Overflow)?;
                Ok(())
            });
        }
        for n in (e..self.coeffs.len()).rev() {
            self.coeffs[n] = mul_add(self.coeffs[n], c, self.coeffs[n - e])?;
        }
        Ok(())
    }

    /// Multiplies in place by the geometric series `1/(1 − q^m) = Σ q^(jm)`, `m >= 1`.
    pub fn mul_geometric_in_place(&mut self, m: usize) -> Result<(), SeriesError> {
        if m == 0 {
            return Err(SeriesError::InvalidArgument("geometric ratio exponent must be positive"));
        }
        for n in m..self.coeffs.len() {
            self.coeffs[n] = add(self.coeffs[n], self.coeffs[n - m])?;
        }
        Ok(())
    }

    /// Multiplicative inverse of a series with constant term `±1`.
    pub fn invert_unit(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(SeriesError::NonUnitConstant(c0));
        }
        let tail: Vec<(usize, Coeff)> =
            self.coeffs.iter().enumerate().skip(1).filter(|&(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        let mut inv = vec![0; self.coeffs.len()];
        inv[0] = c0;
        for n in 1..inv.len() {
            let mut acc: Coeff = 0;
            for &(i, c) in tail.iter().take_while(|&&(i, _)| i <= n) {
                acc = mul_add(acc, c, inv[n - i])?;
            }
            // c0 * inv[n] = -acc, and c0 = ±1 is its own inverse
            inv[n] = acc.checked_mul(-c0).ok_or(SeriesError::Overflow)?;
        }
        Ok(Self { coeffs: inv })
    }
}

fn nonzero_count(c: &[Coeff]) -> usize {
    c.iter().filter(|&&x| x != 0).count()
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (order {})", self.order())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, &c) in self.coeffs.iter().enumerate().filter(|&(_, &c)| c != 0) {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            let body = match (n, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "q".to_string(),
                (1, m) => format!("{m}q"),
                (n, 1) => format!("q^{n}"),
                (n, m) => format!("{m}q^{n}"),
            };
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{sign}{body}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}
