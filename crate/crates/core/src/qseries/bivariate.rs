use super::{add, mul_add, Coeff, DualSeries, SeriesError, TruncatedSeries};

/// A series `Σ c_{m,n} z^m q^n` truncated at `z^(M+1)` and `q^(N+1)`.
///
/// Truncation in both variables is a ring homomorphism, so every product keeps
/// exact coefficients for `m <= M`, `n <= N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    q_order: usize,
    z_degree: usize,
    /// row-major: `coeffs[m * (q_order + 1) + n]`
    coeffs: Vec<Coeff>,
}

impl BivariateSeries {
    pub fn zero(q_order: usize, z_degree: usize) -> Self {
        Self { q_order, z_degree, coeffs: vec![0; (q_order + 1) * (z_degree + 1)] }
    }

    pub fn one(q_order: usize, z_degree: usize) -> Self {
        let mut b = Self::zero(q_order, z_degree);
        b.coeffs[0] = 1;
        b
    }

    /// `Σ_m rows[m](q) z^m`; rows beyond `z_degree` are dropped.
    pub fn from_z_poly(rows: &[TruncatedSeries], q_order: usize, z_degree: usize) -> Self {
        let mut b = Self::zero(q_order, z_degree);
        for (m, row) in rows.iter().enumerate().take(z_degree + 1) {
            let n = row.order().min(q_order) + 1;
            b.row_mut(m)[..n].copy_from_slice(&row.coeffs()[..n]);
        }
        b
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn z_degree(&self) -> usize {
        self.z_degree
    }

    fn width(&self) -> usize {
        self.q_order + 1
    }

    fn row_slice(&self, m: usize) -> &[Coeff] {
        let w = self.width();
        &self.coeffs[m * w..(m + 1) * w]
    }

    fn row_mut(&mut self, m: usize) -> &mut [Coeff] {
        let w = self.width();
        &mut self.coeffs[m * w..(m + 1) * w]
    }

    /// Coefficient of `z^m q^n`.
    pub fn coeff(&self, m: usize, n: usize) -> Coeff {
        assert!(m <= self.z_degree && n <= self.q_order, "z^{m} q^{n} is outside the truncation box");
        self.coeffs[m * self.width() + n]
    }

    /// The `z^m` coefficient as a series in `q`.
    pub fn row(&self, m: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.q_order, self.row_slice(m))
    }

    fn shrink(&self, q_order: usize, z_degree: usize) -> Self {
        let rows: Vec<TruncatedSeries> = (0..=z_degree).map(|m| self.row(m)).collect();
        Self::from_z_poly(&rows, q_order, z_degree)
    }

    fn common_box(&self, other: &Self) -> (usize, usize) {
        (self.q_order.min(other.q_order), self.z_degree.min(other.z_degree))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        let (n, m) = self.common_box(other);
        let (mut a, b) = (self.shrink(n, m), other.shrink(n, m));
        for (x, &y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x = add(*x, y)?;
        }
        Ok(a)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.checked_add(&other.checked_scale(-1)?)
    }

    pub fn checked_scale(&self, c: Coeff) -> Result<Self, SeriesError> {
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = x.checked_mul(c).ok_or(SeriesError::Overflow)?;
        }
        Ok(out)
    }

    /// Full product, truncated to the common box.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let (q_order, z_degree) = self.common_box(other);
        let mut out = Self::zero(q_order, z_degree);
        let w = q_order + 1;
        for ma in 0..=z_degree {
            let ra = &self.row_slice(ma)[..w];
            for (i, &a) in ra.iter().enumerate().filter(|&(_, &a)| a != 0) {
                for mb in 0..=z_degree - ma {
                    let rb = &other.row_slice(mb)[..w - i];
                    let dst = &mut out.coeffs[(ma + mb) * w + i..(ma + mb + 1) * w];
                    for (slot, &b) in dst.iter_mut().zip(rb) {
                        *slot = mul_add(*slot, a, b)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by a `z`-free series.
    pub fn mul_q_series(&self, s: &TruncatedSeries) -> Result<Self, SeriesError> {
        let q_order = self.q_order.min(s.order());
        let rows = (0..=self.z_degree).map(|m| self.row(m).checked_mul(s)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_z_poly(&rows, q_order, self.z_degree))
    }

    /// Multiplies by the sparse polynomial `Σ c·z^dm·q^dn` given as `(dm, dn, c)` terms.
    pub fn mul_sparse(&self, terms: &[(usize, usize, Coeff)]) -> Result<Self, SeriesError> {
        let mut out = Self::zero(self.q_order, self.z_degree);
        let w = self.width();
        for &(dm, dn, c) in terms {
            if c == 0 || dm > self.z_degree || dn > self.q_order {
                continue;
            }
            for m in 0..=self.z_degree - dm {
                let src = &self.coeffs[m * w..m * w + (w - dn)];
                let dst = &mut out.coeffs[(m + dm) * w + dn..(m + dm + 1) * w];
                for (slot, &x) in dst.iter_mut().zip(src) {
                    *slot = mul_add(*slot, c, x)?;
                }
            }
        }
        Ok(out)
    }

    /// `F(1; q) = Σ_m c_{m,n} q^n`.
    pub fn collapse_at_z_one(&self) -> Result<TruncatedSeries, SeriesError> {
        let mut acc = vec![0; self.width()];
        for m in 0..=self.z_degree {
            for (slot, &c) in acc.iter_mut().zip(self.row_slice(m)) {
                *slot = add(*slot, c)?;
            }
        }
        Ok(TruncatedSeries::new(self.q_order, &acc))
    }

    /// `∂F/∂z` at `z = 1`: `Σ_m m·c_{m,n} q^n`.
    pub fn z_derivative_at_one(&self) -> Result<TruncatedSeries, SeriesError> {
        let mut acc = vec![0; self.width()];
        for m in 1..=self.z_degree {
            for (slot, &c) in acc.iter_mut().zip(self.row_slice(m)) {
                *slot = mul_add(*slot, m as Coeff, c)?;
            }
        }
        Ok(TruncatedSeries::new(self.q_order, &acc))
    }

    /// The pair `(F(1; q), ∂F/∂z|_{z=1})`.
    pub fn dual_at_z_one(&self) -> Result<DualSeries, SeriesError> {
        Ok(DualSeries::new(self.collapse_at_z_one()?, self.z_derivative_at_one()?))
    }
}
