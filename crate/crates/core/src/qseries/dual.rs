use super::{SeriesError, TruncatedSeries};

/// `(F(1; q), ∂F/∂z|_{z=1})` for a series `F(z; q)`, i.e. `F` evaluated at the
/// dual number `z = 1 + ε` with `ε² = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualSeries {
    value: TruncatedSeries,
    deriv: TruncatedSeries,
}

impl DualSeries {
    pub fn new(value: TruncatedSeries, deriv: TruncatedSeries) -> Self {
        let order = value.order().min(deriv.order());
        Self { value: value.truncate(order), deriv: deriv.truncate(order) }
    }

    /// A `z`-free factor: derivative zero.
    pub fn constant(value: TruncatedSeries) -> Self {
        let order = value.order();
        Self { value, deriv: TruncatedSeries::zero(order) }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(TruncatedSeries::one(order))
    }

    /// `value + z·zcoeff` at `z = 1 + ε`.
    pub fn from_z_linear(value: &TruncatedSeries, zcoeff: &TruncatedSeries) -> Result<Self, SeriesError> {
        Ok(Self::new(value.checked_add(zcoeff)?, zcoeff.clone()))
    }

    /// `Σ_i rows[i]·z^i` at `z = 1 + ε`: value `Σ rows[i]`, derivative `Σ i·rows[i]`.
    pub fn from_z_poly(rows: &[TruncatedSeries]) -> Result<Self, SeriesError> {
        let Some(first) = rows.first() else {
            return Err(SeriesError::InvalidArgument("empty z-polynomial"));
        };
        let order = rows.iter().map(TruncatedSeries::order).min().unwrap_or(first.order());
        let mut value = TruncatedSeries::zero(order);
        let mut deriv = TruncatedSeries::zero(order);
        for (i, row) in rows.iter().enumerate() {
            value = value.checked_add(row)?;
            if i > 0 {
                deriv = deriv.checked_add(&row.checked_scale(i as i128)?)?;
            }
        }
        Ok(Self { value, deriv })
    }

    pub fn value(&self) -> &TruncatedSeries {
        &self.value
    }

    pub fn deriv(&self) -> &TruncatedSeries {
        &self.deriv
    }

    pub fn into_parts(self) -> (TruncatedSeries, TruncatedSeries) {
        (self.value, self.deriv)
    }

    pub fn order(&self) -> usize {
        self.value.order()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(Self::new(self.value.checked_add(&other.value)?, self.deriv.checked_add(&other.deriv)?))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(Self::new(self.value.checked_sub(&other.value)?, self.deriv.checked_sub(&other.deriv)?))
    }

    /// Product rule: `(FG)′ = F·G′ + F′·G`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let value = self.value.checked_mul(&other.value)?;
        let deriv = self.value.checked_mul(&other.deriv)?.checked_add(&self.deriv.checked_mul(&other.value)?)?;
        Ok(Self::new(value, deriv))
    }

    /// Multiplies by a `z`-free series.
    pub fn mul_q_series(&self, s: &TruncatedSeries) -> Result<Self, SeriesError> {
        Ok(Self::new(self.value.checked_mul(s)?, self.deriv.checked_mul(s)?))
    }

    /// Product of dual factors; the empty product is `(1, 0)`.
    pub fn product<I>(factors: I, order: usize) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = DualSeries>,
    {
        factors.into_iter().try_fold(Self::one(order), |acc, f| acc.checked_mul(&f))
    }
}

/// `∏ (value_n + z·zcoeff_n)` at `z = 1 + ε`.
///
/// Every factor must specialize at `z = 1` to a series with constant term 1,
/// so the product is a unit and its logarithmic derivative
/// `Σ zcoeff_n / (value_n + zcoeff_n)` is defined.
pub fn dual_product<'a, I>(factors: I, order: usize) -> Result<DualSeries, SeriesError>
where
    I: IntoIterator<Item = (&'a TruncatedSeries, &'a TruncatedSeries)>,
{
    let mut acc = DualSeries::one(order);
    for (value, zcoeff) in factors {
        let f = DualSeries::from_z_linear(value, zcoeff)?;
        let c0 = f.value.coeff(0);
        if c0 != 1 {
            return Err(SeriesError::NonUnitConstant(c0));
        }
        acc = acc.checked_mul(&f)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{BivariateSeries, Coeff};

    fn q(order: usize, c: &[Coeff]) -> TruncatedSeries {
        TruncatedSeries::new(order, c)
    }

    #[test]
    fn single_linear_factor() {
        let d = dual_product([(&q(5, &[1]), &q(5, &[0, 1]))], 5).unwrap();
        assert_eq!(d.deriv(), &q(5, &[0, 1]));
        assert_eq!(d.value(), &q(5, &[1, 1]));
    }

    #[test]
    fn empty_product() {
        let d = dual_product(std::iter::empty(), 7).unwrap();
        assert_eq!(d.value(), &TruncatedSeries::one(7));
        assert!(d.deriv().is_zero());
    }

    #[test]
    fn odd_part_one_hooks() {
        // ∏_{n odd} (1 + z q^n/(1 - q^n)) differentiated at z = 1 counts 1-hooks in odd-part partitions
        let order = 12;
        let one = TruncatedSeries::one(order);
        let geos: Vec<TruncatedSeries> =
            (1..=order).step_by(2).map(|n| TruncatedSeries::geometric(n, n, order).unwrap()).collect();
        let d = dual_product(geos.iter().map(|g| (&one, g)), order).unwrap();
        assert_eq!(d.deriv().coeff(3), 2);
        assert_eq!(&d.deriv().coeffs()[1..=10], &[1, 1, 2, 3, 4, 6, 8, 11, 14, 19]);
    }

    #[test]
    fn rejects_non_unit_factor() {
        let two = q(4, &[2]);
        let zero = TruncatedSeries::zero(4);
        assert_eq!(dual_product([(&two, &zero)], 4), Err(SeriesError::NonUnitConstant(2)));
    }

    #[test]
    fn logarithmic_derivative_form() {
        // deriv == value * Σ zcoeff / (value + zcoeff), with the division done by series inversion
        let order = 30;
        let factors: Vec<(TruncatedSeries, TruncatedSeries)> = (1..=9)
            .map(|n| {
                let mut v = TruncatedSeries::one(order);
                v.mul_binomial_in_place(n, -1).unwrap();
                (v, TruncatedSeries::geometric(n + 1, n, order).unwrap())
            })
            .collect();
        let d = dual_product(factors.iter().map(|(v, z)| (v, z)), order).unwrap();
        let mut logd = TruncatedSeries::zero(order);
        for (v, z) in &factors {
            let at_one = v.checked_add(z).unwrap();
            logd = logd.checked_add(&z.checked_mul(&at_one.invert_unit().unwrap()).unwrap()).unwrap();
        }
        assert_eq!(d.deriv(), &d.value().checked_mul(&logd).unwrap());
    }

    #[test]
    fn agrees_with_bivariate_expansion() {
        let order = 40;
        let factors: Vec<(TruncatedSeries, TruncatedSeries)> = (1..=12)
            .map(|n| {
                let mut v = TruncatedSeries::one(order);
                v.mul_binomial_in_place(2 * n, -1).unwrap();
                let z = TruncatedSeries::polynomial(&[(n, 1), (2 * n, 1), (3 * n + 1, -2)], order).unwrap();
                (v, z)
            })
            .collect();
        let d = dual_product(factors.iter().map(|(v, z)| (v, z)), order).unwrap();
        let mut b = BivariateSeries::one(order, factors.len());
        for (v, z) in &factors {
            let f = BivariateSeries::from_z_poly(&[v.clone(), z.clone()], order, factors.len());
            b = b.checked_mul(&f).unwrap();
        }
        assert_eq!(d.deriv(), &b.z_derivative_at_one().unwrap());
        assert_eq!(d.value(), &b.collapse_at_z_one().unwrap());
    }

    #[test]
    fn quadratic_factors() {
        // (1 + z q + z^2 q^2)^2 : derivative at 1 is 2(1+q+q^2)(q+2q^2)
        let order = 6;
        let f = DualSeries::from_z_poly(&[q(order, &[1]), q(order, &[0, 1]), q(order, &[0, 0, 1])]).unwrap();
        let sq = DualSeries::product([f.clone(), f], order).unwrap();
        assert_eq!(sq.value(), &q(order, &[1, 2, 3, 2, 1]));
        assert_eq!(sq.deriv(), &q(order, &[0, 2, 6, 6, 4]));
    }
}
