use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::ValueEnum;
use hookbias_core::OracleGuard;

/// Largest accepted truncation order. `p(n)` for `n` near this size still
/// leaves ample room in `i128`; beyond it, series products start to overflow.
pub const MAX_TRUNCATION: usize = 1000;
pub const DEFAULT_TRUNCATION: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub truncation: usize,
    pub guard: OracleGuard,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { truncation: DEFAULT_TRUNCATION, guard: OracleGuard::default(), format: Format::Text, out: None }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.truncation == 0 || self.truncation > MAX_TRUNCATION {
            bail!("--truncation must be in 1..={MAX_TRUNCATION}, got {}", self.truncation);
        }
        if let Some(dir) = self.out.as_ref().and_then(|p| p.parent()).filter(|d| !d.as_os_str().is_empty()) {
            if !dir.is_dir() {
                bail!("output directory {} does not exist", dir.display());
            }
        }
        Ok(())
    }

    /// Rejects `n_max` beyond the truncation order.
    pub fn check_n_max(&self, n_max: u32) -> Result<()> {
        if n_max as usize > self.truncation {
            bail!("--nmax {n_max} exceeds the truncation order {} (raise --truncation)", self.truncation);
        }
        Ok(())
    }

    /// Rejects `n_max` beyond the oracle guard for the given family.
    pub fn check_guard(&self, t: Option<u32>, n_max: u32) -> Result<()> {
        let (guard, flag) = match t {
            None => (self.guard.ordinary, "--guard-ordinary"),
            Some(2) => (self.guard.two_regular, "--guard-two-regular"),
            Some(_) => (self.guard.regular, "--guard-regular"),
        };
        if n_max > guard {
            bail!("--nmax {n_max} exceeds the enumeration guard {guard} (raise {flag})");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        let c = RunConfig::default();
        assert!(c.validate().is_ok());
        assert_eq!(c.truncation, 500);
        assert_eq!(c.guard.two_regular, 80);
    }

    #[test]
    fn rejects_bad_truncation() {
        let mut c = RunConfig { truncation: 0, ..RunConfig::default() };
        assert!(c.validate().is_err());
        c.truncation = MAX_TRUNCATION + 1;
        assert!(c.validate().is_err());
    }

    #[test]
    fn rejects_missing_output_dir() {
        let c = RunConfig { out: Some("/definitely/not/here/out.json".into()), ..RunConfig::default() };
        assert!(c.validate().is_err());
        let c = RunConfig { out: Some("relative.json".into()), ..RunConfig::default() };
        assert!(c.validate().is_ok());
    }

    #[test]
    fn range_checks() {
        let c = RunConfig { truncation: 100, ..RunConfig::default() };
        assert!(c.check_n_max(100).is_ok());
        assert!(c.check_n_max(101).is_err());
        assert!(c.check_guard(Some(2), 80).is_ok());
        assert!(c.check_guard(Some(2), 81).is_err());
        assert!(c.check_guard(Some(3), 61).is_err());
        assert!(c.check_guard(None, 60).is_ok());
    }
}
