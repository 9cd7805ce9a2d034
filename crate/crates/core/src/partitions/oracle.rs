//! Brute-force hook counters: enumerate every partition and tally its hooks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::enumerate::{enumerate_partitions, enumerate_t_regular, PartitionStream};
use super::hooks::{accumulate_hooks, HookTally};
use super::PartitionError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the enumeration guard {guard} for {family}; use the series engine instead")]
    GuardExceeded { n: u32, guard: u32, family: &'static str },
    #[error("hook length k must be positive")]
    ZeroHookLength,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// Largest weights the oracle will enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleGuard {
    pub ordinary: u32,
    pub two_regular: u32,
    /// Applies to every `t >= 3`.
    pub regular: u32,
}

impl Default for OracleGuard {
    fn default() -> Self {
        Self { ordinary: 60, two_regular: 80, regular: 60 }
    }
}

/// Enumeration oracle for `p_(k)(n)`, `b_{t,k}(n)` and the bivariate counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Oracle {
    guard: OracleGuard,
}

impl Oracle {
    pub fn new(guard: OracleGuard) -> Self {
        Self { guard }
    }

    pub fn guard(&self) -> OracleGuard {
        self.guard
    }

    fn ordinary_stream(&self, n: u32) -> Result<PartitionStream, OracleError> {
        if n > self.guard.ordinary {
            return Err(OracleError::GuardExceeded { n, guard: self.guard.ordinary, family: "ordinary partitions" });
        }
        Ok(enumerate_partitions(n))
    }

    fn regular_stream(&self, n: u32, t: u32) -> Result<PartitionStream, OracleError> {
        let (guard, family) = if t == 2 {
            (self.guard.two_regular, "2-regular partitions")
        } else {
            (self.guard.regular, "t-regular partitions (t >= 3)")
        };
        let stream = enumerate_t_regular(n, t)?;
        if n > guard {
            return Err(OracleError::GuardExceeded { n, guard, family });
        }
        Ok(stream)
    }

    /// Hook histogram aggregated over all partitions of `n`.
    pub fn ordinary_tally(&self, n: u32) -> Result<HookTally, OracleError> {
        Ok(aggregate(self.ordinary_stream(n)?))
    }

    /// Hook histogram aggregated over all `t`-regular partitions of `n`.
    pub fn regular_tally(&self, n: u32, t: u32) -> Result<HookTally, OracleError> {
        Ok(aggregate(self.regular_stream(n, t)?))
    }

    /// `p_(k)(n)`.
    pub fn ordinary(&self, n: u32, k: u32) -> Result<u64, OracleError> {
        if k == 0 {
            return Err(OracleError::ZeroHookLength);
        }
        Ok(self.ordinary_tally(n)?.count(k))
    }

    /// `b_{t,k}(n)`.
    pub fn regular(&self, n: u32, t: u32, k: u32) -> Result<u64, OracleError> {
        if k == 0 {
            return Err(OracleError::ZeroHookLength);
        }
        Ok(self.regular_tally(n, t)?.count(k))
    }

    /// `m ↦ p_(k)(m, n)`: how many partitions of `n` have exactly `m` hooks of length `k`.
    pub fn ordinary_bivariate(&self, n: u32, k: u32) -> Result<BTreeMap<u32, u64>, OracleError> {
        if k == 0 {
            return Err(OracleError::ZeroHookLength);
        }
        Ok(histogram(self.ordinary_stream(n)?, k))
    }

    /// `m ↦ b_{t,k}(m, n)`.
    pub fn regular_bivariate(&self, n: u32, t: u32, k: u32) -> Result<BTreeMap<u32, u64>, OracleError> {
        if k == 0 {
            return Err(OracleError::ZeroHookLength);
        }
        Ok(histogram(self.regular_stream(n, t)?, k))
    }

    /// Rows `n = 0..=n_max` of `[b_{t,k}(n)]_{k = 0..=n_max}` (index 0 is always 0).
    ///
    /// `t = None` selects ordinary partitions. Rows are computed in parallel and
    /// returned in order of `n`.
    pub fn hook_table(&self, t: Option<u32>, n_max: u32) -> Result<Vec<Vec<u64>>, OracleError> {
        // fail fast on the guard before spawning work
        match t {
            None => drop(self.ordinary_stream(n_max)?),
            Some(t) => drop(self.regular_stream(n_max, t)?),
        }
        (0..=n_max)
            .into_par_iter()
            .map(|n| {
                let stream = match t {
                    None => self.ordinary_stream(n)?,
                    Some(t) => self.regular_stream(n, t)?,
                };
                let mut dense = dense_totals(stream);
                dense.resize(n_max as usize + 1, 0);
                Ok(dense)
            })
            .collect()
    }
}

fn dense_totals(mut stream: PartitionStream) -> Vec<u64> {
    let n = stream.weight() as usize;
    let mut dense = vec![0u64; n + 1];
    let mut conj = Vec::with_capacity(n);
    while let Some(parts) = stream.advance() {
        accumulate_hooks(parts, &mut conj, &mut dense);
    }
    dense
}

fn aggregate(stream: PartitionStream) -> HookTally {
    HookTally::from_dense(&dense_totals(stream))
}

fn histogram(mut stream: PartitionStream, k: u32) -> BTreeMap<u32, u64> {
    let n = stream.weight() as usize;
    let mut out = BTreeMap::new();
    let mut dense = vec![0u64; n + 1];
    let mut conj = Vec::with_capacity(n);
    while let Some(parts) = stream.advance() {
        dense.iter_mut().for_each(|c| *c = 0);
        accumulate_hooks(parts, &mut conj, &mut dense);
        let m = dense.get(k as usize).copied().unwrap_or(0) as u32;
        *out.entry(m).or_insert(0) += 1;
    }
    out
}
