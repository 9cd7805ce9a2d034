//! Integer partitions, Young-diagram hook lengths and the enumeration oracle.

mod enumerate;
mod hooks;
mod maps;
mod oracle;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::{enumerate_partitions, enumerate_t_regular, PartitionStream};
pub use hooks::{conjugate, hook_rows, hook_tally, HookTally};
pub use maps::{classify_2regular, phi_map, psi_map, smallest_part_at_least_two_count, TwoRegularClass};
pub use oracle::{Oracle, OracleError, OracleGuard};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition parts must be positive, found 0")]
    ZeroPart,
    #[error("regularity modulus t must be at least 2, got {0}")]
    InvalidModulus(u32),
    #[error("partition {0} is not {1}-regular")]
    NotRegular(Partition, u32),
    #[error("partition {0} is outside the domain: {1}")]
    OutsideDomain(Partition, &'static str),
}

/// A partition stored as non-increasing positive parts.
///
/// The empty partition is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// Builds the canonical (non-increasing) partition from parts in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Ok(Self { parts, weight })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new(), weight: 0 }
    }

    /// Trusted constructor for parts already known to be positive and non-increasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&p| p > 0));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest_part(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Number of times `s` occurs as a part.
    pub fn multiplicity(&self, s: u32) -> usize {
        // parts are sorted descending, so the run of `s` is contiguous
        let start = self.parts.partition_point(|&p| p > s);
        let end = self.parts.partition_point(|&p| p >= s);
        end - start
    }

    /// `(part, multiplicity)` pairs with parts in decreasing order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn distinct_part_count(&self) -> usize {
        self.parts.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!self.parts.is_empty())
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// True when no part is divisible by `t`.
    pub fn is_t_regular(&self, t: u32) -> bool {
        t >= 2 && self.parts.iter().all(|p| p % t != 0)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
