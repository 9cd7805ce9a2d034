use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Partition;

/// Hook-length histogram, for one partition or aggregated over many.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookTally {
    counts: BTreeMap<u32, u64>,
    total_cells: u64,
}

impl HookTally {
    /// Number of cells with hook length `k`.
    pub fn count(&self, k: u32) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn total_cells(&self) -> u64 {
        self.total_cells
    }

    pub fn merge(&mut self, other: &HookTally) {
        for (&k, &c) in &other.counts {
            *self.counts.entry(k).or_insert(0) += c;
        }
        self.total_cells += other.total_cells;
    }

    /// Builds a tally from a dense array indexed by hook length.
    pub(crate) fn from_dense(dense: &[u64]) -> Self {
        let counts: BTreeMap<u32, u64> = dense
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(k, &c)| (k as u32, c))
            .collect();
        let total_cells = counts.values().sum();
        Self { counts, total_cells }
    }
}

/// Column heights of the Young diagram, written into `out`.
pub(crate) fn conjugate_into(parts: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let Some(&first) = parts.first() else { return };
    out.resize(first as usize, 0);
    // column j has height = number of rows longer than j
    let mut row = parts.len();
    for j in 0..first {
        while row > 0 && parts[row - 1] <= j {
            row -= 1;
        }
        out[j as usize] = row as u32;
    }
}

/// The transpose partition `λ′`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let mut cols = Vec::new();
    conjugate_into(lambda.parts(), &mut cols);
    Partition::from_sorted(cols)
}

/// Adds the hook length of every cell of `parts` into `dense[h]`.
///
/// `conj` is scratch space for the column heights; `dense` must have length
/// greater than the largest hook `λ_1 + ℓ(λ) - 1`.
pub(crate) fn accumulate_hooks(parts: &[u32], conj: &mut Vec<u32>, dense: &mut [u64]) {
    conjugate_into(parts, conj);
    for (i, &row) in parts.iter().enumerate() {
        // hook(i, j) = λ_i - j + λ′_j - i - 1 with 0-based i, j
        for j in 0..row as usize {
            let hook = (row as usize - j) + conj[j] as usize - i - 1;
            dense[hook] += 1;
        }
    }
}

/// Hook-length histogram of one partition.
pub fn hook_tally(lambda: &Partition) -> HookTally {
    let mut dense = vec![0u64; lambda.weight() as usize + 1];
    let mut conj = Vec::new();
    accumulate_hooks(lambda.parts(), &mut conj, &mut dense);
    HookTally::from_dense(&dense)
}

/// Hook lengths row by row, matching the filled Young diagram.
pub fn hook_rows(lambda: &Partition) -> Vec<Vec<u32>> {
    let conj = conjugate(lambda);
    let cols = conj.parts();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row)| (0..row as usize).map(|j| (row as usize - j + cols[j] as usize - i - 1) as u32).collect())
        .collect()
}
