//! Injections and case classes used by the hook-length bias arguments.

use serde::{Deserialize, Serialize};

use super::{Partition, PartitionError};

/// Case split of the 2-regular (odd-part) partitions of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwoRegularClass {
    /// Some part is repeated.
    R,
    /// Distinct parts, smallest part 1.
    S,
    /// Distinct parts, smallest part greater than 1.
    T,
}

/// `a(n)`: partitions of `n` whose smallest part is at least 2, with `a(0) = 1`.
///
/// Counted by a coin-change table over parts `2..=n`; exact while the value
/// fits in `u128` (beyond `n ≈ 2000` this panics rather than wrapping).
pub fn smallest_part_at_least_two_count(n: u32) -> u128 {
    let n = n as usize;
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 2..=n {
        for m in part..=n {
            ways[m] = ways[m].checked_add(ways[m - part]).expect("a(n) exceeds u128");
        }
    }
    ways[n]
}

/// `(λ_1, λ_2, …) ↦ (λ_1 + 1, λ_2, …)` on partitions with smallest part ≥ 2.
pub fn psi_map(lambda: &Partition) -> Result<Partition, PartitionError> {
    match lambda.smallest_part() {
        None => Err(PartitionError::OutsideDomain(lambda.clone(), "empty partition")),
        Some(1) => Err(PartitionError::OutsideDomain(lambda.clone(), "smallest part is 1")),
        Some(_) => {
            let mut parts = lambda.parts().to_vec();
            parts[0] += 1;
            Ok(Partition::from_sorted(parts))
        }
    }
}

pub fn classify_2regular(lambda: &Partition) -> Result<TwoRegularClass, PartitionError> {
    if !lambda.is_t_regular(2) {
        return Err(PartitionError::NotRegular(lambda.clone(), 2));
    }
    Ok(if !lambda.has_distinct_parts() {
        TwoRegularClass::R
    } else if lambda.smallest_part() == Some(1) {
        TwoRegularClass::S
    } else {
        TwoRegularClass::T
    })
}

/// Injection from class `S` into class `R` for a fixed weight `n > 4`.
///
/// With `λ = (λ_1, …, λ_r, 1)`:
/// - `r ≥ 2`: `(λ_2, λ_2, λ_3, …, λ_r, 1^(λ_1 − λ_2 + 1))`;
/// - `r = 1` (so `λ = (n − 1, 1)`, `n` even): `((n−2)/2, (n−2)/2, 1, 1)` when
///   `n ≡ 0 (mod 4)` and `(n/2, n/2)` when `n ≡ 2 (mod 4)`.
pub fn phi_map(lambda: &Partition) -> Result<Partition, PartitionError> {
    if classify_2regular(lambda)? != TwoRegularClass::S {
        return Err(PartitionError::OutsideDomain(lambda.clone(), "not distinct with smallest part 1"));
    }
    let n = lambda.weight();
    if n <= 4 {
        return Err(PartitionError::OutsideDomain(lambda.clone(), "weight must exceed 4"));
    }
    let parts = lambda.parts();
    let r = parts.len() - 1;
    let image = if r >= 2 {
        let (l1, l2) = (parts[0], parts[1]);
        let mut out = vec![l2, l2];
        out.extend_from_slice(&parts[2..r]);
        out.extend(std::iter::repeat(1).take((l1 - l2 + 1) as usize));
        out
    } else {
        // r = 1; r = 0 would mean λ = (1), excluded by n > 4
        match n % 4 {
            0 => {
                let h = (n - 2) / 2;
                vec![h, h, 1, 1]
            }
            2 => vec![n / 2, n / 2],
            _ => unreachable!("(n-1, 1) with odd parts forces n even"),
        }
    };
    Ok(Partition::from_sorted(image))
}
