//! Shared inputs for the criterion benchmarks.

/// Truncation orders exercised by the series benchmarks.
pub const SERIES_ORDERS: [usize; 3] = [100, 250, 500];

/// Weights exercised by the enumeration benchmarks.
pub const ORACLE_WEIGHTS: [u32; 3] = [30, 40, 50];
