//! Hook-length statistics of ordinary and t-regular integer partitions.
//!
//! Two independent engines compute the same counting functions:
//!
//! - [`partitions`]: exhaustive enumeration of partitions, Young-diagram hook
//!   lengths and brute-force counters ([`Oracle`]).
//! - [`qseries`] and [`genfun`]: exact truncated power series over `i128`
//!   realizing the generating functions of `p_(k)(n)` and `b_{t,k}(n)`.
//!
//! [`bias`] builds on both to check the hook-length inequalities, evaluate the
//! closed forms for `b_{t,k}(k)` and `b_{t,k}(k+1)`, and scan the open
//! conjectures at desk scale. [`reference`] carries the published tables used
//! as golden data.

pub mod bias;
pub mod genfun;
pub mod partitions;
pub mod qseries;
pub mod reference;

pub use bias::{BiasError, BiasReport, CheckId, Finding, Verdict};
pub use genfun::{GfError, GfId};
pub use partitions::{
    conjugate, enumerate_partitions, enumerate_t_regular, hook_tally, HookTally, Oracle,
    OracleError, OracleGuard, Partition, PartitionError, TwoRegularClass,
};
pub use qseries::{BivariateSeries, Coeff, DualSeries, SeriesError, Sign, TruncatedSeries};

