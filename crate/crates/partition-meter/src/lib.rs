//! Generation, counting, and write-cost instrumentation for ascending
//! compositions (integer partitions in non-decreasing part order).
//!
//! The library generates `sac(n, m)` in lexicographic order via the
//! successor rule, counts it exactly, measures the suffix length (total part
//! writes) three independent ways, and verifies the large-parts identity
//! `2p(n) - 1 = sum floor((a_{k-1} + a_k) / (a_{k-1} + 1))` over all
//! partitions of `n`, together with its general-`m` form.

pub mod composition;
pub mod counting;
pub mod identity;
pub mod render;
pub mod report;
pub mod suffix;

pub use composition::{
    apply_successor, iterate, lexmin, successor_plan, AscendingComposition, CompositionError,
    Part, SacParams, SuccessorPlan,
};
pub use counting::{pentagonal_oracle, CountError, CountValue, MemoTable};
pub use report::{ReportRow, VerificationReport};
pub use suffix::WriteTrace;
