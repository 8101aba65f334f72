//! Exact verification of log-concavity and super-multiplicative
//! (Bessenrodt–Ono type) inequalities for partition-style integer
//! sequences.
//!
//! The crate generates exact term tables (partitions, plane partitions,
//! overpartitions, k-regular partitions, or user-supplied terms files),
//! scans them for log-concavity, evaluates a root-vs-ratio sufficiency
//! criterion that reduces `alpha(m) alpha(n) > alpha(m+n)` to a finite
//! residual rectangle, and sweeps that rectangle exhaustively. All
//! arithmetic is arbitrary-precision rational; inequality verdicts come
//! from integer cross-multiplication and cross-exponentiation, never from
//! floating point.
//!
//! Modules:
//!
//! * [`exact`] — canonical rationals and the two comparison kernels
//! * [`seqgen`] — the Euler-product engine, the pentagonal fast path, and
//!   terms-file ingestion
//! * [`criterion`] — log-concavity scans, the sufficiency criterion, the
//!   admissible set, coverage classification, the geometric backfill
//! * [`verify`] — pair sweeps, implication checks, full reports
//!
//! Pair sweeps are data-parallel via rayon under the `parallel` feature
//! (enabled by default); disabling it yields a fully sequential build with
//! the same public API and bit-identical results.

pub mod criterion;
pub mod error;
pub mod exact;
mod par;
pub mod seqgen;
pub mod verify;

pub use error::{Error, Result};
pub use exact::ExactRational;
pub use par::with_parallelism;
pub use seqgen::{SeqTable, SequenceKind, SequenceSource, SequenceSpec};
