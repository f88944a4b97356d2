//! Cross-checking, parameter audits and benchmarks over the reduction registry.

pub mod audit;
pub mod bench;
pub mod crosscheck;
pub mod registry;

pub use audit::{audit, AuditReport, AuditRow, AUDIT_HEADER};
pub use bench::{fit_loglog_slope, run_bench, slopes, BenchGrid, BenchLine, BenchRecord, BenchSolver, BENCH_HEADER};
pub use crosscheck::{crosscheck, CaseResult, CrosscheckConfig, CrosscheckReport, THREADS_ENV};
pub use registry::{lookup, names, Caps, Entry, ReduceOptions, Reduced, REGISTRY};
