//! Fuzzing, minimization, invariance suites and special-case cross-checks.

pub mod crosscheck;
pub mod fuzz;
pub mod invariance;
pub mod minimize;
pub mod nelder_mead;
pub mod probe;

pub use crosscheck::{crosscheck_special_cases, CrosscheckReport};
pub use fuzz::{fuzz, FuzzReport};
pub use invariance::{invariance_suite, InvarianceReport};
pub use minimize::{minimize_ratio, minimize_with_restarts, MinimizeResult, RestartReport};
pub use probe::{probe_case_b, CaseBProbeReport};
