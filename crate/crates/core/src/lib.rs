//! Numerical laboratory for Atiyah's linear-independence conjecture and the
//! Atiyah–Sutcliffe determinant inequality on configurations of points in R³.

pub mod atiyah_core;
pub mod binary_forms;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod linalg;

pub use atiyah_core::{evaluate, AtiyahEvaluation};
pub use error::{Error, Result};
pub use geometry::{Configuration, OrientationPolicy, Point};
