//! Exact verification of Frobenius monoidal structures on right adjoints of
//! coHopf adjunctions between categories of modules over finite-dimensional
//! Hopf algebras.

pub mod catalog;
pub mod cohopf;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod frobenius;
pub mod functors;
pub mod hopf;
pub mod linalg;
pub mod pipeline;
pub mod rational;
pub mod report;
pub mod repcat;
pub mod theorems;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use rational::Rational;
