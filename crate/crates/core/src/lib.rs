//! Exact intersection theory on the cartesian square `C×C` and symmetric
//! square `C₂` of a curve, the numerical invariants of their generic
//! projections to P³, positivity verdicts for divisor classes, diophantine
//! minimal-degree searches and hyperbolicity bookkeeping.
//!
//! Everything is computed with exact integer or rational arithmetic.

pub mod cones;
pub mod error;
pub mod exec;
pub mod hyperbolicity;
pub mod invariants;
pub mod lattice;
pub mod rational;
pub mod search;

pub use error::{Error, Result};
pub use exec::Exec;
pub use lattice::{CartesianClass, ChernData, CurveProfile, SurfaceClass, SurfaceKind, SymmetricClass, TriState};
pub use rational::Q;
