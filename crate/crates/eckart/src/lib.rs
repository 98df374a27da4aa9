//! Bound states of the D-dimensional Eckart potential under five
//! approximations to the centrifugal term.
//!
//! The library provides:
//!
//! * [`model`] — the potential, its minimum, and quantum numbers;
//! * [`centrifugal`] — the approximation schemes (Greene-Aldrich,
//!   two-parameter, constant-shifted, Pekeris-type, and their weighted
//!   combinations), admissibility checks, and error profiles;
//! * [`spectrum`] — closed-form eigenvalues and bound-state enumeration;
//! * [`special`] — the supporting special-function kernel;
//! * [`wavefunction`] — normalized radial functions, hyperspherical
//!   harmonics, and full eigenfunctions;
//! * [`quadrature`] — adaptive Gauss-Legendre integration for the
//!   normalization checks;
//! * [`numerov`] — an independent shooting-method eigensolver used to
//!   validate the closed forms;
//! * [`degeneracy`] — zero-energy and degeneracy points in the range
//!   parameter;
//! * [`config`] / [`report`] — the configuration and output formats behind
//!   the command-line driver.
//!
//! The `examples/` directory walks through each capability; `src/main.rs`
//! is a thin batch CLI over the same entry points.

pub mod centrifugal;
pub mod config;
pub mod degeneracy;
pub mod model;
pub mod numerov;
pub mod quadrature;
pub mod report;
pub mod special;
pub mod spectrum;
pub mod wavefunction;

pub use centrifugal::{ApproximationScheme, SchemeSpec};
pub use model::{EckartModel, PhysicalConstants, QuantumNumbers};
pub use spectrum::BoundState;
