//! Nodal sets and nodal domains of eigenfunctions of the two-dimensional
//! isotropic harmonic oscillator `-Δ + |x|²`, plus a few related explicit
//! families (polar modes, oval constructions, a Dirichlet square reference).
//!
//! The crate is layered bottom-up:
//!
//! * [`specfun`]: Hermite and Laguerre polynomials, their zeros, quadrature.
//! * [`eigenbasis`]: closed-form eigenfunctions with analytic gradients.
//! * [`critical`]: critical values, critical zeros and regularity certificates.
//! * [`nodal`]: sampling, curve extraction, domain counting and lengths.
//! * [`experiments`]: verifiers that bind everything into reports.
//! * [`cli`]: the `qho-nodal` command-line front end.

pub mod cli;
pub mod critical;
pub mod eigenbasis;
pub mod error;
pub mod experiments;
pub mod field;
pub mod geometry;
pub mod nodal;
pub mod roots;
pub mod specfun;

pub use error::{Error, Result};
pub use field::Field;
pub use geometry::{Point, Vec2, Window, WindowProvenance};
