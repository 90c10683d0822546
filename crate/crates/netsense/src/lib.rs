//! Frequency-domain sensitivity analysis of linearly coupled networked
//! systems.
//!
//! A network of identical linear agents coupled through a symmetric
//! interaction matrix `A` responds to shared initial conditions or forcing
//! through the sensitivity `S(s) = (g(s) I - A)^{-1}`, where `g` is the
//! nodal operator in the Laplace domain. This crate computes:
//!
//! - per-node responses `S(iw) 1` and the mean response over a frequency
//!   grid, both by direct complex solves and through the eigenbasis of `A`
//!   ([`sensitivity`]);
//! - the spectral weights `w_i = <1, phi_i>^2 / N` whose large-`N` scaling
//!   separates architectures where the mean response collapses onto a
//!   single renormalized node from those where new macroscopic behavior
//!   emerges ([`spectral`], [`analysis`]);
//! - degree-vs-response correlation curves and their sign crossover near
//!   the natural frequency for oscillatory dynamics ([`analysis`]);
//! - an independent time-domain oracle that integrates the forced network
//!   and recovers amplitude and phase per node ([`simulate`]).
//!
//! Graph architectures (random and deterministic) live in [`netgen`], nodal
//! dynamics in [`dynamics`], and a thin command-line front end in [`cli`].
//! The `examples/` directory exercises each capability end to end.

pub mod analysis;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod netgen;
pub mod plot;
pub mod sensitivity;
pub mod simulate;
pub mod spectral;

pub use error::{Error, Result};
