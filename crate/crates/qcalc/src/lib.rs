//! Numerical q-calculus with a verification harness for q-integral identities.
//!
//! The crate is organized in layers:
//!
//! - [`qcore`]: scalar q-arithmetic — q-numbers, q-factorials, q-Pochhammer
//!   symbols (finite, infinite, real order), and the q-gamma function, all
//!   evaluated under an explicit truncation policy ([`qcore::QContext`]).
//! - [`qgrid`]: the q-difference operators `D_q` and `D_{1/q}`, Jackson
//!   q-integrals on geometric grids, and adaptive improper Riemann quadrature
//!   on `[0, inf)`.
//! - [`qspecial`]: evaluators for the q-special functions used by the identity
//!   catalog — basic hypergeometric series, the three Jackson q-Bessel
//!   functions, three families of q-trigonometric functions, q-Bessel-Struve
//!   functions, q-Airy functions, and several q-orthogonal polynomial
//!   families with their weights.
//! - [`lagrangian`]: the integrating-factor machinery that turns a
//!   second-order q-difference equation into indefinite q-integral identities,
//!   plus the residual checkers used to verify them numerically.
//! - [`catalog`]: a declarative registry of concrete q-integral identities,
//!   each wired to closed-form evaluators, with a driver that samples
//!   parameters and reports residuals.

pub mod catalog;
pub mod lagrangian;
pub mod qcore;
pub mod qgrid;
pub mod qspecial;

pub use qcore::{QContext, QError, QResult, C};
