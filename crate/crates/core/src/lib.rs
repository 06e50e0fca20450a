//! Spectral tools for the family of matrices `A_α(G) = αD(G) + (1-α)A(G)`.
//!
//! Exact characteristic polynomials over `Z[x, α]`, coronals and join
//! formulas, cospectral-mate construction, and exhaustive scans over small
//! graphs.

pub mod error;
pub mod exactpoly;
pub mod graph;
pub mod joins;
pub mod scan;
pub mod spectra;

pub use error::{Error, Graph6Error, Result};
pub use exactpoly::{BivarPoly, RatFunc, RatPoly, Rational};
pub use graph::Graph;
