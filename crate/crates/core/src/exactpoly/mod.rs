//! Exact integer and rational polynomial arithmetic.

mod bivar;
mod ratfunc;
pub mod rational;
mod ring;

pub use bivar::{render_ratpoly, BivarPoly};
pub use ratfunc::RatFunc;
pub use rational::{check_alpha, parse_alpha, parse_rational, rat, Notation, Rational};
pub use ring::{IntPoly, Poly, RatPoly, Ring};
