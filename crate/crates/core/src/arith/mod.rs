//! Exact integer-polynomial and dyadic arithmetic.
//!
//! Nothing in this module rounds. Polynomials carry arbitrary-precision
//! integer coefficients, and every point the isolator ever touches is a
//! dyadic rational `m * 2^e`, so evaluation and affine substitution stay
//! inside the integers after clearing a power-of-two denominator.

mod dyadic;
mod interval;
mod poly;

pub use dyadic::Dyadic;
pub use interval::OpenInterval;
pub use poly::{reverse_coeffs, taylor_shift, taylor_shift_1, BigIntPoly};
