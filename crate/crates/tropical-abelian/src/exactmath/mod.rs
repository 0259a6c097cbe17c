//! Exact arithmetic: rationals, integer matrices, Laurent polynomials in
//! `q^{1/2}` and the arithmetic functions used by the closed-form counts.
//!
//! Nothing in this module rounds. Rationals and matrix entries are
//! arbitrary-precision, half-integer exponents are stored doubled.

mod arith;
mod laurent;
mod matrix;
mod rational;

pub use arith::{binomial, compositions, divisors, sigma1};
pub use laurent::{laurent_eval_one, laurent_mul, laurent_substitute, quantum_integer, LaurentHalf};
pub use matrix::{maximal_minor_gcd, maximal_minor_gcd_bruteforce, smith_normal_form, IntMatrix, SmithForm};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
