//! Tropical curves in tropical abelian surfaces, computed exactly.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactmath`]: rationals, integer matrices with Smith normal form,
//!   Laurent polynomials in `q^{1/2}` and a few arithmetic functions.
//! * [`torus`]: period matrices, curve classes and the fundamental domain.
//! * [`curve`]: parametrized curves as metric graphs with slopes and windings.
//! * [`lifting`]: cutting a curve open and lifting it to the plane.
//! * [`multiplicity`]: vertex, refined and lattice-theoretic multiplicities.
//! * [`enumerate`]: genus-2 curve counting through two points and the
//!   closed-form counts for classes `(1, n)`.
//!
//! [`io`], [`svg`] and [`commands`] provide the file formats and the
//! command layer used by the `tropab` binary.

pub mod catalog;
pub mod commands;
pub mod curve;
pub mod enumerate;
pub mod error;
pub mod exactmath;
pub mod io;
pub mod lifting;
pub mod multiplicity;
pub mod plane;
pub mod svg;
pub mod torus;

pub use error::{Error, Result};
