//! Finite free convolutions of real-rooted polynomials.
//!
//! Exact rational arithmetic for the convolutions and the operators that
//! appear in their root bounds, double-precision transforms and bound
//! checks, and random-matrix estimators that verify the convolutions as
//! expected characteristic polynomials.

pub mod cheby;
pub mod cli;
pub mod convolve;
pub mod error;
pub mod pinch;
pub mod poly;
pub mod rational;
pub mod rmt;
pub mod transforms;

pub use error::{Error, Result};
pub use poly::{FloatPoly, Polynomial, RootList, SignedCoeffs};
