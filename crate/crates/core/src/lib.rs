//! Special functions, argument tracking and zero counting for the Riemann
//! zeta and xi functions, plus a library of numerical verification suites.
//!
//! The crate is `no_std` and needs only `alloc`. Everything is a pure
//! function of its arguments; IO, file formats and the command line live in
//! the `zerocensus` companion crate.
//!
//! Modules:
//!
//! - [`specfun`]: ζ, log Γ, ξ, the pseudo Gamma function ∇ and the ratios
//!   built from them.
//! - [`argtrack`]: continuous argument along polyline contours, winding
//!   numbers, the sign-change bound and the disk zero bound.
//! - [`census`]: critical-line zero census, N(T), N(λ,T), the
//!   Riemann–von Mangoldt main term and the separation parameter ε.
//! - [`checks`]: named verification suites producing [`checks::CheckReport`]s.
#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod argtrack;
pub mod census;
pub mod checks;
mod error;
pub mod fit;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// A point of the complex plane. All public operations reject non-finite
/// components with [`Error::NonFinite`].
pub type ComplexValue = Complex64;

/// Rejects NaN and infinite components.
#[inline]
pub fn ensure_finite(s: ComplexValue) -> Result<ComplexValue> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(s)
    } else {
        Err(Error::NonFinite)
    }
}

/// Shorthand for `Complex64::new`.
#[inline]
pub const fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}
