#[allow(unused_imports)]
use num_traits::Float;
use num_complex::Complex64;

use super::gamma::{digamma, log_gamma};
use super::zeta::{zeta, zeta_logderiv};
use super::{EvalOptions, EULER_GAMMA};
use crate::{ensure_finite, Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;
/// First Stieltjes constant γ₁.
const STIELTJES_1: f64 = -0.072_815_845_483_676_72;
/// Radius around s = 1 inside which (s−1)ζ(s) comes from its local expansion.
const POLE_RADIUS: f64 = 1e-6;

/// ξ(s) = `value` · e^`log_scale`.
///
/// The real scale carries the Γ factor, whose size runs far outside the
/// binary64 range at moderate heights; `value` has the same argument as
/// ξ(s) and modest modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledXi {
    pub value: Complex64,
    pub log_scale: f64,
}

impl ScaledXi {
    /// Collapses to a plain value; errors if it would overflow.
    pub fn to_value(self) -> Result<Complex64> {
        if self.log_scale > 700.0 {
            return Err(Error::Overflow);
        }
        Ok(self.value * self.log_scale.exp())
    }

    /// log ξ with the principal argument of `value`.
    pub fn ln(self) -> Complex64 {
        self.value.ln() + self.log_scale
    }
}

/// (s−1)ζ(s), switching to 1 + γ₀(s−1) − γ₁(s−1)² next to the pole.
fn xi_zeta_factor(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    let d = s - 1.0;
    if d.norm() < POLE_RADIUS {
        return Ok(Complex64::new(1.0, 0.0) + d * EULER_GAMMA - d * d * STIELTJES_1);
    }
    Ok(d * zeta(s, opts)?)
}

/// log[π^{−s/2} (s/2) Γ(s/2)] = −(s/2) log π + log Γ(s/2 + 1).
fn log_gamma_factor(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    Ok(-s * (0.5 * LN_PI) + log_gamma(s * 0.5 + 1.0, opts)?)
}

/// ξ(s) in scaled form. Points with σ < 1/2 are evaluated as ξ(1−s).
pub fn xi_scaled(s: Complex64, opts: &EvalOptions) -> Result<ScaledXi> {
    ensure_finite(s)?;
    opts.validate()?;
    let s = if s.re < 0.5 { Complex64::new(1.0, 0.0) - s } else { s };
    let lg = log_gamma_factor(s, opts)?;
    let z = xi_zeta_factor(s, opts)?;
    let (sin, cos) = lg.im.sin_cos();
    Ok(ScaledXi {
        value: z * Complex64::new(cos, sin),
        log_scale: lg.re,
    })
}

/// ξ(s) = π^{−s/2} · (s/2)Γ(s/2) · (s−1)ζ(s).
///
/// For σ < 1/2 this is computed as ξ(1−s), so every Γ and ζ evaluation
/// stays in the right half-plane.
pub fn xi(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    xi_scaled(s, opts)?.to_value()
}

/// ξ(s) straight from its definition, with no use of ξ(s) = ξ(1−s):
/// Γ and ζ are evaluated at `s` itself even for σ < 1/2.
pub fn xi_unreflected(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    ensure_finite(s)?;
    opts.validate()?;
    let lg = log_gamma_factor(s, opts)?;
    if lg.re > 700.0 {
        return Err(Error::Overflow);
    }
    Ok(lg.exp() * xi_zeta_factor(s, opts)?)
}

/// ξ′(s)/ξ(s) = 1/s + 1/(s−1) + ½ψ(s/2) + ζ′(s)/ζ(s) − ½ log π.
///
/// 1/s + ½ψ(s/2) is folded into ½ψ(s/2 + 1); for σ < 1/2 the identity
/// ξ′/ξ(s) = −ξ′/ξ(1−s) is used.
pub fn xi_logderiv(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    ensure_finite(s)?;
    opts.validate()?;
    if s.re < 0.5 {
        return Ok(-xi_logderiv(Complex64::new(1.0, 0.0) - s, opts)?);
    }
    let gamma_part = digamma(s * 0.5 + 1.0, opts)? * 0.5;
    let d = s - 1.0;
    let zeta_part = if d.norm() < POLE_RADIUS {
        // d/ds log[(s−1)ζ(s)] from the local expansion
        let num = Complex64::new(EULER_GAMMA, 0.0) - d * (2.0 * STIELTJES_1);
        let den = Complex64::new(1.0, 0.0) + d * EULER_GAMMA - d * d * STIELTJES_1;
        num / den
    } else {
        d.inv() + zeta_logderiv(s, opts)?
    };
    Ok(gamma_part + zeta_part - 0.5 * LN_PI)
}
