//! Evaluators for ζ, log Γ, Γ, ξ and the pseudo Gamma function ∇.
//!
//! All evaluators work in binary64 with an absolute error goal taken from
//! [`EvalOptions`]. Error estimates are heuristic (last-term magnitudes),
//! not certified bounds.

mod gamma;
mod nabla;
mod xi;
mod zeta;

pub use gamma::{binet_g, binet_g_deriv, digamma, gamma, im_loggamma_half_asym, log_gamma};
pub use nabla::{d_symmetrized, nabla, nabla_ln, ratio_b, ratio_c, ratio_cprime, PseudoGammaParams};
pub use xi::{xi, xi_logderiv, xi_scaled, xi_unreflected, ScaledXi};
pub use zeta::{
    zeta, zeta_euler_maclaurin, zeta_alternating, zeta_integral_real, zeta_logderiv, ZetaPath,
};

#[allow(unused_imports)]
use num_traits::Float;
use crate::{Error, Result};

/// Euler–Mascheroni constant γ₀.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Tuning knobs shared by every evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Absolute error goal per evaluation.
    pub target_abs_err: f64,
    /// Cap on outer terms of the alternating double series.
    pub max_terms: usize,
    /// `|t|` above which ζ switches from the alternating double series to
    /// Euler–Maclaurin.
    pub em_cutoff_t: f64,
    /// Unit intervals of the Binet integral integrated exactly before the
    /// asymptotic tail takes over.
    pub quadrature_points: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            target_abs_err: 1e-11,
            max_terms: 1000,
            em_cutoff_t: 40.0,
            quadrature_points: 32,
        }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_err > 0.0 && self.target_abs_err.is_finite()) {
            return Err(Error::InvalidArgument("target_abs_err must be positive"));
        }
        if self.max_terms < 16 {
            return Err(Error::InvalidArgument("max_terms must be at least 16"));
        }
        if !(self.em_cutoff_t >= 0.0 && self.em_cutoff_t.is_finite()) {
            return Err(Error::InvalidArgument("em_cutoff_t must be non-negative"));
        }
        if self.quadrature_points < 8 {
            return Err(Error::InvalidArgument("quadrature_points must be at least 8"));
        }
        Ok(())
    }
}

/// Bernoulli numbers B₂, B₄, …, B₂₀.
pub(crate) const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];
