#[allow(unused_imports)]
use num_traits::Float;
use core::f64::consts::LN_2;

use num_complex::Complex64;

use super::xi::xi_scaled;
use super::EvalOptions;
use crate::{ensure_finite, Error, Result};

/// Guard below which |∇(s)| counts as zero in a ratio.
const NABLA_GUARD: f64 = 1e-12;
/// Largest |Re w| accepted in cosh(w) before the result leaves binary64.
const MAX_EXPONENT: f64 = 700.0;
/// |Re w| up to which ∇ is evaluated directly rather than through its log;
/// |∇|² must stay finite for complex division.
const MODERATE_EXPONENT: f64 = 300.0;

/// Height parameter `Y` of the pseudo Gamma function and the derived
/// base `R = 9Y/5 + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudoGammaParams {
    y: f64,
    r: f64,
    ln_r: f64,
}

impl PseudoGammaParams {
    pub fn new(y: f64) -> Result<Self> {
        if !y.is_finite() {
            return Err(Error::NonFinite);
        }
        if y <= 2.0 {
            return Err(Error::InvalidArgument("pseudo Gamma height Y must exceed 2"));
        }
        let r = 9.0 * y / 5.0 + 0.5;
        Ok(PseudoGammaParams { y, r, ln_r: r.ln() })
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn ln_r(&self) -> f64 {
        self.ln_r
    }
}

/// The pseudo Gamma function
///
/// ∇(s) = ⅛[(R^{(s−½)/8} + R^{(½−s)/8})⁴ + (R^{(s−½)/8} − R^{(½−s)/8})⁴].
///
/// With z = R^{(s−½)/4}, (1+z)⁴ + (1−z)⁴ = 2(1 + 6z² + z⁴) collapses this
/// to ∇(s) = (3 + cosh w)/2 with w = (s − ½) log R / 2, which is exactly
/// real and inside [1, 2] on σ = ½ and has no cancellation near it.
pub fn nabla(s: Complex64, p: &PseudoGammaParams) -> Result<Complex64> {
    ensure_finite(s)?;
    let w = (s - 0.5) * (0.5 * p.ln_r);
    if w.re.abs() > MAX_EXPONENT {
        return Err(Error::Overflow);
    }
    Ok((w.cosh() + 3.0) * 0.5)
}

/// log ∇(s) on some branch. Finite wherever ∇ ≠ 0, including where ∇
/// itself overflows: for large |Re w|, 3 + cosh w = e^{±w}(1 + 6e^{∓w} + e^{∓2w})/2.
pub fn nabla_ln(s: Complex64, p: &PseudoGammaParams) -> Result<Complex64> {
    ensure_finite(s)?;
    let w = (s - 0.5) * (0.5 * p.ln_r);
    if w.re.abs() <= 20.0 {
        return Ok(((w.cosh() + 3.0) * 0.5).ln());
    }
    let v = if w.re > 0.0 { w } else { -w };
    let e = (-v).exp();
    Ok(v - 2.0 * LN_2 + (e * 6.0 + e * e + 1.0).ln())
}

fn guarded_nabla(s: Complex64, p: &PseudoGammaParams) -> Result<Complex64> {
    let v = nabla(s, p)?;
    if v.norm() < NABLA_GUARD {
        return Err(Error::NearZeroDivision);
    }
    Ok(v)
}

fn guarded_nabla_ln(s: Complex64, p: &PseudoGammaParams) -> Result<Complex64> {
    let v = nabla_ln(s, p)?;
    if v.re < NABLA_GUARD.ln() {
        return Err(Error::NearZeroDivision);
    }
    Ok(v)
}

/// Whether ∇ at `s` is comfortably inside the binary64 range.
fn moderate(s: Complex64, p: &PseudoGammaParams) -> bool {
    ((s.re - 0.5) * 0.5 * p.ln_r).abs() <= MODERATE_EXPONENT
}

/// ∇(a)/∇(b), in the log domain when either value is huge.
fn nabla_quotient(a: Complex64, b: Complex64, p: &PseudoGammaParams) -> Result<Complex64> {
    if moderate(a, p) && moderate(b, p) {
        let den = guarded_nabla(b, p)?;
        return Ok(nabla(a, p)? / den);
    }
    let l = nabla_ln(a, p)? - guarded_nabla_ln(b, p)?;
    if l.re > MAX_EXPONENT {
        return Err(Error::Overflow);
    }
    Ok(l.exp())
}

/// B(s) = ξ(s)/∇(s), divided in the log domain so the Γ scale of ξ never
/// has to fit in binary64 on its own.
pub fn ratio_b(s: Complex64, p: &PseudoGammaParams, opts: &EvalOptions) -> Result<Complex64> {
    let (ln_den, phase) = if moderate(s, p) {
        let den = guarded_nabla(s, p)?;
        (den.norm().ln(), den / den.norm())
    } else {
        let l = guarded_nabla_ln(s, p)?;
        (l.re, Complex64::new(0.0, l.im).exp())
    };
    let sx = xi_scaled(s, opts)?;
    let log_mod = sx.log_scale - ln_den;
    if log_mod > MAX_EXPONENT {
        return Err(Error::Overflow);
    }
    Ok(sx.value / phase * log_mod.exp())
}

/// C(s) = ∇(2 − X + s)/∇(s).
pub fn ratio_c(
    s: Complex64,
    x_big: f64,
    p: &PseudoGammaParams,
    _opts: &EvalOptions,
) -> Result<Complex64> {
    if !x_big.is_finite() {
        return Err(Error::NonFinite);
    }
    nabla_quotient(s + (2.0 - x_big), s, p)
}

/// C′(s) = ∇(s + x)/∇(s) for −1 < x < 2.
pub fn ratio_cprime(
    s: Complex64,
    x: f64,
    p: &PseudoGammaParams,
    _opts: &EvalOptions,
) -> Result<Complex64> {
    if !(x > -1.0 && x < 2.0) {
        return Err(Error::InvalidArgument("ratio_cprime needs -1 < x < 2"));
    }
    nabla_quotient(s + x, s, p)
}

/// D(s) = ½[B(x − ½ + s) + B(½ − x + s)] for ½ < x ≤ 2.
pub fn d_symmetrized(
    s: Complex64,
    x: f64,
    p: &PseudoGammaParams,
    opts: &EvalOptions,
) -> Result<Complex64> {
    if !(x > 0.5 && x <= 2.0) {
        return Err(Error::InvalidArgument("d_symmetrized needs 1/2 < x <= 2"));
    }
    let a = ratio_b(s + (x - 0.5), p, opts)?;
    let b = ratio_b(s + (0.5 - x), p, opts)?;
    Ok((a + b) * 0.5)
}
