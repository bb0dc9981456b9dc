#[allow(unused_imports)]
use num_traits::Float;
use num_complex::Complex64;

use super::{EvalOptions, BERNOULLI_EVEN};
use crate::{ensure_finite, Error, Result};

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
/// log Γ is evaluated directly from Stirling's formula once σ reaches this.
const STIRLING_MIN_SIGMA: f64 = 4.0;
/// The Binet remainder of the tail is taken from its asymptotic series once
/// |w| reaches this.
const TAIL_MIN_MODULUS: f64 = 24.0;
/// Above this modulus the per-interval Binet integral switches from the
/// closed form to its 1/w expansion.
const SERIES_MIN_MODULUS: f64 = 4.0;

/// ∫₀¹ p(u)/(u+w)² du with p(u) = (u − u²)/2.
///
/// Closed form ½[(1+2w) log(1+1/w) − 2]; for large |w| the expansion
/// ½ Σ_{k≥2} (−1)ᵏ (k−1)/(k(k+1)) w^{−k} avoids the cancellation.
fn unit_interval(w: Complex64) -> Complex64 {
    if w.norm() >= SERIES_MIN_MODULUS {
        let x = w.inv();
        let mut xk = x * x;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 2..64 {
            let kf = k as f64;
            let coeff = (kf - 1.0) / (kf * (kf + 1.0));
            let term = xk * coeff;
            acc += if k % 2 == 0 { term } else { -term };
            if term.norm() < 1e-18 * acc.norm() {
                break;
            }
            xk *= x;
        }
        acc * 0.5
    } else {
        let one = Complex64::new(1.0, 0.0);
        ((one + w * 2.0) * (one + w.inv()).ln() - 2.0) * 0.5
    }
}

/// d/dw of [`unit_interval`]: log(1+1/w) − (1+2w)/(2w(w+1)).
fn unit_interval_deriv(w: Complex64) -> Complex64 {
    if w.norm() >= SERIES_MIN_MODULUS {
        let x = w.inv();
        let mut xk = x * x * x;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 2..64 {
            let kf = k as f64;
            let coeff = (kf - 1.0) / (kf + 1.0);
            let term = xk * coeff;
            acc += if k % 2 == 0 { term } else { -term };
            if term.norm() < 1e-18 * acc.norm() {
                break;
            }
            xk *= x;
        }
        -acc * 0.5
    } else {
        let one = Complex64::new(1.0, 0.0);
        (one + w.inv()).ln() - (one + w * 2.0) / (w * (w + 1.0) * 2.0)
    }
}

/// Asymptotic Binet remainder Σ B₂ₖ / (2k(2k−1) w^{2k−1}) for large |w|.
fn binet_asymptotic(w: Complex64) -> Complex64 {
    let x = w.inv();
    let x2 = x * x;
    let mut xk = x;
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = (i + 1) as f64;
        acc += xk * (b / (2.0 * k * (2.0 * k - 1.0)));
        xk *= x2;
    }
    acc
}

/// Derivative of [`binet_asymptotic`]: −Σ B₂ₖ / (2k w^{2k}).
fn binet_asymptotic_deriv(w: Complex64) -> Complex64 {
    let x = w.inv();
    let x2 = x * x;
    let mut xk = x2;
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = (i + 1) as f64;
        acc -= xk * (b / (2.0 * k));
        xk *= x2;
    }
    acc
}

fn tail_start(s: Complex64, opts: &EvalOptions) -> usize {
    let mut n = opts.quadrature_points;
    while (s + n as f64).norm() < TAIL_MIN_MODULUS {
        n += 8;
    }
    n
}

/// Binet's remainder g(s) = ∫₀^∞ p(v)/(v+s)² dv in Stirling's formula,
/// with p the periodic quadratic (v − ⌊v⌋ − (v − ⌊v⌋)²)/2.
///
/// The first `quadrature_points` unit intervals are integrated exactly; the
/// rest equals g(s+N), which is summed from its asymptotic series.
/// Valid for σ ≥ 1/8, where |g(s)| ≤ 1/(8|s|).
pub fn binet_g(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    ensure_finite(s)?;
    opts.validate()?;
    if s.re < 0.125 {
        return Err(Error::DomainError("binet_g needs sigma >= 1/8"));
    }
    Ok(binet_unchecked(s, opts))
}

fn binet_unchecked(s: Complex64, opts: &EvalOptions) -> Complex64 {
    let n = tail_start(s, opts);
    let mut acc = Complex64::new(0.0, 0.0);
    // small terms first
    for k in (0..n).rev() {
        acc += unit_interval(s + k as f64);
    }
    acc + binet_asymptotic(s + n as f64)
}

/// g′(s), the derivative of [`binet_g`].
pub fn binet_g_deriv(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    ensure_finite(s)?;
    opts.validate()?;
    if s.re < 0.125 {
        return Err(Error::DomainError("binet_g needs sigma >= 1/8"));
    }
    Ok(binet_deriv_unchecked(s, opts))
}

fn binet_deriv_unchecked(s: Complex64, opts: &EvalOptions) -> Complex64 {
    let n = tail_start(s, opts);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (0..n).rev() {
        acc += unit_interval_deriv(s + k as f64);
    }
    acc + binet_asymptotic_deriv(s + n as f64)
}

fn check_pole(s: Complex64) -> Result<()> {
    if s.re <= 0.5 {
        let nearest = s.re.round();
        if nearest <= 0.0 && (s - nearest).norm() < 1e-8 {
            return Err(Error::PoleAtNonPositiveInteger);
        }
    }
    Ok(())
}

fn shift_count(s: Complex64) -> usize {
    if s.re >= STIRLING_MIN_SIGMA {
        0
    } else {
        (STIRLING_MIN_SIGMA - s.re).ceil() as usize
    }
}

/// log Γ(s), continuous on the plane cut along the negative real axis and
/// real on the positive axis.
///
/// Stirling's formula log Γ(s) = (s − ½) log s − s + ½ log 2π + g(s) for
/// σ ≥ 4, shifted there by Γ(s+1) = sΓ(s) otherwise.
pub fn log_gamma(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    ensure_finite(s)?;
    opts.validate()?;
    check_pole(s)?;
    let n = shift_count(s);
    let z = s + n as f64;
    let mut value = (z - 0.5) * z.ln() - z + HALF_LN_2PI + binet_unchecked(z, opts);
    for j in 0..n {
        value -= (s + j as f64).ln();
    }
    Ok(value)
}

/// Γ(s) = exp(log Γ(s)).
pub fn gamma(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    let lg = log_gamma(s, opts)?;
    if lg.re > 709.0 {
        return Err(Error::Overflow);
    }
    Ok(lg.exp())
}

/// ψ(s) = Γ′(s)/Γ(s) from the derivative of the Stirling form,
/// log s − 1/(2s) + g′(s), with the same recurrence shift as [`log_gamma`].
pub fn digamma(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    ensure_finite(s)?;
    opts.validate()?;
    check_pole(s)?;
    let n = shift_count(s);
    let z = s + n as f64;
    let mut value = z.ln() - z.inv() * 0.5 + binet_deriv_unchecked(z, opts);
    for j in 0..n {
        value -= (s + j as f64).inv();
    }
    Ok(value)
}

/// Closed-form asymptotic of Im log Γ(s/2) with its O(1/|s|) term dropped:
///
/// (π/4)(σ−1) − ½(σ−1) arctan(σ/t) + (t/2) log √((σ/2)² + (t/2)²) − t/2.
pub fn im_loggamma_half_asym(s: Complex64) -> Result<f64> {
    ensure_finite(s)?;
    let (sigma, t) = (s.re, s.im);
    if t <= 0.0 {
        return Err(Error::DomainError("im_loggamma_half_asym needs t > 0"));
    }
    if sigma <= 0.125 {
        return Err(Error::DomainError("im_loggamma_half_asym needs sigma > 1/8"));
    }
    let quarter_pi = core::f64::consts::FRAC_PI_4;
    let modulus = ((sigma / 2.0).powi(2) + (t / 2.0).powi(2)).sqrt();
    Ok(quarter_pi * (sigma - 1.0) - 0.5 * (sigma - 1.0) * (sigma / t).atan() + 0.5 * t * modulus.ln()
        - 0.5 * t)
}
