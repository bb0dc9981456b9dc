//! Properties of ∇ and growth of the ratios built on it.

#[allow(unused_imports)]
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CheckReport;
use crate::fit::power_law;
use crate::specfun::{
    binet_g, d_symmetrized, log_gamma, nabla, ratio_b, ratio_c, EvalOptions, PseudoGammaParams,
};
use crate::{c, Error, Result};

const CRITICAL_SAMPLES: usize = 10_000;
const SYMMETRY_SAMPLES: usize = 500;
const ARC_SAMPLES: usize = 720;
const CASE_ONE_CAP: f64 = 21.0 * 1.1;
const STIRLING_CAP: f64 = 3.0;

/// ln|s^{s/2−½}|.
fn ln_power_modulus(s: Complex64) -> f64 {
    ((s * 0.5 - 0.5) * s.ln()).re
}

/// Points ½ + ρe^{iθ} on the first-quadrant arcs of the annulus
/// 9Y/5 − (X−½) ≤ |s−½| ≤ 9Y/5 + (X−½), θ from `theta0` to π/2.
fn annulus_arcs(y: f64, x_big: f64, theta0: f64) -> Vec<Complex64> {
    let mid = 9.0 * y / 5.0;
    let half = x_big - 0.5;
    let mut pts = Vec::with_capacity(3 * ARC_SAMPLES);
    for rho in [mid - half, mid, mid + half] {
        for k in 0..ARC_SAMPLES {
            let theta = theta0 + (FRAC_PI_2 - theta0) * k as f64 / (ARC_SAMPLES - 1) as f64;
            pts.push(c(0.5, 0.0) + Complex64::from_polar(rho, theta));
        }
    }
    pts
}

/// ∇ on and around the critical line, the Case-1 band constant and the
/// Γ(s/2)/∇(s) sweep over the annulus arcs.
///
/// Conditions, each normalized by its cap: |∇(½) − 2| ≤ 4 ulp;
/// ∇(½+it) ∈ [1 − 10⁻¹², 2 + 10⁻¹²] at 10⁴ random t per Y; relative
/// reflection and conjugation residuals ≤ 10⁻¹²; |s^{s/2−½}/∇(s)| ≤ 21·1.1
/// where ½ ≤ σ < ½ + log 14/(2 log R); the Stirling factor
/// √(2π)·2^{−(σ/2−½)}·|e^{−s/2+g(s/2)}| ≤ 3 on the arcs. The largest
/// |Γ(s/2)/∇(s)| on the arcs is reported and only required to be finite.
pub fn check_nabla_suite(y_grid: &[f64], x_big: f64, seed: u64) -> Result<CheckReport> {
    if y_grid.is_empty() {
        return Err(Error::InvalidArgument("nabla suite needs at least one Y"));
    }
    if !(x_big > 0.5 && x_big < 1.0) {
        return Err(Error::InvalidArgument("nabla suite needs 1/2 < X < 1"));
    }
    let opts = EvalOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ulp2 = 2.0 * f64::EPSILON;
    let (mut half_dev, mut crit_excess, mut sym, mut case_one, mut stirling) =
        (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut gamma_ratio = 0.0f64;
    let mut n = 0usize;

    for &y in y_grid {
        let p = PseudoGammaParams::new(y)?;
        half_dev = half_dev.max((nabla(c(0.5, 0.0), &p)? - 2.0).norm());
        n += 1;

        let t_max = 2.0 * p.r();
        for _ in 0..CRITICAL_SAMPLES {
            let t = rng.gen_range(-t_max..t_max);
            let v = nabla(c(0.5, t), &p)?;
            let excess = (1.0 - v.re).max(v.re - 2.0).max(v.im.abs()).max(0.0);
            crit_excess = crit_excess.max(excess);
        }
        n += CRITICAL_SAMPLES;

        for _ in 0..SYMMETRY_SAMPLES {
            let s = c(rng.gen_range(-3.0..4.0), rng.gen_range(-50.0..50.0));
            let v = nabla(s, &p)?;
            let refl = (nabla(c(1.0, 0.0) - s, &p)? - v).norm() / v.norm();
            let conj = (nabla(s.conj(), &p)? - v.conj()).norm() / v.norm();
            sym = sym.max(refl).max(conj);
        }
        n += SYMMETRY_SAMPLES;

        // Case 1: the top of each arc, where σ − ½ < log 14 / (2 log R)
        let width = 14f64.ln() / (2.0 * p.ln_r());
        let mid = 9.0 * y / 5.0 - (x_big - 0.5);
        let theta0 = (width / mid).min(1.0).acos();
        for s in annulus_arcs(y, x_big, theta0) {
            if s.re - 0.5 >= width {
                continue;
            }
            let ln_ratio = ln_power_modulus(s) - nabla(s, &p)?.norm().ln();
            case_one = case_one.max(ln_ratio.exp());
            n += 1;
        }

        for s in annulus_arcs(y, x_big, 0.0) {
            let nab = nabla(s, &p)?.norm();
            let ln_gamma = log_gamma(s * 0.5, &opts)?.re;
            gamma_ratio = gamma_ratio.max((ln_gamma - nab.ln()).exp());
            if s.norm() >= 6.0 || s.im >= 5.5 {
                let g = binet_g(s * 0.5, &opts)?;
                let ln_factor = 0.5 * TAU.ln() - (s.re / 2.0 - 0.5) * 2f64.ln() + (-s * 0.5 + g).re;
                stirling = stirling.max(ln_factor.exp());
            }
            n += 1;
        }
    }

    let finite = if gamma_ratio.is_finite() { 0.0 } else { f64::INFINITY };
    let residual = (half_dev / (4.0 * ulp2))
        .max(crit_excess / 1e-12)
        .max(sym / 1e-12)
        .max(case_one / CASE_ONE_CAP)
        .max(stirling / STIRLING_CAP)
        .max(finite);
    Ok(CheckReport::new("nabla")
        .param("y_grid", y_grid.to_vec())
        .param("x", x_big)
        .param("seed", seed)
        .param("half_value_deviation", half_dev)
        .param("critical_line_excess", crit_excess)
        .param("symmetry_residual", sym)
        .param("case_one_max", case_one)
        .param("case_one_cap", CASE_ONE_CAP)
        .param("stirling_factor_max", stirling)
        .param("gamma_over_nabla_max", gamma_ratio)
        .bounded(n, residual, 1.0))
}

/// Largest |f| over `n` equally spaced points of |s − center| = radius.
/// A point landing on a zero of ∇ is moved along the circle.
fn circle_max<F>(f: F, center: f64, radius: f64, n: usize) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let mut best = 0.0f64;
    for k in 0..n {
        let base = TAU * k as f64 / n as f64;
        let mut value = None;
        for nudge in 0..8 {
            let theta = base + 1e-6 * nudge as f64;
            match f(c(center, 0.0) + Complex64::from_polar(radius, theta)) {
                Ok(v) => {
                    value = Some(v.norm());
                    break;
                }
                Err(Error::NearZeroDivision) => continue,
                Err(e) => return Err(e),
            }
        }
        best = best.max(value.ok_or(Error::NearZeroDivision)?);
    }
    Ok(best)
}

/// Fits max|B|, max|C| on |s − X| = 9Y/5 and max|D| on |s − ½| = 9Y/5
/// against c·Y^b, each separately. Every fit must reach R² ≥ 0.9 with
/// b ≤ 10; the residual is the largest of b/10 and (1 − R²)/0.1.
pub fn check_ratio_growth(x_big: f64, y_grid: &[f64]) -> Result<CheckReport> {
    if !(x_big > 0.5 && x_big < 1.0) {
        return Err(Error::InvalidArgument("ratio growth needs 1/2 < X < 1"));
    }
    if y_grid.len() < 3 {
        return Err(Error::InvalidArgument("ratio growth needs three or more heights"));
    }
    let opts = EvalOptions::default();
    let (mut mb, mut mc, mut md) = (Vec::new(), Vec::new(), Vec::new());
    for &y in y_grid {
        let p = PseudoGammaParams::new(y)?;
        let radius = 9.0 * y / 5.0;
        mb.push(circle_max(|s| ratio_b(s, &p, &opts), x_big, radius, ARC_SAMPLES)?);
        mc.push(circle_max(|s| ratio_c(s, x_big, &p, &opts), x_big, radius, ARC_SAMPLES)?);
        md.push(circle_max(|s| d_symmetrized(s, x_big, &p, &opts), 0.5, radius, ARC_SAMPLES)?);
    }
    let mut report = CheckReport::new("ratio_growth")
        .param("x", x_big)
        .param("y_grid", y_grid.to_vec());
    let mut residual = 0.0f64;
    let mut worst_b = f64::NEG_INFINITY;
    for (name, maxima) in [("b", &mb), ("c", &mc), ("d", &md)] {
        let fit = power_law(y_grid, maxima)?;
        residual = residual.max(fit.exponent / 10.0).max((1.0 - fit.r_squared) / 0.1);
        worst_b = worst_b.max(fit.exponent);
        report = report
            .param(&alloc::format!("{name}_maxima"), maxima.clone())
            .param(&alloc::format!("{name}_exponent"), fit.exponent)
            .param(&alloc::format!("{name}_constant"), fit.constant)
            .param(&alloc::format!("{name}_r_squared"), fit.r_squared);
    }
    Ok(report
        .bounded(3 * y_grid.len() * ARC_SAMPLES, residual, 1.0)
        .with_constant(worst_b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_modulus_matches_direct_value() {
        let s = c(3.0, 2.0);
        let direct = (s.ln() * (s * 0.5 - 0.5)).exp().norm();
        assert!((ln_power_modulus(s).exp() - direct).abs() < 1e-12 * direct);
    }

    #[test]
    fn arcs_stay_on_the_annulus() {
        for s in annulus_arcs(20.0, 0.75, 0.0) {
            let r = (s - 0.5).norm();
            assert!((35.75 - 1e-9..=36.25 + 1e-9).contains(&r));
            assert!(s.re >= 0.5 - 1e-9 && s.im >= -1e-9);
        }
    }

    #[test]
    fn circle_max_of_identity_is_the_radius_reach() {
        let m = circle_max(Ok, 1.0, 2.0, 64).unwrap();
        assert!((m - 3.0).abs() < 1e-12);
    }
}
