//! Identities and pointwise bounds for ζ, ξ and log Γ.

#[allow(unused_imports)]
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{avoid_ordinates, census_for, envelope, CheckReport};
use crate::census::{rvm_main_term, ZeroRecord};
use crate::fit::power_law;
use crate::specfun::{
    binet_g, digamma, im_loggamma_half_asym, log_gamma, xi_logderiv, xi_unreflected, zeta,
    zeta_alternating, zeta_euler_maclaurin, zeta_logderiv, EvalOptions, EULER_GAMMA,
};
use crate::{c, Error, Result};

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Relative residuals of ξ(1−s) = ξ(s) and ξ(s̄) = conj ξ(s) at `n` random
/// points of −2 ≤ σ ≤ 3, |t| ≤ 60, with ξ taken from its definition at both
/// arguments. Bound 10⁻⁹.
pub fn check_functional_equation(n: usize, seed: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("functional equation needs samples"));
    }
    let opts = EvalOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..n {
        let s = c(rng.gen_range(-2.0..3.0), rng.gen_range(-60.0..60.0));
        let v = xi_unreflected(s, &opts)?;
        let scale = v.norm();
        let refl = (xi_unreflected(c(1.0, 0.0) - s, &opts)? - v).norm() / scale;
        let conj = (xi_unreflected(s.conj(), &opts)? - v.conj()).norm() / scale;
        worst = worst.max(refl).max(conj);
    }
    Ok(CheckReport::new("functional_equation")
        .param("n", n)
        .param("seed", seed)
        .bounded(n, worst, 1e-9))
}

/// Fits c in |ζ(σ+it)| ≤ c·t^{(1−δ)/2} over five σ in [δ, 1] and the grid
/// t ≥ 3, least squares through the origin on the running maximum in t.
/// Passes when c ≤ 10, no sample exceeds 1.5·c·t^{(1−δ)/2}, and
/// |ζ(2+it)| ≤ ζ(2) on the grid.
pub fn check_zeta_bound(delta: f64, t_grid: &[f64]) -> Result<CheckReport> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidArgument("zeta bound needs 0 < delta < 1"));
    }
    if t_grid.is_empty() || t_grid.iter().any(|&t| !(t >= 3.0)) {
        return Err(Error::InvalidArgument("zeta bound needs t >= 3"));
    }
    let opts = EvalOptions::default();
    let exponent = 0.5 * (1.0 - delta);
    let sigmas: Vec<f64> = (0..5).map(|i| delta + (1.0 - delta) * i as f64 / 4.0).collect();
    let mut per_t = Vec::with_capacity(t_grid.len());
    let mut samples = Vec::with_capacity(t_grid.len() * sigmas.len());
    let mut on_two = 0.0f64;
    for &t in t_grid {
        let mut m = 0.0f64;
        for &sigma in &sigmas {
            let z = zeta(c(sigma, t), &opts)?.norm();
            samples.push((t, z));
            m = m.max(z);
        }
        per_t.push(m);
        on_two = on_two.max(zeta(c(2.0, t), &opts)?.norm());
    }
    let env = envelope(&per_t);
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (&t, &e) in t_grid.iter().zip(&env) {
        let x = t.powf(exponent);
        sxy += x * e;
        sxx += x * x;
    }
    let constant = sxy / sxx;
    let exceed = samples
        .iter()
        .map(|&(t, z)| z / (constant * t.powf(exponent)))
        .fold(0.0f64, f64::max);
    let zeta_two = PI * PI / 6.0;
    let residual = (constant / 10.0).max(exceed / 1.5).max(on_two / zeta_two);
    Ok(CheckReport::new("zeta_bound")
        .param("delta", delta)
        .param("t_min", t_grid[0])
        .param("t_max", t_grid[t_grid.len() - 1])
        .param("grid_points", t_grid.len())
        .param("max_exceedance", exceed)
        .param("sigma_two_max", on_two)
        .bounded(samples.len() + t_grid.len(), residual, 1.0)
        .with_constant(constant))
}

/// ζ′/ζ through ξ′/ξ: ξ′/ξ(s) − 1/(s−1) − ½ψ(s/2+1) + ½ log π.
fn zeta_logderiv_via_xi(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    Ok(xi_logderiv(s, opts)? - (s - 1.0).inv() - digamma(s * 0.5 + 1.0, opts)? * 0.5
        + 0.5 * LN_PI)
}

/// Local expansion of ζ′/ζ around the zeros near height t.
///
/// At σ ∈ {−1, −½, 0, ¼, ½, ¾, 1, 3/2, 2} and each grid t, the residual is
/// |ζ′/ζ(s) − Σ_{|γ−t|<1} 1/(s−ρ)| with census zeros. Left of ½ the value
/// comes from ξ′/ξ and is cross-checked against the direct series. The
/// running maximum over t is fitted as c·log t. Passes when
/// #{|γ−t| < 1} < 3 log t everywhere, c ≤ 10 and the two paths agree to
/// 10⁻⁶ relative.
pub fn check_local_expansion(t_grid: &[f64]) -> Result<CheckReport> {
    if t_grid.is_empty() || t_grid.iter().any(|&t| !(t > 3.0)) {
        return Err(Error::InvalidArgument("local expansion needs t > 3"));
    }
    let opts = EvalOptions::default();
    let top = t_grid.iter().cloned().fold(0.0, f64::max);
    let zeros = census_for(top + 2.0)?;
    let (ts, nudged) = avoid_ordinates(t_grid, &zeros, 0.05);
    let sigmas = [-1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0];
    let (mut per_t, mut count_ratio, mut cross) = (Vec::new(), 0.0f64, 0.0f64);
    let mut n = 0;
    for &t in &ts {
        let near: Vec<f64> = zeros.iter().map(|z| z.gamma).filter(|g| (g - t).abs() < 1.0).collect();
        count_ratio = count_ratio.max(near.len() as f64 / (3.0 * t.ln()));
        let mut m = 0.0f64;
        for &sigma in &sigmas {
            let s = c(sigma, t);
            let value = if sigma < 0.5 {
                let via_xi = zeta_logderiv_via_xi(s, &opts)?;
                let direct = zeta_logderiv(s, &opts)?;
                cross = cross.max((via_xi - direct).norm() / via_xi.norm().max(1.0));
                via_xi
            } else {
                zeta_logderiv(s, &opts)?
            };
            let local: Complex64 = near.iter().map(|&g| (s - c(0.5, g)).inv()).sum();
            m = m.max((value - local).norm());
            n += 1;
        }
        per_t.push(m);
    }
    let env = envelope(&per_t);
    let (mut sly, mut sll) = (0.0, 0.0);
    for (&t, &e) in ts.iter().zip(&env) {
        sly += t.ln() * e;
        sll += t.ln() * t.ln();
    }
    let constant = sly / sll;
    let residual = count_ratio.max(constant / 10.0).max(cross / 1e-6);
    Ok(CheckReport::new("local_expansion")
        .param("t_grid", ts.clone())
        .param("nudged", nudged)
        .param("max_count_ratio", count_ratio)
        .param("cross_path_residual", cross)
        .param("residual_envelope_max", env.last().copied().unwrap_or(0.0))
        .bounded(n, residual, 1.0)
        .with_constant(constant))
}

/// −1 − γ₀/2 + log 2 + ½ log π.
pub(crate) fn hadamard_constant() -> f64 {
    -1.0 - 0.5 * EULER_GAMMA + core::f64::consts::LN_2 + 0.5 * LN_PI
}

/// Residuals |ξ′/ξ(s) − B − Σ_{j≤k} [1/(s−ρ_j) + 1/ρ_j + 1/(s−ρ̄_j) + 1/ρ̄_j]|
/// at k = K/10, 2K/10, …, K.
pub(crate) fn truncation_residuals(
    s: Complex64,
    zeros: &[ZeroRecord],
    k_max: usize,
    opts: &EvalOptions,
) -> Result<Vec<(usize, f64)>> {
    let target = xi_logderiv(s, opts)? - hadamard_constant();
    let step = (k_max / 10).max(1);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut out = Vec::new();
    for (j, z) in zeros.iter().take(k_max).enumerate() {
        let rho = c(0.5, z.gamma);
        let bar = rho.conj();
        sum += (s - rho).inv() + rho.inv() + (s - bar).inv() + bar.inv();
        if (j + 1) % step == 0 {
            out.push((j + 1, (target - sum).norm()));
        }
    }
    Ok(out)
}

/// Truncations of the zero sum for ξ′/ξ. For every s the residual at K is
/// compared with the power law fitted to the residuals at K/10 … 9K/10 and
/// extrapolated to K; the check passes when it is at most 5 times that.
/// Each census ordinate contributes ρ and ρ̄, which exhausts the quadruple
/// ρ, ρ̄, 1−ρ, 1−ρ̄ for zeros on the critical line.
pub fn check_xi_logderiv_sum(s_grid: &[Complex64], k: usize) -> Result<CheckReport> {
    if k < 30 || s_grid.is_empty() {
        return Err(Error::InvalidArgument("zero sum needs K >= 30 and a grid"));
    }
    let opts = EvalOptions::default();
    let mut height = 50.0;
    while rvm_main_term(height) < k as f64 + 5.0 {
        height += 10.0;
    }
    let mut zeros = census_for(height)?;
    while zeros.len() < k {
        height += 20.0;
        zeros = census_for(height)?;
    }
    let mut report = CheckReport::new("xi_logderiv_sum")
        .param("k", k)
        .param("census_height", height);
    let mut worst = 0.0f64;
    let mut n = 0;
    for (i, &s) in s_grid.iter().enumerate() {
        let res = truncation_residuals(s, &zeros, k, &opts)?;
        n += res.len();
        let (head, last) = res.split_at(res.len() - 1);
        let ks: Vec<f64> = head.iter().map(|&(k, _)| k as f64).collect();
        let rs: Vec<f64> = head.iter().map(|&(_, r)| r).collect();
        let fit = power_law(&ks, &rs)?;
        let predicted = fit.constant * (k as f64).powf(fit.exponent);
        let ratio = last[0].1 / (5.0 * predicted);
        worst = worst.max(ratio);
        let monotone = res.windows(2).skip(1).all(|w| w[1].1 <= w[0].1);
        report = report
            .param(&alloc::format!("s{i}_re"), s.re)
            .param(&alloc::format!("s{i}_im"), s.im)
            .param(&alloc::format!("s{i}_residual_at_k"), last[0].1)
            .param(&alloc::format!("s{i}_trend_exponent"), fit.exponent)
            .param(&alloc::format!("s{i}_monotone"), monotone);
    }
    let at_half = xi_logderiv(c(0.5, 0.0), &opts)?.norm();
    Ok(report
        .param("logderiv_at_half", at_half)
        .bounded(n, worst, 1.0))
}

/// |asymptotic − Im log Γ(s/2)| ≤ 2/|s| at `n` random points of
/// σ ∈ [1/8, 3], t ∈ [5, 500]; the residual is the largest ratio to 2/|s|.
pub fn check_im_loggamma(n: usize, seed: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("im log gamma needs samples"));
    }
    let opts = EvalOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = alloc::vec![c(2.0, 100.0), c(0.5, 50.0), c(1.0, 5.0)];
    points.extend((0..n).map(|_| c(rng.gen_range(0.125..=3.0), rng.gen_range(5.0..500.0))));
    let mut worst = 0.0f64;
    for s in points.iter().map(|&s| if s.re <= 0.125 { c(0.125 + 1e-12, s.im) } else { s }) {
        let residual = (im_loggamma_half_asym(s)? - log_gamma(s * 0.5, &opts)?.im).abs();
        worst = worst.max(residual * s.norm() / 2.0);
    }
    Ok(CheckReport::new("im_loggamma")
        .param("n", n)
        .param("seed", seed)
        .bounded(points.len(), worst, 1.0))
}

/// |g(s)| ≤ 1/(8|s|) at `n` random points with σ ≥ 1/8 and |s| ≥ 1; the
/// residual is the largest 8|s||g(s)|.
pub fn check_binet_bound(n: usize, seed: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("binet bound needs samples"));
    }
    let opts = EvalOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut violations = 0;
    let mut drawn = 0;
    while drawn < n {
        let s = c(rng.gen_range(0.125..20.0), rng.gen_range(-60.0..60.0));
        if s.norm() < 1.0 {
            continue;
        }
        drawn += 1;
        let ratio = 8.0 * s.norm() * binet_g(s, &opts)?.norm();
        if ratio > 1.0 {
            violations += 1;
        }
        worst = worst.max(ratio);
    }
    Ok(CheckReport::new("binet_bound")
        .param("n", n)
        .param("seed", seed)
        .param("violations", violations as i64)
        .bounded(n, worst, 1.0))
}

/// |ζ_alternating − ζ_Euler–Maclaurin| at `n` random points with
/// σ ∈ [−1, 2] and |t| ∈ [cutoff/2, cutoff]. Bound twice the error target.
pub fn check_zeta_agreement(n: usize, seed: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("zeta agreement needs samples"));
    }
    let opts = EvalOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hi = opts.em_cutoff_t;
    let mut worst = 0.0f64;
    for _ in 0..n {
        let t = rng.gen_range(0.5 * hi..=hi) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let s = c(rng.gen_range(-1.0..=2.0), t);
        let diff = (zeta_alternating(s, &opts)? - zeta_euler_maclaurin(s, &opts)?).norm();
        worst = worst.max(diff);
    }
    Ok(CheckReport::new("zeta_agreement")
        .param("n", n)
        .param("seed", seed)
        .param("target_abs_err", opts.target_abs_err)
        .bounded(n, worst, 2.0 * opts.target_abs_err))
}
