//! Zero census on the critical line and zero counts by the argument
//! principle.
//!
//! On σ = ½ the function ξ is real, so its zeros there are sign changes of
//! the real function Z(t) = ξ(½+it)·e^{−L(t)}, L(t) the real Γ scale. The
//! census scans Z, brackets and bisects the sign changes, and is then
//! checked against winding counts of ξ around rectangles, which see every
//! zero on or off the line.

#[allow(unused_imports)]
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::argtrack::{winding_number, Contour, TrackOptions};
use crate::specfun::{xi_scaled, EvalOptions};
use crate::{c, Error, Result};

/// Knobs for the census and the rectangle counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CensusOptions {
    /// Initial scan step in t.
    pub scan_step: f64,
    /// Smallest step adaptive halving may reach.
    pub min_step: f64,
    /// Final bracket width.
    pub bisect_tol: f64,
    /// Largest T accepted; censuses for ε reach 2T.
    pub height_cap: f64,
    /// Clearance kept between contour edges and zero ordinates, also the
    /// shift applied when a height is too close.
    pub nudge: f64,
    pub eval: EvalOptions,
    pub track: TrackOptions,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            scan_step: 0.1,
            min_step: 0.1 / 256.0,
            bisect_tol: 1e-9,
            height_cap: 500.0,
            nudge: 0.05,
            eval: EvalOptions::default(),
            track: TrackOptions::default(),
        }
    }
}

/// One zero ½ + iγ found on the critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroRecord {
    /// 1-based position by increasing ordinate.
    pub index: usize,
    pub gamma: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// |ξ(½ + iγ)|. Underflows to 0 at large γ since |ξ| decays like
    /// e^{−πγ/4} there.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CensusResult {
    pub zeros: Vec<ZeroRecord>,
    pub height: f64,
    pub count_by_winding: i64,
    pub rvm_main: f64,
}

/// ξ(½+it) divided by a positive real factor: real, same sign as ξ, and of
/// modest size at every height.
pub fn critical_z(t: f64, opts: &EvalOptions) -> Result<f64> {
    Ok(xi_scaled(c(0.5, t), opts)?.value.re)
}

/// ξ(s) up to a positive real factor; has the argument of ξ everywhere.
pub fn xi_direction(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    Ok(xi_scaled(s, opts)?.value)
}

fn validate(opts: &CensusOptions) -> Result<()> {
    opts.eval.validate()?;
    if !(opts.scan_step > 0.0 && opts.min_step > 0.0 && opts.min_step <= opts.scan_step) {
        return Err(Error::InvalidArgument("census needs 0 < min_step <= scan_step"));
    }
    if !(opts.bisect_tol > 0.0 && opts.nudge > 0.0 && opts.height_cap > 2.0) {
        return Err(Error::InvalidArgument("census tolerances must be positive"));
    }
    Ok(())
}

/// Whether the parabola through three samples crosses zero, which predicts
/// a pair of zeros between the outer two.
fn parabola_crosses(t: [f64; 3], z: [f64; 3]) -> bool {
    let (h1, h2) = (t[1] - t[0], t[2] - t[1]);
    let d1 = (z[1] - z[0]) / h1;
    let d2 = (z[2] - z[1]) / h2;
    let a = (d2 - d1) / (h1 + h2);
    if a == 0.0 {
        return false;
    }
    let slope = (d1 * h2 + d2 * h1) / (h1 + h2);
    let vertex = z[1] - slope * slope / (4.0 * a);
    let offset = -slope / (2.0 * a);
    (vertex > 0.0) != (z[1] > 0.0) && offset > -h1 && offset < h2
}

/// Samples Z on [lo, hi], halving the step around suspicious local minima
/// of |Z|. Returns brackets of all sign changes.
fn scan_brackets(lo: f64, hi: f64, opts: &CensusOptions) -> Result<Vec<(f64, f64, f64, f64)>> {
    let n = ((hi - lo) / opts.scan_step).ceil().max(1.0) as usize;
    let mut ts = Vec::with_capacity(n + 1);
    let mut zs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = if i == n { hi } else { lo + (hi - lo) * i as f64 / n as f64 };
        ts.push(t);
        zs.push(critical_z(t, &opts.eval)?);
    }
    let mut i = 1;
    while i + 1 < ts.len() {
        let (za, zb, zc) = (zs[i - 1], zs[i], zs[i + 1]);
        let same_sign = (za > 0.0) == (zb > 0.0) && (zb > 0.0) == (zc > 0.0);
        let local_min = zb.abs() < za.abs() && zb.abs() < zc.abs();
        if !(same_sign && local_min) {
            i += 1;
            continue;
        }
        let crosses = parabola_crosses([ts[i - 1], ts[i], ts[i + 1]], [za, zb, zc]);
        let deep = zb.abs() < 0.1 * za.abs().max(zc.abs());
        if !(crosses || deep) {
            i += 1;
            continue;
        }
        let wide = ts[i] - ts[i - 1] > opts.min_step && ts[i + 1] - ts[i] > opts.min_step;
        if !wide {
            if crosses {
                return Err(Error::StepTooCoarse { t: ts[i] });
            }
            i += 1;
            continue;
        }
        let right = 0.5 * (ts[i] + ts[i + 1]);
        let left = 0.5 * (ts[i - 1] + ts[i]);
        ts.insert(i + 1, right);
        zs.insert(i + 1, critical_z(right, &opts.eval)?);
        ts.insert(i, left);
        zs.insert(i, critical_z(left, &opts.eval)?);
        i = i.saturating_sub(1).max(1);
    }
    let mut brackets = Vec::new();
    for k in 0..ts.len() - 1 {
        if (zs[k] > 0.0) != (zs[k + 1] > 0.0) {
            brackets.push((ts[k], zs[k], ts[k + 1], zs[k + 1]));
        }
    }
    Ok(brackets)
}

/// Zeros of ξ on the critical line with lo < γ < hi, indexed from 1.
pub fn locate_zeros_between(lo: f64, hi: f64, opts: &CensusOptions) -> Result<Vec<ZeroRecord>> {
    validate(opts)?;
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::NonFinite);
    }
    if !(lo >= 0.0 && hi > lo) {
        return Err(Error::InvalidArgument("census range needs 0 <= lo < hi"));
    }
    let mut zeros = Vec::new();
    for (mut a, za, mut b, _) in scan_brackets(lo, hi, opts)? {
        let positive_at_a = za > 0.0;
        while b - a > opts.bisect_tol {
            let mid = 0.5 * (a + b);
            if (critical_z(mid, &opts.eval)? > 0.0) == positive_at_a {
                a = mid;
            } else {
                b = mid;
            }
        }
        let gamma = 0.5 * (a + b);
        let sx = xi_scaled(c(0.5, gamma), &opts.eval)?;
        zeros.push(ZeroRecord {
            index: zeros.len() + 1,
            gamma,
            bracket_lo: a,
            bracket_hi: b,
            residual: sx.value.norm() * sx.log_scale.exp(),
        });
    }
    Ok(zeros)
}

/// All zeros ½ + iγ with 0 < γ ≤ T, for 2 < T ≤ `height_cap`.
pub fn locate_critical_zeros(t: f64, opts: &CensusOptions) -> Result<Vec<ZeroRecord>> {
    if !t.is_finite() {
        return Err(Error::NonFinite);
    }
    if !(t > 2.0 && t <= opts.height_cap) {
        return Err(Error::InvalidArgument("census height must satisfy 2 < T <= height cap"));
    }
    locate_zeros_between(0.0, t, opts)
}

/// Zeros up to `t` with no cap check, for the 2T census behind ε.
fn census_to(t: f64, opts: &CensusOptions) -> Result<Vec<ZeroRecord>> {
    if t > 2.0 * opts.height_cap {
        return Err(Error::CensusIncomplete);
    }
    locate_zeros_between(0.0, t, opts)
}

/// Zero ordinates within `nudge` of `t`.
fn ordinates_near(t: f64, opts: &CensusOptions) -> Result<Vec<f64>> {
    let pad = opts.nudge + 4.0 * opts.scan_step;
    let zeros = locate_zeros_between((t - pad).max(0.0), t + pad, opts)?;
    Ok(zeros
        .iter()
        .map(|z| z.gamma)
        .filter(|g| (g - t).abs() < opts.nudge)
        .collect())
}

/// Smallest height `t + k·nudge`, k ≥ 0, at least `nudge` away from every
/// zero ordinate.
pub fn nudged_height(t: f64, opts: &CensusOptions) -> Result<f64> {
    validate(opts)?;
    let mut h = t;
    for _ in 0..1000 {
        if ordinates_near(h, opts)?.is_empty() {
            return Ok(h);
        }
        h += opts.nudge;
    }
    Err(Error::NonConvergence)
}

fn rectangle_half_winding(vertices: [Complex64; 4], height: f64, opts: &CensusOptions) -> Result<i64> {
    let contour = Contour::polygon(&vertices)?;
    let eval = opts.eval;
    let w = match winding_number(|s| xi_direction(s, &eval), &contour, &opts.track) {
        Err(Error::ZeroOnPath { .. }) => {
            return Err(Error::ContourThroughZero {
                suggested_height: nudged_height(height + opts.nudge, opts)?,
            })
        }
        other => other?,
    };
    if w % 2 != 0 {
        return Err(Error::NonIntegerWinding {
            winding: w as f64 / 2.0,
        });
    }
    Ok(w / 2)
}

/// N(T), the number of zeros with 0 < γ < T, as half the winding of ξ
/// around the rectangle 2 − iT, 2 + iT, −1 + iT, −1 − iT.
pub fn count_zeros_nt(t: f64, opts: &CensusOptions) -> Result<i64> {
    validate(opts)?;
    if !t.is_finite() {
        return Err(Error::NonFinite);
    }
    if !(t > 0.0) {
        return Err(Error::InvalidArgument("N(T) needs T > 0"));
    }
    if !ordinates_near(t, opts)?.is_empty() {
        return Err(Error::ContourThroughZero {
            suggested_height: nudged_height(t, opts)?,
        });
    }
    rectangle_half_winding([c(2.0, -t), c(2.0, t), c(-1.0, t), c(-1.0, -t)], t, opts)
}

/// Census up to `t` checked against N(T).
pub fn census(t: f64, opts: &CensusOptions) -> Result<CensusResult> {
    let zeros = locate_critical_zeros(t, opts)?;
    let count = count_zeros_nt(t, opts)?;
    if count != zeros.len() as i64 {
        return Err(Error::CensusMismatch {
            census: zeros.len(),
            winding: count,
        });
    }
    Ok(CensusResult {
        zeros,
        height: t,
        count_by_winding: count,
        rvm_main: rvm_main_term(t),
    })
}

/// (T/2π) log(T/2π) − T/2π + 7/8. Meaningful for T > 2π.
pub fn rvm_main_term(t: f64) -> f64 {
    let u = t / TAU;
    u * u.ln() - u + 0.875
}

/// Minimum distance between distinct points of {½ ± iγ} over the records.
pub fn min_gap_of(zeros: &[ZeroRecord]) -> f64 {
    let mut gap = f64::INFINITY;
    if let Some(first) = zeros.first() {
        gap = 2.0 * first.gamma;
    }
    for w in zeros.windows(2) {
        gap = gap.min(w[1].gamma - w[0].gamma);
    }
    gap
}

/// Minimum pairwise distance among zeros with |γ| ≤ 2T, counting the
/// conjugate and 1 − ρ images of each critical zero. `+∞` when there is no
/// zero that low.
pub fn min_zero_gap(t: f64, opts: &CensusOptions) -> Result<f64> {
    validate(opts)?;
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument("gap height must be positive"));
    }
    Ok(min_gap_of(&census_to(2.0 * t, opts)?))
}

/// 0.9 · min{gap/5, (λ − ½)/2, T/9}.
pub fn epsilon_from_gap(gap: f64, lambda: f64, t: f64) -> f64 {
    0.9 * (gap / 5.0).min(0.5 * (lambda - 0.5)).min(t / 9.0)
}

/// The separation parameter ε for given λ and T.
pub fn epsilon_choice(lambda: f64, t: f64, opts: &CensusOptions) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(epsilon_from_gap(min_zero_gap(t, opts)?, lambda, t))
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 0.5 && lambda < 1.0) {
        return Err(Error::InvalidArgument("lambda must lie in (1/2, 1)"));
    }
    Ok(())
}

/// Sub-rectangle believed to hold zeros off the critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OffLineCandidate {
    pub sigma_lo: f64,
    pub sigma_hi: f64,
    pub t_lo: f64,
    pub t_hi: f64,
    pub count: i64,
}

/// Bisects [σ_lo, σ_hi] × [t_lo, t_hi] in t until every piece holding zeros
/// of `f` is at most `min_height` tall.
pub fn localize_zeros<F>(
    f: &F,
    sigma: (f64, f64),
    t_range: (f64, f64),
    min_height: f64,
    track: &TrackOptions,
) -> Result<Vec<OffLineCandidate>>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let (s0, s1) = sigma;
    let (t0, t1) = t_range;
    let rect = Contour::polygon(&[c(s0, t0), c(s1, t0), c(s1, t1), c(s0, t1)])?;
    let count = winding_number(f, &rect, track)?;
    if count == 0 {
        return Ok(Vec::new());
    }
    if t1 - t0 <= min_height {
        return Ok(alloc::vec![OffLineCandidate {
            sigma_lo: s0,
            sigma_hi: s1,
            t_lo: t0,
            t_hi: t1,
            count,
        }]);
    }
    let mut split = 0.5 * (t0 + t1);
    for attempt in 0..8 {
        let lower = localize_zeros(f, sigma, (t0, split), min_height, track);
        let upper = localize_zeros(f, sigma, (split, t1), min_height, track);
        match (lower, upper) {
            (Ok(mut a), Ok(b)) => {
                a.extend(b);
                return Ok(a);
            }
            (Err(Error::ZeroOnPath { .. }), _) | (_, Err(Error::ZeroOnPath { .. })) => {
                split += (t1 - t0) * 0.037 * (attempt + 1) as f64;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        }
    }
    Err(Error::NonConvergence)
}

/// Rectangle count for N(λ,T) with everything derived from it.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityCount {
    pub lambda: f64,
    pub height: f64,
    pub epsilon: f64,
    /// λ − ε.
    pub x: f64,
    /// T + ε.
    pub y: f64,
    /// Zeros with 1 − X < β < X and 0 < γ < Y.
    pub rectangle_count: i64,
    /// Census zeros on σ = ½ with γ < Y.
    pub critical_count: i64,
    /// rectangle_count − critical_count; nonzero would be a zero off the line.
    pub off_line_count: i64,
    /// Zeros with β > X and 0 < γ < Y, from (N(Y) − rectangle_count)/2.
    pub strip_count: i64,
    /// Localized sub-rectangles when `off_line_count` is nonzero.
    pub candidates: Vec<OffLineCandidate>,
}

/// Half the winding of ξ around X − iY, X + iY, 1−X + iY, 1−X − iY with
/// X = λ − ε and Y = T + ε.
pub fn count_zeros_density(lambda: f64, t: f64, opts: &CensusOptions) -> Result<i64> {
    Ok(density_detail(lambda, t, opts)?.rectangle_count)
}

pub fn density_detail(lambda: f64, t: f64, opts: &CensusOptions) -> Result<DensityCount> {
    validate(opts)?;
    check_lambda(lambda)?;
    if !(t > 2.0 && t <= opts.height_cap) {
        return Err(Error::InvalidArgument("density height must satisfy 2 < T <= height cap"));
    }
    let zeros = census_to(2.0 * t, opts)?;
    let epsilon = epsilon_from_gap(min_gap_of(&zeros), lambda, t);
    let x = lambda - epsilon;
    let y = t + epsilon;
    if x - 0.5 < 1e-6 {
        return Err(Error::DomainError("epsilon rule cannot separate the rectangle from the critical line"));
    }
    if zeros.iter().any(|z| (z.gamma - y).abs() < opts.nudge) {
        return Err(Error::ContourThroughZero {
            suggested_height: nudged_height(y + opts.nudge, opts)? - epsilon,
        });
    }
    let rectangle_count = rectangle_half_winding(
        [c(x, -y), c(x, y), c(1.0 - x, y), c(1.0 - x, -y)],
        y,
        opts,
    )?;
    let critical_count = zeros.iter().filter(|z| z.gamma < y).count() as i64;
    let off_line_count = rectangle_count - critical_count;
    let total = rectangle_half_winding([c(2.0, -y), c(2.0, y), c(-1.0, y), c(-1.0, -y)], y, opts)?;
    let outside = total - rectangle_count;
    let mut candidates = Vec::new();
    if off_line_count != 0 {
        let eval = opts.eval;
        let f = |s: Complex64| xi_direction(s, &eval);
        candidates = localize_zeros(&f, (0.5 + 1e-3, x), (0.0, y), 1.0, &opts.track)?;
    }
    Ok(DensityCount {
        lambda,
        height: t,
        epsilon,
        x,
        y,
        rectangle_count,
        critical_count,
        off_line_count,
        strip_count: outside / 2,
        candidates,
    })
}
