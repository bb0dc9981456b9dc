//! Arguments of ξ and of the pseudo Gamma ratios along horizontal and
//! vertical segments, and the five-route decomposition of the rectangle
//! count.

#[allow(unused_imports)]
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use super::{avoid_ordinates, census_for, envelope, CheckReport};
use crate::argtrack::{
    disk_zero_bound, sign_change_count, track_argument, winding_number, Contour, DiskOptions,
    Segment, TrackOptions,
};
use crate::census::{epsilon_from_gap, min_gap_of, xi_direction, CensusOptions};
use crate::fit::log_law;
use crate::specfun::{
    d_symmetrized, log_gamma, nabla, ratio_c, xi_scaled, EvalOptions, PseudoGammaParams,
};
use crate::{c, Error, Result};

const FIT_THRESHOLD: f64 = 0.2;
const TWO_PATH_TOL: f64 = 1e-6;

fn xi_arg(a: Complex64, b: Complex64, opts: &EvalOptions, track: &TrackOptions) -> Result<f64> {
    let seg = Segment::new(a, b)?;
    Ok(track_argument(|s| xi_direction(s, opts), &seg, track)?.delta_arg)
}

/// B(s) up to a positive real factor: the argument and the sign of Re B
/// with the exponential decay of ξ along vertical lines divided out.
pub(crate) fn b_direction(s: Complex64, p: &PseudoGammaParams, opts: &EvalOptions) -> Result<Complex64> {
    let den = nabla(s, p)?;
    if den.norm() < 1e-12 {
        return Err(Error::NearZeroDivision);
    }
    Ok(xi_scaled(s, opts)?.value * den.conj() / den.norm())
}

/// Im[log Γ((½+yi)/2) − log Γ((x+yi)/2)].
pub fn gamma_part(x: f64, y: f64, opts: &EvalOptions) -> Result<f64> {
    Ok(log_gamma(c(0.25, 0.5 * y), opts)?.im - log_gamma(c(0.5 * x, 0.5 * y), opts)?.im)
}

/// Im[log ξ(½+yi) − log ξ(x+yi)] along the horizontal segment.
pub fn horizontal_value(x: f64, y: f64, opts: &EvalOptions) -> Result<f64> {
    if x == 0.5 {
        return Ok(0.0);
    }
    xi_arg(c(x, y), c(0.5, y), opts, &TrackOptions::default())
}

/// Im[log ξ(½+yi) − log ξ(x+yi)] over a grid of heights moved off the zero
/// ordinates. The running maximum of |value| is fitted as c·log y and must
/// reach R² ≥ 0.8; the Γ part must stay within 1 for y ≥ 10. The residual
/// is the larger of max|Γ part| and (1 − R²)/0.2.
pub fn check_horizontal_arg(x: f64, y_grid: &[f64]) -> Result<CheckReport> {
    if !(0.5..=2.0).contains(&x) {
        return Err(Error::InvalidArgument("horizontal argument needs 1/2 <= x <= 2"));
    }
    if y_grid.len() < 2 || y_grid.iter().any(|&y| !(y > 2.0)) {
        return Err(Error::InvalidArgument("horizontal argument needs heights above 2"));
    }
    let opts = EvalOptions::default();
    let top = y_grid.iter().cloned().fold(0.0, f64::max);
    let zeros = census_for(top + 1.0)?;
    let (ys, nudged) = avoid_ordinates(y_grid, &zeros, CensusOptions::default().nudge);
    let mut values = Vec::with_capacity(ys.len());
    let mut gamma_max = 0.0f64;
    for &y in &ys {
        values.push(horizontal_value(x, y, &opts)?);
        if y >= 10.0 {
            gamma_max = gamma_max.max(gamma_part(x, y, &opts)?.abs());
        }
    }
    let fit = log_law(&ys, &envelope(&values))?;
    let residual = gamma_max.max((1.0 - fit.r_squared) / FIT_THRESHOLD);
    Ok(CheckReport::new("horizontal_arg")
        .param("x", x)
        .param("y_grid", ys)
        .param("nudged", nudged)
        .param("values", values)
        .param("gamma_part_max", gamma_max)
        .param("fit_r_squared", fit.r_squared)
        .param("fit_threshold", FIT_THRESHOLD)
        .bounded(y_grid.len(), residual, 1.0)
        .with_constant(fit.constant))
}

/// One height of the vertical-segment experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerticalSample {
    pub y: f64,
    /// Δarg B along 2 → 2+Yi.
    pub e_two: f64,
    /// Δarg B along X → X+Yi.
    pub e_x: f64,
    /// Δarg of ∇(2−X+s)/∇(s) along X → X+Yi.
    pub e: f64,
    /// Δarg ξ along 2 → 2+Yi minus along X → X+Yi.
    pub direct: f64,
    /// Δarg ξ along X+Yi → 2+Yi.
    pub horizontal: f64,
    /// Zeros of Re B on X → X+Yi.
    pub m: usize,
    /// Disk bound for D on |s − ½| ≤ Y with outer radius 9Y/5.
    pub m_prime: u32,
    /// D(½).
    pub d_half: f64,
}

impl VerticalSample {
    pub fn composite(&self) -> f64 {
        self.e_two - self.e_x + self.e
    }
}

pub fn vertical_sample(x_big: f64, y: f64) -> Result<VerticalSample> {
    let opts = EvalOptions::default();
    let track = TrackOptions::default();
    let p = PseudoGammaParams::new(y)?;
    let w = Segment::new(c(2.0, 0.0), c(2.0, y))?;
    let v = Segment::new(c(x_big, 0.0), c(x_big, y))?;
    let b = |s| b_direction(s, &p, &opts);
    let e_two = track_argument(b, &w, &track)?.delta_arg;
    let signs = sign_change_count(b, &v, &track)?;
    let e_x = signs.trace.delta_arg;
    let e = track_argument(|s| ratio_c(s, x_big, &p, &opts), &v, &track)?.delta_arg;
    let direct = xi_arg(c(2.0, 0.0), c(2.0, y), &opts, &track)?
        - xi_arg(c(x_big, 0.0), c(x_big, y), &opts, &track)?;
    let horizontal = xi_arg(c(x_big, y), c(2.0, y), &opts, &track)?;
    let d = |s: Complex64| {
        // a sample landing on a pole of D is moved off it
        let mut z = s;
        for _ in 0..8 {
            match d_symmetrized(z, x_big, &p, &opts) {
                Err(Error::NearZeroDivision) => z += c(1e-7, 1e-7),
                other => return other,
            }
        }
        Err(Error::NearZeroDivision)
    };
    let disk = DiskOptions {
        safety_factor: 1.02,
        ..DiskOptions::default()
    };
    let m_prime = disk_zero_bound(d, c(0.5, 0.0), y, 9.0 * y / 5.0, &disk)?.m_max;
    let d_half = d(c(0.5, 0.0))?.re;
    Ok(VerticalSample {
        y,
        e_two,
        e_x,
        e,
        direct,
        horizontal,
        m: signs.m,
        m_prime,
        d_half,
    })
}

/// E(2) − E(X) + E against the direct difference of ξ arguments on the two
/// vertical lines, plus the disk-bound pipeline.
///
/// Conditions, each normalized: two-path agreement within 10⁻⁶;
/// log-law fit of the running max of |E(2) − E(X) + E| with R² ≥ 0.8;
/// m ≤ m′ at every height; D(½) > 0. The fit of m′ against c·log Y is
/// reported.
pub fn check_vertical_arg(x_big: f64, y_grid: &[f64]) -> Result<CheckReport> {
    if !(x_big > 0.5 && x_big < 1.0) {
        return Err(Error::InvalidArgument("vertical argument needs 1/2 < X < 1"));
    }
    if y_grid.len() < 2 {
        return Err(Error::InvalidArgument("vertical argument needs two or more heights"));
    }
    let samples = y_grid
        .iter()
        .map(|&y| vertical_sample(x_big, y))
        .collect::<Result<Vec<_>>>()?;
    let composite: Vec<f64> = samples.iter().map(|s| s.composite()).collect();
    let two_path = samples
        .iter()
        .map(|s| (s.composite() - s.direct).abs())
        .fold(0.0f64, f64::max);
    let horizontal_gap = samples
        .iter()
        .map(|s| (s.direct - s.horizontal).abs())
        .fold(0.0f64, f64::max);
    let fit = log_law(y_grid, &envelope(&composite))?;
    let m_primes: Vec<f64> = samples.iter().map(|s| s.m_prime as f64).collect();
    let m_fit = log_law(y_grid, &m_primes)?;
    let mut order = 0.0f64;
    let mut violations = 0;
    for s in &samples {
        if s.m > s.m_prime as usize {
            violations += 1;
        }
        let ratio = match (s.m, s.m_prime) {
            (0, _) => 0.0,
            (_, 0) => f64::INFINITY,
            (m, mp) => m as f64 / mp as f64,
        };
        order = order.max(ratio);
    }
    let d_half_min = samples.iter().map(|s| s.d_half).fold(f64::INFINITY, f64::min);
    let positive = if d_half_min > 0.0 { 0.0 } else { f64::INFINITY };
    let residual = (two_path / TWO_PATH_TOL)
        .max((1.0 - fit.r_squared) / FIT_THRESHOLD)
        .max(order)
        .max(positive);
    Ok(CheckReport::new("vertical_arg")
        .param("x", x_big)
        .param("y_grid", y_grid.to_vec())
        .param("composite", composite)
        .param("two_path_residual", two_path)
        .param("horizontal_residual", horizontal_gap)
        .param("fit_r_squared", fit.r_squared)
        .param("fit_threshold", FIT_THRESHOLD)
        .param("m", samples.iter().map(|s| s.m as f64).collect::<Vec<_>>())
        .param("m_prime", m_primes)
        .param("m_exceeds_m_prime", violations as i64)
        .param("m_prime_log_constant", m_fit.constant)
        .param("m_prime_log_r_squared", m_fit.r_squared)
        .param("d_half_min", d_half_min)
        .bounded(samples.len(), residual, 1.0)
        .with_constant(fit.constant))
}

/// Arguments of ξ along the five routes around the region
/// [X, 2] × [0, Y] ∪ [½, 2] × [Y, Y1], with the count they imply.
#[derive(Debug, Clone, PartialEq)]
pub struct DjBreakdown {
    pub lambda: f64,
    pub t: f64,
    pub epsilon: f64,
    pub x: f64,
    pub y: f64,
    pub y1: f64,
    /// Im D₁ … Im D₅: Δarg ξ along 2+Y1i → ½+Y1i, 2+Yi → 2+Y1i, 2 → 2+Yi,
    /// X+Yi → ½+Yi and X → X+Yi.
    pub im_d: [f64; 5],
    /// Δarg ξ along ½+Y1i → ½+Yi and X → 2, the two pieces that close the
    /// five routes into a loop. Both vanish for a zero-free region.
    pub closing_arg: f64,
    /// (Im D₁ + Im D₂ + Im D₃ − Im D₄ − Im D₅ + closing_arg)/2π.
    pub reconstructed_count: f64,
    /// (W_S − W_R)/4: W_S the winding around [−1, 2] × [−Y1, Y1], W_R
    /// around [1−X, X] × [−Y, Y].
    pub census_count: i64,
    pub winding_s: i64,
    pub winding_r: i64,
}

impl DjBreakdown {
    /// |reconstructed − census| for a consistent breakdown.
    pub fn residual(&self) -> f64 {
        (self.reconstructed_count - self.census_count as f64).abs()
    }

    pub fn consistent(&self) -> bool {
        self.residual() <= 0.01
    }
}

/// Arguments of `f` along the five routes and the sum of the two closing
/// pieces, for the region [x, 2] × [0, y] ∪ [½, 2] × [y, y1].
fn route_args<F>(f: F, x: f64, y: f64, y1: f64, track: &TrackOptions) -> Result<([f64; 5], f64)>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let arg = |a: Complex64, b: Complex64| -> Result<f64> {
        Ok(track_argument(&f, &Segment::new(a, b)?, track)?.delta_arg)
    };
    let im_d = [
        arg(c(2.0, y1), c(0.5, y1))?,
        arg(c(2.0, y), c(2.0, y1))?,
        arg(c(2.0, 0.0), c(2.0, y))?,
        arg(c(x, y), c(0.5, y))?,
        arg(c(x, 0.0), c(x, y))?,
    ];
    let closing = arg(c(0.5, y1), c(0.5, y))? + arg(c(x, 0.0), c(2.0, 0.0))?;
    Ok((im_d, closing))
}

/// Splits the argument change of ξ around the region above into the five
/// routes and compares the count with rectangle windings.
pub fn dj_decomposition(lambda: f64, t: f64) -> Result<DjBreakdown> {
    let copts = CensusOptions::default();
    if !(lambda > 0.5 && lambda < 1.0) {
        return Err(Error::InvalidArgument("lambda must lie in (1/2, 1)"));
    }
    if !(t > 2.0 && t <= copts.height_cap) {
        return Err(Error::InvalidArgument("decomposition height must satisfy 2 < T <= height cap"));
    }
    let opts = copts.eval;
    let track = copts.track;
    let zeros = census_for(2.0 * t)?;
    let epsilon = epsilon_from_gap(min_gap_of(&zeros), lambda, t);
    let (x, y, y1) = (lambda - epsilon, t + epsilon, t + 4.0 * epsilon);
    let blocked = |lo: f64, hi: f64| zeros.iter().any(|z| z.gamma > lo - copts.nudge && z.gamma < hi + copts.nudge);
    if blocked(y, y1) {
        let mut next = t + copts.nudge;
        while blocked(next, next + 5.0 * epsilon) {
            next += copts.nudge;
        }
        return Err(Error::ContourThroughZero { suggested_height: next });
    }

    let f = |s| xi_direction(s, &opts);
    let (im_d, closing_arg) = route_args(f, x, y, y1, &track)?;
    let total = im_d[0] + im_d[1] + im_d[2] - im_d[3] - im_d[4] + closing_arg;

    let rect = |a: f64, b: f64, h: f64| Contour::polygon(&[c(b, -h), c(b, h), c(a, h), c(a, -h)]);
    let winding_s = winding_number(f, &rect(-1.0, 2.0, y1)?, &track)?;
    let winding_r = winding_number(f, &rect(1.0 - x, x, y)?, &track)?;
    let diff = winding_s - winding_r;
    if diff % 4 != 0 {
        return Err(Error::NonIntegerWinding { winding: diff as f64 / 4.0 });
    }
    Ok(DjBreakdown {
        lambda,
        t,
        epsilon,
        x,
        y,
        y1,
        im_d,
        closing_arg,
        reconstructed_count: total / TAU,
        census_count: diff / 4,
        winding_s,
        winding_r,
    })
}

/// Runs [`dj_decomposition`] for each (λ, T). Passes when every
/// reconstructed count is within 0.01 of its winding count. For the heights
/// sharing the smallest λ, |Im D₁|, |Im D₄| and |Im D₃ − Im D₅| are fitted
/// as c·log T and reported.
pub fn check_decomposition(cases: &[(f64, f64)]) -> Result<CheckReport> {
    if cases.is_empty() {
        return Err(Error::InvalidArgument("decomposition needs cases"));
    }
    let breakdowns = cases
        .iter()
        .map(|&(l, t)| dj_decomposition(l, t))
        .collect::<Result<Vec<_>>>()?;
    let mut report = CheckReport::new("decomposition");
    let mut worst = 0.0f64;
    for (i, b) in breakdowns.iter().enumerate() {
        worst = worst.max(b.residual() / 0.01);
        report = report
            .param(&alloc::format!("case{i}_lambda"), b.lambda)
            .param(&alloc::format!("case{i}_t"), b.t)
            .param(&alloc::format!("case{i}_epsilon"), b.epsilon)
            .param(&alloc::format!("case{i}_im_d"), b.im_d.to_vec())
            .param(&alloc::format!("case{i}_closing_arg"), b.closing_arg)
            .param(&alloc::format!("case{i}_reconstructed"), b.reconstructed_count)
            .param(&alloc::format!("case{i}_census_count"), b.census_count);
    }
    let lowest = cases.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let family: Vec<&DjBreakdown> = breakdowns.iter().filter(|b| b.lambda == lowest).collect();
    let mut constant = None;
    if family.len() >= 2 {
        let ts: Vec<f64> = family.iter().map(|b| b.t).collect();
        for (name, pick) in [
            ("d1", (|b: &DjBreakdown| b.im_d[0].abs()) as fn(&DjBreakdown) -> f64),
            ("d4", |b: &DjBreakdown| b.im_d[3].abs()),
            ("d3_minus_d5", |b: &DjBreakdown| (b.im_d[2] - b.im_d[4]).abs()),
        ] {
            let ys: Vec<f64> = family.iter().map(|b| pick(b)).collect();
            let fit = log_law(&ts, &ys)?;
            constant = Some(constant.unwrap_or(0.0f64).max(fit.constant));
            report = report
                .param(&alloc::format!("{name}_log_constant"), fit.constant)
                .param(&alloc::format!("{name}_log_r_squared"), fit.r_squared);
        }
    }
    let mut report = report.bounded(breakdowns.len(), worst, 1.0);
    report.fitted_constant = constant;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::im_loggamma_half_asym;
    use core::f64::consts::FRAC_PI_4;

    #[test]
    fn horizontal_value_degenerates_at_half() {
        assert_eq!(horizontal_value(0.5, 50.0, &EvalOptions::default()).unwrap(), 0.0);
    }

    #[test]
    fn gamma_part_tends_to_quarter_pi_slope() {
        // closed-form asymptotic of Im log Γ(s/2), O(1/|s|) each
        let o = EvalOptions::default();
        for x in [0.75, 1.5, 2.0] {
            for y in [10.0, 50.0, 400.0] {
                let oracle = im_loggamma_half_asym(c(0.5, y)).unwrap()
                    - im_loggamma_half_asym(c(x, y)).unwrap();
                let g = gamma_part(x, y, &o).unwrap();
                assert!((g - oracle).abs() <= 4.0 / y, "{x} {y}: {g} vs {oracle}");
                assert!((g + FRAC_PI_4 * (x - 0.5)).abs() <= 4.0 / y);
            }
        }
    }

    #[test]
    fn b_direction_has_the_argument_of_b() {
        let o = EvalOptions::default();
        let p = PseudoGammaParams::new(20.0).unwrap();
        for s in [c(0.75, 3.0), c(2.0, 15.0), c(-1.0, 8.0)] {
            let b = crate::specfun::ratio_b(s, &p, &o).unwrap();
            let d = b_direction(s, &p, &o).unwrap();
            assert!((b * d.conj()).arg().abs() < 1e-10 && (b * d.conj()).re > 0.0);
        }
    }

    #[test]
    fn routes_count_zeros_of_a_polynomial() {
        let track = TrackOptions::default();
        let (x, y, y1) = (0.7, 3.0, 3.6);
        // inside the lower block, inside the upper band, outside both
        for (zeros, expect) in [
            (alloc::vec![c(1.5, 1.0)], 1.0),
            (alloc::vec![c(0.6, 3.3), c(1.5, 1.0)], 2.0),
            (alloc::vec![c(0.6, 1.0), c(2.5, 1.0), c(1.0, 4.0)], 0.0),
        ] {
            let f = |s: Complex64| Ok(zeros.iter().fold(c(1.0, 0.0), |acc, z| acc * (s - z)));
            let (d, closing) = route_args(f, x, y, y1, &track).unwrap();
            let count = (d[0] + d[1] + d[2] - d[3] - d[4] + closing) / TAU;
            assert!((count - expect).abs() < 1e-9, "{zeros:?}: {count}");
        }
    }

    #[test]
    fn vertical_paths_agree() {
        let s = vertical_sample(0.75, 50.0).unwrap();
        assert!((s.composite() - s.direct).abs() <= 1e-6, "{s:?}");
        assert!(s.d_half > 0.0);
    }
}
