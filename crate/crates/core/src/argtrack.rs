//! Continuous argument of an analytic function along polyline contours.
//!
//! [`track_argument`] samples a segment adaptively until consecutive
//! arguments differ by less than π/2 and unwraps them. On top of it sit
//! [`winding_number`], the sign-change bound [`sign_change_count`]
//! (|Δarg| ≤ (m+1)π with m the zeros of Re f), and the disk bound
//! [`disk_zero_bound`] ((R/r)^m ≤ M/|f(z₀)|).

#[allow(unused_imports)]
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, TAU};
use core::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex64;

use crate::{ensure_finite, Error, Result};

static TRACES_CHECKED: AtomicUsize = AtomicUsize::new(0);
static SIGN_BOUND_VIOLATIONS: AtomicUsize = AtomicUsize::new(0);

/// Slack allowed in |Δarg| ≤ (m+1)π.
pub const SIGN_BOUND_SLACK: f64 = 1e-6;

/// Process-wide tally of the sign-change bound over every trace produced so
/// far: `(traces checked, violations)`.
pub fn sign_bound_tally() -> (usize, usize) {
    (
        TRACES_CHECKED.load(Ordering::Relaxed),
        SIGN_BOUND_VIOLATIONS.load(Ordering::Relaxed),
    )
}

/// A directed line segment with distinct endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    start: Complex64,
    end: Complex64,
}

impl Segment {
    pub fn new(start: Complex64, end: Complex64) -> Result<Self> {
        ensure_finite(start)?;
        ensure_finite(end)?;
        if start == end {
            return Err(Error::InvalidArgument("segment endpoints must differ"));
        }
        Ok(Segment { start, end })
    }

    pub fn start(&self) -> Complex64 {
        self.start
    }

    pub fn end(&self) -> Complex64 {
        self.end
    }

    /// Point at parameter `u ∈ [0, 1]`. Measured from the nearer end, so
    /// `reversed().point(1 − u)` is bit-identical to `point(u)`.
    pub fn point(&self, u: f64) -> Complex64 {
        let d = self.end - self.start;
        if u == 0.5 {
            (self.start + self.end) * 0.5
        } else if u < 0.5 {
            self.start + d * u
        } else {
            self.end - d * (1.0 - u)
        }
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            start: self.end,
            end: self.start,
        }
    }

    pub fn length(&self) -> f64 {
        (self.end - self.start).norm()
    }
}

/// An oriented polyline. Closed contours must be simple.
#[derive(Debug, Clone, PartialEq)]
pub struct Contour {
    vertices: Vec<Complex64>,
    closed: bool,
}

impl Contour {
    pub fn new(vertices: Vec<Complex64>, closed: bool) -> Result<Self> {
        if vertices.len() < 2 || (closed && vertices.len() < 3) {
            return Err(Error::InvalidArgument("contour needs more vertices"));
        }
        for v in &vertices {
            ensure_finite(*v)?;
        }
        let contour = Contour { vertices, closed };
        let segs = contour.segments()?;
        if closed {
            let n = segs.len();
            for i in 0..n {
                for j in i + 1..n {
                    let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                    if !adjacent && segments_intersect(&segs[i], &segs[j]) {
                        return Err(Error::InvalidArgument("closed contour self-intersects"));
                    }
                }
            }
        }
        Ok(contour)
    }

    /// Closed polygon through `vertices` in order.
    pub fn polygon(vertices: &[Complex64]) -> Result<Self> {
        Contour::new(vertices.to_vec(), true)
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Segments in traversal order; consecutive vertices must differ.
    pub fn segments(&self) -> Result<Vec<Segment>> {
        let n = self.vertices.len();
        let count = if self.closed { n } else { n - 1 };
        (0..count)
            .map(|i| Segment::new(self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segments_intersect(p: &Segment, q: &Segment) -> bool {
    let d1 = cross(q.end - q.start, p.start - q.start);
    let d2 = cross(q.end - q.start, p.end - q.start);
    let d3 = cross(p.end - p.start, q.start - p.start);
    let d4 = cross(p.end - p.start, q.end - p.start);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |a: Complex64, b: Complex64, c: Complex64, d: f64| {
        d == 0.0
            && c.re >= a.re.min(b.re)
            && c.re <= a.re.max(b.re)
            && c.im >= a.im.min(b.im)
            && c.im <= a.im.max(b.im)
    };
    on(q.start, q.end, p.start, d1)
        || on(q.start, q.end, p.end, d2)
        || on(p.start, p.end, q.start, d3)
        || on(p.start, p.end, q.end, d4)
}

/// Sampling policy of [`track_argument`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackOptions {
    /// Fewest initial samples per segment.
    pub initial_samples: usize,
    /// Largest distance between initial samples. Refinement only sees
    /// argument steps modulo 2π, so this must keep every initial step of f
    /// below π/2 away from zeros.
    pub max_spacing: f64,
    pub max_depth: u32,
    /// Largest accepted argument step between consecutive samples.
    pub max_arg_step: f64,
    /// Relative modulus below which a sample counts as a zero.
    pub zero_threshold: f64,
    /// Hard cap on samples in one trace.
    pub max_samples: usize,
}

impl Default for TrackOptions {
    fn default() -> Self {
        TrackOptions {
            initial_samples: 17,
            max_spacing: 0.25,
            max_depth: 40,
            max_arg_step: FRAC_PI_2,
            zero_threshold: 1e-10,
            max_samples: 1 << 22,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArgSample {
    /// Position along the segment, in [0, 1].
    pub param: f64,
    pub modulus: f64,
    /// Continuous argument relative to the first sample.
    pub unwrapped_arg: f64,
}

/// Continuous argument of `f` along one segment.
#[derive(Debug, Clone, PartialEq)]
pub struct ArgTrace {
    pub samples: Vec<ArgSample>,
    /// Principal argument of f at the start; absolute arguments are
    /// `start_arg + unwrapped_arg`.
    pub start_arg: f64,
    pub delta_arg: f64,
    pub min_modulus: f64,
    pub refinement_depth: u32,
}

impl ArgTrace {
    /// Sign changes of Re f between consecutive samples. Each step moves the
    /// argument by less than π/2, so it crosses at most one of the levels
    /// π/2 + kπ where Re f vanishes.
    pub fn re_sign_changes(&self) -> usize {
        let level = |a: f64| ((self.start_arg + a - FRAC_PI_2) / PI).floor();
        self.samples
            .windows(2)
            .filter(|w| level(w[0].unwrapped_arg) != level(w[1].unwrapped_arg))
            .count()
    }

    /// (m+1)π − |Δarg| with m = [`Self::re_sign_changes`]; never below
    /// −[`SIGN_BOUND_SLACK`] for a valid trace.
    pub fn sign_bound_margin(&self) -> f64 {
        (self.re_sign_changes() as f64 + 1.0) * PI - self.delta_arg.abs()
    }
}

#[derive(Clone, Copy)]
struct Point {
    u: f64,
    value: Complex64,
}

/// Principal value of arg(b) − arg(a), in (−π, π].
#[inline]
fn arg_step(a: Complex64, b: Complex64) -> f64 {
    (b * a.conj()).arg()
}

/// Tracks a continuous argument of `f` along `seg`.
///
/// Starts from at least `initial_samples` uniform samples, no further apart
/// than `max_spacing`, and bisects every interval
/// whose endpoint arguments differ by π/2 or more, or across which the
/// modulus drops by more than a factor of ten. A trace that runs into a
/// zero fails with [`Error::ZeroOnPath`] rather than returning a value.
pub fn track_argument<F>(f: F, seg: &Segment, opts: &TrackOptions) -> Result<ArgTrace>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if opts.initial_samples < 2 || !(opts.max_spacing > 0.0) {
        return Err(Error::InvalidArgument("need two initial samples and positive spacing"));
    }
    let eval = |u: f64| -> Result<Point> {
        let value = f(seg.point(u))?;
        ensure_finite(value)?;
        Ok(Point { u, value })
    };
    let by_length = (seg.length() / opts.max_spacing).ceil() + 1.0;
    if by_length > opts.max_samples as f64 {
        return Err(Error::MaxDepthExceeded);
    }
    // a power of two plus one keeps every parameter dyadic
    let n0 = (opts.initial_samples.max(by_length as usize) - 1).next_power_of_two() + 1;
    let mut initial = Vec::with_capacity(n0);
    for i in 0..n0 {
        initial.push(eval(i as f64 / (n0 - 1) as f64)?);
    }
    let scale = initial.iter().map(|p| p.value.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Err(Error::ZeroOnPath {
            at: (seg.start.re, seg.start.im),
        });
    }
    let zero_level = opts.zero_threshold * scale;
    let zero_err = |p: &Point| {
        let z = seg.point(p.u);
        Error::ZeroOnPath { at: (z.re, z.im) }
    };
    for p in &initial {
        if p.value.norm() <= zero_level {
            return Err(zero_err(p));
        }
    }

    let mut points: Vec<Point> = Vec::with_capacity(4 * n0);
    points.push(initial[0]);
    let mut max_depth = 0u32;
    // depth-first over a stack of pending right endpoints keeps output ordered
    for pair in initial.windows(2) {
        let mut stack: Vec<(Point, u32)> = alloc::vec![(pair[1], 0)];
        let mut left = pair[0];
        while let Some(&(right, depth)) = stack.last() {
            let step = arg_step(left.value, right.value).abs();
            let (ml, mr) = (left.value.norm(), right.value.norm());
            let dip = ml.min(mr) < 0.1 * ml.max(mr);
            if step < opts.max_arg_step && !dip {
                points.push(right);
                left = right;
                stack.pop();
                continue;
            }
            if step < opts.max_arg_step && depth >= 12 {
                // modulus dips alone stop refining at a moderate depth
                points.push(right);
                left = right;
                stack.pop();
                continue;
            }
            if depth >= opts.max_depth {
                let low = if ml < mr { left } else { right };
                if low.value.norm() <= zero_level * 1e3 || step >= FRAC_PI_2 * 1.5 {
                    return Err(zero_err(&low));
                }
                return Err(Error::MaxDepthExceeded);
            }
            let mid = eval(0.5 * (left.u + right.u))?;
            if mid.value.norm() <= zero_level {
                return Err(zero_err(&mid));
            }
            max_depth = max_depth.max(depth + 1);
            stack.push((mid, depth + 1));
            if points.len() + stack.len() > opts.max_samples {
                return Err(Error::MaxDepthExceeded);
            }
        }
    }

    // unwrapped = (a_i − a_0) + 2πk_i with principal arguments a_i, which
    // makes reversing the segment negate every difference exactly
    let start_arg = points[0].value.arg();
    let mut samples = Vec::with_capacity(points.len());
    let mut running = 0.0;
    let mut min_modulus = f64::INFINITY;
    for (i, p) in points.iter().enumerate() {
        let principal = p.value.arg() - start_arg;
        if i > 0 {
            running += arg_step(points[i - 1].value, p.value);
        }
        let turns = ((running - principal) / TAU).round();
        let modulus = p.value.norm();
        min_modulus = min_modulus.min(modulus);
        samples.push(ArgSample {
            param: p.u,
            modulus,
            unwrapped_arg: principal + TAU * turns,
        });
    }
    let delta_arg = samples[samples.len() - 1].unwrapped_arg;
    let trace = ArgTrace {
        samples,
        start_arg,
        delta_arg,
        min_modulus,
        refinement_depth: max_depth,
    };
    TRACES_CHECKED.fetch_add(1, Ordering::Relaxed);
    if trace.sign_bound_margin() < -SIGN_BOUND_SLACK {
        SIGN_BOUND_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
    Ok(trace)
}

/// Winding number of `f` around a closed contour with the per-segment traces.
#[derive(Debug, Clone, PartialEq)]
pub struct Winding {
    pub winding: i64,
    pub total_arg: f64,
    pub traces: Vec<ArgTrace>,
}

/// Δarg/2π of `f` around the closed contour `c`, rounded to an integer.
/// Fails with [`Error::NonIntegerWinding`] when the total is more than 10⁻³
/// away from an integer.
pub fn winding_number<F>(f: F, c: &Contour, opts: &TrackOptions) -> Result<i64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    Ok(winding_with_traces(f, c, opts)?.winding)
}

pub fn winding_with_traces<F>(f: F, c: &Contour, opts: &TrackOptions) -> Result<Winding>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if !c.is_closed() {
        return Err(Error::InvalidArgument("winding number needs a closed contour"));
    }
    let mut traces = Vec::new();
    let mut total = 0.0;
    for seg in c.segments()? {
        let trace = track_argument(&f, &seg, opts)?;
        total += trace.delta_arg;
        traces.push(trace);
    }
    let w = total / TAU;
    let rounded = w.round();
    if (w - rounded).abs() > 1e-3 {
        return Err(Error::NonIntegerWinding { winding: w });
    }
    Ok(Winding {
        winding: rounded as i64,
        total_arg: total,
        traces,
    })
}

/// Result of [`sign_change_count`].
#[derive(Debug, Clone, PartialEq)]
pub struct SignChanges {
    /// Number of interior points where Re f = 0.
    pub m: usize,
    /// (m+1)π.
    pub bound: f64,
    /// Segment parameters of the located crossings, each to within 10⁻⁹.
    pub crossings: Vec<f64>,
    pub trace: ArgTrace,
}

/// Counts the zeros of Re f along `seg` (end points excluded) and returns
/// the bound (m+1)π on |Δarg|.
pub fn sign_change_count<F>(f: F, seg: &Segment, opts: &TrackOptions) -> Result<SignChanges>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let trace = track_argument(&f, seg, opts)?;
    let base = trace.start_arg;
    let level = |a: f64| ((base + a - FRAC_PI_2) / PI).floor();
    let mut crossings = Vec::new();
    for w in trace.samples.windows(2) {
        if level(w[0].unwrapped_arg) == level(w[1].unwrapped_arg) {
            continue;
        }
        // Re f changes sign in (lo, hi): bisect on its sign
        let (mut lo, mut hi) = (w[0].param, w[1].param);
        let lo_sign = (base + w[0].unwrapped_arg).cos() > 0.0;
        while hi - lo > 1e-9 {
            let mid = 0.5 * (lo + hi);
            let v = f(seg.point(mid))?;
            if (v.re > 0.0) == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        crossings.push(0.5 * (lo + hi));
    }
    let m = crossings.len();
    let bound = (m as f64 + 1.0) * PI;
    debug_assert!(trace.delta_arg.abs() <= bound + SIGN_BOUND_SLACK);
    Ok(SignChanges {
        m,
        bound,
        crossings,
        trace,
    })
}

/// Sampling policy of [`disk_zero_bound`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskOptions {
    pub n_samples: usize,
    pub refine_passes: usize,
    /// Multiplier applied to the sampled maximum, which can only
    /// underestimate the true maximum.
    pub safety_factor: f64,
}

impl Default for DiskOptions {
    fn default() -> Self {
        DiskOptions {
            n_samples: 720,
            refine_passes: 3,
            safety_factor: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskBound {
    /// Upper bound on the zeros of f in |z − z₀| ≤ r.
    pub m_max: u32,
    /// Sampled max |f| on |z − z₀| = R, before the safety factor.
    pub max_modulus: f64,
    pub center_modulus: f64,
}

/// Bounds the zeros of `f` in |z − z₀| ≤ r by the largest m with
/// (R/r)^m ≤ M/|f(z₀)|, M the maximum of |f| on |z − z₀| = R.
pub fn disk_zero_bound<F>(
    f: F,
    z0: Complex64,
    r: f64,
    big_r: f64,
    opts: &DiskOptions,
) -> Result<DiskBound>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    ensure_finite(z0)?;
    if !(r > 0.0 && big_r > r && big_r.is_finite()) {
        return Err(Error::InvalidArgument("disk bound needs 0 < r < R"));
    }
    if opts.n_samples < 4 || !(opts.safety_factor >= 1.0) {
        return Err(Error::InvalidArgument("disk bound needs n_samples >= 4 and safety >= 1"));
    }
    let center = f(z0)?.norm();
    if !(center > 0.0) {
        return Err(Error::ZeroAtCenter);
    }
    let on_circle = |theta: f64| -> Result<f64> {
        let z = z0 + Complex64::from_polar(big_r, theta);
        Ok(f(z)?.norm())
    };
    let n = opts.n_samples;
    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 0..n {
        let theta = TAU * i as f64 / n as f64;
        let v = on_circle(theta)?;
        if v > best.1 {
            best = (theta, v);
        }
    }
    let mut half_width = TAU / n as f64;
    for _ in 0..opts.refine_passes {
        let center_theta = best.0;
        for k in 0..=32 {
            let theta = center_theta - half_width + 2.0 * half_width * k as f64 / 32.0;
            let v = on_circle(theta)?;
            if v > best.1 {
                best = (theta, v);
            }
        }
        half_width /= 8.0;
    }
    let max_modulus = best.1;
    let ratio = max_modulus * opts.safety_factor / center;
    let m = if ratio <= 1.0 {
        0
    } else {
        (ratio.ln() / (big_r / r).ln()).floor() as u32
    };
    Ok(DiskBound {
        m_max: m,
        max_modulus,
        center_modulus: center,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    fn linear(s: Complex64) -> Result<Complex64> {
        Ok(s - 1.0)
    }

    #[test]
    fn linear_function_chord() {
        let seg = Segment::new(c(2.0, 0.0), c(0.0, 2.0)).unwrap();
        let tr = track_argument(linear, &seg, &TrackOptions::default()).unwrap();
        let expect = PI - 2.0f64.atan();
        assert!((tr.delta_arg - expect).abs() < 1e-12);
        assert!(tr.min_modulus > 0.0);
        for w in tr.samples.windows(2) {
            assert!((w[1].unwrapped_arg - w[0].unwrapped_arg).abs() < FRAC_PI_2);
        }
    }

    #[test]
    fn constant_has_no_argument_change() {
        let seg = Segment::new(c(-3.0, 1.0), c(5.0, 7.0)).unwrap();
        let tr = track_argument(|_| Ok(c(5.0, 0.0)), &seg, &TrackOptions::default()).unwrap();
        assert_eq!(tr.delta_arg, 0.0);
        // length 10 at spacing 0.25 needs 41 samples, rounded up to 2^k + 1
        assert_eq!(tr.samples.len(), 65);
    }

    #[test]
    fn zero_on_path_is_an_error() {
        let seg = Segment::new(c(0.0, 0.0), c(2.0, 0.0)).unwrap();
        assert!(matches!(
            track_argument(linear, &seg, &TrackOptions::default()),
            Err(Error::ZeroOnPath { .. })
        ));
        // zero between the initial samples
        let seg = Segment::new(c(0.0, 0.0), c(2.0 * 1.1, 0.0)).unwrap();
        assert!(matches!(
            track_argument(linear, &seg, &TrackOptions::default()),
            Err(Error::ZeroOnPath { .. })
        ));
    }

    fn square(v: [(f64, f64); 4]) -> Contour {
        Contour::polygon(&v.map(|(a, b)| c(a, b))).unwrap()
    }

    #[test]
    fn winding_examples() {
        let o = TrackOptions::default();
        // s − 1 vanishes on the bottom edge of the square 0, 2, 2+2i, 2i
        let through = square([(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]);
        assert!(matches!(
            winding_number(linear, &through, &o),
            Err(Error::ZeroOnPath { .. })
        ));
        let around = square([(0.0, -1.0), (2.0, -1.0), (2.0, 2.0), (0.0, 2.0)]);
        assert_eq!(winding_number(linear, &around, &o).unwrap(), 1);
        let outside = square([(2.0, 0.0), (4.0, 0.0), (4.0, 2.0), (2.0, 2.0)]);
        assert_eq!(winding_number(linear, &outside, &o).unwrap(), 0);
        let outside = square([(2.0, 0.5), (4.0, 0.5), (4.0, 2.0), (2.0, 2.0)]);
        assert_eq!(winding_number(linear, &outside, &o).unwrap(), 0);
        let cubic = |s: Complex64| Ok((s - 1.0) * (s - 1.0) * (s - c(0.0, 1.0)));
        let big = square([(-2.0, -2.0), (3.0, -2.0), (3.0, 3.0), (-2.0, 3.0)]);
        assert_eq!(winding_number(cubic, &big, &o).unwrap(), 3);
        let cw = square([(-2.0, -2.0), (-2.0, 3.0), (3.0, 3.0), (3.0, -2.0)]);
        assert_eq!(winding_number(cubic, &cw, &o).unwrap(), -3);
    }

    #[test]
    fn contour_validation() {
        assert!(Contour::new(alloc::vec![c(0.0, 0.0)], false).is_err());
        assert!(Contour::new(alloc::vec![c(0.0, 0.0), c(0.0, 0.0)], false).is_err());
        // bow tie
        let bow = [c(0.0, 0.0), c(1.0, 1.0), c(1.0, 0.0), c(0.0, 1.0)];
        assert!(Contour::polygon(&bow).is_err());
        let open = Contour::new(alloc::vec![c(0.0, 0.0), c(1.0, 0.0)], false).unwrap();
        assert!(winding_number(linear, &open, &TrackOptions::default()).is_err());
    }

    #[test]
    fn sign_changes_examples() {
        let o = TrackOptions::default();
        let seg = Segment::new(c(1.0, -1.0), c(1.0, 1.0)).unwrap();
        let sc = sign_change_count(Ok, &seg, &o).unwrap();
        assert_eq!(sc.m, 0);
        assert!((sc.trace.delta_arg - FRAC_PI_2).abs() < 1e-12);
        assert!(sc.trace.delta_arg.abs() <= sc.bound);

        let seg = Segment::new(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let spin = |s: Complex64| Ok(Complex64::from_polar(1.0, 4.0 * PI * s.re));
        let sc = sign_change_count(spin, &seg, &o).unwrap();
        assert_eq!(sc.m, 4);
        assert!((sc.trace.delta_arg - 4.0 * PI).abs() < 1e-9);
        for (got, want) in sc.crossings.iter().zip([0.125, 0.375, 0.625, 0.875]) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn disk_bound_examples() {
        let o = DiskOptions::default();
        let quad = |z: Complex64| Ok(z * z - 1.0);
        let b = disk_zero_bound(quad, c(0.0, 0.0), 1.0, 2.0, &o).unwrap();
        assert_eq!(b.m_max, 2);
        assert!((b.max_modulus - 5.0).abs() < 1e-9);
        let b = disk_zero_bound(|_| Ok(c(3.0, 0.0)), c(1.0, 1.0), 0.5, 4.0, &o).unwrap();
        assert_eq!(b.m_max, 0);
        assert_eq!(
            disk_zero_bound(quad, c(1.0, 0.0), 0.5, 1.0, &o),
            Err(Error::ZeroAtCenter)
        );
        assert!(disk_zero_bound(quad, c(0.0, 0.0), 2.0, 1.0, &o).is_err());
    }
}
