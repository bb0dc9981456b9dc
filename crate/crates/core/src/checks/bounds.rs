//! Soundness of the disk zero bound and the sign-change bound.

#[allow(unused_imports)]
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CheckReport;
use crate::argtrack::{
    disk_zero_bound, sign_bound_tally, sign_change_count, DiskOptions, Segment, TrackOptions,
    SIGN_BOUND_SLACK,
};
use crate::census::xi_direction;
use super::segments::b_direction;
use crate::specfun::{EvalOptions, PseudoGammaParams};
use crate::{c, Error, Result};

fn random_roots(rng: &mut ChaCha8Rng, max_radius: f64) -> Vec<Complex64> {
    let degree = rng.gen_range(1..=8);
    (0..degree)
        .map(|_| Complex64::from_polar(max_radius * rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>()))
        .collect()
}

fn poly(roots: &[Complex64], z: Complex64) -> Complex64 {
    roots.iter().fold(c(1.0, 0.0), |acc, r| acc * (z - r))
}

/// Disk bound against polynomials with known roots: `n` random ones and
/// z² − 1 on |z| ≤ 1 with outer radius 2, whose bound must be exactly 2.
/// The residual is the largest (true count − bound), and |bound − 2| for the
/// worked example; it must not exceed 0.
pub fn check_disk_bound(n: usize, seed: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("disk bound needs samples"));
    }
    let opts = DiskOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::NEG_INFINITY;
    let mut slack = Vec::with_capacity(n);
    for _ in 0..n {
        let roots = random_roots(&mut rng, 1.5);
        let r = rng.gen_range(0.3..1.2);
        let big_r = r * rng.gen_range(1.2..3.0);
        let bound = match disk_zero_bound(|z| Ok(poly(&roots, z)), c(0.0, 0.0), r, big_r, &opts) {
            Ok(b) => b.m_max as f64,
            // a root at the centre leaves nothing to bound
            Err(Error::ZeroAtCenter) => continue,
            Err(e) => return Err(e),
        };
        let inside = roots.iter().filter(|z| z.norm() <= r).count() as f64;
        worst = worst.max(inside - bound);
        slack.push(bound - inside);
    }
    let worked = disk_zero_bound(|z| Ok(z * z - 1.0), c(0.0, 0.0), 1.0, 2.0, &opts)?.m_max;
    worst = worst.max((worked as f64 - 2.0).abs());
    Ok(CheckReport::new("disk_bound")
        .param("n", n)
        .param("seed", seed)
        .param("worked_example_bound", worked as i64)
        .param("slack", slack)
        .bounded(n + 1, worst, 0.0))
}

/// Runs sign-change counts on B along ¾ → ¾ + 30i, on ξ along three
/// vertical lines and on random polynomials, then reads the process-wide
/// tally of |Δarg| ≤ (m+1)π + 10⁻⁶ over every trace produced so far. The
/// residual is the number of violations.
pub fn check_sign_change_bound(seed: u64) -> Result<CheckReport> {
    let opts = EvalOptions::default();
    let track = TrackOptions::default();
    let mut margins = Vec::new();

    let p = PseudoGammaParams::new(30.0)?;
    let seg = Segment::new(c(0.75, 0.0), c(0.75, 30.0))?;
    let b = sign_change_count(|s| b_direction(s, &p, &opts), &seg, &track)?;
    margins.push(b.bound - b.trace.delta_arg.abs());
    let b_m = b.m;

    for x in [0.6, 1.0, 2.0] {
        let seg = Segment::new(c(x, 0.0), c(x, 60.0))?;
        let r = sign_change_count(|s| xi_direction(s, &opts), &seg, &track)?;
        margins.push(r.bound - r.trace.delta_arg.abs());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        let roots = random_roots(&mut rng, 2.0);
        let a = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let z = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let seg = Segment::new(a, z)?;
        match sign_change_count(|s| Ok(poly(&roots, s)), &seg, &track) {
            Ok(r) => margins.push(r.bound - r.trace.delta_arg.abs()),
            Err(Error::ZeroOnPath { .. }) => {}
            Err(e) => return Err(e),
        }
    }

    let least = margins.iter().cloned().fold(f64::INFINITY, f64::min);
    let (checked, violations) = sign_bound_tally();
    Ok(CheckReport::new("sign_change_bound")
        .param("seed", seed)
        .param("b_sign_changes", b_m)
        .param("own_traces", margins.len())
        .param("least_margin", least)
        .param("slack", SIGN_BOUND_SLACK)
        .param("traces_checked", checked)
        .param("violations", violations)
        .bounded(checked, violations as f64, 0.0))
}
