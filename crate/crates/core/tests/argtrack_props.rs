use core::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zerocensus_core::argtrack::{
    disk_zero_bound, sign_bound_tally, sign_change_count, track_argument, winding_number,
    Contour, DiskOptions, Segment, TrackOptions, SIGN_BOUND_SLACK,
};
use zerocensus_core::specfun::{xi_scaled, EvalOptions};
use zerocensus_core::{c, Complex64, Result};

fn random_roots(rng: &mut ChaCha8Rng, max_radius: f64) -> Vec<Complex64> {
    let degree = rng.gen_range(1..=6);
    (0..degree)
        .map(|_| Complex64::from_polar(max_radius * rng.gen::<f64>().sqrt(), TAU * rng.gen::<f64>()))
        .collect()
}

fn poly(roots: &[Complex64], z: Complex64) -> Complex64 {
    roots.iter().fold(c(1.0, 0.0), |acc, r| acc * (z - r))
}

#[test]
fn xi_trace_matches_dense_unwrapping() {
    let o = EvalOptions::default();
    let f = |s: Complex64| -> Result<Complex64> { Ok(xi_scaled(s, &o)?.value) };
    let seg = Segment::new(c(2.0, 0.0), c(2.0, 10.0)).unwrap();
    let tr = track_argument(f, &seg, &TrackOptions::default()).unwrap();
    assert!(tr.delta_arg.is_finite() && tr.min_modulus > 0.0);

    let n = 10_000;
    let mut prev = f(seg.point(0.0)).unwrap().arg();
    let mut total = 0.0;
    for i in 1..=n {
        let a = f(seg.point(i as f64 / n as f64)).unwrap().arg();
        let mut d = a - prev;
        while d > PI {
            d -= TAU;
        }
        while d <= -PI {
            d += TAU;
        }
        total += d;
        prev = a;
    }
    assert!((tr.delta_arg - total).abs() <= 1e-6, "{} vs {total}", tr.delta_arg);
}

#[test]
fn reversal_negates_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let o = TrackOptions::default();
    let mut ran = 0;
    for _ in 0..30 {
        let roots = random_roots(&mut rng, 2.0);
        let a = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let b = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let seg = Segment::new(a, b).unwrap();
        let f = |z: Complex64| Ok(poly(&roots, z));
        let (Ok(fw), Ok(bw)) = (track_argument(f, &seg, &o), track_argument(f, &seg.reversed(), &o))
        else {
            continue;
        };
        assert_eq!(fw.delta_arg, -bw.delta_arg);
        assert_eq!(fw.samples.len(), bw.samples.len());
        ran += 1;
    }
    assert!(ran >= 25);
}

#[test]
fn winding_counts_enclosed_roots_and_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let o = TrackOptions::default();
    let mut ran = 0;
    for _ in 0..30 {
        let roots = random_roots(&mut rng, 1.5);
        let f = |z: Complex64| Ok(poly(&roots, z));
        let split = rng.gen_range(-0.9..0.9);
        let whole = Contour::polygon(&[c(-1.0, -1.0), c(1.0, -1.0), c(1.0, 1.0), c(-1.0, 1.0)]).unwrap();
        let left = Contour::polygon(&[c(-1.0, -1.0), c(split, -1.0), c(split, 1.0), c(-1.0, 1.0)]).unwrap();
        let right = Contour::polygon(&[c(split, -1.0), c(1.0, -1.0), c(1.0, 1.0), c(split, 1.0)]).unwrap();
        let inside = |lo: f64, hi: f64| {
            roots
                .iter()
                .filter(|r| r.re > lo && r.re < hi && r.im.abs() < 1.0)
                .count() as i64
        };
        let (Ok(w), Ok(wl), Ok(wr)) = (
            winding_number(f, &whole, &o),
            winding_number(f, &left, &o),
            winding_number(f, &right, &o),
        ) else {
            continue;
        };
        assert_eq!(w, inside(-1.0, 1.0));
        assert_eq!(w, wl + wr);
        assert_eq!(wl, inside(-1.0, split));
        ran += 1;
    }
    assert!(ran >= 25);
}

#[test]
fn sign_bound_holds_on_every_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let o = TrackOptions::default();
    for _ in 0..40 {
        let roots = random_roots(&mut rng, 2.0);
        let seg = Segment::new(c(-2.5, rng.gen_range(-2.0..2.0)), c(2.5, rng.gen_range(-2.0..2.0))).unwrap();
        if let Ok(sc) = sign_change_count(|z| Ok(poly(&roots, z)), &seg, &o) {
            assert!(sc.trace.delta_arg.abs() <= sc.bound + SIGN_BOUND_SLACK);
            assert_eq!(sc.m, sc.trace.re_sign_changes());
        }
    }
    let (checked, violations) = sign_bound_tally();
    assert!(checked > 0);
    assert_eq!(violations, 0);
}

#[test]
fn disk_bound_is_sound_on_random_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let o = DiskOptions::default();
    for _ in 0..50 {
        let roots = random_roots(&mut rng, 0.8);
        let r = rng.gen_range(0.3..1.2);
        let big_r = r * rng.gen_range(1.2..3.0);
        let b = disk_zero_bound(|z| Ok(poly(&roots, z)), c(0.0, 0.0), r, big_r, &o).unwrap();
        let inside = roots.iter().filter(|z| z.norm() <= r).count() as u32;
        assert!(b.m_max >= inside, "m_max {} < {inside}", b.m_max);
    }
}
