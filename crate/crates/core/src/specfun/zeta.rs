#[allow(unused_imports)]
use num_traits::Float;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::{EvalOptions, BERNOULLI_EVEN};
use crate::{ensure_finite, Error, Result};

const LN_2: f64 = core::f64::consts::LN_2;

/// Which series produced a ζ value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaPath {
    /// The globally convergent double series
    /// ζ(s) = (1 − 2^{1−s})⁻¹ Σₙ 2^{−(n+1)} Σₖ (−1)ᵏ C(n,k) (k+1)^{−s}.
    Alternating,
    /// Truncated Dirichlet sum with Bernoulli tail corrections.
    EulerMaclaurin,
}

/// Bernoulli correction order of the Euler–Maclaurin evaluator.
const EM_ORDER: usize = 8;
/// Below this |1 − 2^{1−s}| the alternating series prefactor is too close
/// to one of its removable poles on σ = 1.
const PREFACTOR_GUARD: f64 = 1e-3;

/// Riemann zeta function.
///
/// Uses the alternating double series for `|t| <= em_cutoff_t` and
/// Euler–Maclaurin above it.
pub fn zeta(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    Ok(zeta_and_derivative(s, opts, false)?.0)
}

/// ζ(s) through the alternating double series regardless of `|t|`.
pub fn zeta_alternating(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    check_input(s, opts)?;
    Ok(alternating(s, opts, false)?.0)
}

/// ζ(s) through Euler–Maclaurin regardless of `|t|`.
pub fn zeta_euler_maclaurin(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    check_input(s, opts)?;
    Ok(euler_maclaurin(s, opts, false)?.0)
}

/// ζ′(s)/ζ(s) by term-wise differentiation of the active series.
pub fn zeta_logderiv(s: Complex64, opts: &EvalOptions) -> Result<Complex64> {
    let (z, dz) = zeta_and_derivative(s, opts, true)?;
    if z.norm() <= 10.0 * opts.target_abs_err {
        return Err(Error::NearZeroDivision);
    }
    Ok(dz / z)
}

pub(crate) fn select_path(s: Complex64, opts: &EvalOptions) -> ZetaPath {
    if s.im.abs() > opts.em_cutoff_t {
        return ZetaPath::EulerMaclaurin;
    }
    let den = Complex64::new(1.0, 0.0) - two_pow_one_minus(s);
    // near 1 + 2πik/log 2 (k ≠ 0) the prefactor blows up; Euler–Maclaurin is fine there
    if den.norm() < PREFACTOR_GUARD && (s - 1.0).norm() > 0.5 {
        ZetaPath::EulerMaclaurin
    } else {
        ZetaPath::Alternating
    }
}

/// Returns `(ζ(s), ζ′(s))`; the derivative is zero unless requested.
pub(crate) fn zeta_and_derivative(
    s: Complex64,
    opts: &EvalOptions,
    with_derivative: bool,
) -> Result<(Complex64, Complex64)> {
    check_input(s, opts)?;
    match select_path(s, opts) {
        ZetaPath::Alternating => alternating(s, opts, with_derivative),
        ZetaPath::EulerMaclaurin => euler_maclaurin(s, opts, with_derivative),
    }
}

fn check_input(s: Complex64, opts: &EvalOptions) -> Result<()> {
    ensure_finite(s)?;
    opts.validate()?;
    if (s - 1.0).norm() <= 10.0 * opts.target_abs_err {
        return Err(Error::PoleAtOne);
    }
    Ok(())
}

#[inline]
fn two_pow_one_minus(s: Complex64) -> Complex64 {
    ((Complex64::new(1.0, 0.0) - s) * LN_2).exp()
}

fn alternating(
    s: Complex64,
    opts: &EvalOptions,
    with_derivative: bool,
) -> Result<(Complex64, Complex64)> {
    let one = Complex64::new(1.0, 0.0);
    let p = two_pow_one_minus(s);
    let den = one - p;
    let pre = den.inv();
    // d/ds (1 − 2^{1−s})⁻¹ = −2^{1−s} log 2 / (1 − 2^{1−s})²
    let dpre = -(p * LN_2) * pre * pre;
    let tol = opts.target_abs_err;
    let pre_norm = pre.norm();

    // (k+1)^{-s} and its s-derivative, extended one entry per row
    let mut powers: Vec<Complex64> = Vec::new();
    let mut dpowers: Vec<Complex64> = Vec::new();
    // Pascal row C(n, k) / 2^{n+1}, updated in place
    let mut weights: Vec<f64> = Vec::with_capacity(64);
    weights.push(0.5);

    let mut sum = Complex64::new(0.0, 0.0);
    let mut dsum = Complex64::new(0.0, 0.0);
    let mut quiet = 0usize;
    for n in 0..opts.max_terms {
        let lnk = ((n + 1) as f64).ln();
        let a = (-s * lnk).exp();
        powers.push(a);
        dpowers.push(-a * lnk);

        let mut term = Complex64::new(0.0, 0.0);
        let mut dterm = Complex64::new(0.0, 0.0);
        for (k, &w) in weights.iter().enumerate() {
            let w = if k % 2 == 0 { w } else { -w };
            term += powers[k] * w;
            if with_derivative {
                dterm += dpowers[k] * w;
            }
        }
        sum += term;
        dsum += dterm;

        let dmag = if with_derivative {
            (dpre * term + pre * dterm).norm()
        } else {
            0.0
        };
        if term.norm() * pre_norm < tol / 2.0 && dmag < tol / 2.0 {
            quiet += 1;
            if quiet >= 3 {
                let value = pre * sum;
                let deriv = if with_derivative {
                    dpre * sum + pre * dsum
                } else {
                    Complex64::new(0.0, 0.0)
                };
                return Ok((value, deriv));
            }
        } else {
            quiet = 0;
        }

        // next Pascal row
        weights.push(0.0);
        for k in (1..weights.len()).rev() {
            weights[k] = 0.5 * (weights[k] + weights[k - 1]);
        }
        weights[0] *= 0.5;
    }
    Err(Error::NonConvergence)
}

fn euler_maclaurin(
    s: Complex64,
    opts: &EvalOptions,
    with_derivative: bool,
) -> Result<(Complex64, Complex64)> {
    let initial = 20usize.max((2.0 * s.im.abs()).ceil() as usize);
    let cap = initial * 4;
    let mut n_terms = initial;
    loop {
        let (value, deriv, err) = euler_maclaurin_fixed(s, n_terms, with_derivative);
        if err <= opts.target_abs_err / 2.0 {
            return Ok((value, deriv));
        }
        if n_terms * 2 > cap {
            return Err(Error::NonConvergence);
        }
        n_terms *= 2;
    }
}

/// Euler–Maclaurin with Dirichlet sum length `n`; returns value, derivative
/// and the magnitude of the first omitted correction as error estimate.
fn euler_maclaurin_fixed(
    s: Complex64,
    n: usize,
    with_derivative: bool,
) -> (Complex64, Complex64, f64) {
    let one = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut dsum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        let lnk = (k as f64).ln();
        let v = (-s * lnk).exp();
        sum += v;
        if with_derivative {
            dsum -= v * lnk;
        }
    }
    let big_n = n as f64;
    let ln_n = big_n.ln();
    let n_pow = (-s * ln_n).exp(); // N^{-s}
    let sm1 = s - one;
    let tail = n_pow * big_n / sm1;
    sum += tail + n_pow * 0.5;
    if with_derivative {
        dsum += -tail * ln_n - tail / sm1 - n_pow * (0.5 * ln_n);
    }

    // T_k = B_2k/(2k)! · s(s+1)…(s+2k−2) · N^{1−s−2k}
    let mut poch = s; // s(s+1)…(s+2k−2)
    let mut dpoch = one;
    let mut scale = n_pow / big_n; // N^{−s−1} = N^{1−s−2k} at k = 1
    let mut fact = 2.0; // (2k)!
    let mut err = 0.0;
    for k in 1..=EM_ORDER + 1 {
        let coeff = BERNOULLI_EVEN[k - 1] / fact;
        let term = poch * scale * coeff;
        if k == EM_ORDER + 1 {
            err = term.norm();
            break;
        }
        sum += term;
        if with_derivative {
            dsum += (dpoch * scale - poch * scale * ln_n) * coeff;
        }
        // advance the Pochhammer product by (s+2k−1)(s+2k)
        for j in [2 * k - 1, 2 * k] {
            let f = s + j as f64;
            dpoch = dpoch * f + poch;
            poch *= f;
        }
        scale /= big_n * big_n;
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
    }
    (sum, dsum, err)
}

/// ζ(σ) for real σ > 0 from the integral representation
/// ζ(s) = s/(s−1) − s ∫₁^∞ (v − ⌊v⌋) v^{−s−1} dv.
///
/// Each unit interval [n, n+1] is integrated in closed form; the tail
/// beyond `N = 200` is summed by integrating the sawtooth by parts against
/// the periodic Bernoulli functions. Independent of the series evaluators
/// and meant as their cross-check on the real axis.
pub fn zeta_integral_real(sigma: f64, opts: &EvalOptions) -> Result<f64> {
    opts.validate()?;
    if !sigma.is_finite() {
        return Err(Error::NonFinite);
    }
    if sigma <= 0.0 {
        return Err(Error::DomainError("sigma must be positive"));
    }
    if (sigma - 1.0).abs() <= 10.0 * opts.target_abs_err {
        return Err(Error::PoleAtOne);
    }
    const N: usize = 200;
    let s = sigma;
    let mut integral = 0.0;
    for n in 1..N {
        let nf = n as f64;
        let ratio_ln = (1.0 / nf).ln_1p(); // ln((n+1)/n)
        let n_pow = (-s * nf.ln()).exp(); // n^{-s}
        // ((n+1)^{1−s} − n^{1−s}) / (1−s)
        let first = if (1.0 - s).abs() < 1e-300 {
            nf * n_pow * ratio_ln
        } else {
            nf * n_pow * ((1.0 - s) * ratio_ln).exp_m1() / (1.0 - s)
        };
        // (n/s) ((n+1)^{−s} − n^{−s})
        let second = nf / s * n_pow * (-s * ratio_ln).exp_m1();
        integral += first + second;
    }
    // ∫_N^∞ {v} v^{−s−1} dv = N^{−s}/(2s) − Σ_k B_2k/(2k)! f^{(2k−2)}(N),
    // f(v) = v^{−s−1}, f^{(j)}(N) = (−1)^j (s+1)…(s+j) N^{−s−1−j}
    let big_n = N as f64;
    let n_pow = (-s * big_n.ln()).exp();
    let mut tail = n_pow / (2.0 * s);
    let mut deriv = n_pow / big_n; // f(N)
    let mut fact = 2.0;
    let mut j = 0usize; // order of the derivative held in `deriv`
    for k in 1..=6 {
        tail -= BERNOULLI_EVEN[k - 1] / fact * deriv;
        // two more derivatives: multiply by (s+j+1)(s+j+2)/N²
        deriv *= (s + (j + 1) as f64) * (s + (j + 2) as f64) / (big_n * big_n);
        j += 2;
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
    }
    integral += tail;
    Ok(s / (s - 1.0) - s * integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    fn opts() -> EvalOptions {
        EvalOptions::default()
    }

    #[test]
    fn zeta_at_zero_is_minus_half() {
        let z = zeta(c(0.0, 0.0), &opts()).unwrap();
        assert!((z.re + 0.5).abs() < 1e-12 && z.im.abs() < 1e-12);
    }

    #[test]
    fn zeta_two_is_basel() {
        // partial sums of Σ n^{-2} to 10^6 plus the integral tail bound 1/N
        let n = 1_000_000u64;
        let partial: f64 = (1..=n).rev().map(|k| 1.0 / (k as f64 * k as f64)).sum();
        let oracle = partial + 1.0 / n as f64 - 0.5 / (n as f64 * n as f64);
        let z = zeta(c(2.0, 0.0), &opts()).unwrap();
        assert!((z.re - oracle).abs() < 1e-11, "{} vs {}", z.re, oracle);
        assert!((z.re - 1.644_934_066_848_226_4).abs() < 1e-11);
    }

    #[test]
    fn zeta_reflects() {
        let s0 = c(0.7, 5.0);
        let a = zeta(s0, &opts()).unwrap();
        let b = zeta(s0.conj(), &opts()).unwrap();
        assert!((a.conj() - b).norm() < 1e-10);
    }

    #[test]
    fn pole_is_rejected() {
        assert_eq!(zeta(c(1.0, 0.0), &opts()), Err(Error::PoleAtOne));
        assert_eq!(zeta_integral_real(1.0, &opts()), Err(Error::PoleAtOne));
    }

    #[test]
    fn tiny_max_terms_does_not_converge() {
        let o = EvalOptions {
            max_terms: 16,
            ..opts()
        };
        assert_eq!(zeta(c(0.5, 30.0), &o), Err(Error::NonConvergence));
    }

    #[test]
    fn integral_form_matches_known_values() {
        let o = opts();
        assert!((zeta_integral_real(2.0, &o).unwrap() - 1.644_934_066_848_226_4).abs() < 1e-11);
        assert!((zeta_integral_real(0.5, &o).unwrap() + 1.460_354_508_809_586_8).abs() < 1e-11);
        let z3 = zeta(c(3.0, 0.0), &o).unwrap().re;
        assert!((zeta_integral_real(3.0, &o).unwrap() - z3).abs() <= 2.0 * o.target_abs_err);
    }

    #[test]
    fn logderiv_at_two() {
        let v = zeta_logderiv(c(2.0, 0.0), &opts()).unwrap();
        assert!((v.re + 0.569_960_993_094_532_8).abs() < 1e-10, "{v}");
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn logderiv_at_three_matches_von_mangoldt_series() {
        // −Σ Λ(n) n^{-3}, n ≤ 10^6, via a smallest-prime-factor sieve
        const LIMIT: usize = 1_000_000;
        let mut spf = alloc::vec![0u32; LIMIT + 1];
        for i in 2..=LIMIT {
            if spf[i] == 0 {
                let mut j = i;
                while j <= LIMIT {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        let mut sum = 0.0;
        for n in (2..=LIMIT).rev() {
            let p = spf[n] as usize;
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            if m == 1 {
                let nf = n as f64;
                sum += (p as f64).ln() / (nf * nf * nf);
            }
        }
        let v = zeta_logderiv(c(3.0, 0.0), &opts()).unwrap();
        assert!((v.re + sum).abs() < 1e-6, "{} vs {}", v.re, -sum);
    }

    #[test]
    fn logderiv_matches_central_difference() {
        let o = opts();
        let h = 1e-5;
        for s in [c(0.7, 5.0), c(2.0, 30.0), c(0.5, 60.0), c(-0.5, 3.0)] {
            let v = zeta_logderiv(s, &o).unwrap();
            let fd = (zeta(s + h, &o).unwrap().ln() - zeta(s - h, &o).unwrap().ln()) / (2.0 * h);
            assert!((v - fd).norm() < 1e-4, "{s}: {v} vs {fd}");
        }
    }

    #[test]
    fn both_paths_agree_across_band() {
        let o = opts();
        for &t in &[20.0, 25.0, 33.3, 40.0] {
            for &sigma in &[-1.0, 0.5, 0.9, 2.0] {
                let s = c(sigma, t);
                let a = zeta_alternating(s, &o).unwrap();
                let b = zeta_euler_maclaurin(s, &o).unwrap();
                assert!((a - b).norm() <= 2.0 * o.target_abs_err, "{s}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn first_zero_is_small() {
        let z = zeta(c(0.5, 14.134_725_141_734_693), &opts()).unwrap();
        assert!(z.norm() < 1e-9);
    }
}
