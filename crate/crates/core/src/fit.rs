//! Least-squares growth-law fits shared by every verification suite.
//!
//! Power laws `y ≈ c·x^b` are fitted log-log with an intercept and report
//! the centered R². `O(log x)` claims are fitted as `y ≈ c·log x` through
//! the origin (there is no additive constant in the claim) and report the
//! uncentered R² that goes with a no-intercept model.

#[allow(unused_imports)]
use num_traits::Float;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    pub constant: f64,
    pub exponent: f64,
    pub r_squared: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLawFit {
    pub constant: f64,
    pub r_squared: f64,
}

/// Ordinary least squares `y = a + b·x`; returns `(a, b, R²)`.
pub fn linear(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::InvalidArgument("linear fit needs two or more paired points"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("linear fit needs distinct abscissae"));
    }
    let b = sxy / sxx;
    let a = my - b * mx;
    let r2 = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok((a, b, r2))
}

/// Fits `y ≈ c·x^b` on `log y = log c + b log x`. Every point must be positive.
pub fn power_law(xs: &[f64], ys: &[f64]) -> Result<PowerLawFit> {
    if xs.iter().chain(ys).any(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(Error::InvalidArgument("power-law fit needs positive finite data"));
    }
    let lx: alloc::vec::Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: alloc::vec::Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let (a, b, r2) = linear(&lx, &ly)?;
    Ok(PowerLawFit {
        constant: a.exp(),
        exponent: b,
        r_squared: r2,
    })
}

/// Fits `y ≈ c·log x` through the origin. Abscissae must exceed 1.
pub fn log_law(xs: &[f64], ys: &[f64]) -> Result<LogLawFit> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::InvalidArgument("log-law fit needs paired points"));
    }
    if xs.iter().any(|&x| !(x > 1.0)) || ys.iter().any(|y| !y.is_finite()) {
        return Err(Error::InvalidArgument("log-law fit needs x > 1 and finite y"));
    }
    let (mut sll, mut sly, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let l = x.ln();
        sll += l * l;
        sly += l * y;
        syy += y * y;
    }
    let c = sly / sll;
    let mut ss_res = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let r = y - c * x.ln();
        ss_res += r * r;
    }
    let r2 = if syy == 0.0 { 1.0 } else { 1.0 - ss_res / syy };
    Ok(LogLawFit {
        constant: c,
        r_squared: r2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn recovers_power_law_exponents() {
        for &b in &[0.5, 1.0, 2.7, -1.3] {
            let xs: Vec<f64> = (1..40).map(|i| 2.0 + i as f64 * 3.5).collect();
            let ys: Vec<f64> = xs.iter().map(|x| 4.2 * x.powf(b)).collect();
            let fit = power_law(&xs, &ys).unwrap();
            assert!((fit.exponent - b).abs() <= 0.05);
            assert!((fit.constant - 4.2).abs() < 1e-9);
            assert!(fit.r_squared > 0.999_999);
        }
    }

    #[test]
    fn recovers_log_law_constant() {
        let xs: Vec<f64> = (2..100).map(|i| i as f64 * 5.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 0.37 * x.ln()).collect();
        let fit = log_law(&xs, &ys).unwrap();
        assert!((fit.constant - 0.37).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(power_law(&[1.0, 2.0], &[1.0, -1.0]).is_err());
        assert!(log_law(&[1.0], &[1.0]).is_err());
        assert!(linear(&[1.0, 1.0], &[1.0, 2.0]).is_err());
    }
}
