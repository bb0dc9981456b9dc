//! Named numerical verification suites.
//!
//! Each suite samples a claim on a grid, reduces it to one residual and
//! returns a [`CheckReport`]. Reports are pure functions of their
//! parameters and seed.
//!
//! Where a suite combines several conditions, `max_residual` is the largest
//! of the per-condition ratios value/limit and `bound_value` is 1; the raw
//! values sit in `params`. Growth claims of the form O(log y) are fitted as
//! c·log y through the origin against the running maximum of |value|, the
//! quantity such a claim bounds.

mod bounds;
mod counting;
mod identities;
mod pseudo_gamma;
mod segments;

#[allow(unused_imports)]
use num_traits::Float;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::census::ZeroRecord;
use crate::Result;

pub use bounds::{check_disk_bound, check_sign_change_bound};
pub use counting::{check_density, check_rvm};
pub use identities::{
    check_binet_bound, check_functional_equation, check_im_loggamma, check_local_expansion,
    check_xi_logderiv_sum, check_zeta_agreement, check_zeta_bound,
};
pub use pseudo_gamma::{check_nabla_suite, check_ratio_growth};
pub use segments::{
    check_decomposition, check_horizontal_arg, check_vertical_arg, dj_decomposition, DjBreakdown,
};

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Num(f64),
    Int(i64),
    Text(String),
    Flag(bool),
    List(Vec<f64>),
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Num(v)
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<bool> for ParamValue {
    fn from(v: bool) -> Self {
        ParamValue::Flag(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_string())
    }
}

impl From<Vec<f64>> for ParamValue {
    fn from(v: Vec<f64>) -> Self {
        ParamValue::List(v)
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check_id: String,
    /// Inputs and diagnostics in insertion order.
    pub params: Vec<(String, ParamValue)>,
    pub n_samples: usize,
    pub max_residual: f64,
    pub bound_value: Option<f64>,
    pub fitted_constant: Option<f64>,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(check_id: &str) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            params: Vec::new(),
            n_samples: 0,
            max_residual: 0.0,
            bound_value: None,
            fitted_constant: None,
            pass: false,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<ParamValue>) -> Self {
        self.params.push((key.to_string(), value.into()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// Numeric parameter by key.
    pub fn num(&self, key: &str) -> Option<f64> {
        match self.get(key)? {
            ParamValue::Num(v) => Some(*v),
            ParamValue::Int(v) => Some(*v as f64),
            _ => None,
        }
    }

    /// Closes a bounded check: pass iff the residual is within the bound.
    pub fn bounded(mut self, n_samples: usize, max_residual: f64, bound: f64) -> Self {
        self.n_samples = n_samples;
        self.max_residual = max_residual;
        self.bound_value = Some(bound);
        self.pass = max_residual <= bound;
        self
    }

    /// Closes a fitted check: pass iff the constant is finite and the fit
    /// residual (1 − R²) is within `threshold`.
    pub fn fitted(
        mut self,
        n_samples: usize,
        max_residual: f64,
        constant: f64,
        r_squared: f64,
        threshold: f64,
    ) -> Self {
        self.n_samples = n_samples;
        self.max_residual = max_residual;
        self.fitted_constant = Some(constant);
        self = self
            .param("fit_r_squared", r_squared)
            .param("fit_threshold", threshold);
        self.pass = constant.is_finite() && 1.0 - r_squared <= threshold;
        self
    }

    pub fn with_constant(mut self, c: f64) -> Self {
        self.fitted_constant = Some(c);
        self
    }
}

/// Running maximum of |v|.
pub(crate) fn envelope(values: &[f64]) -> Vec<f64> {
    let mut m = 0.0f64;
    values
        .iter()
        .map(|v| {
            m = m.max(v.abs());
            m
        })
        .collect()
}

/// Moves each height up in steps of `nudge` until it is at least `nudge`
/// from every ordinate. Returns the heights and how many moved.
pub(crate) fn avoid_ordinates(grid: &[f64], zeros: &[ZeroRecord], nudge: f64) -> (Vec<f64>, usize) {
    let mut moved = 0;
    let out = grid
        .iter()
        .map(|&y0| {
            let mut y = y0;
            while zeros.iter().any(|z| (z.gamma - y).abs() < nudge) {
                y += nudge;
            }
            if y != y0 {
                moved += 1;
            }
            y
        })
        .collect();
    (out, moved)
}

/// `lo, lo+step, …` up to and including `hi`.
pub fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    (0..=n).map(|i| lo + step * i as f64).collect()
}

pub(crate) fn census_for(height: f64) -> Result<Vec<ZeroRecord>> {
    let opts = crate::census::CensusOptions::default();
    crate::census::locate_zeros_between(0.0, height, &opts)
}

/// A suite that can run from a seed alone.
pub struct Suite {
    pub name: &'static str,
    pub run: fn(u64) -> Result<CheckReport>,
}

/// Every suite with its default parameters, in report order. The sign-change
/// tally suite comes last so it sees the traces of all the others.
pub const SUITES: &[Suite] = &[
    Suite { name: "functional_equation", run: |seed| check_functional_equation(200, seed) },
    Suite { name: "zeta_bound", run: |_| check_zeta_bound(0.5, &grid(3.0, 200.0, 1.0)) },
    Suite { name: "nabla", run: |seed| check_nabla_suite(&[10.0, 20.0, 40.0, 80.0], 0.75, seed) },
    Suite { name: "ratio_growth", run: |_| check_ratio_growth(0.75, &[10.0, 20.0, 40.0, 80.0, 160.0]) },
    Suite { name: "local_expansion", run: |_| check_local_expansion(&grid(20.0, 400.0, 20.0)) },
    Suite {
        name: "xi_logderiv_sum",
        run: |_| check_xi_logderiv_sum(&[crate::c(2.0, 0.0), crate::c(0.5, 0.0), crate::c(3.0, 10.0), crate::c(0.8, 5.0)], 200),
    },
    Suite { name: "horizontal_arg", run: |_| check_horizontal_arg(2.0, &grid(10.0, 400.0, 5.0)) },
    Suite { name: "vertical_arg", run: |_| check_vertical_arg(0.75, &grid(10.0, 200.0, 10.0)) },
    Suite { name: "decomposition", run: |_| check_decomposition(&[(0.75, 100.0), (0.6, 50.0), (0.6, 20.0), (0.6, 40.0), (0.6, 80.0)]) },
    Suite { name: "im_loggamma", run: |seed| check_im_loggamma(400, seed) },
    Suite { name: "binet_bound", run: |seed| check_binet_bound(500, seed) },
    Suite { name: "disk_bound", run: |seed| check_disk_bound(50, seed) },
    Suite { name: "zeta_agreement", run: |seed| check_zeta_agreement(200, seed) },
    Suite { name: "rvm", run: |_| check_rvm(&[20.0, 50.0, 100.0, 200.0, 300.0, 500.0]) },
    Suite { name: "density", run: |_| check_density(&[0.6, 0.75, 0.9], &[100.0, 500.0]) },
    Suite { name: "sign_change_bound", run: |seed| check_sign_change_bound(seed) },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_pass_rules() {
        let r = CheckReport::new("x").bounded(3, 0.5, 1.0);
        assert!(r.pass && r.bound_value == Some(1.0));
        let r = CheckReport::new("x").bounded(3, 1.5, 1.0);
        assert!(!r.pass);
        let r = CheckReport::new("x").fitted(3, 2.0, 0.7, 0.85, 0.2);
        assert!(r.pass && r.num("fit_r_squared") == Some(0.85));
        let r = CheckReport::new("x").fitted(3, 2.0, f64::NAN, 0.99, 0.2);
        assert!(!r.pass);
    }

    #[test]
    fn helpers() {
        assert_eq!(envelope(&[1.0, -3.0, 2.0]), alloc::vec![1.0, 3.0, 3.0]);
        assert_eq!(grid(10.0, 20.0, 5.0), alloc::vec![10.0, 15.0, 20.0]);
        let z = ZeroRecord { index: 1, gamma: 15.02, bracket_lo: 15.0, bracket_hi: 15.04, residual: 0.0 };
        let (g, moved) = avoid_ordinates(&[10.0, 15.0], &[z], 0.05);
        assert_eq!(moved, 1);
        assert!((g[1] - 15.1).abs() < 1e-12);
    }

    #[test]
    fn suite_names_are_unique() {
        for (i, a) in SUITES.iter().enumerate() {
            assert!(SUITES[i + 1..].iter().all(|b| b.name != a.name));
        }
        assert!(suite("nabla").is_some() && suite("nope").is_none());
    }
}
