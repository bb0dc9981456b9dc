//! Zero counts against the main term and the off-line rectangle count.

#[allow(unused_imports)]
use num_traits::Float;
use super::CheckReport;
use crate::census::{census, density_detail, CensusOptions};
use crate::{Error, Result};

/// |N(T) − main term| ≤ 2 at every height, where N(T) is the census length
/// confirmed by the contour winding. The residual is the largest deviation
/// divided by 2.
pub fn check_rvm(heights: &[f64]) -> Result<CheckReport> {
    if heights.is_empty() {
        return Err(Error::InvalidArgument("rvm check needs heights"));
    }
    let opts = CensusOptions::default();
    let mut report = CheckReport::new("rvm");
    let mut worst = 0.0f64;
    for &t in heights {
        let r = census(t, &opts)?;
        let dev = (r.zeros.len() as f64 - r.rvm_main).abs();
        worst = worst.max(dev / 2.0);
        report = report
            .param(&alloc::format!("n_{t}"), r.zeros.len())
            .param(&alloc::format!("main_{t}"), r.rvm_main)
            .param(&alloc::format!("height_{t}"), r.height);
    }
    Ok(report.bounded(heights.len(), worst, 1.0))
}

/// Zeros off the critical line inside the density rectangles for every
/// (λ, T). The residual is their total number.
pub fn check_density(lambdas: &[f64], heights: &[f64]) -> Result<CheckReport> {
    if lambdas.is_empty() || heights.is_empty() {
        return Err(Error::InvalidArgument("density check needs lambdas and heights"));
    }
    let opts = CensusOptions::default();
    let mut report = CheckReport::new("density");
    let mut off_line = 0i64;
    let mut n = 0;
    for &t in heights {
        for &lambda in lambdas {
            let d = density_detail(lambda, t, &opts)?;
            off_line += d.off_line_count.abs();
            n += 1;
            report = report
                .param(&alloc::format!("rect_{lambda}_{t}"), d.rectangle_count)
                .param(&alloc::format!("critical_{lambda}_{t}"), d.critical_count)
                .param(&alloc::format!("epsilon_{lambda}_{t}"), d.epsilon);
        }
    }
    Ok(report
        .param("off_line_total", off_line)
        .bounded(n, off_line as f64, 0.0))
}
