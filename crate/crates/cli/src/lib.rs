//! File formats and the suite runner behind the `zerocensus` binary.
//!
//! Numbers in JSON reports carry 17 significant digits, numbers in the zero
//! census CSV carry 15. Both are plain decimal in the usual range and
//! switch to exponent form for very large or very small magnitudes.

use std::io::{self, Write};

use rayon::prelude::*;
use zerocensus_core::census::ZeroRecord;
use zerocensus_core::checks::{CheckReport, ParamValue, Suite, SUITES};
use zerocensus_core::Error;

pub const CENSUS_HEADER: [&str; 5] = ["index", "gamma", "bracket_lo", "bracket_hi", "residual"];

/// `x` with exactly `digits` significant digits, like C's `%.*g` without
/// trailing-zero stripping.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return format!("{:.*}", digits - 1, x);
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if exp < -5 || exp >= digits as i32 {
        sci
    } else {
        format!("{:.*}", (digits as i32 - 1 - exp) as usize, x)
    }
}

fn json_num(x: f64) -> String {
    if x.is_finite() {
        fmt_sig(x, 17)
    } else {
        "null".to_string()
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn json_param(v: &ParamValue) -> String {
    match v {
        ParamValue::Num(x) => json_num(*x),
        ParamValue::Int(i) => i.to_string(),
        ParamValue::Text(s) => json_str(s),
        ParamValue::Flag(b) => b.to_string(),
        ParamValue::List(xs) => {
            let items: Vec<String> = xs.iter().map(|x| json_num(*x)).collect();
            format!("[{}]", items.join(", "))
        }
    }
}

fn json_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "null".to_string(), json_num)
}

/// One report as a JSON object with keys in schema order.
pub fn report_object(r: &CheckReport) -> String {
    let params: Vec<String> = r
        .params
        .iter()
        .map(|(k, v)| format!("{}: {}", json_str(k), json_param(v)))
        .collect();
    format!(
        "{{\"check_id\": {}, \"params\": {{{}}}, \"n_samples\": {}, \"max_residual\": {}, \
         \"bound_value\": {}, \"fitted_constant\": {}, \"pass\": {}}}",
        json_str(&r.check_id),
        params.join(", "),
        r.n_samples,
        json_num(r.max_residual),
        json_opt(r.bound_value),
        json_opt(r.fitted_constant),
        r.pass
    )
}

/// The report file: a JSON array with one object per suite, one per line.
pub fn reports_json(reports: &[CheckReport]) -> String {
    let body: Vec<String> = reports.iter().map(|r| format!("  {}", report_object(r))).collect();
    if body.is_empty() {
        "[]\n".to_string()
    } else {
        format!("[\n{}\n]\n", body.join(",\n"))
    }
}

/// Writes the census CSV with LF line endings.
pub fn write_census_csv<W: Write>(out: W, zeros: &[ZeroRecord]) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CENSUS_HEADER)?;
    for z in zeros {
        w.write_record([
            z.index.to_string(),
            fmt_sig(z.gamma, 15),
            fmt_sig(z.bracket_lo, 15),
            fmt_sig(z.bracket_hi, 15),
            fmt_sig(z.residual, 15),
        ])?;
    }
    w.flush()
}

/// Stand-in report for a suite that stopped with an error.
pub fn error_report(name: &str, err: &Error) -> CheckReport {
    let mut r = CheckReport::new(name).param("error", format!("{err}").as_str());
    r.max_residual = f64::NAN;
    r
}

/// Outcome of one suite run.
pub type SuiteOutcome = (&'static str, Result<CheckReport, Error>);

/// Runs `suites` with `seed` and returns outcomes in the given order.
///
/// Everything except `sign_change_bound` runs in parallel on the current
/// rayon pool; `sign_change_bound` runs afterwards so its tally covers every
/// trace the other suites produced.
pub fn run_suites(suites: &[&'static Suite], seed: u64) -> Vec<SuiteOutcome> {
    let (last, first): (Vec<_>, Vec<_>) =
        suites.iter().enumerate().partition(|(_, s)| s.name == "sign_change_bound");
    let mut out: Vec<(usize, SuiteOutcome)> = first
        .par_iter()
        .map(|&(i, s)| (i, (s.name, (s.run)(seed))))
        .collect();
    for (i, s) in last {
        out.push((i, (s.name, (s.run)(seed))));
    }
    out.sort_by_key(|(i, _)| *i);
    out.into_iter().map(|(_, o)| o).collect()
}

/// Suites selected by `--suite`: one name or `all`.
pub fn select_suites(name: &str) -> Option<Vec<&'static Suite>> {
    if name == "all" {
        return Some(SUITES.iter().collect());
    }
    SUITES.iter().find(|s| s.name == name).map(|s| vec![s])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(14.134725141734693, 15), "14.1347251417347");
        assert_eq!(fmt_sig(0.5, 17), "0.50000000000000000");
        assert_eq!(fmt_sig(0.0, 3), "0.00");
        assert_eq!(fmt_sig(1.5e-12, 3), "1.50e-12");
        assert_eq!(fmt_sig(2.5e20, 3), "2.50e20");
        assert_eq!(fmt_sig(999.96, 4), "1000");
        assert_eq!(fmt_sig(-0.001234, 3), "-0.00123");
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, 2f64.sqrt() * 1e10, -7.25e-9, f64::MAX] {
            assert_eq!(fmt_sig(x, 17).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn non_finite_numbers_become_null() {
        let r = CheckReport::new("x").param("v", f64::INFINITY).bounded(1, f64::NAN, 1.0);
        let obj = report_object(&r);
        assert!(obj.contains("\"v\": null"));
        assert!(obj.contains("\"max_residual\": null"));
    }
}
