//! Acceptance criteria, each at its stated tolerance. Prints one PASS/FAIL
//! line per criterion and fails if any criterion is red.

use std::process::Command;
use std::time::{Duration, Instant};

use zerocensus::run_suites;
use zerocensus_core::census::{census, density_detail, locate_critical_zeros, rvm_main_term, CensusOptions};
use zerocensus_core::checks::{
    check_binet_bound, check_decomposition, check_disk_bound, check_functional_equation,
    check_horizontal_arg, check_nabla_suite, check_vertical_arg, check_zeta_agreement, grid,
    CheckReport, SUITES,
};

const SEED: u64 = 7;

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn num(r: &CheckReport, key: &str) -> f64 {
    r.num(key).unwrap_or_else(|| panic!("{} has no numeric param {key}", r.check_id))
}

fn zero_count_at_100() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_zerocensus"))
        .args(["count", "--height", "100"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let text = String::from_utf8(out.stdout).unwrap();
    let get = |k: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix(k).and_then(|r| r.strip_prefix(' ')))
            .map(str::to_string)
            .unwrap_or_default()
    };
    let count: i64 = get("count").parse().unwrap_or(-1);
    let census_len = locate_critical_zeros(100.0, &CensusOptions::default()).map_or(0, |z| z.len()) as i64;
    let main = rvm_main_term(100.0);
    let pass = out.status.success()
        && count == 29
        && count == census_len
        && (29.0 - main).abs() <= 0.1
        && elapsed <= Duration::from_secs(10);
    outcome(
        pass,
        format!("count {count}, census {census_len}, main {main:.4}, {:.2} s", elapsed.as_secs_f64()),
    )
}

fn rvm_desk_scale() -> Outcome {
    let start = Instant::now();
    let opts = CensusOptions::default();
    let mut worst = 0.0f64;
    let mut parts = Vec::new();
    let mut ok = true;
    for t in [20.0, 50.0, 100.0, 200.0, 300.0, 500.0] {
        match census(t, &opts) {
            Ok(r) => {
                let dev = (r.zeros.len() as f64 - r.rvm_main).abs();
                worst = worst.max(dev);
                parts.push(format!("N({t})={}", r.zeros.len()));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("T={t}: {e}"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        ok && worst <= 2.0 && elapsed <= Duration::from_secs(60),
        format!("{}, max |N - main| {worst:.3}, {:.1} s", parts.join(" "), elapsed.as_secs_f64()),
    )
}

fn first_zero() -> Outcome {
    match locate_critical_zeros(20.0, &CensusOptions::default()) {
        Ok(z) if !z.is_empty() => {
            let g = z[0].gamma;
            outcome((g - 14.134725).abs() <= 1e-5, format!("gamma_1 = {g:.10}"))
        }
        Ok(_) => outcome(false, "no zero below 20".into()),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn density_desk_scale() -> Outcome {
    let opts = CensusOptions::default();
    let mut off = 0i64;
    let mut cases = 0;
    for t in [100.0, 200.0, 300.0, 400.0, 500.0] {
        for lambda in [0.6, 0.75, 0.9] {
            match density_detail(lambda, t, &opts) {
                Ok(d) => {
                    off += d.off_line_count.abs();
                    cases += 1;
                }
                Err(e) => return outcome(false, format!("lambda {lambda}, T {t}: {e}")),
            }
        }
    }
    outcome(off == 0, format!("{cases} rectangles, off-line total {off}"))
}

fn functional_equation() -> Outcome {
    match check_functional_equation(200, SEED) {
        Ok(r) => outcome(
            r.n_samples == 200 && r.max_residual <= 1e-9,
            format!("max relative residual {:.3e} over {} samples", r.max_residual, r.n_samples),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn pseudo_gamma() -> Outcome {
    match check_nabla_suite(&[10.0, 20.0, 40.0, 80.0], 0.75, SEED) {
        Ok(r) => {
            let half = num(&r, "half_value_deviation");
            let excess = num(&r, "critical_line_excess");
            let case_one = num(&r, "case_one_max");
            // 4 ulp of 2
            let pass = half <= 4.0 * 2.0 * f64::EPSILON && excess <= 1e-12 && case_one <= 21.0 * 1.1;
            outcome(
                pass,
                format!("|nabla(1/2) - 2| = {half:.1e}, critical excess {excess:.1e}, case-1 max {case_one:.3e}"),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn binet() -> Outcome {
    match check_binet_bound(500, SEED) {
        Ok(r) => {
            let violations = num(&r, "violations");
            outcome(
                r.n_samples == 500 && violations == 0.0,
                format!("{violations} violations, max 8|s||g| = {:.3}", r.max_residual),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn disk_bound() -> Outcome {
    match check_disk_bound(50, SEED) {
        Ok(r) => {
            let worked = num(&r, "worked_example_bound");
            outcome(
                r.pass && worked == 2.0,
                format!("worst (count - bound) {}, worked example bound {worked}", r.max_residual),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn sign_change_global() -> Outcome {
    let all: Vec<_> = SUITES.iter().collect();
    let outcomes = run_suites(&all, SEED);
    let errors: Vec<String> = outcomes
        .iter()
        .filter_map(|(n, o)| o.as_ref().err().map(|e| format!("{n}: {e}")))
        .collect();
    let sign = outcomes
        .into_iter()
        .find(|(n, _)| *n == "sign_change_bound")
        .and_then(|(_, o)| o.ok());
    match sign {
        Some(r) => {
            let checked = num(&r, "traces_checked");
            let violations = num(&r, "violations");
            outcome(
                errors.is_empty() && violations == 0.0 && checked > 0.0,
                format!("{checked} traces, {violations} violations, suite errors {errors:?}"),
            )
        }
        None => outcome(false, format!("sign_change_bound did not run: {errors:?}")),
    }
}

fn decomposition() -> Outcome {
    match check_decomposition(&[(0.75, 100.0), (0.6, 50.0)]) {
        Ok(r) => {
            let mut pass = true;
            let mut parts = Vec::new();
            for i in 0..2 {
                let rc = num(&r, &format!("case{i}_reconstructed"));
                let census = num(&r, &format!("case{i}_census_count"));
                pass &= (rc - census).abs() <= 0.01 && rc.round() == census;
                parts.push(format!("reconstructed {rc:.3e} vs {census}"));
            }
            outcome(pass, parts.join("; "))
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn growth_experiments() -> Outcome {
    let horizontal = check_horizontal_arg(2.0, &grid(10.0, 400.0, 5.0));
    let vertical = check_vertical_arg(0.75, &grid(10.0, 200.0, 10.0));
    match (horizontal, vertical) {
        (Ok(h), Ok(v)) => {
            let gamma_max = num(&h, "gamma_part_max");
            let h_r2 = num(&h, "fit_r_squared");
            let v_r2 = num(&v, "fit_r_squared");
            let (hc, vc) = (h.fitted_constant, v.fitted_constant);
            let pass = gamma_max <= 1.0 && h_r2 >= 0.8 && v_r2 >= 0.8 && hc.is_some() && vc.is_some();
            outcome(
                pass,
                format!(
                    "Gamma part max {gamma_max:.4} (bound 1), horizontal R^2 {h_r2:.4} c {:.4}, \
                     vertical R^2 {v_r2:.4} c {:.4}",
                    hc.unwrap_or(f64::NAN),
                    vc.unwrap_or(f64::NAN)
                ),
            )
        }
        (h, v) => outcome(false, format!("{:?} / {:?}", h.err(), v.err())),
    }
}

fn zeta_agreement() -> Outcome {
    match check_zeta_agreement(200, SEED) {
        Ok(r) => outcome(
            r.n_samples == 200 && r.pass,
            format!("max |difference| {:.3e}, bound {:.1e}", r.max_residual, r.bound_value.unwrap_or(f64::NAN)),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

#[test]
fn acceptance() {
    // criterion 9 runs last: its tally covers every trace made before it
    let criteria: [Criterion; 12] = [
        (1, "zero count at height 100", zero_count_at_100),
        (2, "Riemann-von Mangoldt desk scale", rvm_desk_scale),
        (3, "first zero", first_zero),
        (4, "density desk scale", density_desk_scale),
        (5, "functional equation", functional_equation),
        (6, "pseudo Gamma properties", pseudo_gamma),
        (7, "Binet bound", binet),
        (8, "disk zero bound soundness", disk_bound),
        (10, "D decomposition consistency", decomposition),
        (11, "argument growth experiments", growth_experiments),
        (12, "two-evaluator zeta agreement", zeta_agreement),
        (9, "sign-change inequality on every trace", sign_change_global),
    ];
    let mut lines = Vec::new();
    for (id, name, run) in criteria {
        let o = run();
        let line = format!("criterion {id:>2} {}: {name} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        println!("{line}");
        lines.push((id, o.pass, line));
    }
    lines.sort_by_key(|(id, _, _)| *id);
    println!("summary:");
    for (_, _, line) in &lines {
        println!("  {line}");
    }
    let failed: Vec<u32> = lines.iter().filter(|(_, p, _)| !p).map(|(id, _, _)| *id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
