use zerocensus_core::census::{
    census, count_zeros_nt, density_detail, epsilon_choice, locate_critical_zeros, min_zero_gap,
    nudged_height, rvm_main_term, CensusOptions,
};
use zerocensus_core::Error;

fn opts() -> CensusOptions {
    CensusOptions::default()
}

#[test]
fn census_matches_winding_and_rvm() {
    let o = opts();
    let mut last = 0;
    for t in [20.0, 50.0, 100.0, 200.0, 300.0, 500.0] {
        let h = nudged_height(t, &o).unwrap();
        let h = if h > o.height_cap { nudged_height(t - 0.5, &o).unwrap() } else { h };
        let res = census(h, &o).unwrap();
        let n = res.count_by_winding;
        assert_eq!(n as usize, res.zeros.len(), "T = {h}");
        assert!((n as f64 - rvm_main_term(h)).abs() <= 2.0, "T = {h}: {n}");
        assert!(n >= last);
        last = n;
        for w in res.zeros.windows(2) {
            assert!(w[0].gamma < w[1].gamma);
        }
        eprintln!("T = {h}: N = {n}, main term {:.3}", rvm_main_term(h));
    }
}

#[test]
fn known_counts() {
    let o = opts();
    assert_eq!(count_zeros_nt(50.0, &o).unwrap(), 10);
    assert_eq!(count_zeros_nt(100.0, &o).unwrap(), 29);
    assert_eq!(locate_critical_zeros(100.0, &o).unwrap().len(), 29);
}

#[test]
fn gap_matches_brute_force() {
    let o = opts();
    let zeros = locate_critical_zeros(200.0, &o).unwrap();
    let pts: Vec<(f64, f64)> = zeros
        .iter()
        .flat_map(|z| [(0.5, z.gamma), (0.5, -z.gamma)])
        .collect();
    let mut brute = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            brute = brute.min((pts[i].0 - pts[j].0).hypot(pts[i].1 - pts[j].1));
        }
    }
    assert_eq!(min_zero_gap(100.0, &o).unwrap(), brute);
    assert!((epsilon_choice(0.51, 100.0, &o).unwrap() - 0.0045).abs() < 1e-15);
    assert!((epsilon_choice(0.75, 15.0, &o).unwrap() - 0.1125).abs() < 1e-15);
}

#[test]
fn density_counts_have_no_off_line_zeros() {
    let o = opts();
    for (lambda, t) in [(0.6, 100.0), (0.75, 100.0), (0.9, 500.0)] {
        let d = match density_detail(lambda, t, &o) {
            Err(Error::ContourThroughZero { suggested_height }) => {
                density_detail(lambda, suggested_height, &o).unwrap()
            }
            other => other.unwrap(),
        };
        assert_eq!(d.off_line_count, 0, "{d:?}");
        assert_eq!(d.strip_count, 0);
        assert!(d.candidates.is_empty());
        eprintln!("lambda {lambda}, T {t}: eps {}, count {}", d.epsilon, d.rectangle_count);
        if t == 100.0 {
            assert_eq!(d.rectangle_count, 29);
        }
    }
}

#[test]
fn heights_beyond_cap_are_refused() {
    let o = opts();
    assert_eq!(min_zero_gap(501.0, &o), Err(Error::CensusIncomplete));
}
