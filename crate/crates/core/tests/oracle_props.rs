use std::f64::consts::{LN_2, PI};

use clausen_core::closedforms::{closed_form_eval, singular_limit_term, Family, SeriesSpec, Trig};
use clausen_core::dirichlet::FunctionId;
use clausen_core::oracles::{
    choi_srivastava_check, direct_sum, lambda_series_path, limit_probe_details,
    limit_probe_eta_and_lambda, power_series_eval, OracleMethod, PowerSeriesFamily,
};
use proptest::prelude::*;

fn spec(f: Family, m: u32) -> SeriesSpec {
    SeriesSpec::from_family(f, m).unwrap()
}

#[test]
fn choi_srivastava_grid() {
    let mut worst = 0.0_f64;
    for n in 0..=4 {
        for a in [1.0_f64, 0.25, 0.75] {
            for t in [0.05, -0.05, 0.2 * a, -0.2 * a] {
                let (l, r) = choi_srivastava_check(n, a, t, 200).unwrap();
                worst = worst.max((l - r).abs());
                assert!((l - r).abs() <= 1e-9, "n={n} a={a} t={t}: {l} vs {r}");
            }
        }
    }
    eprintln!("worst Choi–Srivastava gap {worst:e}");
}

#[test]
fn choi_srivastava_worked_examples() {
    let (l, r) = choi_srivastava_check(2, 0.25_f64, 0.1, 200).unwrap();
    assert!((l - r).abs() <= 1e-9);
    let (l, _) = choi_srivastava_check(0, 1.0_f64, 0.5, 200).unwrap();
    assert!((l - 0.283_757_110_473_934).abs() < 1e-10, "{l}");
}

#[test]
fn limit_probes() {
    let (lam, eta) = limit_probe_eta_and_lambda::<f64>().unwrap();
    assert!((lam - 0.5).abs() <= 1e-6);
    assert!((eta - LN_2).abs() <= 1e-8);
    let p = limit_probe_details::<f64>().unwrap();
    assert!((p.lambda_order2 - p.lambda_order1).abs() < 1e-7);
}

#[test]
fn tightening_tolerance_moves_little() {
    for fam in Family::ALL {
        for m in 1..=2 {
            let sp = spec(fam, m);
            for x in sp.interior_grid::<f64>(3) {
                let t = 1e-9;
                let a = direct_sum(&sp, x, t).unwrap().value;
                let b = direct_sum(&sp, x, t / 10.0).unwrap().value;
                assert!((a - b).abs() <= 2.0 * t, "{fam} m={m} x={x}");
            }
        }
    }
}

#[test]
fn oracle_reports_are_well_formed() {
    let cap = clausen_core::EvalConfig::default().direct_term_cap;
    for fam in Family::ALL {
        let sp = spec(fam, 1);
        for x in sp.interior_grid::<f64>(5) {
            let r = direct_sum(&sp, x, 1e-10).unwrap();
            assert!(r.error_estimate > 0.0 && r.error_estimate <= 1e-10);
            assert!(r.terms_used <= cap);
        }
    }
    let r = direct_sum(&spec(Family::T2, 1), PI, 1e-10).unwrap();
    assert_eq!(r.method, OracleMethod::Cesaro);
    let r = direct_sum(&spec(Family::T1, 3), PI, 1e-10).unwrap();
    assert!(r.value.abs() < 1e-12);
}

/// Power series (or the λ form) against direct summation: they must agree
/// within the sum of their error estimates.
#[test]
fn independent_oracles_agree() {
    let mut compared = 0;
    for fam in Family::ALL {
        let psf = PowerSeriesFamily::of(fam);
        for m in 1..=3 {
            let sp = spec(fam, m);
            let alpha = sp.alpha() as f64;
            let limit = 0.85 * psf.radius::<f64>();
            for x in sp.interior_grid::<f64>(9) {
                let d = direct_sum(&sp, x, 1e-10).unwrap();
                let other = if matches!(fam, Family::T5 | Family::T6) {
                    lambda_series_path(&sp, x, 80).ok()
                } else if !psf.is_singular(alpha) && x.abs() <= limit {
                    power_series_eval(psf, alpha, x, 120).ok()
                } else {
                    None
                };
                let Some(o) = other else { continue };
                compared += 1;
                let budget = d.error_estimate + o.error_estimate;
                assert!(
                    (d.value - o.value).abs() <= budget,
                    "{fam} m={m} x={x}: direct {} vs {} {} (budget {budget:e})",
                    d.value,
                    o.method,
                    o.value
                );
            }
        }
    }
    assert!(compared > 40, "only {compared} comparisons");
}

#[test]
fn power_series_examples() {
    let f = PowerSeriesFamily::new(FunctionId::Zeta, Trig::Cos);
    let ps = power_series_eval(f, 2.5, 0.5, 40).unwrap();
    let mut direct = 0.0;
    for n in (1..=3_000_000u64).rev() {
        direct += (0.5 * n as f64).cos() / (n as f64).powf(2.5);
    }
    // tail of Σ n^{-2.5} beyond 3·10⁶ is below 1e-9
    assert!((ps.value - direct).abs() < 1e-9, "{} vs {direct}", ps.value);
    assert!(power_series_eval(f, 3.0, 0.5, 40).is_err());
}

#[test]
fn lambda_form_examples() {
    let t6 = spec(Family::T6, 2);
    let l = lambda_series_path(&t6, 1.0_f64, 80).unwrap();
    let d = direct_sum(&t6, 1.0, 1e-12).unwrap();
    assert!((l.value - d.value).abs() < 1e-8);
    let t5 = spec(Family::T5, 2);
    let l = lambda_series_path(&t5, PI / 2.0, 80).unwrap();
    let c = closed_form_eval(&t5, PI / 2.0).unwrap().value;
    assert!((l.value - c).abs() < 1e-8);
    assert!(lambda_series_path(&spec(Family::T1, 1), 1.0, 10).is_err());
}

#[test]
fn singular_limit_examples() {
    assert!((singular_limit_term(1, 2.0_f64).unwrap() - 1.0).abs() < 1e-15);
    let want = -(0.5f64.ln() - 1.0) / 2.0;
    assert!((singular_limit_term(1, 1.0_f64).unwrap() - want).abs() < 1e-15);
    let want = (0.5f64.ln() - 11.0 / 6.0) / 12.0;
    assert!((singular_limit_term(2, 1.0_f64).unwrap() - want).abs() < 1e-15);
}

proptest! {
    #[test]
    fn power_series_parity(x in 0.0f64..1.2, alpha in 2.1f64..5.9, which in 0usize..4) {
        let fam = [Family::T3, Family::T4, Family::T7, Family::T8][which];
        let psf = PowerSeriesFamily::of(fam);
        prop_assume!(!psf.is_singular(alpha));
        let limit = 0.85 * psf.radius::<f64>();
        let x = x.min(limit);
        let p = power_series_eval(psf, alpha, x, 60).unwrap().value;
        let q = power_series_eval(psf, alpha, -x, 60).unwrap().value;
        match psf.trig {
            Trig::Sin => prop_assert_eq!(p, -q),
            Trig::Cos => prop_assert_eq!(p, q),
        }
    }
}
