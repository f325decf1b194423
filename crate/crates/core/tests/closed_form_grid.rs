use std::f64::consts::PI;
use std::time::Instant;

use clausen_core::closedforms::{
    closed_form_eval, general_closed_form, table2_row, Family, SeriesSpec,
};
use clausen_core::oracles::direct_sum;
use clausen_core::Error;

const CATALAN: f64 = 0.915_965_594_177_219;

fn spec(f: Family, m: u32) -> SeriesSpec {
    SeriesSpec::from_family(f, m).unwrap()
}

fn cf(f: Family, m: u32, x: f64) -> f64 {
    closed_form_eval(&spec(f, m), x).unwrap().value
}

#[test]
fn every_family_matches_direct_summation_on_the_grid() {
    let start = Instant::now();
    let mut worst = (0.0_f64, String::new());
    for fam in Family::ALL {
        for m in 1..=3 {
            let sp = spec(fam, m);
            for x in sp.interior_grid::<f64>(9) {
                let c = closed_form_eval(&sp, x).unwrap().value;
                let o = direct_sum(&sp, x, 1e-11).unwrap();
                let rel = (c - o.value).abs() / (1.0 + o.value.abs());
                if rel > worst.0 {
                    worst = (rel, format!("{fam} m={m} x={x} ({})", o.method));
                }
                assert!(rel <= 1e-8, "{fam} m={m} x={x}: closed {c} vs oracle {} ({})", o.value, o.method);
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 60.0, "grid took {elapsed:.1} s");
    eprintln!("worst rel_err {:e} at {}; {elapsed:.2} s", worst.0, worst.1);
}

#[test]
fn anchor_values() {
    assert!((cf(Family::T1, 1, PI / 2.0) - CATALAN).abs() < 1e-12);
    assert!((cf(Family::T2, 1, PI / 2.0) + 0.5 * 2f64.ln()).abs() < 1e-12);
    assert!((cf(Family::T4, 1, PI / 3.0) - 0.5 * 3f64.ln()).abs() < 1e-12);
    assert!((cf(Family::T5, 1, PI / 2.0) - CATALAN).abs() < 1e-12);
    assert!((cf(Family::T8, 1, 0.0) - CATALAN).abs() < 1e-12);
}

#[test]
fn sine_series_vanish_at_their_zeros() {
    // every term is sin(nπ) or sin(0)
    assert!(cf(Family::T1, 1, PI).abs() < 1e-13);
    assert!(cf(Family::T1, 3, PI).abs() < 1e-13);
    for m in 1..=3 {
        assert!(cf(Family::T3, m, 0.0).abs() < 1e-13);
        assert!(cf(Family::T7, m, 0.0).abs() < 1e-13);
    }
    // T5 at π/2 - t and π/2 + t: sin((2n-1)(π-y)) = sin((2n-1)y)
    for m in 1..=3 {
        let d = cf(Family::T5, m, 1.0) - cf(Family::T5, m, PI - 1.0);
        assert!(d.abs() < 1e-12, "T5 m={m}: {d:e}");
    }
    // T6 is odd about π/2: cos((2n-1)(π-y)) = -cos((2n-1)y)
    for m in 1..=3 {
        assert!(cf(Family::T6, m, PI / 2.0).abs() < 1e-12);
    }
    // T2 symmetric about π: cos(n(2π-y)) = cos(ny)
    for m in 1..=3 {
        let d = cf(Family::T2, m, 1.0) - cf(Family::T2, m, 2.0 * PI - 1.0);
        assert!(d.abs() < 1e-12, "T2 m={m}: {d:e}");
    }
}

#[test]
fn parity_on_symmetric_intervals() {
    for m in 1..=3 {
        for x in [0.3, 1.1] {
            for fam in [Family::T3, Family::T7] {
                let x = if fam == Family::T7 { x / 2.0 } else { x };
                assert!((cf(fam, m, -x) + cf(fam, m, x)).abs() < 1e-13, "{fam} m={m}");
            }
            for fam in [Family::T4, Family::T8] {
                let x = if fam == Family::T8 { x / 2.0 } else { x };
                assert!((cf(fam, m, -x) - cf(fam, m, x)).abs() < 1e-13, "{fam} m={m}");
            }
        }
    }
}

#[test]
fn derivative_of_sine_series_is_cosine_series() {
    let (m, x, h) = (2, PI / 2.0, 1e-5);
    let fd = (cf(Family::T1, m, x + h) - cf(Family::T1, m, x - h)) / (2.0 * h);
    // d/dx Σ sin(nx)/n^4 = Σ cos(nx)/n^3, the T2 family at m = 2
    assert!((fd - cf(Family::T2, m, x)).abs() < 1e-5);
}

#[test]
fn order_one_cosine_series_collapse_to_logarithms() {
    for x in [PI / 3.0, PI / 2.0, 2.0, 1.0, 4.0] {
        let want = -(2.0 * (x / 2.0).sin()).ln();
        assert!((cf(Family::T2, 1, x) - want).abs() < 1e-10, "x={x}");
    }
    for x in [PI / 3.0, PI / 2.0, 2.0, -1.0, 0.5] {
        let want = (2.0 * (x / 2.0).cos()).ln();
        assert!((cf(Family::T4, 1, x) - want).abs() < 1e-10, "x={x}");
    }
}

#[test]
fn reconstruction_matches_value() {
    for fam in Family::ALL {
        for m in 1..=4 {
            let sp = spec(fam, m);
            for x in sp.interior_grid::<f64>(5) {
                let r = closed_form_eval(&sp, x).unwrap();
                let back = r.reconstruct();
                assert!((back - r.value).abs() <= 1e-13 * r.value.abs().max(1e-300) + 1e-15, "{fam} m={m} x={x}");
            }
        }
    }
}

#[test]
fn endpoints_are_refused() {
    let sp = spec(Family::T1, 1);
    assert!(matches!(closed_form_eval(&sp, 0.0), Err(Error::Domain(_))));
    assert!(matches!(closed_form_eval(&sp, 6.4), Err(Error::Domain(_))));
    assert!(matches!(closed_form_eval(&sp, 2.0 * PI - 1e-12), Err(Error::Domain(_))));
    assert!(SeriesSpec::from_family(Family::T1, 0).is_err());
}

#[test]
fn table_row_examples() {
    let row = table2_row(Family::T1);
    let t = general_closed_form(&row, 1, PI / 2.0).unwrap();
    assert!((t - cf(Family::T1, 1, PI / 2.0)).abs() < 1e-12);
    for fam in [Family::T1, Family::T2, Family::T3, Family::T4, Family::T5, Family::T6, Family::T7] {
        let sp = spec(fam, 2);
        let (lo, hi) = sp.interval::<f64>();
        let mid = if sp.is_symmetric() { (lo + hi) / 4.0 + hi / 4.0 } else { 0.5 * (lo + hi) };
        let t = general_closed_form(&table2_row(fam), 2, mid).unwrap();
        assert!((t - cf(fam, 2, mid)).abs() < 1e-8, "{fam}");
    }
}
