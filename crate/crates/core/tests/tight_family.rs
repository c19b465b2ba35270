//! The near-tight family against its closed-form analysis.
//!
//! With `h = sqrt((1-eps)^2 - 1/4)` and `x = (1-eps) - h`, the singletons sit
//! at distance `sqrt(1/4 + x^2)` from both `a` and `b`, so the best candidate
//! has length `1 + (n-2) sqrt(1/4 + x^2)` while the star at `c` reaches
//! `(n-1)(1-eps)`. At `eps = 1/(n-1)` the ratio is `sqrt(1/4+x^2)+1/(n-2)`
//! up to the 1e-6 jitter, decreasing toward `sqrt(2-sqrt(3))`.

mod common;

use common::close;
use maxstn_core::generators::gen_tight;
use maxstn_core::{algo_a2, exact_opt, DEFAULT_BUDGET};

fn predicted(n: usize) -> (f64, f64) {
    let eps = 1.0 / (n as f64 - 1.0);
    let side = 1.0 - eps;
    let x = side - (side * side - 0.25).sqrt();
    let a2 = 1.0 + (n as f64 - 2.0) * (0.25 + x * x).sqrt();
    (a2, (n as f64 - 1.0) * side)
}

#[test]
fn lengths_follow_closed_form() {
    for n in [10, 20, 50, 100] {
        let inst = gen_tight(n, 1.0 / (n as f64 - 1.0)).unwrap();
        let (a2, opt) = predicted(n);
        let got_a2 = algo_a2(&inst).unwrap().length;
        let got_opt = exact_opt(&inst, DEFAULT_BUDGET).unwrap().length;
        // Each jittered singleton moves its edge by well under 1e-6.
        assert!((got_a2 - a2).abs() <= 1e-6 * n as f64, "n={n}: {got_a2} vs {a2}");
        assert!(close(got_opt, opt, 1e-9), "n={n}: {got_opt} vs {opt}");
    }
}

#[test]
fn ratio_decreases_toward_limit() {
    let limit = (2.0 - 3f64.sqrt()).sqrt();
    let ratios: Vec<f64> = [10, 20, 50, 100, 400]
        .iter()
        .map(|&n| {
            let inst = gen_tight(n, 1.0 / (n as f64 - 1.0)).unwrap();
            algo_a2(&inst).unwrap().length / exact_opt(&inst, DEFAULT_BUDGET).unwrap().length
        })
        .collect();
    assert!(ratios.windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
    assert!(ratios.iter().all(|&r| r > limit));
    assert!(ratios[4] - limit < 0.005);
}

#[test]
fn n100_value() {
    let inst = gen_tight(100, 1.0 / 99.0).unwrap();
    let r = algo_a2(&inst).unwrap().length / exact_opt(&inst, DEFAULT_BUDGET).unwrap().length;
    assert!((r - 0.528_254).abs() < 1e-5, "{r}");
}
