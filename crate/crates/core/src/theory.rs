//! Numeric verification of the ratio analysis for `A2`.
//!
//! The ratio bound is `min g(z, y)` over `[0, 0.2]^2` for `y >= 0` and
//! `min f(z)` for `y < 0`. This module evaluates both functions, grid-minimizes
//! them, and compares the results against the closed-form constants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper end of the `z`/`y` domain of `g` and `f`.
pub const DOMAIN_MAX: f64 = 0.2;
/// Coarsest grid accepted by [`minimize_case_analysis`].
pub const MAX_GRID_STEP: f64 = 1e-3;
/// Step of the central finite differences used for monotonicity checks.
pub const FD_STEP: f64 = 1e-6;

/// High-precision references (20 significant digits, computed independently).
pub mod reference {
    pub const RHO: f64 = 0.511_438_167_178_517_810_16;
    pub const Z0: f64 = 0.107_559_280_617_348_553_58;
    pub const Y0: f64 = 0.022_876_334_357_035_620_326;
    pub const CASE1_MIN: f64 = 0.517_638_090_205_041_524_7;
    pub const PRELIM_508: f64 = 0.508_819_045_102_520_762_35;
    pub const PRELIM_506: f64 = 0.506_878_056_553_272_864_04;
    pub const PRELIM_506_Y: f64 = 0.013_756_113_106_545_728_088;
    pub const PRELIM_506_X: f64 = 0.118_090_405_005_427_122_76;
    pub const X_SHORTCUT: f64 = 0.519_258_240_356_725_201_56;
}

fn s3() -> f64 {
    3f64.sqrt()
}

fn check_domain(what: &'static str, v: f64) -> Result<()> {
    if (0.0..=DOMAIN_MAX).contains(&v) {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: v,
            lo: 0.0,
            hi: DOMAIN_MAX,
        })
    }
}

/// Denominator arm `1 + sqrt(3)/2 + z + 2y/sqrt(3)` shared by `g` and its
/// region formulas.
fn ell(z: f64, y: f64) -> f64 {
    1.0 + s3() / 2.0 + z + 2.0 * y / s3()
}

/// `g(z, y) = max(1+y, sqrt(1+4z^2)) / min(2, 1 + sqrt(3)/2 + z + 2y/sqrt(3))`.
pub fn g(z: f64, y: f64) -> Result<f64> {
    check_domain("z", z)?;
    check_domain("y", y)?;
    Ok(g_unchecked(z, y))
}

fn g_unchecked(z: f64, y: f64) -> f64 {
    (1.0 + y).max((1.0 + 4.0 * z * z).sqrt()) / 2f64.min(ell(z, y))
}

/// `f(z) = 2 sqrt(1+4z^2) / (2 + sqrt(3) + 2z)`.
pub fn f(z: f64) -> Result<f64> {
    check_domain("z", z)?;
    Ok(f_unchecked(z))
}

fn f_unchecked(z: f64) -> f64 {
    2.0 * (1.0 + 4.0 * z * z).sqrt() / (2.0 + s3() + 2.0 * z)
}

/// First-pass bound for `y < 0`: `(1 + sqrt(1+4x^2)) / min(4, 2 + sqrt(3) + 2x)`.
pub fn prelim_negative_y(x: f64) -> Result<f64> {
    check_domain("x", x)?;
    Ok((1.0 + (1.0 + 4.0 * x * x).sqrt()) / 4f64.min(2.0 + s3() + 2.0 * x))
}

/// First-pass bound for `y >= 0`:
/// `max(1+y, (1 + sqrt(1+4x^2))/2) / min(2, 1 + sqrt(3)/2 + x + 2y/sqrt(3))`.
pub fn prelim_nonnegative_y(x: f64, y: f64) -> Result<f64> {
    check_domain("x", x)?;
    check_domain("y", y)?;
    Ok((1.0 + y).max((1.0 + (1.0 + 4.0 * x * x).sqrt()) / 2.0) / 2f64.min(ell(x, y)))
}

/// The constants of the analysis, evaluated from their closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioConstants {
    pub rho: f64,
    pub z0: f64,
    pub y0: f64,
    /// `sqrt(2 - sqrt(3))`
    pub case1_min: f64,
    /// `(1 + 2 sqrt(2 - sqrt(3))) / 4`
    pub prelim_508: f64,
    /// `(4 sqrt(3) - 1 - 2 sqrt(9 - 3 sqrt(3))) / 4`
    pub prelim_506: f64,
    /// `(5 + sqrt(29)) / 20`
    pub x_shortcut: f64,
}

impl RatioConstants {
    pub fn closed_form() -> Self {
        let r3 = s3();
        let q3 = 3f64.powf(0.25);
        let q27 = 27f64.powf(0.25);
        let y0 = (8.0 * r3 - 2.0 * q27 - 9.0) / 13.0;
        let case1_min = (2.0 - r3).sqrt();
        RatioConstants {
            rho: (1.0 + y0) / 2.0,
            z0: (8.0 * q3 - r3 - 6.0) / 26.0,
            y0,
            case1_min,
            prelim_508: (1.0 + 2.0 * case1_min) / 4.0,
            prelim_506: (4.0 * r3 - 1.0 - 2.0 * (9.0 - 3.0 * r3).sqrt()) / 4.0,
            x_shortcut: (5.0 + 29f64.sqrt()) / 20.0,
        }
    }

    /// `(4 sqrt(3) + 2 - 27^(1/4)) / 13`, the second closed form of `rho`.
    pub fn rho_direct() -> f64 {
        (4.0 * s3() + 2.0 - 27f64.powf(0.25)) / 13.0
    }
}

/// One row of the verification table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    fn close(name: &str, value: f64, expected: f64, tol: f64) -> Self {
        Check {
            name: name.to_string(),
            value,
            expected,
            tol,
            pass: (value - expected).abs() <= tol,
        }
    }

    /// Passes when `value >= expected - tol`.
    fn at_least(name: &str, value: f64, expected: f64, tol: f64) -> Self {
        Check {
            name: name.to_string(),
            value,
            expected,
            tol,
            pass: value >= expected - tol,
        }
    }

    /// Passes when `value` is a truthy indicator (`1.0`).
    fn holds(name: &str, ok: bool) -> Self {
        Check {
            name: name.to_string(),
            value: if ok { 1.0 } else { 0.0 },
            expected: 1.0,
            tol: 0.0,
            pass: ok,
        }
    }

    /// The decimal expansion of `value` starts with `prefix` (e.g. `"0.511"`).
    fn prefix(name: &str, value: f64, prefix: &str) -> Self {
        let digits = prefix.len().saturating_sub(2);
        let shown = format!("{:.*}", digits + 6, value);
        let expected: f64 = prefix.parse().unwrap_or(f64::NAN);
        Check {
            name: name.to_string(),
            value,
            expected,
            tol: 10f64.powi(-(digits as i32)),
            pass: shown.starts_with(prefix),
        }
    }
}

/// Grid minima, their locations and the full check table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseAnalysis {
    pub grid_step: f64,
    pub constants: RatioConstants,
    pub g_min: f64,
    /// `(z, y)` of the grid minimum of `g`.
    pub g_argmin: (f64, f64),
    pub f_min: f64,
    pub f_argmin: f64,
    pub prelim_neg_min: f64,
    pub prelim_neg_argmin: f64,
    pub prelim_pos_min: f64,
    /// `(x, y)` of the grid minimum of the first-pass `y >= 0` bound.
    pub prelim_pos_argmin: (f64, f64),
    pub checks: Vec<Check>,
}

impl CaseAnalysis {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Grid points `0, h, 2h, ..., 0.2` (the last one clamped to `0.2`).
fn grid(step: f64) -> Vec<f64> {
    let k = (DOMAIN_MAX / step - 1e-9).ceil() as usize;
    (0..=k).map(|i| (i as f64 * step).min(DOMAIN_MAX)).collect()
}

fn argmin_1d(pts: &[f64], h: impl Fn(f64) -> f64) -> (f64, f64) {
    pts.iter()
        .map(|&t| (h(t), t))
        .fold((f64::INFINITY, 0.0), |best, cur| if cur.0 < best.0 { cur } else { best })
}

fn argmin_2d(pts: &[f64], h: impl Fn(f64, f64) -> f64) -> (f64, (f64, f64)) {
    let mut best = (f64::INFINITY, (0.0, 0.0));
    for &u in pts {
        for &v in pts {
            let val = h(u, v);
            if val < best.0 {
                best = (val, (u, v));
            }
        }
    }
    best
}

fn central_diff(h: impl Fn(f64) -> f64, t: f64) -> f64 {
    (h(t + FD_STEP) - h(t - FD_STEP)) / (2.0 * FD_STEP)
}

/// Sample points strictly inside `[0, 0.2]^2`, away from the boundary by
/// more than the finite-difference step.
fn samples() -> Vec<(f64, f64)> {
    let ticks: Vec<f64> = (1..40).map(|i| i as f64 * 0.005).collect();
    ticks
        .iter()
        .flat_map(|&z| ticks.iter().map(move |&y| (z, y)))
        .collect()
}

fn on_gamma(z: f64) -> f64 {
    (1.0 + 4.0 * z * z).sqrt()
}

/// Monotonicity certificates of the four-region argument, by central finite
/// differences at sampled points.
fn monotonicity_checks() -> Vec<Check> {
    let region2 = |z: f64, y: f64| (1.0 + y) / ell(z, y);
    let region3 = |z: f64, y: f64| on_gamma(z) / ell(z, y);
    let along_gamma = |z: f64| {
        let r = on_gamma(z);
        r / (1.0 - s3() / 6.0 + z + 2.0 * r / s3())
    };

    let mut ii = (0usize, f64::INFINITY);
    let mut iii = (0usize, f64::NEG_INFINITY);
    for (z, y) in samples() {
        let max_is_y = 1.0 + y > on_gamma(z);
        let min_is_ell = ell(z, y) < 2.0;
        if max_is_y && min_is_ell {
            let d = central_diff(|t| region2(z, t), y);
            ii = (ii.0 + 1, ii.1.min(d));
        } else if !max_is_y && min_is_ell {
            let d = central_diff(|t| region3(z, t), y);
            iii = (iii.0 + 1, iii.1.max(d));
        }
    }
    let gamma_worst = (1..40)
        .map(|i| central_diff(along_gamma, i as f64 * 0.005))
        .fold(f64::NEG_INFINITY, f64::max);
    let iv_worst = (1..40)
        .map(|i| central_diff(|z| on_gamma(z) / 2.0, i as f64 * 0.005))
        .fold(f64::INFINITY, f64::min);

    vec![
        Check::holds("region II sampled", ii.0 > 0),
        Check::holds("region II: dg/dy > 0", ii.1 > 0.0),
        Check::holds("region III sampled", iii.0 > 0),
        Check::holds("region III: dg/dy < 0", iii.1 < 0.0),
        Check::holds("along gamma: G'(z) < 0", gamma_worst < 0.0),
        Check::holds("region IV: dg/dz > 0", iv_worst > 0.0),
    ]
}

/// Grid-minimize `g`, `f` and the two first-pass bounds, and check every
/// constant of the analysis.
pub fn minimize_case_analysis(grid_step: f64) -> Result<CaseAnalysis> {
    verify_with_offset(grid_step, 0.0)
}

/// As [`minimize_case_analysis`], with `rho_offset` added to the closed-form
/// `rho` before checking. A nonzero offset must make the table fail.
pub fn verify_with_offset(grid_step: f64, rho_offset: f64) -> Result<CaseAnalysis> {
    if !(grid_step > 0.0 && grid_step <= MAX_GRID_STEP) {
        return Err(Error::Domain {
            what: "grid_step",
            value: grid_step,
            lo: 0.0,
            hi: MAX_GRID_STEP,
        });
    }
    let mut c = RatioConstants::closed_form();
    c.rho += rho_offset;
    let pts = grid(grid_step);

    let (g_min, g_argmin) = argmin_2d(&pts, g_unchecked);
    let (f_min, f_argmin) = argmin_1d(&pts, f_unchecked);
    let (prelim_neg_min, prelim_neg_argmin) =
        argmin_1d(&pts, |x| prelim_negative_y(x).expect("grid lies in the domain"));
    let (prelim_pos_min, prelim_pos_argmin) =
        argmin_2d(&pts, |x, y| prelim_nonnegative_y(x, y).expect("grid lies in the domain"));

    let q = 1.0 - s3() / 2.0;
    let mut checks = vec![
        Check::close("rho closed form", c.rho, reference::RHO, 1e-15),
        Check::close("rho = (4sqrt3+2-27^(1/4))/13", c.rho, RatioConstants::rho_direct(), 1e-15),
        Check::close("rho = (1+y0)/2", c.rho, (1.0 + c.y0) / 2.0, 1e-15),
        Check::prefix("rho digits 0.5114", c.rho, "0.5114"),
        Check::close("z0 closed form", c.z0, reference::Z0, 1e-15),
        Check::prefix("z0 digits 0.1075", c.z0, "0.1075"),
        Check::close("y0 closed form", c.y0, reference::Y0, 1e-15),
        Check::prefix("y0 digits 0.0228", c.y0, "0.0228"),
        Check::close("p on gamma: 1+y0 = sqrt(1+4z0^2)", 1.0 + c.y0, on_gamma(c.z0), 1e-12),
        Check::close("p on ell: 1+sqrt3/2+z0+2y0/sqrt3 = 2", ell(c.z0, c.y0), 2.0, 1e-12),
        Check::close("g(z0, y0) = rho", g_unchecked(c.z0, c.y0), c.rho, 1e-12),
        Check::close("grid min g = rho", g_min, c.rho, 1e-4),
        Check::at_least("grid min g >= rho", g_min, c.rho, 1e-12),
        Check::close("argmin g: z = z0", g_argmin.0, c.z0, 1e-3),
        Check::close("argmin g: y = y0", g_argmin.1, c.y0, 1e-3),
        Check::close("sqrt(2-sqrt3) closed form", c.case1_min, reference::CASE1_MIN, 1e-15),
        Check::close("f(1-sqrt3/2) = sqrt(2-sqrt3)", f_unchecked(q), c.case1_min, 1e-12),
        Check::close("grid min f = sqrt(2-sqrt3)", f_min, c.case1_min, 1e-6),
        Check::close("argmin f = 1-sqrt3/2", f_argmin, q, grid_step),
        Check::holds(
            "f non-increasing on [0, 1-sqrt3/2]",
            pts.windows(2)
                .filter(|w| w[1] <= q)
                .all(|w| f_unchecked(w[1]) <= f_unchecked(w[0])),
        ),
        Check::close("(5+sqrt29)/20 closed form", c.x_shortcut, reference::X_SHORTCUT, 1e-15),
        Check::close("(5+sqrt29)/20 = 0.5192582", c.x_shortcut, 0.519_258_2, 1e-7),
        Check::prefix("(5+sqrt29)/20 digits 0.519", c.x_shortcut, "0.519"),
        Check::close("(1+2sqrt(2-sqrt3))/4 closed form", c.prelim_508, reference::PRELIM_508, 1e-15),
        Check::prefix("(1+2sqrt(2-sqrt3))/4 digits 0.508", c.prelim_508, "0.508"),
        // Both first-pass minima sit on a kink, so the grid error is first order.
        Check::close("first-pass y<0 grid min", prelim_neg_min, c.prelim_508, grid_step),
        Check::at_least("first-pass y<0 grid min >= closed form", prelim_neg_min, c.prelim_508, 1e-12),
        Check::close("first-pass y<0 argmin = 1-sqrt3/2", prelim_neg_argmin, q, grid_step),
        Check::close("(4sqrt3-1-2sqrt(9-3sqrt3))/4 closed form", c.prelim_506, reference::PRELIM_506, 1e-15),
        Check::prefix("(4sqrt3-1-2sqrt(9-3sqrt3))/4 digits 0.506", c.prelim_506, "0.506"),
        Check::close("first-pass y>=0 grid min", prelim_pos_min, c.prelim_506, grid_step),
        Check::at_least("first-pass y>=0 grid min >= closed form", prelim_pos_min, c.prelim_506, 1e-12),
        Check::close("first-pass y>=0 argmin x", prelim_pos_argmin.0, reference::PRELIM_506_X, 1e-3),
        Check::close("first-pass y>=0 argmin y", prelim_pos_argmin.1, reference::PRELIM_506_Y, 1e-3),
        Check::holds("rho exceeds 1/2", c.rho > 0.5),
    ];
    checks.extend(monotonicity_checks());

    Ok(CaseAnalysis {
        grid_step,
        constants: c,
        g_min,
        g_argmin,
        f_min,
        f_argmin,
        prelim_neg_min,
        prelim_neg_argmin,
        prelim_pos_min,
        prelim_pos_argmin,
        checks,
    })
}
