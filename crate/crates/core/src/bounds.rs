//! Computable upper bounds on the optimum and per-instance ratio certificates.
//!
//! Lengths inside formulas are normalized (bichromatic diameter `D = 1`);
//! the report carries original units. With `y` the normalized monochromatic
//! diameter minus one, every vertex lies within `R(y)` of `o`, and
//!
//! * `len(OPT) <= (n-1)`                                 (every edge is bichromatic)
//! * `len(OPT) <= sum_{i != j} Dmax(X_i)`                (charge each edge to its child)
//! * `len(OPT) <= (n-1) min(1, (1 + x + R(y)) / 2)`      (regions inside `omega`)
//! * `len(OPT) <= (n-1)/2 (1 + z + R(y))`                (mean radius `z` over `omega`)

use serde::{Deserialize, Serialize};

use crate::approx::{normalized_mono_diameter, omega, OmegaInfo, Solution};
use crate::error::{Error, Result};
use crate::geometry::dist_unchecked;
use crate::instance::{normalize, Instance, NormalizedView};

/// Relative slack for floating-point checks of proven inequalities.
pub const CHECK_TOLERANCE: f64 = 1e-9;

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

/// Radius of the ball `Omega` around `o` that holds every vertex:
/// `sqrt(3)/2` for `y <= 0`, `sqrt(3)/2 + 2y/sqrt(3)` for `y >= 0`.
///
/// `y` must lie in `[-1, 1]`; overshoot of `1` by at most [`CHECK_TOLERANCE`]
/// is clamped.
pub fn radius_r(y: f64) -> Result<f64> {
    if !(-1.0..=1.0 + CHECK_TOLERANCE).contains(&y) {
        return Err(Error::Domain {
            what: "y",
            value: y,
            lo: -1.0,
            hi: 1.0,
        });
    }
    let y = y.min(1.0);
    Ok(if y <= 0.0 {
        HALF_SQRT3
    } else {
        HALF_SQRT3 + 2.0 * y / 3f64.sqrt()
    })
}

fn diameter(inst: &Instance) -> Result<f64> {
    Ok(normalize(inst)?.scale)
}

/// `(n - 1) D`.
pub fn ub_trivial(inst: &Instance) -> Result<f64> {
    Ok((inst.n() as f64 - 1.0) * diameter(inst)?)
}

/// `min_j sum_{i != j} Dmax(X_i)`, where `Dmax(X)` is the largest distance
/// from a vertex of `X` to a vertex of another region.
pub fn ub_dmax(inst: &Instance) -> Result<f64> {
    if inst.n() < 2 {
        return Err(Error::TooFewRegions {
            required: 2,
            found: inst.n(),
        });
    }
    let regions = inst.regions();
    let per_region: Vec<f64> = regions
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let mut m = 0.0f64;
            for v in &x.vertices {
                for (j, y) in regions.iter().enumerate() {
                    if j != i {
                        for w in &y.vertices {
                            m = m.max(dist_unchecked(v, w));
                        }
                    }
                }
            }
            m
        })
        .collect();
    let total: f64 = per_region.iter().sum();
    let largest = per_region.iter().copied().fold(0.0, f64::max);
    Ok(total - largest)
}

/// Normalized `(n-1) min(1, (1 + x + R) / 2)`.
pub fn omega_bound(n: usize, x: f64, r_y: f64) -> f64 {
    (n as f64 - 1.0) * (1.0f64).min((1.0 + x + r_y) / 2.0)
}

/// Normalized `min(n-1, (n-1)/2 (1 + z + R))`.
pub fn refined_bound(n: usize, z_hat: f64, r_y: f64) -> f64 {
    let n1 = n as f64 - 1.0;
    n1.min(n1 / 2.0 * (1.0 + z_hat + r_y))
}

fn y_of(inst: &Instance, view: &NormalizedView<'_>) -> Result<f64> {
    if view.is_degenerate() {
        return Ok(-1.0);
    }
    Ok(normalized_mono_diameter(inst, view)? - 1.0)
}

pub fn ub_omega(inst: &Instance, view: &NormalizedView<'_>, om: &OmegaInfo) -> Result<f64> {
    let r = radius_r(y_of(inst, view)?)?;
    Ok(omega_bound(inst.n(), om.x, r) * view.scale)
}

pub fn ub_refined(inst: &Instance, view: &NormalizedView<'_>, om: &OmegaInfo) -> Result<f64> {
    let r = radius_r(y_of(inst, view)?)?;
    Ok(refined_bound(inst.n(), om.z_hat(), r) * view.scale)
}

/// Whether every vertex lies in the ball of radius `R(y) D` around `o`.
/// This holds for every valid instance; `false` means a bug.
pub fn omega_containment_check(inst: &Instance, view: &NormalizedView<'_>) -> Result<bool> {
    let limit = radius_r(y_of(inst, view)?)? * view.scale * (1.0 + CHECK_TOLERANCE);
    Ok(inst
        .regions()
        .iter()
        .flat_map(|r| &r.vertices)
        .all(|v| dist_unchecked(v, &view.o) <= limit))
}

/// Upper bounds on the optimum of one instance, in original units.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    /// Bichromatic diameter.
    pub d: f64,
    /// Normalized monochromatic diameter minus one.
    pub y: f64,
    pub r_y: f64,
    /// Normalized radius of `omega`; `None` when `n < 4`.
    pub x: Option<f64>,
    /// Normalized mean containment radius over `omega`; `None` when `n < 4`.
    pub z_hat: Option<f64>,
    pub ub_trivial: f64,
    pub ub_dmax: f64,
    pub ub_omega: Option<f64>,
    pub ub_refined: Option<f64>,
    pub ub_best: f64,
}

impl BoundsReport {
    pub fn is_degenerate(&self) -> bool {
        self.d == 0.0
    }

    /// The bounds divided by `D` (all zero for degenerate instances).
    pub fn normalized(&self) -> NormalizedBounds {
        let s = if self.is_degenerate() { 1.0 } else { self.d };
        NormalizedBounds {
            ub_trivial: self.ub_trivial / s,
            ub_dmax: self.ub_dmax / s,
            ub_omega: self.ub_omega.map(|v| v / s),
            ub_refined: self.ub_refined.map(|v| v / s),
            ub_best: self.ub_best / s,
        }
    }

    /// Every bound that is defined for this instance, with its name.
    pub fn defined_bounds(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![("ub_trivial", self.ub_trivial), ("ub_dmax", self.ub_dmax)];
        if let Some(v) = self.ub_omega {
            out.push(("ub_omega", v));
        }
        if let Some(v) = self.ub_refined {
            out.push(("ub_refined", v));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedBounds {
    pub ub_trivial: f64,
    pub ub_dmax: f64,
    pub ub_omega: Option<f64>,
    pub ub_refined: Option<f64>,
    pub ub_best: f64,
}

pub fn bounds_report(inst: &Instance) -> Result<BoundsReport> {
    let view = normalize(inst)?;
    let n = inst.n();
    let d = view.scale;
    let y = y_of(inst, &view)?;
    let r_y = radius_r(y)?;
    let ub_trivial = (n as f64 - 1.0) * d;
    let ub_dmax = ub_dmax(inst)?;
    let (x, z_hat, ub_omega, ub_refined) = if n >= 4 {
        let om = omega(inst, &view)?;
        let z = om.z_hat();
        (
            Some(om.x),
            Some(z),
            Some(omega_bound(n, om.x, r_y) * d),
            Some(refined_bound(n, z, r_y) * d),
        )
    } else {
        (None, None, None, None)
    };
    let ub_best = [Some(ub_trivial), Some(ub_dmax), ub_omega, ub_refined]
        .into_iter()
        .flatten()
        .fold(f64::INFINITY, f64::min);
    Ok(BoundsReport {
        n,
        d,
        y,
        r_y,
        x,
        z_hat,
        ub_trivial,
        ub_dmax,
        ub_omega,
        ub_refined,
        ub_best,
    })
}

/// `len(sol) / ub_best`; `1` on degenerate instances.
pub fn certified_ratio(sol: &Solution, report: &BoundsReport) -> f64 {
    if report.is_degenerate() || report.ub_best == 0.0 {
        1.0
    } else {
        sol.length / report.ub_best
    }
}
