//! Named instances and seeded random families.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::instance::{Instance, Neighborhood};

/// Largest horizontal offset of the singleton points in [`gen_tight`].
pub const TIGHT_JITTER: f64 = 1e-6;

fn unit_triangle() -> (Point, Point, Point) {
    (
        Point::from([0.0, 0.0]),
        Point::from([1.0, 0.0]),
        Point::from([0.5, 3f64.sqrt() / 2.0]),
    )
}

/// Four regions on the unit equilateral triangle `abc`:
/// `{a,b}, {b,c}, {a,c}, {a,b,c}`. The optimum is a star of length 3.
pub fn gen_example_star() -> Instance {
    let (a, b, c) = unit_triangle();
    Instance::new(
        2,
        vec![
            Neighborhood::new("X1", vec![a.clone(), b.clone()]),
            Neighborhood::new("X2", vec![b.clone(), c.clone()]),
            Neighborhood::new("X3", vec![a.clone(), c.clone()]),
            Neighborhood::new("X4", vec![a, b, c]),
        ],
    )
    .expect("fixed example is valid")
}

/// `{a,b}, {a,c}, {d}` with `d` the midpoint of `bc`; greedy diameter-first
/// selection is suboptimal here.
pub fn gen_example_greedy() -> Instance {
    let (a, b, c) = unit_triangle();
    let d = Point::from([0.75, 3f64.sqrt() / 4.0]);
    Instance::new(
        2,
        vec![
            Neighborhood::new("X1", vec![a.clone(), b]),
            Neighborhood::new("X2", vec![a, c]),
            Neighborhood::new("X3", vec![d]),
        ],
    )
    .expect("fixed example is valid")
}

/// Near-tight family for diameter-anchored algorithms.
///
/// `a = (0,0)`, `b = (1,0)`, `c = (1/2, h)` with `|ca| = |cb| = 1 - eps`;
/// `X1 = {a, c}`, `X2 = {b, c}`, and `n - 2` singletons at
/// `(1/2 + delta_i, h - (1 - eps))`, just below `ab`, where the offsets
/// `delta_i` are distinct and spread evenly over `[-1e-6, 1e-6]`.
pub fn gen_tight(n: usize, eps: f64) -> Result<Instance> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("tight family needs n >= 3, got {n}")));
    }
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::Domain {
            what: "eps",
            value: eps,
            lo: 0.0,
            hi: 0.5,
        });
    }
    let side = 1.0 - eps;
    let h = (side * side - 0.25).sqrt();
    let a = Point::from([0.0, 0.0]);
    let b = Point::from([1.0, 0.0]);
    let c = Point::from([0.5, h]);
    let mut regions = vec![
        Neighborhood::new("X1", vec![a, c.clone()]),
        Neighborhood::new("X2", vec![b, c]),
    ];
    let m = n - 2;
    for k in 0..m {
        let delta = if m == 1 {
            0.0
        } else {
            TIGHT_JITTER * (2.0 * k as f64 / (m - 1) as f64 - 1.0)
        };
        regions.push(Neighborhood::new(
            format!("X{}", k + 3),
            vec![Point::from([0.5 + delta, h - side])],
        ));
    }
    Instance::new(2, regions)
}

/// `n` regions of `1..=k_max` vertices each (uniform), vertices uniform in
/// the unit cube `[0,1)^dim`. Deterministic for a fixed seed.
pub fn gen_random(n: usize, k_max: usize, dim: usize, seed: u64) -> Result<Instance> {
    if n < 2 || k_max < 1 || dim < 2 {
        return Err(Error::InvalidArgument(format!(
            "random family needs n >= 2, k_max >= 1, dim >= 2 (got {n}, {k_max}, {dim})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let regions = (0..n)
        .map(|i| {
            let k = rng.gen_range(1..=k_max);
            let vertices = (0..k)
                .map(|_| Point::new((0..dim).map(|_| rng.gen::<f64>()).collect()))
                .collect();
            Neighborhood::new(format!("X{}", i + 1), vertices)
        })
        .collect();
    Instance::new(dim, regions)
}
