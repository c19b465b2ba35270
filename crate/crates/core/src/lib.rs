//! Approximation algorithms for the longest spanning tree with neighborhoods.
//!
//! An [`Instance`] is a list of regions, each given by its vertex set in
//! `R^d`. A feasible tree picks one vertex per region and joins the picks by
//! a spanning tree; the goal is to maximize total Euclidean length.
//!
//! - [`algo_a1`]: longer of the two diameter stars, ratio `1/2`.
//! - [`algo_a2`]: best of four candidate trees, ratio `0.5114...`.
//! - [`exact_opt`]: brute-force optimum for small instances.
//! - [`bounds_report`]: computable upper bounds and certified ratios.

pub mod approx;
pub mod bench;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod generators;
pub mod geometry;
pub mod instance;
pub mod render;
pub mod spanning;
pub mod theory;

pub use approx::{algo_a1, algo_a2, algo_a2_with_budget, Producer, Solution};
pub use bounds::{bounds_report, certified_ratio, BoundsReport};
pub use error::{Error, Result};
pub use exact::{count_selections, exact_opt, DEFAULT_BUDGET};
pub use geometry::{bichromatic_diameter, dist, monochromatic_diameter, DiameterPair, Point};
pub use instance::{normalize, read_instance, write_instance, Instance, Neighborhood, NormalizedView, Violation};
pub use spanning::{max_spanning_tree, star, two_star, Selection, Tree};
