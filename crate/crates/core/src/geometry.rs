//! Euclidean primitives in `R^d`: distances, farthest vertices and the two
//! diameters (bichromatic and monochromatic) of an instance.
//!
//! Diameters are exhaustive `O(N^2)` scans. The scan order is the tie-break:
//! the first pair reaching the maximum in lexicographic
//! `(region_a, vertex_a, region_b, vertex_b)` order wins.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{Instance, Neighborhood};

/// A point in `R^d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Point(coords)
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    /// Midpoint of `self` and `other`; both must share a dimension.
    pub fn midpoint(&self, other: &Point) -> Result<Point> {
        check_dims(self, other)?;
        Ok(Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| 0.5 * (a + b))
                .collect(),
        ))
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl From<Vec<f64>> for Point {
    fn from(v: Vec<f64>) -> Self {
        Point(v)
    }
}

impl<const D: usize> From<[f64; D]> for Point {
    fn from(v: [f64; D]) -> Self {
        Point(v.to_vec())
    }
}

fn check_dims(p: &Point, q: &Point) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    Ok(())
}

/// Euclidean distance.
pub fn dist(p: &Point, q: &Point) -> Result<f64> {
    check_dims(p, q)?;
    Ok(dist_unchecked(p, q))
}

/// Distance for points already known to share a dimension (validated
/// instances). Zips silently otherwise.
#[inline]
pub(crate) fn dist_unchecked(p: &Point, q: &Point) -> f64 {
    p.0.iter()
        .zip(&q.0)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// A vertex pair attaining a diameter, addressed by region and vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiameterPair {
    pub region_a: usize,
    pub vertex_a: usize,
    pub region_b: usize,
    pub vertex_b: usize,
    pub length: f64,
}

impl DiameterPair {
    pub fn is_bichromatic(&self) -> bool {
        self.region_a != self.region_b
    }

    pub fn point_a<'a>(&self, inst: &'a Instance) -> &'a Point {
        &inst.regions()[self.region_a].vertices[self.vertex_a]
    }

    pub fn point_b<'a>(&self, inst: &'a Instance) -> &'a Point {
        &inst.regions()[self.region_b].vertices[self.vertex_b]
    }
}

/// Farthest pair of vertices lying in distinct regions.
pub fn bichromatic_diameter(inst: &Instance) -> Result<DiameterPair> {
    let regions = inst.regions();
    if regions.len() < 2 {
        return Err(Error::TooFewRegions {
            required: 2,
            found: regions.len(),
        });
    }
    let mut best: Option<DiameterPair> = None;
    for (i, xi) in regions.iter().enumerate() {
        for (u, p) in xi.vertices.iter().enumerate() {
            for (j, xj) in regions.iter().enumerate().skip(i + 1) {
                for (v, q) in xj.vertices.iter().enumerate() {
                    let d = dist_unchecked(p, q);
                    if best.map_or(true, |b| d > b.length) {
                        best = Some(DiameterPair {
                            region_a: i,
                            vertex_a: u,
                            region_b: j,
                            vertex_b: v,
                            length: d,
                        });
                    }
                }
            }
        }
    }
    best.ok_or(Error::EmptyRegion { region: 0 })
}

/// Farthest pair of vertices inside one region. All-singleton instances give
/// the zero-length pair `(0, 0, 0, 0)`.
pub fn monochromatic_diameter(inst: &Instance) -> Result<DiameterPair> {
    let regions = inst.regions();
    if regions.is_empty() {
        return Err(Error::TooFewRegions {
            required: 1,
            found: 0,
        });
    }
    let mut best = DiameterPair {
        region_a: 0,
        vertex_a: 0,
        region_b: 0,
        vertex_b: 0,
        length: 0.0,
    };
    for (i, x) in regions.iter().enumerate() {
        for (u, p) in x.vertices.iter().enumerate() {
            for (v, q) in x.vertices.iter().enumerate().skip(u + 1) {
                let d = dist_unchecked(p, q);
                if d > best.length {
                    best = DiameterPair {
                        region_a: i,
                        vertex_a: u,
                        region_b: i,
                        vertex_b: v,
                        length: d,
                    };
                }
            }
        }
    }
    Ok(best)
}

/// Vertex of `region` farthest from `p`; ties go to the smallest index.
pub fn farthest_vertex_from(p: &Point, region: &Neighborhood) -> Result<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for (k, v) in region.vertices.iter().enumerate() {
        let d = dist(p, v)?;
        if best.map_or(true, |(_, bd)| d > bd) {
            best = Some((k, d));
        }
    }
    best.ok_or(Error::InvalidArgument(format!(
        "region '{}' has no vertices",
        region.label
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_example_star, gen_tight};
    use approx::assert_relative_eq;

    fn singletons(pts: &[[f64; 2]]) -> Instance {
        Instance::new(
            2,
            pts.iter()
                .enumerate()
                .map(|(i, p)| Neighborhood::new(format!("X{}", i + 1), vec![Point::from(*p)]))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn dist_examples() {
        let o = Point::from([0.0, 0.0]);
        assert_eq!(dist(&o, &Point::from([1.0, 0.0])).unwrap(), 1.0);
        assert_relative_eq!(
            dist(&o, &Point::from([0.5, 3f64.sqrt() / 2.0])).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        // sqrt(9/16 + 3/16)
        assert_relative_eq!(
            dist(&o, &Point::from([0.75, 3f64.sqrt() / 4.0])).unwrap(),
            0.866_025_403_784_438_6,
            epsilon = 1e-15
        );
    }

    #[test]
    fn dist_rejects_dimension_mismatch() {
        let e = dist(&Point::from([0.0, 0.0]), &Point::from([0.0, 0.0, 1.0]));
        assert!(matches!(e, Err(Error::DimensionMismatch { left: 2, right: 3 })));
    }

    #[test]
    fn bichromatic_two_singletons() {
        let inst = singletons(&[[0.0, 0.0], [1.0, 0.0]]);
        let pair = bichromatic_diameter(&inst).unwrap();
        assert_eq!((pair.region_a, pair.region_b), (0, 1));
        assert_eq!(pair.length, 1.0);
    }

    #[test]
    fn diameters_of_star_example() {
        let inst = gen_example_star();
        let bi = bichromatic_diameter(&inst).unwrap();
        assert_relative_eq!(bi.length, 1.0, epsilon = 1e-12);
        assert!(bi.is_bichromatic());
        let mono = monochromatic_diameter(&inst).unwrap();
        assert_relative_eq!(mono.length, 1.0, epsilon = 1e-12);
        assert_eq!(mono.region_a, mono.region_b);
    }

    #[test]
    fn mono_diameter_of_singletons_is_zero() {
        let inst = singletons(&[[0.0, 0.0], [1.0, 0.0], [4.0, 2.0]]);
        let mono = monochromatic_diameter(&inst).unwrap();
        assert_eq!(mono.length, 0.0);
        assert_eq!(mono.vertex_a, mono.vertex_b);
    }

    #[test]
    fn tight_instance_diameters() {
        for n in [3, 6, 10] {
            let inst = gen_tight(n, 0.01).unwrap();
            let bi = bichromatic_diameter(&inst).unwrap();
            assert_eq!(bi.length, 1.0);
            assert_eq!((bi.region_a, bi.vertex_a, bi.region_b, bi.vertex_b), (0, 0, 1, 0));
            let mono = monochromatic_diameter(&inst).unwrap();
            assert_relative_eq!(mono.length, 0.99, epsilon = 1e-12);
            assert_eq!(mono.region_a, 0);
        }
    }

    #[test]
    fn farthest_vertex_examples() {
        let p = Point::from([0.5, 0.0]);
        let seg = Neighborhood::new("s", vec![Point::from([0.0, 0.0]), Point::from([1.0, 0.0])]);
        assert_eq!(farthest_vertex_from(&p, &seg).unwrap(), (0, 0.5));

        let vert = Neighborhood::new("v", vec![Point::from([0.5, 0.1]), Point::from([0.5, 0.3])]);
        let (k, d) = farthest_vertex_from(&p, &vert).unwrap();
        assert_eq!(k, 1);
        assert_relative_eq!(d, 0.3, epsilon = 1e-15);

        let eps = 0.01;
        let inst = gen_tight(6, eps).unwrap();
        let (k, d) = farthest_vertex_from(&p, &inst.regions()[0]).unwrap();
        assert_eq!(k, 1, "c is farther from o than a");
        let h = ((1.0 - eps) * (1.0 - eps) - 0.25f64).sqrt();
        assert_relative_eq!(d, h, epsilon = 1e-15);
    }

    #[test]
    fn farthest_vertex_empty_region_errors() {
        let empty = Neighborhood::new("e", vec![]);
        assert!(farthest_vertex_from(&Point::from([0.0, 0.0]), &empty).is_err());
    }
}
