//! Instance data model, validation, the normalized view and JSON file I/O.
//!
//! A neighborhood is stored as its vertex set only. Every quantity the
//! algorithms need (diameters, farthest points, containment in a ball, the
//! optimum itself) is attained at vertices of a polyhedral region.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{bichromatic_diameter, DiameterPair, Point};

/// One region, reduced to its vertex set. Duplicate vertices are tolerated.
#[derive(Debug, Clone, PartialEq)]
pub struct Neighborhood {
    pub label: String,
    pub vertices: Vec<Point>,
}

impl Neighborhood {
    pub fn new(label: impl Into<String>, vertices: Vec<Point>) -> Self {
        Neighborhood {
            label: label.into(),
            vertices,
        }
    }
}

/// An ordered collection of `n >= 2` neighborhoods in `R^dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    dim: usize,
    regions: Vec<Neighborhood>,
}

/// A single broken invariant, located by region and vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooFewRegions { n: usize },
    DimensionTooSmall { dim: usize },
    EmptyRegion { region: usize },
    DimensionMismatch {
        region: usize,
        vertex: usize,
        found: usize,
        expected: usize,
    },
    NonFinite { region: usize, vertex: usize, axis: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewRegions { n } => write!(f, "n < 2 (n = {n})"),
            Violation::DimensionTooSmall { dim } => write!(f, "dim < 2 (dim = {dim})"),
            Violation::EmptyRegion { region } => write!(f, "region {region} has no vertices"),
            Violation::DimensionMismatch {
                region,
                vertex,
                found,
                expected,
            } => write!(
                f,
                "dimension mismatch at region {region}, vertex {vertex}: {found} != {expected}"
            ),
            Violation::NonFinite {
                region,
                vertex,
                axis,
            } => write!(
                f,
                "non-finite coordinate at region {region}, vertex {vertex}, axis {axis}"
            ),
        }
    }
}

impl Instance {
    /// Builds a validated instance.
    pub fn new(dim: usize, regions: Vec<Neighborhood>) -> Result<Self> {
        let inst = Instance::new_unchecked(dim, regions);
        let violations = inst.validate();
        if violations.is_empty() {
            Ok(inst)
        } else {
            Err(Error::Invalid(violations))
        }
    }

    /// Builds an instance without checking invariants. Use [`Instance::validate`]
    /// before handing it to any algorithm.
    pub fn new_unchecked(dim: usize, regions: Vec<Neighborhood>) -> Self {
        Instance { dim, regions }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn regions(&self) -> &[Neighborhood] {
        &self.regions
    }

    /// Number of regions `n`.
    pub fn n(&self) -> usize {
        self.regions.len()
    }

    /// Total vertex count `N`.
    pub fn total_vertices(&self) -> usize {
        self.regions.iter().map(|r| r.vertices.len()).sum()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.regions.len() < 2 {
            out.push(Violation::TooFewRegions {
                n: self.regions.len(),
            });
        }
        if self.dim < 2 {
            out.push(Violation::DimensionTooSmall { dim: self.dim });
        }
        for (i, r) in self.regions.iter().enumerate() {
            if r.vertices.is_empty() {
                out.push(Violation::EmptyRegion { region: i });
            }
            for (k, v) in r.vertices.iter().enumerate() {
                if v.dim() != self.dim {
                    out.push(Violation::DimensionMismatch {
                        region: i,
                        vertex: k,
                        found: v.dim(),
                        expected: self.dim,
                    });
                }
                if let Some(axis) = v.coords().iter().position(|c| !c.is_finite()) {
                    out.push(Violation::NonFinite {
                        region: i,
                        vertex: k,
                        axis,
                    });
                }
            }
        }
        out
    }

    /// Same instance with the regions permuted: region `i` of the result is
    /// region `order[i]` of `self`.
    pub fn reordered(&self, order: &[usize]) -> Result<Instance> {
        let mut seen = vec![false; self.n()];
        for &k in order {
            if k >= self.n() || std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidArgument(format!(
                    "{order:?} is not a permutation of 0..{}",
                    self.n()
                )));
            }
        }
        if order.len() != self.n() {
            return Err(Error::InvalidArgument(format!(
                "{order:?} is not a permutation of 0..{}",
                self.n()
            )));
        }
        Ok(Instance::new_unchecked(
            self.dim,
            order.iter().map(|&k| self.regions[k].clone()).collect(),
        ))
    }

    /// Applies `f` to every vertex.
    pub fn map_points(&self, mut f: impl FnMut(&Point) -> Point) -> Instance {
        let regions = self
            .regions
            .iter()
            .map(|r| Neighborhood::new(r.label.clone(), r.vertices.iter().map(&mut f).collect()))
            .collect();
        Instance::new_unchecked(self.dim, regions)
    }

    pub fn from_json_str(text: &str) -> Result<Instance> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })?;
        let regions = file
            .regions
            .into_iter()
            .map(|r| Neighborhood::new(r.label, r.vertices.into_iter().map(Point::new).collect()))
            .collect();
        Instance::new(file.dim, regions)
    }

    /// JSON text in the instance file format, one region per line.
    pub fn to_json_string(&self) -> String {
        let mut out = format!("{{\"dim\":{},\"regions\":[", self.dim);
        for (i, r) in self.regions.iter().enumerate() {
            let entry = RegionFile {
                label: r.label.clone(),
                vertices: r.vertices.iter().map(|v| v.coords().to_vec()).collect(),
            };
            out.push_str(if i == 0 { "\n  " } else { ",\n  " });
            // Serializing plain strings and finite floats cannot fail.
            out.push_str(&serde_json::to_string(&entry).expect("region serializes"));
        }
        out.push_str("\n]}\n");
        out
    }
}

pub fn read_instance(path: impl AsRef<Path>) -> Result<Instance> {
    let text = fs::read_to_string(path)?;
    Instance::from_json_str(&text)
}

pub fn write_instance(inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, inst.to_json_string())?;
    Ok(())
}

pub fn validate(inst: &Instance) -> Vec<Violation> {
    inst.validate()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    dim: usize,
    regions: Vec<RegionFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RegionFile {
    label: String,
    vertices: Vec<Vec<f64>>,
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rsplit_once(" at line ") {
        Some((head, _)) => head.to_string(),
        None => msg.to_string(),
    }
}

/// Unit-normalized reading of an instance: lengths are divided by the
/// bichromatic diameter `scale` and measured around its midpoint `o`.
/// Coordinates of `base` are never transformed.
#[derive(Debug, Clone)]
pub struct NormalizedView<'a> {
    pub base: &'a Instance,
    pub scale: f64,
    pub o: Point,
    pub diam_pair: DiameterPair,
}

impl NormalizedView<'_> {
    /// All cross-region distances are zero; every spanning tree has length 0.
    pub fn is_degenerate(&self) -> bool {
        self.scale == 0.0
    }

    pub fn a(&self) -> &Point {
        self.diam_pair.point_a(self.base)
    }

    pub fn b(&self) -> &Point {
        self.diam_pair.point_b(self.base)
    }
}

pub fn normalize(inst: &Instance) -> Result<NormalizedView<'_>> {
    let pair = bichromatic_diameter(inst)?;
    let o = pair.point_a(inst).midpoint(pair.point_b(inst))?;
    Ok(NormalizedView {
        base: inst,
        scale: pair.length,
        o,
        diam_pair: pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_example_greedy, gen_example_star, gen_random, gen_tight};

    fn two(p: [f64; 2], q: [f64; 2]) -> Instance {
        Instance::new(
            2,
            vec![
                Neighborhood::new("X1", vec![Point::from(p)]),
                Neighborhood::new("X2", vec![Point::from(q)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(gen_example_star().validate().is_empty());

        let one = Instance::new_unchecked(2, vec![Neighborhood::new("X1", vec![Point::from([0.0, 0.0])])]);
        let v = one.validate();
        assert_eq!(v, vec![Violation::TooFewRegions { n: 1 }]);
        assert!(v[0].to_string().starts_with("n < 2"));

        let nan = Instance::new_unchecked(
            2,
            vec![
                Neighborhood::new("X1", vec![Point::from([0.0, 0.0])]),
                Neighborhood::new("X2", vec![Point::from([0.0, 0.0]), Point::from([f64::NAN, 1.0])]),
            ],
        );
        let v = nan.validate();
        assert_eq!(v.len(), 1);
        assert_eq!(
            v[0].to_string(),
            "non-finite coordinate at region 1, vertex 1, axis 0"
        );
    }

    #[test]
    fn validate_reports_empty_and_mixed_dims() {
        let inst = Instance::new_unchecked(
            2,
            vec![
                Neighborhood::new("X1", vec![]),
                Neighborhood::new("X2", vec![Point::from([0.0, 0.0, 0.0])]),
            ],
        );
        let v = inst.validate();
        assert!(v.contains(&Violation::EmptyRegion { region: 0 }));
        assert!(v.iter().any(|x| matches!(x, Violation::DimensionMismatch { region: 1, .. })));
    }

    #[test]
    fn normalize_examples() {
        let view_inst = two([0.0, 0.0], [2.0, 0.0]);
        let view = normalize(&view_inst).unwrap();
        assert_eq!(view.scale, 2.0);
        assert_eq!(view.o, Point::from([1.0, 0.0]));
        assert!(!view.is_degenerate());

        let star = gen_example_star();
        let view = normalize(&star).unwrap();
        assert!((view.scale - 1.0).abs() < 1e-12);
        let expect = view.a().midpoint(view.b()).unwrap();
        assert_eq!(view.o, expect);

        let same = Instance::new(
            2,
            (0..3)
                .map(|i| Neighborhood::new(format!("X{i}"), vec![Point::from([0.3, 0.3])]))
                .collect(),
        )
        .unwrap();
        let view = normalize(&same).unwrap();
        assert!(view.is_degenerate());
        assert_eq!(view.scale, 0.0);
    }

    #[test]
    fn normalize_is_reproducible() {
        let inst = gen_random(6, 3, 3, 11).unwrap();
        let v1 = normalize(&inst).unwrap();
        let v2 = normalize(v1.base).unwrap();
        assert_eq!(v1.scale, v2.scale);
        assert_eq!(v1.o, v2.o);
        assert_eq!(v1.diam_pair, v2.diam_pair);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        for inst in [
            gen_example_star(),
            gen_example_greedy(),
            gen_tight(7, 0.03).unwrap(),
            gen_random(5, 3, 3, 42).unwrap(),
        ] {
            let text = inst.to_json_string();
            let back = Instance::from_json_str(&text).unwrap();
            assert_eq!(back, inst);
            for (r, s) in back.regions().iter().zip(inst.regions()) {
                for (p, q) in r.vertices.iter().zip(&s.vertices) {
                    for (x, y) in p.coords().iter().zip(q.coords()) {
                        assert_eq!(x.to_bits(), y.to_bits());
                    }
                }
            }
        }
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("star.json");
        let inst = gen_example_star();
        write_instance(&inst, &path).unwrap();
        assert_eq!(read_instance(&path).unwrap(), inst);
    }

    #[test]
    fn mixed_dimension_file_is_rejected() {
        let text = r#"{"dim":2,"regions":[{"label":"A","vertices":[[0,0]]},{"label":"B","vertices":[[1,0,0]]}]}"#;
        assert!(matches!(Instance::from_json_str(text), Err(Error::Invalid(_))));
    }

    #[test]
    fn single_region_file_is_rejected() {
        let text = r#"{"dim":2,"regions":[{"label":"A","vertices":[[0,0],[1,1]]}]}"#;
        match Instance::from_json_str(text) {
            Err(Error::Invalid(v)) => assert_eq!(v, vec![Violation::TooFewRegions { n: 1 }]),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_file_reports_position() {
        let text = "{\"dim\": 2,\n \"regions\": [ oops ]}";
        match Instance::from_json_str(text) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert!(column > 0);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn reordered_rejects_non_permutations() {
        let inst = gen_example_star();
        assert!(inst.reordered(&[0, 1, 2]).is_err());
        assert!(inst.reordered(&[0, 0, 1, 2]).is_err());
        let r = inst.reordered(&[3, 2, 1, 0]).unwrap();
        assert_eq!(r.regions()[0], inst.regions()[3]);
    }
}
