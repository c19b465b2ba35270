//! Strategies and brute-force reference implementations shared by the
//! integration tests. Nothing here calls into the library's algorithms.

#![allow(dead_code)]

use maxstn_core::{Instance, Neighborhood, Point};
use proptest::prelude::*;

pub fn euclid(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
}

/// Random instance: `n` regions in `n_range`, 1..=`k_max` vertices each,
/// dimension 2 or 3, coordinates in `[-10, 10]`.
pub fn instance_strategy(
    n_range: std::ops::RangeInclusive<usize>,
    k_max: usize,
) -> impl Strategy<Value = Instance> {
    (2usize..=3, n_range).prop_flat_map(move |(dim, n)| {
        let point = prop::collection::vec(-10.0f64..10.0, dim);
        let region = prop::collection::vec(point, 1..=k_max);
        prop::collection::vec(region, n).prop_map(move |regions| {
            let regions = regions
                .into_iter()
                .enumerate()
                .map(|(i, vs)| {
                    Neighborhood::new(format!("X{}", i + 1), vs.into_iter().map(Point::new).collect())
                })
                .collect();
            Instance::new(dim, regions).expect("strategy builds valid instances")
        })
    })
}

/// Points for spanning-tree checks: 2..=`n_max` points in the plane.
pub fn points_strategy(n_max: usize) -> impl Strategy<Value = Vec<[f64; 2]>> {
    prop::collection::vec([-10.0f64..10.0, -10.0f64..10.0], 2..=n_max)
}

/// Every labeled tree on `n >= 2` vertices, decoded from Prüfer sequences.
pub fn all_labeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut seq = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            seq.push(c % n);
            c /= n;
        }
        out.push(prufer_decode(&seq, n));
    }
    out
}

fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Longest spanning tree of the points, by exhaustive enumeration.
pub fn brute_max_tree(pts: &[Vec<f64>]) -> f64 {
    all_labeled_trees(pts.len())
        .iter()
        .map(|t| t.iter().map(|&(i, j)| euclid(&pts[i], &pts[j])).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Optimum over all selections, each scored by exhaustive tree enumeration.
pub fn brute_optimum(inst: &Instance) -> f64 {
    let regions = inst.regions();
    let trees = all_labeled_trees(regions.len());
    let mut best = f64::NEG_INFINITY;
    let mut idx = vec![0usize; regions.len()];
    loop {
        let pts: Vec<&[f64]> = regions
            .iter()
            .zip(&idx)
            .map(|(r, &k)| r.vertices[k].coords())
            .collect();
        for t in &trees {
            let len: f64 = t.iter().map(|&(i, j)| euclid(pts[i], pts[j])).sum();
            best = best.max(len);
        }
        let mut d = 0;
        loop {
            if d == regions.len() {
                return best;
            }
            idx[d] += 1;
            if idx[d] < regions[d].vertices.len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// Largest distance between vertices of distinct regions, and largest
/// distance within one region.
pub fn brute_diameters(inst: &Instance) -> (f64, f64) {
    let mut bi = 0.0f64;
    let mut mono = 0.0f64;
    for (i, r) in inst.regions().iter().enumerate() {
        for (j, s) in inst.regions().iter().enumerate() {
            for p in &r.vertices {
                for q in &s.vertices {
                    let d = euclid(p.coords(), q.coords());
                    if i == j {
                        mono = mono.max(d);
                    } else {
                        bi = bi.max(d);
                    }
                }
            }
        }
    }
    (bi, mono)
}

/// Rotate about the origin (the x-y plane, then the y-z plane in 3-D) and
/// translate.
pub fn rigid_motion(inst: &Instance, theta: f64, phi: f64, shift: &[f64]) -> Instance {
    inst.map_points(|p| {
        let mut c = p.coords().to_vec();
        let (x, y) = (c[0], c[1]);
        c[0] = theta.cos() * x - theta.sin() * y;
        c[1] = theta.sin() * x + theta.cos() * y;
        if c.len() == 3 {
            let (y, z) = (c[1], c[2]);
            c[1] = phi.cos() * y - phi.sin() * z;
            c[2] = phi.sin() * y + phi.cos() * z;
        }
        for (v, s) in c.iter_mut().zip(shift) {
            *v += s;
        }
        Point::new(c)
    })
}

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}
