//! The two approximation algorithms and the candidate trees they choose from.
//!
//! `A1` joins every region to one endpoint of a bichromatic diameter pair
//! `ab` and keeps the longer of the two stars; its length is at least
//! `(n/2) D`. `A2` adds two more candidates: `T1`, a star around an endpoint
//! of the monochromatic diameter (built when `y >= 0`), and `T2`, the segment
//! `ab` plus each region's vertex farthest from `o` hung on the farther of
//! `a`, `b`. The longest candidate is within `rho = 0.51143...` of optimal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{exact_opt, DEFAULT_BUDGET};
use crate::geometry::{dist_unchecked, farthest_vertex_from, monochromatic_diameter, Point};
use crate::instance::{normalize, Instance, Neighborhood, NormalizedView};
use crate::spanning::{star, two_star, Selection, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Producer {
    A1StarA,
    A1StarB,
    A2T1,
    A2T2,
    Exact,
}

impl Producer {
    pub fn as_str(self) -> &'static str {
        match self {
            Producer::A1StarA => "A1_STAR_A",
            Producer::A1StarB => "A1_STAR_B",
            Producer::A2T1 => "A2_T1",
            Producer::A2T2 => "A2_T2",
            Producer::Exact => "EXACT",
        }
    }
}

/// A feasible tree: one vertex per region (`choice[i]` indexes region `i`'s
/// vertex list) and a spanning tree on those representatives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub producer: Producer,
    pub choice: Vec<usize>,
    pub selection: Selection,
    pub tree: Tree,
    pub length: f64,
}

impl Solution {
    pub(crate) fn new(producer: Producer, choice: Vec<usize>, selection: Selection, tree: Tree) -> Self {
        let length = tree.length;
        Solution {
            producer,
            choice,
            selection,
            tree,
            length,
        }
    }

    /// Rebuild a solution from its vertex choice and tree edges, checking
    /// both against `inst`. The length is recomputed.
    pub fn from_parts(
        inst: &Instance,
        producer: Producer,
        choice: Vec<usize>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if choice.len() != inst.n() {
            return Err(Error::InvalidArgument(format!(
                "choice has {} entries for {} regions",
                choice.len(),
                inst.n()
            )));
        }
        for (i, (&k, r)) in choice.iter().zip(inst.regions()).enumerate() {
            if k >= r.vertices.len() {
                return Err(Error::InvalidArgument(format!(
                    "region {i} has no vertex {k}"
                )));
            }
        }
        let sel = selection_of(inst, &choice);
        let edges: Vec<_> = edges.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
        let mut tree = Tree { edges, length: 0.0 };
        if !tree.is_spanning_tree(inst.n()) {
            return Err(Error::InvalidArgument("edges do not form a spanning tree".into()));
        }
        tree.length = tree.recompute_length(&sel);
        Ok(Solution::new(producer, choice, sel, tree))
    }

    /// True when the selection matches `choice` on `inst` and the tree spans
    /// the regions with the recorded length.
    pub fn is_valid_for(&self, inst: &Instance) -> bool {
        let n = inst.n();
        self.choice.len() == n
            && self.selection.len() == n
            && inst
                .regions()
                .iter()
                .zip(&self.choice)
                .zip(&self.selection.points)
                .all(|((r, &k), p)| r.vertices.get(k) == Some(p))
            && self.tree.is_spanning_tree(n)
            && (self.tree.recompute_length(&self.selection) - self.length).abs()
                <= 1e-9 * self.length.max(1.0)
    }
}

pub(crate) fn selection_of(inst: &Instance, choice: &[usize]) -> Selection {
    Selection::new(
        inst.regions()
            .iter()
            .zip(choice)
            .map(|(r, &k)| r.vertices[k].clone())
            .collect(),
    )
}

/// Every region at its first vertex, joined as a star at region 0. Used for
/// instances whose vertices all coincide.
fn zero_solution(inst: &Instance, producer: Producer) -> Result<Solution> {
    let choice = vec![0; inst.n()];
    let sel = selection_of(inst, &choice);
    let tree = star(&sel, 0)?;
    Ok(Solution::new(producer, choice, sel, tree))
}

/// Vertex of `region` maximizing `max(|pa|, |pb|)`; ties to the smallest index.
fn farthest_from_pair(region: &Neighborhood, a: &Point, b: &Point) -> usize {
    let mut best = (0, f64::NEG_INFINITY);
    for (k, v) in region.vertices.iter().enumerate() {
        let d = dist_unchecked(v, a).max(dist_unchecked(v, b));
        if d > best.1 {
            best = (k, d);
        }
    }
    best.0
}

fn check_n(inst: &Instance, required: usize) -> Result<()> {
    if inst.n() < required {
        return Err(Error::TooFewRegions {
            required,
            found: inst.n(),
        });
    }
    Ok(())
}

/// Both stars of `A1`, centered at `a` and at `b`. Every other region uses the
/// same vertex in both, the one farthest from the pair.
fn a1_stars(inst: &Instance, view: &NormalizedView<'_>) -> Result<(Solution, Solution)> {
    let pair = view.diam_pair;
    let (a, b) = (view.a(), view.b());
    let choice: Vec<usize> = inst
        .regions()
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if i == pair.region_a {
                pair.vertex_a
            } else if i == pair.region_b {
                pair.vertex_b
            } else {
                farthest_from_pair(r, a, b)
            }
        })
        .collect();
    let sel = selection_of(inst, &choice);
    let sa = star(&sel, pair.region_a)?;
    let sb = star(&sel, pair.region_b)?;
    Ok((
        Solution::new(Producer::A1StarA, choice.clone(), sel.clone(), sa),
        Solution::new(Producer::A1StarB, choice, sel, sb),
    ))
}

/// Algorithm `A1`: the longer of the two diameter-endpoint stars (ties to `a`).
pub fn algo_a1(inst: &Instance) -> Result<Solution> {
    check_n(inst, 2)?;
    let view = normalize(inst)?;
    if view.is_degenerate() {
        return zero_solution(inst, Producer::A1StarA);
    }
    let (sa, sb) = a1_stars(inst, &view)?;
    Ok(if sb.length > sa.length { sb } else { sa })
}

/// The disk `omega` around `o`: the smallest radius containing `floor(n/2)`
/// of the regions other than the two diameter regions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OmegaInfo {
    pub o: Point,
    /// Radius of `omega`, in units of the bichromatic diameter.
    pub x: f64,
    /// Regions inside `omega`, ascending by index.
    pub inside: Vec<usize>,
    /// Normalized distance from `o` to the farthest vertex of each region;
    /// `None` for the two diameter regions.
    pub containment_radii: Vec<Option<f64>>,
}

impl OmegaInfo {
    /// `floor(n/2)`.
    pub fn m(&self) -> usize {
        self.inside.len()
    }

    /// Mean containment radius over the regions inside `omega`.
    pub fn z_hat(&self) -> f64 {
        let sum: f64 = self
            .inside
            .iter()
            .map(|&i| self.containment_radii[i].unwrap_or(0.0))
            .sum();
        sum / self.inside.len() as f64
    }
}

pub fn omega(inst: &Instance, view: &NormalizedView<'_>) -> Result<OmegaInfo> {
    check_n(inst, 4)?;
    let pair = view.diam_pair;
    let scale = if view.is_degenerate() { 1.0 } else { view.scale };
    let mut radii = vec![None; inst.n()];
    let mut ranked = Vec::with_capacity(inst.n() - 2);
    for (i, r) in inst.regions().iter().enumerate() {
        if i == pair.region_a || i == pair.region_b {
            continue;
        }
        let (_, d) = farthest_vertex_from(&view.o, r)?;
        let radius = d / scale;
        radii[i] = Some(radius);
        ranked.push((radius, i));
    }
    ranked.sort_by(|p, q| p.0.total_cmp(&q.0).then(p.1.cmp(&q.1)));
    let m = inst.n() / 2;
    let x = ranked[m - 1].0;
    let mut inside: Vec<usize> = ranked[..m].iter().map(|&(_, i)| i).collect();
    inside.sort_unstable();
    Ok(OmegaInfo {
        o: view.o.clone(),
        x,
        inside,
        containment_radii: radii,
    })
}

/// `1 + y`: the monochromatic diameter in units of the bichromatic one.
pub fn normalized_mono_diameter(inst: &Instance, view: &NormalizedView<'_>) -> Result<f64> {
    if view.is_degenerate() {
        return Ok(0.0);
    }
    Ok(monochromatic_diameter(inst)?.length / view.scale)
}

/// Candidate `T1`: the longer of the stars centered at the endpoints `a1`,
/// `b1` of the monochromatic diameter (ties to `a1`). The center region's
/// representative is that endpoint; every other region takes its vertex
/// farthest from `{a1, b1}`.
pub fn candidate_t1(inst: &Instance, view: &NormalizedView<'_>) -> Result<Solution> {
    check_n(inst, 2)?;
    if view.is_degenerate() {
        return zero_solution(inst, Producer::A2T1);
    }
    let mono = monochromatic_diameter(inst)?;
    let j = mono.region_a;
    let (a1, b1) = (mono.point_a(inst), mono.point_b(inst));
    let mut choice: Vec<usize> = inst
        .regions()
        .iter()
        .enumerate()
        .map(|(i, r)| if i == j { mono.vertex_a } else { farthest_from_pair(r, a1, b1) })
        .collect();
    let sel_a = selection_of(inst, &choice);
    let star_a = star(&sel_a, j)?;
    choice[j] = mono.vertex_b;
    let sel_b = selection_of(inst, &choice);
    let star_b = star(&sel_b, j)?;
    if star_b.length > star_a.length {
        Ok(Solution::new(Producer::A2T1, choice, sel_b, star_b))
    } else {
        choice[j] = mono.vertex_a;
        Ok(Solution::new(Producer::A2T1, choice, sel_a, star_a))
    }
}

/// Candidate `T2`: the segment `ab`, plus for every other region its vertex
/// farthest from `o`, joined to whichever of `a`, `b` is farther (ties to `a`).
pub fn candidate_t2(inst: &Instance, view: &NormalizedView<'_>) -> Result<Solution> {
    check_n(inst, 2)?;
    if view.is_degenerate() {
        return zero_solution(inst, Producer::A2T2);
    }
    let pair = view.diam_pair;
    let (a, b) = (view.a(), view.b());
    let mut choice = vec![0; inst.n()];
    let mut attach = vec![pair.region_a; inst.n()];
    for (i, r) in inst.regions().iter().enumerate() {
        if i == pair.region_a {
            choice[i] = pair.vertex_a;
        } else if i == pair.region_b {
            choice[i] = pair.vertex_b;
        } else {
            let (k, _) = farthest_vertex_from(&view.o, r)?;
            choice[i] = k;
            let p = &r.vertices[k];
            if dist_unchecked(p, b) > dist_unchecked(p, a) {
                attach[i] = pair.region_b;
            }
        }
    }
    let sel = selection_of(inst, &choice);
    let tree = two_star(&sel, pair.region_a, pair.region_b, &attach)?;
    Ok(Solution::new(Producer::A2T2, choice, sel, tree))
}

/// Algorithm `A2` with the default oracle budget.
pub fn algo_a2(inst: &Instance) -> Result<Solution> {
    algo_a2_with_budget(inst, DEFAULT_BUDGET)
}

/// Algorithm `A2`.
///
/// * `n = 2`: the bichromatic diameter edge, which is optimal.
/// * `n = 3`: the exact optimum when the selection count fits `budget`.
/// * otherwise: the longest of `T2`, `T1` (only when `y >= 0`) and the two
///   `A1` stars, with ties resolved in that order.
pub fn algo_a2_with_budget(inst: &Instance, budget: u64) -> Result<Solution> {
    check_n(inst, 2)?;
    let view = normalize(inst)?;
    if view.is_degenerate() {
        return zero_solution(inst, Producer::A2T2);
    }
    if inst.n() == 2 {
        let pair = view.diam_pair;
        let mut choice = vec![0; 2];
        choice[pair.region_a] = pair.vertex_a;
        choice[pair.region_b] = pair.vertex_b;
        let sel = selection_of(inst, &choice);
        let tree = star(&sel, 0)?;
        return Ok(Solution::new(Producer::Exact, choice, sel, tree));
    }
    if inst.n() == 3 {
        match exact_opt(inst, budget) {
            Ok(sol) => return Ok(sol),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let candidates = a2_candidates(inst, &view)?;
    let mut best: Option<Solution> = None;
    for c in candidates {
        if best.as_ref().map_or(true, |b| c.length > b.length) {
            best = Some(c);
        }
    }
    Ok(best.expect("at least T2 and the A1 stars"))
}

/// All candidates `A2` compares, in tie-break precedence order.
pub fn a2_candidates(inst: &Instance, view: &NormalizedView<'_>) -> Result<Vec<Solution>> {
    let mut out = vec![candidate_t2(inst, view)?];
    if normalized_mono_diameter(inst, view)? >= 1.0 {
        out.push(candidate_t1(inst, view)?);
    }
    let (sa, sb) = a1_stars(inst, view)?;
    out.push(sa);
    out.push(sb);
    Ok(out)
}

/// Lower bounds each candidate is guaranteed to meet, in original units.
pub mod guarantees {
    /// `len(S_a) + len(S_b) >= n D`, so the better star has `>= (n/2) D`.
    pub fn a1_pair_sum(n: usize, d: f64) -> f64 {
        n as f64 * d
    }

    /// `len(T1) >= (n-1)(1+y)/2 · D`.
    pub fn t1(n: usize, y: f64, d: f64) -> f64 {
        (n as f64 - 1.0) * (1.0 + y) / 2.0 * d
    }

    /// `len(T2) >= (n-1)/4 · (1 + sqrt(1+4x^2)) · D`.
    pub fn t2(n: usize, x: f64, d: f64) -> f64 {
        (n as f64 - 1.0) / 4.0 * (1.0 + (1.0 + 4.0 * x * x).sqrt()) * d
    }

    /// `len(T2) >= (n-1)/2 · sqrt(1+4 z^2) · D` with `z` the mean containment
    /// radius over the regions inside `omega` (Jensen).
    pub fn t2_mean_radius(n: usize, z_hat: f64, d: f64) -> f64 {
        (n as f64 - 1.0) / 2.0 * (1.0 + 4.0 * z_hat * z_hat).sqrt() * d
    }
}
