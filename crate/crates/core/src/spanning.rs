//! Spanning trees over one representative point per region.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{dist_unchecked, Point};

/// One representative point per region, index-aligned with the instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Selection {
    pub points: Vec<Point>,
}

impl Selection {
    pub fn new(points: Vec<Point>) -> Self {
        Selection { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.len(),
            });
        }
        Ok(())
    }

    fn edge_length(&self, i: usize, j: usize) -> f64 {
        dist_unchecked(&self.points[i], &self.points[j])
    }
}

/// A spanning tree on region indices. Edges are stored as `(min, max)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tree {
    pub edges: Vec<(usize, usize)>,
    pub length: f64,
}

impl Tree {
    fn from_edges(sel: &Selection, edges: Vec<(usize, usize)>) -> Tree {
        let edges: Vec<_> = edges
            .into_iter()
            .map(|(i, j)| (i.min(j), i.max(j)))
            .collect();
        let length = edges.iter().map(|&(i, j)| sel.edge_length(i, j)).sum();
        Tree { edges, length }
    }

    /// Sum of edge lengths under `sel`.
    pub fn recompute_length(&self, sel: &Selection) -> f64 {
        self.edges.iter().map(|&(i, j)| sel.edge_length(i, j)).sum()
    }

    /// `n - 1` bichromatic edges forming a connected acyclic graph on `0..n`.
    pub fn is_spanning_tree(&self, n: usize) -> bool {
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        let mut dsu = DisjointSet::new(n);
        self.edges
            .iter()
            .all(|&(i, j)| i != j && i < n && j < n && dsu.union(i, j))
    }
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Maximum-weight spanning tree of the complete Euclidean graph on the
/// representatives, by Prim's algorithm on a dense graph in `O(n^2)`.
///
/// Among equal weights the lexicographically smallest `(min, max)` index pair
/// is preferred, both when attaching a vertex and when picking the next one.
pub fn max_spanning_tree(sel: &Selection) -> Tree {
    let n = sel.len();
    if n < 2 {
        return Tree {
            edges: Vec::new(),
            length: 0.0,
        };
    }
    let mut in_tree = vec![false; n];
    let mut best = vec![f64::NEG_INFINITY; n];
    let mut parent = vec![0usize; n];
    let mut edges = Vec::with_capacity(n - 1);

    in_tree[0] = true;
    for v in 1..n {
        best[v] = sel.edge_length(0, v);
    }
    for _ in 1..n {
        let mut pick: Option<usize> = None;
        for v in (0..n).filter(|&v| !in_tree[v]) {
            pick = match pick {
                None => Some(v),
                Some(u) if best[v] > best[u] => Some(v),
                Some(u) if best[v] == best[u] && ordered(parent[v], v) < ordered(parent[u], u) => {
                    Some(v)
                }
                keep => keep,
            };
        }
        let v = pick.expect("a vertex remains outside the tree");
        in_tree[v] = true;
        edges.push(ordered(parent[v], v));
        for w in (0..n).filter(|&w| !in_tree[w]) {
            let d = sel.edge_length(v, w);
            if d > best[w] || (d == best[w] && ordered(v, w) < ordered(parent[w], w)) {
                best[w] = d;
                parent[w] = v;
            }
        }
    }
    Tree::from_edges(sel, edges)
}

/// Star `S_p`: every other representative joined to `center`.
pub fn star(sel: &Selection, center: usize) -> Result<Tree> {
    sel.check_index(center)?;
    let edges = (0..sel.len())
        .filter(|&i| i != center)
        .map(|i| (center, i))
        .collect();
    Ok(Tree::from_edges(sel, edges))
}

/// 2-star `S_{p,q}`: the segment `pq` plus, for every other region `i`, the
/// edge to `attach[i]`, which must be `p` or `q`. Entries at `p` and `q` are
/// ignored.
pub fn two_star(sel: &Selection, p: usize, q: usize, attach: &[usize]) -> Result<Tree> {
    sel.check_index(p)?;
    sel.check_index(q)?;
    if p == q {
        return Err(Error::InvalidArgument("2-star needs p != q".into()));
    }
    if attach.len() != sel.len() {
        return Err(Error::InvalidArgument(format!(
            "assignment has {} entries for {} regions",
            attach.len(),
            sel.len()
        )));
    }
    let mut edges = vec![(p, q)];
    for (i, &hub) in attach.iter().enumerate() {
        if i == p || i == q {
            continue;
        }
        if hub != p && hub != q {
            return Err(Error::InvalidArgument(format!(
                "region {i} assigned to {hub}, expected {p} or {q}"
            )));
        }
        edges.push((hub, i));
    }
    Ok(Tree::from_edges(sel, edges))
}
