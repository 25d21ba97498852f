//! Distance structure of a connected graph: all-pairs shortest paths,
//! intervals, strong resolution, maximal distance, boundary, simplicial
//! vertices, and the 2-antipodal / distance-regular predicates.
//!
//! All distances are exact hop counts; there is no floating point anywhere.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("graph is not connected")]
    Disconnected,
}

/// All-pairs shortest-path distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<usize>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v]
    }
}

/// BFS from every vertex. Errors on disconnected input rather than
/// reporting silent infinities.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, MetricError> {
    let n = g.order();
    let mut d = vec![usize::MAX; n * n];
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        row[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if row[v] == usize::MAX {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.contains(&usize::MAX) {
            return Err(MetricError::Disconnected);
        }
    }
    Ok(DistanceMatrix { n, d })
}

/// Flat row-major distance table where unreachable pairs hold `usize::MAX`.
/// For internal predicates that must tolerate disconnected graphs
/// (e.g. profiles of strong resolving graphs, which are often disjoint unions).
pub(crate) fn all_pairs_distances_allow_disconnected(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut d = vec![usize::MAX; n * n];
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        row[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if row[v] == usize::MAX {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    d
}

/// Maximum distance over all vertex pairs.
pub fn diameter(d: &DistanceMatrix) -> usize {
    d.d.iter().copied().max().unwrap_or(0)
}

/// `v` lies in the interval `I[u, w]`, i.e. on some shortest `u`-`w` path.
pub fn in_interval(d: &DistanceMatrix, u: usize, v: usize, w: usize) -> bool {
    d.get(u, w) == d.get(u, v) + d.get(v, w)
}

/// `w` strongly resolves `u, v`: `v` is in `I[u, w]` or `u` is in `I[v, w]`.
pub fn strongly_resolves(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    in_interval(d, u, v, w) || in_interval(d, v, u, w)
}

/// `u` is maximally distant from `v`: no neighbor of `u` is farther from `v`
/// than `u` is.
pub fn is_maximally_distant(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    g.neighbors(u).iter().all(|&w| d.get(v, w) <= d.get(u, v))
}

/// All unordered pairs that are maximally distant in both directions,
/// given a precomputed distance matrix.
pub fn mmd_pairs_with(g: &Graph, d: &DistanceMatrix) -> BTreeSet<(usize, usize)> {
    let n = g.order();
    let mut pairs = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if is_maximally_distant(g, d, u, v) && is_maximally_distant(g, d, v, u) {
                pairs.insert((u, v));
            }
        }
    }
    pairs
}

/// Mutually maximally distant pairs of a connected graph.
pub fn mmd_pairs(g: &Graph) -> Result<BTreeSet<(usize, usize)>, MetricError> {
    Ok(mmd_pairs_with(g, &all_pairs_distances(g)?))
}

/// The boundary: vertices belonging to at least one mutually maximally
/// distant pair.
pub fn boundary(g: &Graph) -> Result<BTreeSet<usize>, MetricError> {
    Ok(boundary_with(g, &all_pairs_distances(g)?))
}

pub fn boundary_with(g: &Graph, d: &DistanceMatrix) -> BTreeSet<usize> {
    mmd_pairs_with(g, d)
        .into_iter()
        .flat_map(|(u, v)| [u, v])
        .collect()
}

/// Vertices whose open neighborhood induces a complete graph.
pub fn simplicial_vertices(g: &Graph) -> BTreeSet<usize> {
    (0..g.order())
        .filter(|&v| {
            let nbrs = g.neighbors(v);
            nbrs.iter()
                .enumerate()
                .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .collect()
}

/// Every vertex has exactly one vertex at diameter distance.
pub fn is_two_antipodal(g: &Graph, d: &DistanceMatrix) -> bool {
    debug_assert_eq!(g.order(), d.order());
    let n = d.order();
    let diam = diameter(d);
    (0..n).all(|u| (0..n).filter(|&v| d.get(u, v) == diam).count() == 1)
}

/// Distance-regular: for every distance `i`, the counts of neighbors of `u`
/// at distance `i - 1` and `i + 1` from `v` depend only on `i`, over all
/// pairs `u, v` at distance `i`. Checking `i = 0` forces regularity.
pub fn is_distance_regular(g: &Graph, d: &DistanceMatrix) -> bool {
    let n = g.order();
    let diam = diameter(d);
    let mut expected: Vec<Option<(usize, usize)>> = vec![None; diam + 1];
    for u in 0..n {
        for v in 0..n {
            let i = d.get(u, v);
            let back = g
                .neighbors(u)
                .iter()
                .filter(|&&w| i > 0 && d.get(v, w) == i - 1)
                .count();
            let forward = g
                .neighbors(u)
                .iter()
                .filter(|&&w| d.get(v, w) == i + 1)
                .count();
            match expected[i] {
                None => expected[i] = Some((back, forward)),
                Some(pair) if pair != (back, forward) => return false,
                Some(_) => {}
            }
        }
    }
    true
}
