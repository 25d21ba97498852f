//! Strong metric dimension: the strong-resolving-graph / vertex-cover
//! reduction, a brute-force oracle, and the bound computations.

use std::collections::BTreeSet;

use itertools::Itertools;
use thiserror::Error;

use crate::combinatorics::{maximum_matching, vertex_cover_number};
use crate::family::{make_family, FamilySpec};
use crate::graph::{cartesian_product, Graph};
use crate::metric::{
    all_pairs_distances, boundary_with, mmd_pairs_with, simplicial_vertices, strongly_resolves,
    DistanceMatrix, MetricError,
};
use crate::srgraph::strong_resolving_graph;

pub const DEFAULT_ORACLE_LIMIT: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SdimError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("strong metric dimension is undefined for graphs with fewer than 2 vertices")]
    TrivialGraph,
    #[error("graph has {order} vertices, over the oracle limit {limit}")]
    TooLarge { order: usize, limit: usize },
}

impl From<MetricError> for SdimError {
    fn from(_: MetricError) -> Self {
        SdimError::Disconnected
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    SrReduction,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::SrReduction => "sr_reduction",
            Method::Oracle => "oracle",
        }
    }
}

/// The strong metric dimension plus a witness basis of that size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdimResult {
    pub value: usize,
    pub basis: BTreeSet<usize>,
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsResult {
    pub lower: usize,
    pub upper: usize,
}

fn resolves_all_pairs(d: &DistanceMatrix, set: &BTreeSet<usize>) -> bool {
    let n = d.order();
    for u in 0..n {
        for v in u + 1..n {
            if !set.iter().any(|&w| strongly_resolves(d, w, u, v)) {
                return false;
            }
        }
    }
    true
}

/// True iff every vertex pair is strongly resolved by some member of `set`.
pub fn is_strong_resolving_set(g: &Graph, set: &BTreeSet<usize>) -> Result<bool, SdimError> {
    let d = all_pairs_distances(g)?;
    assert!(
        set.iter().all(|&v| v < g.order()),
        "resolving-set candidate contains an out-of-range vertex"
    );
    Ok(resolves_all_pairs(&d, set))
}

/// Computes `dim_s(G)` as the vertex cover number of `G_SR` and maps the
/// cover back to vertices of `G`. The returned basis is re-verified against
/// the definition before returning; a failure would be a solver bug and
/// panics.
pub fn strong_metric_dimension(g: &Graph) -> Result<SdimResult, SdimError> {
    if g.order() < 2 {
        return Err(SdimError::TrivialGraph);
    }
    let d = all_pairs_distances(g)?;
    let bnd: Vec<usize> = boundary_with(g, &d).into_iter().collect();
    let index_of: std::collections::BTreeMap<usize, usize> =
        bnd.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let labels = bnd.iter().map(|&v| g.label(v).clone()).collect();
    let sr_edges: Vec<(usize, usize)> = mmd_pairs_with(g, &d)
        .into_iter()
        .map(|(u, v)| (index_of[&u], index_of[&v]))
        .collect();
    let sr = Graph::from_edges(labels, sr_edges).expect("boundary labels are distinct");
    let cover = vertex_cover_number(&sr);
    let basis: BTreeSet<usize> = cover.vertices.iter().map(|&i| bnd[i]).collect();
    assert!(
        resolves_all_pairs(&d, &basis),
        "vertex cover of the strong resolving graph failed to strongly resolve the host graph"
    );
    Ok(SdimResult {
        value: basis.len(),
        basis,
        method: Method::SrReduction,
    })
}

/// Brute force: scans vertex subsets by increasing cardinality,
/// lexicographically within each cardinality, and returns the first strong
/// resolving set. Independent of the SR-graph reduction path.
pub fn sdim_oracle(g: &Graph, limit: usize) -> Result<SdimResult, SdimError> {
    let n = g.order();
    if n > limit {
        return Err(SdimError::TooLarge { order: n, limit });
    }
    if n < 2 {
        return Err(SdimError::TrivialGraph);
    }
    let d = all_pairs_distances(g)?;
    for k in 1..=n {
        for subset in (0..n).combinations(k) {
            let set: BTreeSet<usize> = subset.into_iter().collect();
            if resolves_all_pairs(&d, &set) {
                return Ok(SdimResult {
                    value: set.len(),
                    basis: set,
                    method: Method::Oracle,
                });
            }
        }
    }
    unreachable!("the full vertex set strongly resolves every pair");
}

/// `max(|sigma(G)| - 1, 0) <= dim_s(G) <= |boundary(G)| - 1`.
pub fn sdim_bounds(g: &Graph) -> Result<BoundsResult, SdimError> {
    if g.order() < 2 {
        return Err(SdimError::TrivialGraph);
    }
    let d = all_pairs_distances(g)?;
    let lower = simplicial_vertices(g).len().saturating_sub(1);
    let upper = boundary_with(g, &d).len() - 1;
    Ok(BoundsResult { lower, upper })
}

/// Bounds on `dim_s(G box H)` from the factor graphs:
/// lower is the best of `dim_s(G) dim_s(H)`, `mu(H_SR) dim_s(G box K_2)` and
/// `2 mu(G_SR) mu(H_SR)`; upper is `min(dim_s(G)|bd(H)|, |bd(G)| dim_s(H))`.
pub fn product_sdim_bounds(g: &Graph, h: &Graph) -> Result<BoundsResult, SdimError> {
    if g.order() < 2 || h.order() < 2 {
        return Err(SdimError::TrivialGraph);
    }
    let dim_g = strong_metric_dimension(g)?.value;
    let dim_h = strong_metric_dimension(h)?.value;
    let g_sr = strong_resolving_graph(g)?;
    let h_sr = strong_resolving_graph(h)?;
    let mu_g_sr = maximum_matching(&g_sr).size();
    let mu_h_sr = maximum_matching(&h_sr).size();
    let k2 = make_family(&FamilySpec::Complete(2)).expect("K_2 is valid");
    let g_box_k2 = cartesian_product(g, &k2).expect("non-empty factors");
    let dim_g_box_k2 = strong_metric_dimension(&g_box_k2)?.value;

    let lower = (dim_g * dim_h)
        .max(mu_h_sr * dim_g_box_k2)
        .max(2 * mu_g_sr * mu_h_sr);
    let upper = (dim_g * h_sr.order()).min(g_sr.order() * dim_h);
    Ok(BoundsResult { lower, upper })
}
