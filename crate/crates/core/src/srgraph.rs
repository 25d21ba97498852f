//! The strong resolving graph `G_SR`: vertex set is the boundary of `G`,
//! edges are the mutually maximally distant pairs. Original vertex labels
//! are retained so product identities can be checked label-exactly.

use thiserror::Error;

use crate::family::{make_family, FamilySpec};
use crate::graph::{cartesian_product, direct_product, Graph};
use crate::metric::{all_pairs_distances, boundary_with, mmd_pairs_with, MetricError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SrError {
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error("factor graphs must have at least 2 vertices")]
    TrivialFactor,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Builds `G_SR` for a connected graph. Vertices keep their original labels;
/// every vertex of the result lies in some MMD pair, so none is isolated.
pub fn strong_resolving_graph(g: &Graph) -> Result<Graph, MetricError> {
    let d = all_pairs_distances(g)?;
    let bnd: Vec<usize> = boundary_with(g, &d).into_iter().collect();
    let index_of: std::collections::BTreeMap<usize, usize> =
        bnd.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let labels = bnd.iter().map(|&v| g.label(v).clone()).collect();
    let edges: Vec<(usize, usize)> = mmd_pairs_with(g, &d)
        .into_iter()
        .map(|(u, v)| (index_of[&u], index_of[&v]))
        .collect();
    Ok(Graph::from_edges(labels, edges).expect("boundary labels are distinct"))
}

/// Boundary vertices in ascending order; index `i` here is vertex `i` of
/// [`strong_resolving_graph`], which is the map back into `g`.
pub fn boundary_vertices(g: &Graph) -> Result<Vec<usize>, MetricError> {
    let d = all_pairs_distances(g)?;
    Ok(boundary_with(g, &d).into_iter().collect())
}

/// Checks `(G □ H)_SR = G_SR × H_SR` as literal label-set and edge-set
/// equality under the canonical pair correspondence. The underlying theorem's
/// bijection is the identity, so no isomorphism search is involved.
pub fn sr_product_identity_check(g: &Graph, h: &Graph) -> Result<bool, SrError> {
    if g.order() < 2 || h.order() < 2 {
        return Err(SrError::TrivialFactor);
    }
    let lhs = strong_resolving_graph(&cartesian_product(g, h).expect("non-empty factors"))?;
    let g_sr = strong_resolving_graph(g)?;
    let h_sr = strong_resolving_graph(h)?;
    let rhs = direct_product(&g_sr, &h_sr).expect("SR graphs of non-trivial graphs are non-empty");
    Ok(lhs.label_set() == rhs.label_set() && lhs.edge_label_set() == rhs.edge_label_set())
}

/// Checks `(K_r × K_t)_SR = K_r □ K_t` as label-exact edge-set equality.
pub fn sr_direct_complete_identity_check(r: usize, t: usize) -> Result<bool, SrError> {
    if r < 3 || t < 3 {
        return Err(SrError::InvalidParameter(format!(
            "need r, t >= 3, got r={r}, t={t}"
        )));
    }
    let kr = make_family(&FamilySpec::Complete(r)).expect("r >= 3");
    let kt = make_family(&FamilySpec::Complete(t)).expect("t >= 3");
    let lhs = strong_resolving_graph(&direct_product(&kr, &kt).expect("non-empty"))?;
    let rhs = cartesian_product(&kr, &kt).expect("non-empty");
    Ok(lhs.label_set() == rhs.label_set() && lhs.edge_label_set() == rhs.edge_label_set())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};
    use crate::graph::{connected_components, is_connected};

    fn family(spec: FamilySpec) -> Graph {
        make_family(&spec).unwrap()
    }

    #[test]
    fn even_cycle_sr_is_disjoint_edges() {
        let sr = strong_resolving_graph(&family(FamilySpec::Cycle(6))).unwrap();
        assert_eq!((sr.order(), sr.edge_count()), (6, 3));
        let comps = connected_components(&sr);
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.order() == 2 && c.edge_count() == 1));
    }

    #[test]
    fn odd_cycle_sr_is_itself() {
        let sr = strong_resolving_graph(&family(FamilySpec::Cycle(5))).unwrap();
        assert_eq!((sr.order(), sr.edge_count()), (5, 5));
        assert!(is_connected(&sr));
        assert!((0..5).all(|v| sr.degree(v) == 2));
    }

    #[test]
    fn star_sr_is_complete_on_leaves() {
        let sr = strong_resolving_graph(&family(FamilySpec::Star(4))).unwrap();
        assert_eq!((sr.order(), sr.edge_count()), (4, 6));
        // leaves of K_{1,4} are vertices 1..=4
        let labels: Vec<String> = sr.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["1", "2", "3", "4"]);
    }

    #[test]
    fn tree_sr_is_complete_on_the_leaves() {
        for n in 2..=12 {
            for seed in 0..3 {
                let t = crate::corpus::seeded_tree(n, seed);
                let leaves: Vec<usize> = (0..t.order()).filter(|&v| t.degree(v) == 1).collect();
                let sr = strong_resolving_graph(&t).unwrap();
                assert_eq!(sr.order(), leaves.len(), "n={n} seed={seed}");
                assert_eq!(sr.edge_count(), leaves.len() * (leaves.len() - 1) / 2);
                let sr_labels: Vec<String> = sr.labels().iter().map(|l| l.to_string()).collect();
                let leaf_labels: Vec<String> =
                    leaves.iter().map(|&v| t.label(v).to_string()).collect();
                assert_eq!(sr_labels, leaf_labels);
            }
        }
    }

    #[test]
    fn boundary_equals_simplicial_gives_complete_sr() {
        for spec in [
            FamilySpec::Complete(4),
            FamilySpec::Complete(6),
            FamilySpec::Star(3),
            FamilySpec::Star(5),
        ] {
            let g = family(spec);
            let d = crate::metric::all_pairs_distances(&g).unwrap();
            let bnd = crate::metric::boundary_with(&g, &d);
            assert_eq!(bnd, crate::metric::simplicial_vertices(&g));
            let sr = strong_resolving_graph(&g).unwrap();
            let b = bnd.len();
            assert_eq!((sr.order(), sr.edge_count()), (b, b * (b - 1) / 2));
        }
    }

    #[test]
    fn sr_has_no_isolated_vertices() {
        for spec in [
            FamilySpec::Path(7),
            FamilySpec::Cycle(8),
            FamilySpec::Complete(5),
            FamilySpec::CompleteBipartite(2, 4),
            FamilySpec::Circulant(8, 3),
            FamilySpec::Hypercube(3),
        ] {
            let sr = strong_resolving_graph(&family(spec)).unwrap();
            assert!((0..sr.order()).all(|v| sr.degree(v) >= 1));
        }
    }

    #[test]
    fn two_antipodal_sr_is_a_perfect_matching() {
        for spec in [
            FamilySpec::Cycle(6),
            FamilySpec::Cycle(8),
            FamilySpec::Hypercube(3),
        ] {
            let g = family(spec);
            let sr = strong_resolving_graph(&g).unwrap();
            assert_eq!(sr.order(), g.order());
            assert_eq!(sr.edge_count(), g.order() / 2);
            assert!((0..sr.order()).all(|v| sr.degree(v) == 1));
        }
    }

    #[test]
    fn product_identity_spec_examples() {
        let cases = [
            (FamilySpec::Path(3), FamilySpec::Path(4)),
            (FamilySpec::Cycle(5), FamilySpec::Complete(3)),
            (FamilySpec::Complete(2), FamilySpec::Complete(2)),
        ];
        for (a, b) in cases {
            assert!(sr_product_identity_check(&family(a.clone()), &family(b.clone())).unwrap());
        }
    }

    #[test]
    fn k2_k2_product_sr_shape() {
        let k2 = family(FamilySpec::Complete(2));
        let prod = crate::graph::cartesian_product(&k2, &k2).unwrap();
        let sr = strong_resolving_graph(&prod).unwrap();
        assert_eq!((sr.order(), sr.edge_count()), (4, 2));
    }

    #[test]
    fn direct_complete_identity() {
        assert!(sr_direct_complete_identity_check(3, 3).unwrap());
        assert!(sr_direct_complete_identity_check(3, 4).unwrap());
        assert!(sr_direct_complete_identity_check(4, 5).unwrap());
        assert!(matches!(
            sr_direct_complete_identity_check(2, 4),
            Err(SrError::InvalidParameter(_))
        ));
    }

    #[test]
    fn trivial_factor_rejected() {
        let k1 = family(FamilySpec::Complete(1));
        let k2 = family(FamilySpec::Complete(2));
        assert_eq!(
            sr_product_identity_check(&k1, &k2),
            Err(SrError::TrivialFactor)
        );
    }
}
