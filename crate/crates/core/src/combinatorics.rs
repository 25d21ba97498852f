//! Exact matching and vertex cover, independence via Gallai, and the
//! desk-scale structure predicates (perfect matching, Hamiltonicity,
//! vertex-transitivity) used as theorem preconditions.
//!
//! Bipartite components go through augmenting paths and the
//! Konig-Egervary cover construction; everything else is exact
//! branch-and-bound sized for graphs of at most a few dozen vertices.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{component_vertex_sets, is_bipartite, is_connected, Graph};
use crate::metric::all_pairs_distances_allow_disconnected;

pub const DEFAULT_HAMILTONIAN_LIMIT: usize = 16;
pub const DEFAULT_VERTEX_TRANSITIVE_LIMIT: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("graph has {order} vertices, over the desk-scale limit {limit}")]
    TooLarge { order: usize, limit: usize },
}

/// A set of pairwise disjoint edges, normalized as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: BTreeSet<(usize, usize)>,
}

impl Matching {
    fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            assert!(seen.insert(u) && seen.insert(v), "edges share vertex");
        }
        Matching { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// An exact minimum vertex cover together with a matching certifying the
/// lower bound (sizes are equal on bipartite graphs by Konig-Egervary).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub vertices: BTreeSet<usize>,
    pub certificate_matching: Matching,
}

impl CoverWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn covers_all_edges(&self, g: &Graph) -> bool {
        g.edges()
            .all(|(u, v)| self.vertices.contains(&u) || self.vertices.contains(&v))
    }
}

// ---------------------------------------------------------------------------
// residual-graph state shared by the two branch-and-bound searches
// ---------------------------------------------------------------------------

type Adj = Vec<BTreeSet<usize>>;

fn local_adjacency(g: &Graph) -> Adj {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect()
}

fn remove_vertex(adj: &mut Adj, v: usize) {
    let nbrs = std::mem::take(&mut adj[v]);
    for u in nbrs {
        adj[u].remove(&v);
    }
}

fn has_edges(adj: &Adj) -> bool {
    adj.iter().any(|s| !s.is_empty())
}

fn max_degree_vertex(adj: &Adj) -> usize {
    let mut best = 0;
    for v in 1..adj.len() {
        if adj[v].len() > adj[best].len() {
            best = v;
        }
    }
    best
}

/// Size of a greedily built maximal matching; any matching lower-bounds the
/// cover number, so this is the pruning bound of the cover search.
fn greedy_matching_size(adj: &Adj) -> usize {
    let mut used = vec![false; adj.len()];
    let mut size = 0;
    for v in 0..adj.len() {
        if used[v] {
            continue;
        }
        if let Some(&u) = adj[v].iter().find(|&&u| !used[u]) {
            used[v] = true;
            used[u] = true;
            size += 1;
        }
    }
    size
}

/// Walks a residual component of maximum degree <= 2 starting deterministically
/// from its smallest vertex (preferring a degree-1 endpoint). Returns the
/// traversal order and whether it closed into a cycle.
fn walk_path_or_cycle(adj: &Adj, component: &[usize]) -> (Vec<usize>, bool) {
    let start = component
        .iter()
        .copied()
        .filter(|&v| adj[v].len() == 1)
        .min()
        .unwrap_or(component[0]);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur].iter().copied().find(|&w| w != prev);
        match next {
            Some(w) if w == start => return (order, true),
            Some(w) => {
                order.push(w);
                prev = cur;
                cur = w;
            }
            None => return (order, false),
        }
    }
}

fn degree_le2_components(adj: &Adj) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for v in 0..n {
        if seen[v] || adj[v].is_empty() {
            continue;
        }
        let mut stack = vec![v];
        let mut comp = Vec::new();
        seen[v] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Exact minimum cover of a residual graph whose components are paths and
/// cycles: alternate vertices along the walk.
fn cover_of_paths_and_cycles(adj: &Adj) -> Vec<usize> {
    let mut cover = Vec::new();
    for comp in degree_le2_components(adj) {
        let (order, is_cycle) = walk_path_or_cycle(adj, &comp);
        let keep = |i: &usize| i.is_multiple_of(2) == is_cycle;
        // a cycle of odd length needs ceil(k/2): even positions do that, and
        // they also cover the closing edge through position 0
        cover.extend(
            order
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(i))
                .map(|(_, &v)| v),
        );
    }
    cover
}

/// Exact maximum matching of a paths-and-cycles residual: pair consecutive
/// vertices along the walk.
fn matching_of_paths_and_cycles(adj: &Adj) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for comp in degree_le2_components(adj) {
        let (order, _) = walk_path_or_cycle(adj, &comp);
        for pair in order.chunks_exact(2) {
            edges.push((pair[0], pair[1]));
        }
    }
    edges
}

// ---------------------------------------------------------------------------
// minimum vertex cover
// ---------------------------------------------------------------------------

struct CoverSearch {
    best: Vec<usize>,
}

impl CoverSearch {
    fn run(adj: Adj) -> Vec<usize> {
        let mut search = CoverSearch {
            best: greedy_cover(&adj),
        };
        search.descend(adj, Vec::new());
        search.best.sort_unstable();
        search.best
    }

    fn descend(&mut self, mut adj: Adj, mut chosen: Vec<usize>) {
        // degree-1 reduction: taking the neighbor is always at least as good
        while let Some(v) = (0..adj.len()).find(|&v| adj[v].len() == 1) {
            let u = *adj[v].iter().next().unwrap();
            chosen.push(u);
            remove_vertex(&mut adj, u);
        }
        if !has_edges(&adj) {
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        }
        let v = max_degree_vertex(&adj);
        if adj[v].len() <= 2 {
            chosen.extend(cover_of_paths_and_cycles(&adj));
            if chosen.len() < self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + greedy_matching_size(&adj) >= self.best.len() {
            return;
        }
        // branch on the max-degree vertex (ties fall to the smallest index):
        // either v is in the cover, or all of N(v) is
        let mut include = adj.clone();
        remove_vertex(&mut include, v);
        let mut chosen_include = chosen.clone();
        chosen_include.push(v);
        self.descend(include, chosen_include);

        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        remove_vertex(&mut adj, v);
        for &u in &nbrs {
            remove_vertex(&mut adj, u);
        }
        chosen.extend(nbrs);
        self.descend(adj, chosen);
    }
}

fn greedy_cover(adj: &Adj) -> Vec<usize> {
    let mut adj = adj.clone();
    let mut cover = Vec::new();
    while has_edges(&adj) {
        let v = max_degree_vertex(&adj);
        cover.push(v);
        remove_vertex(&mut adj, v);
    }
    cover
}

// ---------------------------------------------------------------------------
// maximum matching
// ---------------------------------------------------------------------------

/// Kuhn's augmenting-path matching over the A side; deterministic because
/// vertices and neighbors are scanned in ascending order.
fn bipartite_matching(adj: &Adj, side_a: &[usize]) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for &a in side_a {
        let mut visited = vec![false; n];
        try_augment(adj, a, &mut visited, &mut mate);
    }
    mate
}

fn try_augment(adj: &Adj, a: usize, visited: &mut [bool], mate: &mut [Option<usize>]) -> bool {
    for &b in &adj[a] {
        if visited[b] {
            continue;
        }
        visited[b] = true;
        let free = match mate[b] {
            None => true,
            Some(prev) => try_augment(adj, prev, visited, mate),
        };
        if free {
            mate[b] = Some(a);
            mate[a] = Some(b);
            return true;
        }
    }
    false
}

/// Konig-Egervary cover from a maximum bipartite matching: vertices of A not
/// reachable by alternating paths from the unmatched A vertices, plus the
/// reachable vertices of B.
fn konig_cover(
    adj: &Adj,
    side_a: &[usize],
    side_b: &[usize],
    mate: &[Option<usize>],
) -> Vec<usize> {
    let n = adj.len();
    let mut in_z = vec![false; n];
    let mut queue: Vec<usize> = side_a
        .iter()
        .copied()
        .filter(|&a| mate[a].is_none())
        .collect();
    for &a in &queue {
        in_z[a] = true;
    }
    while let Some(a) = queue.pop() {
        for &b in &adj[a] {
            if mate[a] == Some(b) || in_z[b] {
                continue;
            }
            in_z[b] = true;
            if let Some(a2) = mate[b] {
                if !in_z[a2] {
                    in_z[a2] = true;
                    queue.push(a2);
                }
            }
        }
    }
    let mut cover: Vec<usize> = side_a.iter().copied().filter(|&a| !in_z[a]).collect();
    cover.extend(side_b.iter().copied().filter(|&b| in_z[b]));
    cover.sort_unstable();
    cover
}

struct MatchSearch {
    best: Vec<(usize, usize)>,
}

impl MatchSearch {
    fn run(adj: Adj) -> Vec<(usize, usize)> {
        let mut search = MatchSearch { best: Vec::new() };
        search.descend(adj, Vec::new());
        search.best
    }

    fn descend(&mut self, mut adj: Adj, mut current: Vec<(usize, usize)>) {
        // a degree-1 vertex can always be matched along its only edge
        while let Some(v) = (0..adj.len()).find(|&v| adj[v].len() == 1) {
            let u = *adj[v].iter().next().unwrap();
            current.push((v.min(u), v.max(u)));
            remove_vertex(&mut adj, v);
            remove_vertex(&mut adj, u);
        }
        if !has_edges(&adj) {
            if current.len() > self.best.len() {
                self.best = current;
            }
            return;
        }
        let v = max_degree_vertex(&adj);
        if adj[v].len() <= 2 {
            current.extend(matching_of_paths_and_cycles(&adj));
            if current.len() > self.best.len() {
                self.best = current;
            }
            return;
        }
        let non_isolated = adj.iter().filter(|s| !s.is_empty()).count();
        if current.len() + non_isolated / 2 <= self.best.len() {
            return;
        }
        // branch on one edge at the smallest vertex of minimum positive degree
        let pick = (0..adj.len())
            .filter(|&w| !adj[w].is_empty())
            .min_by_key(|&w| (adj[w].len(), w))
            .unwrap();
        let partner = *adj[pick].iter().next().unwrap();

        let mut include = adj.clone();
        remove_vertex(&mut include, pick);
        remove_vertex(&mut include, partner);
        let mut with_edge = current.clone();
        with_edge.push((pick.min(partner), pick.max(partner)));
        self.descend(include, with_edge);

        adj[pick].remove(&partner);
        adj[partner].remove(&pick);
        self.descend(adj, current);
    }
}

/// Exact maximum matching: augmenting paths on bipartite components,
/// branch-and-bound elsewhere. Deterministic for fixed input.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for comp in component_vertex_sets(g) {
        let sub = g.induced_subgraph(&comp);
        let adj = local_adjacency(&sub);
        let local: Vec<(usize, usize)> = match is_bipartite(&sub) {
            Some(bip) => {
                let mate = bipartite_matching(&adj, &bip.side_a);
                bip.side_a
                    .iter()
                    .filter_map(|&a| mate[a].map(|b| (a.min(b), a.max(b))))
                    .collect()
            }
            None => MatchSearch::run(adj),
        };
        edges.extend(local.into_iter().map(|(u, v)| (comp[u], comp[v])));
    }
    Matching::from_edges(edges)
}

/// Exact minimum vertex cover with a matching certificate. Bipartite
/// components use Konig-Egervary; the rest branch-and-bound.
pub fn vertex_cover_number(g: &Graph) -> CoverWitness {
    let mut vertices = BTreeSet::new();
    for comp in component_vertex_sets(g) {
        let sub = g.induced_subgraph(&comp);
        let adj = local_adjacency(&sub);
        let local: Vec<usize> = match is_bipartite(&sub) {
            Some(bip) => {
                let mate = bipartite_matching(&adj, &bip.side_a);
                konig_cover(&adj, &bip.side_a, &bip.side_b, &mate)
            }
            None => CoverSearch::run(adj),
        };
        vertices.extend(local.into_iter().map(|u| comp[u]));
    }
    CoverWitness {
        vertices,
        certificate_matching: maximum_matching(g),
    }
}

/// Independence number via Gallai: `beta(G) = |V| - alpha(G)`.
pub fn independence_number(g: &Graph) -> usize {
    g.order() - vertex_cover_number(g).size()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * maximum_matching(g).size() == g.order()
}

/// Exact Hamiltonian-cycle existence by backtracking; rejected above `limit`.
pub fn is_hamiltonian(g: &Graph, limit: usize) -> Result<bool, CombinatoricsError> {
    let n = g.order();
    if n > limit {
        return Err(CombinatoricsError::TooLarge { order: n, limit });
    }
    if n < 3 || !is_connected(g) || (0..n).any(|v| g.degree(v) < 2) {
        return Ok(false);
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut path = vec![0];
    Ok(extend_cycle(g, &mut path, &mut used))
}

fn extend_cycle(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if path.len() == g.order() {
        return g.has_edge(*path.last().unwrap(), path[0]);
    }
    let last = *path.last().unwrap();
    for &v in g.neighbors(last) {
        if !used[v] {
            used[v] = true;
            path.push(v);
            if extend_cycle(g, path, used) {
                return true;
            }
            path.pop();
            used[v] = false;
        }
    }
    false
}

/// Vertex-transitivity for desk-scale graphs: true iff for every vertex `v`
/// some automorphism carries vertex 0 to `v` (the orbit of 0 is everything,
/// which by composition gives an automorphism for every ordered pair).
/// Candidate images are pruned by degree and distance profile.
pub fn is_vertex_transitive(g: &Graph, limit: usize) -> Result<bool, CombinatoricsError> {
    let n = g.order();
    if n > limit {
        return Err(CombinatoricsError::TooLarge { order: n, limit });
    }
    if n <= 1 {
        return Ok(true);
    }
    let deg0 = g.degree(0);
    if (1..n).any(|v| g.degree(v) != deg0) {
        return Ok(false);
    }
    let dist = all_pairs_distances_allow_disconnected(g);
    let profile: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let mut row: Vec<usize> = (0..n).map(|v| dist[u * n + v]).collect();
            row.sort_unstable();
            row
        })
        .collect();
    for target in 1..n {
        if profile[target] != profile[0] {
            return Ok(false);
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        image[0] = target;
        used[target] = true;
        if !extend_automorphism(g, &profile, &mut image, &mut used, 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn extend_automorphism(
    g: &Graph,
    profile: &[Vec<usize>],
    image: &mut [usize],
    used: &mut [bool],
    next: usize,
) -> bool {
    let n = g.order();
    if next == n {
        return true;
    }
    for candidate in 0..n {
        if used[candidate] || profile[candidate] != profile[next] {
            continue;
        }
        let consistent =
            (0..next).all(|prev| g.has_edge(next, prev) == g.has_edge(candidate, image[prev]));
        if !consistent {
            continue;
        }
        image[next] = candidate;
        used[candidate] = true;
        if extend_automorphism(g, profile, image, used, next + 1) {
            return true;
        }
        image[next] = usize::MAX;
        used[candidate] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{make_family, FamilySpec};
    use crate::graph::{cartesian_product, direct_product};

    fn family(spec: FamilySpec) -> Graph {
        make_family(&spec).unwrap()
    }

    #[test]
    fn matching_numbers() {
        assert_eq!(maximum_matching(&family(FamilySpec::Cycle(5))).size(), 2);
        assert_eq!(maximum_matching(&family(FamilySpec::Cycle(6))).size(), 3);
        assert_eq!(maximum_matching(&family(FamilySpec::Complete(4))).size(), 2);
    }

    #[test]
    fn matching_edges_are_disjoint_host_edges() {
        for spec in [
            FamilySpec::Cycle(7),
            FamilySpec::Complete(5),
            FamilySpec::CompleteBipartite(2, 4),
            FamilySpec::Circulant(9, 2),
            FamilySpec::Star(5),
        ] {
            let g = family(spec);
            let m = maximum_matching(&g);
            assert!(m.is_valid_for(&g));
        }
    }

    #[test]
    fn cover_numbers() {
        for n in 2..7 {
            assert_eq!(
                vertex_cover_number(&family(FamilySpec::Complete(n))).size(),
                n - 1
            );
        }
        assert_eq!(vertex_cover_number(&family(FamilySpec::Cycle(7))).size(), 4);
    }

    #[test]
    fn cover_of_k3_box_k3() {
        let k3 = family(FamilySpec::Complete(3));
        let prod = cartesian_product(&k3, &k3).unwrap();
        let witness = vertex_cover_number(&prod);
        assert_eq!(witness.size(), 6);
        assert!(witness.covers_all_edges(&prod));
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&family(FamilySpec::Circulant(7, 2))), 2);
        assert_eq!(independence_number(&family(FamilySpec::Cycle(6))), 3);
        assert_eq!(independence_number(&family(FamilySpec::Complete(5))), 1);
    }

    #[test]
    fn konig_equality_on_bipartite() {
        for spec in [
            FamilySpec::Cycle(6),
            FamilySpec::Cycle(8),
            FamilySpec::CompleteBipartite(3, 3),
            FamilySpec::CompleteBipartite(2, 5),
            FamilySpec::Hypercube(3),
            FamilySpec::Path(7),
            FamilySpec::Star(4),
        ] {
            let g = family(spec.clone());
            let witness = vertex_cover_number(&g);
            assert_eq!(
                witness.size(),
                witness.certificate_matching.size(),
                "{spec:?}"
            );
            assert!(witness.covers_all_edges(&g));
        }
    }

    #[test]
    fn certificate_never_exceeds_cover() {
        for spec in [
            FamilySpec::Cycle(5),
            FamilySpec::Complete(6),
            FamilySpec::Circulant(9, 3),
            FamilySpec::Star(3),
        ] {
            let witness = vertex_cover_number(&family(spec));
            assert!(witness.certificate_matching.size() <= witness.size());
        }
    }

    #[test]
    fn perfect_matchings() {
        assert!(has_perfect_matching(&family(FamilySpec::Cycle(6))));
        assert!(!has_perfect_matching(&family(FamilySpec::Cycle(5))));
        assert!(has_perfect_matching(&family(
            FamilySpec::CompleteBipartite(3, 3)
        )));
    }

    #[test]
    fn hamiltonicity() {
        let limit = DEFAULT_HAMILTONIAN_LIMIT;
        assert!(is_hamiltonian(&family(FamilySpec::Cycle(5)), limit).unwrap());
        assert!(!is_hamiltonian(&family(FamilySpec::Path(4)), limit).unwrap());
        assert!(is_hamiltonian(&family(FamilySpec::Complete(4)), limit).unwrap());
        assert!(!is_hamiltonian(&family(FamilySpec::Complete(1)), limit).unwrap());
        assert!(!is_hamiltonian(&family(FamilySpec::Complete(2)), limit).unwrap());
        assert_eq!(
            is_hamiltonian(&family(FamilySpec::Cycle(20)), limit),
            Err(CombinatoricsError::TooLarge {
                order: 20,
                limit: 16
            })
        );
    }

    #[test]
    fn vertex_transitivity() {
        let limit = DEFAULT_VERTEX_TRANSITIVE_LIMIT;
        assert!(is_vertex_transitive(&family(FamilySpec::Cycle(7)), limit).unwrap());
        assert!(!is_vertex_transitive(&family(FamilySpec::Path(4)), limit).unwrap());
        assert!(!is_vertex_transitive(&family(FamilySpec::Star(3)), limit).unwrap());
        assert!(is_vertex_transitive(&family(FamilySpec::Hypercube(3)), limit).unwrap());
        assert!(is_vertex_transitive(&family(FamilySpec::Circulant(10, 2)), limit).unwrap());
        // disjoint union of equal edges is vertex-transitive
        let g = Graph::from_atom_edges(6, [(0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(is_vertex_transitive(&g, limit).unwrap());
        // K_2 plus K_3 is not
        let g = Graph::from_atom_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(!is_vertex_transitive(&g, limit).unwrap());
        assert!(is_vertex_transitive(&family(FamilySpec::Cycle(13)), limit).is_err());
    }

    #[test]
    fn direct_product_cover_chain_samples() {
        // alpha(G x H) >= mu(H) * alpha(G x K_2) = mu(H) * mu(G x K_2) >= 2 mu(G) mu(H)
        let k2 = family(FamilySpec::Complete(2));
        for (a, b) in [
            (FamilySpec::Cycle(5), FamilySpec::Complete(3)),
            (FamilySpec::Path(4), FamilySpec::Cycle(4)),
            (FamilySpec::Star(3), FamilySpec::Path(3)),
        ] {
            let g = family(a);
            let h = family(b);
            let gxh = direct_product(&g, &h).unwrap();
            let gxk2 = direct_product(&g, &k2).unwrap();
            let alpha_gxh = vertex_cover_number(&gxh).size();
            let alpha_gxk2 = vertex_cover_number(&gxk2).size();
            let mu_gxk2 = maximum_matching(&gxk2).size();
            let mu_g = maximum_matching(&g).size();
            let mu_h = maximum_matching(&h).size();
            assert!(alpha_gxh >= mu_h * alpha_gxk2);
            assert_eq!(alpha_gxk2, mu_gxk2);
            assert!(mu_h * mu_gxk2 >= 2 * mu_g * mu_h);
        }
    }
}
