//! Immutable simple undirected graphs with structured vertex labels,
//! Cartesian/direct products, and basic structure predicates.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// A vertex label: either a plain atom index or a pair of labels.
///
/// Pair labels are produced by the product constructors, so a vertex of
/// `G □ H` is literally labelled `(a, b)` with `a` a label of `G` and `b`
/// a label of `H`. Products of products nest pairs; labels are never
/// flattened, which lets product identities be checked as exact label-set
/// equality instead of isomorphism search.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VertexLabel {
    Atom(usize),
    Pair(Box<VertexLabel>, Box<VertexLabel>),
}

impl VertexLabel {
    pub fn atom(i: usize) -> Self {
        VertexLabel::Atom(i)
    }

    pub fn pair(left: VertexLabel, right: VertexLabel) -> Self {
        VertexLabel::Pair(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Atom(i) => write!(f, "{i}"),
            VertexLabel::Pair(l, r) => write!(f, "({l},{r})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    #[error("product factors must be non-empty")]
    EmptyFactor,
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
}

/// An immutable simple undirected graph.
///
/// Vertices are indexed `0..order()`; each carries a distinct [`VertexLabel`].
/// No self-loops, no parallel edges; adjacency is symmetric by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from explicit labels and an edge list over vertex
    /// indices. Duplicate edges are collapsed silently; self-loops and
    /// out-of-range endpoints are errors, as are repeated labels.
    pub fn from_edges(
        labels: Vec<VertexLabel>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.clone()) {
                return Err(GraphError::DuplicateLabel(label.to_string()));
            }
        }
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u,
                    order: n,
                });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if sets[u].insert(v) {
                sets[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(Graph {
            labels,
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            edge_count,
        })
    }

    /// Builds a graph on `n` vertices with canonical atom labels `0..n`.
    pub fn from_atom_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Graph::from_edges((0..n).map(VertexLabel::Atom).collect(), edges)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    /// Neighbors of `v` in ascending index order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Index of the vertex carrying `label`, if present.
    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Edge set keyed by labels, normalized so the smaller label comes first.
    pub fn edge_label_set(&self) -> BTreeSet<(VertexLabel, VertexLabel)> {
        self.edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    pub fn label_set(&self) -> BTreeSet<VertexLabel> {
        self.labels.iter().cloned().collect()
    }

    /// Induced subgraph on `vertices` (ascending indices), original labels retained.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let index: BTreeMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self
            .edges()
            .filter_map(|(u, v)| Some((*index.get(&u)?, *index.get(&v)?)));
        Graph::from_edges(labels, edges).expect("induced subgraph of a valid graph is valid")
    }
}

/// Cartesian product `G □ H`: `(a,b) ~ (c,d)` iff (`a = c` and `b ~ d` in `H`)
/// or (`b = d` and `a ~ c` in `G`). Vertices are ordered lexicographically by
/// factor index, so vertex `(i, j)` has index `i * |V(H)| + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    product_with(g, h, |g, h, out| {
        let n2 = h.order();
        for i in 0..g.order() {
            for (j, jp) in h.edges() {
                out.push((i * n2 + j, i * n2 + jp));
            }
        }
        for (i, ip) in g.edges() {
            for j in 0..h.order() {
                out.push((i * n2 + j, ip * n2 + j));
            }
        }
    })
}

/// Direct product `G × H`: `(a,b) ~ (c,d)` iff `a ~ c` in `G` and `b ~ d` in `H`.
/// May be disconnected even for connected factors; callers check.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    product_with(g, h, |g, h, out| {
        let n2 = h.order();
        for (i, ip) in g.edges() {
            for (j, jp) in h.edges() {
                out.push((i * n2 + j, ip * n2 + jp));
                out.push((i * n2 + jp, ip * n2 + j));
            }
        }
    })
}

fn product_with(
    g: &Graph,
    h: &Graph,
    emit: impl Fn(&Graph, &Graph, &mut Vec<(usize, usize)>),
) -> Result<Graph, GraphError> {
    if g.order() == 0 || h.order() == 0 {
        return Err(GraphError::EmptyFactor);
    }
    let mut labels = Vec::with_capacity(g.order() * h.order());
    for a in g.labels() {
        for b in h.labels() {
            labels.push(VertexLabel::pair(a.clone(), b.clone()));
        }
    }
    let mut edges = Vec::new();
    emit(g, h, &mut edges);
    Graph::from_edges(labels, edges)
}

/// True iff one BFS reaches every vertex. The empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    if g.order() == 0 {
        return true;
    }
    bfs_reach(g, 0).len() == g.order()
}

fn bfs_reach(g: &Graph, start: usize) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    seen[start] = true;
    while let Some(u) = queue.pop_front() {
        out.push(u);
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    out
}

/// Vertex sets of the connected components, each ascending, ordered by
/// smallest contained vertex.
pub fn component_vertex_sets(g: &Graph) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut components = Vec::new();
    for start in 0..g.order() {
        if assigned[start] {
            continue;
        }
        let mut comp = bfs_reach(g, start);
        for &v in &comp {
            assigned[v] = true;
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Connected components as induced subgraphs with original labels retained,
/// ordered by smallest contained vertex index.
pub fn connected_components(g: &Graph) -> Vec<Graph> {
    component_vertex_sets(g)
        .iter()
        .map(|comp| g.induced_subgraph(comp))
        .collect()
}

/// Connected and acyclic with maximum degree at most 2, i.e. a path
/// (the single vertex counts).
pub fn is_path(g: &Graph) -> bool {
    g.order() >= 1
        && is_connected(g)
        && g.edge_count() == g.order() - 1
        && (0..g.order()).all(|v| g.degree(v) <= 2)
}

/// A two-coloring witness for a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

/// Proper two-coloring, if one exists. The smallest-index vertex of each
/// component goes to side A, which makes the coloring deterministic.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let mut color: Vec<Option<bool>> = vec![None; g.order()];
    for start in 0..g.order() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut side_a = Vec::new();
    let mut side_b = Vec::new();
    for (v, c) in color.iter().enumerate() {
        if c.unwrap() {
            side_a.push(v);
        } else {
            side_b.push(v);
        }
    }
    Some(Bipartition { side_a, side_b })
}
