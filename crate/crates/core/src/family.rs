//! Named graph families and the string grammar for describing them.
//!
//! Grammar accepted by [`FamilySpec::parse`]:
//! `P:n` path, `C:n` cycle, `K:n` complete, `Kb:r,s` complete bipartite,
//! `CR:n,t` circulant, `Q:k` hypercube, `S:n` star with n leaves,
//! `T:p1,p2,...` tree from a parent list (vertex i+1 hangs off parent p_i),
//! `B(A,B)` Cartesian product, `X(A,B)` direct product.

use std::fmt;
use std::str::FromStr;

use crate::graph::{cartesian_product, direct_product, Graph, GraphError};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `CR(n, t)`: vertices `Z_n`, `i ~ j` iff `|i - j| mod n` is in `1..=t`.
    Circulant(usize, usize),
    Hypercube(usize),
    /// Star `K_{1,s}` with `s` leaves; the center is vertex 0.
    Star(usize),
    /// Rooted tree: vertex 0 is the root, vertex `i + 1` attaches to
    /// `parents[i]`, which must be at most `i`.
    TreeFromParentList(Vec<usize>),
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
    Direct(Box<FamilySpec>, Box<FamilySpec>),
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter {
        family,
        reason: reason.into(),
    }
}

/// Materializes the named family with canonical atom labels `0..n-1`;
/// products recurse and carry pair labels. Deterministic for equal specs.
pub fn make_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Path(n) => {
            if *n < 1 {
                return Err(invalid("path", "need n >= 1"));
            }
            Graph::from_atom_edges(*n, (1..*n).map(|i| (i - 1, i)))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(invalid("cycle", "need n >= 3"));
            }
            Graph::from_atom_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Complete(n) => {
            if *n < 1 {
                return Err(invalid("complete", "need n >= 1"));
            }
            Graph::from_atom_edges(*n, (0..*n).flat_map(|i| (i + 1..*n).map(move |j| (i, j))))
        }
        FamilySpec::CompleteBipartite(r, s) => {
            if *r < 1 || *s < 1 {
                return Err(invalid("complete_bipartite", "need r, s >= 1"));
            }
            Graph::from_atom_edges(
                r + s,
                (0..*r).flat_map(|i| (*r..r + s).map(move |j| (i, j))),
            )
        }
        FamilySpec::Circulant(n, t) => {
            if *t < 1 || 2 * *t > *n {
                return Err(invalid(
                    "circulant",
                    format!("need 0 < t <= n/2, got n={n}, t={t}"),
                ));
            }
            let mut edges = Vec::new();
            for i in 0..*n {
                for d in 1..=*t {
                    edges.push((i, (i + d) % n));
                }
            }
            Graph::from_atom_edges(*n, edges)
        }
        FamilySpec::Hypercube(k) => {
            if *k < 1 || *k >= usize::BITS as usize {
                return Err(invalid("hypercube", "need 1 <= k < word size"));
            }
            let n = 1usize << k;
            let edges = (0..n).flat_map(|i| (0..*k).map(move |b| (i, i ^ (1 << b))));
            Graph::from_atom_edges(n, edges)
        }
        FamilySpec::Star(s) => {
            if *s < 1 {
                return Err(invalid("star", "need at least one leaf"));
            }
            Graph::from_atom_edges(s + 1, (1..=*s).map(|i| (0, i)))
        }
        FamilySpec::TreeFromParentList(parents) => {
            for (i, &p) in parents.iter().enumerate() {
                if p > i {
                    return Err(invalid(
                        "tree_from_parent_list",
                        format!(
                            "parent of vertex {} must be at most {}, got {}",
                            i + 1,
                            i,
                            p
                        ),
                    ));
                }
            }
            Graph::from_atom_edges(
                parents.len() + 1,
                parents.iter().enumerate().map(|(i, &p)| (p, i + 1)),
            )
        }
        FamilySpec::Cartesian(a, b) => cartesian_product(&make_family(a)?, &make_family(b)?),
        FamilySpec::Direct(a, b) => direct_product(&make_family(a)?, &make_family(b)?),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad family spec {spec:?}: {reason}")]
pub struct SpecParseError {
    pub spec: String,
    pub reason: String,
}

impl FamilySpec {
    /// Parses the CLI spec grammar (see module docs).
    pub fn parse(text: &str) -> Result<FamilySpec, SpecParseError> {
        let s = text.trim();
        let err = |reason: &str| SpecParseError {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let parse_ints = |body: &str, want: usize| -> Result<Vec<usize>, SpecParseError> {
            let parts: Vec<&str> = body.split(',').collect();
            if want != 0 && parts.len() != want {
                return Err(err(&format!("expected {want} integer parameter(s)")));
            }
            parts
                .iter()
                .map(|p| p.trim().parse::<usize>().map_err(|_| err("not an integer")))
                .collect()
        };
        // Product forms: B(A,B) and X(A,B), comma split at depth 0.
        if let Some(rest) = s.strip_prefix("B(").or_else(|| s.strip_prefix("X(")) {
            let body = rest
                .strip_suffix(')')
                .ok_or_else(|| err("missing closing paren"))?;
            let mut depth = 0usize;
            let mut split = None;
            for (i, c) in body.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth = depth
                            .checked_sub(1)
                            .ok_or_else(|| err("unbalanced parens"))?
                    }
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let split = split.ok_or_else(|| err("product needs two factors"))?;
            let a = FamilySpec::parse(&body[..split])?;
            let b = FamilySpec::parse(&body[split + 1..])?;
            return Ok(if s.starts_with('B') {
                FamilySpec::Cartesian(Box::new(a), Box::new(b))
            } else {
                FamilySpec::Direct(Box::new(a), Box::new(b))
            });
        }
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| err("expected KIND:params"))?;
        match kind {
            "P" => Ok(FamilySpec::Path(parse_ints(body, 1)?[0])),
            "C" => Ok(FamilySpec::Cycle(parse_ints(body, 1)?[0])),
            "K" => Ok(FamilySpec::Complete(parse_ints(body, 1)?[0])),
            "Kb" => {
                let p = parse_ints(body, 2)?;
                Ok(FamilySpec::CompleteBipartite(p[0], p[1]))
            }
            "CR" => {
                let p = parse_ints(body, 2)?;
                Ok(FamilySpec::Circulant(p[0], p[1]))
            }
            "Q" => Ok(FamilySpec::Hypercube(parse_ints(body, 1)?[0])),
            "S" => Ok(FamilySpec::Star(parse_ints(body, 1)?[0])),
            "T" => Ok(FamilySpec::TreeFromParentList(parse_ints(body, 0)?)),
            _ => Err(err("unknown family kind")),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = SpecParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilySpec::parse(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P:{n}"),
            FamilySpec::Cycle(n) => write!(f, "C:{n}"),
            FamilySpec::Complete(n) => write!(f, "K:{n}"),
            FamilySpec::CompleteBipartite(r, s) => write!(f, "Kb:{r},{s}"),
            FamilySpec::Circulant(n, t) => write!(f, "CR:{n},{t}"),
            FamilySpec::Hypercube(k) => write!(f, "Q:{k}"),
            FamilySpec::Star(s) => write!(f, "S:{s}"),
            FamilySpec::TreeFromParentList(ps) => {
                write!(f, "T:")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            FamilySpec::Cartesian(a, b) => write!(f, "B({a},{b})"),
            FamilySpec::Direct(a, b) => write!(f, "X({a},{b})"),
        }
    }
}
