//! Deterministic test corpora: seeded trees of assorted shapes, seeded
//! random connected graphs, and the named-family instances the verification
//! sweeps and acceptance suite run on.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::family::{make_family, FamilySpec};
use crate::graph::Graph;

fn rng_for(n: usize, seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(
        seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(n as u64),
    )
}

/// A tree on `n >= 2` vertices from a fixed parent-list construction.
/// The shape rotates through star, broom, caterpillar and uniform random
/// parent lists so leaf counts vary across a sweep.
pub fn seeded_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 2, "trees need at least 2 vertices");
    let mut rng = rng_for(n, seed);
    let parents: Vec<usize> = match (n as u64 + seed) % 4 {
        0 => (1..n).map(|_| 0).collect(),
        1 => {
            // broom: a handle with a tuft of leaves at its end
            let handle = (2 * n / 3).max(1);
            (1..n)
                .map(|i| if i < handle { i - 1 } else { handle - 1 })
                .collect()
        }
        2 => {
            // caterpillar: legs attach to a spine at seeded positions
            let spine = (n / 2).max(2).min(n - 1);
            (1..n)
                .map(|i| {
                    if i < spine {
                        i - 1
                    } else {
                        rng.gen_range(0..spine)
                    }
                })
                .collect()
        }
        _ => (1..n).map(|i| rng.gen_range(0..i)).collect(),
    };
    make_family(&FamilySpec::TreeFromParentList(parents)).expect("parent list is valid")
}

pub fn leaf_count(g: &Graph) -> usize {
    (0..g.order()).filter(|&v| g.degree(v) == 1).count()
}

/// A connected graph on `n >= 2` vertices: a seeded random spanning tree plus
/// each remaining pair independently with probability ~30%.
pub fn random_connected_graph(n: usize, seed: u64) -> Graph {
    assert!(n >= 2);
    let mut rng = rng_for(n, seed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    let tree: std::collections::BTreeSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.gen_range(0..100u32) < 30 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_atom_edges(n, edges).expect("edges are in range")
}

/// Named instances of every non-product family, up to `max_order` vertices
/// and with at least 2. Order of the listing is deterministic.
pub fn named_families_up_to(max_order: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, FamilySpec)> = Vec::new();
    for n in 2..=max_order {
        out.push((format!("P_{n}"), FamilySpec::Path(n)));
    }
    for n in 3..=max_order {
        out.push((format!("C_{n}"), FamilySpec::Cycle(n)));
    }
    for n in 2..=max_order {
        out.push((format!("K_{n}"), FamilySpec::Complete(n)));
    }
    for r in 1..=max_order / 2 {
        for s in r..=max_order.saturating_sub(r) {
            if s >= 1 && r + s <= max_order && r + s >= 2 {
                out.push((
                    format!("K_{{{r},{s}}}"),
                    FamilySpec::CompleteBipartite(r, s),
                ));
            }
        }
    }
    for n in 4..=max_order {
        for t in 2..=n / 2 {
            out.push((format!("CR({n},{t})"), FamilySpec::Circulant(n, t)));
        }
    }
    for k in 1..=3 {
        if 1usize << k <= max_order {
            out.push((format!("Q_{k}"), FamilySpec::Hypercube(k)));
        }
    }
    for s in 2..max_order {
        out.push((format!("K_{{1,{s}}} star"), FamilySpec::Star(s)));
    }
    out.into_iter()
        .map(|(name, spec)| (name, make_family(&spec).expect("parameters validated")))
        .collect()
}
