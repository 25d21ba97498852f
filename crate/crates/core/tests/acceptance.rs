//! Acceptance suite: one test per numbered criterion, each printing a
//! single PASS/FAIL line. All values are exact integers, tolerance 0.
//! Criterion 7 (the CLI contract) lives in the cli crate's acceptance test.

use std::collections::BTreeSet;

use smd_core::catalog::{
    default_ranges, factor_pool, small_connected_pool, verify, verify_formula, verify_structural,
    FormulaId, InstanceStatus, Limits, Ranges, StructuralCheckId, TheoremId, VerificationReport,
};
use smd_core::combinatorics::{
    independence_number, is_vertex_transitive, maximum_matching, vertex_cover_number,
};
use smd_core::corpus::{named_families_up_to, random_connected_graph, seeded_tree};
use smd_core::family::{make_family, FamilySpec};
use smd_core::graph::{
    cartesian_product, direct_product, is_bipartite, is_connected, is_path, Graph,
};
use smd_core::sdim::{
    is_strong_resolving_set, product_sdim_bounds, sdim_bounds, sdim_oracle, strong_metric_dimension,
};

fn finish(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("{criterion}: PASS");
    } else {
        println!("{criterion}: FAIL ({} failure(s))", failures.len());
        panic!(
            "{criterion}: {} failure(s):\n{}",
            failures.len(),
            failures.join("\n")
        );
    }
}

/// The shared corpus: every named family instance up to 14 vertices, the 20
/// seeded trees, and a fixed list of small products (some intentionally
/// disconnected).
fn corpus() -> Vec<(String, Graph)> {
    let mut graphs = named_families_up_to(14);
    for n in 3..=12 {
        for seed in 0..2u64 {
            graphs.push((format!("tree(n={n},seed={seed})"), seeded_tree(n, seed)));
        }
    }
    let fam = |s: &str| make_family(&s.parse::<FamilySpec>().unwrap()).unwrap();
    for spec in [
        "B(P:2,P:2)",
        "B(P:2,P:3)",
        "B(P:2,P:4)",
        "B(P:3,P:3)",
        "B(K:2,K:3)",
        "B(K:2,K:4)",
        "B(K:2,C:3)",
        "B(K:2,C:4)",
        "B(K:3,K:3)",
        "X(K:2,K:2)",
        "X(K:2,K:3)",
        "X(K:3,K:3)",
        "X(C:3,C:3)",
        "X(P:3,K:3)",
        "X(P:2,K:3)",
    ] {
        graphs.push((spec.to_string(), fam(spec)));
    }
    graphs
}

#[test]
fn criterion_1_oracle_equivalence() {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    let mut instances: Vec<(String, Graph)> = corpus()
        .into_iter()
        .filter(|(_, g)| g.order() <= 9 && g.order() >= 2 && is_connected(g))
        .collect();
    for n in 5..=8usize {
        for seed in 0..50u64 {
            instances.push((
                format!("random(n={n},seed={seed})"),
                random_connected_graph(n, seed),
            ));
        }
    }
    for (name, g) in &instances {
        let reduced = strong_metric_dimension(g).unwrap();
        let oracle = sdim_oracle(g, 10).unwrap();
        checked += 1;
        if reduced.value != oracle.value {
            failures.push(format!(
                "{name}: sr_reduction={} oracle={}",
                reduced.value, oracle.value
            ));
        }
        if !is_strong_resolving_set(g, &reduced.basis).unwrap() {
            failures.push(format!("{name}: reduction basis is not strongly resolving"));
        }
    }
    assert!(checked >= 200 + 50, "corpus unexpectedly small: {checked}");
    finish(
        "criterion 1 (oracle equivalence on corpus + 200 random graphs)",
        failures,
    );
}

fn sweep(failures: &mut Vec<String>, id: FormulaId, ranges: &Ranges) -> VerificationReport {
    let report = verify_formula(id, ranges).unwrap();
    if !report.all_pass {
        for inst in &report.instances {
            if matches!(inst.status, InstanceStatus::Fail | InstanceStatus::Error) {
                failures.push(format!(
                    "{} {}: computed={:?} formula={:?} status={:?} {}",
                    id,
                    inst.params_string(),
                    inst.computed,
                    inst.formula,
                    inst.status,
                    inst.note.as_deref().unwrap_or("")
                ));
            }
        }
    }
    report
}

fn pinned(report: &VerificationReport, params: &str, expect: u64) -> Option<String> {
    let inst = report
        .instances
        .iter()
        .find(|i| i.params_string() == params)
        .unwrap_or_else(|| panic!("{} has no instance {params}", report.theorem));
    (inst.computed != Some(expect)).then(|| {
        format!(
            "{} {}: computed={:?}, pinned expectation {expect}",
            report.theorem, params, inst.computed
        )
    })
}

#[test]
fn criterion_2_formula_sweeps() {
    let mut failures = Vec::new();
    let r = Ranges::new;

    sweep(&mut failures, FormulaId::Cycle, &r(&[("n", 3, 14)]));
    let trees = sweep(
        &mut failures,
        FormulaId::TreeLeaves,
        &r(&[("n", 3, 12), ("seed", 0, 1)]),
    );
    assert_eq!(trees.instances.len(), 20);
    sweep(
        &mut failures,
        FormulaId::KnBoxPr,
        &r(&[("n", 2, 5), ("r", 2, 5)]),
    );
    sweep(
        &mut failures,
        FormulaId::CnBoxPr,
        &r(&[("n", 3, 6), ("r", 2, 4)]),
    );
    sweep(
        &mut failures,
        FormulaId::KnBoxC2k,
        &r(&[("n", 2, 4), ("k", 2, 3)]),
    );
    sweep(
        &mut failures,
        FormulaId::CnBoxC2k,
        &r(&[("n", 3, 5), ("k", 2, 3)]),
    );
    sweep(
        &mut failures,
        FormulaId::KnBoxKr,
        &r(&[("n", 2, 5), ("r", 2, 5)]),
    );
    sweep(
        &mut failures,
        FormulaId::CoddBoxCodd,
        &r(&[("n", 1, 3), ("r", 1, 3)]),
    );
    sweep(
        &mut failures,
        FormulaId::MultiCompleteBox,
        &r(&[("r", 2, 3), ("n", 2, 3)]),
    );

    let hamming_small = sweep(
        &mut failures,
        FormulaId::Hamming,
        &r(&[("k", 2, 2), ("n", 2, 4)]),
    );
    let hamming_cubed = sweep(
        &mut failures,
        FormulaId::Hamming,
        &r(&[("k", 3, 3), ("n", 2, 3)]),
    );
    failures.extend(pinned(&hamming_small, "k=2;n=4", 12));
    failures.extend(pinned(&hamming_cubed, "k=3;n=3", 18));

    let krkt = sweep(
        &mut failures,
        FormulaId::KrTimesKt,
        &r(&[("r", 3, 5), ("t", 3, 5)]),
    );
    failures.extend(pinned(&krkt, "r=3;t=4", 9));

    sweep(
        &mut failures,
        FormulaId::CrTimesKt,
        &r(&[("r", 4, 10), ("t", 3, 4)]),
    );
    sweep(
        &mut failures,
        FormulaId::PrTimesKt,
        &r(&[("r", 2, 7), ("t", 3, 4)]),
    );

    let codd2 = sweep(&mut failures, FormulaId::CoddTimesCodd, &r(&[("k", 1, 2)]));
    failures.extend(pinned(&codd2, "k=1", 6));
    failures.extend(pinned(&codd2, "k=2", 15));

    sweep(
        &mut failures,
        FormulaId::BetaCirculant2,
        &r(&[("n", 5, 16)]),
    );

    finish("criterion 2 (formula sweeps, zero failures each)", failures);
}

fn structural(failures: &mut Vec<String>, id: StructuralCheckId, ranges: &Ranges) {
    let report = verify_structural(id, ranges, &Limits::default()).unwrap();
    if !report.all_pass {
        for inst in &report.instances {
            if matches!(inst.status, InstanceStatus::Fail | InstanceStatus::Error) {
                failures.push(format!(
                    "{} {}: computed={:?} formula={:?} {}",
                    id,
                    inst.params_string(),
                    inst.computed,
                    inst.formula,
                    inst.note.as_deref().unwrap_or("")
                ));
            }
        }
    }
}

#[test]
fn criterion_3_structural_identities() {
    let mut failures = Vec::new();
    let pool_len = factor_pool().len() as u64 - 1;
    structural(
        &mut failures,
        StructuralCheckId::SrProductIdentity,
        &Ranges::new(&[("a", 0, pool_len), ("b", 0, pool_len)]),
    );
    structural(
        &mut failures,
        StructuralCheckId::BoundaryProduct,
        &Ranges::new(&[("a", 0, pool_len), ("b", 0, pool_len)]),
    );
    structural(
        &mut failures,
        StructuralCheckId::KrKtSr,
        &Ranges::new(&[("r", 3, 5), ("t", 3, 5)]),
    );
    structural(
        &mut failures,
        StructuralCheckId::IntervalProduct,
        &Ranges::new(&[("i", 0, 1)]),
    );
    let eq1 = verify_structural(
        StructuralCheckId::Eq1Consistency,
        &default_ranges(TheoremId::Structural(StructuralCheckId::Eq1Consistency)),
        &Limits::default(),
    )
    .unwrap();
    assert!(eq1.instances.len() >= 10, "need at least 10 factor pairs");
    if !eq1.all_pass {
        failures.push(format!("eq1_consistency: {}", eq1.to_csv()));
    }
    finish(
        "criterion 3 (structural identities, zero failures)",
        failures,
    );
}

/// Plain include/exclude maximum-independent-set recursion; independent of
/// the cover solver.
fn brute_force_beta(g: &Graph) -> usize {
    fn recurse(g: &Graph, v: usize, taken: &mut Vec<usize>) -> usize {
        if v == g.order() {
            return taken.len();
        }
        let excluded = recurse(g, v + 1, taken);
        if taken.iter().any(|&u| g.has_edge(u, v)) {
            return excluded;
        }
        taken.push(v);
        let included = recurse(g, v + 1, taken);
        taken.pop();
        excluded.max(included)
    }
    recurse(g, 0, &mut Vec::new())
}

#[test]
fn criterion_4_classical_lemma_properties() {
    let mut failures = Vec::new();
    let graphs = corpus();

    // Konig-Egervary equality on every bipartite corpus graph
    for (name, g) in &graphs {
        if is_bipartite(g).is_some() {
            let witness = vertex_cover_number(g);
            let mu = maximum_matching(g).size();
            if witness.size() != mu {
                failures.push(format!("konig on {name}: alpha={} mu={mu}", witness.size()));
            }
        }
    }

    // Gallai alpha + beta = n against brute-force beta, |V| <= 14
    for (name, g) in &graphs {
        if g.order() <= 14 {
            let alpha = vertex_cover_number(g).size();
            let beta = independence_number(g);
            if alpha + beta != g.order() || beta != brute_force_beta(g) {
                failures.push(format!(
                    "gallai on {name}: alpha={alpha} beta={beta} brute={}",
                    brute_force_beta(g)
                ));
            }
        }
    }

    // direct-product cover chain and the independence sandwich on 10 pairs
    let fam = |s: &str| make_family(&s.parse::<FamilySpec>().unwrap()).unwrap();
    let pairs = [
        ("P:3", "P:4"),
        ("P:4", "C:4"),
        ("C:4", "K:3"),
        ("C:5", "C:4"),
        ("C:5", "K:3"),
        ("K:4", "P:3"),
        ("Kb:1,3", "C:4"),
        ("Kb:2,3", "P:3"),
        ("C:6", "K:2"),
        ("C:3", "C:5"),
    ];
    let k2 = fam("K:2");
    for (a, b) in pairs {
        let g = fam(a);
        let h = fam(b);
        let gxh = direct_product(&g, &h).unwrap();
        let gxk2 = direct_product(&g, &k2).unwrap();
        let alpha_gxh = vertex_cover_number(&gxh).size();
        let alpha_gxk2 = vertex_cover_number(&gxk2).size();
        let mu_gxk2 = maximum_matching(&gxk2).size();
        let (mu_g, mu_h) = (maximum_matching(&g).size(), maximum_matching(&h).size());
        if !(alpha_gxh >= mu_h * alpha_gxk2
            && alpha_gxk2 == mu_gxk2
            && mu_h * mu_gxk2 >= 2 * mu_g * mu_h)
        {
            failures.push(format!(
                "cover chain on ({a},{b}): alpha(GxH)={alpha_gxh} mu(H)={mu_h} alpha(GxK2)={alpha_gxk2} mu(GxK2)={mu_gxk2} mu(G)={mu_g}"
            ));
        }
        let (n1, n2) = (g.order(), h.order());
        let (beta_g, beta_h) = (independence_number(&g), independence_number(&h));
        let beta_prod = independence_number(&gxh);
        let lower = (n2 * beta_g).max(n1 * beta_h);
        let upper = n2 * beta_g + n1 * beta_h - beta_g * beta_h;
        if !(lower <= beta_prod && beta_prod <= upper) {
            failures.push(format!(
                "independence sandwich on ({a},{b}): {lower} <= {beta_prod} <= {upper}"
            ));
        }
    }

    // vertex-transitive independence product law
    let vt_pairs = [
        ("C:4", "C:5"),
        ("C:5", "C:7"),
        ("C:6", "K:3"),
        ("K:3", "K:4"),
        ("Q:3", "C:4"),
        ("Q:3", "K:3"),
        ("C:7", "K:3"),
        ("C:5", "K:4"),
        ("C:8", "C:6"),
    ];
    for (a, b) in vt_pairs {
        let g = fam(a);
        let h = fam(b);
        assert!(
            is_vertex_transitive(&g, 12).unwrap(),
            "{a} should be vertex-transitive"
        );
        assert!(
            is_vertex_transitive(&h, 12).unwrap(),
            "{b} should be vertex-transitive"
        );
        let beta_prod = independence_number(&direct_product(&g, &h).unwrap());
        let expected =
            (g.order() * independence_number(&h)).max(h.order() * independence_number(&g));
        if beta_prod != expected {
            failures.push(format!(
                "vertex-transitive beta law on ({a},{b}): beta={beta_prod} expected={expected}"
            ));
        }
    }

    finish("criterion 4 (classical lemma property suite)", failures);
}

#[test]
fn criterion_5_characterizations() {
    let mut failures = Vec::new();

    // dim_s = 1 iff path, over connected corpus graphs up to 8 vertices
    for (name, g) in corpus() {
        if g.order() < 2 || g.order() > 8 || !is_connected(&g) {
            continue;
        }
        let dim = strong_metric_dimension(&g).unwrap().value;
        if (dim == 1) != is_path(&g) {
            failures.push(format!("{name}: dim={dim} is_path={}", is_path(&g)));
        }
    }

    // dim_s(G box H) = 2 iff both factors are paths, over every connected
    // factor pair with <= 5 vertices (the isomorphism-complete pool)
    let pool_len = small_connected_pool().len() as u64 - 1;
    let report = verify_structural(
        StructuralCheckId::DimsTwoCharacterization,
        &Ranges::new(&[("a", 0, pool_len), ("b", 0, pool_len)]),
        &Limits::default(),
    )
    .unwrap();
    assert_eq!(report.instances.len(), 465, "30 graphs, unordered pairs");
    if !report.all_pass {
        for inst in &report.instances {
            if inst.status == InstanceStatus::Fail {
                failures.push(format!(
                    "dims=2 characterization at {}: dim={:?}",
                    inst.params_string(),
                    inst.computed
                ));
            }
        }
    }

    finish(
        "criterion 5 (dimension-1 and dimension-2 characterizations)",
        failures,
    );
}

#[test]
fn criterion_6_bound_bracketing() {
    let mut failures = Vec::new();

    for (name, g) in corpus() {
        if g.order() < 2 || !is_connected(&g) {
            continue;
        }
        let exact = strong_metric_dimension(&g).unwrap().value;
        let bounds = sdim_bounds(&g).unwrap();
        if !(bounds.lower <= exact && exact <= bounds.upper) {
            failures.push(format!(
                "{name}: bounds [{}, {}] miss exact {exact}",
                bounds.lower, bounds.upper
            ));
        }
    }

    let pool = small_connected_pool();
    for (i, (name_g, g)) in pool.iter().enumerate() {
        for (name_h, h) in &pool[i..] {
            let exact = strong_metric_dimension(&cartesian_product(g, h).unwrap())
                .unwrap()
                .value;
            let bounds = product_sdim_bounds(g, h).unwrap();
            if !(bounds.lower <= exact && exact <= bounds.upper) {
                failures.push(format!(
                    "({name_g}, {name_h}): product bounds [{}, {}] miss exact {exact}",
                    bounds.lower, bounds.upper
                ));
            }
        }
    }

    finish(
        "criterion 6 (bound bracketing on corpus and factor pairs)",
        failures,
    );
}

#[test]
fn acceptance_corpus_is_well_formed() {
    let graphs = corpus();
    assert!(graphs.len() > 150);
    let connected_small = graphs
        .iter()
        .filter(|(_, g)| (2..=9).contains(&g.order()) && is_connected(g))
        .count();
    assert!(connected_small >= 50);
    // direct products in the corpus include a disconnected one on purpose
    assert!(graphs.iter().any(|(_, g)| !is_connected(g)));
    let names: BTreeSet<&str> = graphs.iter().map(|(n, _)| n.as_str()).collect();
    assert_eq!(names.len(), graphs.len(), "corpus names are unique");
    // every structural sweep the other criteria rely on addresses this pool
    assert_eq!(factor_pool().len(), 13);
    assert_eq!(small_connected_pool().len(), 30);
    let _ = verify(
        TheoremId::Structural(StructuralCheckId::KrBoxKtBeta),
        &Ranges::new(&[("r", 3, 5), ("t", 3, 5)]),
        &Limits::default(),
    )
    .unwrap();
}
