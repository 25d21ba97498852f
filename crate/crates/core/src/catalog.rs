//! Closed formulas for every family the theory resolves, and the
//! verification harness that sweeps parameter ranges, recomputes each
//! instance exactly, and reports pass/fail per instance.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::{
    has_perfect_matching, independence_number, is_hamiltonian, is_vertex_transitive,
    CombinatoricsError, DEFAULT_HAMILTONIAN_LIMIT, DEFAULT_VERTEX_TRANSITIVE_LIMIT,
};
use crate::corpus::{leaf_count, seeded_tree};
use crate::family::{make_family, FamilySpec};
use crate::graph::{
    cartesian_product, connected_components, direct_product, is_bipartite, is_path, Graph,
    VertexLabel,
};
use crate::metric::{all_pairs_distances, boundary_with, in_interval};
use crate::sdim::{strong_metric_dimension, SdimError, DEFAULT_ORACLE_LIMIT};
use crate::srgraph::{
    sr_direct_complete_identity_check, sr_product_identity_check, strong_resolving_graph,
};

/// Desk-scale limits for the expensive predicates; exceeding one is an
/// explicit error or a recorded skip, never a silent approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub oracle: usize,
    pub hamiltonian: usize,
    pub vertex_transitive: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle: DEFAULT_ORACLE_LIMIT,
            hamiltonian: DEFAULT_HAMILTONIAN_LIMIT,
            vertex_transitive: DEFAULT_VERTEX_TRANSITIVE_LIMIT,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("missing range for parameter {0:?}")]
    MissingRange(String),
    #[error("{theorem}: parameters outside the theorem's hypotheses: {reason}")]
    OutOfRange {
        theorem: &'static str,
        reason: String,
    },
    #[error("pool index {index} out of range; the pool has {len} entries")]
    PoolIndex { index: u64, len: usize },
}

/// One closed formula per family resolved by the theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FormulaId {
    Cycle,
    TreeLeaves,
    Complete,
    TwoAntipodalPair,
    AntipodalTimesSimplicial,
    KnBoxPr,
    TreeBoxPr,
    CnBoxPr,
    KnBoxC2k,
    TreeBoxC2k,
    CnBoxC2k,
    KnBoxKr,
    T1BoxT2,
    CoddBoxCodd,
    KnBoxCodd,
    TreeBoxCodd,
    KnBoxTree,
    MultiCompleteBox,
    Hamming,
    CoddTimesCodd,
    KrTimesKt,
    CrTimesKt,
    PrTimesKt,
    BetaCirculant2,
}

pub const ALL_FORMULAS: [FormulaId; 24] = [
    FormulaId::Cycle,
    FormulaId::TreeLeaves,
    FormulaId::Complete,
    FormulaId::TwoAntipodalPair,
    FormulaId::AntipodalTimesSimplicial,
    FormulaId::KnBoxPr,
    FormulaId::TreeBoxPr,
    FormulaId::CnBoxPr,
    FormulaId::KnBoxC2k,
    FormulaId::TreeBoxC2k,
    FormulaId::CnBoxC2k,
    FormulaId::KnBoxKr,
    FormulaId::T1BoxT2,
    FormulaId::CoddBoxCodd,
    FormulaId::KnBoxCodd,
    FormulaId::TreeBoxCodd,
    FormulaId::KnBoxTree,
    FormulaId::MultiCompleteBox,
    FormulaId::Hamming,
    FormulaId::CoddTimesCodd,
    FormulaId::KrTimesKt,
    FormulaId::CrTimesKt,
    FormulaId::PrTimesKt,
    FormulaId::BetaCirculant2,
];

impl FormulaId {
    pub fn as_str(self) -> &'static str {
        match self {
            FormulaId::Cycle => "cycle",
            FormulaId::TreeLeaves => "tree_leaves",
            FormulaId::Complete => "complete",
            FormulaId::TwoAntipodalPair => "two_antipodal_pair",
            FormulaId::AntipodalTimesSimplicial => "antipodal_times_simplicial",
            FormulaId::KnBoxPr => "kn_box_pr",
            FormulaId::TreeBoxPr => "tree_box_pr",
            FormulaId::CnBoxPr => "cn_box_pr",
            FormulaId::KnBoxC2k => "kn_box_c2k",
            FormulaId::TreeBoxC2k => "tree_box_c2k",
            FormulaId::CnBoxC2k => "cn_box_c2k",
            FormulaId::KnBoxKr => "kn_box_kr",
            FormulaId::T1BoxT2 => "t1_box_t2",
            FormulaId::CoddBoxCodd => "codd_box_codd",
            FormulaId::KnBoxCodd => "kn_box_codd",
            FormulaId::TreeBoxCodd => "tree_box_codd",
            FormulaId::KnBoxTree => "kn_box_tree",
            FormulaId::MultiCompleteBox => "multi_complete_box",
            FormulaId::Hamming => "hamming",
            FormulaId::CoddTimesCodd => "codd_times_codd",
            FormulaId::KrTimesKt => "kr_times_kt",
            FormulaId::CrTimesKt => "cr_times_kt",
            FormulaId::PrTimesKt => "pr_times_kt",
            FormulaId::BetaCirculant2 => "beta_circulant2",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn out_of_range(theorem: &'static str, reason: impl Into<String>) -> CatalogError {
    CatalogError::OutOfRange {
        theorem,
        reason: reason.into(),
    }
}

/// Evaluates the closed formula for `id` at `params`. Formulas are never
/// extrapolated outside their stated hypotheses; out-of-range parameters are
/// an error.
pub fn formula_sdim(id: FormulaId, params: &[u64]) -> Result<u64, CatalogError> {
    let name = id.as_str();
    let want = |k: usize| -> Result<(), CatalogError> {
        if params.len() == k {
            Ok(())
        } else {
            Err(out_of_range(
                name,
                format!("expected {k} parameters, got {}", params.len()),
            ))
        }
    };
    match id {
        FormulaId::Cycle => {
            want(1)?;
            let n = params[0];
            if n < 3 {
                return Err(out_of_range(name, "need n >= 3"));
            }
            Ok(n.div_ceil(2))
        }
        FormulaId::TreeLeaves => {
            want(1)?;
            let l = params[0];
            if l < 2 {
                return Err(out_of_range(
                    name,
                    "a tree on >= 2 vertices has >= 2 leaves",
                ));
            }
            Ok(l - 1)
        }
        FormulaId::Complete => {
            want(1)?;
            let n = params[0];
            if n < 2 {
                return Err(out_of_range(name, "need n >= 2"));
            }
            Ok(n - 1)
        }
        FormulaId::TwoAntipodalPair => {
            want(2)?;
            let (n, r) = (params[0], params[1]);
            if n < 2 || r < 2 || n % 2 != 0 || r % 2 != 0 {
                return Err(out_of_range(
                    name,
                    "2-antipodal graphs have even order >= 2",
                ));
            }
            Ok(n * r / 2)
        }
        FormulaId::AntipodalTimesSimplicial => {
            want(2)?;
            let (n, s) = (params[0], params[1]);
            if n < 2 || n % 2 != 0 || s < 2 {
                return Err(out_of_range(name, "need even n >= 2 and sigma count >= 2"));
            }
            Ok(n * s / 2)
        }
        FormulaId::KnBoxPr => {
            want(2)?;
            let (n, r) = (params[0], params[1]);
            if n < 2 || r < 2 {
                return Err(out_of_range(name, "need n >= 2 and r >= 2"));
            }
            Ok(n)
        }
        FormulaId::TreeBoxPr => {
            want(2)?;
            let (l, r) = (params[0], params[1]);
            if l < 2 || r < 2 {
                return Err(out_of_range(name, "need l >= 2 and r >= 2"));
            }
            Ok(l)
        }
        FormulaId::CnBoxPr => {
            want(2)?;
            let (n, r) = (params[0], params[1]);
            if n < 3 || r < 2 {
                return Err(out_of_range(name, "need n >= 3 and r >= 2"));
            }
            Ok(n)
        }
        FormulaId::KnBoxC2k => {
            want(2)?;
            let (n, k) = (params[0], params[1]);
            if n < 2 || k < 2 {
                return Err(out_of_range(name, "need n >= 2 and k >= 2"));
            }
            Ok(n * k)
        }
        FormulaId::TreeBoxC2k => {
            want(2)?;
            let (l, k) = (params[0], params[1]);
            if l < 2 || k < 2 {
                return Err(out_of_range(name, "need l >= 2 and k >= 2"));
            }
            Ok(l * k)
        }
        FormulaId::CnBoxC2k => {
            want(2)?;
            let (n, k) = (params[0], params[1]);
            if n < 3 || k < 2 {
                return Err(out_of_range(name, "need n >= 3 and k >= 2"));
            }
            Ok(n * k)
        }
        FormulaId::KnBoxKr => {
            want(2)?;
            let (n, r) = (params[0], params[1]);
            if n < 2 || r < 2 {
                return Err(out_of_range(name, "need n, r >= 2"));
            }
            Ok((n * (r - 1)).min(r * (n - 1)))
        }
        FormulaId::T1BoxT2 => {
            want(2)?;
            let (l1, l2) = (params[0], params[1]);
            if l1 < 2 || l2 < 2 {
                return Err(out_of_range(name, "trees have >= 2 leaves"));
            }
            Ok((l1 * (l2 - 1)).min(l2 * (l1 - 1)))
        }
        FormulaId::CoddBoxCodd => {
            want(2)?;
            let (n, r) = (params[0], params[1]);
            if n < 1 || r < 1 {
                return Err(out_of_range(name, "need n, r >= 1"));
            }
            Ok(((2 * n + 1) * (r + 1)).min((2 * r + 1) * (n + 1)))
        }
        FormulaId::KnBoxCodd => {
            want(2)?;
            let (n, r) = (params[0], params[1]);
            if n < 2 || r < 1 {
                return Err(out_of_range(name, "need n >= 2 and r >= 1"));
            }
            Ok((n * (r + 1)).min((2 * r + 1) * (n - 1)))
        }
        FormulaId::TreeBoxCodd => {
            want(2)?;
            let (l, r) = (params[0], params[1]);
            if l < 2 || r < 1 {
                return Err(out_of_range(name, "need l >= 2 and r >= 1"));
            }
            Ok((l * (r + 1)).min((2 * r + 1) * (l - 1)))
        }
        FormulaId::KnBoxTree => {
            want(2)?;
            let (n, l) = (params[0], params[1]);
            if n < 2 || l < 2 {
                return Err(out_of_range(name, "need n >= 2 and l >= 2"));
            }
            Ok((l * (n - 1)).min(n * (l - 1)))
        }
        FormulaId::MultiCompleteBox => {
            if params.is_empty() {
                return Err(out_of_range(name, "need at least one factor order"));
            }
            if params.iter().any(|&n| n < 2) {
                return Err(out_of_range(name, "factor orders must be >= 2"));
            }
            let product: u64 = params.iter().product();
            let max_quotient = params.iter().map(|&n| product / n).max().unwrap();
            Ok(product - max_quotient)
        }
        FormulaId::Hamming => {
            want(2)?;
            let (k, n) = (params[0], params[1]);
            if k < 1 || n < 2 {
                return Err(out_of_range(name, "need k >= 1 and n >= 2"));
            }
            Ok((n - 1) * n.pow((k - 1) as u32))
        }
        FormulaId::CoddTimesCodd => {
            want(1)?;
            let k = params[0];
            if k < 1 {
                return Err(out_of_range(name, "need k >= 1"));
            }
            Ok((2 * k + 1) * (k + 1))
        }
        FormulaId::KrTimesKt => {
            want(2)?;
            let (r, t) = (params[0], params[1]);
            if r < 3 || t < 3 {
                return Err(out_of_range(name, "need r, t >= 3"));
            }
            Ok((r * (t - 1)).max(t * (r - 1)))
        }
        FormulaId::CrTimesKt => {
            want(2)?;
            let (r, t) = (params[0], params[1]);
            if r < 4 || t < 3 {
                return Err(out_of_range(name, "need r >= 4 and t >= 3"));
            }
            Ok(if r == 4 || r == 5 {
                t * (r - 1)
            } else if r % 2 == 0 {
                t * r / 2
            } else {
                t * (r - r / 3)
            })
        }
        FormulaId::PrTimesKt => {
            want(2)?;
            let (r, t) = (params[0], params[1]);
            if r < 2 || t < 3 {
                return Err(out_of_range(name, "need r >= 2 and t >= 3"));
            }
            Ok(t * r.div_ceil(2))
        }
        FormulaId::BetaCirculant2 => {
            want(1)?;
            let n = params[0];
            if n < 4 {
                return Err(out_of_range(name, "CR(n,2) needs n >= 4"));
            }
            Ok(n / 3)
        }
    }
}

/// Structural identities and theorem-shaped checks that are not a single
/// closed formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralCheckId {
    SrProductIdentity,
    BoundaryProduct,
    IntervalProduct,
    KrKtSr,
    Eq1Consistency,
    MatchingTheoremHypotheses,
    RegularFactorTheorem,
    VertexTransitiveTheorem,
    DimsTwoCharacterization,
    KrBoxKtBeta,
}

pub const ALL_STRUCTURAL_CHECKS: [StructuralCheckId; 10] = [
    StructuralCheckId::SrProductIdentity,
    StructuralCheckId::BoundaryProduct,
    StructuralCheckId::IntervalProduct,
    StructuralCheckId::KrKtSr,
    StructuralCheckId::Eq1Consistency,
    StructuralCheckId::MatchingTheoremHypotheses,
    StructuralCheckId::RegularFactorTheorem,
    StructuralCheckId::VertexTransitiveTheorem,
    StructuralCheckId::DimsTwoCharacterization,
    StructuralCheckId::KrBoxKtBeta,
];

impl StructuralCheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            StructuralCheckId::SrProductIdentity => "sr_product_identity",
            StructuralCheckId::BoundaryProduct => "boundary_product",
            StructuralCheckId::IntervalProduct => "interval_product",
            StructuralCheckId::KrKtSr => "kr_kt_sr",
            StructuralCheckId::Eq1Consistency => "eq1_consistency",
            StructuralCheckId::MatchingTheoremHypotheses => "matching_theorem_hypotheses",
            StructuralCheckId::RegularFactorTheorem => "regular_factor_theorem",
            StructuralCheckId::VertexTransitiveTheorem => "vertex_transitive_theorem",
            StructuralCheckId::DimsTwoCharacterization => "dims_two_characterization",
            StructuralCheckId::KrBoxKtBeta => "kr_box_kt_beta",
        }
    }
}

impl fmt::Display for StructuralCheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Either kind of verifiable statement, addressable by its id string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    Formula(FormulaId),
    Structural(StructuralCheckId),
}

impl TheoremId {
    pub fn parse(s: &str) -> Result<TheoremId, CatalogError> {
        for f in ALL_FORMULAS {
            if f.as_str() == s {
                return Ok(TheoremId::Formula(f));
            }
        }
        for c in ALL_STRUCTURAL_CHECKS {
            if c.as_str() == s {
                return Ok(TheoremId::Structural(c));
            }
        }
        Err(CatalogError::UnknownTheorem(s.to_string()))
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Formula(f) => f.as_str(),
            TheoremId::Structural(c) => c.as_str(),
        }
    }

    pub fn all() -> Vec<TheoremId> {
        ALL_FORMULAS
            .iter()
            .map(|&f| TheoremId::Formula(f))
            .chain(
                ALL_STRUCTURAL_CHECKS
                    .iter()
                    .map(|&c| TheoremId::Structural(c)),
            )
            .collect()
    }
}

/// Named inclusive parameter ranges for a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ranges(pub BTreeMap<String, (u64, u64)>);

impl Ranges {
    pub fn new(pairs: &[(&str, u64, u64)]) -> Self {
        Ranges(
            pairs
                .iter()
                .map(|&(k, lo, hi)| (k.to_string(), (lo, hi)))
                .collect(),
        )
    }

    fn values(&self, key: &str) -> Result<Vec<u64>, CatalogError> {
        let &(lo, hi) = self
            .0
            .get(key)
            .ok_or_else(|| CatalogError::MissingRange(key.to_string()))?;
        Ok((lo..=hi).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceStatus {
    Pass,
    Fail,
    Skip,
    Error,
}

/// One verified instance: sweep parameters, the exactly computed value, the
/// formula value, and the outcome.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceResult {
    pub params: Vec<(String, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<u64>,
    pub status: InstanceStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl InstanceResult {
    fn outcome(params: Params, computed: u64, formula: u64) -> Self {
        InstanceResult {
            params,
            computed: Some(computed),
            formula: Some(formula),
            status: if computed == formula {
                InstanceStatus::Pass
            } else {
                InstanceStatus::Fail
            },
            note: None,
        }
    }

    fn skip(params: Params, note: impl Into<String>) -> Self {
        InstanceResult {
            params,
            computed: None,
            formula: None,
            status: InstanceStatus::Skip,
            note: Some(note.into()),
        }
    }

    fn error(params: Params, note: impl Into<String>) -> Self {
        InstanceResult {
            params,
            computed: None,
            formula: None,
            status: InstanceStatus::Error,
            note: Some(note.into()),
        }
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Sweep report: deterministic, instances in ascending parameter order.
/// `all_pass` means no instance failed or errored; skips are hypothesis
/// misses and do not count against it.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instances: Vec<InstanceResult>,
    pub all_pass: bool,
}

impl VerificationReport {
    fn assemble(theorem: &str, instances: Vec<InstanceResult>) -> Self {
        let all_pass = instances
            .iter()
            .all(|i| matches!(i.status, InstanceStatus::Pass | InstanceStatus::Skip));
        VerificationReport {
            theorem: theorem.to_string(),
            instances,
            all_pass,
        }
    }

    pub fn counts(&self) -> (usize, usize, usize, usize) {
        let mut c = (0, 0, 0, 0);
        for i in &self.instances {
            match i.status {
                InstanceStatus::Pass => c.0 += 1,
                InstanceStatus::Fail => c.1 += 1,
                InstanceStatus::Skip => c.2 += 1,
                InstanceStatus::Error => c.3 += 1,
            }
        }
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        fn field(s: &str) -> String {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let mut out = String::from("theorem,params,computed,formula,status,note\n");
        for i in &self.instances {
            let status = match i.status {
                InstanceStatus::Pass => "pass",
                InstanceStatus::Fail => "fail",
                InstanceStatus::Skip => "skip",
                InstanceStatus::Error => "error",
            };
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                field(&self.theorem),
                field(&i.params_string()),
                i.computed.map(|v| v.to_string()).unwrap_or_default(),
                i.formula.map(|v| v.to_string()).unwrap_or_default(),
                status,
                field(i.note.as_deref().unwrap_or("")),
            ));
        }
        out
    }
}

type Params = Vec<(String, u64)>;
type InstanceEval = Box<dyn Fn(&Params) -> InstanceResult + Sync>;

fn param(params: &Params, key: &str) -> u64 {
    params
        .iter()
        .find(|(k, _)| k == key)
        .map(|&(_, v)| v)
        .unwrap_or_else(|| panic!("instance is missing parameter {key:?}"))
}

fn range_product(ranges: &Ranges, keys: &[&str]) -> Result<Vec<Params>, CatalogError> {
    let mut axes = Vec::new();
    for &k in keys {
        axes.push((k, ranges.values(k)?));
    }
    let mut out: Vec<Params> = vec![Vec::new()];
    for (k, values) in axes {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for base in &out {
            for &v in &values {
                let mut p = base.clone();
                p.push((k.to_string(), v));
                next.push(p);
            }
        }
        out = next;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// formula sweeps
// ---------------------------------------------------------------------------

fn formula_range_keys(id: FormulaId) -> &'static [&'static str] {
    match id {
        FormulaId::Cycle | FormulaId::Complete | FormulaId::BetaCirculant2 => &["n"],
        FormulaId::TreeLeaves => &["n", "seed"],
        FormulaId::TwoAntipodalPair => &["k", "b"],
        FormulaId::AntipodalTimesSimplicial => &["a", "s"],
        FormulaId::KnBoxPr | FormulaId::CnBoxPr | FormulaId::KnBoxKr => &["n", "r"],
        FormulaId::TreeBoxPr | FormulaId::TreeBoxCodd => &["n", "seed", "r"],
        FormulaId::KnBoxC2k | FormulaId::CnBoxC2k => &["n", "k"],
        FormulaId::TreeBoxC2k => &["n", "seed", "k"],
        FormulaId::T1BoxT2 => &["n1", "seed1", "n2", "seed2"],
        FormulaId::CoddBoxCodd | FormulaId::KnBoxCodd => &["n", "r"],
        FormulaId::KnBoxTree => &["n", "m", "seed"],
        FormulaId::MultiCompleteBox => &["r", "n"],
        FormulaId::Hamming => &["k", "n"],
        FormulaId::CoddTimesCodd => &["k"],
        FormulaId::KrTimesKt | FormulaId::CrTimesKt | FormulaId::PrTimesKt => &["r", "t"],
    }
}

fn formula_instances(id: FormulaId, ranges: &Ranges) -> Result<Vec<Params>, CatalogError> {
    if id == FormulaId::MultiCompleteBox {
        // factor count r, one shared range for every factor order
        let mut out = Vec::new();
        for r in ranges.values("r")? {
            let orders = ranges.values("n")?;
            let mut combos: Vec<Vec<u64>> = vec![Vec::new()];
            for _ in 0..r {
                combos = combos
                    .into_iter()
                    .flat_map(|c| {
                        orders.iter().map(move |&n| {
                            let mut c2 = c.clone();
                            c2.push(n);
                            c2
                        })
                    })
                    .collect();
            }
            for combo in combos {
                let mut p: Params = vec![("r".to_string(), r)];
                for (i, n) in combo.iter().enumerate() {
                    p.push((format!("n{}", i + 1), *n));
                }
                out.push(p);
            }
        }
        return Ok(out);
    }
    range_product(ranges, formula_range_keys(id))
}

fn dim_of(g: &Graph) -> Result<u64, SdimError> {
    Ok(strong_metric_dimension(g)?.value as u64)
}

fn fold_cartesian(factors: &[Graph]) -> Result<Graph, String> {
    let mut it = factors.iter();
    let mut acc = it.next().ok_or("no factors")?.clone();
    for f in it {
        acc = cartesian_product(&acc, f).map_err(|e| e.to_string())?;
    }
    Ok(acc)
}

/// Builds the instance for one formula parameter tuple and computes both the
/// exact value and the closed formula.
fn eval_formula_instance(id: FormulaId, params: &Params) -> InstanceResult {
    let run = || -> Result<(u64, u64), String> {
        let fam = |spec: FamilySpec| make_family(&spec).map_err(|e| e.to_string());
        let p = |k: &str| param(params, k) as usize;
        let (computed, args): (u64, Vec<u64>) = match id {
            FormulaId::Cycle => {
                let n = p("n");
                (
                    dim_of(&fam(FamilySpec::Cycle(n))?).map_err(|e| e.to_string())?,
                    vec![n as u64],
                )
            }
            FormulaId::Complete => {
                let n = p("n");
                (
                    dim_of(&fam(FamilySpec::Complete(n))?).map_err(|e| e.to_string())?,
                    vec![n as u64],
                )
            }
            FormulaId::TreeLeaves => {
                let t = seeded_tree(p("n"), param(params, "seed"));
                let l = leaf_count(&t) as u64;
                (dim_of(&t).map_err(|e| e.to_string())?, vec![l])
            }
            FormulaId::TwoAntipodalPair => {
                let (k, b) = (p("k"), p("b"));
                let g = fam(FamilySpec::Hypercube(k))?;
                let h = fam(FamilySpec::Cycle(2 * b))?;
                let prod = cartesian_product(&g, &h).map_err(|e| e.to_string())?;
                (
                    dim_of(&prod).map_err(|e| e.to_string())?,
                    vec![1u64 << k, 2 * b as u64],
                )
            }
            FormulaId::AntipodalTimesSimplicial => {
                let (a, s) = (p("a"), p("s"));
                let g = fam(FamilySpec::Cycle(2 * a))?;
                let h = fam(FamilySpec::Star(s))?;
                let prod = cartesian_product(&g, &h).map_err(|e| e.to_string())?;
                (
                    dim_of(&prod).map_err(|e| e.to_string())?,
                    vec![2 * a as u64, s as u64],
                )
            }
            FormulaId::KnBoxPr => box_dim(
                fam(FamilySpec::Complete(p("n")))?,
                fam(FamilySpec::Path(p("r")))?,
                vec![p("n") as u64, p("r") as u64],
            )?,
            FormulaId::TreeBoxPr => {
                let t = seeded_tree(p("n"), param(params, "seed"));
                let l = leaf_count(&t) as u64;
                box_dim(t, fam(FamilySpec::Path(p("r")))?, vec![l, p("r") as u64])?
            }
            FormulaId::CnBoxPr => box_dim(
                fam(FamilySpec::Cycle(p("n")))?,
                fam(FamilySpec::Path(p("r")))?,
                vec![p("n") as u64, p("r") as u64],
            )?,
            FormulaId::KnBoxC2k => box_dim(
                fam(FamilySpec::Complete(p("n")))?,
                fam(FamilySpec::Cycle(2 * p("k")))?,
                vec![p("n") as u64, p("k") as u64],
            )?,
            FormulaId::TreeBoxC2k => {
                let t = seeded_tree(p("n"), param(params, "seed"));
                let l = leaf_count(&t) as u64;
                box_dim(
                    t,
                    fam(FamilySpec::Cycle(2 * p("k")))?,
                    vec![l, p("k") as u64],
                )?
            }
            FormulaId::CnBoxC2k => box_dim(
                fam(FamilySpec::Cycle(p("n")))?,
                fam(FamilySpec::Cycle(2 * p("k")))?,
                vec![p("n") as u64, p("k") as u64],
            )?,
            FormulaId::KnBoxKr => box_dim(
                fam(FamilySpec::Complete(p("n")))?,
                fam(FamilySpec::Complete(p("r")))?,
                vec![p("n") as u64, p("r") as u64],
            )?,
            FormulaId::T1BoxT2 => {
                let t1 = seeded_tree(p("n1"), param(params, "seed1"));
                let t2 = seeded_tree(p("n2"), param(params, "seed2"));
                let (l1, l2) = (leaf_count(&t1) as u64, leaf_count(&t2) as u64);
                box_dim(t1, t2, vec![l1, l2])?
            }
            FormulaId::CoddBoxCodd => box_dim(
                fam(FamilySpec::Cycle(2 * p("n") + 1))?,
                fam(FamilySpec::Cycle(2 * p("r") + 1))?,
                vec![p("n") as u64, p("r") as u64],
            )?,
            FormulaId::KnBoxCodd => box_dim(
                fam(FamilySpec::Complete(p("n")))?,
                fam(FamilySpec::Cycle(2 * p("r") + 1))?,
                vec![p("n") as u64, p("r") as u64],
            )?,
            FormulaId::TreeBoxCodd => {
                let t = seeded_tree(p("n"), param(params, "seed"));
                let l = leaf_count(&t) as u64;
                box_dim(
                    t,
                    fam(FamilySpec::Cycle(2 * p("r") + 1))?,
                    vec![l, p("r") as u64],
                )?
            }
            FormulaId::KnBoxTree => {
                let t = seeded_tree(p("m"), param(params, "seed"));
                let l = leaf_count(&t) as u64;
                box_dim(
                    fam(FamilySpec::Complete(p("n")))?,
                    t,
                    vec![p("n") as u64, l],
                )?
            }
            FormulaId::MultiCompleteBox => {
                let r = p("r");
                let orders: Vec<usize> = (1..=r)
                    .map(|i| param(params, &format!("n{i}")) as usize)
                    .collect();
                let factors: Result<Vec<Graph>, String> = orders
                    .iter()
                    .map(|&n| fam(FamilySpec::Complete(n)))
                    .collect();
                let prod = fold_cartesian(&factors?)?;
                (
                    dim_of(&prod).map_err(|e| e.to_string())?,
                    orders.iter().map(|&n| n as u64).collect(),
                )
            }
            FormulaId::Hamming => {
                let (k, n) = (p("k"), p("n"));
                let factors: Result<Vec<Graph>, String> =
                    (0..k).map(|_| fam(FamilySpec::Complete(n))).collect();
                let prod = fold_cartesian(&factors?)?;
                (
                    dim_of(&prod).map_err(|e| e.to_string())?,
                    vec![k as u64, n as u64],
                )
            }
            FormulaId::CoddTimesCodd => {
                let k = p("k");
                let c = fam(FamilySpec::Cycle(2 * k + 1))?;
                let prod = direct_product(&c, &c).map_err(|e| e.to_string())?;
                (dim_of(&prod).map_err(|e| e.to_string())?, vec![k as u64])
            }
            FormulaId::KrTimesKt => direct_dim(
                fam(FamilySpec::Complete(p("r")))?,
                fam(FamilySpec::Complete(p("t")))?,
                vec![p("r") as u64, p("t") as u64],
            )?,
            FormulaId::CrTimesKt => direct_dim(
                fam(FamilySpec::Cycle(p("r")))?,
                fam(FamilySpec::Complete(p("t")))?,
                vec![p("r") as u64, p("t") as u64],
            )?,
            FormulaId::PrTimesKt => direct_dim(
                fam(FamilySpec::Path(p("r")))?,
                fam(FamilySpec::Complete(p("t")))?,
                vec![p("r") as u64, p("t") as u64],
            )?,
            FormulaId::BetaCirculant2 => {
                let n = p("n");
                let g = fam(FamilySpec::Circulant(n, 2))?;
                (independence_number(&g) as u64, vec![n as u64])
            }
        };
        let formula = formula_sdim(id, &args).map_err(|e| e.to_string())?;
        Ok((computed, formula))
    };
    match run() {
        Ok((computed, formula)) => InstanceResult::outcome(params.clone(), computed, formula),
        Err(note) => InstanceResult::error(params.clone(), note),
    }
}

fn box_dim(g: Graph, h: Graph, args: Vec<u64>) -> Result<(u64, Vec<u64>), String> {
    let prod = cartesian_product(&g, &h).map_err(|e| e.to_string())?;
    Ok((dim_of(&prod).map_err(|e| e.to_string())?, args))
}

fn direct_dim(g: Graph, h: Graph, args: Vec<u64>) -> Result<(u64, Vec<u64>), String> {
    let prod = direct_product(&g, &h).map_err(|e| e.to_string())?;
    Ok((dim_of(&prod).map_err(|e| e.to_string())?, args))
}

/// Runs the closed-formula sweep for `id` over `ranges`: each instance is
/// constructed, solved exactly, and compared against [`formula_sdim`].
pub fn verify_formula(id: FormulaId, ranges: &Ranges) -> Result<VerificationReport, CatalogError> {
    verify_with_jobs(TheoremId::Formula(id), ranges, &Limits::default(), 1)
}

// ---------------------------------------------------------------------------
// structural sweeps
// ---------------------------------------------------------------------------

/// The indexed factor pool addressed by the `a`/`b` ranges of the pairwise
/// structural checks.
pub fn factor_pool() -> Vec<(String, Graph)> {
    let mut specs: Vec<(String, FamilySpec)> = Vec::new();
    for n in 2..=5 {
        specs.push((format!("P_{n}"), FamilySpec::Path(n)));
    }
    for n in 3..=6 {
        specs.push((format!("C_{n}"), FamilySpec::Cycle(n)));
    }
    for n in 2..=4 {
        specs.push((format!("K_{n}"), FamilySpec::Complete(n)));
    }
    specs.push(("K_{1,3}".to_string(), FamilySpec::CompleteBipartite(1, 3)));
    specs.push(("K_{2,3}".to_string(), FamilySpec::CompleteBipartite(2, 3)));
    specs
        .into_iter()
        .map(|(name, s)| (name, make_family(&s).expect("valid parameters")))
        .collect()
}

/// Every connected graph on 2..=5 vertices up to isomorphism (30 of them),
/// found by exhaustive enumeration with brute-force canonical labelling.
/// This is the instance pool of the `dims_two_characterization` check.
pub fn small_connected_pool() -> Vec<(String, Graph)> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let m = pairs.len();
        let mut seen = std::collections::BTreeSet::new();
        let mut idx = 0;
        for mask in 0u32..(1 << m) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_atom_edges(n, edges).expect("pairs are in range");
            if !crate::graph::is_connected(&g) {
                continue;
            }
            let canon = (0..n)
                .permutations(n)
                .map(|perm| {
                    let mut key = 0u32;
                    for (b, &(u, v)) in pairs.iter().enumerate() {
                        let (pu, pv) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                        let pb = pairs.iter().position(|&e| e == (pu, pv)).unwrap();
                        if mask >> b & 1 == 1 {
                            key |= 1 << pb;
                        }
                    }
                    key
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push((format!("g{n}_{idx}(m={})", g.edge_count()), g));
                idx += 1;
            }
        }
    }
    out
}

fn structural_range_keys(id: StructuralCheckId) -> &'static [&'static str] {
    match id {
        StructuralCheckId::IntervalProduct => &["i"],
        StructuralCheckId::KrKtSr | StructuralCheckId::KrBoxKtBeta => &["r", "t"],
        _ => &["a", "b"],
    }
}

/// Pairwise checks with symmetric statements only run `a <= b`.
fn structural_symmetric(id: StructuralCheckId) -> bool {
    matches!(
        id,
        StructuralCheckId::SrProductIdentity
            | StructuralCheckId::BoundaryProduct
            | StructuralCheckId::Eq1Consistency
            | StructuralCheckId::RegularFactorTheorem
            | StructuralCheckId::VertexTransitiveTheorem
            | StructuralCheckId::DimsTwoCharacterization
    )
}

fn is_regular(g: &Graph) -> bool {
    g.order() > 0 && (1..g.order()).all(|v| g.degree(v) == g.degree(0))
}

fn sdim_err(e: SdimError) -> String {
    e.to_string()
}

fn eval_structural_instance(
    id: StructuralCheckId,
    params: &Params,
    pool: &[(String, Graph)],
    limits: &Limits,
) -> InstanceResult {
    let p = params.clone();
    match id {
        StructuralCheckId::SrProductIdentity => {
            let (g, h) = (
                &pool[param(params, "a") as usize].1,
                &pool[param(params, "b") as usize].1,
            );
            match sr_product_identity_check(g, h) {
                Ok(ok) => InstanceResult::outcome(p, ok as u64, 1),
                Err(e) => InstanceResult::error(p, e.to_string()),
            }
        }
        StructuralCheckId::BoundaryProduct => {
            let (g, h) = (
                &pool[param(params, "a") as usize].1,
                &pool[param(params, "b") as usize].1,
            );
            let run = || -> Result<(bool, u64, u64), String> {
                let prod = cartesian_product(g, h).map_err(|e| e.to_string())?;
                let d = all_pairs_distances(&prod).map_err(|e| e.to_string())?;
                let got: std::collections::BTreeSet<VertexLabel> = boundary_with(&prod, &d)
                    .into_iter()
                    .map(|v| prod.label(v).clone())
                    .collect();
                let bg = crate::metric::boundary(g).map_err(|e| e.to_string())?;
                let bh = crate::metric::boundary(h).map_err(|e| e.to_string())?;
                let expected: std::collections::BTreeSet<VertexLabel> = bg
                    .iter()
                    .flat_map(|&u| {
                        bh.iter().map(move |&v| {
                            VertexLabel::pair(g.label(u).clone(), h.label(v).clone())
                        })
                    })
                    .collect();
                Ok((got == expected, got.len() as u64, expected.len() as u64))
            };
            match run() {
                Ok((equal, got, want)) => InstanceResult {
                    params: p,
                    computed: Some(got),
                    formula: Some(want),
                    status: if equal {
                        InstanceStatus::Pass
                    } else {
                        InstanceStatus::Fail
                    },
                    note: None,
                },
                Err(e) => InstanceResult::error(p, e),
            }
        }
        StructuralCheckId::IntervalProduct => {
            let cases = [
                (FamilySpec::Path(3), FamilySpec::Cycle(4)),
                (FamilySpec::Complete(3), FamilySpec::Path(3)),
            ];
            let i = param(params, "i") as usize;
            if i >= cases.len() {
                return InstanceResult::error(p, format!("instance index {i} out of range"));
            }
            let g = make_family(&cases[i].0).expect("valid");
            let h = make_family(&cases[i].1).expect("valid");
            let prod = cartesian_product(&g, &h).expect("non-empty");
            let run = || -> Result<(u64, u64), String> {
                let dp = all_pairs_distances(&prod).map_err(|e| e.to_string())?;
                let dg = all_pairs_distances(&g).map_err(|e| e.to_string())?;
                let dh = all_pairs_distances(&h).map_err(|e| e.to_string())?;
                let n2 = h.order();
                let n = prod.order();
                let mut agree = 0u64;
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let lhs = in_interval(&dp, x, y, z);
                            let rhs = in_interval(&dg, x / n2, y / n2, z / n2)
                                && in_interval(&dh, x % n2, y % n2, z % n2);
                            if lhs == rhs {
                                agree += 1;
                            }
                        }
                    }
                }
                Ok((agree, (n * n * n) as u64))
            };
            match run() {
                Ok((agree, total)) => InstanceResult::outcome(p, agree, total),
                Err(e) => InstanceResult::error(p, e),
            }
        }
        StructuralCheckId::KrKtSr => {
            let (r, t) = (param(params, "r") as usize, param(params, "t") as usize);
            match sr_direct_complete_identity_check(r, t) {
                Ok(ok) => InstanceResult::outcome(p, ok as u64, 1),
                Err(e) => InstanceResult::error(p, e.to_string()),
            }
        }
        StructuralCheckId::Eq1Consistency => {
            let (g, h) = (
                &pool[param(params, "a") as usize].1,
                &pool[param(params, "b") as usize].1,
            );
            let run = || -> Result<(u64, u64), String> {
                let prod = cartesian_product(g, h).map_err(|e| e.to_string())?;
                let dim = dim_of(&prod).map_err(sdim_err)?;
                let g_sr = strong_resolving_graph(g).map_err(|e| e.to_string())?;
                let h_sr = strong_resolving_graph(h).map_err(|e| e.to_string())?;
                let beta =
                    independence_number(&direct_product(&g_sr, &h_sr).map_err(|e| e.to_string())?)
                        as u64;
                let rhs = (g_sr.order() * h_sr.order()) as u64 - beta;
                Ok((dim, rhs))
            };
            match run() {
                Ok((dim, rhs)) => InstanceResult::outcome(p, dim, rhs),
                Err(e) => InstanceResult::error(p, e),
            }
        }
        StructuralCheckId::MatchingTheoremHypotheses => {
            let (g, h) = (
                &pool[param(params, "a") as usize].1,
                &pool[param(params, "b") as usize].1,
            );
            let run = || -> Result<InstanceResult, String> {
                let g_sr = strong_resolving_graph(g).map_err(|e| e.to_string())?;
                let h_sr = strong_resolving_graph(h).map_err(|e| e.to_string())?;
                if is_bipartite(&h_sr).is_none() || !has_perfect_matching(&h_sr) {
                    return Ok(InstanceResult::skip(
                        p.clone(),
                        "hypothesis-not-met: H_SR is not bipartite with a perfect matching",
                    ));
                }
                for comp in connected_components(&g_sr) {
                    let ok = if has_perfect_matching(&comp) {
                        true
                    } else {
                        match is_hamiltonian(&comp, limits.hamiltonian) {
                            Ok(ham) => ham,
                            Err(CombinatoricsError::TooLarge { .. }) => {
                                return Ok(InstanceResult::skip(
                                    p.clone(),
                                    "hypothesis check exceeds the Hamiltonicity desk-scale limit",
                                ))
                            }
                        }
                    };
                    if !ok {
                        return Ok(InstanceResult::skip(
                            p.clone(),
                            "hypothesis-not-met: a component of G_SR is neither Hamiltonian nor perfectly matched",
                        ));
                    }
                }
                let prod = cartesian_product(g, h).map_err(|e| e.to_string())?;
                let dim = dim_of(&prod).map_err(sdim_err)?;
                let formula = (g_sr.order() * h_sr.order() / 2) as u64;
                Ok(InstanceResult::outcome(p.clone(), dim, formula))
            };
            run().unwrap_or_else(|e| InstanceResult::error(params.clone(), e))
        }
        StructuralCheckId::RegularFactorTheorem => {
            let (g, h) = (
                &pool[param(params, "a") as usize].1,
                &pool[param(params, "b") as usize].1,
            );
            let run = || -> Result<InstanceResult, String> {
                let g_sr = strong_resolving_graph(g).map_err(|e| e.to_string())?;
                let h_sr = strong_resolving_graph(h).map_err(|e| e.to_string())?;
                if !is_regular(&g_sr) || !is_regular(&h_sr) {
                    return Ok(InstanceResult::skip(
                        p.clone(),
                        "hypothesis-not-met: a factor SR graph is not regular",
                    ));
                }
                if is_bipartite(&g_sr).is_none() && is_bipartite(&h_sr).is_none() {
                    return Ok(InstanceResult::skip(
                        p.clone(),
                        "hypothesis-not-met: neither SR graph is bipartite",
                    ));
                }
                let prod = cartesian_product(g, h).map_err(|e| e.to_string())?;
                let dim = dim_of(&prod).map_err(sdim_err)?;
                let formula = (g_sr.order() * h_sr.order() / 2) as u64;
                Ok(InstanceResult::outcome(p.clone(), dim, formula))
            };
            run().unwrap_or_else(|e| InstanceResult::error(params.clone(), e))
        }
        StructuralCheckId::VertexTransitiveTheorem => {
            let (g, h) = (
                &pool[param(params, "a") as usize].1,
                &pool[param(params, "b") as usize].1,
            );
            let run = || -> Result<InstanceResult, String> {
                let g_sr = strong_resolving_graph(g).map_err(|e| e.to_string())?;
                let h_sr = strong_resolving_graph(h).map_err(|e| e.to_string())?;
                for sr in [&g_sr, &h_sr] {
                    match is_vertex_transitive(sr, limits.vertex_transitive) {
                        Ok(true) => {}
                        Ok(false) => {
                            return Ok(InstanceResult::skip(
                                p.clone(),
                                "hypothesis-not-met: a factor SR graph is not vertex-transitive",
                            ))
                        }
                        Err(CombinatoricsError::TooLarge { .. }) => {
                            return Ok(InstanceResult::skip(
                                p.clone(),
                                "hypothesis check exceeds the vertex-transitivity desk-scale limit",
                            ))
                        }
                    }
                }
                let dim_g = dim_of(g).map_err(sdim_err)?;
                let dim_h = dim_of(h).map_err(sdim_err)?;
                let prod = cartesian_product(g, h).map_err(|e| e.to_string())?;
                let dim = dim_of(&prod).map_err(sdim_err)?;
                let formula = (g_sr.order() as u64 * dim_h).min(h_sr.order() as u64 * dim_g);
                Ok(InstanceResult::outcome(p.clone(), dim, formula))
            };
            run().unwrap_or_else(|e| InstanceResult::error(params.clone(), e))
        }
        StructuralCheckId::DimsTwoCharacterization => {
            let (g, h) = (
                &pool[param(params, "a") as usize].1,
                &pool[param(params, "b") as usize].1,
            );
            let run = || -> Result<InstanceResult, String> {
                let prod = cartesian_product(g, h).map_err(|e| e.to_string())?;
                let dim = dim_of(&prod).map_err(sdim_err)?;
                let both_paths = is_path(g) && is_path(h);
                let pass = (dim == 2) == both_paths;
                Ok(InstanceResult {
                    params: p.clone(),
                    computed: Some(dim),
                    formula: both_paths.then_some(2),
                    status: if pass {
                        InstanceStatus::Pass
                    } else {
                        InstanceStatus::Fail
                    },
                    note: (!both_paths)
                        .then(|| "factors are not both paths; expect dim != 2".to_string()),
                })
            };
            run().unwrap_or_else(|e| InstanceResult::error(params.clone(), e))
        }
        StructuralCheckId::KrBoxKtBeta => {
            let (r, t) = (param(params, "r") as usize, param(params, "t") as usize);
            let run = || -> Result<(u64, u64), String> {
                let kr = make_family(&FamilySpec::Complete(r)).map_err(|e| e.to_string())?;
                let kt = make_family(&FamilySpec::Complete(t)).map_err(|e| e.to_string())?;
                let prod = cartesian_product(&kr, &kt).map_err(|e| e.to_string())?;
                Ok((independence_number(&prod) as u64, r.min(t) as u64))
            };
            match run() {
                Ok((beta, expected)) => InstanceResult::outcome(p, beta, expected),
                Err(e) => InstanceResult::error(p, e),
            }
        }
    }
}

/// Runs a structural sweep; instances failing a theorem hypothesis are
/// skipped and marked, never counted as failures.
pub fn verify_structural(
    id: StructuralCheckId,
    ranges: &Ranges,
    limits: &Limits,
) -> Result<VerificationReport, CatalogError> {
    verify_with_jobs(TheoremId::Structural(id), ranges, limits, 1)
}

/// Dispatches either kind of sweep.
pub fn verify(
    theorem: TheoremId,
    ranges: &Ranges,
    limits: &Limits,
) -> Result<VerificationReport, CatalogError> {
    verify_with_jobs(theorem, ranges, limits, 1)
}

/// Like [`verify`] but evaluating instances on `jobs` worker threads.
/// Instances are independent and the report is assembled in parameter order,
/// so output is schedule-independent.
pub fn verify_with_jobs(
    theorem: TheoremId,
    ranges: &Ranges,
    limits: &Limits,
    jobs: usize,
) -> Result<VerificationReport, CatalogError> {
    let (params_list, eval): (Vec<Params>, InstanceEval) = match theorem {
        TheoremId::Formula(id) => (
            formula_instances(id, ranges)?,
            Box::new(move |params| eval_formula_instance(id, params)),
        ),
        TheoremId::Structural(id) => {
            let pool = match id {
                StructuralCheckId::DimsTwoCharacterization => small_connected_pool(),
                _ => factor_pool(),
            };
            let mut params_list = range_product(ranges, structural_range_keys(id))?;
            if structural_symmetric(id) {
                params_list.retain(|prm| param(prm, "a") <= param(prm, "b"));
            }
            if structural_range_keys(id) == ["a", "b"] {
                for prm in &params_list {
                    for key in ["a", "b"] {
                        let v = param(prm, key);
                        if v as usize >= pool.len() {
                            return Err(CatalogError::PoolIndex {
                                index: v,
                                len: pool.len(),
                            });
                        }
                    }
                }
            }
            let limits = *limits;
            (
                params_list,
                Box::new(move |params| eval_structural_instance(id, params, &pool, &limits)),
            )
        }
    };
    let instances: Vec<InstanceResult> = if jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| params_list.par_iter().map(&*eval).collect())
    } else {
        params_list.iter().map(&*eval).collect()
    };
    Ok(VerificationReport::assemble(theorem.as_str(), instances))
}

/// The documented default sweep ranges per theorem (the CLI uses these when
/// `--range` is omitted).
pub fn default_ranges(theorem: TheoremId) -> Ranges {
    let r = |pairs: &[(&str, u64, u64)]| Ranges::new(pairs);
    match theorem {
        TheoremId::Formula(id) => match id {
            FormulaId::Cycle => r(&[("n", 3, 14)]),
            FormulaId::TreeLeaves => r(&[("n", 3, 12), ("seed", 0, 1)]),
            FormulaId::Complete => r(&[("n", 2, 8)]),
            FormulaId::TwoAntipodalPair => r(&[("k", 2, 3), ("b", 2, 3)]),
            FormulaId::AntipodalTimesSimplicial => r(&[("a", 2, 3), ("s", 2, 4)]),
            FormulaId::KnBoxPr => r(&[("n", 2, 5), ("r", 2, 5)]),
            FormulaId::TreeBoxPr => r(&[("n", 4, 7), ("seed", 0, 1), ("r", 2, 3)]),
            FormulaId::CnBoxPr => r(&[("n", 3, 6), ("r", 2, 4)]),
            FormulaId::KnBoxC2k => r(&[("n", 2, 4), ("k", 2, 3)]),
            FormulaId::TreeBoxC2k => r(&[("n", 4, 7), ("seed", 0, 1), ("k", 2, 2)]),
            FormulaId::CnBoxC2k => r(&[("n", 3, 5), ("k", 2, 3)]),
            FormulaId::KnBoxKr => r(&[("n", 2, 5), ("r", 2, 5)]),
            FormulaId::T1BoxT2 => {
                r(&[("n1", 4, 6), ("seed1", 0, 0), ("n2", 4, 6), ("seed2", 1, 1)])
            }
            FormulaId::CoddBoxCodd => r(&[("n", 1, 3), ("r", 1, 3)]),
            FormulaId::KnBoxCodd => r(&[("n", 2, 4), ("r", 1, 2)]),
            FormulaId::TreeBoxCodd => r(&[("n", 4, 6), ("seed", 0, 1), ("r", 1, 2)]),
            FormulaId::KnBoxTree => r(&[("n", 2, 4), ("m", 4, 6), ("seed", 0, 1)]),
            FormulaId::MultiCompleteBox => r(&[("r", 2, 3), ("n", 2, 3)]),
            FormulaId::Hamming => r(&[("k", 2, 3), ("n", 2, 3)]),
            FormulaId::CoddTimesCodd => r(&[("k", 1, 2)]),
            FormulaId::KrTimesKt => r(&[("r", 3, 5), ("t", 3, 5)]),
            FormulaId::CrTimesKt => r(&[("r", 4, 10), ("t", 3, 4)]),
            FormulaId::PrTimesKt => r(&[("r", 2, 7), ("t", 3, 4)]),
            FormulaId::BetaCirculant2 => r(&[("n", 5, 16)]),
        },
        TheoremId::Structural(id) => match id {
            StructuralCheckId::IntervalProduct => r(&[("i", 0, 1)]),
            StructuralCheckId::KrKtSr | StructuralCheckId::KrBoxKtBeta => {
                r(&[("r", 3, 5), ("t", 3, 5)])
            }
            StructuralCheckId::Eq1Consistency => r(&[("a", 0, 4), ("b", 5, 9)]),
            StructuralCheckId::DimsTwoCharacterization => r(&[("a", 0, 29), ("b", 0, 29)]),
            _ => r(&[("a", 0, 12), ("b", 0, 12)]),
        },
    }
}
