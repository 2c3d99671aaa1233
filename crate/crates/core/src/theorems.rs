//! Closed-form values for the join, multipartite, lexicographic, corona and
//! tree results, and a verifier that checks them against the exact solver.
//!
//! Formula evaluators only look at structure; the solver runs in
//! [`verify`] alone.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::generate::{self, all_graphs, connected_graphs, gnp_with, random_tree, trees};
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::products::{complete_multipartite, corona, join, lexicographic};
use crate::solver::{
    edim_exact, edim_exact_with, enumerate_all_minimum_bases, Method, SolverOptions,
};
use crate::structure::{
    edge_twin_partition, in_class_g, satellites, tree_stats, twin_deletion, twin_partition,
};

/// A formula hypothesis that does not hold for the given input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("precondition failed: {0}")]
pub struct PreconditionFailed(pub String);

fn precondition(ok: bool, reason: impl Into<String>) -> Result<(), PreconditionFailed> {
    if ok {
        Ok(())
    } else {
        Err(PreconditionFailed(reason.into()))
    }
}

/// A closed-form value; lower bounds are never treated as exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FormulaValue {
    Exact(usize),
    LowerBound(usize),
}

impl FormulaValue {
    pub fn value(self) -> usize {
        match self {
            FormulaValue::Exact(v) | FormulaValue::LowerBound(v) => v,
        }
    }
}

/// `|V(G)| + |V(H)| - 1` if either factor is in the class, otherwise
/// `|V(G)| + |V(H)| - 2`.
pub fn edim_join_formula(g: &Graph, h: &Graph) -> Result<usize, PreconditionFailed> {
    precondition(g.n() >= 2, "first factor is trivial")?;
    precondition(h.n() >= 2, "second factor is trivial")?;
    let total = g.n() + h.n();
    Ok(if in_class_g(g) || in_class_g(h) {
        total - 1
    } else {
        total - 2
    })
}

/// `r1 + r2 - 2` for two parts, `Σ r_i - 1` for more.
pub fn edim_multipartite_formula(parts: &[usize]) -> Result<usize, PreconditionFailed> {
    precondition(parts.len() >= 2, "at least two parts required")?;
    precondition(!parts.contains(&0), "part sizes must be positive")?;
    // K(1,1) = K2: the formula gives 0, but a generator is nonempty.
    precondition(parts != [1, 1], "K(1,1) is a single edge, formula gives 0")?;
    let total: usize = parts.iter().sum();
    Ok(if parts.len() == 2 {
        total - 2
    } else {
        total - 1
    })
}

/// `|V(G)|(|V(H)| - 1) + f'(G) + t'(G) + q'(G')`, exact when `H` is outside
/// the class and a lower bound otherwise.
pub fn edim_lex_formula(g: &Graph, h: &Graph) -> Result<FormulaValue, PreconditionFailed> {
    precondition(
        g.n() > 0 && g.components().iter().all(|c| c.len() >= 3),
        "first factor has a component with fewer than 3 vertices",
    )?;
    precondition(h.n() >= 2, "second factor is K1 or empty")?;
    let twins = twin_partition(g);
    let reduced = twin_deletion(g);
    let edge_twins = edge_twin_partition(&reduced.graph);
    let value = g.n() * (h.n() - 1) + twins.f_prime + twins.t_prime + edge_twins.q_prime;
    Ok(if in_class_g(h) {
        FormulaValue::LowerBound(value)
    } else {
        FormulaValue::Exact(value)
    })
}

/// `|V(G)|(|V(H)| - 1)` for connected `G` and `|V(H)| >= 2`.
pub fn edim_corona_formula(g: &Graph, h: &Graph) -> Result<usize, PreconditionFailed> {
    precondition(g.is_connected(), "first factor is not connected")?;
    precondition(h.n() >= 2, "second factor has fewer than 2 vertices")?;
    // With a single base vertex nothing outside its copy of H separates a
    // pendant edge from an edge inside the copy.
    precondition(
        g.n() >= 2 || h.m() == 0,
        "first factor is K1 and the second has edges",
    )?;
    Ok(g.n() * (h.n() - 1))
}

/// `edim(G ⊙ K1) >= edim(G)`.
pub fn edim_corona_k1_bound(g: &Graph) -> FormulaValue {
    FormulaValue::LowerBound(edim_exact(g).value)
}

/// `n1(T) - ex(T)` for trees that are not paths, 1 for paths.
pub fn edim_tree_formula(g: &Graph) -> Result<usize, PreconditionFailed> {
    let stats = tree_stats(g).map_err(|e| PreconditionFailed(e.to_string()))?;
    precondition(g.n() >= 2, "tree has fewer than 2 vertices")?;
    Ok(if stats.is_path {
        1
    } else {
        stats.n1 - stats.ex
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LemmaVerdict {
    Holds,
    Violated,
    CapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatelliteReport {
    /// `(u, v)` with `v` a satellite of `u` in the first factor.
    pub satellite_pairs: Vec<(usize, usize)>,
    pub edim: usize,
    pub bases_checked: usize,
    pub verdict: LemmaVerdict,
    /// A basis and the pair whose layers it both misses.
    pub counterexample: Option<(Vec<usize>, (usize, usize))>,
}

/// Checks on every minimum basis of `G[H]` that for each satellite pair one
/// of the two `H`-layers lies entirely inside the basis.
pub fn check_satellite_lemma(
    g: &Graph,
    h: &Graph,
    cap: usize,
) -> Result<SatelliteReport, PreconditionFailed> {
    precondition(
        g.n() > 0 && g.components().iter().all(|c| c.len() >= 3),
        "first factor has a component with fewer than 3 vertices",
    )?;
    precondition(in_class_g(h), "second factor is not in the class")?;
    let product = lexicographic(g, h).expect("both factors are nonempty");
    let k = h.n();
    let pairs = satellites(g);
    let bases = enumerate_all_minimum_bases(&product, cap);
    let layer = |base: usize| VertexSet::from_indices(product.n(), base * k..(base + 1) * k);
    let mut counterexample = None;
    'bases: for basis in &bases.bases {
        let set = VertexSet::from_indices(product.n(), basis.iter().copied());
        for &(u, v) in &pairs {
            if !layer(u).is_subset(&set) && !layer(v).is_subset(&set) {
                counterexample = Some((basis.clone(), (u, v)));
                break 'bases;
            }
        }
    }
    let verdict = match (&counterexample, bases.cap_hit) {
        (Some(_), _) => LemmaVerdict::Violated,
        (None, true) => LemmaVerdict::CapExceeded,
        (None, false) => LemmaVerdict::Holds,
    };
    Ok(SatelliteReport {
        satellite_pairs: pairs,
        edim: bases.value,
        bases_checked: bases.bases.len(),
        verdict,
        counterexample,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Join,
    Multipartite,
    Lex,
    Corona,
    CoronaK1,
    Tree,
    Satellite,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Join,
        TheoremId::Multipartite,
        TheoremId::Lex,
        TheoremId::Corona,
        TheoremId::CoronaK1,
        TheoremId::Tree,
        TheoremId::Satellite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Join => "join",
            TheoremId::Multipartite => "multipartite",
            TheoremId::Lex => "lex",
            TheoremId::Corona => "corona",
            TheoremId::CoronaK1 => "corona-k1",
            TheoremId::Tree => "tree",
            TheoremId::Satellite => "satellite",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    BoundHolds,
    Mismatch,
    Skipped,
    Holds,
    Violated,
    CapExceeded,
}

impl Verdict {
    pub fn is_failure(self) -> bool {
        matches!(self, Verdict::Mismatch | Verdict::Violated)
    }
}

/// Input to one theorem check.
#[derive(Debug, Clone)]
pub enum InstanceKind {
    Pair(Graph, Graph),
    Parts(Vec<usize>),
    Single(Graph),
    /// An instance that could not be built; reported as skipped.
    Invalid(String),
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub kind: InstanceKind,
    /// Seed that regenerates a random instance.
    pub seed: Option<u64>,
}

impl Instance {
    pub fn pair(g: Graph, h: Graph) -> Self {
        Instance {
            label: format!("G={} H={}", write_graph6(&g), write_graph6(&h)),
            kind: InstanceKind::Pair(g, h),
            seed: None,
        }
    }

    pub fn parts(parts: Vec<usize>) -> Self {
        Instance {
            label: format!("K({})", join_numbers(&parts)),
            kind: InstanceKind::Parts(parts),
            seed: None,
        }
    }

    pub fn single(g: Graph) -> Self {
        Instance {
            label: format!("G={}", write_graph6(&g)),
            kind: InstanceKind::Single(g),
            seed: None,
        }
    }

    pub fn invalid(label: impl Into<String>, reason: impl Into<String>) -> Self {
        Instance {
            label: label.into(),
            kind: InstanceKind::Invalid(reason.into()),
            seed: None,
        }
    }

    fn seeded(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

fn join_numbers(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: String,
    /// Seed of a random instance.
    #[serde(rename = "instance_seed", skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub preconditions_met: bool,
    pub reasons: Vec<String>,
    pub formula_value: Option<FormulaValue>,
    pub solver_value: Option<usize>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremReport {
    fn new(theorem: TheoremId, inst: &Instance) -> Self {
        TheoremReport {
            theorem,
            instance: inst.label.clone(),
            seed: inst.seed,
            preconditions_met: true,
            reasons: Vec::new(),
            formula_value: None,
            solver_value: None,
            verdict: Verdict::Skipped,
            notes: Vec::new(),
        }
    }

    fn skip(mut self, reason: impl Into<String>) -> Self {
        self.preconditions_met = false;
        self.reasons.push(reason.into());
        self.verdict = Verdict::Skipped;
        self
    }

    /// Compares a formula value against the solver.
    fn settle(mut self, formula: FormulaValue, solver: usize) -> Self {
        self.formula_value = Some(formula);
        self.solver_value = Some(solver);
        self.verdict = match formula {
            FormulaValue::Exact(v) if v == solver => Verdict::Match,
            FormulaValue::LowerBound(v) if solver >= v => Verdict::BoundHolds,
            _ => Verdict::Mismatch,
        };
        self
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub solver: SolverOptions,
    /// Basis enumeration cap for the satellite lemma.
    pub basis_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            solver: SolverOptions::default(),
            basis_cap: 100_000,
        }
    }
}

/// Solver value, or `None` when the time budget cut the search short.
fn solve(g: &Graph, opts: &VerifyOptions) -> Option<usize> {
    let r = edim_exact_with(g, &opts.solver);
    (r.method == Method::Exact).then_some(r.value)
}

const BUDGET_NOTE: &str = "solver time budget exceeded";

/// Checks one instance.
pub fn verify_instance(theorem: TheoremId, inst: &Instance, opts: &VerifyOptions) -> TheoremReport {
    let report = TheoremReport::new(theorem, inst);
    use InstanceKind::*;
    match (theorem, &inst.kind) {
        (_, Invalid(reason)) => report.skip(reason.clone()),
        (TheoremId::Join, Pair(g, h)) => match edim_join_formula(g, h) {
            Err(e) => {
                // Record what the solver says without asserting the formula.
                let mut r = report.skip(e.0);
                if g.n() > 0 && h.n() > 0 {
                    if let Some(v) = solve(&join(g, h).expect("nonempty"), opts) {
                        r.solver_value = Some(v);
                    }
                }
                r
            }
            Ok(f) => match solve(&join(g, h).expect("nonempty"), opts) {
                Some(s) => report.settle(FormulaValue::Exact(f), s),
                None => report.skip(BUDGET_NOTE),
            },
        },
        (TheoremId::Multipartite, Parts(parts)) => match edim_multipartite_formula(parts) {
            Err(e) => {
                let mut r = report.skip(e.0);
                if let Ok(g) = complete_multipartite(parts) {
                    r.solver_value = solve(&g, opts);
                }
                r
            }
            Ok(f) => match solve(&complete_multipartite(parts).expect("valid parts"), opts) {
                Some(s) => report.settle(FormulaValue::Exact(f), s),
                None => report.skip(BUDGET_NOTE),
            },
        },
        (TheoremId::Lex, Pair(g, h)) => match edim_lex_formula(g, h) {
            Err(e) => report.skip(e.0),
            Ok(f) => match solve(&lexicographic(g, h).expect("nonempty"), opts) {
                Some(s) => report.settle(f, s),
                None => report.skip(BUDGET_NOTE),
            },
        },
        (TheoremId::Corona, Pair(g, h)) => match edim_corona_formula(g, h) {
            Err(e) => {
                let mut r = report.skip(e.0);
                if g.n() > 0 && h.n() > 0 {
                    r.solver_value = solve(&corona(g, h).expect("nonempty"), opts);
                }
                r
            }
            Ok(f) => match solve(&corona(g, h).expect("nonempty"), opts) {
                Some(s) => report.settle(FormulaValue::Exact(f), s),
                None => report.skip(BUDGET_NOTE),
            },
        },
        (TheoremId::CoronaK1, Single(g)) => {
            if g.n() == 0 {
                return report.skip("empty graph");
            }
            let k1 = Graph::empty(1);
            match (
                solve(g, opts),
                solve(&corona(g, &k1).expect("nonempty"), opts),
            ) {
                (Some(base), Some(s)) => report.settle(FormulaValue::LowerBound(base), s),
                _ => report.skip(BUDGET_NOTE),
            }
        }
        (TheoremId::Tree, Single(g)) => verify_tree(report, g, opts),
        (TheoremId::Satellite, Pair(g, h)) => match check_satellite_lemma(g, h, opts.basis_cap) {
            Err(e) => report.skip(e.0),
            Ok(sat) => {
                let mut r = report;
                r.solver_value = Some(sat.edim);
                r.notes.push(format!(
                    "{} satellite pairs, {} bases checked",
                    sat.satellite_pairs.len(),
                    sat.bases_checked
                ));
                if let Some((basis, pair)) = &sat.counterexample {
                    r.notes
                        .push(format!("basis {basis:?} misses both layers of {pair:?}"));
                }
                r.verdict = match sat.verdict {
                    LemmaVerdict::Holds => Verdict::Holds,
                    LemmaVerdict::Violated => Verdict::Violated,
                    LemmaVerdict::CapExceeded => Verdict::CapExceeded,
                };
                r
            }
        },
        (t, _) => report.skip(format!("instance shape does not fit theorem {t}")),
    }
}

/// Tree formula; for trees that are not paths also checks
/// `edim(T ⊙ K1) = n1(T)` and `edim(T ⊙ K1) - edim(T) = ex(T)`.
fn verify_tree(report: TheoremReport, g: &Graph, opts: &VerifyOptions) -> TheoremReport {
    let formula = match edim_tree_formula(g) {
        Ok(f) => f,
        Err(e) => return report.skip(e.0),
    };
    let Some(solver) = solve(g, opts) else {
        return report.skip(BUDGET_NOTE);
    };
    let mut r = report.settle(FormulaValue::Exact(formula), solver);
    let stats = tree_stats(g).expect("checked by the formula");
    if !stats.is_path {
        let Some(with_pendants) = solve(&corona(g, &Graph::empty(1)).expect("nonempty"), opts)
        else {
            return r.skip(BUDGET_NOTE);
        };
        r.notes.push(format!(
            "edim(T.K1)={with_pendants} n1={} ex={}",
            stats.n1, stats.ex
        ));
        if with_pendants != stats.n1 || with_pendants.checked_sub(solver) != Some(stats.ex) {
            r.verdict = Verdict::Mismatch;
        }
    }
    r
}

/// Checks all instances, in parallel, keeping input order.
pub fn verify(
    theorem: TheoremId,
    instances: &[Instance],
    opts: &VerifyOptions,
) -> Vec<TheoremReport> {
    instances
        .par_iter()
        .map(|inst| verify_instance(theorem, inst, opts))
        .collect()
}

fn components_at_least_three(g: &Graph) -> bool {
    g.components().iter().all(|c| c.len() >= 3)
}

/// Nonincreasing part vectors with at least two parts and sum at most
/// `max_sum`.
pub fn part_vectors(max_sum: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for r in (1..=cap.min(left)).rev() {
            cur.push(r);
            rec(left - r, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_sum, max_sum, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// First factors of the small lexicographic reference corpus: `P3`, `C3`,
/// `P4`, the paw, and disjoint unions of two of `P3`, `C3`.
pub fn lex_reference_firsts() -> Vec<Graph> {
    let p3 = generate::path(3);
    let c3 = generate::complete(3);
    vec![
        p3.clone(),
        c3.clone(),
        generate::path(4),
        generate::paw(),
        p3.disjoint_union(&p3),
        p3.disjoint_union(&c3),
        c3.disjoint_union(&c3),
    ]
}

/// Pairs `(G, H)` with `G` from [`lex_reference_firsts`], `H` any graph on
/// at least two vertices and `|V(G)||V(H)| <= max_product`. Second factors
/// are restricted to the class for the satellite check.
pub fn lex_reference_corpus(theorem: TheoremId, max_product: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for g in lex_reference_firsts() {
        for b in 2..=max_product / g.n() {
            for h in all_graphs(b) {
                if theorem == TheoremId::Satellite && !in_class_g(&h) {
                    continue;
                }
                out.push(Instance::pair(g.clone(), h));
            }
        }
    }
    out
}

/// Exhaustive instances up to size `max_n` followed by `random` seeded
/// random ones. For pair theorems `max_n` bounds the order of the product
/// (the sum of factor orders for joins).
pub fn corpus(theorem: TheoremId, max_n: usize, random: usize, seed: u64) -> Vec<Instance> {
    let mut out = exhaustive(theorem, max_n);
    for i in 0..random {
        let instance_seed = seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(i as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(instance_seed);
        if let Some(inst) = random_instance(theorem, max_n, &mut rng) {
            out.push(inst.seeded(instance_seed));
        }
    }
    out
}

/// Largest factor order enumerated exhaustively; bigger factors only appear
/// as random instances.
pub const EXHAUSTIVE_FACTOR_MAX: usize = 6;

fn exhaustive(theorem: TheoremId, max_n: usize) -> Vec<Instance> {
    let graphs_of = |n: usize| {
        if n == 0 || n > EXHAUSTIVE_FACTOR_MAX {
            Vec::new()
        } else {
            all_graphs(n)
        }
    };
    let mut out = Vec::new();
    match theorem {
        TheoremId::Join => {
            for a in 2..=max_n {
                for b in a..=max_n.saturating_sub(a) {
                    let left = graphs_of(a);
                    let right = graphs_of(b);
                    for (i, g) in left.iter().enumerate() {
                        for (j, h) in right.iter().enumerate() {
                            if a < b || i <= j {
                                out.push(Instance::pair(g.clone(), h.clone()));
                            }
                        }
                    }
                }
            }
        }
        TheoremId::Multipartite => {
            out.extend(part_vectors(max_n).into_iter().map(Instance::parts));
        }
        TheoremId::Lex | TheoremId::Satellite => {
            for a in 3..=max_n / 2 {
                let firsts: Vec<Graph> = graphs_of(a)
                    .into_iter()
                    .filter(components_at_least_three)
                    .collect();
                for b in 2..=max_n / a {
                    for h in graphs_of(b) {
                        if theorem == TheoremId::Satellite && !in_class_g(&h) {
                            continue;
                        }
                        for g in &firsts {
                            out.push(Instance::pair(g.clone(), h.clone()));
                        }
                    }
                }
            }
        }
        TheoremId::Corona => {
            for a in 1..=max_n / 3 {
                for b in 2..=(max_n / a).saturating_sub(1) {
                    for g in connected_graphs(a) {
                        for h in graphs_of(b) {
                            out.push(Instance::pair(g.clone(), h));
                        }
                    }
                }
            }
        }
        TheoremId::CoronaK1 => {
            for n in 1..=max_n {
                out.extend(connected_graphs(n).into_iter().map(Instance::single));
            }
        }
        TheoremId::Tree => {
            for n in 2..=max_n {
                out.extend(trees(n).into_iter().map(Instance::single));
            }
        }
    }
    out
}

fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let p = rng.gen_range(0.15..0.85);
    gnp_with(n, p, rng).expect("probability in range")
}

fn random_connected(n: usize, rng: &mut impl Rng) -> Graph {
    // A random spanning tree plus random extra edges.
    let tree = random_tree(n, rng);
    let extra = random_graph(n, rng);
    Graph::new(n, tree.edge_pairs().chain(extra.edge_pairs())).expect("union stays simple")
}

/// A random graph whose components all have at least three vertices,
/// retried a bounded number of times.
fn random_lex_first(n: usize, rng: &mut impl Rng) -> Graph {
    for _ in 0..64 {
        let g = random_graph(n, rng);
        if components_at_least_three(&g) {
            return g;
        }
    }
    random_connected(n, rng)
}

fn random_instance(theorem: TheoremId, max_n: usize, rng: &mut impl Rng) -> Option<Instance> {
    Some(match theorem {
        TheoremId::Join => {
            if max_n < 4 {
                return None;
            }
            let a = rng.gen_range(2..=max_n - 2);
            let b = rng.gen_range(2..=max_n - a);
            Instance::pair(random_graph(a, rng), random_graph(b, rng))
        }
        TheoremId::Multipartite => {
            if max_n < 2 {
                return None;
            }
            let mut parts = Vec::new();
            let mut left = max_n;
            while left > 0 && (parts.len() < 2 || rng.gen_bool(0.5)) {
                if parts.len() >= 2 && left == 0 {
                    break;
                }
                let r = rng.gen_range(1..=left.saturating_sub(1).max(1));
                if r > left {
                    break;
                }
                parts.push(r);
                left -= r;
            }
            if parts.len() < 2 {
                return None;
            }
            Instance::parts(parts)
        }
        TheoremId::Lex | TheoremId::Satellite => {
            if max_n < 6 {
                return None;
            }
            let a = rng.gen_range(3..=max_n / 2);
            let b = rng.gen_range(2..=max_n / a);
            let g = random_lex_first(a, rng);
            let h = if theorem == TheoremId::Satellite {
                // Complete multipartite graphs with at least two parts are
                // in the class; mix them with random graphs that are.
                let mut h = random_graph(b, rng);
                if !in_class_g(&h) {
                    h = generate::complete(b);
                }
                h
            } else {
                random_graph(b, rng)
            };
            Instance::pair(g, h)
        }
        TheoremId::Corona => {
            if max_n < 3 {
                return None;
            }
            let a = rng.gen_range(1..=max_n / 3);
            let b = rng.gen_range(2..=max_n / a - 1);
            Instance::pair(random_connected(a, rng), random_graph(b, rng))
        }
        TheoremId::CoronaK1 => {
            let n = rng.gen_range(1..=max_n.max(1));
            Instance::single(random_connected(n, rng))
        }
        TheoremId::Tree => {
            if max_n < 2 {
                return None;
            }
            let n = rng.gen_range(2..=max_n);
            Instance::single(random_tree(n, rng))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, paw, star};

    #[test]
    fn join_formula_examples() {
        assert_eq!(edim_join_formula(&complete(2), &complete(2)), Ok(3));
        assert_eq!(edim_join_formula(&Graph::empty(2), &Graph::empty(3)), Ok(3));
        assert_eq!(
            edim_join_formula(&cycle(5).unwrap(), &Graph::empty(2)),
            Ok(5)
        );
        assert!(edim_join_formula(&Graph::empty(1), &cycle(4).unwrap()).is_err());
    }

    #[test]
    fn multipartite_formula_examples() {
        assert_eq!(edim_multipartite_formula(&[2, 3]), Ok(3));
        assert_eq!(edim_multipartite_formula(&[1, 1, 1]), Ok(2));
        assert_eq!(edim_multipartite_formula(&[2, 2, 2]), Ok(5));
        assert!(edim_multipartite_formula(&[4]).is_err());
        assert!(edim_multipartite_formula(&[1, 1]).is_err());
        assert_eq!(edim_multipartite_formula(&[1, 2]), Ok(1));
    }

    #[test]
    fn lex_formula_examples() {
        let n2 = Graph::empty(2);
        assert_eq!(edim_lex_formula(&path(3), &n2), Ok(FormulaValue::Exact(4)));
        assert_eq!(
            edim_lex_formula(&complete(3), &n2),
            Ok(FormulaValue::Exact(5))
        );
        assert_eq!(
            edim_lex_formula(&path(3), &complete(2)),
            Ok(FormulaValue::LowerBound(4))
        );
        // The paw has one true-twin pair and, after twin deletion, two twin
        // edges.
        assert_eq!(edim_lex_formula(&paw(), &n2), Ok(FormulaValue::Exact(6)));
        assert!(edim_lex_formula(&path(2), &n2).is_err());
        assert!(edim_lex_formula(&path(3), &Graph::empty(1)).is_err());
    }

    #[test]
    fn corona_formula_examples() {
        assert_eq!(edim_corona_formula(&path(3), &complete(2)), Ok(3));
        assert_eq!(
            edim_corona_formula(&Graph::empty(1), &Graph::empty(2)),
            Ok(1)
        );
        assert_eq!(
            edim_corona_formula(&cycle(4).unwrap(), &Graph::empty(3)),
            Ok(8)
        );
        assert!(edim_corona_formula(&path(2), &Graph::empty(1)).is_err());
        assert!(edim_corona_formula(&Graph::empty(2), &Graph::empty(2)).is_err());
        // K1.K2 is a triangle with edim 2, not 1.
        assert!(edim_corona_formula(&Graph::empty(1), &complete(2)).is_err());
    }

    #[test]
    fn tree_formula_examples() {
        assert_eq!(edim_tree_formula(&star(3)), Ok(2));
        assert_eq!(edim_tree_formula(&path(7)), Ok(1));
        let double = Graph::new(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)]).unwrap();
        assert_eq!(edim_tree_formula(&double), Ok(3));
        assert!(edim_tree_formula(&cycle(4).unwrap()).is_err());
        assert!(edim_tree_formula(&Graph::empty(1)).is_err());
    }

    #[test]
    fn corona_k1_bound_examples() {
        assert_eq!(
            edim_corona_k1_bound(&complete(4)),
            FormulaValue::LowerBound(3)
        );
        assert_eq!(edim_corona_k1_bound(&path(3)), FormulaValue::LowerBound(1));
        assert_eq!(edim_corona_k1_bound(&star(3)), FormulaValue::LowerBound(2));
    }

    #[test]
    fn satellite_examples() {
        let r = check_satellite_lemma(&path(3), &complete(2), 1000).unwrap();
        assert_eq!(r.satellite_pairs, vec![(1, 0), (1, 2)]);
        assert_eq!(r.verdict, LemmaVerdict::Holds);
        let r = check_satellite_lemma(&cycle(4).unwrap(), &complete(2), 1000).unwrap();
        assert!(r.satellite_pairs.is_empty());
        assert_eq!(r.verdict, LemmaVerdict::Holds);
        assert!(check_satellite_lemma(&path(3), &Graph::empty(2), 10).is_err());
    }

    #[test]
    fn verify_examples() {
        let opts = VerifyOptions::default();
        let r = verify(
            TheoremId::Join,
            &[Instance::pair(complete(2), complete(2))],
            &opts,
        );
        assert_eq!((r[0].verdict, r[0].solver_value), (Verdict::Match, Some(3)));
        let r = verify(
            TheoremId::Lex,
            &[Instance::pair(path(3), Graph::empty(2))],
            &opts,
        );
        assert_eq!((r[0].verdict, r[0].solver_value), (Verdict::Match, Some(4)));
        let r = verify(
            TheoremId::Corona,
            &[Instance::pair(path(2), Graph::empty(1))],
            &opts,
        );
        assert_eq!(r[0].verdict, Verdict::Skipped);
        assert!(!r[0].preconditions_met);
        let r = verify(
            TheoremId::Join,
            &[Instance::invalid("junk", "unparseable")],
            &opts,
        );
        assert_eq!(r[0].verdict, Verdict::Skipped);
        let r = verify(TheoremId::Join, &[Instance::parts(vec![2, 3])], &opts);
        assert_eq!(r[0].verdict, Verdict::Skipped);
    }

    #[test]
    fn wheel_join_is_skipped_but_solved() {
        let opts = VerifyOptions::default();
        let r = verify_instance(
            TheoremId::Join,
            &Instance::pair(Graph::empty(1), cycle(5).unwrap()),
            &opts,
        );
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(r.solver_value.is_some());
    }

    #[test]
    fn part_vectors_small() {
        assert_eq!(
            part_vectors(4),
            vec![
                vec![1, 1],
                vec![1, 1, 1],
                vec![1, 1, 1, 1],
                vec![2, 1],
                vec![2, 1, 1],
                vec![2, 2],
                vec![3, 1]
            ]
        );
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = corpus(TheoremId::Join, 6, 5, 42);
        let b = corpus(TheoremId::Join, 6, 5, 42);
        let la: Vec<_> = a.iter().map(|i| i.label.clone()).collect();
        let lb: Vec<_> = b.iter().map(|i| i.label.clone()).collect();
        assert_eq!(la, lb);
        assert!(a.iter().rev().take(5).all(|i| i.seed.is_some()));
    }
}
