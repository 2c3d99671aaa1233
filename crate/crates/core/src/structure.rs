//! Structural statistics: total domination, the class of graphs whose every
//! vertex lies on a minimum total dominating edge, twin classes, twin edges,
//! satellites and tree statistics.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Default cardinality cap for [`total_domination_number`].
pub const DEFAULT_GAMMA_T_CAP: usize = 8;

/// Outcome of the total domination search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TotalDomination {
    Value(usize),
    /// Some vertex is isolated, so no total dominating set exists.
    Undefined,
    /// No total dominating set of size at most the cap.
    CapExceeded,
}

pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n()).all(|v| g.open_neighborhood(v).intersects(s))
}

/// Minimum total dominating set size, by enumerating subsets in increasing
/// cardinality up to `cap`.
pub fn total_domination_number(g: &Graph, cap: usize) -> TotalDomination {
    if (0..g.n()).any(|v| g.is_isolated(v)) {
        return TotalDomination::Undefined;
    }
    if g.n() == 0 {
        return TotalDomination::Value(0);
    }
    // Any two adjacent vertices dominate each other, so the answer is >= 2.
    for size in 2..=cap.min(g.n()) {
        let mut found = false;
        for_each_subset(g.n(), size, |members| {
            let s = VertexSet::from_indices(g.n(), members.iter().copied());
            found = is_total_dominating(g, &s);
            found
        });
        if found {
            return TotalDomination::Value(size);
        }
    }
    TotalDomination::CapExceeded
}

/// Calls `visit` with every `size`-subset of `0..n` in lexicographic order
/// until it returns true.
fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let mut i = size;
        while i > 0 && idx[i - 1] == n - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Membership in the class of graphs where every vertex `u` has a neighbor
/// `v` such that `{u, v}` is a minimum total dominating set.
///
/// Only pairs `{u, v}` with `uv` an edge are tested; a successful pair
/// certifies `γ_t = 2` since no single vertex dominates itself.
pub fn in_class_g(g: &Graph) -> bool {
    if g.n() == 0 || (0..g.n()).any(|v| g.is_isolated(v)) {
        return false;
    }
    (0..g.n()).all(|u| {
        g.neighbors(u).iter().any(|&v| {
            let pair = VertexSet::from_indices(g.n(), [u, v]);
            is_total_dominating(g, &pair)
        })
    })
}

/// Nontrivial classes of the false-twin (`N(u) = N(v)`) and true-twin
/// (`N[u] = N[v]`) relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinPartition {
    pub false_classes: Vec<Vec<usize>>,
    pub true_classes: Vec<Vec<usize>>,
    pub f: usize,
    pub f_prime: usize,
    pub t: usize,
    pub t_prime: usize,
}

fn nontrivial_classes(keys: impl Iterator<Item = VertexSet>) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
    for (v, key) in keys.enumerate() {
        groups.entry(key).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().filter(|c| c.len() >= 2).collect();
    classes.sort_unstable();
    classes
}

fn class_counts(classes: &[Vec<usize>]) -> (usize, usize) {
    let total: usize = classes.iter().map(Vec::len).sum();
    (total, total - classes.len())
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let false_classes = nontrivial_classes((0..g.n()).map(|v| g.open_neighborhood(v).clone()));
    let true_classes = nontrivial_classes((0..g.n()).map(|v| g.closed_neighborhood(v)));
    let (f, f_prime) = class_counts(&false_classes);
    let (t, t_prime) = class_counts(&true_classes);
    TwinPartition {
        false_classes,
        true_classes,
        f,
        f_prime,
        t,
        t_prime,
    }
}

/// Graph left after deleting all but one vertex of every nontrivial twin
/// class.
#[derive(Debug, Clone)]
pub struct TwinDeletion {
    pub graph: Graph,
    /// `kept[new] = old`.
    pub kept: Vec<usize>,
}

/// Twin deletion keeping the smallest vertex of each class.
pub fn twin_deletion(g: &Graph) -> TwinDeletion {
    twin_deletion_with(g, |class| class[0])
}

/// Twin deletion where `pick` chooses the survivor of each nontrivial class.
pub fn twin_deletion_with(g: &Graph, mut pick: impl FnMut(&[usize]) -> usize) -> TwinDeletion {
    let twins = twin_partition(g);
    let mut keep = vec![true; g.n()];
    for class in twins.false_classes.iter().chain(&twins.true_classes) {
        let survivor = pick(class);
        assert!(
            class.contains(&survivor),
            "survivor must come from its class"
        );
        for &v in class {
            keep[v] = v == survivor;
        }
    }
    let kept: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
    if kept.is_empty() {
        return TwinDeletion {
            graph: Graph::empty(0),
            kept,
        };
    }
    let sub = g
        .induced_subgraph(&kept)
        .expect("kept vertices are a nonempty subset");
    TwinDeletion {
        graph: sub.graph,
        kept,
    }
}

/// Nontrivial classes of the twin-edge relation `N[u] ∪ N[v] = N[x] ∪ N[y]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeTwinPartition {
    pub classes: Vec<Vec<Edge>>,
    pub q: usize,
    pub q_prime: usize,
}

pub fn edge_twin_partition(g: &Graph) -> EdgeTwinPartition {
    let mut groups: BTreeMap<VertexSet, Vec<Edge>> = BTreeMap::new();
    for &e in g.edges() {
        let mut key = g.closed_neighborhood(e.u);
        key.union_with(&g.closed_neighborhood(e.v));
        groups.entry(key).or_default().push(e);
    }
    let mut classes: Vec<Vec<Edge>> = groups.into_values().filter(|c| c.len() >= 2).collect();
    classes.sort_unstable();
    let q: usize = classes.iter().map(Vec::len).sum();
    EdgeTwinPartition {
        q,
        q_prime: q - classes.len(),
        classes,
    }
}

/// Ordered pairs `(u, v)` with `N[v] ⊊ N[u]`, i.e. `v` is a satellite of `u`.
pub fn satellites(g: &Graph) -> Vec<(usize, usize)> {
    let closed: Vec<VertexSet> = (0..g.n()).map(|v| g.closed_neighborhood(v)).collect();
    let mut pairs = Vec::new();
    for u in 0..g.n() {
        for v in 0..g.n() {
            if u != v && closed[v].is_subset(&closed[u]) && closed[v] != closed[u] {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// Leaf and exterior-major-vertex counts of a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub n1: usize,
    pub ex: usize,
    pub is_path: bool,
}

/// A major vertex has degree at least 3; it is exterior when some leaf is
/// closer to it than to any other major vertex. Walking from a leaf through
/// degree-2 vertices reaches that nearest major vertex.
pub fn tree_stats(g: &Graph) -> Result<TreeStats> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let leaves: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    let is_path = (0..g.n()).all(|v| g.degree(v) < 3);
    let mut exterior = vec![false; g.n()];
    if !is_path {
        for &leaf in &leaves {
            let (mut prev, mut cur) = (leaf, g.neighbors(leaf)[0]);
            while g.degree(cur) == 2 {
                let next = g
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .unwrap();
                (prev, cur) = (cur, next);
            }
            exterior[cur] = true;
        }
    }
    Ok(TreeStats {
        n1: leaves.len(),
        ex: exterior.iter().filter(|&&x| x).count(),
        is_path,
    })
}
