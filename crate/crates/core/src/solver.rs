//! Exact edge metric dimension.
//!
//! A vertex set is an edge metric generator when, for every two distinct
//! edges, some member lies at different distances from them. Each pair of
//! edges therefore yields one constraint (the vertices that distinguish it)
//! and a minimum generator is a minimum hitting set of those constraints.
//!
//! Components are solved independently and the results summed. A component
//! with edges needs at least one vertex even when it has a single edge,
//! since a generator is nonempty; edgeless components contribute nothing.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::distance::{all_pairs_distances, vertex_edge_distance};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::hitting::HittingSetInstance;

/// Distances from every vertex to every edge, row-major by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDistanceTable {
    n: usize,
    m: usize,
    dist: Vec<u32>,
}

impl EdgeDistanceTable {
    #[inline]
    pub fn get(&self, w: usize, e: usize) -> u32 {
        self.dist[w * self.m + e]
    }

    pub fn row(&self, w: usize) -> &[u32] {
        &self.dist[w * self.m..(w + 1) * self.m]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

pub fn edge_distance_table(g: &Graph) -> EdgeDistanceTable {
    let d = all_pairs_distances(g);
    let mut dist = Vec::with_capacity(g.n() * g.m());
    for w in 0..g.n() {
        dist.extend(g.edges().iter().map(|&e| vertex_edge_distance(&d, e, w)));
    }
    EdgeDistanceTable {
        n: g.n(),
        m: g.m(),
        dist,
    }
}

#[inline]
pub fn distinguishes(t: &EdgeDistanceTable, w: usize, e1: usize, e2: usize) -> bool {
    t.get(w, e1) != t.get(w, e2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorCheck {
    Generator,
    /// Two edges that no member of the set tells apart.
    Undistinguished(Edge, Edge),
}

impl GeneratorCheck {
    pub fn is_generator(&self) -> bool {
        matches!(self, GeneratorCheck::Generator)
    }
}

pub fn is_edge_metric_generator(g: &Graph, s: &[usize]) -> Result<GeneratorCheck> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if let Some(&vertex) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex, n: g.n() });
    }
    let t = edge_distance_table(g);
    Ok(check_with_table(g, &t, s))
}

fn check_with_table(g: &Graph, t: &EdgeDistanceTable, s: &[usize]) -> GeneratorCheck {
    let mut seen = std::collections::HashMap::with_capacity(g.m());
    for e in 0..g.m() {
        let signature: Vec<u32> = s.iter().map(|&w| t.get(w, e)).collect();
        if let Some(&first) = seen.get(&signature) {
            return GeneratorCheck::Undistinguished(g.edges()[first], g.edges()[e]);
        }
        seen.insert(signature, e);
    }
    GeneratorCheck::Generator
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    /// Proven minimum.
    Exact,
    /// A verified generator whose minimality was not established.
    GreedyUpper,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdimResult {
    pub value: usize,
    /// Lexicographically smallest minimum basis when `method` is exact.
    pub basis: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_bases: Option<Vec<Vec<usize>>>,
    /// True when `all_bases` was cut short by its cap.
    pub all_bases_truncated: bool,
    /// Number of unordered edge pairs the basis distinguishes.
    pub pairs_total: usize,
    pub method: Method,
}

#[derive(Debug, Clone, Default)]
pub struct SolverOptions {
    /// Wall-clock budget for the exact search; `None` means unlimited.
    pub time_budget: Option<Duration>,
    /// Enumerate up to this many minimum bases.
    pub all_bases_cap: Option<usize>,
}

/// One connected component that has at least one edge, as a hitting set
/// instance over its local vertex indices.
struct ComponentProblem {
    vertices: Vec<usize>,
    instance: HittingSetInstance,
}

impl ComponentProblem {
    fn to_global(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&v| self.vertices[v]).collect()
    }

    /// With no edge pairs to separate, any single vertex is a minimum
    /// generator.
    fn trivial(&self) -> bool {
        self.instance.constraints().is_empty()
    }
}

fn component_problems(g: &Graph) -> Vec<ComponentProblem> {
    let mut out = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp).expect("components are nonempty");
        let h = &sub.graph;
        if h.m() == 0 {
            continue;
        }
        let t = edge_distance_table(h);
        let mut constraints = Vec::with_capacity(h.m() * (h.m() - 1) / 2);
        for e1 in 0..h.m() {
            for e2 in e1 + 1..h.m() {
                let cover = (0..h.n()).filter(|&w| distinguishes(&t, w, e1, e2));
                constraints.push(VertexSet::from_indices(h.n(), cover));
            }
        }
        out.push(ComponentProblem {
            vertices: sub.new_to_old,
            instance: HittingSetInstance::new(h.n(), constraints),
        });
    }
    out
}

fn pairs_total(g: &Graph) -> usize {
    g.m() * g.m().saturating_sub(1) / 2
}

/// Greedy set-cover upper bound.
pub fn edim_greedy_upper(g: &Graph) -> EdimResult {
    let mut basis = Vec::new();
    for p in component_problems(g) {
        if p.trivial() {
            basis.push(p.vertices[0]);
        } else {
            basis.extend(p.to_global(&p.instance.greedy()));
        }
    }
    basis.sort_unstable();
    EdimResult {
        value: basis.len(),
        basis,
        all_bases: None,
        all_bases_truncated: false,
        pairs_total: pairs_total(g),
        method: Method::GreedyUpper,
    }
}

pub fn edim_exact(g: &Graph) -> EdimResult {
    edim_exact_with(g, &SolverOptions::default())
}

/// Exact edge metric dimension. If the time budget runs out the best
/// generator found so far is returned with [`Method::GreedyUpper`].
pub fn edim_exact_with(g: &Graph, opts: &SolverOptions) -> EdimResult {
    let deadline = opts.time_budget.map(|b| Instant::now() + b);
    let problems = component_problems(g);
    let mut basis = Vec::new();
    let mut proven = true;
    let mut per_component_bases = Vec::new();
    let mut truncated = false;
    for p in &problems {
        if p.trivial() {
            basis.push(p.vertices[0]);
            if opts.all_bases_cap.is_some() {
                per_component_bases.push(p.vertices.iter().map(|&v| vec![v]).collect());
            }
            continue;
        }
        let inst = &p.instance;
        let opt = inst.minimum(inst.greedy(), deadline);
        let local = if opt.proven {
            inst.lex_smallest(opt.solution.len(), deadline)
        } else {
            None
        };
        match local {
            Some(lex) => basis.extend(p.to_global(&lex)),
            None => {
                proven = false;
                basis.extend(p.to_global(&opt.solution));
            }
        }
        if let (Some(cap), true) = (opts.all_bases_cap, proven) {
            let found = inst.enumerate(opt.solution.len(), cap);
            truncated |= found.cap_hit;
            per_component_bases.push(found.solutions.iter().map(|b| p.to_global(b)).collect());
        }
    }
    basis.sort_unstable();
    let all_bases = match opts.all_bases_cap {
        Some(cap) if proven => {
            let (bases, cut) = combine_bases(&per_component_bases, cap);
            truncated |= cut;
            Some(bases)
        }
        _ => None,
    };
    EdimResult {
        value: basis.len(),
        basis,
        all_bases,
        all_bases_truncated: truncated,
        pairs_total: pairs_total(g),
        method: if proven {
            Method::Exact
        } else {
            Method::GreedyUpper
        },
    }
}

/// Unions of one basis per component, sorted, at most `cap` of them.
fn combine_bases(per_component: &[Vec<Vec<usize>>], cap: usize) -> (Vec<Vec<usize>>, bool) {
    let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
    let mut cut = false;
    for options in per_component {
        let mut next = Vec::new();
        'outer: for prefix in &acc {
            for b in options {
                if next.len() == cap {
                    cut = true;
                    break 'outer;
                }
                let mut joined = prefix.clone();
                joined.extend(b);
                next.push(joined);
            }
        }
        acc = next;
    }
    for b in &mut acc {
        b.sort_unstable();
    }
    acc.sort();
    (acc, cut)
}

/// Every minimum edge metric basis, in lexicographic order, up to `cap`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimumBases {
    pub value: usize,
    pub bases: Vec<Vec<usize>>,
    pub cap_hit: bool,
}

pub fn enumerate_all_minimum_bases(g: &Graph, cap: usize) -> MinimumBases {
    let r = edim_exact_with(
        g,
        &SolverOptions {
            time_budget: None,
            all_bases_cap: Some(cap),
        },
    );
    MinimumBases {
        value: r.value,
        bases: r.all_bases.unwrap_or_default(),
        cap_hit: r.all_bases_truncated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn table_examples() {
        let t = edge_distance_table(&complete(2));
        assert_eq!((t.row(0), t.row(1)), (&[0][..], &[0][..]));
        let t = edge_distance_table(&path(3));
        assert_eq!(t.row(0), &[0, 1]);
        assert_eq!(t.row(1), &[0, 0]);
        assert_eq!(t.row(2), &[1, 0]);
        let t = edge_distance_table(&cycle(4));
        for w in 0..4 {
            assert_eq!(t.row(w).iter().filter(|&&d| d == 0).count(), 2);
            assert!(t.row(w).iter().all(|&d| d <= 1));
        }
        assert_eq!(edge_distance_table(&Graph::empty(3)).m(), 0);
    }

    #[test]
    fn distinguishes_examples() {
        let t = edge_distance_table(&path(3));
        assert!(!distinguishes(&t, 0, 1, 1));
        assert!(distinguishes(&t, 0, 0, 1));
        let t = edge_distance_table(&complete(3));
        // Edges (0,1) and (0,2) are indices 0 and 1.
        assert!(!distinguishes(&t, 0, 0, 1));
    }

    #[test]
    fn generator_examples() {
        let k3 = complete(3);
        for s in [[0, 1], [0, 2], [1, 2]] {
            assert!(is_edge_metric_generator(&k3, &s).unwrap().is_generator());
        }
        for v in 0..3 {
            assert!(!is_edge_metric_generator(&k3, &[v]).unwrap().is_generator());
        }
        assert!(is_edge_metric_generator(&path(4), &[0])
            .unwrap()
            .is_generator());
        assert_eq!(
            is_edge_metric_generator(&k3, &[]),
            Err(Error::EmptyVertexSet)
        );
        assert_eq!(
            is_edge_metric_generator(&complete(3), &[0]).unwrap(),
            GeneratorCheck::Undistinguished(Edge::new(0, 1), Edge::new(0, 2))
        );
    }

    #[test]
    fn exact_examples() {
        let r = edim_exact(&complete(4));
        assert_eq!((r.value, r.method), (3, Method::Exact));
        assert_eq!(r.basis, vec![0, 1, 2]);
        let r = edim_exact(&path(4));
        assert_eq!((r.value, r.basis.clone()), (1, vec![0]));
        assert_eq!(r.pairs_total, 3);
        let two = path(4).disjoint_union(&path(4));
        let r = edim_exact(&two);
        assert_eq!((r.value, r.basis.clone()), (2, vec![0, 4]));
        assert!(is_edge_metric_generator(&two, &r.basis)
            .unwrap()
            .is_generator());
    }

    #[test]
    fn edgeless_and_single_edge() {
        assert_eq!(edim_exact(&Graph::empty(3)).value, 0);
        assert_eq!(edim_exact(&Graph::empty(3)).basis, Vec::<usize>::new());
        assert_eq!(edim_greedy_upper(&Graph::empty(3)).value, 0);
        let k2 = complete(2);
        assert_eq!(edim_exact(&k2).basis, vec![0]);
        let r = edim_exact(&Graph::new(5, [(1, 2), (3, 4)]).unwrap());
        assert_eq!((r.value, r.basis), (2, vec![1, 3]));
    }

    #[test]
    fn greedy_examples() {
        let r = edim_greedy_upper(&complete(3));
        assert!(r.value <= 2);
        assert!(is_edge_metric_generator(&complete(3), &r.basis)
            .unwrap()
            .is_generator());
        let r = edim_greedy_upper(&path(4));
        assert!((1..=2).contains(&r.value));
        assert!(is_edge_metric_generator(&path(4), &r.basis)
            .unwrap()
            .is_generator());
        assert_eq!(r.method, Method::GreedyUpper);
    }

    #[test]
    fn enumeration_examples() {
        let all = enumerate_all_minimum_bases(&complete(3), 100);
        assert_eq!(all.bases, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let all = enumerate_all_minimum_bases(&path(4), 100);
        assert_eq!(all.bases, vec![vec![0], vec![3]]);
        let all = enumerate_all_minimum_bases(&star(3), 100);
        assert_eq!(all.value, 2);
        assert_eq!(all.bases, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let capped = enumerate_all_minimum_bases(&complete(5), 3);
        assert_eq!(capped.bases.len(), 3);
        assert!(capped.cap_hit);
    }

    #[test]
    fn enumeration_across_components() {
        let g = path(4).disjoint_union(&complete(2));
        let all = enumerate_all_minimum_bases(&g, 100);
        assert_eq!(
            all.bases,
            vec![vec![0, 4], vec![0, 5], vec![3, 4], vec![3, 5]]
        );
    }

    #[test]
    fn zero_budget_falls_back_to_upper_bound() {
        let g = complete(6);
        let r = edim_exact_with(
            &g,
            &SolverOptions {
                time_budget: Some(Duration::ZERO),
                all_bases_cap: None,
            },
        );
        assert!(is_edge_metric_generator(&g, &r.basis)
            .unwrap()
            .is_generator());
        assert!(r.value >= 5);
    }
}
