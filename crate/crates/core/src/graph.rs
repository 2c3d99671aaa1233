//! Simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// An edge stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn has_endpoint(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

/// Serialized as the pair `[u, v]`.
impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.u, self.v).serialize(s)
    }
}

/// Simple undirected graph with vertices `0..n`.
///
/// The edge list is sorted lexicographically and neighbor lists ascend, so
/// the edge index of `(u, v)` is its rank among all edges. Neighborhoods are
/// also kept as bitsets for constant-time equality tests.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
    open: Vec<VertexSet>,
}

impl Graph {
    /// Builds a normalized graph, dropping duplicate and reversed pairs.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); n];
        let mut open = vec![VertexSet::new(n); n];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
            open[e.u].insert(e.v);
            open[e.v].insert(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
            open,
        })
    }

    /// The edgeless graph `N_n`.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|e| (e.u, e.v))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.open[a].contains(b)
    }

    /// Index of edge `{a, b}` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    /// `N(v)` as a bitset.
    pub fn open_neighborhood(&self, v: usize) -> &VertexSet {
        &self.open[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.open[v].clone();
        s.insert(v);
        s
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adjacency[v].is_empty()
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n
    }

    /// Subgraph induced by `vertices`, relabeled in ascending order of the
    /// original indices.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut new_to_old = vertices.to_vec();
        new_to_old.sort_unstable();
        new_to_old.dedup();
        if let Some(&vertex) = new_to_old.last().filter(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        let mut old_to_new = vec![None; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let pairs = self
            .edges
            .iter()
            .filter_map(|e| Some((old_to_new[e.u]?, old_to_new[e.v]?)));
        let graph = Graph::new(new_to_old.len(), pairs)?;
        Ok(InducedSubgraph {
            graph,
            new_to_old,
            old_to_new,
        })
    }

    /// `self ⊎ other`, with `other` shifted to indices `n(self)..`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let pairs = self
            .edge_pairs()
            .chain(other.edge_pairs().map(|(a, b)| (a + shift, b + shift)));
        Graph::new(self.n + other.n, pairs).expect("shifted edges stay in range")
    }

    /// Applies a vertex relabeling `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edge_pairs().map(|(a, b)| (perm[a], perm[b])))
            .expect("permutation keeps the graph simple")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub new_to_old: Vec<usize>,
    pub old_to_new: Vec<Option<usize>>,
}
