//! Hop distances and the vertex-to-edge distance.

use std::collections::VecDeque;

use crate::graph::{Edge, Graph};

/// Distance between vertices in different components.
///
/// Compares greater than every finite distance and equal to itself, so
/// "differs" stays well defined on disconnected graphs.
pub const UNREACHABLE: u32 = u32::MAX;

/// Single-source breadth-first distances from `source`.
pub fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        let next = dist[x] + 1;
        for &y in g.neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = next;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// All-pairs hop distances, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.n + b]
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.dist[a * self.n..(a + 1) * self.n]
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<Option<u32>>> = (0..self.n)
            .map(|a| {
                self.row(a)
                    .iter()
                    .map(|&d| (d != UNREACHABLE).then_some(d))
                    .collect()
            })
            .collect();
        f.debug_struct("DistanceMatrix")
            .field("rows", &rows)
            .finish()
    }
}

/// Breadth-first search from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut dist = Vec::with_capacity(n * n);
    for s in 0..n {
        dist.extend(bfs(g, s));
    }
    DistanceMatrix { n, dist }
}

/// `d(e, w) = min(d(u, w), d(v, w))` for `e = uv`.
#[inline]
pub fn vertex_edge_distance(d: &DistanceMatrix, e: Edge, w: usize) -> u32 {
    d.get(e.u, w).min(d.get(e.v, w))
}
