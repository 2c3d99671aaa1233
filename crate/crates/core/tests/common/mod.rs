//! Reference implementations built straight from the definitions, sharing
//! nothing with the library beyond `Graph` itself.

#![allow(dead_code)]

use edim::Graph;
use proptest::prelude::*;

pub const INF: u32 = u32::MAX;

/// Floyd–Warshall over the adjacency matrix.
pub fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (a, b) in g.edge_pairs() {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

fn edge_dist(d: &[Vec<u32>], (a, b): (usize, usize), w: usize) -> u32 {
    d[w][a].min(d[w][b])
}

/// Does `s` tell every pair of edges in `edges` apart?
pub fn separates(d: &[Vec<u32>], edges: &[(usize, usize)], s: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    edges
        .iter()
        .all(|&e| seen.insert(s.iter().map(|&w| edge_dist(d, e, w)).collect::<Vec<_>>()))
}

/// Calls `f` on every `k`-subset of `items` in lexicographic order until it
/// returns true.
pub fn any_subset(items: &[usize], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            if rec(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, k, 0, &mut Vec::new(), f)
}

/// All `k`-subsets of `items` in lexicographic order.
pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    any_subset(items, k, &mut |s| {
        out.push(s.to_vec());
        false
    });
    out
}

fn components(g: &Graph) -> Vec<Vec<usize>> {
    let d = floyd(g);
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for v in 0..g.n() {
        if !seen[v] {
            let comp: Vec<usize> = (0..g.n()).filter(|&u| d[v][u] != INF).collect();
            for &u in &comp {
                seen[u] = true;
            }
            out.push(comp);
        }
    }
    out
}

/// Smallest nonempty separating subset of one component's vertices.
fn component_edim(d: &[Vec<u32>], vertices: &[usize], edges: &[(usize, usize)]) -> usize {
    (1..=vertices.len())
        .find(|&k| any_subset(vertices, k, &mut |s| separates(d, edges, s)))
        .expect("the whole vertex set separates")
}

/// edim by exhaustive subset search, summed over components that have
/// edges.
pub fn oracle_edim(g: &Graph) -> usize {
    let d = floyd(g);
    components(g)
        .iter()
        .map(|comp| {
            let edges: Vec<(usize, usize)> =
                g.edge_pairs().filter(|&(a, _)| comp.contains(&a)).collect();
            if edges.is_empty() {
                0
            } else {
                component_edim(&d, comp, &edges)
            }
        })
        .sum()
}

/// All minimum separating sets of a connected graph with edges.
pub fn oracle_all_bases(g: &Graph) -> Vec<Vec<usize>> {
    let d = floyd(g);
    let edges: Vec<(usize, usize)> = g.edge_pairs().collect();
    let all: Vec<usize> = (0..g.n()).collect();
    let k = component_edim(&d, &all, &edges);
    subsets(&all, k)
        .into_iter()
        .filter(|s| separates(&d, &edges, s))
        .collect()
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut pairs = Vec::new();
    let mut i = 0;
    for a in 0..n {
        for b in a + 1..n {
            if bits[i] {
                pairs.push((a, b));
            }
            i += 1;
        }
    }
    Graph::new(n, pairs).unwrap()
}

/// Arbitrary graphs with `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Arbitrary connected graphs: a random tree on `lo..=hi` vertices plus
/// random extra edges.
pub fn arb_connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo.max(1)..=hi).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        (
            parents,
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, bits)| {
                let extra = graph_from_bits(n, &bits);
                let tree = parents.iter().enumerate().map(|(i, &p)| (p, i + 1));
                Graph::new(n, tree.chain(extra.edge_pairs())).unwrap()
            })
    })
}
