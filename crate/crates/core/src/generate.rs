//! Named graph families, seeded random graphs and exhaustive enumeration of
//! small graphs up to isomorphism.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::complete_multipartite;

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are in range")
}

/// `C_n`; `n` must be at least 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parse(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
        .expect("complete graph edges are in range")
}

/// `K_{1,leaves}` with the center at index 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are in range")
}

/// A triangle `0-1-2` with a pendant vertex 3 attached to 2.
pub fn paw() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).expect("paw is simple")
}

pub fn multipartite(parts: &[usize]) -> Result<Graph> {
    complete_multipartite(parts)
}

/// Erdős–Rényi `G(n, p)`: pairs `(a, b)`, `a < b`, in lexicographic order,
/// each kept when a uniform draw falls below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parse(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gnp_with(n, p, &mut rng)
}

pub fn gnp_with(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph> {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen::<f64>() < p {
                pairs.push((a, b));
            }
        }
    }
    Graph::new(n, pairs)
}

/// Uniformly random labeled tree from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut pairs = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        pairs.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    pairs.push((rest[0], rest[1]));
    Graph::new(n, pairs).expect("Prüfer decoding yields a tree")
}

/// Canonical relabeling: two graphs are isomorphic iff their canonical forms
/// are equal.
///
/// Color refinement followed by individualization of one vertex of the first
/// non-singleton cell at a time; the smallest adjacency code over all
/// discrete leaves wins. Twins in a cell are interchangeable by an
/// automorphism, so only one of them is individualized.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let colors = refine(g, vec![0; n]);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search_canonical(g, colors, &mut best);
    let (_, perm) = best.expect("at least one leaf");
    g.relabel(&perm)
}

fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut classes = count_distinct(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        colors = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let now = distinct.len();
        if now == classes {
            return colors;
        }
        classes = now;
    }
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn adjacency_code(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = g.n();
    let mut bits = vec![0u64; (n * n).div_ceil(64)];
    for (a, b) in g.edge_pairs() {
        let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
        let k = x * n + y;
        bits[k / 64] |= 1 << (63 - k % 64);
    }
    bits
}

fn search_canonical(g: &Graph, colors: Vec<usize>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let n = g.n();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let code = adjacency_code(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colors));
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        let twin_of_tried = tried.iter().any(|&w| {
            g.open_neighborhood(v) == g.open_neighborhood(w)
                || g.closed_neighborhood(v) == g.closed_neighborhood(w)
        });
        if twin_of_tried {
            continue;
        }
        tried.push(v);
        let split: Vec<usize> = (0..n)
            .map(|x| {
                let c = colors[x] * 2;
                if colors[x] == target && x != v {
                    c + 1
                } else {
                    c
                }
            })
            .collect();
        search_canonical(g, refine(g, split), best);
    }
}

fn dedup_canonical(candidates: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let unique: HashSet<Graph> = candidates.into_iter().map(|g| canonical_form(&g)).collect();
    let mut out: Vec<Graph> = unique.into_iter().collect();
    out.sort_by(|a, b| a.m().cmp(&b.m()).then_with(|| a.edges().cmp(b.edges())));
    out
}

fn extend_by_vertex(base: &[Graph], connected_only: bool) -> Vec<Graph> {
    let mut candidates = Vec::new();
    for g in base {
        let n = g.n();
        let first = if connected_only { 1 } else { 0 };
        for mask in first..1u64 << n {
            let new_edges = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n));
            candidates.push(
                Graph::new(n + 1, g.edge_pairs().chain(new_edges)).expect("extension is simple"),
            );
        }
    }
    dedup_canonical(candidates)
}

/// All graphs on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(n.min(1))];
    for _ in 1..n {
        level = extend_by_vertex(&level, false);
    }
    level
}

/// All connected graphs on `n >= 1` vertices up to isomorphism. Every
/// connected graph has a vertex whose removal keeps it connected, so
/// extending connected graphs by a vertex with a nonempty neighborhood
/// reaches all of them.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(n.min(1))];
    for _ in 1..n {
        level = extend_by_vertex(&level, true);
    }
    level
}

/// All trees on `n >= 1` vertices up to isomorphism.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(n.min(1))];
    for _ in 1..n {
        let mut candidates = Vec::new();
        for t in &level {
            let k = t.n();
            for v in 0..k {
                candidates.push(
                    Graph::new(k + 1, t.edge_pairs().chain([(v, k)])).expect("leaf is simple"),
                );
            }
        }
        level = dedup_canonical(candidates);
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        assert_eq!(
            path(4).edge_pairs().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        assert_eq!(cycle(5).unwrap().m(), 5);
        assert!(cycle(2).is_err());
        assert_eq!(complete(5).m(), 10);
        assert_eq!(star(4).degree(0), 4);
        assert_eq!(multipartite(&[2, 3]).unwrap().m(), 6);
    }

    #[test]
    fn gnp_is_seeded() {
        assert_eq!(gnp(6, 0.5, 7).unwrap(), gnp(6, 0.5, 7).unwrap());
        assert_eq!(gnp(6, 0.0, 1).unwrap().m(), 0);
        assert_eq!(gnp(6, 1.0, 1).unwrap().m(), 15);
        assert!(gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..12 {
            assert!(random_tree(n, &mut rng).is_tree());
        }
    }

    #[test]
    fn canonical_form_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let n = rng.gen_range(1..9);
            let g = gnp_with(n, 0.4, &mut rng).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
        }
        assert_ne!(canonical_form(&path(4)), canonical_form(&star(3)));
    }

    #[test]
    fn known_counts() {
        // Unlabeled graphs, connected graphs and trees by order.
        let graphs: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(graphs, vec![1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
        let tree_counts: Vec<usize> = (1..=9).map(|n| trees(n).len()).collect();
        assert_eq!(tree_counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }
}
