//! Join, lexicographic, corona and complete multipartite constructions.
//!
//! Index layouts are fixed so that reports can refer to product vertices
//! by number:
//!
//! * join `G ∨ H`: `G` keeps `0..|G|`, `H` vertex `h` becomes `|G| + h`.
//! * lexicographic `G[H]`: `(g, h)` becomes `g·|H| + h`.
//! * corona `G ⊙ H`: `g` keeps its index, copy vertex `i` of `H_g` becomes
//!   `|G| + g·|H| + i`.
//! * multipartite: parts occupy consecutive index ranges in input order.

use crate::distance::{bfs, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex `(g, h)` of a lexicographic product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LexVertex {
    pub g: usize,
    pub h: usize,
}

impl LexVertex {
    pub fn flat(self, h_order: usize) -> usize {
        self.g * h_order + self.h
    }

    pub fn from_flat(index: usize, h_order: usize) -> Self {
        LexVertex {
            g: index / h_order,
            h: index % h_order,
        }
    }
}

/// A vertex of a corona product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoronaVertex {
    Base(usize),
    /// Vertex `i` of the copy `H_g` attached to `g`.
    Copy {
        g: usize,
        i: usize,
    },
}

impl CoronaVertex {
    pub fn flat(self, g_order: usize, h_order: usize) -> usize {
        match self {
            CoronaVertex::Base(g) => g,
            CoronaVertex::Copy { g, i } => g_order + g * h_order + i,
        }
    }

    pub fn from_flat(index: usize, g_order: usize, h_order: usize) -> Self {
        if index < g_order {
            CoronaVertex::Base(index)
        } else {
            let k = index - g_order;
            CoronaVertex::Copy {
                g: k / h_order,
                i: k % h_order,
            }
        }
    }
}

fn require_nonempty(g: &Graph, which: &'static str) -> Result<()> {
    if g.n() == 0 {
        Err(Error::EmptyFactor(which))
    } else {
        Ok(())
    }
}

pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    require_nonempty(g, "first")?;
    require_nonempty(h, "second")?;
    let shift = g.n();
    let cross = (0..g.n()).flat_map(|a| (0..h.n()).map(move |b| (a, shift + b)));
    let pairs = g
        .edge_pairs()
        .chain(h.edge_pairs().map(|(a, b)| (a + shift, b + shift)))
        .chain(cross);
    Graph::new(g.n() + h.n(), pairs)
}

/// `(g,h) ~ (g',h')` iff `gg' ∈ E(G)`, or `g = g'` and `hh' ∈ E(H)`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<Graph> {
    require_nonempty(g, "first")?;
    require_nonempty(h, "second")?;
    let k = h.n();
    let at = |g, h| LexVertex { g, h }.flat(k);
    let mut pairs = Vec::with_capacity(g.m() * k * k + g.n() * h.m());
    for (a, b) in g.edge_pairs() {
        for x in 0..k {
            for y in 0..k {
                pairs.push((at(a, x), at(b, y)));
            }
        }
    }
    for layer in 0..g.n() {
        pairs.extend(h.edge_pairs().map(|(x, y)| (at(layer, x), at(layer, y))));
    }
    Graph::new(g.n() * k, pairs)
}

/// Distance in `G[H]` without building the product.
///
/// Uses `d_G(g, g')` across layers and `min(2, d_H(h, h'))` inside a layer
/// whose base vertex has a neighbor in `G`. Inside the layer of an isolated
/// base vertex the layer is its own component, so `d_H` is returned as is.
pub fn lex_distance(dg: &DistanceMatrix, h: &Graph, a: LexVertex, b: LexVertex) -> u32 {
    if a.g != b.g {
        return dg.get(a.g, b.g);
    }
    if a.h == b.h {
        return 0;
    }
    if h.has_edge(a.h, b.h) {
        return 1;
    }
    let base_has_neighbor = (0..dg.n()).any(|x| dg.get(a.g, x) == 1);
    if base_has_neighbor {
        2
    } else {
        let d = bfs(h, a.h)[b.h];
        debug_assert!(d >= 2);
        d
    }
}

pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    require_nonempty(g, "first")?;
    require_nonempty(h, "second")?;
    let (n1, n2) = (g.n(), h.n());
    let at = |base, i| CoronaVertex::Copy { g: base, i }.flat(n1, n2);
    let mut pairs: Vec<(usize, usize)> = g.edge_pairs().collect();
    for base in 0..n1 {
        pairs.extend(h.edge_pairs().map(|(x, y)| (at(base, x), at(base, y))));
        pairs.extend((0..n2).map(|i| (base, at(base, i))));
    }
    Graph::new(n1 + n1 * n2, pairs)
}

/// `K_{r1,...,rt} = N_{r1} ∨ (N_{r2} ∨ ...)`.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::TooFewParts { min: 1, got: 0 });
    }
    if parts.contains(&0) {
        return Err(Error::ZeroPart);
    }
    let mut acc = Graph::empty(*parts.last().unwrap());
    for &r in parts.iter().rev().skip(1) {
        acc = join(&Graph::empty(r), &acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::all_pairs_distances;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn join_examples() {
        assert_eq!(
            join(&Graph::empty(1), &Graph::empty(1)).unwrap(),
            complete(2)
        );
        let k23 = join(&Graph::empty(2), &Graph::empty(3)).unwrap();
        assert_eq!(k23.m(), 6);
        assert!(!k23.has_edge(0, 1) && !k23.has_edge(2, 3) && k23.has_edge(1, 4));
        let wheel = join(&Graph::empty(1), &cycle(4)).unwrap();
        assert_eq!((wheel.n(), wheel.m()), (5, 8));
        assert_eq!(
            join(&Graph::empty(0), &cycle(4)),
            Err(Error::EmptyFactor("first"))
        );
    }

    #[test]
    fn lexicographic_examples() {
        assert_eq!(
            lexicographic(&complete(2), &Graph::empty(1)).unwrap(),
            complete(2)
        );
        let p3n2 = lexicographic(&path(3), &Graph::empty(2)).unwrap();
        assert_eq!((p3n2.n(), p3n2.m()), (6, 8));
        // K2[N2] is K4 minus a perfect matching: the 4-cycle 0-2-1-3-0.
        let c4 = lexicographic(&complete(2), &Graph::empty(2)).unwrap();
        assert_eq!(c4, Graph::new(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap());
    }

    #[test]
    fn lex_distance_examples() {
        let p3 = path(3);
        let n2 = Graph::empty(2);
        let dg = all_pairs_distances(&p3);
        let v = |g, h| LexVertex { g, h };
        assert_eq!(lex_distance(&dg, &n2, v(0, 1), v(0, 1)), 0);
        assert_eq!(lex_distance(&dg, &n2, v(0, 0), v(2, 1)), 2);
        assert_eq!(lex_distance(&dg, &n2, v(1, 0), v(1, 1)), 2);
        let product = all_pairs_distances(&lexicographic(&p3, &n2).unwrap());
        assert_eq!(product.get(v(1, 0).flat(2), v(1, 1).flat(2)), 2);
    }

    #[test]
    fn lex_distance_isolated_base_vertex() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let h = path(3);
        let dg = all_pairs_distances(&g);
        let product = all_pairs_distances(&lexicographic(&g, &h).unwrap());
        for a in 0..9 {
            for b in 0..9 {
                let (x, y) = (LexVertex::from_flat(a, 3), LexVertex::from_flat(b, 3));
                assert_eq!(
                    lex_distance(&dg, &h, x, y),
                    product.get(a, b),
                    "{x:?} {y:?}"
                );
            }
        }
    }

    #[test]
    fn corona_examples() {
        assert_eq!(
            corona(&path(2), &Graph::empty(1))
                .unwrap()
                .relabel(&[1, 2, 0, 3]),
            path(4)
        );
        let h = cycle(4);
        assert_eq!(
            corona(&Graph::empty(1), &h).unwrap(),
            join(&Graph::empty(1), &h).unwrap()
        );
        let c = corona(&path(3), &complete(2)).unwrap();
        assert_eq!((c.n(), c.m()), (9, 11));
        assert!(c.has_edge(1, CoronaVertex::Copy { g: 1, i: 0 }.flat(3, 2)));
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap(), complete(3));
        assert_eq!(
            complete_multipartite(&[2, 3]).unwrap(),
            join(&Graph::empty(2), &Graph::empty(3)).unwrap()
        );
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().m(), 12);
        assert_eq!(complete_multipartite(&[2, 0]), Err(Error::ZeroPart));
    }

    #[test]
    fn flat_index_bijections() {
        for idx in 0..12 {
            assert_eq!(LexVertex::from_flat(idx, 4).flat(4), idx);
            assert_eq!(CoronaVertex::from_flat(idx, 3, 3).flat(3, 3), idx);
        }
        assert_eq!(
            CoronaVertex::from_flat(5, 3, 2),
            CoronaVertex::Copy { g: 1, i: 0 }
        );
    }
}
