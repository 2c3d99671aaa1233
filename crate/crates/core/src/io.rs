//! Edge-list and graph6 text formats.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based endpoints. graph6 follows the standard encoding: a size
//! prefix, then the upper triangle of the adjacency matrix in column order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed big-endian into 6-bit
//! groups, each offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_OFFSET: u8 = 63;
const G6_HEADER: &str = ">>graph6<<";

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {t:?}")))
    });
    let mut next = |what: &str| {
        tokens
            .next()
            .unwrap_or_else(|| Err(Error::Parse(format!("missing {what}"))))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let u = next("edge endpoint")?;
        let v = next("edge endpoint")?;
        pairs.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(Error::Parse(format!("more than the declared {m} edges")));
    }
    Graph::new(n, pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edge_pairs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + G6_OFFSET);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + G6_OFFSET);
        }
    } else {
        assert!(n < 1 << 36, "graph6 cannot encode {n} vertices");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + G6_OFFSET);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + G6_OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + G6_OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(b: u8) -> Result<usize> {
    if !(63..=126).contains(&b) {
        return Err(Error::Parse(format!("invalid graph6 byte {b:#04x}")));
    }
    Ok((b - G6_OFFSET) as usize)
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn read_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let bytes = line.strip_prefix(G6_HEADER).unwrap_or(line).as_bytes();
    let (n, body) = match bytes {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("truncated graph6 size".into()));
            }
            let mut n = 0;
            for &b in &rest[..6] {
                n = (n << 6) | sextet(b)?;
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("truncated graph6 size".into()));
            }
            let mut n = 0;
            for &b in &rest[..3] {
                n = (n << 6) | sextet(b)?;
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => (sextet(*first)?, rest),
        [] => return Err(Error::Parse("empty graph6 string".into())),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {expected} for {n} vertices",
            body.len()
        )));
    }
    let values = body
        .iter()
        .map(|&b| sextet(b))
        .collect::<Result<Vec<_>>>()?;
    let bit = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Parse("nonzero graph6 padding bits".into()));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, pairs)
}
