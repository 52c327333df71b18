//! Graph abstractions shared by the search engine.
//!
//! [`Graph`] is an adjacency oracle; confusion graphs implement it without
//! ever materializing their edges. [`BitGraph`] is the explicit bit-matrix
//! form used by the exact solvers and by the `.elg` edge-list format.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {order} vertices, above the limit of {limit}")]
    SizeOverLimit { order: usize, limit: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Adjacency oracle over vertices `0..order()`.
pub trait Graph: Sync {
    fn order(&self) -> usize;

    fn adjacent(&self, u: usize, v: usize) -> bool;

    fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| v != u && self.adjacent(u, v))
            .collect()
    }

    fn degree(&self, u: usize) -> usize {
        self.neighbors(u).len()
    }

    /// True when every vertex can be mapped onto vertex 0 by an automorphism.
    /// Exact searches then fix vertex 0 in the solution.
    fn is_vertex_transitive(&self) -> bool {
        false
    }
}

/// Fixed-capacity bit set over `0..len`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitSet {
    pub fn from_items(len: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::new(len);
        for i in items {
            s.insert(i);
        }
        s
    }
}

/// Explicit simple undirected graph stored as adjacency bit rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitGraph {
    rows: Vec<BitSet>,
    transitive: bool,
}

impl fmt::Debug for BitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitGraph(n={}, m={})", self.order(), self.edge_count())
    }
}

impl BitGraph {
    pub fn empty(n: usize) -> Self {
        BitGraph {
            rows: vec![BitSet::new(n); n],
            transitive: false,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Copies the adjacency of any oracle graph, refusing above `limit`
    /// vertices.
    pub fn materialize<G: Graph + ?Sized>(g: &G, limit: usize) -> Result<Self, GraphError> {
        let n = g.order();
        if n > limit {
            return Err(GraphError::SizeOverLimit { order: n, limit });
        }
        let mut rows = vec![BitSet::new(n); n];
        for (u, row) in rows.iter_mut().enumerate() {
            for v in g.neighbors(u) {
                row.insert(v);
            }
        }
        Ok(BitGraph {
            rows,
            transitive: g.is_vertex_transitive(),
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self loop");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn row(&self, u: usize) -> &BitSet {
        &self.rows[u]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, row) in self.rows.iter().enumerate() {
            out.extend(row.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> BitGraph {
        let n = self.order();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(u, row)| {
                let mut c = BitSet::full(n);
                c.difference_with(row);
                c.remove(u);
                c
            })
            .collect();
        BitGraph {
            rows,
            transitive: self.transitive,
        }
    }

    /// Subgraph induced on `vertices`, relabelled `0..vertices.len()` in order.
    pub fn induced(&self, vertices: &[usize]) -> BitGraph {
        let mut g = BitGraph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.rows[u].contains(v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn with_vertex_transitive(mut self, flag: bool) -> Self {
        self.transitive = flag;
        self
    }

    /// `.elg` edge list: `vertices <n>` then `edge <u> <v>` (1-indexed).
    pub fn to_elg(&self) -> String {
        let mut out = format!("vertices {}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("edge {} {}\n", u + 1, v + 1));
        }
        out
    }

    pub fn parse_elg(text: &str) -> Result<BitGraph, GraphError> {
        let mut g: Option<BitGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: String| GraphError::Parse { line, msg };
            let toks: Vec<&str> = content.split_whitespace().collect();
            let num = |s: &str| -> Result<usize, GraphError> {
                s.parse().map_err(|_| err(format!("bad number `{s}`")))
            };
            match toks.as_slice() {
                ["vertices", n] if g.is_none() => g = Some(BitGraph::empty(num(n)?)),
                ["edge", u, v] => {
                    let graph = g.as_mut().ok_or_else(|| err("edge before header".into()))?;
                    let (u, v) = (num(u)?, num(v)?);
                    let n = graph.order();
                    if u == 0 || v == 0 || u > n || v > n || u == v {
                        return Err(err(format!("invalid edge {u} {v}")));
                    }
                    graph.add_edge(u - 1, v - 1);
                }
                _ => return Err(err(format!("unrecognized line `{content}`"))),
            }
        }
        g.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing `vertices <n>` header".into(),
        })
    }
}

impl Graph for BitGraph {
    fn order(&self) -> usize {
        self.rows.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        self.rows[u].iter().collect()
    }

    fn degree(&self, u: usize) -> usize {
        self.rows[u].count()
    }

    fn is_vertex_transitive(&self) -> bool {
        self.transitive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_ops() {
        let mut a = BitSet::from_items(130, [0, 5, 64, 129]);
        let b = BitSet::from_items(130, [5, 129, 7]);
        assert_eq!(a.count(), 4);
        assert_eq!(a.intersection_count(&b), 2);
        a.difference_with(&b);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 64]);
        assert_eq!(BitSet::full(130).count(), 130);
        assert_eq!(a.first(), Some(0));
        assert!(BitSet::new(10).is_empty());
    }

    #[test]
    fn complement_of_path() {
        let g = BitGraph::from_edges(3, [(0, 1), (1, 2)]);
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2)]);
    }

    #[test]
    fn elg_round_trip() {
        let g = BitGraph::from_edges(4, [(0, 1), (2, 3), (1, 3)]);
        let text = g.to_elg();
        assert_eq!(text, "vertices 4\nedge 1 2\nedge 2 4\nedge 3 4\n");
        assert_eq!(BitGraph::parse_elg(&text).unwrap(), g);
        assert!(BitGraph::parse_elg("vertices 2\nedge 1 3").is_err());
    }
}
