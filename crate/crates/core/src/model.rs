//! Broadcast networks, words and side-information graphs.
//!
//! A network has `n` data blocks and a list of receivers. Each receiver
//! wants one block and already knows a set of other blocks. Blocks are
//! 0-indexed in memory; the `.bhg` text format is 1-indexed.
//!
//! ```text
//! # the 5-cycle
//! blocks 5
//! wants 1 knows 2 5
//! wants 2 knows 1 3
//! ```

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised while building or parsing a network.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("network has no blocks")]
    EmptyNetwork,
    #[error("receiver {edge} wants block {target} but lists it as known")]
    TargetInKnownSet { edge: usize, target: usize },
    #[error("receiver {edge} refers to block {index}, outside 1..={n}")]
    IndexOutOfRange { edge: usize, index: usize, n: usize },
    #[error("side-information graph has a self arc at vertex {0}")]
    SelfArc(usize),
    #[error("side-information graph is marked undirected but arc ({0}, {1}) has no reverse")]
    AsymmetricArc(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// One receiver: it wants `target` and knows every block in `known`.
///
/// `known` is kept sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Receiver {
    pub target: usize,
    pub known: Vec<usize>,
}

impl Receiver {
    pub fn new(target: usize, known: impl IntoIterator<Item = usize>) -> Self {
        let known: BTreeSet<usize> = known.into_iter().collect();
        Receiver {
            target,
            known: known.into_iter().collect(),
        }
    }

    /// Blocks the receiver neither wants nor knows.
    pub fn unknown(&self, n: usize) -> Vec<usize> {
        (0..n)
            .filter(|&j| j != self.target && self.known.binary_search(&j).is_err())
            .collect()
    }
}

/// A broadcast network `H`: `n` blocks and the receivers' edges.
///
/// Edges are stored sorted by `(target, known)`; duplicates are kept, so two
/// networks compare equal exactly when they list the same receivers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BroadcastHypergraph {
    n: usize,
    edges: Vec<Receiver>,
}

/// Checks the structural invariants of a receiver list.
pub fn validate(n: usize, edges: &[Receiver]) -> Result<(), ModelError> {
    if n == 0 {
        return Err(ModelError::EmptyNetwork);
    }
    for (e, r) in edges.iter().enumerate() {
        if r.target >= n {
            return Err(ModelError::IndexOutOfRange {
                edge: e + 1,
                index: r.target + 1,
                n,
            });
        }
        if let Some(&j) = r.known.iter().find(|&&j| j >= n) {
            return Err(ModelError::IndexOutOfRange {
                edge: e + 1,
                index: j + 1,
                n,
            });
        }
        if r.known.contains(&r.target) {
            return Err(ModelError::TargetInKnownSet {
                edge: e + 1,
                target: r.target + 1,
            });
        }
    }
    Ok(())
}

impl BroadcastHypergraph {
    pub fn new(n: usize, mut edges: Vec<Receiver>) -> Result<Self, ModelError> {
        validate(n, &edges)?;
        edges.sort();
        Ok(BroadcastHypergraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Receiver] {
        &self.edges
    }

    /// Receivers with duplicates collapsed. Duplicates never change which
    /// words are confusable.
    pub fn distinct_edges(&self) -> Vec<&Receiver> {
        let mut out: Vec<&Receiver> = Vec::with_capacity(self.edges.len());
        for r in &self.edges {
            if out.last().map_or(true, |last| *last != r) {
                out.push(r);
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        validate(self.n, &self.edges)
    }

    /// Disjoint union: the blocks of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &BroadcastHypergraph) -> BroadcastHypergraph {
        let offset = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|r| Receiver {
            target: r.target + offset,
            known: r.known.iter().map(|j| j + offset).collect(),
        }));
        edges.sort();
        BroadcastHypergraph {
            n: self.n + other.n,
            edges,
        }
    }

    /// `k · H`, the disjoint union of `k` copies.
    pub fn k_copies(&self, k: usize) -> Result<BroadcastHypergraph, ModelError> {
        if k == 0 {
            return Err(ModelError::EmptyNetwork);
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.disjoint_union(self);
        }
        Ok(out)
    }

    /// Relabels block `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<BroadcastHypergraph, ModelError> {
        assert_eq!(perm.len(), self.n, "permutation length");
        let edges = self
            .edges
            .iter()
            .map(|r| Receiver::new(perm[r.target], r.known.iter().map(|&j| perm[j])))
            .collect();
        BroadcastHypergraph::new(self.n, edges)
    }

    /// Network of a side-information graph: one receiver per vertex, knowing
    /// its out-neighbourhood.
    pub fn from_side_info_graph(g: &SideInfoGraph) -> BroadcastHypergraph {
        let edges = (0..g.n())
            .map(|i| Receiver::new(i, g.out_neighbors(i)))
            .collect();
        BroadcastHypergraph::new(g.n(), edges).expect("side-information graph is valid")
    }

    /// Canonical `.bhg` serialization.
    pub fn to_bhg(&self) -> String {
        let mut out = format!("blocks {}\n", self.n);
        for r in &self.edges {
            out.push_str(&format!("wants {} knows", r.target + 1));
            for j in &r.known {
                out.push_str(&format!(" {}", j + 1));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_bhg(text: &str) -> Result<BroadcastHypergraph, ModelError> {
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |msg: &str| ModelError::Parse {
                line,
                msg: msg.to_string(),
            };
            let mut toks = content.split_whitespace();
            match toks.next() {
                Some("blocks") => {
                    if n.is_some() {
                        return Err(err("duplicate `blocks` header"));
                    }
                    let v = parse_index(toks.next(), line)?;
                    if toks.next().is_some() {
                        return Err(err("trailing tokens after `blocks <n>`"));
                    }
                    n = Some(v);
                }
                Some("wants") => {
                    if n.is_none() {
                        return Err(err("`wants` before `blocks` header"));
                    }
                    let target = parse_index(toks.next(), line)?;
                    if toks.next() != Some("knows") {
                        return Err(err("expected `knows`"));
                    }
                    let known = toks
                        .map(|t| parse_index(Some(t), line))
                        .collect::<Result<Vec<_>, _>>()?;
                    if target == 0 || known.contains(&0) {
                        return Err(err("blocks are numbered from 1"));
                    }
                    edges.push(Receiver::new(target - 1, known.into_iter().map(|j| j - 1)));
                }
                Some(other) => return Err(err(&format!("unknown directive `{other}`"))),
                None => unreachable!(),
            }
        }
        let n = n.ok_or(ModelError::Parse {
            line: 0,
            msg: "missing `blocks <n>` header".into(),
        })?;
        BroadcastHypergraph::new(n, edges)
    }
}

fn parse_index(tok: Option<&str>, line: usize) -> Result<usize, ModelError> {
    let tok = tok.ok_or(ModelError::Parse {
        line,
        msg: "missing number".into(),
    })?;
    tok.parse().map_err(|_| ModelError::Parse {
        line,
        msg: format!("`{tok}` is not a non-negative integer"),
    })
}

impl fmt::Display for BroadcastHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}, receivers={})", self.n, self.edges.len())
    }
}

/// An input word: `n` blocks of `t` bits packed little-endian into a `u64`.
///
/// Block `i` (0-indexed) occupies bits `i*t .. (i+1)*t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    bits: u64,
    n: usize,
    t: usize,
}

impl Word {
    pub fn new(bits: u64, n: usize, t: usize) -> Self {
        assert!(n * t <= 64, "word longer than 64 bits");
        let mask = low_mask(n * t);
        assert_eq!(bits & !mask, 0, "bits outside the word");
        Word { bits, n, t }
    }

    /// Parses a bit string `x_1 x_2 ... x_n` (block length 1).
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return None,
            }
        }
        Some(Word::new(bits, s.len(), 1))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn block(&self, i: usize) -> u64 {
        assert!(i < self.n);
        (self.bits >> (i * self.t)) & low_mask(self.t)
    }

    pub fn xor(&self, other: &Word) -> Word {
        assert_eq!((self.n, self.t), (other.n, other.t), "word shapes differ");
        Word {
            bits: self.bits ^ other.bits,
            ..*self
        }
    }

    /// Renders block bits as `x_1 x_2 ...` (most useful for `t = 1`).
    pub fn to_bitstring(&self) -> String {
        (0..self.n * self.t)
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

pub(crate) fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// Directed graph `i -> j` meaning "the receiver of block `i` knows block `j`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideInfoGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    undirected: bool,
}

impl SideInfoGraph {
    pub fn directed(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ModelError> {
        Self::build(n, arcs.into_iter().collect(), false)
    }

    /// Undirected graph: every edge becomes a pair of arcs.
    pub fn undirected(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, ModelError> {
        let arcs = edges
            .into_iter()
            .flat_map(|(a, b)| [(a, b), (b, a)])
            .collect();
        Self::build(n, arcs, true)
    }

    fn build(n: usize, arcs: BTreeSet<(usize, usize)>, undirected: bool) -> Result<Self, ModelError> {
        if n == 0 {
            return Err(ModelError::EmptyNetwork);
        }
        for (e, &(a, b)) in arcs.iter().enumerate() {
            if a == b {
                return Err(ModelError::SelfArc(a + 1));
            }
            if a >= n || b >= n {
                return Err(ModelError::IndexOutOfRange {
                    edge: e + 1,
                    index: a.max(b) + 1,
                    n,
                });
            }
            if undirected && !arcs.contains(&(b, a)) {
                return Err(ModelError::AsymmetricArc(a + 1, b + 1));
            }
        }
        Ok(SideInfoGraph { n, arcs, undirected })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }

    pub fn out_neighbors(&self, i: usize) -> Vec<usize> {
        self.arcs
            .range((i, 0)..(i + 1, 0))
            .map(|&(_, j)| j)
            .collect()
    }

    /// The `n`-cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self, ModelError> {
        Self::undirected(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self, ModelError> {
        Self::undirected(
            n,
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))),
        )
    }

    pub fn edgeless(n: usize) -> Result<Self, ModelError> {
        Self::directed(n, std::iter::empty())
    }

    pub fn complement(&self) -> SideInfoGraph {
        let arcs = (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && !self.arcs.contains(&(i, j)))
            .collect();
        SideInfoGraph {
            n: self.n,
            arcs,
            undirected: self.undirected,
        }
    }
}
