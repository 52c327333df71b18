//! Network and graph families: cycles, odd antiholes, the two-missing
//! construction, pair-miss networks over Cayley graphs of `Z_2^k`, Hamming
//! threshold graphs and Kneser graphs.
//!
//! Elements of `Z_2^k` are integers with bit `i` holding coordinate `i`.

use thiserror::Error;

use crate::confusion::{CayleyGraph, ConfusionError};
use crate::graph::BitGraph;
use crate::model::{BroadcastHypergraph, ModelError, Receiver, SideInfoGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("antihole size must be odd and at least 5, got {0}")]
    BadAntihole(usize),
    #[error("group exponent {0} is out of range")]
    BadExponent(usize),
    #[error("threshold {d} is outside 1..={k}")]
    BadThreshold { k: usize, d: usize },
    #[error("Kneser parameters need k >= 2s >= 2, got k={k}, s={s}")]
    BadKneser { k: usize, s: usize },
    #[error("generator {0:#x} is zero or outside the group")]
    BadGenerator(u64),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Confusion(#[from] ConfusionError),
}

/// Largest group exponent accepted by the Cayley-graph families.
pub const MAX_GROUP_EXPONENT: usize = 20;

/// Receiver `i` wants block `i` and knows its two cycle neighbors.
pub fn cycle_instance(n: usize) -> Result<BroadcastHypergraph, InstanceError> {
    if n < 3 {
        return Err(InstanceError::CycleTooShort(n));
    }
    Ok(BroadcastHypergraph::from_side_info_graph(&SideInfoGraph::cycle(n)?))
}

/// Side information given by the complement of the `m`-cycle: receiver `i`
/// knows every block except `i - 1`, `i` and `i + 1`.
pub fn antihole_instance(m: usize) -> Result<BroadcastHypergraph, InstanceError> {
    if m < 5 || m % 2 == 0 {
        return Err(InstanceError::BadAntihole(m));
    }
    let g = SideInfoGraph::cycle(m)?.complement();
    Ok(BroadcastHypergraph::from_side_info_graph(&g))
}

/// Blocks are the nonzero elements of `Z_2^k` (block `b`, 0-indexed, is
/// element `b + 1`). For each ordered pair of distinct elements `i != j`
/// there is a receiver wanting `i` and knowing everything except `i, j`.
pub fn two_missing_instance(k: usize) -> Result<BroadcastHypergraph, InstanceError> {
    if !(2..=MAX_GROUP_EXPONENT).contains(&k) {
        return Err(InstanceError::BadExponent(k));
    }
    let n = (1usize << k) - 1;
    let mut edges = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                edges.push(Receiver::new(i, (0..n).filter(|&b| b != i && b != j)));
            }
        }
    }
    Ok(BroadcastHypergraph::new(n, edges)?)
}

/// A Cayley graph `G` of `Z_2^k`, given by its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMissSpec {
    k: usize,
    generators: Vec<u64>,
}

impl PairMissSpec {
    pub fn new(k: usize, generators: impl IntoIterator<Item = u64>) -> Result<Self, InstanceError> {
        if !(1..=MAX_GROUP_EXPONENT).contains(&k) {
            return Err(InstanceError::BadExponent(k));
        }
        let mut gens: Vec<u64> = generators.into_iter().collect();
        if let Some(&g) = gens.iter().find(|&&g| g == 0 || g >> k != 0) {
            return Err(InstanceError::BadGenerator(g));
        }
        gens.sort_unstable();
        gens.dedup();
        Ok(PairMissSpec { k, generators: gens })
    }

    /// `G = K_{2^k}`: every nonzero element generates.
    pub fn complete(k: usize) -> Result<Self, InstanceError> {
        Self::new(k, 1..1u64 << k.min(MAX_GROUP_EXPONENT + 1))
    }

    pub fn edgeless(k: usize) -> Result<Self, InstanceError> {
        Self::new(k, std::iter::empty())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        1 << self.k
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn cayley(&self) -> CayleyGraph {
        CayleyGraph::new(self.k, self.generators.iter().copied()).expect("validated generators")
    }

    /// Same text format as `.gen` files.
    pub fn to_text(&self) -> String {
        self.cayley().to_gen()
    }

    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let c = CayleyGraph::parse_gen(text)?;
        Self::new(c.dim(), c.generators().iter().copied())
    }
}

/// One block per element of `Z_2^k` (block `b` is element `b`, zero
/// included). Every adjacent pair `{a, b}` of `G` contributes the receivers
/// `(a, V \ {a, b})` and `(b, V \ {a, b})`.
pub fn pair_miss_instance(spec: &PairMissSpec) -> Result<BroadcastHypergraph, InstanceError> {
    let n = spec.order();
    let mut edges = Vec::new();
    for a in 0..n {
        for &g in spec.generators() {
            let b = a ^ g as usize;
            if a < b {
                let known: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
                edges.push(Receiver::new(a, known.iter().copied()));
                edges.push(Receiver::new(b, known));
            }
        }
    }
    Ok(BroadcastHypergraph::new(n, edges)?)
}

/// Cayley graph of `Z_2^k` joining words at Hamming distance at least `d`.
pub fn hamming_threshold_graph(k: usize, d: usize) -> Result<CayleyGraph, InstanceError> {
    if !(1..=MAX_GROUP_EXPONENT).contains(&k) {
        return Err(InstanceError::BadExponent(k));
    }
    if d == 0 || d > k {
        return Err(InstanceError::BadThreshold { k, d });
    }
    let gens = (1..1u64 << k).filter(|g| g.count_ones() as usize >= d);
    Ok(CayleyGraph::new(k, gens)?)
}

/// Kneser graph `K(k, s)` on the `s`-subsets of `{0..k}`, joined when
/// disjoint. Returns the graph and the subsets as bitmasks in increasing
/// order, so vertex `v` is subset `subsets[v]`.
pub fn kneser_graph(k: usize, s: usize) -> Result<(BitGraph, Vec<u64>), InstanceError> {
    if s == 0 || k < 2 * s || k > MAX_GROUP_EXPONENT {
        return Err(InstanceError::BadKneser { k, s });
    }
    let subsets: Vec<u64> = (0..1u64 << k).filter(|x| x.count_ones() as usize == s).collect();
    let mut g = BitGraph::empty(subsets.len());
    for (a, &x) in subsets.iter().enumerate() {
        for (b, &y) in subsets.iter().enumerate().skip(a + 1) {
            if x & y == 0 {
                g.add_edge(a, b);
            }
        }
    }
    Ok((g, subsets))
}

/// Subgraph of a Cayley graph induced on the words of Hamming weight `s`,
/// with the words in increasing order.
pub fn weight_slice(c: &CayleyGraph, s: usize) -> (BitGraph, Vec<u64>) {
    let words: Vec<u64> = (0..c.vertex_count())
        .filter(|x| x.count_ones() as usize == s)
        .collect();
    let mut g = BitGraph::empty(words.len());
    for (a, &x) in words.iter().enumerate() {
        for (b, &y) in words.iter().enumerate().skip(a + 1) {
            if c.adjacent_words(x, y) {
                g.add_edge(a, b);
            }
        }
    }
    (g, words)
}

/// Moves bit `i` of `x` to bit `perm[i]`.
pub fn permute_word(x: u64, perm: &[usize]) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|&(i, _)| x >> i & 1 == 1)
        .fold(0, |acc, (_, &p)| acc | 1 << p)
}

/// Block map taking the 5-cycle network onto the 5-antihole network:
/// cycle block `i` becomes antihole block `2i mod 5`.
pub fn cycle5_to_antihole5() -> [usize; 5] {
    [0, 2, 4, 1, 3]
}
