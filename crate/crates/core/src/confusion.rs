//! Confusion graphs as Cayley graphs over `Z_2^m`.
//!
//! Two words are confusable when some receiver wants a block on which they
//! differ while agreeing on every block it knows. Confusability only depends
//! on `x ^ y`, so the confusion graph `C_t(H)` is the Cayley graph of
//! `Z_2^{n t}` whose generators are the confusable difference patterns.
//!
//! Generator sets are kept sorted ascending. Membership uses a bitmap for
//! `m <= 22` and binary search above that.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{BitGraph, Graph, GraphError};
use crate::model::{low_mask, BroadcastHypergraph};

/// Dimension above which no confusion graph is built, even as an oracle.
pub const HARD_DIM_LIMIT: usize = 30;
/// Largest `n t` that explicit (materialized) operations accept by default.
pub const MATERIALIZE_DIM_LIMIT: usize = 24;
/// Searches that enumerate all vertices refuse graphs above `2^22` vertices.
pub const ENUMERATION_DIM_LIMIT: usize = 22;
/// Largest generator set that will be stored.
pub const GENERATOR_CAP: u64 = 1 << 26;
/// Largest graph accepted by [`isomorphic_check_small`].
pub const ISO_CHECK_DIM_LIMIT: usize = 14;

const BITMAP_DIM_LIMIT: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfusionError {
    #[error("dimension {dim} exceeds the limit of {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },
    #[error("generator set would exceed {GENERATOR_CAP} elements (bound {bound})")]
    GeneratorSetTooLarge { bound: u64 },
    #[error("generator {0:#x} is zero or outside the group")]
    BadGenerator(u64),
    #[error("block length must be at least 1")]
    ZeroBlockLength,
    #[error("graphs have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Cayley graph of `Z_2^dim`: `x ~ y` iff `x ^ y` is a generator.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    dim: usize,
    generators: Vec<u64>,
    bitmap: Option<Vec<u64>>,
}

impl std::fmt::Debug for CayleyGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CayleyGraph(dim={}, generators={})",
            self.dim,
            self.generators.len()
        )
    }
}

impl CayleyGraph {
    pub fn new(dim: usize, generators: impl IntoIterator<Item = u64>) -> Result<Self, ConfusionError> {
        if dim > HARD_DIM_LIMIT {
            return Err(ConfusionError::DimensionTooLarge {
                dim,
                limit: HARD_DIM_LIMIT,
            });
        }
        let mask = low_mask(dim);
        let mut gens: Vec<u64> = generators.into_iter().collect();
        if let Some(&bad) = gens.iter().find(|&&g| g == 0 || g & !mask != 0) {
            return Err(ConfusionError::BadGenerator(bad));
        }
        gens.sort_unstable();
        gens.dedup();
        Ok(Self::from_sorted(dim, gens))
    }

    fn from_sorted(dim: usize, generators: Vec<u64>) -> Self {
        let bitmap = (dim <= BITMAP_DIM_LIMIT).then(|| {
            let mut bits = vec![0u64; (1usize << dim).div_ceil(64)];
            for &g in &generators {
                bits[(g / 64) as usize] |= 1 << (g % 64);
            }
            bits
        });
        CayleyGraph {
            dim,
            generators,
            bitmap,
        }
    }

    pub fn edgeless(dim: usize) -> Self {
        Self::from_sorted(dim, Vec::new())
    }

    pub fn complete(dim: usize) -> Self {
        Self::from_sorted(dim, (1..1u64 << dim).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn vertex_count(&self) -> u64 {
        1u64 << self.dim
    }

    #[inline]
    pub fn is_generator(&self, x: u64) -> bool {
        match &self.bitmap {
            Some(bits) => x >> self.dim == 0 && bits[(x / 64) as usize] >> (x % 64) & 1 == 1,
            None => self.generators.binary_search(&x).is_ok(),
        }
    }

    #[inline]
    pub fn adjacent_words(&self, x: u64, y: u64) -> bool {
        x != y && self.is_generator(x ^ y)
    }

    /// Explicit adjacency, refusing graphs above `2^max_dim` vertices.
    pub fn materialize(&self, max_dim: usize) -> Result<BitGraph, ConfusionError> {
        if self.dim > max_dim {
            return Err(ConfusionError::DimensionTooLarge {
                dim: self.dim,
                limit: max_dim,
            });
        }
        Ok(BitGraph::materialize(self, usize::MAX)?)
    }

    /// `.gen` dump: `dim <m>` then one hex generator per line, ascending.
    pub fn to_gen(&self) -> String {
        let mut out = format!("dim {}\n", self.dim);
        for g in &self.generators {
            out.push_str(&format!("{g:x}\n"));
        }
        out
    }

    pub fn parse_gen(text: &str) -> Result<CayleyGraph, ConfusionError> {
        let (dim, words) = parse_dim_and_hex(text)?;
        CayleyGraph::new(dim, words)
    }
}

/// Shared reader for the `dim <m>` + hex-per-line formats (`.gen`, `.iset`).
pub(crate) fn parse_dim_and_hex(text: &str) -> Result<(usize, Vec<u64>), ConfusionError> {
    let mut dim = None;
    let mut words = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |msg: String| ConfusionError::Parse { line, msg };
        if let Some(rest) = content.strip_prefix("dim") {
            if dim.is_some() {
                return Err(err("duplicate `dim` header".into()));
            }
            dim = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad dimension `{}`", rest.trim())))?,
            );
            continue;
        }
        let d = dim.ok_or_else(|| err("word before `dim` header".into()))?;
        let w = u64::from_str_radix(content, 16).map_err(|_| err(format!("bad hex word `{content}`")))?;
        if w & !low_mask(d) != 0 {
            return Err(err(format!("word {content} has bits beyond dimension {d}")));
        }
        words.push(w);
    }
    let dim = dim.ok_or(ConfusionError::Parse {
        line: 0,
        msg: "missing `dim <m>` header".into(),
    })?;
    Ok((dim, words))
}

impl Graph for CayleyGraph {
    fn order(&self) -> usize {
        1usize << self.dim
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacent_words(u as u64, v as u64)
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.generators.iter().map(|&g| u ^ g as usize).collect();
        out.sort_unstable();
        out
    }

    fn degree(&self, _u: usize) -> usize {
        self.generators.len()
    }

    fn is_vertex_transitive(&self) -> bool {
        true
    }
}

struct EdgeMasks {
    target: u64,
    known: u64,
    free: u64,
}

fn edge_masks(h: &BroadcastHypergraph, t: usize) -> Vec<EdgeMasks> {
    let block = |i: usize| low_mask(t) << (i * t);
    let all = low_mask(h.n() * t);
    h.distinct_edges()
        .into_iter()
        .map(|r| {
            let target = block(r.target);
            let known = r.known.iter().fold(0, |acc, &j| acc | block(j));
            EdgeMasks {
                target,
                known,
                free: all & !target & !known,
            }
        })
        .collect()
}

/// Generators of the confusion graph `C_t(H)`.
///
/// `g` is a generator iff some receiver `(i, J)` sees block `i` of `g`
/// nonzero and every block of `J` zero. Either enumerates each receiver's
/// patterns directly or scans `Z_2^{n t}`, whichever is cheaper.
pub fn confusion_generators(h: &BroadcastHypergraph, t: usize) -> Result<CayleyGraph, ConfusionError> {
    if t == 0 {
        return Err(ConfusionError::ZeroBlockLength);
    }
    let dim = h.n() * t;
    if dim > HARD_DIM_LIMIT {
        return Err(ConfusionError::DimensionTooLarge {
            dim,
            limit: HARD_DIM_LIMIT,
        });
    }
    let masks = edge_masks(h, t);
    let space = (1u64 << dim) - 1;
    let direct: u64 = masks
        .iter()
        .map(|e| ((1u64 << t) - 1).saturating_mul(1u64 << e.free.count_ones()))
        .fold(0u64, u64::saturating_add);
    if direct.min(space) > GENERATOR_CAP {
        return Err(ConfusionError::GeneratorSetTooLarge {
            bound: direct.min(space),
        });
    }
    let mut gens: Vec<u64> = if direct < space {
        let mut out = Vec::with_capacity(direct as usize);
        for e in &masks {
            for_each_submask(e.target, |a| {
                if a != 0 {
                    for_each_submask(e.free, |f| out.push(a | f));
                }
            });
        }
        out.par_sort_unstable();
        out.dedup();
        out
    } else {
        (1..=space)
            .into_par_iter()
            .filter(|&x| masks.iter().any(|e| x & e.target != 0 && x & e.known == 0))
            .collect()
    };
    gens.shrink_to_fit();
    Ok(CayleyGraph::from_sorted(dim, gens))
}

/// Calls `f` on every submask of `mask`, including 0 and `mask`.
pub(crate) fn for_each_submask(mask: u64, mut f: impl FnMut(u64)) {
    let mut sub = 0u64;
    loop {
        f(sub);
        sub = sub.wrapping_sub(mask) & mask;
        if sub == 0 {
            break;
        }
    }
}

/// OR product of Cayley graphs; component `i` occupies a contiguous bit
/// range, first component in the low bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCayley {
    components: Vec<CayleyGraph>,
}

impl From<CayleyGraph> for ProductCayley {
    fn from(c: CayleyGraph) -> Self {
        ProductCayley { components: vec![c] }
    }
}

impl ProductCayley {
    pub fn components(&self) -> &[CayleyGraph] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.iter().map(CayleyGraph::dim).sum()
    }

    /// `x ~ y` iff some component slice differs by one of its generators.
    pub fn adjacent_words(&self, x: u64, y: u64) -> bool {
        let mut diff = x ^ y;
        for c in &self.components {
            let part = diff & low_mask(c.dim());
            if part != 0 && c.is_generator(part) {
                return true;
            }
            diff >>= c.dim();
        }
        false
    }

    /// The product as a single Cayley graph on the concatenated layout.
    pub fn to_cayley(&self) -> Result<CayleyGraph, ConfusionError> {
        let dim = self.dim();
        if dim > ENUMERATION_DIM_LIMIT {
            return Err(ConfusionError::DimensionTooLarge {
                dim,
                limit: ENUMERATION_DIM_LIMIT,
            });
        }
        let gens: Vec<u64> = (1..1u64 << dim)
            .into_par_iter()
            .filter(|&x| self.adjacent_words(0, x))
            .collect();
        Ok(CayleyGraph::from_sorted(dim, gens))
    }
}

impl Graph for ProductCayley {
    fn order(&self) -> usize {
        1usize << self.dim()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacent_words(u as u64, v as u64)
    }

    fn is_vertex_transitive(&self) -> bool {
        true
    }
}

/// Flattened OR product: components of `b` follow those of `a`.
pub fn or_product(a: impl Into<ProductCayley>, b: impl Into<ProductCayley>) -> ProductCayley {
    let mut components = a.into().components;
    components.extend(b.into().components);
    components.retain(|c| c.dim() > 0);
    ProductCayley { components }
}

/// Adjacency-matrix equality of two graphs on `2^m` vertices under a bit
/// relabeling `perm` (bit `p` of a word of `a` moves to bit `perm[p]`).
///
/// `perm = None` is the identity, which is the correct map between
/// `C(H1 + H2)` and `C(H1) v C(H2)`: the union lists the blocks of `H1`
/// first, exactly the low component of the product.
pub fn isomorphic_check_small<A: Graph + ?Sized, B: Graph + ?Sized>(
    a: &A,
    b: &B,
    perm: Option<&[usize]>,
) -> Result<bool, ConfusionError> {
    let (na, nb) = (a.order(), b.order());
    if na != nb {
        return Err(ConfusionError::OrderMismatch(na, nb));
    }
    if na > 1 << ISO_CHECK_DIM_LIMIT {
        return Err(ConfusionError::DimensionTooLarge {
            dim: na.trailing_zeros() as usize,
            limit: ISO_CHECK_DIM_LIMIT,
        });
    }
    let map = |x: usize| -> usize {
        match perm {
            None => x,
            Some(p) => p
                .iter()
                .enumerate()
                .filter(|(i, _)| x >> i & 1 == 1)
                .fold(0, |acc, (_, &to)| acc | 1 << to),
        }
    };
    let ok = (0..na).into_par_iter().all(|u| {
        let mapped: Vec<usize> = {
            let mut v: Vec<usize> = a.neighbors(u).into_iter().map(map).collect();
            v.sort_unstable();
            v
        };
        mapped == b.neighbors(map(u))
    });
    Ok(ok)
}
