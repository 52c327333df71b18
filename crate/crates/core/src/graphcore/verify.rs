//! Certificate checkers. Each check is independent of the search that
//! produced the certificate and reports the first violation in vertex order.

use std::fmt;

use rayon::prelude::*;

use crate::graph::{BitSet, Graph};

use super::{ColoringCert, IndependentSetCert};

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertViolation {
    /// The certificate was built for a graph of a different order.
    OrderMismatch { cert: usize, graph: usize },
    VertexOutOfRange(u64),
    DuplicateVertex(u64),
    /// Two members of an independent set are adjacent.
    AdjacentPair(u64, u64),
    SizeMismatch { claimed: usize, actual: usize },
    /// Adjacent vertices share a color.
    Conflict { u: u64, v: u64, color: u32 },
    TooManyColors { used: usize, claimed: usize },
}

impl fmt::Display for CertViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertViolation::OrderMismatch { cert, graph } => {
                write!(f, "certificate covers {cert} vertices, graph has {graph}")
            }
            CertViolation::VertexOutOfRange(v) => write!(f, "vertex {v:#x} is out of range"),
            CertViolation::DuplicateVertex(v) => write!(f, "vertex {v:#x} listed twice"),
            CertViolation::AdjacentPair(u, v) => write!(f, "vertices {u:#x} and {v:#x} are adjacent"),
            CertViolation::SizeMismatch { claimed, actual } => {
                write!(f, "claimed size {claimed} but {actual} vertices listed")
            }
            CertViolation::Conflict { u, v, color } => {
                write!(f, "adjacent vertices {u:#x} and {v:#x} both have color {color}")
            }
            CertViolation::TooManyColors { used, claimed } => {
                write!(f, "{used} colors used, {claimed} claimed")
            }
        }
    }
}

impl std::error::Error for CertViolation {}

/// Checks that `cert` lists distinct, pairwise non-adjacent vertices and that
/// its claimed size matches.
///
/// The adjacent-pair witness is `(u, v)` with `u` the earliest listed vertex
/// having a neighbor in the set and `v` its least such neighbor.
pub fn verify_independent_set<G: Graph + ?Sized>(
    g: &G,
    cert: &IndependentSetCert,
) -> Result<(), CertViolation> {
    let order = g.order();
    if cert.order() != order {
        return Err(CertViolation::OrderMismatch {
            cert: cert.order(),
            graph: order,
        });
    }
    let words = cert.words();
    if cert.claimed_size() != words.len() {
        return Err(CertViolation::SizeMismatch {
            claimed: cert.claimed_size(),
            actual: words.len(),
        });
    }
    let mut members = BitSet::new(order);
    for &w in words {
        if w >= order as u64 {
            return Err(CertViolation::VertexOutOfRange(w));
        }
        if members.contains(w as usize) {
            return Err(CertViolation::DuplicateVertex(w));
        }
        members.insert(w as usize);
    }
    let witness = words.par_iter().find_map_first(|&u| {
        g.neighbors(u as usize)
            .into_iter()
            .filter(|&v| members.contains(v))
            .min()
            .map(|v| (u, v as u64))
    });
    match witness {
        Some((u, v)) => Err(CertViolation::AdjacentPair(u, v)),
        None => Ok(()),
    }
}

/// Checks that `cert` is a proper coloring of `g` using at most its claimed
/// number of colors. Returns the number of distinct colors used.
///
/// The conflict witness is the lexicographically least monochromatic edge.
pub fn verify_coloring<G: Graph + ?Sized>(
    g: &G,
    cert: &ColoringCert,
) -> Result<usize, CertViolation> {
    let order = g.order();
    if cert.order() != order {
        return Err(CertViolation::OrderMismatch {
            cert: cert.order(),
            graph: order,
        });
    }
    let table = cert.to_table();
    let conflict = (0..order).into_par_iter().find_map_first(|u| {
        g.neighbors(u)
            .into_iter()
            .filter(|&v| v > u && table[v] == table[u])
            .min()
            .map(|v| CertViolation::Conflict {
                u: u as u64,
                v: v as u64,
                color: table[u],
            })
    });
    if let Some(c) = conflict {
        return Err(c);
    }
    let mut used: Vec<u32> = table;
    used.par_sort_unstable();
    used.dedup();
    if used.len() > cert.color_count() {
        return Err(CertViolation::TooManyColors {
            used: used.len(),
            claimed: cert.color_count(),
        });
    }
    Ok(used.len())
}
