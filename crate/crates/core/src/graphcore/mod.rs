//! Search and certification engine.
//!
//! Exact searches (independence number, chromatic number, cliques) work on
//! explicit [`BitGraph`](crate::graph::BitGraph)s built from any adjacency
//! oracle below a vertex limit. The heuristic independent-set search and the
//! translate cover work directly on Cayley graphs. Every search returns a
//! certificate that the `verify_*` functions re-check from scratch.

mod cert;
mod clique;
mod coloring;
mod cover;
mod heuristic;
mod mis;
mod tabu;
mod verify;

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

pub use cert::{Assignment, CertError, ColoringCert, IndependentSetCert, Optimality};
pub use clique::{find_clique, greedy_clique, max_clique, max_weight_clique, CliqueOutcome};
pub use coloring::{
    chromatic_interval, dsatur_coloring, exact_chromatic, greedy_coloring, ChromaticOutcome,
    TABU_ITERATIONS,
};
pub use cover::random_translate_cover;
pub use heuristic::{
    independent_set_heuristic, independent_set_heuristic_with, rotation_orbits, rotation_shift,
    HeuristicOptions,
};
pub use mis::max_independent_set_exact;
pub use tabu::tabu_coloring;
pub use verify::{verify_coloring, verify_independent_set, CertViolation};

/// Default vertex limit for exact independence searches.
pub const EXACT_MIS_VERTEX_LIMIT: usize = 1 << 14;
/// Default vertex limit for exact chromatic numbers.
pub const EXACT_CHI_VERTEX_LIMIT: usize = 1 << 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has {order} vertices, above the limit of {limit}")]
    SizeOverLimit { order: usize, limit: usize },
    #[error("search budget exhausted; value lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: usize, upper: usize },
    #[error("fractional chromatic number needs a positive independence number")]
    ZeroAlpha,
    #[error("input set is not independent: {0}")]
    NotIndependent(CertViolation),
}

/// Size and node limits for exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub vertex_limit: usize,
    /// Branch-and-bound node budget; `None` is unbounded.
    pub node_limit: Option<u64>,
}

impl SearchLimits {
    pub fn mis() -> Self {
        SearchLimits {
            vertex_limit: EXACT_MIS_VERTEX_LIMIT,
            node_limit: None,
        }
    }

    pub fn chromatic() -> Self {
        SearchLimits {
            vertex_limit: EXACT_CHI_VERTEX_LIMIT,
            node_limit: None,
        }
    }

    pub fn with_node_limit(mut self, limit: Option<u64>) -> Self {
        self.node_limit = limit;
        self
    }

    pub fn with_vertex_limit(mut self, limit: usize) -> Self {
        self.vertex_limit = limit;
        self
    }
}

/// Exact non-negative rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalValue(Ratio<u64>);

impl RationalValue {
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom > 0, "zero denominator");
        RationalValue(Ratio::new(numer, denom))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// `self^k` as an exact big rational.
    pub fn pow_big(&self, k: u32) -> num_rational::BigRational {
        use num_bigint::BigInt;
        num_rational::BigRational::new(
            BigInt::from(self.numer()).pow(k),
            BigInt::from(self.denom()).pow(k),
        )
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Fractional chromatic number of a vertex-transitive graph on `order`
/// vertices with independence number `alpha`: `order / alpha`.
///
/// The caller vouches that `alpha` is exact; with a lower bound on the
/// independence number the result is an upper bound.
pub fn fractional_chromatic_vt(order: u64, alpha: u64) -> Result<RationalValue, SearchError> {
    if alpha == 0 {
        return Err(SearchError::ZeroAlpha);
    }
    Ok(RationalValue::new(order, alpha))
}
