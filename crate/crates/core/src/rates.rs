//! Rate quantities of a broadcast network.
//!
//! * `alpha_arrow`: the acyclic-style lower bound, the largest block set `S`
//!   where every member has a receiver whose known set avoids `S`.
//! * `beta_t`: `ceil(log2 chi(C_t))`, bits needed for block length `t`.
//! * `beta_star`: `n - log2 gamma` with `gamma` the independence number of
//!   the `t = 1` confusion graph; the rate for many disjoint copies.
//! * `codeword_bounds`: how many codewords an optimal code for `k` disjoint
//!   copies needs, bracketed in exact arithmetic.
//!
//! All comparisons between these quantities are done on integers
//! (`2^a` against `gamma^q` and so on), never on floats.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::confusion::{confusion_generators, CayleyGraph, ConfusionError, ENUMERATION_DIM_LIMIT};
use crate::graphcore::{
    chromatic_interval, independent_set_heuristic, max_independent_set_exact, SearchError,
    SearchLimits, EXACT_MIS_VERTEX_LIMIT,
};
use crate::model::BroadcastHypergraph;

/// Largest `n` accepted by [`alpha_arrow`].
pub const ALPHA_ARROW_LIMIT: usize = 30;
/// Largest number of copies accepted by [`codeword_bounds`].
pub const MAX_COPIES: u32 = 64;
/// Node budget for the independence search that strengthens chromatic
/// lower bounds.
const AUX_MIS_NODE_LIMIT: u64 = 1_000_000;
/// Largest block count accepted by [`codeword_bounds`].
pub const MAX_BOUND_BLOCKS: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatesError {
    #[error("network has {n} blocks, above the limit of {limit}")]
    SizeOverLimit { n: usize, limit: usize },
    #[error("independence number must be in 1..=2^{n}, got {gamma}")]
    BadGamma { n: usize, gamma: u64 },
    #[error("{what} = {value} is outside the supported range 1..={limit}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error(transparent)]
    Confusion(#[from] ConfusionError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

/// Largest block set `S` such that every `v` in `S` has a receiver
/// `(v, J)` with `J` disjoint from `S`.
///
/// The property is inherited by subsets, so a branch and bound over the
/// blocks in index order finds the optimum; blocks that can no longer join
/// the current set are dropped from the candidate list at every step.
pub fn alpha_arrow(h: &BroadcastHypergraph) -> Result<usize, RatesError> {
    let n = h.n();
    if n > ALPHA_ARROW_LIMIT {
        return Err(RatesError::SizeOverLimit {
            n,
            limit: ALPHA_ARROW_LIMIT,
        });
    }
    let mut known: Vec<Vec<u32>> = vec![Vec::new(); n];
    for r in h.distinct_edges() {
        let mask = r.known.iter().fold(0u32, |m, &j| m | 1 << j);
        known[r.target].push(mask);
    }
    // a receiver whose known set contains another's is never needed
    for masks in known.iter_mut() {
        masks.sort_unstable_by_key(|m| m.count_ones());
        let mut kept: Vec<u32> = Vec::new();
        for &m in masks.iter() {
            if !kept.iter().any(|&k| k & m == k) {
                kept.push(m);
            }
        }
        *masks = kept;
    }
    let candidates: Vec<usize> = (0..n).filter(|&v| !known[v].is_empty()).collect();
    let mut best = 0;
    extend(&known, 0, &candidates, &mut best);
    Ok(best)
}

fn feasible(known: &[Vec<u32>], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if !known[v].iter().any(|&m| m & set == 0) {
            return false;
        }
    }
    true
}

fn extend(known: &[Vec<u32>], set: u32, candidates: &[usize], best: &mut usize) {
    let size = set.count_ones() as usize;
    if size > *best {
        *best = size;
    }
    for (i, &v) in candidates.iter().enumerate() {
        if size + candidates.len() - i <= *best {
            return;
        }
        let next = set | 1 << v;
        let rest: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| feasible(known, next | 1 << w))
            .collect();
        extend(known, next, &rest, best);
    }
}

/// Limits and randomness used when computing rate quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RateOptions {
    /// Exact chromatic searches run on graphs up to this many vertices.
    pub chi_limits: SearchLimits,
    /// Exact independence searches run on graphs up to this many vertices.
    pub mis_limits: SearchLimits,
    pub seed: u64,
    /// Iterations for the heuristic independent-set search.
    pub budget: u64,
}

impl Default for RateOptions {
    fn default() -> Self {
        RateOptions {
            chi_limits: SearchLimits::chromatic().with_node_limit(Some(2_000_000)),
            mis_limits: SearchLimits::mis().with_node_limit(Some(20_000_000)),
            seed: 0,
            budget: 20_000,
        }
    }
}

/// `beta_t` with the chromatic interval it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BetaT {
    pub t: usize,
    pub chi_lower: u64,
    pub chi_upper: u64,
    /// `ceil(log2 chi_lower)`.
    pub lower: u32,
    /// `ceil(log2 chi_upper)`.
    pub upper: u32,
}

impl BetaT {
    fn from_chi(t: usize, chi_lower: u64, chi_upper: u64) -> Self {
        BetaT {
            t,
            chi_lower,
            chi_upper,
            lower: ceil_log2(chi_lower),
            upper: ceil_log2(chi_upper),
        }
    }

    /// The bit count is pinned, even if `chi` itself is not.
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn chi_is_exact(&self) -> bool {
        self.chi_lower == self.chi_upper
    }

    pub fn value(&self) -> Option<u32> {
        self.is_exact().then_some(self.lower)
    }
}

impl fmt::Display for BetaT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "[{}, {}]", self.lower, self.upper),
        }
    }
}

/// `ceil(log2 x)` for `x >= 1`; 0 for `x <= 1`.
pub fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// `ceil(log2 chi(C_t(H)))`.
///
/// Small confusion graphs get an exact chromatic search. Larger ones, or
/// searches that run out of budget, give an interval: a clique lower bound
/// and the better of a DSATUR coloring and the product bound
/// `chi(C_t) <= chi(C_1)^t`.
pub fn beta_t(h: &BroadcastHypergraph, t: usize, opts: &RateOptions) -> Result<BetaT, RatesError> {
    let c = confusion_generators(h, t)?;
    let (lo, hi) = chi_bounds(&c, opts)?;
    let mut hi = hi;
    if t > 1 {
        let c1 = confusion_generators(h, 1)?;
        let (_, hi1) = chi_bounds(&c1, opts)?;
        if let Some(p) = hi1.checked_pow(t as u32) {
            hi = hi.min(p);
        }
    }
    Ok(BetaT::from_chi(t, lo, hi))
}

fn chi_bounds(c: &CayleyGraph, opts: &RateOptions) -> Result<(u64, u64), RatesError> {
    if c.generators().is_empty() {
        return Ok((1, 1));
    }
    let order = c.vertex_count();
    if order as usize <= opts.chi_limits.vertex_limit {
        // Cayley graphs are vertex-transitive, so chi >= |V| / alpha
        let quick = opts.mis_limits.with_node_limit(Some(AUX_MIS_NODE_LIMIT));
        let extra = match max_independent_set_exact(c, quick) {
            Ok(set) if !set.is_empty() => (order as usize).div_ceil(set.len()),
            _ => 0,
        };
        let out = chromatic_interval(c, opts.chi_limits, extra)?;
        return Ok((out.lower as u64, out.upper as u64));
    }
    // too big for the exact search: a clique among {0} and the generators,
    // and the trivial coloring by the word itself
    Ok((generator_clique(c).len() as u64, order))
}

/// Greedy clique through 0 using only generators as the other vertices.
fn generator_clique(c: &CayleyGraph) -> Vec<u64> {
    let mut clique = vec![0u64];
    for &g in c.generators() {
        if clique.iter().skip(1).all(|&w| c.is_generator(w ^ g)) {
            clique.push(g);
        }
    }
    clique
}

/// Exact value of `n - log2 gamma`, kept symbolic.
///
/// When `gamma` is only a lower bound on the independence number the value
/// is an upper bound on the true rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BetaStar {
    pub n: usize,
    pub gamma: u64,
    pub gamma_exact: bool,
}

impl BetaStar {
    pub fn new(n: usize, gamma: u64, gamma_exact: bool) -> Result<Self, RatesError> {
        if n == 0 || n > 63 || gamma == 0 || gamma > 1u64 << n {
            return Err(RatesError::BadGamma { n, gamma });
        }
        Ok(BetaStar {
            n,
            gamma,
            gamma_exact,
        })
    }

    /// `n - log2 gamma` as text, reduced to an integer when `gamma` is a
    /// power of two.
    pub fn expression(&self) -> String {
        if self.gamma.is_power_of_two() {
            let e = self.gamma.trailing_zeros() as usize;
            format!("{}", self.n - e)
        } else {
            format!("{} - log2({})", self.n, self.gamma)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.n as f64 - (self.gamma as f64).log2()
    }

    /// Six-decimal rendering of the value.
    pub fn decimal(&self) -> String {
        format!("{:.6}", self.to_f64())
    }

    /// Compares `n - log2 gamma` with `p / q` exactly:
    /// `n - log2 gamma < p/q` iff `2^(n q) < gamma^q 2^p`.
    pub fn cmp_ratio(&self, p: u64, q: u64) -> Ordering {
        assert!(q > 0, "zero denominator");
        let lhs = BigUint::one() << (self.n as u64 * q);
        let rhs = BigUint::from(self.gamma).pow(q as u32) << p;
        lhs.cmp(&rhs)
    }

    pub fn cmp_int(&self, v: u64) -> Ordering {
        self.cmp_ratio(v, 1)
    }
}

impl fmt::Display for BetaStar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.expression();
        if e.contains("log2") {
            write!(f, "{} ~ {}", e, self.decimal())
        } else {
            f.write_str(&e)
        }
    }
}

/// Independence number of `C_1(H)`: exact for small graphs, otherwise the
/// heuristic's lower bound.
pub fn gamma(h: &BroadcastHypergraph, opts: &RateOptions) -> Result<(u64, bool), RatesError> {
    let c = confusion_generators(h, 1)?;
    let order = c.vertex_count();
    if c.generators().is_empty() {
        return Ok((order, true));
    }
    if order as usize <= opts.mis_limits.vertex_limit {
        match max_independent_set_exact(&c, opts.mis_limits) {
            Ok(set) => return Ok((set.len() as u64, true)),
            Err(SearchError::BudgetExhausted { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if c.dim() > ENUMERATION_DIM_LIMIT {
        return Err(SearchError::SizeOverLimit {
            order: order as usize,
            limit: 1 << ENUMERATION_DIM_LIMIT,
        }
        .into());
    }
    let set = independent_set_heuristic(&c, opts.seed, opts.budget);
    Ok((set.len() as u64, false))
}

pub fn beta_star(h: &BroadcastHypergraph, opts: &RateOptions) -> Result<BetaStar, RatesError> {
    let (g, exact) = gamma(h, opts)?;
    BetaStar::new(h.n(), g, exact)
}

/// Codeword counts for an optimal code on `k` disjoint copies of a network
/// with `n` blocks and confusion-graph independence number `gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordBounds {
    pub k: u32,
    /// `(2^n / gamma)^k`.
    pub lower: BigRational,
    /// `ceil((2^n / gamma)^k k n ln 2)`.
    pub upper: BigUint,
    /// `(2^n / gamma)^k ceil(1 + k ln gamma)`.
    pub upper_alt: BigRational,
}

impl CodewordBounds {
    /// Smallest integer count allowed by the lower bound.
    pub fn min_codewords(&self) -> BigUint {
        ceil_rational(&self.lower)
    }

    /// Largest integer count allowed by either upper bound.
    pub fn max_codewords(&self) -> BigUint {
        let alt = floor_rational(&self.upper_alt);
        alt.min(self.upper.clone())
    }

    /// Bits implied by the upper bounds: `ceil(log2 max_codewords)`.
    pub fn max_bits(&self) -> u64 {
        ceil_log2_big(&self.max_codewords())
    }

    /// Whether `upper_alt < bound`, compared exactly.
    pub fn upper_alt_below(&self, bound: &BigUint) -> bool {
        self.upper_alt < BigRational::from_integer(BigInt::from(bound.clone()))
    }
}

pub fn codeword_bounds(n: usize, gamma: u64, k: u32) -> Result<CodewordBounds, RatesError> {
    if n == 0 || n > MAX_BOUND_BLOCKS {
        return Err(RatesError::OutOfRange {
            what: "block count",
            value: n as u64,
            limit: MAX_BOUND_BLOCKS as u64,
        });
    }
    if k == 0 || k > MAX_COPIES {
        return Err(RatesError::OutOfRange {
            what: "copies",
            value: k as u64,
            limit: MAX_COPIES as u64,
        });
    }
    if gamma == 0 || gamma > 1u64 << n {
        return Err(RatesError::BadGamma { n, gamma });
    }
    let base = BigRational::new(BigInt::one() << n, BigInt::from(gamma));
    let lower = pow_rational(&base, k);
    let kn = BigRational::from_integer(BigInt::from(k as u64 * n as u64));
    let scale = &lower * &kn;
    let upper = ceil_certified(|terms| {
        let (lo, hi) = ln_bounds(2, terms);
        (&scale * lo, &scale * hi)
    });
    let kk = BigRational::from_integer(BigInt::from(k));
    let factor = ceil_certified(|terms| {
        let (lo, hi) = ln_bounds(gamma, terms);
        (
            BigRational::one() + &kk * lo,
            BigRational::one() + &kk * hi,
        )
    });
    let upper_alt = &lower * BigRational::from_integer(BigInt::from(factor));
    Ok(CodewordBounds {
        k,
        lower,
        upper,
        upper_alt,
    })
}

/// Exact value when short, otherwise a 6-digit decimal approximation.
fn approx(x: &BigRational) -> String {
    let exact = x.to_string();
    if exact.len() <= 16 {
        return exact;
    }
    let digits = x.to_integer().to_string().len();
    match x.to_f64() {
        Some(f) if digits > 7 => format!("~{f:.6e}"),
        Some(f) => format!("~{f:.6}"),
        None => exact,
    }
}

fn pow_rational(x: &BigRational, k: u32) -> BigRational {
    BigRational::new(x.numer().pow(k), x.denom().pow(k))
}

fn ceil_rational(x: &BigRational) -> BigUint {
    x.ceil().to_integer().to_biguint().unwrap_or_default()
}

fn floor_rational(x: &BigRational) -> BigUint {
    x.floor().to_integer().to_biguint().unwrap_or_default()
}

/// `ceil(log2 x)` for a big integer, 0 for `x <= 1`.
pub fn ceil_log2_big(x: &BigUint) -> u64 {
    if x <= &BigUint::one() {
        0
    } else {
        (x - 1u32).bits()
    }
}

/// Ceiling of a quantity known through shrinking rational intervals.
///
/// `f(terms)` must bracket the value, tighter as `terms` grows. Irrational
/// values are never integers, so the two ceilings eventually agree.
fn ceil_certified(f: impl Fn(usize) -> (BigRational, BigRational)) -> BigUint {
    let mut terms = 16;
    loop {
        let (lo, hi) = f(terms);
        let (a, b) = (ceil_rational(&lo), ceil_rational(&hi));
        if a == b {
            return a;
        }
        // lo may sit exactly on an integer only if the value is that integer
        if lo == hi {
            return a;
        }
        terms *= 2;
        assert!(terms <= 1 << 16, "ceiling did not stabilize");
    }
}

/// Rational bracket `[lo, hi]` around `ln x`, from `terms` terms of the
/// series `ln m = 2 atanh((m - 1) / (m + 1))` after pulling out powers of 2.
pub fn ln_bounds(x: u64, terms: usize) -> (BigRational, BigRational) {
    assert!(x >= 1, "logarithm of zero");
    if x == 1 {
        return (BigRational::zero(), BigRational::zero());
    }
    let e = 63 - x.leading_zeros() as i64;
    let (ln2_lo, ln2_hi) = atanh_bounds(&BigRational::new(1.into(), 3.into()), terms);
    let (ln2_lo, ln2_hi) = (ln2_lo * BigInt::from(2), ln2_hi * BigInt::from(2));
    // m = x / 2^e in [1, 2)
    let m = BigRational::new(BigInt::from(x), BigInt::one() << e);
    let z = (&m - BigRational::one()) / (&m + BigRational::one());
    let (m_lo, m_hi) = atanh_bounds(&z, terms);
    let ee = BigRational::from_integer(BigInt::from(e));
    (
        &ee * ln2_lo + m_lo * BigInt::from(2),
        &ee * ln2_hi + m_hi * BigInt::from(2),
    )
}

/// Bracket around `atanh z` for `0 <= z <= 1/3`.
fn atanh_bounds(z: &BigRational, terms: usize) -> (BigRational, BigRational) {
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = BigRational::zero();
    for j in 0..terms {
        sum += &power / BigInt::from(2 * j as u64 + 1);
        power *= &z2;
    }
    // tail <= z^(2N+1) / ((2N+1) (1 - z^2))
    let tail = &power / BigInt::from(2 * terms as u64 + 1) / (BigRational::one() - &z2);
    let hi = &sum + tail;
    (sum, hi)
}

/// Everything computed for one network.
#[derive(Debug, Clone)]
pub struct RateReport {
    pub description: String,
    pub n: usize,
    /// `None` when `n` is above [`ALPHA_ARROW_LIMIT`].
    pub alpha_arrow: Option<usize>,
    pub beta_t: BTreeMap<usize, BetaT>,
    pub beta_star: BetaStar,
    pub bounds: BTreeMap<u32, CodewordBounds>,
    pub chain: Vec<ChainCheck>,
}

/// One inequality between the reported quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub relation: String,
    pub holds: bool,
}

impl RateReport {
    /// All checked inequalities hold.
    pub fn chain_ok(&self) -> bool {
        self.chain.iter().all(|c| c.holds)
    }

    /// Best upper bound on the asymptotic rate: the least `beta_t / t`
    /// over computed `t`, as `(bits, t)`.
    pub fn beta_upper(&self) -> Option<(u32, usize)> {
        self.beta_t
            .values()
            .map(|b| (b.upper, b.t))
            .min_by(|a, b| (a.0 as u64 * b.1 as u64).cmp(&(b.0 as u64 * a.1 as u64)))
    }

    /// Best lower bound on the asymptotic rate: the larger of `alpha_arrow`
    /// and `log2(chi_lower) / t` over computed `t`.
    pub fn beta_lower(&self) -> f64 {
        let from_chi = self
            .beta_t
            .values()
            .map(|b| (b.chi_lower as f64).log2() / b.t as f64)
            .fold(0.0, f64::max);
        from_chi.max(self.alpha_arrow.unwrap_or(0) as f64)
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let beta_t: serde_json::Map<String, serde_json::Value> = self
            .beta_t
            .iter()
            .map(|(t, b)| {
                (
                    t.to_string(),
                    json!({
                        "value": b.value(),
                        "lower": b.lower,
                        "upper": b.upper,
                        "chi_lower": b.chi_lower,
                        "chi_upper": b.chi_upper,
                        "exact": b.is_exact(),
                    }),
                )
            })
            .collect();
        let bounds: serde_json::Map<String, serde_json::Value> = self
            .bounds
            .iter()
            .map(|(k, b)| {
                (
                    k.to_string(),
                    json!({
                        "lower": b.lower.to_string(),
                        "upper": b.upper.to_string(),
                        "upper_alt": b.upper_alt.to_string(),
                        "min_codewords": b.min_codewords().to_string(),
                        "max_bits": b.max_bits(),
                    }),
                )
            })
            .collect();
        json!({
            "network": self.description,
            "n": self.n,
            "alpha_arrow": self.alpha_arrow,
            "beta1": self.beta_t.get(&1).and_then(|b| b.value()),
            "beta_t": beta_t,
            "beta_star": {
                "gamma": self.beta_star.gamma,
                "exact": self.beta_star.gamma_exact,
                "expression": self.beta_star.expression(),
                "value": self.beta_star.decimal(),
            },
            "bounds": bounds,
            "chain": self.chain,
            "chain_ok": self.chain_ok(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("network      {}\n", self.description));
        out.push_str(&format!("blocks       {}\n", self.n));
        match self.alpha_arrow {
            Some(a) => out.push_str(&format!("alpha_arrow  {a}\n")),
            None => out.push_str("alpha_arrow  (not computed)\n"),
        }
        for b in self.beta_t.values() {
            let chi = if b.chi_is_exact() {
                format!("chi = {}", b.chi_lower)
            } else {
                format!("chi in [{}, {}]", b.chi_lower, b.chi_upper)
            };
            let value = match b.value() {
                Some(v) => v.to_string(),
                None => format!("[{}, {}]", b.lower, b.upper),
            };
            out.push_str(&format!("beta_{:<3}      {value}  ({chi})\n", b.t));
        }
        let flag = if self.beta_star.gamma_exact { "" } else { " (upper bound)" };
        out.push_str(&format!(
            "beta*        {}{flag}  (gamma = {})\n",
            self.beta_star, self.beta_star.gamma
        ));
        for b in self.bounds.values() {
            out.push_str(&format!(
                "k = {:<3}      {} <= |C| <= {}  (also <= {})\n",
                b.k,
                approx(&b.lower),
                b.upper,
                approx(&b.upper_alt)
            ));
        }
        for c in &self.chain {
            out.push_str(&format!(
                "check        {}  {}\n",
                c.relation,
                if c.holds { "ok" } else { "VIOLATED" }
            ));
        }
        out
    }
}

/// Builds the full report for `t = 1..=t_max` and codeword bounds for each
/// `k` in `copies`.
///
/// Only inequalities that follow from the definitions are checked, and
/// only between entries that are exact (or bounds pointing the right way):
/// `alpha_arrow <= beta*`, `beta* <= beta_1`, `alpha_arrow <= beta_t / t`
/// and `beta_t <= t beta_1`.
pub fn rate_report(
    h: &BroadcastHypergraph,
    description: &str,
    t_max: usize,
    copies: &[u32],
    opts: &RateOptions,
) -> Result<RateReport, RatesError> {
    let alpha = if h.n() <= ALPHA_ARROW_LIMIT {
        Some(alpha_arrow(h)?)
    } else {
        None
    };
    let mut beta = BTreeMap::new();
    for t in 1..=t_max.max(1) {
        if h.n() * t > crate::confusion::MATERIALIZE_DIM_LIMIT {
            break;
        }
        beta.insert(t, beta_t(h, t, opts)?);
    }
    let star = beta_star(h, opts)?;
    let mut bounds = BTreeMap::new();
    if star.gamma_exact && h.n() <= MAX_BOUND_BLOCKS {
        for &k in copies {
            bounds.insert(k, codeword_bounds(h.n(), star.gamma, k)?);
        }
    }
    let mut chain = Vec::new();
    if let Some(a) = alpha {
        // a lower bound on gamma only raises beta*, so this stays valid
        chain.push(ChainCheck {
            relation: format!("alpha_arrow = {a} <= beta* = {}", star.decimal()),
            holds: star.cmp_int(a as u64) != Ordering::Less,
        });
    }
    if let Some(b1) = beta.get(&1) {
        if star.gamma_exact {
            chain.push(ChainCheck {
                relation: format!("beta* = {} <= beta_1 = {}", star.decimal(), b1),
                holds: star.cmp_int(b1.lower as u64) != Ordering::Greater,
            });
        }
        for b in beta.values().filter(|b| b.t > 1) {
            chain.push(ChainCheck {
                relation: format!("beta_{} = {} <= {} beta_1", b.t, b, b.t),
                holds: b.lower as u64 <= b.t as u64 * b1.upper as u64,
            });
        }
    }
    if let Some(a) = alpha {
        for b in beta.values() {
            chain.push(ChainCheck {
                relation: format!("alpha_arrow <= beta_{} / {} = {} / {}", b.t, b.t, b, b.t),
                holds: (a * b.t) as u64 <= b.upper as u64,
            });
        }
    }
    Ok(RateReport {
        description: description.to_string(),
        n: h.n(),
        alpha_arrow: alpha,
        beta_t: beta,
        beta_star: star,
        bounds,
        chain,
    })
}

/// Options with exact chromatic searches up to `exact_limit` vertices.
/// Independence searches keep their larger default limit.
pub fn options_for(exact_limit: usize, seed: u64, budget: u64) -> RateOptions {
    let d = RateOptions::default();
    RateOptions {
        chi_limits: d.chi_limits.with_vertex_limit(exact_limit),
        mis_limits: d
            .mis_limits
            .with_vertex_limit(EXACT_MIS_VERTEX_LIMIT.max(exact_limit)),
        seed,
        budget,
    }
}
