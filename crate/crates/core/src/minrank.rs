//! Min-rank of a graph over small finite fields.
//!
//! A square matrix `A` fits a graph `G` when every diagonal entry is
//! nonzero and `A[i][j] = 0` whenever `i != j` and `ij` is not an edge. The
//! smallest rank of a fitting matrix lower-bounds the length of any linear
//! index code for the side-information graph `G`.
//!
//! The search uses the column view of a rank-`r` factorization `A = B C`:
//! a fit of rank at most `r` exists iff one can pick vectors `c_i` in
//! `F^r` with `c_i` outside the span of `{c_j : j != i, ij not an edge}`.
//! Columns are assigned in order, each either the next unit vector or a
//! normalized vector in the span of the unit vectors used so far, which is
//! the reduced echelon form of `C` up to column scaling.
//!
//! Matrices are stored in `.mat` files:
//!
//! ```text
//! field GF(2)
//! 1 1 0 0 1
//! 1 1 1 0 0
//! ```

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::codes::Gf2m;
use crate::graph::{BitGraph, Graph};
use crate::model::SideInfoGraph;

/// Field sizes supported by [`Field::new`].
pub const SUPPORTED_FIELDS: [u32; 6] = [2, 3, 4, 5, 7, 8];
/// Largest rank the search accepts.
pub const MAX_SEARCH_RANK: usize = 4;
/// Largest graph the search accepts.
pub const MAX_SEARCH_ORDER: usize = 32;
/// Node budget for one call of [`min_rank_search`].
pub const SEARCH_NODE_LIMIT: u64 = 2_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinRankError {
    #[error("GF({0}) is not supported; use one of 2, 3, 4, 5, 7, 8")]
    UnsupportedField(u32),
    #[error("matrix is {rows}x{cols} but the graph has {order} vertices")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        order: usize,
    },
    #[error("entry {value} is not an element of GF({q})")]
    BadEntry { value: u32, q: u32 },
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// `GF(q)` for `q` in [`SUPPORTED_FIELDS`]; elements are `0..q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Prime(u32),
    Binary(Gf2m),
}

impl Field {
    pub fn new(q: u32) -> Result<Self, MinRankError> {
        match q {
            2 | 3 | 5 | 7 => Ok(Field::Prime(q)),
            4 => Ok(Field::Binary(Gf2m::new(2).map_err(|_| MinRankError::UnsupportedField(q))?)),
            8 => Ok(Field::Binary(Gf2m::new(3).map_err(|_| MinRankError::UnsupportedField(q))?)),
            _ => Err(MinRankError::UnsupportedField(q)),
        }
    }

    pub fn size(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            Field::Binary(f) => f.size(),
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Field::Prime(p) => (a + b) % p,
            Field::Binary(_) => a ^ b,
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        match self {
            Field::Prime(p) => (p - a) % p,
            Field::Binary(_) => a,
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            Field::Prime(p) => a * b % p,
            Field::Binary(f) => f.mul(a, b),
        }
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        match self {
            Field::Prime(p) => (a % p != 0).then(|| (1..*p).find(|&b| a * b % p == 1).unwrap()),
            Field::Binary(f) => f.inv(a),
        }
    }
}

/// Dense square-or-rectangular matrix over a supported field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    q: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(q: u32, rows: usize, cols: usize) -> Result<Self, MinRankError> {
        Field::new(q)?;
        Ok(Matrix {
            q,
            rows,
            cols,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(q: u32, n: usize) -> Result<Self, MinRankError> {
        let mut m = Matrix::zeros(q, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn from_rows(q: u32, rows: Vec<Vec<u32>>) -> Result<Self, MinRankError> {
        Field::new(q)?;
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(MinRankError::Parse {
                    line: i + 1,
                    msg: format!("row has {} entries, expected {c}", row.len()),
                });
            }
            for v in row {
                if v >= q {
                    return Err(MinRankError::BadEntry { value: v, q });
                }
                data.push(v);
            }
        }
        Ok(Matrix {
            q,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn field_size(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        assert!(v < self.q, "entry outside the field");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_mat(&self) -> String {
        let mut out = format!("field GF({})\n", self.q);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_mat(text: &str) -> Result<Self, MinRankError> {
        let mut q = None;
        let mut rows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| MinRankError::Parse { line: idx + 1, msg };
            if q.is_none() {
                let spec = line
                    .strip_prefix("field")
                    .map(str::trim)
                    .and_then(|s| s.strip_prefix("GF("))
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| err("expected `field GF(q)` header".into()))?;
                q = Some(spec.parse::<u32>().map_err(|e| err(e.to_string()))?);
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| tok.parse::<u32>().map_err(|e| err(format!("{tok:?}: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let q = q.ok_or(MinRankError::Parse {
            line: 1,
            msg: "missing `field GF(q)` header".into(),
        })?;
        Matrix::from_rows(q, rows)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Rank by Gaussian elimination over `GF(q)`.
pub fn rank_gf(m: &Matrix) -> Result<usize, MinRankError> {
    let f = Field::new(m.q)?;
    Ok(rank_rows(&f, m.cols, (0..m.rows).map(|i| m.row(i).to_vec()).collect()))
}

fn rank_rows(f: &Field, cols: usize, mut rows: Vec<Vec<u32>>) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][col]).expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let c = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(c, p));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Which entries of an `n x n` matrix are forced.
///
/// Every position is in exactly one of the three lists. Free positions are
/// the edges, listed in both orientations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingPattern {
    pub n: usize,
    pub diagonal: Vec<usize>,
    pub zeros: Vec<(usize, usize)>,
    pub free: Vec<(usize, usize)>,
}

impl FittingPattern {
    pub fn from_graph(g: &BitGraph) -> Self {
        Self::build(g.order(), |i, j| g.adjacent(i, j))
    }

    /// Directed version: row `i` may be nonzero at `j` when receiver `i`
    /// knows block `j`.
    pub fn from_side_info(g: &SideInfoGraph) -> Self {
        Self::build(g.n(), |i, j| g.has_arc(i, j))
    }

    fn build(n: usize, allowed: impl Fn(usize, usize) -> bool) -> Self {
        let mut zeros = Vec::new();
        let mut free = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if allowed(i, j) {
                    free.push((i, j));
                } else {
                    zeros.push((i, j));
                }
            }
        }
        FittingPattern {
            n,
            diagonal: (0..n).collect(),
            zeros,
            free,
        }
    }

    /// For each row, the columns forced to zero.
    fn zero_rows(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new(); self.n];
        for &(i, j) in &self.zeros {
            rows[i].push(j);
        }
        rows
    }

    pub fn is_fitted_by(&self, m: &Matrix) -> Result<bool, MinRankError> {
        if m.rows != self.n || m.cols != self.n {
            return Err(MinRankError::ShapeMismatch {
                rows: m.rows,
                cols: m.cols,
                order: self.n,
            });
        }
        Ok(self.diagonal.iter().all(|&i| m.get(i, i) != 0)
            && self.zeros.iter().all(|&(i, j)| m.get(i, j) == 0))
    }
}

/// Whether `m` fits `g`.
pub fn fits(m: &Matrix, g: &BitGraph) -> Result<bool, MinRankError> {
    FittingPattern::from_graph(g).is_fitted_by(m)
}

/// Result of a min-rank search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinRankOutcome {
    /// Smallest rank with a fitting matrix, and one such matrix.
    Found { rank: usize, witness: Matrix },
    /// No fitting matrix has rank at most this value.
    Above(usize),
}

/// Smallest `r <= r_max` such that a matrix over `GF(q)` of rank `r` fits
/// `g`.
pub fn min_rank_search(g: &BitGraph, q: u32, r_max: usize) -> Result<MinRankOutcome, MinRankError> {
    min_rank_search_pattern(&FittingPattern::from_graph(g), q, r_max)
}

pub fn min_rank_search_pattern(
    pattern: &FittingPattern,
    q: u32,
    r_max: usize,
) -> Result<MinRankOutcome, MinRankError> {
    let field = Field::new(q)?;
    if r_max > MAX_SEARCH_RANK {
        return Err(MinRankError::SearchSpaceTooLarge(format!(
            "rank bound {r_max} above {MAX_SEARCH_RANK}"
        )));
    }
    if pattern.n > MAX_SEARCH_ORDER {
        return Err(MinRankError::SearchSpaceTooLarge(format!(
            "{} vertices, above {MAX_SEARCH_ORDER}",
            pattern.n
        )));
    }
    if pattern.n == 0 {
        return Ok(MinRankOutcome::Found {
            rank: 0,
            witness: Matrix::zeros(q, 0, 0)?,
        });
    }
    for r in 1..=r_max.min(pattern.n) {
        if let Some(cols) = ColumnSearch::new(&field, pattern, r).run()? {
            let witness = witness_from_columns(&field, pattern, &cols);
            let rank = rank_gf(&witness)?;
            debug_assert!(pattern.is_fitted_by(&witness)?);
            debug_assert!(rank <= r);
            return Ok(MinRankOutcome::Found { rank, witness });
        }
    }
    // the identity always fits, so min-rank is at most n
    if r_max >= pattern.n {
        let witness = Matrix::identity(q, pattern.n)?;
        return Ok(MinRankOutcome::Found {
            rank: pattern.n,
            witness,
        });
    }
    Ok(MinRankOutcome::Above(r_max))
}

/// Checks exhaustively that no matrix of rank at most 2 over `GF(q)` fits
/// the complement of the `m`-cycle. Returns a fitting matrix if one exists.
pub fn antihole_rank2_refute(m: usize, q: u32) -> Result<Result<(), Matrix>, MinRankError> {
    let g = BitGraph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m))).complement();
    match min_rank_search(&g, q, 2)? {
        MinRankOutcome::Found { witness, .. } => Ok(Err(witness)),
        MinRankOutcome::Above(_) => Ok(Ok(())),
    }
}

struct ColumnSearch<'a> {
    field: &'a Field,
    r: usize,
    n: usize,
    zero_rows: Vec<Vec<usize>>,
    /// Normalized vectors in `F^r`, grouped by the number of leading
    /// coordinates they use.
    candidates: Vec<Vec<Vec<u32>>>,
}

impl<'a> ColumnSearch<'a> {
    fn new(field: &'a Field, pattern: &FittingPattern, r: usize) -> Self {
        let q = field.size();
        // candidates[p]: nonzero vectors supported on the first p
        // coordinates whose last nonzero entry is 1
        let mut candidates = vec![Vec::new(); r + 1];
        for (p, slot) in candidates.iter_mut().enumerate() {
            let total = (q as u64).pow(p as u32);
            for code in 1..total {
                let mut v = vec![0u32; r];
                let mut c = code;
                for x in v.iter_mut().take(p) {
                    *x = (c % q as u64) as u32;
                    c /= q as u64;
                }
                if v[..p].iter().rev().find(|&&x| x != 0) == Some(&1) {
                    slot.push(v);
                }
            }
        }
        ColumnSearch {
            field,
            r,
            n: pattern.n,
            zero_rows: pattern.zero_rows(),
            candidates,
        }
    }

    /// Options for the next column given `p` pivots used so far.
    fn options(&self, p: usize) -> Vec<(Vec<u32>, usize)> {
        let mut out: Vec<(Vec<u32>, usize)> =
            self.candidates[p].iter().map(|v| (v.clone(), p)).collect();
        if p < self.r {
            let mut e = vec![0u32; self.r];
            e[p] = 1;
            out.push((e, p + 1));
        }
        out
    }

    /// Every assigned column stays outside the span of its assigned
    /// forbidden partners.
    fn consistent(&self, cols: &[Vec<u32>]) -> bool {
        let k = cols.len();
        for i in 0..k {
            let partners: Vec<Vec<u32>> = self.zero_rows[i]
                .iter()
                .filter(|&&j| j < k)
                .map(|&j| cols[j].clone())
                .collect();
            if in_span(self.field, self.r, &partners, &cols[i]) {
                return false;
            }
        }
        // earlier rows gain partners when column k-1 is added; the loop above
        // covers them because it rechecks every assigned row
        true
    }

    fn run(&self) -> Result<Option<Vec<Vec<u32>>>, MinRankError> {
        // expand a few levels serially, then split the subtrees over threads
        let mut frontier: Vec<(Vec<Vec<u32>>, usize)> = vec![(Vec::new(), 0)];
        while frontier.len() < 64 && frontier.first().is_some_and(|f| f.0.len() < self.n) {
            let mut next = Vec::new();
            for (cols, p) in frontier {
                for (v, np) in self.options(p) {
                    let mut c = cols.clone();
                    c.push(v);
                    if self.consistent(&c) {
                        next.push((c, np));
                    }
                }
            }
            frontier = next;
            if frontier.is_empty() {
                return Ok(None);
            }
        }
        let budget = std::sync::atomic::AtomicU64::new(0);
        let found = frontier.par_iter().map(|(cols, p)| {
            let mut cols = cols.clone();
            self.dfs(&mut cols, *p, &budget).map(|ok| ok.then_some(cols))
        });
        let results: Vec<Option<Option<Vec<Vec<u32>>>>> = found.collect();
        let mut exhausted = false;
        for r in results {
            match r {
                Some(Some(cols)) => return Ok(Some(cols)),
                Some(None) => {}
                None => exhausted = true,
            }
        }
        if exhausted {
            return Err(MinRankError::SearchSpaceTooLarge(format!(
                "node budget of {SEARCH_NODE_LIMIT} exhausted at rank {}",
                self.r
            )));
        }
        Ok(None)
    }

    /// `Some(true)` when a full assignment was found, `None` on budget
    /// exhaustion.
    fn dfs(
        &self,
        cols: &mut Vec<Vec<u32>>,
        p: usize,
        budget: &std::sync::atomic::AtomicU64,
    ) -> Option<bool> {
        if cols.len() == self.n {
            return Some(true);
        }
        if budget.fetch_add(1, std::sync::atomic::Ordering::Relaxed) > SEARCH_NODE_LIMIT {
            return None;
        }
        for (v, np) in self.options(p) {
            cols.push(v);
            if self.consistent(cols) && self.dfs(cols, np, budget)? {
                return Some(true);
            }
            cols.pop();
        }
        Some(false)
    }
}

/// Whether `v` lies in the span of `basis` (vectors in `F^r`).
fn in_span(f: &Field, r: usize, basis: &[Vec<u32>], v: &[u32]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|&x| x == 0);
    }
    let base = rank_rows(f, r, basis.to_vec());
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank_rows(f, r, with) == base
}

/// Builds `A[i][j] = b_i . c_j` with `b_i` orthogonal to the forbidden
/// columns of row `i` and not to `c_i`.
fn witness_from_columns(f: &Field, pattern: &FittingPattern, cols: &[Vec<u32>]) -> Matrix {
    let n = pattern.n;
    let r = cols[0].len();
    let zero_rows = pattern.zero_rows();
    let q = f.size();
    let mut m = Matrix {
        q,
        rows: n,
        cols: n,
        data: vec![0; n * n],
    };
    let dot = |a: &[u32], b: &[u32]| a.iter().zip(b).fold(0, |s, (&x, &y)| f.add(s, f.mul(x, y)));
    for i in 0..n {
        // q^r <= 8^4 candidate vectors, so a direct scan is cheap
        let total = (q as u64).pow(r as u32);
        let b = (1..total)
            .map(|mut code| {
                let mut v = vec![0u32; r];
                for x in v.iter_mut() {
                    *x = (code % q as u64) as u32;
                    code /= q as u64;
                }
                v
            })
            .find(|b| dot(b, &cols[i]) != 0 && zero_rows[i].iter().all(|&j| dot(b, &cols[j]) == 0))
            .expect("column outside the span has a separating functional");
        for j in 0..n {
            m.data[i * n + j] = dot(&b, &cols[j]);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antihole(m: usize) -> BitGraph {
        BitGraph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m))).complement()
    }

    #[test]
    fn field_axioms() {
        for q in SUPPORTED_FIELDS {
            let f = Field::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "GF({q}) inverse of {a}");
                }
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "GF({q})"
                        );
                    }
                }
            }
        }
        assert!(Field::new(6).is_err());
        assert!(Field::new(9).is_err());
    }

    #[test]
    fn rank_examples() {
        for q in SUPPORTED_FIELDS {
            assert_eq!(rank_gf(&Matrix::identity(q, 5).unwrap()).unwrap(), 5);
            assert_eq!(rank_gf(&Matrix::zeros(q, 4, 4).unwrap()).unwrap(), 0);
            let u = [1, 0, q - 1, 1];
            let v = [1.min(q - 1), q - 1, 0, 2 % q];
            let f = Field::new(q).unwrap();
            let rows = u.iter().map(|&a| v.iter().map(|&b| f.mul(a, b)).collect()).collect();
            assert_eq!(rank_gf(&Matrix::from_rows(q, rows).unwrap()).unwrap(), 1);
        }
    }

    #[test]
    fn fitting_basics() {
        let g = antihole(5);
        let id = Matrix::identity(2, 5).unwrap();
        assert!(fits(&id, &g).unwrap());
        let ones = Matrix::from_rows(2, vec![vec![1; 5]; 5]).unwrap();
        assert!(!fits(&ones, &g).unwrap());
        assert_eq!(FittingPattern::from_graph(&g).zeros.len(), 10);
        assert!(fits(&Matrix::identity(2, 4).unwrap(), &g).is_err());
    }

    #[test]
    fn trivial_min_ranks() {
        for q in [2, 3, 4] {
            match min_rank_search(&BitGraph::complete(5), q, 2).unwrap() {
                MinRankOutcome::Found { rank, .. } => assert_eq!(rank, 1),
                other => panic!("{other:?}"),
            }
            match min_rank_search(&BitGraph::empty(4), q, 4).unwrap() {
                MinRankOutcome::Found { rank, .. } => assert_eq!(rank, 4),
                other => panic!("{other:?}"),
            }
        }
        assert_eq!(
            min_rank_search(&BitGraph::empty(4), 2, 3).unwrap(),
            MinRankOutcome::Above(3)
        );
    }

    #[test]
    fn cycle5_complement_has_min_rank_three() {
        let g = antihole(5);
        match min_rank_search(&g, 2, 3).unwrap() {
            MinRankOutcome::Found { rank, witness } => {
                assert_eq!(rank, 3);
                assert!(fits(&witness, &g).unwrap());
                assert_eq!(rank_gf(&witness).unwrap(), 3);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(antihole_rank2_refute(5, 2).unwrap(), Ok(()));
        assert_eq!(antihole_rank2_refute(5, 3).unwrap(), Ok(()));
    }

    #[test]
    fn brute_force_agrees_on_five_vertices() {
        // enumerate every GF(2) matrix fitting small graphs directly
        let mut x = 5u64;
        for _ in 0..12 {
            let mut g = BitGraph::empty(5);
            for u in 0..5 {
                for v in u + 1..5 {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if (x >> 35) & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
            }
            let pattern = FittingPattern::from_graph(&g);
            let free = &pattern.free;
            let mut best = 5;
            for code in 0u64..1 << free.len() {
                let mut m = Matrix::identity(2, 5).unwrap();
                for (b, &(i, j)) in free.iter().enumerate() {
                    m.set(i, j, (code >> b & 1) as u32);
                }
                best = best.min(rank_gf(&m).unwrap());
            }
            match min_rank_search(&g, 2, 4).unwrap() {
                MinRankOutcome::Found { rank, witness } => {
                    assert_eq!(rank, best);
                    assert!(fits(&witness, &g).unwrap());
                }
                MinRankOutcome::Above(_) => assert_eq!(best, 5),
            }
        }
    }

    #[test]
    fn mat_round_trip() {
        let m = Matrix::from_rows(4, vec![vec![1, 3, 0], vec![2, 1, 0], vec![0, 0, 1]]).unwrap();
        let text = m.to_mat();
        assert!(text.starts_with("field GF(4)\n"));
        assert_eq!(Matrix::parse_mat(&text).unwrap(), m);
        assert!(Matrix::parse_mat("1 0\n0 1\n").is_err());
        assert!(matches!(
            Matrix::parse_mat("field GF(2)\n1 2\n0 1\n"),
            Err(MinRankError::BadEntry { .. })
        ));
    }

    #[test]
    fn search_limits() {
        assert!(matches!(
            min_rank_search(&BitGraph::empty(3), 2, 5),
            Err(MinRankError::SearchSpaceTooLarge(_))
        ));
        assert!(matches!(
            min_rank_search(&BitGraph::empty(3), 6, 2),
            Err(MinRankError::UnsupportedField(6))
        ));
    }
}
