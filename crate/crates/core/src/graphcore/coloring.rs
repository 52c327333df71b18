//! Greedy, DSATUR and exact colorings.
//!
//! The exact solver tests k-colorability for increasing k, starting at the
//! clique bound, with DSATUR-ordered backtracking. Symmetry breaking: a
//! maximum clique found up front is pre-colored `0..ω`, and a fresh color
//! is only ever the next unused one, which orders color classes by the
//! first vertex that received them. Before the exact phase, tabu search
//! lowers the DSATUR bound as far as it can.

use crate::graph::{BitGraph, Graph};

use super::clique::CliqueSearch;
use super::tabu::tabu_coloring;
use super::{ColoringCert, SearchError, SearchLimits};

const NONE: u16 = u16::MAX;

/// Tabu moves spent on each color count below the greedy bound.
pub const TABU_ITERATIONS: u64 = 50_000;

/// First-fit coloring visiting vertices in `order`.
pub fn greedy_coloring<G: Graph + ?Sized>(g: &G, order: &[usize]) -> ColoringCert {
    let n = g.order();
    let mut colors = vec![u32::MAX; n];
    for &v in order {
        let mut used: Vec<u32> = g
            .neighbors(v)
            .into_iter()
            .map(|u| colors[u])
            .filter(|&c| c != u32::MAX)
            .collect();
        used.sort_unstable();
        used.dedup();
        let c = used
            .iter()
            .enumerate()
            .find(|(i, &c)| *i as u32 != c)
            .map_or(used.len() as u32, |(i, _)| i as u32);
        colors[v] = c;
    }
    // vertices missing from `order` are colored last, in index order
    if colors.contains(&u32::MAX) {
        let rest: Vec<usize> = (0..n).filter(|&v| colors[v] == u32::MAX).collect();
        let mut merged: Vec<usize> = order.to_vec();
        merged.extend(rest);
        return greedy_coloring(g, &merged);
    }
    ColoringCert::from_table(colors)
}

struct Dsatur {
    adj: Vec<Vec<u32>>,
    degree: Vec<usize>,
    k: usize,
    color: Vec<u16>,
    counts: Vec<u16>,
    sat: Vec<u16>,
    uncolored: usize,
    nodes: u64,
    node_limit: Option<u64>,
}

impl Dsatur {
    fn new(g: &BitGraph, k: usize) -> Self {
        let n = g.order();
        let adj: Vec<Vec<u32>> = (0..n).map(|v| g.row(v).iter().map(|u| u as u32).collect()).collect();
        let degree = adj.iter().map(Vec::len).collect();
        Dsatur {
            adj,
            degree,
            k,
            color: vec![NONE; n],
            counts: vec![0; n * k],
            sat: vec![0; n],
            uncolored: n,
            nodes: 0,
            node_limit: None,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c as u16;
        self.uncolored -= 1;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i] as usize;
            let slot = &mut self.counts[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v] as usize;
        self.color[v] = NONE;
        self.uncolored += 1;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i] as usize;
            let slot = &mut self.counts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        for v in 0..self.color.len() {
            if self.color[v] != NONE {
                continue;
            }
            if best == usize::MAX
                || (self.sat[v], self.degree[v]) > (self.sat[best], self.degree[best])
            {
                best = v;
            }
        }
        best
    }

    /// `Some(true)` when a full k-coloring was reached, `Some(false)` when
    /// the subtree is refuted, `None` on budget exhaustion.
    fn solve(&mut self, used: usize) -> Option<bool> {
        if self.uncolored == 0 {
            return Some(true);
        }
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            return None;
        }
        let v = self.pick();
        if self.sat[v] as usize >= self.k {
            return Some(false);
        }
        for c in 0..(used + 1).min(self.k) {
            if self.counts[v * self.k + c] != 0 {
                continue;
            }
            self.assign(v, c);
            let r = self.solve(used.max(c + 1));
            if r == Some(true) {
                return r;
            }
            self.unassign(v);
            r?;
        }
        Some(false)
    }

    /// Plain DSATUR: never backtracks, opens a new color when stuck.
    fn greedy(g: &BitGraph) -> Vec<u32> {
        let n = g.order();
        let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        let mut d = Dsatur::new(g, max_degree + 1);
        for _ in 0..n {
            let v = d.pick();
            let c = (0..d.k).find(|&c| d.counts[v * d.k + c] == 0).unwrap();
            d.assign(v, c);
        }
        d.color.iter().map(|&c| c as u32).collect::<Vec<_>>()
    }
}

/// DSATUR greedy coloring (saturation, then degree, then lowest index).
pub fn dsatur_coloring(g: &BitGraph) -> ColoringCert {
    ColoringCert::from_table(Dsatur::greedy(g))
}

/// Result of a chromatic-number computation.
#[derive(Debug, Clone)]
pub struct ChromaticOutcome {
    /// Largest k proven necessary (clique bound or refuted colorings).
    pub lower: usize,
    /// Colors used by `coloring`.
    pub upper: usize,
    pub coloring: ColoringCert,
    pub clique: Vec<usize>,
    pub nodes: u64,
}

impl ChromaticOutcome {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Chromatic number bounds: exact when the node budget suffices.
///
/// `extra_lower` lets callers supply a bound proven elsewhere, such as
/// `ceil(|V| / α)`.
pub fn chromatic_interval<G: Graph + ?Sized>(
    g: &G,
    limits: SearchLimits,
    extra_lower: usize,
) -> Result<ChromaticOutcome, SearchError> {
    let n = g.order();
    if n > limits.vertex_limit {
        return Err(SearchError::SizeOverLimit {
            order: n,
            limit: limits.vertex_limit,
        });
    }
    let bg = BitGraph::materialize(g, limits.vertex_limit).expect("size checked");
    if n == 0 {
        return Ok(ChromaticOutcome {
            lower: 0,
            upper: 0,
            coloring: ColoringCert::from_table(vec![]),
            clique: vec![],
            nodes: 0,
        });
    }
    let clique_search = CliqueSearch::new(&bg, None).node_limit(limits.node_limit);
    let clique = if bg.is_vertex_transitive() {
        clique_search.run(&[0])
    } else {
        clique_search.run(&[])
    };
    let mut nodes = clique.nodes;
    let clique = clique.clique;
    let mut best = dsatur_coloring(&bg);
    let mut lower = clique.len().max(extra_lower);
    // local search downward from the greedy bound while it keeps succeeding
    while best.color_count() > lower {
        let k = best.color_count() - 1;
        match tabu_coloring(&bg, k, k as u64, TABU_ITERATIONS) {
            Some(table) => best = ColoringCert::from_table(table),
            None => break,
        }
    }
    let upper = best.color_count();
    let attempt = |k: usize, budget: Option<u64>| {
        let mut d = Dsatur::new(&bg, k);
        d.node_limit = budget;
        for (c, &v) in clique.iter().enumerate() {
            d.assign(v, c);
        }
        let r = d.solve(clique.len());
        let table: Vec<u32> = d.color.iter().map(|&c| c as u32).collect();
        (r, d.nodes, table)
    };
    // raise the lower bound by refuting k-colorings, smallest k first
    let mut stalled = false;
    for k in lower..upper {
        let (r, used, table) = attempt(k, limits.node_limit.map(|l| l.saturating_sub(nodes)));
        nodes += used;
        match r {
            Some(true) => {
                best = ColoringCert::from_table(table);
                break;
            }
            Some(false) => lower = k + 1,
            None => {
                stalled = true;
                break;
            }
        }
    }
    // budget ran out below the greedy bound: spend a second budget looking
    // for colorings downward from it, where they are easy to find
    if stalled {
        let mut spent = 0u64;
        let mut k = best.color_count();
        while k > lower + 1 {
            k -= 1;
            let (r, used, table) = attempt(k, limits.node_limit.map(|l| l.saturating_sub(spent)));
            spent += used;
            match r {
                Some(true) => best = ColoringCert::from_table(table),
                Some(false) => {
                    lower = k + 1;
                    break;
                }
                None => break,
            }
        }
        nodes += spent;
    }
    Ok(ChromaticOutcome {
        lower,
        upper: best.color_count(),
        coloring: best,
        clique,
        nodes,
    })
}

/// Exact chromatic number with an optimal coloring.
pub fn exact_chromatic<G: Graph + ?Sized>(
    g: &G,
    limits: SearchLimits,
) -> Result<(usize, ColoringCert), SearchError> {
    let out = chromatic_interval(g, limits, 0)?;
    if out.is_exact() {
        Ok((out.upper, out.coloring))
    } else {
        Err(SearchError::BudgetExhausted {
            lower: out.lower,
            upper: out.upper,
        })
    }
}
