//! Bit-parallel branch and bound for maximum (weight) cliques.
//!
//! Candidates are greedily partitioned into independent color classes; the
//! sum over classes of the heaviest member bounds what the candidates can
//! still add. Vertices are renumbered by non-increasing degree so that bit
//! order is branching order. Ties break by lowest index, so results are
//! deterministic.

use crate::graph::{BitGraph, BitSet, Graph};

/// Outcome of a clique search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueOutcome {
    /// Best clique found, in ascending vertex order.
    pub clique: Vec<usize>,
    pub weight: u64,
    /// True when the search space was exhausted (the clique is optimal) or
    /// the requested target was met.
    pub complete: bool,
    pub nodes: u64,
}

pub(crate) struct CliqueSearch {
    rows: Vec<BitSet>,
    weights: Vec<u64>,
    // new index -> original vertex
    order: Vec<usize>,
    best: Vec<usize>,
    best_weight: u64,
    nodes: u64,
    node_limit: Option<u64>,
    target: Option<u64>,
    aborted: bool,
}

impl CliqueSearch {
    pub(crate) fn new(g: &BitGraph, weights: Option<&[u64]>) -> Self {
        let n = g.order();
        let w: Vec<u64> = weights.map_or_else(|| vec![1; n], |w| w.to_vec());
        assert_eq!(w.len(), n, "one weight per vertex");
        let mut order: Vec<usize> = (0..n).collect();
        // heavier and higher-degree vertices first
        order.sort_by_key(|&v| (std::cmp::Reverse(w[v]), std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| BitSet::from_items(n, g.row(v).iter().map(|u| pos[u])))
            .collect();
        let weights = order.iter().map(|&v| w[v]).collect();
        CliqueSearch {
            rows,
            weights,
            order,
            best: Vec::new(),
            best_weight: 0,
            nodes: 0,
            node_limit: None,
            target: None,
            aborted: false,
        }
    }

    pub(crate) fn node_limit(mut self, limit: Option<u64>) -> Self {
        self.node_limit = limit;
        self
    }

    pub(crate) fn target(mut self, target: Option<u64>) -> Self {
        self.target = target;
        self
    }

    /// Runs the search restricted to cliques containing every vertex of
    /// `forced` (original labels), which must itself be a clique.
    pub(crate) fn run(mut self, forced: &[usize]) -> CliqueOutcome {
        let n = self.order.len();
        let mut pos = vec![0; n];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        let mut current: Vec<usize> = forced.iter().map(|&v| pos[v]).collect();
        let mut cand = BitSet::full(n);
        for &v in &current {
            cand.intersect_with(&self.rows[v]);
        }
        let base: u64 = current.iter().map(|&v| self.weights[v]).sum();
        if base > self.best_weight {
            self.best = current.clone();
            self.best_weight = base;
        }
        if !self.target_met() {
            self.expand(&mut current, base, cand);
        }
        let mut clique: Vec<usize> = self.best.iter().map(|&i| self.order[i]).collect();
        clique.sort_unstable();
        CliqueOutcome {
            clique,
            weight: self.best_weight,
            complete: !self.aborted || self.target_met(),
            nodes: self.nodes,
        }
    }

    fn target_met(&self) -> bool {
        self.target.is_some_and(|t| self.best_weight >= t)
    }

    /// Greedy color classes over `cand`; returns vertices in class order
    /// together with the cumulative bound at each position.
    fn color_sort(&self, cand: &BitSet) -> (Vec<usize>, Vec<u64>) {
        let mut verts = Vec::with_capacity(cand.count());
        let mut bounds = Vec::with_capacity(verts.capacity());
        let mut uncolored = cand.clone();
        let mut acc = 0u64;
        while !uncolored.is_empty() {
            let mut avail = uncolored.clone();
            let mut class_max = 0;
            let start = verts.len();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.difference_with(&self.rows[v]);
                uncolored.remove(v);
                class_max = class_max.max(self.weights[v]);
                verts.push(v);
            }
            acc += class_max;
            bounds.extend(std::iter::repeat(acc).take(verts.len() - start));
        }
        (verts, bounds)
    }

    fn expand(&mut self, current: &mut Vec<usize>, weight: u64, mut cand: BitSet) {
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            self.aborted = true;
            return;
        }
        let (verts, bounds) = self.color_sort(&cand);
        for idx in (0..verts.len()).rev() {
            if self.aborted || self.target_met() {
                return;
            }
            if weight + bounds[idx] <= self.best_weight {
                return;
            }
            let v = verts[idx];
            current.push(v);
            let w = weight + self.weights[v];
            let next = cand.intersection(&self.rows[v]);
            if w > self.best_weight {
                self.best = current.clone();
                self.best_weight = w;
            }
            if !next.is_empty() {
                self.expand(current, w, next);
            }
            current.pop();
            cand.remove(v);
        }
    }
}

/// Maximum clique, exact unless `node_limit` runs out.
pub fn max_clique(g: &BitGraph, node_limit: Option<u64>) -> CliqueOutcome {
    let search = CliqueSearch::new(g, None).node_limit(node_limit);
    if g.is_vertex_transitive() && g.order() > 0 {
        search.run(&[0])
    } else {
        search.run(&[])
    }
}

/// Maximum-weight clique.
pub fn max_weight_clique(g: &BitGraph, weights: &[u64], node_limit: Option<u64>) -> CliqueOutcome {
    CliqueSearch::new(g, Some(weights))
        .node_limit(node_limit)
        .run(&[])
}

/// Searches for a clique of at least `target` vertices within a
/// deterministic node bound. Returns `None` if none was found.
pub fn find_clique(g: &BitGraph, target: usize, node_limit: Option<u64>) -> Option<Vec<usize>> {
    let search = CliqueSearch::new(g, None)
        .node_limit(node_limit)
        .target(Some(target as u64));
    let out = if g.is_vertex_transitive() && g.order() > 0 {
        search.run(&[0])
    } else {
        search.run(&[])
    };
    (out.clique.len() >= target).then_some(out.clique)
}

/// Greedy clique: repeatedly adds the lowest-index candidate.
pub fn greedy_clique(g: &BitGraph) -> Vec<usize> {
    let n = g.order();
    let mut cand = BitSet::full(n);
    let mut out = Vec::new();
    while let Some(v) = cand.first() {
        out.push(v);
        cand.intersect_with(g.row(v));
    }
    out
}
