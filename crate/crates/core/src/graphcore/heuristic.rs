//! Heuristic maximum independent sets for Cayley graphs.
//!
//! The search has two phases.
//!
//! 1. If the generator set is invariant under cyclically rotating words by
//!    some block width, the best union of rotation orbits is searched on the
//!    orbit quotient: an orbit is usable when it is independent, two orbits
//!    are compatible when no pair across them is adjacent, and a maximum
//!    weight clique of the compatibility graph (weights = orbit sizes) is a
//!    rotation-invariant independent set. This phase has a fixed node limit
//!    and does not depend on the budget.
//! 2. An iterated local search in the style of Andrade, Resende and Werneck
//!    starts from that set: each iteration force-inserts a random outside
//!    vertex, restores maximality, and applies (1,2)-swaps (remove one
//!    vertex, insert two) until none applies. The best set seen is kept.
//!
//! All randomness comes from a ChaCha8 stream seeded with the 64-bit seed,
//! so results are reproducible across platforms. For a fixed seed the
//! trajectory does not depend on the budget, so the returned size is
//! non-decreasing in the budget.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::confusion::{CayleyGraph, ENUMERATION_DIM_LIMIT};
use crate::graph::{BitGraph, BitSet};
use crate::model::low_mask;

use super::clique::CliqueSearch;
use super::{IndependentSetCert, Optimality};

/// Quotients with more usable orbits than this are skipped.
const QUOTIENT_ORBIT_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeuristicOptions {
    pub seed: u64,
    /// Local-search iterations. Zero returns the singleton `{0}`.
    pub budget: u64,
    /// Node limit for the orbit-quotient clique search.
    pub quotient_node_limit: u64,
    /// Use the rotation-orbit phase when the graph admits it.
    pub use_rotation: bool,
}

impl HeuristicOptions {
    pub fn new(seed: u64, budget: u64) -> Self {
        HeuristicOptions {
            seed,
            budget,
            quotient_node_limit: 200_000,
            use_rotation: true,
        }
    }
}

fn rotate(x: u64, shift: usize, dim: usize) -> u64 {
    if shift == 0 || shift == dim {
        return x;
    }
    ((x << shift) | (x >> (dim - shift))) & low_mask(dim)
}

/// Smallest proper rotation width under which the generator set is closed.
pub fn rotation_shift(c: &CayleyGraph) -> Option<usize> {
    let dim = c.dim();
    (1..dim)
        .filter(|s| dim % s == 0)
        .find(|&s| c.generators().iter().all(|&g| c.is_generator(rotate(g, s, dim))))
}

/// Orbits of `Z_2^dim` under rotation by `shift` bits.
///
/// Each orbit starts at its least element and follows successive rotations;
/// orbits are ordered by least element.
pub fn rotation_orbits(dim: usize, shift: usize) -> Vec<Vec<u64>> {
    assert!(dim <= ENUMERATION_DIM_LIMIT, "orbit enumeration needs dim <= 22");
    assert!(shift >= 1 && dim % shift == 0, "shift must divide the dimension");
    let order = 1usize << dim;
    let mut seen = BitSet::new(order);
    let mut orbits = Vec::new();
    for x in 0..order as u64 {
        if seen.contains(x as usize) {
            continue;
        }
        let mut orbit = vec![x];
        seen.insert(x as usize);
        let mut y = rotate(x, shift, dim);
        while y != x {
            seen.insert(y as usize);
            orbit.push(y);
            y = rotate(y, shift, dim);
        }
        orbits.push(orbit);
    }
    orbits
}

/// Best rotation-invariant independent set found by the quotient search.
fn quotient_solution(c: &CayleyGraph, shift: usize, node_limit: u64) -> Option<Vec<u64>> {
    let orbits = rotation_orbits(c.dim(), shift);
    let usable: Vec<&Vec<u64>> = orbits
        .iter()
        .filter(|o| o[1..].iter().all(|&y| !c.is_generator(o[0] ^ y)))
        .collect();
    if usable.is_empty() || usable.len() > QUOTIENT_ORBIT_LIMIT {
        return None;
    }
    let n = usable.len();
    let mut compat = BitGraph::empty(n);
    for a in 0..n {
        let rep = usable[a][0];
        for b in a + 1..n {
            if usable[b].iter().all(|&y| !c.is_generator(rep ^ y)) {
                compat.add_edge(a, b);
            }
        }
    }
    let weights: Vec<u64> = usable.iter().map(|o| o.len() as u64).collect();
    let out = CliqueSearch::new(&compat, Some(&weights))
        .node_limit(Some(node_limit))
        .run(&[]);
    let mut words: Vec<u64> = out
        .clique
        .iter()
        .flat_map(|&i| usable[i].iter().copied())
        .collect();
    words.sort_unstable();
    Some(words)
}

struct LocalSearch<'a> {
    c: &'a CayleyGraph,
    order: u64,
    in_set: Vec<bool>,
    tight: Vec<u32>,
    members: Vec<u64>,
    slot: Vec<u32>,
}

impl<'a> LocalSearch<'a> {
    fn new(c: &'a CayleyGraph) -> Self {
        let order = c.vertex_count();
        LocalSearch {
            c,
            order,
            in_set: vec![false; order as usize],
            tight: vec![0; order as usize],
            members: Vec::new(),
            slot: vec![u32::MAX; order as usize],
        }
    }

    fn gens(&self) -> &'a [u64] {
        self.c.generators()
    }

    fn add(&mut self, v: u64) {
        debug_assert!(!self.in_set[v as usize] && self.tight[v as usize] == 0);
        self.in_set[v as usize] = true;
        self.slot[v as usize] = self.members.len() as u32;
        self.members.push(v);
        for &g in self.gens() {
            self.tight[(v ^ g) as usize] += 1;
        }
    }

    fn remove(&mut self, v: u64) {
        self.in_set[v as usize] = false;
        let i = self.slot[v as usize] as usize;
        self.members.swap_remove(i);
        if i < self.members.len() {
            self.slot[self.members[i] as usize] = i as u32;
        }
        self.slot[v as usize] = u32::MAX;
        for &g in self.gens() {
            self.tight[(v ^ g) as usize] -= 1;
        }
    }

    fn is_free(&self, v: u64) -> bool {
        !self.in_set[v as usize] && self.tight[v as usize] == 0
    }

    fn reset_to(&mut self, words: &[u64]) {
        for v in self.members.clone() {
            self.remove(v);
        }
        for &v in words {
            self.add(v);
        }
    }

    /// Adds free vertices in increasing order.
    fn fill_lexicographic(&mut self) {
        for v in 0..self.order {
            if self.is_free(v) {
                self.add(v);
            }
        }
    }

    /// The unique solution neighbor of a 1-tight vertex.
    fn sole_blocker(&self, u: u64) -> Option<u64> {
        self.gens().iter().map(|&g| u ^ g).find(|&x| self.in_set[x as usize])
    }

    /// Tries one (1,2)-swap around solution vertex `x`.
    fn two_improvement(&mut self, x: u64, queue: &mut Vec<u64>) -> bool {
        let candidates: Vec<u64> = self
            .gens()
            .iter()
            .map(|&g| x ^ g)
            .filter(|&u| !self.in_set[u as usize] && self.tight[u as usize] == 1)
            .collect();
        if candidates.len() < 2 {
            return false;
        }
        for i in 0..candidates.len() {
            for j in i + 1..candidates.len() {
                let (a, b) = (candidates[i], candidates[j]);
                if self.c.is_generator(a ^ b) {
                    continue;
                }
                self.remove(x);
                self.add(a);
                self.add(b);
                for &u in &candidates {
                    if self.is_free(u) {
                        self.add(u);
                        queue.push(u);
                    }
                }
                queue.push(a);
                queue.push(b);
                self.enqueue_around(x, queue);
                return true;
            }
        }
        false
    }

    /// Queues solution vertices that may have gained swap candidates after
    /// `x` left the solution.
    fn enqueue_around(&self, x: u64, queue: &mut Vec<u64>) {
        for &g in self.gens() {
            let u = x ^ g;
            if !self.in_set[u as usize] && self.tight[u as usize] == 1 {
                if let Some(y) = self.sole_blocker(u) {
                    queue.push(y);
                }
            }
        }
    }

    fn local_search(&mut self, mut queue: Vec<u64>) {
        while let Some(x) = queue.pop() {
            if self.in_set[x as usize] {
                self.two_improvement(x, &mut queue);
            }
        }
    }

    /// Force-inserts `v`, evicting its solution neighbors and refilling.
    fn perturb(&mut self, v: u64) -> Vec<u64> {
        let evicted: Vec<u64> = self
            .gens()
            .iter()
            .map(|&g| v ^ g)
            .filter(|&x| self.in_set[x as usize])
            .collect();
        for &x in &evicted {
            self.remove(x);
        }
        self.add(v);
        let mut queue = vec![v];
        for &x in &evicted {
            for &g in self.gens() {
                let u = x ^ g;
                if self.is_free(u) {
                    self.add(u);
                    queue.push(u);
                }
            }
            self.enqueue_around(x, &mut queue);
        }
        queue
    }
}

/// Heuristic independent set with default options.
pub fn independent_set_heuristic(c: &CayleyGraph, seed: u64, budget: u64) -> IndependentSetCert {
    independent_set_heuristic_with(c, &HeuristicOptions::new(seed, budget))
}

pub fn independent_set_heuristic_with(c: &CayleyGraph, opts: &HeuristicOptions) -> IndependentSetCert {
    let order = c.vertex_count() as usize;
    let singleton = || IndependentSetCert::new(order, vec![0], Optimality::Heuristic);
    if opts.budget == 0 || c.dim() > ENUMERATION_DIM_LIMIT {
        return singleton();
    }
    let start = opts
        .use_rotation
        .then(|| rotation_shift(c))
        .flatten()
        .and_then(|s| quotient_solution(c, s, opts.quotient_node_limit))
        .unwrap_or_default();

    let mut ls = LocalSearch::new(c);
    ls.reset_to(&start);
    ls.fill_lexicographic();
    let all = ls.members.clone();
    ls.local_search(all);
    let mut best = ls.members.clone();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.budget {
        if ls.members.len() as u64 == ls.order {
            break;
        }
        let v = loop {
            let v = rng.gen_range(0..ls.order);
            if !ls.in_set[v as usize] {
                break v;
            }
        };
        let queue = ls.perturb(v);
        ls.local_search(queue);
        let (size, best_size) = (ls.members.len(), best.len());
        if size > best_size {
            best = ls.members.clone();
        } else if size < best_size {
            // drift further from the best solution only occasionally
            let gap = (best_size - size) as f64;
            if !rng.gen_bool(1.0 / (1.0 + gap * gap * 4.0)) {
                ls.reset_to(&best);
            }
        }
    }
    best.sort_unstable();
    IndependentSetCert::new(order, best, Optimality::Heuristic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{max_independent_set_exact, verify_independent_set, SearchLimits};

    fn antihole_cayley(m: usize) -> CayleyGraph {
        let mask = low_mask(m);
        let mut gens = Vec::new();
        for i in 0..m {
            for run in [0b1u64, 0b11, 0b111] {
                gens.push(((run << i) | (run >> (m - i))) & mask);
            }
        }
        CayleyGraph::new(m, gens).unwrap()
    }

    #[test]
    fn orbits_partition_the_group() {
        let orbits = rotation_orbits(6, 2);
        let total: usize = orbits.iter().map(Vec::len).sum();
        assert_eq!(total, 64);
        assert!(orbits.iter().all(|o| [1, 3].contains(&o.len())));
        assert_eq!(orbits[0], vec![0]);
        assert_eq!(orbits[1], vec![1, 4, 16]);
    }

    #[test]
    fn rotation_detected_on_antiholes() {
        assert_eq!(rotation_shift(&antihole_cayley(7)), Some(1));
        let lopsided = CayleyGraph::new(4, [1]).unwrap();
        assert_eq!(rotation_shift(&lopsided), None);
    }

    #[test]
    fn budget_zero_is_singleton() {
        let c = antihole_cayley(7);
        let cert = independent_set_heuristic(&c, 1, 0);
        assert_eq!(cert.words(), &[0]);
    }

    #[test]
    fn reaches_exact_alpha_on_small_graphs() {
        let c = antihole_cayley(7);
        let exact = max_independent_set_exact(&c, SearchLimits::mis()).unwrap().len();
        let cert = independent_set_heuristic(&c, 5, 200);
        assert!(verify_independent_set(&c, &cert).is_ok());
        assert_eq!(cert.len(), exact);
    }

    #[test]
    fn monotone_in_budget() {
        let c = CayleyGraph::new(8, [1, 2, 4, 8, 16, 32, 64, 128, 3, 12, 48, 192, 0x81]).unwrap();
        let mut last = 0;
        for budget in [0, 1, 5, 20, 100, 400] {
            let opts = HeuristicOptions {
                use_rotation: false,
                ..HeuristicOptions::new(9, budget)
            };
            let cert = independent_set_heuristic_with(&c, &opts);
            assert!(verify_independent_set(&c, &cert).is_ok());
            assert!(cert.len() >= last);
            last = cert.len();
        }
    }
}
