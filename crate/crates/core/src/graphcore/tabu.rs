//! Tabu search for k-colorings (Hertz and de Werra's TabuCol).
//!
//! Minimizes the number of monochromatic edges over complete assignments.
//! Each step recolors one conflicting vertex to the color that lowers the
//! conflict count most; undoing a recent move is forbidden for a tenure
//! that grows with the current conflict count, unless it reaches a new best.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{BitGraph, Graph};

/// Searches for a proper `k`-coloring within `max_iters` moves. The result
/// is deterministic for a given `seed`.
pub fn tabu_coloring(g: &BitGraph, k: usize, seed: u64, max_iters: u64) -> Option<Vec<u32>> {
    let n = g.order();
    if n == 0 {
        return Some(vec![]);
    }
    if k == 0 || (k == 1 && g.edge_count() > 0) {
        return None;
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.row(v).iter().collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut color: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    // gamma[v * k + c]: neighbors of v colored c
    let mut gamma = vec![0u32; n * k];
    for v in 0..n {
        for &u in &adj[v] {
            gamma[v * k + color[u]] += 1;
        }
    }
    let mut conflicts: u64 = (0..n).map(|v| gamma[v * k + color[v]] as u64).sum::<u64>() / 2;
    let mut best = conflicts;
    let mut tabu_until = vec![0u64; n * k];
    let mut moves = Vec::new();
    for iter in 1..=max_iters {
        if conflicts == 0 {
            return Some(color.iter().map(|&c| c as u32).collect());
        }
        let mut best_delta = i64::MAX;
        moves.clear();
        for v in (0..n).filter(|&v| gamma[v * k + color[v]] > 0) {
            let here = gamma[v * k + color[v]] as i64;
            for c in (0..k).filter(|&c| c != color[v]) {
                let delta = gamma[v * k + c] as i64 - here;
                let allowed = tabu_until[v * k + c] < iter || (conflicts as i64 + delta) < best as i64;
                if !allowed || delta > best_delta {
                    continue;
                }
                if delta < best_delta {
                    best_delta = delta;
                    moves.clear();
                }
                moves.push((v, c));
            }
        }
        let (v, c) = if moves.is_empty() {
            // every move is tabu: recolor a random conflicting vertex
            let v = loop {
                let v = rng.gen_range(0..n);
                if gamma[v * k + color[v]] > 0 {
                    break v;
                }
            };
            (v, (color[v] + 1 + rng.gen_range(0..k - 1)) % k)
        } else {
            moves[rng.gen_range(0..moves.len())]
        };
        let old = color[v];
        conflicts = (conflicts as i64 + gamma[v * k + c] as i64 - gamma[v * k + old] as i64) as u64;
        for &u in &adj[v] {
            gamma[u * k + old] -= 1;
            gamma[u * k + c] += 1;
        }
        color[v] = c;
        tabu_until[v * k + old] = iter + rng.gen_range(0..10) + (conflicts as f64 * 0.6) as u64;
        best = best.min(conflicts);
    }
    (conflicts == 0).then(|| color.iter().map(|&c| c as u32).collect())
}
