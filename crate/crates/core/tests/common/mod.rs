//! Reference implementations used as independent oracles by the
//! integration tests. They are written for clarity, not speed, and share no
//! code with the library's searches.

#![allow(dead_code)]

use sidecast::BroadcastHypergraph;

/// Two input words are confusable when some receiver wants a block on which
/// they differ while agreeing on every block it knows. Block `i` occupies
/// bits `i t .. (i + 1) t`.
pub fn confusable(h: &BroadcastHypergraph, t: usize, x: u64, y: u64) -> bool {
    let block = |w: u64, i: usize| (w >> (i * t)) & ((1u64 << t) - 1);
    h.edges().iter().any(|r| {
        block(x, r.target) != block(y, r.target)
            && r.known.iter().all(|&j| block(x, j) == block(y, j))
    })
}

/// Neighbor bitmasks (graphs up to 64 vertices).
pub fn neighbor_masks(n: usize, adj: impl Fn(usize, usize) -> bool) -> Vec<u64> {
    assert!(n <= 64);
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && adj(u, v))
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect()
}

/// Independence number by plain include/exclude recursion.
pub fn brute_alpha(nbrs: &[u64]) -> usize {
    fn go(nbrs: &[u64], cand: u64) -> usize {
        if cand == 0 {
            return 0;
        }
        let v = cand.trailing_zeros() as usize;
        let with = 1 + go(nbrs, cand & !(1 << v) & !nbrs[v]);
        if nbrs[v] & cand == 0 {
            return with;
        }
        with.max(go(nbrs, cand & !(1 << v)))
    }
    let all = if nbrs.len() == 64 { u64::MAX } else { (1u64 << nbrs.len()) - 1 };
    go(nbrs, all)
}

/// Whether the graph has a proper `k`-coloring. Vertices are colored in
/// index order and a new color is only opened as the next unused one.
pub fn colorable(nbrs: &[u64], k: usize) -> bool {
    fn go(nbrs: &[u64], k: usize, v: usize, used: usize, color: &mut Vec<usize>) -> bool {
        if v == nbrs.len() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            let clash = (0..v).any(|u| nbrs[v] >> u & 1 == 1 && color[u] == c);
            if !clash {
                color[v] = c;
                if go(nbrs, k, v + 1, used.max(c + 1), color) {
                    return true;
                }
            }
        }
        false
    }
    go(nbrs, k, 0, 0, &mut vec![usize::MAX; nbrs.len()])
}

pub fn chromatic(nbrs: &[u64]) -> usize {
    (0..=nbrs.len()).find(|&k| colorable(nbrs, k)).unwrap()
}

/// Rank over GF(2) of a matrix given as row bitmasks.
pub fn gf2_rank(rows: &[u64]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && *r >> bit & 1 == 1 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Side-information graph of the complement of the `m`-cycle as neighbor
/// masks: `i` and `j` adjacent unless they are cyclically consecutive.
pub fn antihole_masks(m: usize) -> Vec<u64> {
    neighbor_masks(m, |i, j| {
        let d = (i + m - j) % m;
        d != 1 && d != m - 1
    })
}
