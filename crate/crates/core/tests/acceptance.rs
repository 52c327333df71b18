//! End-to-end acceptance checks, one line per criterion.
//!
//! Run with `cargo test -p sidecast-core --test acceptance -- --nocapture`
//! to see the report. Criteria listed in `EXPECTED_FAILURES` cannot be met
//! as stated; their lines print FAIL with the reason, and the test instead
//! asserts that the computed values are the ones the notes describe.

mod common;

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sidecast::codes::{
    antihole_confusion_graph, antihole_lift_is, mask_nongenerator_check, mod3_coloring,
    mod3_independent_set, pow2_coloring, rs_coloring, syndrome_coloring,
};
use sidecast::graphcore::{
    chromatic_interval, exact_chromatic, find_clique, fractional_chromatic_vt, independent_set_heuristic,
    max_independent_set_exact, verify_coloring, verify_independent_set, SearchLimits,
};
use sidecast::instances::{
    antihole_instance, cycle5_to_antihole5, cycle_instance, hamming_threshold_graph,
    kneser_graph, pair_miss_instance, permute_word, two_missing_instance, weight_slice,
    PairMissSpec,
};
use sidecast::minrank::{antihole_rank2_refute, min_rank_search, MinRankOutcome};
use sidecast::netexport::GapReport;
use sidecast::rates::{beta_star, beta_t, codeword_bounds, rate_report, BetaStar, RateOptions};
use sidecast::{
    confusion_generators, or_product, BitGraph, BroadcastHypergraph, ColoringCert,
    Graph, IndependentSetCert, Optimality, SideInfoGraph, Word,
};

use common::*;

const EXPECTED_FAILURES: &[usize] = &[2];

type Outcome = Result<String, String>;

fn unbounded(vertex_limit: usize) -> SearchLimits {
    SearchLimits::mis()
        .with_vertex_limit(vertex_limit)
        .with_node_limit(None)
}

fn within(elapsed: Duration, limit_secs: u64, what: &str) -> Result<(), String> {
    if elapsed > Duration::from_secs(limit_secs) {
        Err(format!("{what} took {elapsed:.2?}, limit {limit_secs} s"))
    } else {
        Ok(())
    }
}

/// Proper-coloring check against the confusability oracle, over all pairs.
fn oracle_proper(h: &BroadcastHypergraph, t: usize, col: &ColoringCert) -> bool {
    let table = col.to_table();
    let v = table.len() as u64;
    (0..v).all(|x| (x + 1..v).all(|y| table[x as usize] != table[y as usize] || !confusable(h, t, x, y)))
}

fn oracle_independent(h: &BroadcastHypergraph, t: usize, words: &[u64]) -> bool {
    words
        .iter()
        .enumerate()
        .all(|(i, &x)| words[i + 1..].iter().all(|&y| x != y && !confusable(h, t, x, y)))
}

fn distinct_colors(col: &ColoringCert) -> usize {
    let mut t = col.to_table();
    t.sort_unstable();
    t.dedup();
    t.len()
}

fn criterion_1() -> Outcome {
    let h = cycle_instance(5).map_err(|e| e.to_string())?;
    let opts = RateOptions::default();
    let start = Instant::now();
    let c = confusion_generators(&h, 1).map_err(|e| e.to_string())?;
    let mis = max_independent_set_exact(&c, SearchLimits::mis()).map_err(|e| e.to_string())?;
    let (chi, col) = exact_chromatic(&c, SearchLimits::chromatic()).map_err(|e| e.to_string())?;
    let b1 = beta_t(&h, 1, &opts).map_err(|e| e.to_string())?;
    let star = beta_star(&h, &opts).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let nbrs = neighbor_masks(32, |u, v| confusable(&h, 1, u as u64, v as u64));
    if (0..32).any(|u| (0..32).any(|v| c.adjacent(u, v) != (nbrs[u] >> v & 1 == 1))) {
        return Err("confusion graph disagrees with the confusability oracle".into());
    }
    if mis.len() != 5 || brute_alpha(&nbrs) != 5 || !oracle_independent(&h, 1, mis.words()) {
        return Err(format!("alpha = {} (oracle {})", mis.len(), brute_alpha(&nbrs)));
    }
    if chi != 8 || colorable(&nbrs, 7) || !oracle_proper(&h, 1, &col) || distinct_colors(&col) != 8 {
        return Err(format!("chi = {chi}"));
    }
    if b1.value() != Some(3) {
        return Err(format!("beta_1 = {b1}"));
    }
    let decimal = format!("{:.4}", star.to_f64());
    let bracket = star.cmp_ratio(26_780, 10_000) == Ordering::Greater
        && star.cmp_ratio(26_781, 10_000) == Ordering::Less;
    if star.expression() != "5 - log2(5)" || !star.gamma_exact || decimal != "2.6781" || !bracket {
        return Err(format!("beta* = {star}"));
    }
    within(elapsed, 1, "pipeline")?;
    Ok(format!(
        "alpha = 5, chi = 8, beta_1 = 3, beta* = {} ~ {decimal} ({elapsed:.2?})",
        star.expression()
    ))
}

/// Reports the claim as stated (bits below 3k at k = 15). The codeword-count
/// comparison holds, but one integer bit of slack is missing; the test body
/// pins the values.
fn criterion_2() -> Outcome {
    let start = Instant::now();
    let one = codeword_bounds(5, 5, 1).map_err(|e| e.to_string())?;
    let b = codeword_bounds(5, 5, 15).map_err(|e| e.to_string())?;
    let eight15 = BigUint::from(8u32).pow(15);
    let below = b.upper_alt_below(&eight15);
    let bits = b.max_bits();
    let elapsed = start.elapsed();

    if one.lower != BigRational::new(BigInt::from(32), BigInt::from(5)) {
        return Err(format!("lower bound per copy {}", one.lower));
    }
    // ceil(1 + 15 ln 5) = 26, far from an integer boundary in f64
    let x = 1.0 + 15.0 * 5f64.ln();
    assert!((x - x.round()).abs() > 1e-3);
    let factor = x.ceil() as u32;
    let expected_alt = BigRational::new(
        BigInt::from(32u32).pow(15) * BigInt::from(factor),
        BigInt::from(5u32).pow(15),
    );
    if b.upper_alt != expected_alt {
        return Err(format!("upper_alt differs from (32/5)^15 * {factor}"));
    }
    let oracle_below = BigUint::from(32u32).pow(15) * factor < BigUint::from(40u32).pow(15);
    if below != oracle_below || !below {
        return Err("upper_alt(15) is not below 8^15".into());
    }
    within(elapsed, 1, "bounds")?;
    let first_k = (1..=64u32)
        .find(|&k| codeword_bounds(5, 5, k).is_ok_and(|b| b.max_bits() < 3 * k as u64))
        .map_or("none up to 64".into(), |k| k.to_string());
    let summary = format!(
        "lower 32/5 = 6.4 per copy; upper_alt(15) = (32/5)^15 * {factor} < 8^15 exactly; \
         bit ceiling {bits} vs 3k = 45; first k with bits < 3k: {first_k}"
    );
    if bits < 45 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    for k in [2usize, 3] {
        let h = two_missing_instance(k).map_err(|e| e.to_string())?;
        let n = (1usize << k) - 1;
        let c = confusion_generators(&h, 1).map_err(|e| e.to_string())?;
        let bg = BitGraph::materialize(&c, 1 << 12).map_err(|e| e.to_string())?;
        let clique = find_clique(&bg, n + 1, None).ok_or(format!("no {}-clique for k = {k}", n + 1))?;
        let col = syndrome_coloring(k).map_err(|e| e.to_string())?;
        let used = verify_coloring(&c, &col).map_err(|e| e.to_string())?;
        let clique_ok = clique.iter().enumerate().all(|(i, &u)| {
            clique[i + 1..].iter().all(|&v| confusable(&h, 1, u as u64, v as u64))
        });
        if used != n + 1 || !clique_ok || !oracle_proper(&h, 1, &col) {
            return Err(format!("k = {k}: {used} colors, clique ok {clique_ok}"));
        }
        out.push(format!("chi(C_1, k={k}) = {}", n + 1));
    }
    let h = two_missing_instance(2).map_err(|e| e.to_string())?;
    let c = confusion_generators(&h, 2).map_err(|e| e.to_string())?;
    let bg = BitGraph::materialize(&c, 1 << 12).map_err(|e| e.to_string())?;
    let col = rs_coloring(2, 2).map_err(|e| e.to_string())?;
    let used = verify_coloring(&c, &col).map_err(|e| e.to_string())?;
    let clique = find_clique(&bg, 16, None).ok_or("no 16-clique in C_2")?;
    let elapsed = start.elapsed();
    let clique_ok = clique.iter().enumerate().all(|(i, &u)| {
        clique[i + 1..].iter().all(|&v| confusable(&h, 2, u as u64, v as u64))
    });
    if used != 16 || !clique_ok || !oracle_proper(&h, 2, &col) {
        return Err(format!("(2,2): {used} colors, clique ok {clique_ok}"));
    }
    within(elapsed, 10, "two-missing suite")?;
    out.push("chi(C_2, k=2) = 16, beta_2 / 2 = 2".into());
    Ok(format!("{} ({elapsed:.2?})", out.join(", ")))
}

fn criterion_4() -> Outcome {
    let mut out = Vec::new();
    // (a)
    let c7 = antihole_confusion_graph(7).map_err(|e| e.to_string())?;
    let h7 = antihole_instance(7).map_err(|e| e.to_string())?;
    let fixture = include_str!("../fixtures/appendix_d.col");
    let col = ColoringCert::parse_col(fixture, &|_| Err("no includes".into())).map_err(|e| e.to_string())?;
    let used = verify_coloring(&c7, &col).map_err(|e| e.to_string())?;
    if used != 7 || col.order() != 128 || !oracle_proper(&h7, 1, &col) {
        return Err(format!("(a) fixture uses {used} colors"));
    }
    out.push("(a) fixture is a proper 7-coloring".to_string());

    // (b)
    let c5: Vec<u64> = ["00000", "01100", "00011", "11011", "11101"]
        .iter()
        .map(|s| permute_word(Word::from_bitstring(s).unwrap().bits(), &cycle5_to_antihole5()))
        .collect();
    let set5 = IndependentSetCert::new(32, c5, Optimality::Unverified);
    verify_independent_set(&antihole_confusion_graph(5).unwrap(), &set5).map_err(|e| e.to_string())?;
    let set7 = antihole_lift_is(&set5).map_err(|e| e.to_string())?;
    let set9 = antihole_lift_is(&set7).map_err(|e| e.to_string())?;
    let h9 = antihole_instance(9).map_err(|e| e.to_string())?;
    if set7.len() != 20
        || set9.len() != 80
        || !oracle_independent(&h7, 1, set7.words())
        || !oracle_independent(&h9, 1, set9.words())
    {
        return Err(format!("(b) lifted sizes {} and {}", set7.len(), set9.len()));
    }
    out.push("(b) lifts 5 -> 20 -> 80".to_string());

    // (c)
    let mis7 = max_independent_set_exact(&c7, SearchLimits::mis()).map_err(|e| e.to_string())?;
    if mis7.len() < 22 || !oracle_independent(&h7, 1, mis7.words()) {
        return Err(format!("(c) alpha(C7 bar) = {}", mis7.len()));
    }
    let chi_f = fractional_chromatic_vt(128, mis7.len() as u64).map_err(|e| e.to_string())?;
    let chi_f_text = format!("{:.3}", chi_f.to_f64());
    if chi_f_text != "5.818" {
        return Err(format!("(c) chi_f = {chi_f_text}"));
    }
    out.push(format!("(c) alpha = {} exact, chi_f = {chi_f} ~ {chi_f_text}", mis7.len()));

    // (d)
    let c9 = antihole_confusion_graph(9).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let heur = independent_set_heuristic(&c9, 0, 20_000);
    let elapsed = start.elapsed();
    verify_independent_set(&c9, &heur).map_err(|e| e.to_string())?;
    if heur.len() < 93 || !oracle_independent(&h9, 1, heur.words()) {
        return Err(format!("(d) heuristic alpha(C9 bar) = {}", heur.len()));
    }
    within(elapsed, 60, "(d) heuristic")?;
    out.push(format!("(d) heuristic alpha >= {} ({elapsed:.2?})", heur.len()));

    // (e)
    for n in 2..=10 {
        mask_nongenerator_check(n).map_err(|c| format!("(e) n = {n}: {c:?}"))?;
    }
    out.push("(e) masks ok for n = 2..10".to_string());
    Ok(out.join("; "))
}

/// Exhaustive oracle: is there a matrix over GF(2) of rank at most 2 fitting
/// the side-information graph? Every such matrix has its rows in some
/// 2-dimensional subspace, so it suffices to try each subspace.
fn rank2_fit_exists(nbrs: &[u64]) -> bool {
    let n = nbrs.len();
    let full = (1u64 << n) - 1;
    for a in 1..=full {
        for b in a + 1..=full {
            if a ^ b < b {
                continue; // each subspace once, with a < b < a ^ b
            }
            let span = [a, b, a ^ b];
            let fits = (0..n).all(|i| {
                let allowed = nbrs[i] | 1 << i;
                span.iter().any(|&v| v >> i & 1 == 1 && v & !allowed == 0)
            });
            if fits {
                return true;
            }
        }
    }
    false
}

fn criterion_5() -> Outcome {
    let mut out = Vec::new();
    let start = Instant::now();
    for m in [5usize, 7] {
        let refuted = antihole_rank2_refute(m, 2).map_err(|e| e.to_string())?;
        if let Err(w) = refuted {
            return Err(format!("rank-2 fit reported for C{m} bar:\n{w}"));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, 300, "rank-2 refutation")?;
    for m in [5usize, 7] {
        if rank2_fit_exists(&antihole_masks(m)) {
            return Err(format!("oracle finds a rank-2 fit for C{m} bar"));
        }
    }
    // all 2^10 fitting matrices of the 5-antihole, directly
    let nbrs5 = antihole_masks(5);
    let free: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| (0..5).map(move |j| (i, j)))
        .filter(|&(i, j)| nbrs5[i] >> j & 1 == 1)
        .collect();
    let least = (0..1u64 << free.len())
        .map(|mask| {
            let mut rows: Vec<u64> = (0..5).map(|i| 1 << i).collect();
            for (b, &(i, j)) in free.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    rows[i] |= 1 << j;
                }
            }
            gf2_rank(&rows)
        })
        .min()
        .unwrap();
    if least != 3 {
        return Err(format!("direct enumeration gives min-rank {least}"));
    }
    out.push(format!("rank <= 2 refuted for C5 bar and C7 bar ({elapsed:.2?})"));

    let g5 = BitGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).complement();
    match min_rank_search(&g5, 2, 3).map_err(|e| e.to_string())? {
        MinRankOutcome::Found { rank: 3, witness } => {
            let rows: Vec<u64> = (0..5)
                .map(|i| (0..5).filter(|&j| witness.get(i, j) == 1).fold(0, |r, j| r | 1 << j))
                .collect();
            let fits = (0..5).all(|i| rows[i] >> i & 1 == 1 && rows[i] & !(nbrs5[i] | 1 << i) == 0);
            if !fits || gf2_rank(&rows) != 3 {
                return Err(format!("bad rank-3 witness\n{witness}"));
            }
            out.push("rank-3 witness for C5 bar".to_string());
        }
        other => return Err(format!("C5 bar min-rank search: {other:?}")),
    }

    // linear length >= 3 for C23 bar, against the supplied set size
    if antihole_rank2_refute(23, 2).map_err(|e| e.to_string())?.is_err() {
        return Err("rank-2 fit reported for C23 bar".into());
    }
    let star23 = BetaStar::new(23, 1_744_414, false).map_err(|e| e.to_string())?;
    let gap = GapReport::new(3, "rank 2 refuted", star23, "supplied set size").map_err(|e| e.to_string())?;
    let oracle23 = 3.0 / (23.0 - 1_744_414f64.log2());
    if !gap.ratio_at_least(1324, 1000) || (gap.ratio() - oracle23).abs() > 1e-12 {
        return Err(format!("C23 bar ratio {:.4}", gap.ratio()));
    }
    out.push(format!("C23 bar ratio {:.4} >= 1.324", gap.ratio()));

    // the same formula at the scale where alpha is computed exactly
    let c7 = antihole_confusion_graph(7).map_err(|e| e.to_string())?;
    let alpha7 = max_independent_set_exact(&c7, SearchLimits::mis()).map_err(|e| e.to_string())?.len() as u64;
    let star7 = BetaStar::new(7, alpha7, true).map_err(|e| e.to_string())?;
    let gap7 = GapReport::new(3, "rank 2 refuted", star7, "exact").map_err(|e| e.to_string())?;
    let formula = 3.0 / (128.0 / alpha7 as f64).log2();
    if (gap7.ratio() - formula).abs() > 1e-12 {
        return Err(format!("C7 bar ratio {} vs formula {formula}", gap7.ratio()));
    }
    out.push(format!("C7 bar ratio {:.4} = 3 / log2(128/{alpha7})", gap7.ratio()));
    Ok(out.join("; "))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let nets: Vec<(usize, BroadcastHypergraph)> =
        [3, 4, 5].iter().map(|&n| (n, cycle_instance(n).unwrap())).collect();
    let mut pairs = 0;
    for (i, (na, ha)) in nets.iter().enumerate() {
        for (nb, hb) in &nets[i..] {
            let union = ha.disjoint_union(hb);
            let direct = confusion_generators(&union, 1).map_err(|e| e.to_string())?;
            let product = or_product(
                confusion_generators(ha, 1).unwrap(),
                confusion_generators(hb, 1).unwrap(),
            );
            let explicit = product.to_cayley().map_err(|e| e.to_string())?;
            if direct.dim() != explicit.dim() || direct.generators() != explicit.generators() {
                return Err(format!("C{na} + C{nb}: generator sets differ"));
            }
            let v = 1u64 << (na + nb);
            let agree = (0..v).all(|x| {
                (x + 1..v).all(|y| {
                    let c = confusable(&union, 1, x, y);
                    c == product.adjacent_words(x, y) && c == direct.adjacent_words(x, y)
                })
            });
            if !agree {
                return Err(format!("C{na} + C{nb}: adjacency differs from the oracle"));
            }
            pairs += 1;
        }
    }
    let c5 = confusion_generators(&nets[2].1, 1).unwrap();
    let square = or_product(c5.clone(), c5).to_cayley().map_err(|e| e.to_string())?;
    let mis = max_independent_set_exact(&square, unbounded(1024)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    verify_independent_set(&square, &mis).map_err(|e| e.to_string())?;
    if mis.len() != 25 {
        return Err(format!("alpha of the square = {}", mis.len()));
    }
    within(elapsed, 30, "OR-product suite")?;
    Ok(format!(
        "{pairs} pairs match generator-for-generator; alpha(C5 conf squared) = 25 ({elapsed:.2?})"
    ))
}

struct PairMissCase {
    label: String,
    spec: PairMissSpec,
}

fn pair_miss_cases() -> Vec<PairMissCase> {
    let mut cases = Vec::new();
    for k in 1..=4usize {
        cases.push(PairMissCase {
            label: format!("K_{}", 1 << k),
            spec: PairMissSpec::complete(k).unwrap(),
        });
        cases.push(PairMissCase {
            label: format!("empty_{}", 1 << k),
            spec: PairMissSpec::edgeless(k).unwrap(),
        });
    }
    for k in 2..=4usize {
        let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
        for i in 0..20 {
            let gens: Vec<u64> = (1..1u64 << k).filter(|_| rng.gen_bool(0.5)).collect();
            cases.push(PairMissCase {
                label: format!("k={k} #{i}"),
                spec: PairMissSpec::new(k, gens).unwrap(),
            });
        }
    }
    cases
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let cases = pair_miss_cases();
    let mut widest = 0usize;
    let mut open = Vec::new();
    let mut alpha_bounded = 0;
    for case in &cases {
        let fail = |msg: String| format!("{}: {msg}", case.label);
        let k = case.spec.k();
        let n = case.spec.order();
        let g = case.spec.cayley();
        let (chi_g, base_col) = exact_chromatic(&g, SearchLimits::chromatic()).map_err(|e| fail(e.to_string()))?;
        let base_set = max_independent_set_exact(&g, SearchLimits::mis()).map_err(|e| fail(e.to_string()))?;
        let g_masks = neighbor_masks(n, |u, v| g.adjacent(u, v));
        if chi_g != chromatic(&g_masks) || base_set.len() != brute_alpha(&g_masks) {
            return Err(fail("chi(G) or alpha(G) disagrees with the oracle".into()));
        }
        let alpha_g = base_set.len() as u64;

        let h = pair_miss_instance(&case.spec).map_err(|e| fail(e.to_string()))?;
        let c = confusion_generators(&h, 1).map_err(|e| fail(e.to_string()))?;
        let mod3 = mod3_coloring(&case.spec, &base_col).map_err(|e| fail(e.to_string()))?;
        let pow2 = pow2_coloring(&case.spec, &base_col).map_err(|e| fail(e.to_string()))?;
        let upper = verify_coloring(&c, &mod3)
            .map_err(|e| fail(e.to_string()))?
            .min(verify_coloring(&c, &pow2).map_err(|e| fail(e.to_string()))?);
        // the unit words span a copy of G inside the confusion graph
        let units = BitGraph::from_edges(
            n,
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| c.adjacent_words(1 << a, 1 << b)),
        );
        let (lower, _) = exact_chromatic(&units, SearchLimits::chromatic()).map_err(|e| fail(e.to_string()))?;
        // exact alpha where the search finishes, else the mod-3 set as a lower bound
        let exact_alpha = if k <= 3 {
            max_independent_set_exact(&c, unbounded(256).with_node_limit(Some(500_000)))
                .ok()
                .map(|s| s.len() as u64)
        } else {
            None
        };
        let alpha_c = match exact_alpha {
            Some(a) => a,
            None => {
                let set = mod3_independent_set(&case.spec, &base_set).map_err(|e| fail(e.to_string()))?;
                verify_independent_set(&c, &set.set).map_err(|e| fail(e.to_string()))?;
                if k <= 3 {
                    alpha_bounded += 1;
                }
                set.set.len() as u64
            }
        };
        let (lower, upper) = if k <= 3 {
            let by_alpha = exact_alpha.map_or(0, |a| (1usize << n).div_ceil(a as usize));
            let limits = SearchLimits::chromatic().with_node_limit(Some(4_000_000));
            let out = chromatic_interval(&c, limits, by_alpha).map_err(|e| fail(e.to_string()))?;
            verify_coloring(&c, &out.coloring).map_err(|e| fail(e.to_string()))?;
            if !out.is_exact() {
                open.push(format!("{} in [{}, {}]", case.label, out.lower, out.upper));
            }
            (out.lower.max(lower), out.upper.min(upper))
        } else {
            (lower, upper)
        };
        if !(chi_g <= lower && lower <= upper && upper <= 3 * chi_g) {
            return Err(fail(format!("chi(G) = {chi_g}, chi(conf) in [{lower}, {upper}]")));
        }
        if k == 4 {
            widest = widest.max(upper - lower);
        }
        // 2^n / alpha(conf) <= 3 n / alpha(G), cross-multiplied
        if (alpha_g as u128) << n > 3 * n as u128 * alpha_c as u128 {
            return Err(fail(format!("alpha(G) = {alpha_g}, alpha(conf) >= {alpha_c}")));
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, 300, "pair-miss suite")?;
    Ok(format!(
        "{} generator sets (k = 1..4), all inside [chi(G), 3 chi(G)]; widest k = 4 interval {widest}; \
         k <= 3 chi not pinned: {}; k <= 3 alpha from the mod-3 set for {alpha_bounded} sets ({elapsed:.2?})",
        cases.len(),
        if open.is_empty() { "none".to_string() } else { open.join(", ") }
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut out = Vec::new();
    for (k, s, want) in [(5usize, 2usize, 3usize), (6, 2, 4)] {
        let (g, _) = kneser_graph(k, s).map_err(|e| e.to_string())?;
        let (chi, col) = exact_chromatic(&g, SearchLimits::chromatic()).map_err(|e| e.to_string())?;
        let masks = neighbor_masks(g.order(), |u, v| g.adjacent(u, v));
        verify_coloring(&g, &col).map_err(|e| e.to_string())?;
        if chi != want || chromatic(&masks) != want {
            return Err(format!("chi(K({k},{s})) = {chi}"));
        }
        out.push(format!("chi(K({k},{s})) = {chi}"));
    }
    // disjoint 2-subsets of a 6-set are exactly the pairs at distance 4
    let (slice, words) = weight_slice(&hamming_threshold_graph(6, 4).map_err(|e| e.to_string())?, 2);
    let (kneser, subsets) = kneser_graph(6, 2).map_err(|e| e.to_string())?;
    let map: Vec<usize> = words
        .iter()
        .map(|w| subsets.iter().position(|s| s == w).ok_or(format!("word {w:b} is not a 2-subset")))
        .collect::<Result<_, _>>()?;
    let mut image = map.clone();
    image.sort_unstable();
    image.dedup();
    let iso = image.len() == subsets.len()
        && (0..words.len()).all(|a| (0..words.len()).all(|b| slice.adjacent(a, b) == kneser.adjacent(map[a], map[b])));
    if !iso {
        return Err("weight-2 slice is not K(6,2) under the subset map".into());
    }
    let (slice2, _) = weight_slice(&hamming_threshold_graph(6, 2).unwrap(), 2);
    let complete = slice2.edge_count() == 15 * 14 / 2;
    let elapsed = start.elapsed();
    within(elapsed, 10, "Kneser suite")?;
    out.push(format!(
        "weight-2 slice of the distance->=4 graph is K(6,2) (distance->=2 slice is {}) ({elapsed:.2?})",
        if complete { "K15" } else { "not complete" }
    ));
    Ok(out.join("; "))
}

fn criterion_9() -> Outcome {
    let corpus: Vec<(String, BroadcastHypergraph, usize)> = vec![
        ("cycle:3".into(), cycle_instance(3).unwrap(), 3),
        ("cycle:4".into(), cycle_instance(4).unwrap(), 2),
        ("cycle:5".into(), cycle_instance(5).unwrap(), 1),
        ("cycle:6".into(), cycle_instance(6).unwrap(), 1),
        ("cycle:7".into(), cycle_instance(7).unwrap(), 1),
        ("antihole:5".into(), antihole_instance(5).unwrap(), 1),
        ("antihole:7".into(), antihole_instance(7).unwrap(), 1),
        ("two-missing:2".into(), two_missing_instance(2).unwrap(), 2),
        ("two-missing:3".into(), two_missing_instance(3).unwrap(), 1),
        (
            "complete:4".into(),
            BroadcastHypergraph::from_side_info_graph(&SideInfoGraph::complete(4).unwrap()),
            2,
        ),
        (
            "edgeless:4".into(),
            BroadcastHypergraph::from_side_info_graph(&SideInfoGraph::edgeless(4).unwrap()),
            2,
        ),
    ];
    let opts = RateOptions::default();
    let mut checked = 0;
    let mut skipped = Vec::new();
    for (name, h, t_max) in &corpus {
        let r = rate_report(h, name, *t_max, &[], &opts).map_err(|e| format!("{name}: {e}"))?;
        if !r.chain_ok() {
            return Err(format!("{name}: chain check failed\n{}", r.to_text()));
        }
        let star = &r.beta_star;
        let (Some(a), true) = (r.alpha_arrow, star.gamma_exact) else {
            skipped.push(name.clone());
            continue;
        };
        if star.cmp_int(a as u64) == Ordering::Less {
            return Err(format!("{name}: alpha_arrow {a} > beta*"));
        }
        for b in r.beta_t.values() {
            if !b.is_exact() {
                skipped.push(format!("{name} t={}", b.t));
                continue;
            }
            if b.t == 1 && star.cmp_int(b.lower as u64) == Ordering::Greater {
                return Err(format!("{name}: beta* > beta_1 = {}", b.lower));
            }
            if star.cmp_ratio(b.lower as u64, b.t as u64) == Ordering::Greater {
                return Err(format!("{name}: beta_{} / {} < beta*", b.t, b.t));
            }
            checked += 1;
        }
    }
    if checked < corpus.len() {
        return Err(format!("only {checked} exact entries"));
    }
    Ok(format!(
        "{checked} exact entries over {} networks; not exact: {}",
        corpus.len(),
        if skipped.is_empty() { "none".to_string() } else { skipped.join(", ") }
    ))
}

#[test]
fn acceptance() {
    let criteria: [(usize, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut unexpected = Vec::new();
    for (id, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match &outcome {
            Ok(msg) => println!("criterion {id}: PASS {msg} [total {elapsed:.2?}]"),
            Err(msg) => println!("criterion {id}: FAIL {msg} [total {elapsed:.2?}]"),
        }
        if outcome.is_ok() == EXPECTED_FAILURES.contains(&id) {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}

/// The values behind the expected failure of criterion 2.
#[test]
fn codeword_bound_at_fifteen_copies_stops_one_bit_short() {
    let b = codeword_bounds(5, 5, 15).unwrap();
    assert!(b.upper_alt_below(&BigUint::from(8u32).pow(15)));
    assert_eq!(b.max_bits(), 45);
    let first = (1..=64u32)
        .find(|&k| codeword_bounds(5, 5, k).unwrap().max_bits() < 3 * k as u64)
        .unwrap();
    assert_eq!(first, 19);
}
