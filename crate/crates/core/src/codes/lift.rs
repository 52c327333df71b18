//! Lifting independent sets and colorings from the antihole on `2n + 1`
//! blocks to the antihole on `2n + 3` blocks.
//!
//! A word `v` of length `2n + 1` is padded with two zero bits to `v'` and
//! mapped to the four words `v' ^ m_0 .. v' ^ m_3`. With coordinates
//! numbered from 1 (bit `i - 1` holds coordinate `i`):
//!
//! * `m_0 = 0`
//! * `m_1` flips coordinates `2n + 1` and `2n + 3`
//! * `m_2` flips coordinates `1` and `2n + 2`
//! * `m_3 = m_1 ^ m_2`
//!
//! The two new coordinates tell the four images apart, so lifted sets are
//! four times larger and lifted color classes partition the bigger graph.

use rayon::prelude::*;

use crate::confusion::{confusion_generators, CayleyGraph};
use crate::graphcore::{
    verify_coloring, verify_independent_set, ColoringCert, IndependentSetCert, Optimality,
};
use crate::instances::antihole_instance;
use crate::model::low_mask;

use super::{CodeError, Construction};

/// Largest inner dimension for which [`MaskCheckMethod::Enumeration`] runs.
pub const MASK_ENUMERATION_LIMIT: usize = 25;

/// Confusion graph (block length 1) of the antihole network on `m` blocks.
pub fn antihole_confusion_graph(m: usize) -> Result<CayleyGraph, CodeError> {
    let h = antihole_instance(m)?;
    confusion_generators(&h, 1).map_err(|e| CodeError::BadParameter(e.to_string()))
}

/// True when `x` is a cyclic run of one, two or three ones in `Z_2^m`.
fn is_antihole_generator(x: u64, m: usize) -> bool {
    if x == 0 || x >> m != 0 {
        return false;
    }
    let mask = low_mask(m);
    (0..m).any(|i| {
        let r = ((x >> i) | (x << (m - i))) & mask;
        r == 0b1 || r == 0b11 || r == 0b111
    })
}

/// The four lifting masks for inner length `2n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftMasks {
    n: usize,
    masks: [u64; 4],
}

impl LiftMasks {
    pub fn new(n: usize) -> Result<Self, CodeError> {
        if !(2..=13).contains(&n) {
            return Err(CodeError::BadParameter(format!(
                "lift masks need 2 <= n <= 13, got {n}"
            )));
        }
        let m1 = 1 << (2 * n) | 1 << (2 * n + 2);
        let m2 = 1 | 1 << (2 * n + 1);
        Ok(LiftMasks {
            n,
            masks: [0, m1, m2, m1 ^ m2],
        })
    }

    /// Arbitrary masks, for exercising the checker.
    pub fn custom(n: usize, m1: u64, m2: u64, m3: u64) -> Self {
        LiftMasks {
            n,
            masks: [0, m1, m2, m3],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn masks(&self) -> [u64; 4] {
        self.masks
    }

    pub fn inner_dim(&self) -> usize {
        2 * self.n + 1
    }

    pub fn outer_dim(&self) -> usize {
        2 * self.n + 3
    }

    /// Index of the mask whose suffix bits match those of `w`.
    fn mask_for(&self, w: u64) -> u64 {
        let d = self.inner_dim();
        let suffix = (w >> d & 1) << 1 | (w >> (d + 1) & 1);
        // suffix (coordinate 2n+2, coordinate 2n+3): 00, 01, 10, 11
        self.masks[suffix as usize]
    }
}

/// A non-generator `x` whose lift `x' ^ m_k` is a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskCounterexample {
    pub x: u64,
    pub k: usize,
    pub lifted: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaskCheckMethod {
    /// Every word of length `2n + 1`.
    Enumeration,
    /// Only words `g ^ m_k` for generators `g` of length `2n + 3`; these are
    /// the only candidates for a counterexample.
    CaseAnalysis,
    /// Enumeration up to length 25, case analysis above.
    Auto,
}

/// Checks that `x' ^ m_k` is a non-generator of the `(2n + 3)`-antihole
/// confusion graph for every non-generator `x` of the `(2n + 1)` one and
/// `k = 1, 2, 3`.
pub fn mask_nongenerator_check(n: usize) -> Result<(), MaskCounterexample> {
    let masks = LiftMasks::new(n).expect("n in range");
    mask_nongenerator_check_with(&masks, MaskCheckMethod::Auto)
}

/// Like [`mask_nongenerator_check`] with explicit masks and method. Both
/// methods report the counterexample with the least `(x, k)`.
pub fn mask_nongenerator_check_with(
    masks: &LiftMasks,
    method: MaskCheckMethod,
) -> Result<(), MaskCounterexample> {
    let inner = masks.inner_dim();
    let outer = masks.outer_dim();
    let m = masks.masks();
    let method = match method {
        MaskCheckMethod::Auto if inner <= MASK_ENUMERATION_LIMIT => MaskCheckMethod::Enumeration,
        MaskCheckMethod::Auto => MaskCheckMethod::CaseAnalysis,
        other => other,
    };
    let found = match method {
        MaskCheckMethod::Enumeration => (0..1u64 << inner)
            .into_par_iter()
            .filter(|&x| !is_antihole_generator(x, inner))
            .find_map_first(|x| {
                (1..4)
                    .find(|&k| is_antihole_generator(x ^ m[k], outer))
                    .map(|k| MaskCounterexample {
                        x,
                        k,
                        lifted: x ^ m[k],
                    })
            }),
        _ => {
            let mut hits = Vec::new();
            let mask = low_mask(outer);
            for i in 0..outer {
                for run in [0b1u64, 0b11, 0b111] {
                    let g = ((run << i) | (run >> (outer - i))) & mask;
                    for (k, &mk) in m.iter().enumerate().skip(1) {
                        let x = g ^ mk;
                        if x >> inner == 0 && !is_antihole_generator(x, inner) {
                            hits.push(MaskCounterexample { x, k, lifted: g });
                        }
                    }
                }
            }
            hits.into_iter().min_by_key(|c| (c.x, c.k))
        }
    };
    match found {
        Some(c) => Err(c),
        None => Ok(()),
    }
}

fn inner_dim_of(order: usize) -> Result<usize, CodeError> {
    if !order.is_power_of_two() {
        return Err(CodeError::BadParameter(format!(
            "{order} vertices is not a power of two"
        )));
    }
    let d = order.trailing_zeros() as usize;
    if d < 5 || d % 2 == 0 || d + 2 > 30 {
        return Err(CodeError::BadParameter(format!(
            "antihole lifting needs an odd inner length 5..=27, got {d}"
        )));
    }
    Ok(d)
}

/// Lifts an independent set of the `(2n + 1)`-antihole confusion graph to
/// one four times larger on `2n + 3` blocks. Input and output are verified.
pub fn antihole_lift_is(cert: &IndependentSetCert) -> Result<IndependentSetCert, CodeError> {
    let d = inner_dim_of(cert.order())?;
    let inner = antihole_confusion_graph(d)?;
    verify_independent_set(&inner, cert).map_err(CodeError::NotIndependent)?;
    let masks = LiftMasks::new((d - 1) / 2)?;
    let mut words: Vec<u64> = cert
        .words()
        .iter()
        .flat_map(|&v| masks.masks().map(|m| v ^ m))
        .collect();
    words.sort_unstable();
    let out = IndependentSetCert::new(1 << (d + 2), words, Optimality::Unverified);
    let outer = antihole_confusion_graph(d + 2)?;
    verify_independent_set(&outer, &out).map_err(CodeError::Internal)?;
    Ok(out)
}

pub(super) fn lift_construction(inner: &ColoringCert) -> Result<Construction, CodeError> {
    let d = inner_dim_of(inner.order())?;
    let g = antihole_confusion_graph(d)?;
    verify_coloring(&g, inner).map_err(CodeError::ImproperColoring)?;
    Ok(Construction::Lift {
        inner: Box::new(inner.clone()),
        inner_dim: d,
        source: None,
    })
}

pub(super) fn lifted_color(inner: &ColoringCert, inner_dim: usize, w: u64) -> u32 {
    let masks = LiftMasks::new((inner_dim - 1) / 2).expect("validated dimension");
    let v = (w ^ masks.mask_for(w)) & low_mask(inner_dim);
    inner.color_of(v)
}

/// Lifts a proper coloring of the `(2n + 1)`-antihole confusion graph to one
/// of the `(2n + 3)` graph with the same number of colors. Each color class
/// is the lift of the corresponding inner class.
pub fn antihole_lift_coloring(inner: &ColoringCert) -> Result<ColoringCert, CodeError> {
    Ok(ColoringCert::from_construction(lift_construction(inner)?))
}
