//! Explicit colorings and independent sets of confusion graphs.
//!
//! Named constructions are colorings evaluated on demand, one vertex at a
//! time, and serialize to a single `.col` line:
//!
//! | line | graph |
//! |------|-------|
//! | `syndrome k` | `C_1` of the two-missing network on `2^k - 1` blocks |
//! | `rs k t` | `C_t` of the same network |
//! | `mod3 <spec.gen> <base.col>` | `C_1` of the pair-miss network of a Cayley graph |
//! | `pow2 <spec.gen> <base.col>` | same graph, power-of-two variant |
//! | `lift <inner.col>` | antihole on two more blocks than the inner coloring's |

mod gf2m;
mod lift;

use thiserror::Error;

use crate::confusion::confusion_generators;
use crate::graphcore::{
    verify_coloring, verify_independent_set, CertError, CertViolation, ColoringCert,
    IndependentSetCert, Optimality,
};
use crate::instances::{pair_miss_instance, InstanceError, PairMissSpec};

pub use gf2m::{is_irreducible, Gf2m, REDUCTION_POLYNOMIALS};
pub use lift::{
    antihole_confusion_graph, antihole_lift_coloring, antihole_lift_is, mask_nongenerator_check,
    mask_nongenerator_check_with, LiftMasks, MaskCheckMethod, MaskCounterexample,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("GF(2^{0}) is not supported; degrees 1..=16 are")]
    UnsupportedFieldDegree(usize),
    #[error("GF(2^{t}) has fewer than {n} elements")]
    FieldTooSmall { n: usize, t: usize },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("base coloring is not proper on G: {0}")]
    ImproperBaseColoring(CertViolation),
    #[error("base set is not independent in G: {0}")]
    ImproperBaseSet(CertViolation),
    #[error("input set is not independent: {0}")]
    NotIndependent(CertViolation),
    #[error("input coloring is not proper: {0}")]
    ImproperColoring(CertViolation),
    #[error("constructed certificate failed verification: {0}")]
    Internal(CertViolation),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// A coloring given by a formula rather than a table.
#[derive(Debug, Clone)]
pub enum Construction {
    /// Color of `u` is the XOR of the labels `b + 1` of its set blocks `b`.
    Syndrome { k: usize },
    /// Color of `u` is `(sum u_b, sum a_b u_b)` over `GF(2^t)` with `a_b = b`.
    ReedSolomon { k: usize, t: usize, field: Gf2m },
    /// Color of `x` is `(|x| mod 3, sum x_b c(b) mod d)`.
    Mod3 {
        spec: PairMissSpec,
        base: Vec<u32>,
        d: usize,
        source: Option<(String, String)>,
    },
    /// Color of `x` is the XOR of `c(b) + 1` over set blocks, in `Z_2^r` with
    /// `2^r` the least power of two above `d`.
    Pow2 {
        spec: PairMissSpec,
        base: Vec<u32>,
        r: usize,
        source: Option<(String, String)>,
    },
    /// Antihole lift of an inner coloring (see [`antihole_lift_coloring`]).
    Lift {
        inner: Box<ColoringCert>,
        inner_dim: usize,
        source: Option<String>,
    },
}

impl Construction {
    /// Number of vertices of the target graph.
    pub fn order(&self) -> usize {
        1usize << self.dim()
    }

    pub fn dim(&self) -> usize {
        match self {
            Construction::Syndrome { k } => (1 << k) - 1,
            Construction::ReedSolomon { k, t, .. } => ((1 << k) - 1) * t,
            Construction::Mod3 { spec, .. } | Construction::Pow2 { spec, .. } => spec.order(),
            Construction::Lift { inner_dim, .. } => inner_dim + 2,
        }
    }

    /// Colors the formula may produce.
    pub fn color_count(&self) -> usize {
        match self {
            Construction::Syndrome { k } => 1 << k,
            Construction::ReedSolomon { t, .. } => 1 << (2 * t),
            Construction::Mod3 { d, .. } => 3 * d,
            Construction::Pow2 { r, .. } => 1 << r,
            Construction::Lift { inner, .. } => inner.color_count(),
        }
    }

    pub fn color_of(&self, x: u64) -> u32 {
        match self {
            Construction::Syndrome { .. } => bits(x).fold(0, |acc, b| acc ^ (b as u32 + 1)),
            Construction::ReedSolomon { k, t, field } => {
                let n = (1usize << k) - 1;
                let mask = (1u64 << t) - 1;
                let (mut s1, mut s2) = (0u32, 0u32);
                for b in 0..n {
                    let u = (x >> (b * t) & mask) as u32;
                    s1 ^= u;
                    s2 ^= field.mul(b as u32, u);
                }
                s1 | s2 << t
            }
            Construction::Mod3 { base, d, .. } => {
                let weight = x.count_ones() % 3;
                let sum = bits(x).map(|b| base[b] as u64).sum::<u64>() % *d as u64;
                weight * *d as u32 + sum as u32
            }
            Construction::Pow2 { base, .. } => bits(x).fold(0, |acc, b| acc ^ (base[b] + 1)),
            Construction::Lift { inner, inner_dim, .. } => lift::lifted_color(inner, *inner_dim, x),
        }
    }

    /// The `.col` line without the `construction` keyword, when the
    /// construction can be written as one. File-backed constructions built in
    /// memory have no descriptor.
    pub fn descriptor(&self) -> Option<String> {
        match self {
            Construction::Syndrome { k } => Some(format!("syndrome {k}")),
            Construction::ReedSolomon { k, t, .. } => Some(format!("rs {k} {t}")),
            Construction::Mod3 { source, .. } => {
                source.as_ref().map(|(s, b)| format!("mod3 {s} {b}"))
            }
            Construction::Pow2 { source, .. } => {
                source.as_ref().map(|(s, b)| format!("pow2 {s} {b}"))
            }
            Construction::Lift { source, .. } => source.as_ref().map(|s| format!("lift {s}")),
        }
    }

    /// Parses the tokens after `construction`. `resolve` reads referenced
    /// files.
    pub fn parse(
        toks: &[&str],
        resolve: &dyn Fn(&str) -> Result<String, String>,
    ) -> Result<Construction, CertError> {
        let bad = |e: CodeError| CertError::Construction(e.to_string());
        let num = |s: &str| -> Result<usize, CertError> {
            s.parse()
                .map_err(|_| CertError::Construction(format!("bad number `{s}`")))
        };
        let load = |path: &str| -> Result<String, CertError> {
            resolve(path).map_err(|msg| CertError::Reference {
                path: path.to_string(),
                msg,
            })
        };
        match toks {
            ["syndrome", k] => syndrome_construction(num(k)?).map_err(bad),
            ["rs", k, t] => rs_construction(num(k)?, num(t)?).map_err(bad),
            [kind @ ("mod3" | "pow2"), spec_path, base_path] => {
                let spec = PairMissSpec::parse(&load(spec_path)?)
                    .map_err(|e| CertError::Construction(e.to_string()))?;
                let base = ColoringCert::parse_col(&load(base_path)?, resolve)?;
                let source = Some((spec_path.to_string(), base_path.to_string()));
                let c = if *kind == "mod3" {
                    mod3_construction(&spec, &base)
                } else {
                    pow2_construction(&spec, &base)
                };
                let mut c = c.map_err(bad)?;
                match &mut c {
                    Construction::Mod3 { source: s, .. } | Construction::Pow2 { source: s, .. } => {
                        *s = source
                    }
                    _ => unreachable!(),
                }
                Ok(c)
            }
            ["lift", inner_path] => {
                let inner = ColoringCert::parse_col(&load(inner_path)?, resolve)?;
                let mut c = lift::lift_construction(&inner).map_err(bad)?;
                if let Construction::Lift { source, .. } = &mut c {
                    *source = Some(inner_path.to_string());
                }
                Ok(c)
            }
            [name, ..] if !["syndrome", "rs", "mod3", "pow2", "lift"].contains(name) => {
                Err(CertError::UnknownConstructionName(name.to_string()))
            }
            [] => Err(CertError::Construction("missing construction name".into())),
            _ => Err(CertError::Construction(format!(
                "wrong parameters for `{}`",
                toks.join(" ")
            ))),
        }
    }
}

fn bits(x: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&b| x >> b & 1 == 1)
}

fn syndrome_construction(k: usize) -> Result<Construction, CodeError> {
    if !(2..=4).contains(&k) {
        return Err(CodeError::BadParameter(format!(
            "syndrome coloring needs 2 <= k <= 4 (at most 30 word bits), got {k}"
        )));
    }
    Ok(Construction::Syndrome { k })
}

fn rs_construction(k: usize, t: usize) -> Result<Construction, CodeError> {
    if k < 2 {
        return Err(CodeError::BadParameter(format!("k must be at least 2, got {k}")));
    }
    let field = Gf2m::new(t)?;
    let n = (1usize << k.min(20)) - 1;
    if (field.size() as usize) < n {
        return Err(CodeError::FieldTooSmall { n, t });
    }
    if n * t > 30 {
        return Err(CodeError::BadParameter(format!(
            "{n} blocks of {t} bits exceed 30 bits"
        )));
    }
    Ok(Construction::ReedSolomon { k, t, field })
}

/// Syndrome coloring of `C_1` of the two-missing network with `2^k` colors.
pub fn syndrome_coloring(k: usize) -> Result<ColoringCert, CodeError> {
    Ok(ColoringCert::from_construction(syndrome_construction(k)?))
}

/// Reed-Solomon coloring of `C_t` of the two-missing network with
/// `2^{2t}` colors. Needs `2^t >= 2^k - 1`.
pub fn rs_coloring(k: usize, t: usize) -> Result<ColoringCert, CodeError> {
    Ok(ColoringCert::from_construction(rs_construction(k, t)?))
}

/// Renames the colors of a proper coloring of `G` to `0..d`, in order of
/// first appearance.
fn normalized_base(spec: &PairMissSpec, base: &ColoringCert) -> Result<(Vec<u32>, usize), CodeError> {
    let g = spec.cayley();
    verify_coloring(&g, base).map_err(CodeError::ImproperBaseColoring)?;
    let mut rename = std::collections::HashMap::new();
    let table: Vec<u32> = base
        .to_table()
        .into_iter()
        .map(|c| {
            let next = rename.len() as u32;
            *rename.entry(c).or_insert(next)
        })
        .collect();
    Ok((table, rename.len()))
}

fn mod3_construction(spec: &PairMissSpec, base: &ColoringCert) -> Result<Construction, CodeError> {
    check_pair_miss_size(spec)?;
    let (base, d) = normalized_base(spec, base)?;
    Ok(Construction::Mod3 {
        spec: spec.clone(),
        base,
        d,
        source: None,
    })
}

fn pow2_construction(spec: &PairMissSpec, base: &ColoringCert) -> Result<Construction, CodeError> {
    check_pair_miss_size(spec)?;
    let (base, d) = normalized_base(spec, base)?;
    // least r with 2^r > d
    let r = (usize::BITS - d.leading_zeros()) as usize;
    Ok(Construction::Pow2 {
        spec: spec.clone(),
        base,
        r,
        source: None,
    })
}

fn check_pair_miss_size(spec: &PairMissSpec) -> Result<(), CodeError> {
    if spec.k() > 4 {
        return Err(CodeError::BadParameter(format!(
            "pair-miss network on {} blocks exceeds 30 bits",
            spec.order()
        )));
    }
    Ok(())
}

/// Coloring of `C_1` of the pair-miss network from a proper coloring `base`
/// of `G` with `d` colors, using at most `3d` colors.
pub fn mod3_coloring(spec: &PairMissSpec, base: &ColoringCert) -> Result<ColoringCert, CodeError> {
    Ok(ColoringCert::from_construction(mod3_construction(spec, base)?))
}

/// Power-of-two variant of [`mod3_coloring`]: colors are vectors of
/// `Z_2^r` with `2^r` the least power of two above `d`.
pub fn pow2_coloring(spec: &PairMissSpec, base: &ColoringCert) -> Result<ColoringCert, CodeError> {
    Ok(ColoringCert::from_construction(pow2_construction(spec, base)?))
}

/// Result of [`mod3_independent_set`] with the chosen shift and residue.
#[derive(Debug, Clone)]
pub struct Mod3Set {
    pub set: IndependentSetCert,
    /// Shift `j` in `I_j = {u : s(u) + j in I}`.
    pub shift: u64,
    /// Weight class `|u| mod 3`.
    pub residue: u32,
}

/// Independent set of `C_1` of the pair-miss network built from an
/// independent set `I` of `G`: the largest class `{u : s(u) ^ j in I,
/// |u| = r mod 3}`, where `s(u)` is the XOR of the group elements of the
/// set blocks of `u`. Ties go to the least `(j, r)`.
pub fn mod3_independent_set(spec: &PairMissSpec, base: &IndependentSetCert) -> Result<Mod3Set, CodeError> {
    check_pair_miss_size(spec)?;
    let g = spec.cayley();
    verify_independent_set(&g, base).map_err(CodeError::ImproperBaseSet)?;
    let n = spec.order();
    let group = n as u64;
    // counts[s][r] = #{u : s(u) = s, |u| = r mod 3}
    let mut counts = vec![[0u64; 3]; n];
    let mut syndromes = vec![0u32; 1 << n];
    for u in 1..1usize << n {
        let low = u.trailing_zeros() as usize;
        syndromes[u] = syndromes[u & (u - 1)] ^ low as u32;
    }
    for (u, &s) in syndromes.iter().enumerate() {
        counts[s as usize][(u.count_ones() % 3) as usize] += 1;
    }
    let mut best = (0u64, 0u64, 0u32);
    for j in 0..group {
        for r in 0..3u32 {
            let size: u64 = base.words().iter().map(|&i| counts[(i ^ j) as usize][r as usize]).sum();
            if size > best.0 {
                best = (size, j, r);
            }
        }
    }
    let (_, j, r) = best;
    let words: Vec<u64> = (0..1u64 << n)
        .filter(|&u| u.count_ones() % 3 == r)
        .filter(|&u| base.words().contains(&(syndromes[u as usize] as u64 ^ j)))
        .collect();
    let set = IndependentSetCert::new(1 << n, words, Optimality::Unverified);
    let conf = confusion_generators(&pair_miss_instance(spec)?, 1)
        .map_err(|e| CodeError::BadParameter(e.to_string()))?;
    verify_independent_set(&conf, &set).map_err(CodeError::Internal)?;
    Ok(Mod3Set {
        set,
        shift: j,
        residue: r,
    })
}
