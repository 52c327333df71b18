use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::confusion::{CayleyGraph, ENUMERATION_DIM_LIMIT};

use super::{verify_independent_set, ColoringCert, IndependentSetCert, SearchError};

/// Colors a Cayley graph by uniformly random translates `x ^ I` of an
/// independent set until every vertex is covered.
///
/// Each vertex gets the index of the first translate that covered it.
/// Translates that cover nothing new do not consume a color, so color
/// indices are contiguous. Translates of an independent set are
/// independent, so the result is always proper.
pub fn random_translate_cover(
    c: &CayleyGraph,
    set: &IndependentSetCert,
    seed: u64,
) -> Result<ColoringCert, SearchError> {
    if c.dim() > ENUMERATION_DIM_LIMIT {
        return Err(SearchError::SizeOverLimit {
            order: 1 << c.dim(),
            limit: 1 << ENUMERATION_DIM_LIMIT,
        });
    }
    verify_independent_set(c, set).map_err(SearchError::NotIndependent)?;
    if set.is_empty() {
        return Err(SearchError::ZeroAlpha);
    }
    let order = c.vertex_count();
    let mut colors = vec![u32::MAX; order as usize];
    let mut remaining = order;
    let mut next_color = 0u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while remaining > 0 {
        let x: u64 = rng.gen_range(0..order);
        let mut fresh = false;
        for &w in set.words() {
            let v = (x ^ w) as usize;
            if colors[v] == u32::MAX {
                colors[v] = next_color;
                remaining -= 1;
                fresh = true;
            }
        }
        if fresh {
            next_color += 1;
        }
    }
    Ok(ColoringCert::from_table(colors))
}
