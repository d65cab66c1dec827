use crate::error::{usage, Result};
use crate::model::Bounds;

/// The subspaces produced by cutting the search box along one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceSet {
    pub subspaces: Vec<Bounds>,
    /// Index of the dimension that was split.
    pub split_dim: usize,
}

/// Splits `bounds` into `count` equal slabs along its widest dimension (the
/// first one on ties). Every other dimension is copied unchanged, and the last
/// slab ends exactly at the original upper bound.
pub fn segment_space(bounds: &Bounds, count: usize) -> Result<SubspaceSet> {
    if count == 0 {
        return Err(usage("number of subspaces must be at least 1"));
    }
    let mut split_dim = 0;
    for i in 1..bounds.len() {
        if bounds.width(i) > bounds.width(split_dim) {
            split_dim = i;
        }
    }
    let lo = bounds.lower()[split_dim];
    let hi = bounds.upper()[split_dim];
    let step = (hi - lo) / count as f64;

    let subspaces = (0..count)
        .map(|i| {
            let mut lower = bounds.lower().to_vec();
            let mut upper = bounds.upper().to_vec();
            lower[split_dim] = lo + i as f64 * step;
            upper[split_dim] = if i + 1 == count {
                hi
            } else {
                lo + (i + 1) as f64 * step
            };
            Bounds::new(lower, upper)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubspaceSet {
        subspaces,
        split_dim,
    })
}
