//! Which totals small ordered graphs can realize under a weight frame.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::weights::WeightFrame;
use crate::error::{Error, Result};
use crate::hg::OrderedGraph;

/// Ordered graphs on up to this many vertices are enumerated.
pub const PATTERN_VERTEX_CAP: usize = 7;

fn all_graphs(len: usize) -> Result<impl Iterator<Item = OrderedGraph>> {
    if len > PATTERN_VERTEX_CAP {
        return Err(Error::CapExceeded(format!("{len} vertices, at most {PATTERN_VERTEX_CAP} are enumerated")));
    }
    let pairs: Vec<(usize, usize)> = (0..len).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        OrderedGraph::from_edges(len, &edges).expect("valid")
    }))
}

/// All weights w_U(G) over ordered graphs G on m − r + 2 vertices.
pub fn realizable_weights(r: usize, m: usize, k: usize) -> Result<BTreeSet<u128>> {
    let frame = WeightFrame::new(r, m, k)?;
    Ok(all_graphs(frame.len())?.map(|g| frame.weight_of_pattern(&g)).collect())
}

/// First ordered graph (by edge mask) of weight f, if any.
pub fn pattern_with_weight(r: usize, m: usize, k: usize, f: u128) -> Result<Option<OrderedGraph>> {
    let frame = WeightFrame::new(r, m, k)?;
    Ok(all_graphs(frame.len())?.find(|g| frame.weight_of_pattern(g) == f))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternScan {
    pub r: usize,
    pub m: usize,
    pub f: u128,
    pub graphs_per_k: usize,
    /// splits k for which some graph has weight f
    pub realizable_at: Vec<usize>,
}

/// Scan every split k in 1..=⌊r/2⌋ (k and r − k mirror each other).
pub fn scan_patterns(r: usize, m: usize, f: u128) -> Result<PatternScan> {
    let len = m.checked_sub(r).map(|d| d + 2).ok_or_else(|| Error::invalid("m < r"))?;
    let mut realizable_at = Vec::new();
    for k in 1..=r / 2 {
        if pattern_with_weight(r, m, k, f)?.is_some() {
            realizable_at.push(k);
        }
    }
    Ok(PatternScan { r, m, f, graphs_per_k: 1 << (len * (len - 1) / 2), realizable_at })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_plus_one_gap() {
        // weights r−1, 1, 1 at k = 1: totals 3..=r−2 are missing
        let w = realizable_weights(6, 7, 1).unwrap();
        assert_eq!(w.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 5, 6, 7]);
    }
}
