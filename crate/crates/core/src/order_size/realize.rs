//! (r+1, f)-subsets from a stepped-down coloring with split k = f.

use serde::{Deserialize, Serialize};

use super::weights::coloring_count;
use crate::error::{Error, Result};
use crate::hg::{Coloring, FnColoring, VertexSet};
use crate::stepdown::{step_to_pairs, StepResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub f: usize,
    /// f was replaced by r+1−f on the complement
    pub complemented: bool,
    pub k: usize,
    /// the (r+1)-set, or None when χ has no copy of the pattern
    pub set: Option<VertexSet>,
    /// positions (1-based) i, j, h in X of the pattern, when found
    pub pattern: Option<[usize; 3]>,
}

/// Use a stepped-down result for the normalized f (0 ≤ f ≤ ⌊(r+1)/2⌋).
///
/// f ≥ 1 needs positions f ≤ i < j < h ≤ ℓ−r+f+1 with only jh an edge of
/// χ; f = 0 needs an independent triple of χ.
pub fn realize_from_step(c: &dyn Coloring, step: &StepResult, f: usize) -> Result<(Option<VertexSet>, Option<[usize; 3]>)> {
    let r = c.arity();
    let k = f.max(1);
    if step.k != k {
        return Err(Error::invalid(format!("stepped down with k = {}, need k = {k}", step.k)));
    }
    let l = step.x.len();
    if l < r + 1 {
        return Err(Error::invalid(format!("stepped-down sequence has {l} vertices, need at least {}", r + 1)));
    }
    let chi = step.chi_graph().ok_or_else(|| Error::invalid("χ is not on pairs"))?;
    // 1-based bounds on the three pattern positions
    let (lo, hi) = (k, l - r + k + 1);
    let e = |a: usize, b: usize| chi.has_edge(a - 1, b - 1);
    let want =
        |i: usize, j: usize, h: usize| if f == 0 { !e(i, j) && !e(i, h) && !e(j, h) } else { !e(i, j) && !e(i, h) && e(j, h) };
    let mut hit = None;
    'outer: for i in lo..=hi {
        for j in i + 1..=hi {
            for h in j + 1..=hi {
                if want(i, j, h) {
                    hit = Some([i, j, h]);
                    break 'outer;
                }
            }
        }
    }
    let Some([i, j, h]) = hit else { return Ok((None, None)) };
    let positions: Vec<usize> = (1..k).chain([i, j, h]).chain(l - r + k + 2..=l).collect();
    let verts: Vec<usize> = positions.iter().map(|&p| step.x[p - 1]).collect();
    let got = coloring_count(c, &verts);
    if got != f as u128 {
        return Err(Error::Verification(format!("(r+1)-set {verts:?} spans {got} edges, expected {f}")));
    }
    Ok((Some(VertexSet::new(verts, c.order())?), Some([i, j, h])))
}

/// Step down with k = f (after complementing when f > ⌊(r+1)/2⌋) to length
/// `l` and look for an (r+1, f)-subset.
pub fn realize_r_plus_1(c: &dyn Coloring, f: usize, l: usize) -> Result<Realization> {
    let r = c.arity();
    if f > r + 1 {
        return Err(Error::invalid(format!("f = {f} exceeds r + 1 = {}", r + 1)));
    }
    let complemented = f > r.div_ceil(2);
    let fq = if complemented { r + 1 - f } else { f };
    let k = fq.max(1);
    let flipped = FnColoring { arity: r, order: c.order(), f: |t: &[usize]| !c.color(t) };
    let cc: &dyn Coloring = if complemented { &flipped } else { c };
    let step = step_to_pairs(cc, k, l)?;
    let (set, pattern) = realize_from_step(cc, &step, fq)?;
    if let Some(s) = &set {
        let got = coloring_count(c, s);
        if got != f as u128 {
            return Err(Error::Verification(format!("(r+1)-set {s:?} spans {got} edges, expected {f}")));
        }
    }
    Ok(Realization { f, complemented, k, set, pattern })
}
