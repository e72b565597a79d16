//! Erdős–Rado stepping-down on explicit colorings.
//!
//! One stage takes a coloring of a-subsets and greedily builds a sequence
//! x_1 < x_2 < ... such that the color of every a-tuple depends only on its
//! first a−1 entries. Running the stage under the reversed order strips the
//! first entry instead. Composing r−2 stages leaves a coloring of pairs.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::combin::for_each_subset;
use crate::error::{Error, Result};
use crate::hg::{Coloring, OrderedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub arity: usize,
    pub reversed: bool,
    /// |C| before each vertex was taken
    pub candidate_sizes: Vec<usize>,
    pub length: usize,
}

/// Colors of (arity)-subsets of positions 0..len of X; only the 1-colored
/// tuples are stored, all others are 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiTable {
    pub arity: usize,
    pub ones: Vec<Vec<usize>>,
}

impl ChiTable {
    pub fn get(&self, positions: &[usize]) -> bool {
        self.ones.binary_search_by(|t| t.as_slice().cmp(positions)).is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepResult {
    pub r: usize,
    /// split position: c(x_1..x_r) = χ(x_k, x_{k+1}); 0 for a single stage,
    /// where χ takes the first r−1 entries
    pub k: usize,
    pub x: Vec<usize>,
    pub chi: ChiTable,
    pub transcript: Vec<StageRecord>,
}

impl StepResult {
    /// The stepped-down ordered graph on positions of X. Only defined once
    /// χ is on pairs; pairs no r-tuple can use are left as non-edges.
    pub fn chi_graph(&self) -> Option<OrderedGraph> {
        if self.chi.arity != 2 {
            return None;
        }
        let l = self.x.len();
        let k = self.k.max(1);
        let (lo, hi) = (k - 1, (l + k).saturating_sub(self.r));
        Some(OrderedGraph::from_fn(l, |i, j| i >= lo && j <= hi && self.chi.get(&[i, j])))
    }
}

/// Offset of the colored block inside an r-tuple for split k (0 = first r−1).
fn block(r: usize, k: usize, arity: usize) -> usize {
    if k == 0 {
        0
    } else {
        debug_assert_eq!(arity, 2);
        let _ = r;
        k - 1
    }
}

/// Check c(y) = χ(block of y) over every increasing r-tuple of X.
pub fn check_factorization(c: &dyn Coloring, res: &StepResult) -> Result<()> {
    let r = c.arity();
    let positions: Vec<usize> = (0..res.x.len()).collect();
    let off = block(r, res.k, res.chi.arity);
    let mut bad = None;
    let mut buf = Vec::with_capacity(r);
    for_each_subset(&positions, r, |t| {
        buf.clear();
        buf.extend(t.iter().map(|&p| res.x[p]));
        if c.color(&buf) != res.chi.get(&t[off..off + res.chi.arity]) {
            bad = Some(buf.clone());
            return false;
        }
        true
    });
    match bad {
        Some(t) => Err(Error::Verification(format!("factorization fails on r-tuple {t:?}"))),
        None => Ok(()),
    }
}

struct Stage {
    x: Vec<usize>,
    chi: HashMap<Vec<usize>, bool>,
    record: StageRecord,
}

/// One greedy stage on `pool` (listed in processing order). `color` gets
/// tuples sorted by vertex id. χ is keyed by sorted vertex ids.
fn refine(pool: &[usize], arity: usize, color: &dyn Fn(&[usize]) -> bool, limit: Option<usize>, reversed: bool) -> Stage {
    let mut cand: Vec<usize> = pool.to_vec();
    let mut x: Vec<usize> = Vec::new();
    let mut chi = HashMap::new();
    let mut sizes = Vec::new();
    let mut buf = Vec::with_capacity(arity);
    while !cand.is_empty() && limit.is_none_or(|l| x.len() < l) {
        sizes.push(cand.len());
        let v = cand[0];
        let rest = &cand[1..];
        x.push(v);
        if x.len() + 1 < arity || rest.is_empty() {
            cand = rest.to_vec();
            continue;
        }
        let mut news: Vec<Vec<usize>> = Vec::new();
        for_each_subset(&x[..x.len() - 1], arity - 2, |s| {
            let mut t = s.to_vec();
            t.push(v);
            t.sort_unstable();
            news.push(t);
            true
        });
        let mut classes: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
        for &y in rest {
            let key = news
                .iter()
                .map(|s| {
                    buf.clear();
                    buf.extend_from_slice(s);
                    buf.push(y);
                    buf.sort_unstable();
                    color(&buf)
                })
                .collect();
            classes.entry(key).or_default().push(y);
        }
        // largest class, ties to the smallest color vector
        let best = classes.values().map(Vec::len).max().unwrap_or(0);
        let (key, class) = classes.into_iter().find(|(_, c)| c.len() == best).expect("nonempty");
        for (s, bit) in news.into_iter().zip(key) {
            chi.insert(s, bit);
        }
        cand = class;
    }
    let length = x.len();
    Stage { x, chi, record: StageRecord { arity, reversed, candidate_sizes: sizes, length } }
}

fn positions_table(x_sorted: &[usize], arity: usize, chi: &HashMap<Vec<usize>, bool>) -> ChiTable {
    let mut ones: Vec<Vec<usize>> = chi
        .iter()
        .filter(|(t, &b)| b && t.iter().all(|v| x_sorted.binary_search(v).is_ok()))
        .map(|(t, _)| t.iter().map(|v| x_sorted.binary_search(v).unwrap()).collect())
        .collect();
    ones.sort();
    ChiTable { arity, ones }
}

fn exhausted(stage: usize, got: &[usize], want: usize) -> Error {
    Error::SearchFailed(format!("stage {stage}: candidates exhausted after {} of {want} vertices, prefix {got:?}", got.len()))
}

/// Single stepping-down application: c(x_1..x_r) = χ(x_1..x_{r−1}).
pub fn step_once(c: &dyn Coloring, l: usize) -> Result<StepResult> {
    let r = c.arity();
    if l < r {
        return Err(Error::invalid(format!("ℓ = {l} must be at least r = {r}")));
    }
    if c.order() < 2 {
        return Err(Error::invalid("need at least two vertices"));
    }
    let pool: Vec<usize> = (0..c.order()).collect();
    let st = refine(&pool, r, &|t| c.color(t), Some(l), false);
    if st.x.len() < l {
        return Err(exhausted(1, &st.x, l));
    }
    let chi = positions_table(&st.x, r - 1, &st.chi);
    let res = StepResult { r, k: 0, x: st.x, chi, transcript: vec![st.record] };
    check_factorization(c, &res)?;
    Ok(res)
}

/// Reduce to pairs: c(x_1..x_r) = χ(x_k, x_{k+1}).
///
/// Schedule: r−k−1 forward stages (each strips the last coordinate), then
/// k−1 stages under the reversed order (each strips the first). All stages
/// but the last run until the candidates run out.
pub fn step_to_pairs(c: &dyn Coloring, k: usize, l: usize) -> Result<StepResult> {
    let r = c.arity();
    if r < 3 {
        return Err(Error::invalid("stepping down needs r ≥ 3"));
    }
    if k < 1 || k > r - 1 {
        return Err(Error::invalid(format!("split k = {k} outside 1..={}", r - 1)));
    }
    if l < r {
        return Err(Error::invalid(format!("ℓ = {l} must be at least r = {r}")));
    }
    let schedule: Vec<bool> = std::iter::repeat_n(false, r - k - 1).chain(std::iter::repeat_n(true, k - 1)).collect();
    let mut pool: Vec<usize> = (0..c.order()).collect();
    let mut chi: Option<HashMap<Vec<usize>, bool>> = None;
    let mut transcript = Vec::new();
    let stages = schedule.len();
    for (s, &reversed) in schedule.iter().enumerate() {
        let arity = r - s;
        let last = s + 1 == stages;
        let mut order = pool.clone();
        if reversed {
            order.reverse();
        }
        let st = {
            let color = |t: &[usize]| match &chi {
                None => c.color(t),
                Some(m) => m.get(t).copied().unwrap_or(false),
            };
            refine(&order, arity, &color, last.then_some(l), reversed)
        };
        transcript.push(st.record);
        if st.x.len() < l {
            let mut got = st.x;
            got.sort_unstable();
            return Err(exhausted(s + 1, &got, l));
        }
        pool = st.x;
        pool.sort_unstable();
        chi = Some(st.chi);
    }
    let chi = positions_table(&pool, 2, &chi.expect("at least one stage"));
    let res = StepResult { r, k, x: pool, chi, transcript };
    check_factorization(c, &res)?;
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hg::{random_hypergraph, FnColoring, HashColoring};

    #[test]
    fn constant_coloring() {
        let c = FnColoring { arity: 3, order: 10, f: |_: &[usize]| false };
        let res = step_once(&c, 5).unwrap();
        assert_eq!(res.x, vec![0, 1, 2, 3, 4]);
        assert!(res.chi.ones.is_empty());
        let c = FnColoring { arity: 4, order: 10, f: |_: &[usize]| true };
        let res = step_to_pairs(&c, 2, 6).unwrap();
        assert_eq!(res.x.len(), 6);
    }

    #[test]
    fn guaranteed_size_r3() {
        for seed in 0..50 {
            let h = random_hypergraph(3, 8, 0.5, seed).unwrap();
            let res = step_once(&h, 4).unwrap();
            assert_eq!(res.x.len(), 4);
        }
    }

    #[test]
    fn every_split_r4() {
        let c = HashColoring { arity: 4, order: 4096, seed: 11 };
        for k in 1..=3 {
            let res = step_to_pairs(&c, k, 4).unwrap();
            assert_eq!(res.transcript.len(), 2);
            assert_eq!(res.transcript[1].reversed, k >= 2);
            check_factorization(&c, &res).unwrap();
        }
    }

    #[test]
    fn exhaustion_reports_prefix() {
        let c = FnColoring { arity: 3, order: 3, f: |_: &[usize]| false };
        assert!(matches!(step_once(&c, 4), Err(Error::SearchFailed(_))));
    }
}
