//! Size spectra s(G; m) and plain (m, f)-subset search.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::Rng as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::combin::{binom_u128, next_combination};
use crate::error::{Error, Result};
use crate::hg::{Hypergraph, VertexSet};
use crate::rng;

/// Largest C(n, m) an exhaustive spectrum will scan.
pub const DEFAULT_SPECTRUM_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpectrumMode {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub m: usize,
    pub achieved: Vec<u64>,
    /// first witness for every achieved f (by rank in exhaustive mode, by draw in sampled mode)
    pub witnesses: BTreeMap<u64, VertexSet>,
    pub mode: SpectrumMode,
    pub subsets_examined: u64,
}

impl SpectrumReport {
    /// s(G; m) when the mode is exhaustive; a lower bound otherwise.
    pub fn s(&self) -> usize {
        self.achieved.len()
    }

    pub fn max(&self) -> Option<u64> {
        self.achieved.last().copied()
    }
}

fn check_m(h: &Hypergraph, m: usize) -> Result<()> {
    if m < h.r() || m > h.n() {
        return Err(Error::invalid(format!("m = {m} must lie in {}..={}", h.r(), h.n())));
    }
    Ok(())
}

/// Scan the m-subsets whose smallest element is `first`, in lexicographic order.
fn scan_from(h: &Hypergraph, m: usize, first: usize) -> (BTreeMap<u64, Vec<usize>>, u64) {
    let n = h.n();
    let mut seen = BTreeMap::new();
    let mut examined = 0;
    let rest_n = n - first - 1;
    let mut comb: Vec<usize> = (0..m - 1).collect();
    let mut set = vec![0; m];
    loop {
        set[0] = first;
        for (s, &c) in set[1..].iter_mut().zip(&comb) {
            *s = first + 1 + c;
        }
        examined += 1;
        seen.entry(h.edge_count_sorted(&set)).or_insert_with(|| set.clone());
        if !next_combination(&mut comb, rest_n) {
            break;
        }
    }
    (seen, examined)
}

pub fn size_spectrum(h: &Hypergraph, m: usize, mode: SpectrumMode, cap: u64) -> Result<SpectrumReport> {
    check_m(h, m)?;
    let n = h.n();
    let mut witnesses: BTreeMap<u64, VertexSet> = BTreeMap::new();
    let mut examined = 0u64;
    match mode {
        SpectrumMode::Exhaustive => {
            let total = binom_u128(n as u64, m as u64).unwrap_or(u128::MAX);
            if total > cap as u128 {
                return Err(Error::CapExceeded(format!("C({n}, {m}) = {total} subsets exceeds the cap {cap}")));
            }
            let parts: Vec<_> = (0..=n - m).into_par_iter().map(|first| scan_from(h, m, first)).collect();
            for (seen, count) in parts {
                examined += count;
                for (f, w) in seen {
                    witnesses.entry(f).or_insert_with(|| VertexSet::from_sorted(w));
                }
            }
        }
        SpectrumMode::Sampled { count, seed } => {
            let mut g = rng::seeded(seed);
            for _ in 0..count {
                let mut set = sample(&mut g, n, m).into_vec();
                set.sort_unstable();
                examined += 1;
                let f = h.edge_count_sorted(&set);
                witnesses.entry(f).or_insert_with(|| VertexSet::from_sorted(set));
            }
        }
    }
    Ok(SpectrumReport { m, achieved: witnesses.keys().copied().collect(), witnesses, mode, subsets_examined: examined })
}

/// Look for an m-set spanning exactly f edges.
///
/// `Ok(None)` means proven absent (the lexicographic scan finished). When the
/// budget (one unit per subset or swap evaluated) cannot cover all C(n, m)
/// subsets, half of it goes to the lexicographic scan and the rest to seeded
/// random restarts of a swap search; running out is `BudgetExhausted`.
pub fn find_mf_subset(h: &Hypergraph, m: usize, f: u64, budget: &Budget, seed: u64) -> Result<Option<VertexSet>> {
    check_m(h, m)?;
    let most = binom_u128(m as u64, h.r() as u64).expect("m ≤ MAX_N");
    if f as u128 > most {
        return Err(Error::invalid(format!("f = {f} exceeds C({m}, {}) = {most}", h.r())));
    }
    let n = h.n();
    let total = binom_u128(n as u64, m as u64).unwrap_or(u128::MAX);
    let full = budget.limit().is_none_or(|l| total <= l as u128);
    let lex_share = if full { u64::MAX } else { budget.limit().unwrap() / 2 };
    let mut comb: Vec<usize> = (0..m).collect();
    let mut spent = 0u64;
    loop {
        if spent == lex_share {
            break;
        }
        budget.spend(1)?;
        spent += 1;
        if h.edge_count_sorted(&comb) == f {
            return Ok(Some(VertexSet::from_sorted(comb)));
        }
        if !next_combination(&mut comb, n) {
            return Ok(None);
        }
    }
    let mut g = rng::seeded(seed);
    loop {
        let mut set = sample(&mut g, n, m).into_vec();
        set.sort_unstable();
        let mut e = h.edge_count_sorted(&set);
        budget.spend(1)?;
        for _ in 0..m * n {
            if e == f {
                return Ok(Some(VertexSet::from_sorted(set)));
            }
            let out = g.gen_range(0..m);
            let inn = g.gen_range(0..n);
            if set.binary_search(&inn).is_ok() {
                continue;
            }
            let mut next = set.clone();
            next[out] = inn;
            next.sort_unstable();
            budget.spend(1)?;
            let e2 = h.edge_count_sorted(&next);
            if e2.abs_diff(f) <= e.abs_diff(f) {
                set = next;
                e = e2;
            }
        }
        if e == f {
            return Ok(Some(VertexSet::from_sorted(set)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_spectra() {
        let k = Hypergraph::complete(3, 7).unwrap();
        let rep = size_spectrum(&k, 4, SpectrumMode::Exhaustive, DEFAULT_SPECTRUM_CAP).unwrap();
        assert_eq!(rep.achieved, vec![4]);
        assert_eq!(rep.subsets_examined, 35);
        let e = Hypergraph::empty(3, 7).unwrap();
        assert_eq!(size_spectrum(&e, 5, SpectrumMode::Exhaustive, DEFAULT_SPECTRUM_CAP).unwrap().s(), 1);
        let one = Hypergraph::from_edges(3, 6, vec![vec![0, 1, 2]]).unwrap();
        let rep = size_spectrum(&one, 3, SpectrumMode::Exhaustive, DEFAULT_SPECTRUM_CAP).unwrap();
        assert_eq!(rep.achieved, vec![0, 1]);
        assert_eq!(rep.witnesses[&1].as_slice(), &[0, 1, 2]);
        assert_eq!(rep.witnesses[&0].as_slice(), &[0, 1, 3]);
        assert!(size_spectrum(&one, 7, SpectrumMode::Exhaustive, DEFAULT_SPECTRUM_CAP).is_err());
        assert!(matches!(size_spectrum(&one, 3, SpectrumMode::Exhaustive, 5), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn mf_subsets() {
        let k = Hypergraph::complete(3, 6).unwrap();
        let b = Budget::unlimited();
        assert_eq!(find_mf_subset(&k, 4, 4, &b, 0).unwrap().unwrap().as_slice(), &[0, 1, 2, 3]);
        assert_eq!(find_mf_subset(&k, 4, 3, &b, 0).unwrap(), None);
        assert!(matches!(find_mf_subset(&k, 4, 3, &Budget::new(4), 0), Err(Error::BudgetExhausted(_))));
        assert!(find_mf_subset(&k, 4, 5, &b, 0).is_err());
    }
}
