use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rand::seq::index::sample;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combin::{binom_u128, next_combination};
use crate::constructions::gr::GrInstance;
use crate::error::{Error, Result};
use crate::order_size::{SpectrumMode, DEFAULT_SPECTRUM_CAP};
use crate::rng;
use crate::values::g_r;

/// Sampled scans split their draws over this many sub-seeded streams, so the
/// result does not depend on the thread count.
pub const SAMPLE_STREAMS: u64 = 16;

/// Witnesses kept per report; `violation_count` has the full number.
const KEEP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub set: Vec<usize>,
    pub edges: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrReport {
    pub r: usize,
    pub n: usize,
    pub m: usize,
    pub mode: SpectrumMode,
    /// per-stream seeds in sampled mode
    pub sub_seeds: Vec<u64>,
    pub samples: u64,
    /// edge count -> number of subsets
    pub histogram: BTreeMap<u64, u64>,
    pub max: u64,
    /// g_r(m)
    pub bound: u64,
    /// exact count hunted for (2^r − 1 in counterexample scans)
    pub target: Option<u64>,
    pub hits: u64,
    pub violations: Vec<Violation>,
    pub violation_count: u64,
    /// "exhaustive" or "sampled, not proven"
    pub claim: String,
    /// set when the source guarantees nothing for this r
    pub advisory: Option<String>,
}

impl GrReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Default)]
struct Tally {
    hist: BTreeMap<u64, u64>,
    bad: Vec<Violation>,
    bad_count: u64,
    seen: u64,
}

impl Tally {
    fn add(&mut self, set: &[usize], e: u64, is_bad: bool) {
        self.seen += 1;
        *self.hist.entry(e).or_default() += 1;
        if is_bad {
            self.bad_count += 1;
            if self.bad.len() < KEEP {
                self.bad.push(Violation { set: set.to_vec(), edges: e });
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (k, v) in other.hist {
            *self.hist.entry(k).or_default() += v;
        }
        self.bad.extend(other.bad);
        self.bad.truncate(KEEP);
        self.bad_count += other.bad_count;
        self.seen += other.seen;
        self
    }
}

fn scan(inst: &GrInstance, m: usize, mode: SpectrumMode, is_bad: &(impl Fn(u64) -> bool + Sync)) -> Result<(Tally, Vec<u64>)> {
    let n = inst.n();
    if m < inst.r || m > n {
        return Err(Error::invalid(format!("m = {m} must lie in {}..={n}", inst.r)));
    }
    match mode {
        SpectrumMode::Exhaustive => {
            let total = binom_u128(n as u64, m as u64).unwrap_or(u128::MAX);
            if total > DEFAULT_SPECTRUM_CAP as u128 {
                return Err(Error::CapExceeded(format!("C({n}, {m}) = {total} subsets; use sampled mode")));
            }
            // split on the smallest element, merged in order
            let parts: Vec<Tally> = (0..=n - m)
                .into_par_iter()
                .map(|first| {
                    let mut t = Tally::default();
                    let rest = n - first - 1;
                    let mut comb: Vec<usize> = (0..m - 1).collect();
                    let mut set = vec![first; m];
                    loop {
                        for (s, &c) in set[1..].iter_mut().zip(&comb) {
                            *s = first + 1 + c;
                        }
                        let e = inst.edges_in(&set);
                        t.add(&set, e, is_bad(e));
                        if !next_combination(&mut comb, rest) {
                            break;
                        }
                    }
                    t
                })
                .collect();
            Ok((parts.into_iter().fold(Tally::default(), Tally::merge), vec![]))
        }
        SpectrumMode::Sampled { count, seed } => {
            let seeds: Vec<u64> = (0..SAMPLE_STREAMS).map(|k| rng::sub_seed(seed, k)).collect();
            let parts: Vec<Tally> = seeds
                .par_iter()
                .enumerate()
                .map(|(k, &s)| {
                    let k = k as u64;
                    let quota = count / SAMPLE_STREAMS + u64::from(k < count % SAMPLE_STREAMS);
                    let mut g = rng::seeded(s);
                    let mut t = Tally::default();
                    for _ in 0..quota {
                        let mut set = sample(&mut g, n, m).into_vec();
                        set.sort_unstable();
                        let e = inst.edges_in(&set);
                        t.add(&set, e, is_bad(e));
                    }
                    t
                })
                .collect();
            Ok((parts.into_iter().fold(Tally::default(), Tally::merge), seeds))
        }
    }
}

fn gr_u64(r: usize, m: usize) -> u64 {
    g_r(r, m).to_u64().unwrap_or(u64::MAX)
}

fn report(
    inst: &GrInstance,
    m: usize,
    mode: SpectrumMode,
    t: Tally,
    seeds: Vec<u64>,
    target: Option<u64>,
    advisory: Option<String>,
) -> GrReport {
    let hits = target.map_or(0, |x| t.hist.get(&x).copied().unwrap_or(0));
    GrReport {
        r: inst.r,
        n: inst.n(),
        m,
        mode,
        sub_seeds: seeds,
        samples: t.seen,
        max: t.hist.keys().next_back().copied().unwrap_or(0),
        histogram: t.hist,
        bound: gr_u64(inst.r, m),
        target,
        hits,
        violations: t.bad,
        violation_count: t.bad_count,
        claim: match mode {
            SpectrumMode::Exhaustive => "exhaustive".into(),
            SpectrumMode::Sampled { .. } => "sampled, not proven".into(),
        },
        advisory,
    }
}

/// Scan m-subsets for more than g_r(m) edges. A violation is any subset over
/// the bound; for r = 3 the scan still runs but is labelled advisory.
pub fn check_fact_gr(inst: &GrInstance, m: usize, mode: SpectrumMode) -> Result<GrReport> {
    let bound = gr_u64(inst.r, m);
    let (t, seeds) = scan(inst, m, mode, &|e| e > bound)?;
    let advisory = (inst.r < 4).then(|| "bound only claimed for r >= 4".to_string());
    Ok(report(inst, m, mode, t, seeds, None, advisory))
}

/// Scan 2r-subsets for exactly 2^r − 1 edges (or more than g_r(2r) = 2^r).
/// Exhaustive when C(n, 2r) <= `samples`, sampled otherwise.
pub fn scan_counterexample(inst: &GrInstance, samples: u64, seed: u64) -> Result<GrReport> {
    let r = inst.r;
    let m = 2 * r;
    let target = (1u64 << r) - 1;
    let bound = gr_u64(r, m);
    let n = inst.n();
    let mode = if n >= m && binom_u128(n as u64, m as u64).is_some_and(|c| c <= samples as u128) {
        SpectrumMode::Exhaustive
    } else {
        SpectrumMode::Sampled { count: samples, seed }
    };
    let (t, seeds) = scan(inst, m, mode, &|e| e == target || e > bound)?;
    let advisory = match r {
        3 => Some("r = 3 admits 2^r − 1 edges on 2r vertices; histogram only".to_string()),
        4 => Some("r = 4 is not covered by the short argument".to_string()),
        _ => None,
    };
    Ok(report(inst, m, mode, t, seeds, Some(target), advisory))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_gr, footnote_example_r3};
    use crate::hg::{pair_index, PalettedColoring};

    #[test]
    fn m_equals_r() {
        for r in 3..=5 {
            let g = build_gr(12, r, 5).unwrap();
            let rep = check_fact_gr(&g, r, SpectrumMode::Exhaustive).unwrap();
            assert_eq!(rep.bound, 1);
            assert!(rep.max <= 1 && rep.passed());
            assert_eq!(rep.samples as usize, crate::combin::binom_sat(12, r) as usize);
            assert_eq!(rep.histogram.get(&1).copied().unwrap_or(0), g.graph.as_ref().unwrap().num_edges() as u64);
        }
    }

    #[test]
    fn r4_n16_m8() {
        let g = build_gr(16, 4, 11).unwrap();
        let rep = check_fact_gr(&g, 8, SpectrumMode::Exhaustive).unwrap();
        assert_eq!(rep.bound, 16);
        assert_eq!(rep.samples, 12_870);
        assert!(rep.max <= 16 && rep.passed(), "{rep:?}");
        assert!(rep.advisory.is_none());
    }

    #[test]
    fn monochromatic_zero() {
        let c = PalettedColoring::from_fn(14, 10, |_, _| pair_index(0, 1) as u16).unwrap();
        let g = GrInstance::from_coloring(5, c, None).unwrap();
        let rep = scan_counterexample(&g, 2000, 1).unwrap();
        assert_eq!(rep.histogram.keys().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(rep.samples, 1001);
        assert_eq!(rep.mode, SpectrumMode::Exhaustive);
    }

    #[test]
    fn footnote_is_a_hit() {
        let g = footnote_example_r3();
        let rep = scan_counterexample(&g, 10, 0).unwrap();
        assert_eq!(rep.hits, 1);
        assert_eq!(rep.violations, vec![Violation { set: (0..6).collect(), edges: 7 }]);
        assert!(rep.advisory.is_some());
    }

    #[test]
    fn sampled_is_thread_independent() {
        let g = build_gr(30, 4, 2).unwrap();
        let mode = SpectrumMode::Sampled { count: 5000, seed: 9 };
        let a = check_fact_gr(&g, 8, mode).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| check_fact_gr(&g, 8, mode).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.samples, 5000);
        assert_eq!(a.sub_seeds.len(), SAMPLE_STREAMS as usize);
    }

    #[test]
    fn r3_n12_histogram() {
        let g = build_gr(12, 3, 4).unwrap();
        let rep = scan_counterexample(&g, 1000, 4).unwrap();
        assert_eq!(rep.mode, SpectrumMode::Exhaustive);
        assert_eq!(rep.histogram.values().sum::<u64>(), 924);
    }
}
