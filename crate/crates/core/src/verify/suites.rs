//! The oracle suites behind `verify appendix|eq1|blowup|weights`.

use std::time::Instant;

use rand::seq::index::sample;
use rand::Rng as _;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::oracle::{self, binom};
use super::SuiteReport;
use crate::budget::Budget;
use crate::constructions::{
    build_gr, check_fact_gr, cyclic_bound, cyclic_triangle_3graph, footnote_example_r3, scan_counterexample,
};
use crate::hg::{pair_index, random_ordered_graph, FnColoring, OrderedGraph, Tournament};
use crate::order_size::{find_weighted_mf_subset, scan_patterns, verify_lift, SpectrumMode, WeightFrame, WeightedOutcome};
use crate::rng::{seeded, sub_seed};
use crate::search::HomKind;
use crate::structure::{PairConstants, TypeConstants};
use crate::values::{blowup_edge_count, pair_blowup_edge_count};

/// Σ w(p,q) over the edges of `g` read on `u`, weights from the closed form
/// C(k−1+p, k−1)·C(m−k−q, r−k−1) with p < q positions inside U.
fn weighted_direct(g: &OrderedGraph, u: &[usize], r: usize, m: usize, k: usize) -> u128 {
    let mut total = 0;
    for q in 0..u.len() {
        for p in 0..q {
            if g.has_edge(u[p], u[q]) {
                total += binom(k - 1 + p, k - 1) * binom(m - k - q, r - k - 1);
            }
        }
    }
    total
}

/// Lift identity: r-subsets of head ∪ U ∪ tail colored χ(y_k, y_{k+1})
/// against the weighted total of U.
pub fn suite_eq1(trials: u64, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("eq1");
    let n = 12;
    let x: Vec<usize> = (0..n).collect();
    for t in 0..trials {
        let mut g = seeded(sub_seed(seed, t));
        let r = g.gen_range(3..=4);
        let k = g.gen_range(1..r);
        let m = g.gen_range(r..=n);
        let chi = OrderedGraph::from_fn(n, |_, _| g.gen_bool(0.5));
        let mut pos = sample(&mut g, n, m).into_vec();
        pos.sort_unstable();
        let (head, rest) = pos.split_at(k - 1);
        let (u, tail) = rest.split_at(m - r + 2);
        let c = FnColoring { arity: r, order: n, f: |y: &[usize]| chi.has_edge(y[k - 1], y[k]) };
        let frame = match WeightFrame::new(r, m, k) {
            Ok(f) => f,
            Err(e) => {
                rep.case(false, || format!("trial {t}: frame: {e}"));
                continue;
            }
        };
        let lift = match verify_lift(&c, &x, &chi, &frame, u, head, tail) {
            Ok(l) => l,
            Err(e) => {
                rep.case(false, || format!("trial {t}: {e}"));
                continue;
            }
        };
        let mut direct = 0u128;
        oracle::k_subsets(&pos, r, &mut |y| direct += chi.has_edge(y[k - 1], y[k]) as u128);
        let weighted = weighted_direct(&chi, u, r, m, k);
        let ok = lift.holds && lift.edge_count == direct && lift.weighted == weighted;
        rep.case(ok, || {
            format!("trial {t} (r={r}, k={k}, m={m}): e = {} / {direct}, Σwχ = {} / {weighted}", lift.edge_count, lift.weighted)
        });
        if !ok {
            rep.witnesses.push(json!({"trial": t, "seed": seed, "r": r, "k": k, "positions": pos}));
        }
    }
    rep.timed(start)
}

const TYPE_CONFIGS_D0: [u8; 7] = [0b0010, 0b0100, 0b0110, 0b1000, 0b1010, 0b1100, 0b1110];

/// Closed forms of blow-up edge counts against the blow-up itself and a
/// triple-by-type recount. `instances` of each kind.
pub fn suite_blowup(instances: u64, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("blowup");
    for t in 0..instances {
        let mut g = seeded(sub_seed(seed, 2 * t));
        let bits = TYPE_CONFIGS_D0[t as usize % TYPE_CONFIGS_D0.len()];
        let k = TypeConstants::from_bits(bits);
        let parts = g.gen_range(1..=5);
        let sizes: Vec<usize> = (0..parts).map(|_| g.gen_range(1..=6)).collect();
        let mut budget = 8u64;
        let x: Vec<u64> = sizes
            .iter()
            .map(|&s| {
                let v = g.gen_range(0..=(s as u64).min(budget));
                budget -= v;
                v
            })
            .collect();
        let direct = oracle::type_blowup_direct([k.a, k.b, k.c, k.d], &x);
        match blowup_edge_count(&k, &sizes, &x) {
            Ok(c) => rep.case(c.agrees() && c.direct as u128 == direct, || {
                format!("type {bits:04b} sizes {sizes:?} x {x:?}: closed {} blow-up {} recount {direct}", c.closed_form, c.direct)
            }),
            Err(e) => rep.case(false, || format!("type {bits:04b} x {x:?}: {e}")),
        }
    }
    for t in 0..instances {
        let mut g = seeded(sub_seed(seed, 2 * t + 1));
        let k = PairConstants::from_bits(0b11 | (g.gen_range(0..256u16) << 2));
        let c6: [bool; 6] = std::array::from_fn(|i| k.c[i]);
        let len = g.gen_range(1..=3);
        let eps = g.gen_bool(0.5);
        let part = g.gen_range(1..=3);
        let mut budget = 8u64 - eps as u64;
        let x: Vec<u64> = (0..len)
            .map(|_| {
                let v = g.gen_range(0..=(part as u64).min(budget / 2));
                budget -= 2 * v;
                v
            })
            .collect();
        let pairs = len + eps as usize + g.gen_range(0..=1);
        let direct = oracle::pair_blowup_direct(k.b1, k.b2, c6, &x, eps);
        match pair_blowup_edge_count(&k, pairs, part, &x, eps) {
            Ok(c) => rep.case(c.agrees() && c.direct as u128 == direct, || {
                format!("pair {k:?} x {x:?} eps {eps}: closed {} blow-up {} recount {direct}", c.closed_form, c.direct)
            }),
            Err(e) => rep.case(false, || format!("pair x {x:?}: {e}")),
        }
    }
    rep.timed(start)
}

/// Frame tables, the r = 10 pattern scan and weighted-subset search.
pub fn suite_weights(graphs: u64, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("weights");
    rep.absorb(frames());
    rep.absorb(pattern_r10());
    rep.absorb(weighted_search(graphs, seed));
    rep.timed(start)
}

pub(super) fn frames() -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("frames");
    for r in 3..=6 {
        for k in 1..r {
            for m in r..=14 {
                let f = match WeightFrame::new(r, m, k) {
                    Ok(f) => f,
                    Err(e) => {
                        rep.case(false, || format!("r={r} m={m} k={k}: {e}"));
                        continue;
                    }
                };
                let mut ok = f.total() == binom(m, r);
                for q in 0..f.len() {
                    for p in 0..q {
                        ok &= f.weight(p, q) == binom(k - 1 + p, k - 1) * binom(m - k - q, r - k - 1);
                    }
                }
                rep.case(ok, || format!("frame r={r} m={m} k={k} disagrees with the closed form"));
            }
        }
    }
    rep.timed(start)
}

/// No ordered graph on four vertices has weight 33 for r = 10, m = 12.
pub(super) fn pattern_r10() -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("pattern-r10");
    let (r, m, f) = (10, 12, 33u128);
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|q| (0..q).map(move |p| (p, q))).collect();
    let mut hits = Vec::new();
    let mut near = (u128::MAX, 0u128);
    for k in 1..=5 {
        for mask in 0u32..64 {
            let w: u128 = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &(p, q))| binom(k - 1 + p, k - 1) * binom(m - k - q, r - k - 1))
                .sum();
            rep.cases += 1;
            if w == f {
                hits.push((k, mask));
            }
            let gap = w.abs_diff(f);
            if gap > 0 && gap < near.0 {
                near = (gap, w);
            }
        }
    }
    if !hits.is_empty() {
        rep.fail(format!("weight 33 realized by (k, edge mask) {hits:?}"));
    }
    match scan_patterns(r, m, f) {
        Ok(s) => {
            rep.case(s.realizable_at.is_empty() && s.graphs_per_k == 64, || format!("library scan disagrees: {s:?}"));
        }
        Err(e) => rep.case(false, || format!("scan_patterns: {e}")),
    }
    rep.note(format!("closest realizable weight to 33 is {}", near.1));
    rep.timed(start)
}

fn is_hom_ordered(g: &OrderedGraph, set: &[usize], kind: HomKind) -> bool {
    let want = kind == HomKind::Clique;
    set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b) == want))
}

/// Weighted (m,f)-subsets for r = 3 on n = 64: every m ∈ {3,4,5}, f ≤ ½C(m,3),
/// h ∈ {2,3,4} with n ≥ h^{m−2}.
pub(super) fn weighted_search(graphs: u64, seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("weighted-search");
    let n = 64usize;
    let densities = [0.5, 0.1, 0.9, 0.3, 0.7, 0.02, 0.98];
    let (mut weighted, mut homogeneous) = (0u64, 0u64);
    for gi in 0..graphs {
        let p = densities[gi as usize % densities.len()];
        let g = random_ordered_graph(n, p, sub_seed(seed, gi));
        for m in 3..=5usize {
            for f in 0..=binom(m, 3) / 2 {
                for h in 2..=4usize {
                    if (h as u128).pow(m as u32 - 2) > n as u128 {
                        continue;
                    }
                    let ctx = || format!("graph {gi} (p={p}) m={m} f={f} h={h}");
                    match find_weighted_mf_subset(&g, 3, m, f, h, &Budget::unlimited()) {
                        Ok(WeightedOutcome::Weighted(w)) => {
                            weighted += 1;
                            let u = w.u.as_slice();
                            let ok =
                                u.len() == m - 1 && u.windows(2).all(|p| p[0] < p[1]) && weighted_direct(&g, u, 3, m, 1) == f;
                            rep.case(ok, || format!("{}: U = {u:?} does not weigh f", ctx()));
                        }
                        Ok(WeightedOutcome::Homogeneous(hw)) => {
                            homogeneous += 1;
                            let ok = hw.set.len() >= h && is_hom_ordered(&g, hw.set.as_slice(), hw.kind);
                            rep.case(ok, || format!("{}: {:?} {:?} is not homogeneous of size ≥ h", ctx(), hw.kind, hw.set));
                        }
                        Err(e) => rep.case(false, || format!("{}: {e}", ctx())),
                    }
                }
            }
        }
    }
    rep.note(format!("{weighted} weighted witnesses, {homogeneous} homogeneous sets"));
    rep.timed(start)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AppendixParams {
    /// tournament seeds for the cyclic-triangle bound (n = 10, all 6-subsets)
    pub cyclic_seeds: Vec<u64>,
    /// coloring seeds for G_5 on 40 vertices
    pub gr_seeds: Vec<u64>,
    pub samples: u64,
}

impl Default for AppendixParams {
    fn default() -> Self {
        AppendixParams { cyclic_seeds: (0..20).collect(), gr_seeds: (0..5).collect(), samples: 100_000 }
    }
}

pub(super) fn cyclic_suite(seeds: &[u64]) -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("cyclic");
    let (n, m) = (10usize, 6usize);
    let bound = cyclic_bound(m as u64);
    let verts: Vec<usize> = (0..n).collect();
    let mut overall = 0;
    for &seed in seeds {
        let h = match cyclic_triangle_3graph(n, seed) {
            Ok(h) => h,
            Err(e) => {
                rep.case(false, || format!("seed {seed}: {e}"));
                continue;
            }
        };
        let t = Tournament::random(n, seed);
        let beats = |a: usize, b: usize| t.beats(a, b);
        let mut max = 0;
        oracle::k_subsets(&verts, m, &mut |s| {
            let e = h.edge_count_sorted(s);
            let by_scores = oracle::cyclic_by_scores(s, &beats);
            max = max.max(e);
            rep.case(e == by_scores && e <= 8 && e <= bound && 2 * e < binom(6, 3) as u64, || {
                format!("seed {seed}, set {s:?}: {e} edges, score count {by_scores}")
            });
        });
        overall = overall.max(max);
    }
    rep.note(format!("max over all seeds and 6-subsets: {overall} (bound {bound})"));
    rep.timed(start)
}

pub(super) fn footnote_suite() -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("footnote");
    let inst = footnote_example_r3();
    let col = |a: usize, b: usize| inst.coloring.color(a, b) as usize;
    let copy = |a: usize, b: usize, c: usize| {
        col(a, b) == pair_index(0, 1) && col(a, c) == pair_index(0, 2) && col(b, c) == pair_index(1, 2)
    };
    let count = |verts: &[usize]| {
        let mut k = 0u64;
        oracle::k_subsets(verts, 3, &mut |t| k += copy(t[0], t[1], t[2]) as u64);
        k
    };
    let all: Vec<usize> = (0..6).collect();
    let lib = inst.graph.as_ref().map_or(0, |g| g.num_edges() as u64);
    rep.case(lib == 7 && count(&all) == 7, || format!("footnote coloring gives {lib} edges (recount {})", count(&all)));
    rep.case(count(&all[..5]) < 7, || "dropping x_6 keeps 7 edges".into());
    let comp = inst.graph.as_ref().map_or(0, |g| g.complement().num_edges() as u128);
    rep.case(comp == binom(6, 3) - 7, || format!("complement has {comp} edges"));
    rep.timed(start)
}

pub(super) fn gr_suite(seeds: &[u64], samples: u64) -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("gr-scan");
    let (n, r) = (40usize, 5usize);
    let target = (1u64 << r) - 1;
    let bound = oracle::g_r_brute(r, 2 * r) as u64;
    rep.case(bound == 32, || format!("g_5(10) recomputed as {bound}"));
    for &seed in seeds {
        let inst = match build_gr(n, r, seed) {
            Ok(i) => i,
            Err(e) => {
                rep.case(false, || format!("seed {seed}: {e}"));
                continue;
            }
        };
        match scan_counterexample(&inst, samples, seed) {
            Ok(s) => {
                rep.cases += s.samples;
                if s.violation_count > 0 || s.hits > 0 || s.max > bound {
                    rep.fail(format!("seed {seed}: {} hits at {target} edges, max {}", s.hits, s.max));
                    for v in &s.violations {
                        rep.witnesses.push(json!({"r": r, "n": n, "seed": seed, "set": v.set, "edges": v.edges}));
                    }
                }
                let edges = inst.graph.as_ref().map_or(0, |g| g.num_edges());
                rep.note(format!("seed {seed}: G_5 has {edges} edges; 10-subset histogram {:?} ({})", s.histogram, s.claim));
            }
            Err(e) => rep.case(false, || format!("seed {seed}: {e}")),
        }
    }
    rep.timed(start)
}

fn fact_r4() -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("fact-r4");
    match build_gr(16, 4, 0).and_then(|g| check_fact_gr(&g, 8, SpectrumMode::Exhaustive)) {
        Ok(s) => {
            rep.cases = s.samples;
            if !(s.passed() && s.max <= 16) {
                rep.fail(format!("r=4 n=16: max {} over g_4(8) = {}", s.max, s.bound));
            }
            rep.note(format!("r=4 n=16 m=8 exhaustive histogram {:?}", s.histogram));
        }
        Err(e) => rep.case(false, || format!("r=4 n=16: {e}")),
    }
    rep.timed(start)
}

/// Cyclic-triangle bound, the footnote example, the G_5 scan and the r = 4 fact check.
pub fn suite_appendix(p: &AppendixParams) -> SuiteReport {
    let start = Instant::now();
    let mut rep = SuiteReport::new("appendix");
    rep.absorb(cyclic_suite(&p.cyclic_seeds));
    rep.absorb(footnote_suite());
    rep.absorb(gr_suite(&p.gr_seeds, p.samples));
    rep.absorb(fact_r4());
    rep.timed(start)
}
