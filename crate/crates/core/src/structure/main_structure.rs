//! The two structures of the main lemma, found by following the proof's
//! case split on an explicit 3-graph.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hg::{Hypergraph, VertexSet};
use crate::search::{max_homogeneous_in, HomogeneousWitness, DEFAULT_EXACT_LIMIT};
use crate::structure::chains::{find_pair_chain_in, find_star_chain_in, no_large_star_subset_in, star_free_subset_in, FreeSide};
use crate::structure::family::{dens_xxx, dens_xxy, Dens, Digest, HomogenizedFamily, PairFamily};
use crate::structure::homogenize::{homogenize_pair_types, homogenize_types};
use crate::structure::refine::refine_to_01;
use crate::structure::synthetic::TypeConstants;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureParams {
    /// star size and set size after refinement
    pub s: usize,
    /// pair-chain block size
    pub t: usize,
    /// chain length ℓ (the pair chain gets one extra level)
    pub chain_len: usize,
    pub theta: f64,
    pub delta: f64,
    pub seed: u64,
    pub exact_limit: usize,
}

impl StructureParams {
    pub fn for_m(m: usize) -> Self {
        let s = m.max(3);
        StructureParams { s, t: s, chain_len: m, theta: 0.5, delta: 0.9, seed: 0, exact_limit: DEFAULT_EXACT_LIMIT }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "item", rename_all = "lowercase")]
pub enum Item {
    A(HomogenizedFamily),
    B(PairFamily),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainStructure {
    pub item: Item,
    /// the structure lives in the complement (item (b) only; item (a) is
    /// always reported with constants measured in H)
    pub complemented: bool,
    pub digest: Digest,
    pub trace: Vec<String>,
}

impl MainStructure {
    /// Full re-verification against `h`.
    pub fn verify(&self, h: &Hypergraph) -> Result<Digest> {
        match &self.item {
            Item::A(f) => {
                if self.complemented {
                    return Err(Error::Verification("item (a) is reported in H itself".into()));
                }
                if !f.not_all_equal() {
                    return Err(Error::Verification("item (a) constants are all equal".into()));
                }
                f.verify(h)
            }
            Item::B(f) => {
                if self.complemented {
                    f.verify_item_b(&h.complement())
                } else {
                    f.verify_item_b(h)
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MainOutcome {
    Structure(MainStructure),
    /// every branch failed; the largest homogeneous set found instead
    Homogeneous {
        witness: HomogeneousWitness,
        trace: Vec<String>,
    },
    BudgetReport {
        used: u64,
        trace: Vec<String>,
    },
}

enum Step<T> {
    Done(T),
    Failed(String),
}

fn step<T>(r: Result<T>) -> Result<Step<T>> {
    match r {
        Ok(v) => Ok(Step::Done(v)),
        Err(Error::BudgetExhausted(n)) => Err(Error::BudgetExhausted(n)),
        Err(e) => Ok(Step::Failed(e.to_string())),
    }
}

/// Sets in vertex order, refined to size p, then m of them homogenized.
/// Constants are measured in `h`.
fn finish_a(h: &Hypergraph, mut sets: Vec<VertexSet>, m: usize, p: usize, budget: &Budget) -> Result<HomogenizedFamily> {
    sets.sort_by_key(|s| s.as_slice().first().copied());
    let refined = refine_to_01(h, &sets, p, budget)?;
    let fam = homogenize_types(h, &refined, m, budget)?;
    if !fam.not_all_equal() {
        return Err(Error::SearchFailed(format!("homogenized constants {:?} are all equal", fam.constants)));
    }
    Ok(fam)
}

/// Pair chain in `host` on W → 0/1 refinement → zero checks → pair
/// homogenization; item (b) when c7 = c8 = 0, else item (a) on the A's or B's.
fn pair_branch(
    h: &Hypergraph,
    host: &Hypergraph,
    w: &[usize],
    m: usize,
    p: &StructureParams,
    budget: &Budget,
) -> Result<(Item, bool)> {
    let chain = find_pair_chain_in(host, w, p.chain_len + 1, p.t, budget)?;
    let flat: Vec<VertexSet> = chain.pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
    let refined = refine_to_01(host, &flat, p.s, budget)?;
    let pairs: Vec<(VertexSet, VertexSet)> = refined.chunks(2).skip(1).map(|c| (c[0].clone(), c[1].clone())).collect();
    let sets: Vec<&VertexSet> = pairs.iter().flat_map(|(a, b)| [a, b]).collect();
    for (i, x) in sets.iter().enumerate() {
        if dens_xxx(host, x) == Dens::One {
            return Err(Error::SearchFailed(format!("d(X,X,X) = 1 for {:?}", x.as_slice())));
        }
        for (j, y) in sets.iter().enumerate() {
            if i != j && dens_xxy(host, x, y) == Dens::One {
                return Err(Error::SearchFailed(format!("d(X,X,Y) = 1 for {:?}, {:?}", x.as_slice(), y.as_slice())));
            }
        }
    }
    let fam = homogenize_pair_types(host, &pairs, m, budget)?;
    let k = fam.constants;
    if !k.c[6] && !k.c[7] {
        return Ok((Item::B(fam), !std::ptr::eq(h, host)));
    }
    let use_b = !k.c[6];
    let sets: Vec<VertexSet> = fam.pairs.iter().map(|(a, b)| if use_b { b.clone() } else { a.clone() }).collect();
    let mut fam_a = homogenize_types(host, &sets, m, budget)?;
    if !std::ptr::eq(h, host) {
        fam_a.constants = fam_a.constants.complement();
    }
    let fam_a = HomogenizedFamily { sets: fam_a.sets, constants: fam_a.constants, vacuous: fam_a.vacuous };
    fam_a.verify(h)?;
    if !fam_a.not_all_equal() {
        return Err(Error::SearchFailed("all-A family constants are all equal".into()));
    }
    Ok((Item::A(fam_a), false))
}

/// Orchestrates the case split: a star chain in H, else an antistar chain
/// inside a star-free subset, else a pair chain inside a star- and
/// antistar-free W. Every returned structure is re-verified by counting.
pub fn main_structure(h: &Hypergraph, m: usize, params: &StructureParams, budget: &Budget) -> Result<MainOutcome> {
    if h.r() != 3 {
        return Err(Error::precondition("main_structure needs a 3-graph"));
    }
    if m < 2 {
        return Err(Error::invalid("m must be at least 2"));
    }
    if params.s < m || params.t < params.s {
        return Err(Error::invalid("need m ≤ s ≤ t"));
    }
    let mut trace = Vec::new();
    match run(h, m, params, budget, &mut trace) {
        Ok(Some((item, complemented))) => {
            let mut ms = MainStructure { item, complemented, digest: Digest::new(), trace };
            ms.digest = ms.verify(h)?;
            Ok(MainOutcome::Structure(ms))
        }
        Ok(None) => {
            let verts: Vec<usize> = (0..h.n()).collect();
            let witness = max_homogeneous_in(h, &verts, params.exact_limit, budget);
            trace.push(format!("no structure; homogeneous set of size {}", witness.set.len()));
            Ok(MainOutcome::Homogeneous { witness, trace })
        }
        Err(Error::BudgetExhausted(used)) => {
            trace.push("budget exhausted".into());
            Ok(MainOutcome::BudgetReport { used, trace })
        }
        Err(e) => Err(e),
    }
}

fn run(h: &Hypergraph, m: usize, p: &StructureParams, budget: &Budget, trace: &mut Vec<String>) -> Result<Option<(Item, bool)>> {
    let verts: Vec<usize> = (0..h.n()).collect();
    let comp = h.complement();

    let chain = find_star_chain_in(h, &verts, p.chain_len, p.s, budget).and_then(|c| finish_a(h, c.sets, m, p.s, budget));
    match step(chain)? {
        Step::Done(f) => {
            trace.push("star chain in H: item (a)".into());
            return Ok(Some((Item::A(f), false)));
        }
        Step::Failed(why) => trace.push(format!("star chain in H: {why}")),
    }

    let u1 = star_free_subset_in(h, &verts, p.s, p.theta, p.seed, budget)?;
    trace.push(format!("star-free U': {} of {} vertices ({} induced stars)", u1.set.len(), h.n(), u1.stars));
    // the pools the proof passes to are tried first, then all of V
    for (name, pool) in [("U'", u1.set.as_slice()), ("V", &verts[..])] {
        let chain = find_star_chain_in(&comp, pool, p.chain_len, p.s, budget).and_then(|c| finish_a(h, c.sets, m, p.s, budget));
        match step(chain)? {
            Step::Done(f) => {
                trace.push(format!("antistar chain in {name}: item (a)"));
                return Ok(Some((Item::A(f), false)));
            }
            Step::Failed(why) => trace.push(format!("antistar chain in {name}: {why}")),
        }
    }

    let u2 = star_free_subset_in(&comp, u1.set.as_slice(), p.s, p.theta, p.seed ^ 1, budget)?;
    trace.push(format!("antistar-free U*: {} vertices", u2.set.len()));
    let mut tries: Vec<(String, &Hypergraph, Vec<usize>)> = Vec::new();
    match step(no_large_star_subset_in(h, u2.set.as_slice(), p.s, p.delta, budget))? {
        Step::Done(w) => {
            trace.push(format!("W: {} vertices, {:?}", w.w.len(), w.side));
            let host = if w.side == FreeSide::StarFree { h } else { &comp };
            tries.push(("W".into(), host, w.w.into_vec()));
        }
        Step::Failed(why) => trace.push(format!("no-large-star W: {why}")),
    }
    tries.push(("V".into(), h, verts.clone()));
    tries.push(("V of the complement".into(), &comp, verts.clone()));
    for (name, host, pool) in tries {
        match step(pair_branch(h, host, &pool, m, p, budget))? {
            Step::Done((item, complemented)) => {
                trace.push(format!("pair chain in {name}: item ({})", if matches!(item, Item::A(_)) { 'a' } else { 'b' }));
                return Ok(Some((item, complemented)));
            }
            Step::Failed(why) => trace.push(format!("pair chain in {name}: {why}")),
        }
    }
    Ok(None)
}

/// Constants of an item-(a) result, for comparison with a planted family.
pub fn item_a_constants(ms: &MainStructure) -> Option<TypeConstants> {
    match &ms.item {
        Item::A(f) => Some(f.constants),
        Item::B(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::synthetic::{blowup_pairs, blowup_types, PairConstants};

    fn run_a(k: TypeConstants, m: usize, parts: usize) -> MainOutcome {
        let (h, _) = blowup_types(&k, &vec![3; parts]);
        main_structure(&h, m, &StructureParams::for_m(m), &Budget::unlimited()).unwrap()
    }

    #[test]
    fn item_a_round_trip() {
        for m in 2..=3 {
            for bits in 0..16u8 {
                let k = TypeConstants::from_bits(bits);
                // c-only patterns carry no induced stars of size 3 on either side
                if k.all_equal() || bits == 0b0010 || bits == 0b1101 {
                    continue;
                }
                let out = run_a(k, m, m + 1);
                let MainOutcome::Structure(ms) = out else { panic!("{bits:04b} m={m}: {out:?}") };
                let got = item_a_constants(&ms).unwrap();
                assert_eq!((got.a, got.b, got.d), (k.a, k.b, k.d), "{bits:04b} m={m}");
                if m == 3 {
                    assert_eq!(got.c, k.c);
                }
            }
        }
    }

    #[test]
    fn item_b_round_trip() {
        for x in [0u16, 3, 24, 96, 120] {
            let k = PairConstants::from_bits(0b11 | x << 2);
            for m in 2..=3 {
                let (h, _) = blowup_pairs(&k, &vec![3; m + 1]);
                let out = main_structure(&h, m, &StructureParams::for_m(m), &Budget::unlimited()).unwrap();
                let MainOutcome::Structure(ms) = out else { panic!("{out:?}") };
                let Item::B(f) = &ms.item else { panic!("{:?}", ms.trace) };
                assert_eq!((f.constants.b1, f.constants.b2), (k.b1, k.b2));
                if m == 3 {
                    assert_eq!(f.constants.c, k.c);
                }
                assert!(!ms.complemented);
            }
        }
    }

    #[test]
    fn complete_reports_homogeneous() {
        let h = Hypergraph::complete(3, 9).unwrap();
        let out = main_structure(&h, 2, &StructureParams::for_m(2), &Budget::unlimited()).unwrap();
        let MainOutcome::Homogeneous { witness, .. } = out else { panic!("{out:?}") };
        assert_eq!(witness.set.len(), 9);
    }

    #[test]
    fn budget_report() {
        let (h, _) = blowup_types(&TypeConstants::from_bits(0b1000), &[3, 3, 3]);
        let out = main_structure(&h, 3, &StructureParams::for_m(3), &Budget::new(5)).unwrap();
        assert!(matches!(out, MainOutcome::BudgetReport { .. }));
    }
}
