//! Selecting m of the sets so that all triples of one type share a density.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hg::{Hypergraph, VertexSet};
use crate::structure::family::{dens_xxx, dens_xxy, dens_xyz, vacuous_pairs, vacuous_types, Dens, HomogenizedFamily, PairFamily};
use crate::structure::synthetic::{PairConstants, TypeConstants};

fn bit(d: Dens, what: impl Fn() -> String) -> Result<Option<bool>> {
    match d {
        Dens::Mixed => Err(Error::precondition(format!("{} is neither 0 nor 1", what()))),
        Dens::Vacuous => Ok(None),
        d => Ok(d.bit()),
    }
}

/// A constant slot: unset until the first admissible triple fixes it.
fn unify(slot: &mut Option<bool>, v: Option<bool>) -> bool {
    match (v, *slot) {
        (None, _) => true,
        (Some(b), None) => {
            *slot = Some(b);
            true
        }
        (Some(b), Some(c)) => b == c,
    }
}

type Slots<const K: usize> = [Option<bool>; K];
type Extend<'a, const K: usize> = dyn Fn(&mut Slots<K>, &[usize], usize) -> bool + 'a;
type Selection<const K: usize> = Option<(Vec<usize>, Slots<K>)>;

/// Depth-first search for an increasing index list of length `m` along
/// which every slot stays consistent. `extend(slots, chosen, next)` updates
/// the slots for a new index, returning false on a conflict.
fn select<const K: usize>(len: usize, m: usize, budget: &Budget, extend: &Extend<K>) -> Result<Selection<K>> {
    fn rec<const K: usize>(
        len: usize,
        m: usize,
        budget: &Budget,
        extend: &Extend<K>,
        chosen: &mut Vec<usize>,
        slots: Slots<K>,
    ) -> Result<Selection<K>> {
        if chosen.len() == m {
            return Ok(Some((chosen.clone(), slots)));
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        for next in start..len {
            if len - next < m - chosen.len() {
                break;
            }
            budget.spend(1)?;
            let mut s = slots;
            if extend(&mut s, chosen, next) {
                chosen.push(next);
                if let Some(found) = rec(len, m, budget, extend, chosen, s)? {
                    return Ok(Some(found));
                }
                chosen.pop();
            }
        }
        Ok(None)
    }
    rec(len, m, budget, extend, &mut Vec::new(), [None; K])
}

/// Index subset of size `m` with uniform densities per triple type. The
/// input triples must already be 0/1-dense.
pub fn homogenize_types(h: &Hypergraph, sets: &[VertexSet], m: usize, budget: &Budget) -> Result<HomogenizedFamily> {
    if h.r() != 3 {
        return Err(Error::precondition("homogenize_types needs a 3-graph"));
    }
    if m == 0 || m > sets.len() {
        return Err(Error::invalid(format!("cannot pick m = {m} of {} sets", sets.len())));
    }
    let s: Vec<&[usize]> = sets.iter().map(VertexSet::as_slice).collect();
    let name = |i: usize| format!("{:?}", s[i]);
    // precompute and check the {0,1} precondition up front
    let n = s.len();
    let mut own = vec![None; n];
    let mut pair = vec![vec![(None, None); n]; n];
    for i in 0..n {
        own[i] = bit(dens_xxx(h, s[i]), || format!("d({0},{0},{0})", name(i)))?;
        for j in i + 1..n {
            let a = bit(dens_xxy(h, s[j], s[i]), || format!("d({},{1},{1})", name(i), name(j)))?;
            let b = bit(dens_xxy(h, s[i], s[j]), || format!("d({0},{0},{1})", name(i), name(j)))?;
            pair[i][j] = (a, b);
        }
    }
    let triple =
        |i: usize, j: usize, k: usize| bit(dens_xyz(h, s[i], s[j], s[k]), || format!("d({},{},{})", name(i), name(j), name(k)));
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                triple(i, j, k)?;
            }
        }
    }
    // slots: a, b, c, d
    let extend = |slots: &mut [Option<bool>; 4], chosen: &[usize], k: usize| {
        if !unify(&mut slots[3], own[k]) {
            return false;
        }
        for (p, &i) in chosen.iter().enumerate() {
            let (a, b) = pair[i][k];
            if !unify(&mut slots[0], a) || !unify(&mut slots[1], b) {
                return false;
            }
            for &j in &chosen[p + 1..] {
                if !unify(&mut slots[2], triple(i, j, k).expect("checked above")) {
                    return false;
                }
            }
        }
        true
    };
    let Some((idx, slots)) = select::<4>(n, m, budget, &extend)? else {
        return Err(Error::SearchFailed(format!("no {m} of the {n} sets have uniform type densities; ℓ too small")));
    };
    let size = idx.iter().map(|&i| sets[i].len()).min().unwrap_or(0);
    let fam = HomogenizedFamily {
        sets: idx.iter().map(|&i| sets[i].clone()).collect(),
        constants: TypeConstants {
            a: slots[0].unwrap_or(false),
            b: slots[1].unwrap_or(false),
            c: slots[2].unwrap_or(false),
            d: slots[3].unwrap_or(false),
        },
        vacuous: vacuous_types(m, size),
    };
    fam.verify(h)?;
    Ok(fam)
}

/// As [`homogenize_types`] for pairs (A_i, B_i): the 4-bit color of each
/// index pair and the 8-bit color of each index triple must be uniform.
#[allow(clippy::needless_range_loop)]
pub fn homogenize_pair_types(h: &Hypergraph, pairs: &[(VertexSet, VertexSet)], m: usize, budget: &Budget) -> Result<PairFamily> {
    if h.r() != 3 {
        return Err(Error::precondition("homogenize_pair_types needs a 3-graph"));
    }
    if m == 0 || m > pairs.len() {
        return Err(Error::invalid(format!("cannot pick m = {m} of {} pairs", pairs.len())));
    }
    let n = pairs.len();
    let side = |i: usize, b: bool| if b { pairs[i].1.as_slice() } else { pairs[i].0.as_slice() };
    let label = |i: usize, b: bool| format!("{}{}", if b { 'B' } else { 'A' }, i + 1);
    let mut col2 = vec![vec![[None; 4]; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (ai, bi, aj, bj) = (side(i, false), side(i, true), side(j, false), side(j, true));
            col2[i][j] = [
                bit(dens_xyz(h, ai, aj, bj), || format!("d({},{},{})", label(i, false), label(j, false), label(j, true)))?,
                bit(dens_xyz(h, bi, aj, bj), || format!("d({},{},{})", label(i, true), label(j, false), label(j, true)))?,
                bit(dens_xyz(h, ai, bi, aj), || format!("d({},{},{})", label(i, false), label(i, true), label(j, false)))?,
                bit(dens_xyz(h, ai, bi, bj), || format!("d({},{},{})", label(i, false), label(i, true), label(j, true)))?,
            ];
        }
    }
    let col3 = |i: usize, j: usize, k: usize| -> Result<[Option<bool>; 8]> {
        let mut out = [None; 8];
        for bits in 0..8u8 {
            let sd = [bits & 4 != 0, bits & 2 != 0, bits & 1 != 0];
            out[PairConstants::c_index(sd)] = bit(dens_xyz(h, side(i, sd[0]), side(j, sd[1]), side(k, sd[2])), || {
                format!("d({},{},{})", label(i, sd[0]), label(j, sd[1]), label(k, sd[2]))
            })?;
        }
        Ok(out)
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                col3(i, j, k)?;
            }
        }
    }
    let extend = |slots: &mut [Option<bool>; 12], chosen: &[usize], k: usize| {
        for (p, &i) in chosen.iter().enumerate() {
            for (q, v) in col2[i][k].into_iter().enumerate() {
                if !unify(&mut slots[q], v) {
                    return false;
                }
            }
            for &j in &chosen[p + 1..] {
                for (q, v) in col3(i, j, k).expect("checked above").into_iter().enumerate() {
                    if !unify(&mut slots[4 + q], v) {
                        return false;
                    }
                }
            }
        }
        true
    };
    let Some((idx, slots)) = select::<12>(n, m, budget, &extend)? else {
        return Err(Error::SearchFailed(format!("no {m} of the {n} pairs have uniform type densities; ℓ too small")));
    };
    let v = |q: usize| slots[q].unwrap_or(false);
    let fam = PairFamily {
        pairs: idx.iter().map(|&i| pairs[i].clone()).collect(),
        constants: PairConstants { a1: v(0), a2: v(1), b1: v(2), b2: v(3), c: std::array::from_fn(|q| v(4 + q)) },
        vacuous: vacuous_pairs(m),
    };
    fam.verify(h)?;
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::synthetic::{blowup_pairs, blowup_types};
    use rand::Rng as _;

    #[test]
    fn empty_graph() {
        let h = Hypergraph::empty(3, 12).unwrap();
        let sets: Vec<VertexSet> = (0..4).map(|i| VertexSet::range(3 * i, 3 * i + 3)).collect();
        let fam = homogenize_types(&h, &sets, 3, &Budget::unlimited()).unwrap();
        assert_eq!(fam.constants, TypeConstants::from_bits(0));
        assert_eq!(fam.sets, sets[..3].to_vec());
        let pairs: Vec<_> =
            (0..3).map(|i| (VertexSet::range(4 * i, 4 * i + 2), VertexSet::range(4 * i + 2, 4 * i + 4))).collect();
        let pf = homogenize_pair_types(&h, &pairs, 3, &Budget::unlimited()).unwrap();
        assert_eq!(pf.constants, PairConstants::from_bits(0));
    }

    #[test]
    fn round_trip_all_types() {
        for m in 2..=3 {
            for bits in 0..16u8 {
                let k = TypeConstants::from_bits(bits);
                let (h, sets) = blowup_types(&k, &vec![3; m]);
                let fam = homogenize_types(&h, &sets, m, &Budget::unlimited()).unwrap();
                let c = &fam.constants;
                assert_eq!((c.a, c.b, c.d), (k.a, k.b, k.d), "bits {bits:04b}");
                if m == 3 {
                    assert_eq!(c.c, k.c);
                }
            }
        }
        let k = TypeConstants { a: true, b: false, c: true, d: false };
        let (h, sets) = blowup_types(&k, &[2, 2, 2, 2]);
        assert!(homogenize_types(&h, &sets, 3, &Budget::unlimited()).unwrap().constants.c);
    }

    #[test]
    fn pair_round_trip() {
        let mut g = crate::rng::seeded(4);
        for _ in 0..40 {
            let k = PairConstants::from_bits(g.gen_range(0..4096));
            let (h, pairs) = blowup_pairs(&k, &[2, 2, 2]);
            let fam = homogenize_pair_types(&h, &pairs, 3, &Budget::unlimited()).unwrap();
            assert_eq!(fam.constants, k);
        }
    }

    #[test]
    fn random_assignment() {
        // ℓ = 6 sets of size 2 whose cross triples are made 0/1-dense at random
        for seed in 0..10u64 {
            let mut g = crate::rng::seeded(seed);
            let part = |v: usize| v / 2;
            let mut memo = std::collections::HashMap::new();
            let h = Hypergraph::from_predicate(3, 12, |t| {
                let key = [part(t[0]), part(t[1]), part(t[2])];
                *memo.entry(key).or_insert_with(|| g.gen_bool(0.5))
            })
            .unwrap();
            let sets: Vec<VertexSet> = (0..6).map(|i| VertexSet::range(2 * i, 2 * i + 2)).collect();
            let fam = homogenize_types(&h, &sets, 2, &Budget::unlimited()).unwrap();
            fam.verify(&h).unwrap();
        }
    }

    #[test]
    fn mixed_rejected() {
        let h = Hypergraph::from_edges(3, 6, vec![vec![0, 1, 2]]).unwrap();
        let sets = vec![VertexSet::range(0, 2), VertexSet::range(2, 4), VertexSet::range(4, 6)];
        assert!(matches!(homogenize_types(&h, &sets, 2, &Budget::unlimited()), Err(Error::Precondition(_))));
    }
}
