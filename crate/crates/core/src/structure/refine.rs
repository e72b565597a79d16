//! Passing to equal-size subsets on which every triple of sets is 0/1-dense.

use crate::budget::Budget;
use crate::combin::for_each_subset;
use crate::error::{Error, Result};
use crate::hg::{Hypergraph, VertexSet};
use crate::structure::family::{dens_xxx, dens_xxy, dens_xyz, Dens};

fn ok(d: Dens) -> bool {
    d != Dens::Mixed
}

/// Every density between `cand` and the already chosen sets is 0 or 1.
fn compatible(h: &Hypergraph, chosen: &[Vec<usize>], cand: &[usize]) -> bool {
    for (i, x) in chosen.iter().enumerate() {
        if !ok(dens_xxy(h, x, cand)) || !ok(dens_xxy(h, cand, x)) {
            return false;
        }
        for y in &chosen[i + 1..] {
            if !ok(dens_xyz(h, x, y, cand)) {
                return false;
            }
        }
    }
    true
}

fn search(h: &Hypergraph, pools: &[Vec<Vec<usize>>], chosen: &mut Vec<Vec<usize>>, budget: &Budget) -> Result<bool> {
    let j = chosen.len();
    if j == pools.len() {
        return Ok(true);
    }
    for cand in &pools[j] {
        budget.spend(1)?;
        if compatible(h, chosen, cand) {
            chosen.push(cand.clone());
            if search(h, pools, chosen, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    Ok(false)
}

fn attempt(h: &Hypergraph, sets: &[VertexSet], p: usize, budget: &Budget) -> Result<Option<Vec<VertexSet>>> {
    // own-set condition first: candidates are the p-subsets with d(X,X,X) ∈ {0,1}
    let mut pools = Vec::with_capacity(sets.len());
    for s in sets {
        let mut pool = Vec::new();
        for_each_subset(s.as_slice(), p, |t| {
            if ok(dens_xxx(h, t)) {
                pool.push(t.to_vec());
            }
            true
        });
        budget.spend(pool.len() as u64)?;
        pools.push(pool);
    }
    let mut chosen = Vec::new();
    if search(h, &pools, &mut chosen, budget)? {
        Ok(Some(chosen.into_iter().map(VertexSet::from_sorted).collect()))
    } else {
        Ok(None)
    }
}

/// Subsets A_i ⊆ A'_i of size `p` with d(A_i, A_j, A_k) ∈ {0,1} for all
/// (not necessarily distinct) i, j, k. Exact backtracking over the p-subsets
/// in lexicographic order, so already homogeneous inputs come back truncated.
pub fn refine_to_01(h: &Hypergraph, sets: &[VertexSet], p: usize, budget: &Budget) -> Result<Vec<VertexSet>> {
    if h.r() != 3 {
        return Err(Error::precondition("refine_to_01 needs a 3-graph"));
    }
    for (i, s) in sets.iter().enumerate() {
        h.check_set(s.as_slice())?;
        if sets[i + 1..].iter().any(|t| !s.is_disjoint(t)) {
            return Err(Error::precondition("sets must be disjoint"));
        }
    }
    let smallest = sets.iter().map(VertexSet::len).min().unwrap_or(p);
    if smallest < p {
        return Err(Error::SearchFailed(format!("sizes insufficient: smallest set has {smallest} < P = {p} vertices")));
    }
    if let Some(out) = attempt(h, sets, p, budget)? {
        return Ok(out);
    }
    // P = 1 always works (single triples, vacuous self-densities)
    let feasible = (1..p).rev().find_map(|q| match attempt(h, sets, q, budget) {
        Ok(Some(_)) => Some(Ok(q)),
        Ok(None) => None,
        Err(e) => Some(Err(e)),
    });
    let feasible = feasible.unwrap_or(Ok(1))?;
    Err(Error::SearchFailed(format!("sizes insufficient for P = {p}; largest feasible P for these sets is {feasible}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hg::{density_exact, random_hypergraph};
    use crate::structure::synthetic::{blowup_types, TypeConstants};
    use num_traits::{One, Zero};

    fn all_01(h: &Hypergraph, sets: &[VertexSet]) -> bool {
        let n = sets.len();
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let (x, y, z) = (&sets[i], &sets[j], &sets[k]);
                    match density_exact(h, x, y, z) {
                        Ok(d) => {
                            if !(d.is_zero() || d.is_one()) {
                                return false;
                            }
                        }
                        Err(Error::EmptyDenominator) => {}
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
        true
    }

    #[test]
    fn blowup_truncates() {
        let (h, sets) = blowup_types(&TypeConstants::from_bits(0b1101), &[4, 4, 4]);
        let out = refine_to_01(&h, &sets, 2, &Budget::unlimited()).unwrap();
        let want: Vec<VertexSet> = sets.iter().map(|s| s.truncated(2)).collect();
        assert_eq!(out, want);
    }

    #[test]
    fn random_two_sets() {
        for seed in 0..5 {
            let h = random_hypergraph(3, 28, 0.5, seed).unwrap();
            let sets = vec![VertexSet::range(0, 14), VertexSet::range(14, 28)];
            let out = refine_to_01(&h, &sets, 2, &Budget::unlimited()).unwrap();
            assert!(out.iter().all(|s| s.len() == 2));
            assert!(all_01(&h, &out));
        }
    }

    #[test]
    fn too_small_reports() {
        let h = Hypergraph::empty(3, 6).unwrap();
        let sets = vec![VertexSet::range(0, 2), VertexSet::range(2, 6)];
        let err = refine_to_01(&h, &sets, 3, &Budget::unlimited()).unwrap_err();
        assert!(err.to_string().contains("insufficient"));
    }
}
