use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::hg::{Hypergraph, VertexSet};
use crate::rng;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpencerResult {
    pub set: VertexSet,
    /// ceil((1 - 1/k) n / d^(1/(k-1))), or n for an edgeless input
    pub target: usize,
    pub met: bool,
    pub average_degree: f64,
    pub trials: usize,
}

/// Random deletion: keep each vertex with probability d^(-1/(k-1)), drop the
/// largest vertex of every surviving edge, then extend greedily to a maximal
/// independent set. The best of `trials` runs is returned.
pub fn spencer_independent(h: &Hypergraph, trials: usize, seed: u64) -> SpencerResult {
    let n = h.n();
    let k = h.r();
    if h.num_edges() == 0 {
        return SpencerResult { set: VertexSet::range(0, n), target: n, met: true, average_degree: 0.0, trials: 0 };
    }
    let d = (k * h.num_edges()) as f64 / n as f64;
    let p = d.powf(-1.0 / (k as f64 - 1.0)).min(1.0);
    let target = ((1.0 - 1.0 / k as f64) * n as f64 / d.powf(1.0 / (k as f64 - 1.0))).ceil() as usize;

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    let mut g = rng::seeded(seed);
    let mut best: Vec<usize> = Vec::new();
    for _ in 0..trials.max(1) {
        let mut keep: Vec<bool> = (0..n).map(|_| g.gen_bool(p)).collect();
        for e in h.edges() {
            if e.iter().all(|&v| keep[v]) {
                keep[e[k - 1]] = false;
            }
        }
        for v in 0..n {
            if keep[v] {
                continue;
            }
            let blocked = incident[v].iter().any(|&i| h.edges()[i].iter().all(|&u| u == v || keep[u]));
            if !blocked {
                keep[v] = true;
            }
        }
        let set: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
        if set.len() > best.len() {
            best = set;
        }
    }
    debug_assert!(h.edge_count_sorted(&best) == 0);
    let met = best.len() >= target;
    SpencerResult { set: VertexSet::from_sorted(best), target, met, average_degree: d, trials }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_gives_pair() {
        let h = Hypergraph::complete(3, 9).unwrap();
        let r = spencer_independent(&h, 20, 1);
        assert_eq!(r.set.len(), 2);
        assert!(r.target <= 2);
        let e = Hypergraph::empty(3, 9).unwrap();
        assert_eq!(spencer_independent(&e, 5, 1).set.len(), 9);
    }
}
