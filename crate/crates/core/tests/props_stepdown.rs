//! Stepping-down: factorization by exhaustive scan, guaranteed success, determinism.

use ordsize::hg::{random_hypergraph, Hypergraph};
use ordsize::stepdown::{step_once, step_to_pairs, StepResult};
use ordsize::Error;
use proptest::prelude::*;

fn tuples(len: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, r: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in from..len {
            cur.push(i);
            rec(len, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, r, 0, &mut Vec::new(), &mut out);
    out
}

/// c(x_{p_1}..x_{p_r}) against χ on the positions the split selects.
fn factorizes(h: &Hypergraph, res: &StepResult) -> bool {
    let r = h.r();
    tuples(res.x.len(), r).iter().all(|pos| {
        let verts: Vec<usize> = pos.iter().map(|&p| res.x[p]).collect();
        let block: &[usize] = if res.k == 0 { &pos[..r - 1] } else { &pos[res.k - 1..res.k + 1] };
        h.has_edge(&verts) == res.chi.get(block)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn step_once_guaranteed_r3(l in 3usize..=5, p in 0.0f64..=1.0, seed in any::<u64>()) {
        // n ≥ 2^{C(ℓ−1, 2)}
        let n = 1usize << ((l - 1) * (l - 2) / 2);
        let h = random_hypergraph(3, n.max(l), p, seed).unwrap();
        let res = step_once(&h, l).unwrap();
        prop_assert_eq!(res.x.len(), l);
        prop_assert!(res.x.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(factorizes(&h, &res));
        prop_assert_eq!(step_once(&h, l).unwrap(), res);
    }

    #[test]
    fn step_once_guaranteed_r4(l in 4usize..=4, p in 0.0f64..=1.0, seed in any::<u64>(), extra in 0usize..20) {
        let h = random_hypergraph(4, l + extra, p, seed).unwrap();
        let res = step_once(&h, l).unwrap();
        prop_assert!(factorizes(&h, &res));
    }

    #[test]
    fn pairs_factorize_when_found(r in 3usize..=4, k in 1usize..=3, l in 4usize..=6, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let k = 1 + (k - 1) % (r - 1);
        let h = random_hypergraph(r, 24, p, seed).unwrap();
        match step_to_pairs(&h, k, l) {
            Ok(res) => {
                prop_assert_eq!(res.chi.arity, 2);
                prop_assert_eq!(res.k, k);
                prop_assert!(factorizes(&h, &res));
                prop_assert_eq!(step_to_pairs(&h, k, l).unwrap(), res);
            }
            Err(Error::SearchFailed(_)) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}

#[test]
fn monochromatic_gives_everything() {
    let h = Hypergraph::complete(3, 6).unwrap();
    let res = step_to_pairs(&h, 1, 6).unwrap();
    assert_eq!(res.x, vec![0, 1, 2, 3, 4, 5]);
    assert!(factorizes(&h, &res));
}
