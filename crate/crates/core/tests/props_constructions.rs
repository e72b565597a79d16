//! Random constructions: the cyclic-triangle bound and G_r membership.

use ordsize::constructions::{build_gr, cyclic_bound, cyclic_triangles, GrInstance};
use ordsize::hg::{pair_index, PalettedColoring, Tournament};
use proptest::prelude::*;

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, k, v + 1, cur, f);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut Vec::new(), f);
}

fn cyclic(t: &Tournament, a: usize, b: usize, c: usize) -> bool {
    (t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) || (t.beats(b, a) && t.beats(c, b) && t.beats(a, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cyclic_subsets_within_bound(n in 6usize..=11, seed in any::<u64>(), m in 3usize..=6) {
        let t = Tournament::random(n, seed);
        let h = cyclic_triangles(&t).unwrap();
        for_each_subset(n, 3, &mut |s| assert_eq!(h.has_edge(s), cyclic(&t, s[0], s[1], s[2])));
        let bound = (m * (m * m - 1) / 24) as u64;
        prop_assert_eq!(cyclic_bound(m as u64), bound);
        let mut worst = 0;
        for_each_subset(n, m, &mut |s| {
            let mut e = 0u64;
            for_each_subset(m, 3, &mut |p| e += cyclic(&t, s[p[0]], s[p[1]], s[p[2]]) as u64);
            worst = worst.max(e);
        });
        prop_assert!(worst <= bound);
    }

    #[test]
    fn gr_membership_from_coloring(r in 3usize..=5, n in 5usize..=10, seed in any::<u64>()) {
        let n = n.max(r);
        let inst = build_gr(n, r, seed).unwrap();
        let g = inst.hypergraph().unwrap();
        for_each_subset(n, r, &mut |t| {
            let mut copy = true;
            for q in 1..r {
                for p in 0..q {
                    copy &= inst.coloring.color(t[p], t[q]) as usize == pair_index(p, q);
                }
            }
            assert_eq!(g.has_edge(t), copy);
            assert_eq!(inst.is_edge(t), copy);
            assert_eq!(inst.is_pattern_copy(t), copy);
        });
    }
}

#[test]
fn canonical_coloring_single_copy() {
    // color every pair by its own index pattern on exactly r vertices
    for r in 3..=6 {
        let c = PalettedColoring::from_fn(r, r * (r - 1) / 2, |i, j| pair_index(i, j) as u16).unwrap();
        let inst = GrInstance::from_coloring(r, c, None).unwrap();
        assert_eq!(inst.hypergraph().unwrap().num_edges(), 1);
    }
}
