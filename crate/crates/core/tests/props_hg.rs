//! hg-core invariants against direct counting.

use ordsize::hg::{density_exact, io, random_hypergraph, Hypergraph, VertexSet};
use ordsize::Error;
use proptest::prelude::*;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn graph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=4, 4usize..=12, 0.0f64..=1.0, any::<u64>())
        .prop_filter("n ≥ r", |(r, n, _, _)| n >= r)
        .prop_map(|(r, n, p, seed)| random_hypergraph(r, n, p, seed).unwrap())
}

fn subset_of(n: usize, mask: u32) -> VertexSet {
    VertexSet::new((0..n).filter(|i| mask >> i & 1 == 1).collect(), n).unwrap()
}

/// Edges with every vertex in `s`, by scanning the edge list.
fn count_inside(h: &Hypergraph, s: &VertexSet) -> u64 {
    h.edges().iter().filter(|e| e.iter().all(|v| s.contains(*v))).count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn complement_counts_add_up(h in graph(), mask in any::<u32>()) {
        let s = subset_of(h.n(), mask);
        let c = h.complement();
        let a = h.edge_count(&s).unwrap();
        prop_assert_eq!(a, count_inside(&h, &s));
        prop_assert_eq!(a + c.edge_count(&s).unwrap(), binom(s.len() as u64, h.r() as u64));
    }

    #[test]
    fn text_and_json_round_trip(h in graph()) {
        let text = io::write_hg(&h);
        prop_assert_eq!(io::read_hg(&text).unwrap(), h.clone());
        prop_assert_eq!(io::write_hg(&io::read_hg(&text).unwrap()), text);
        prop_assert_eq!(io::from_json(&io::to_json(&h)).unwrap(), h);
    }

    #[test]
    fn density_symmetric_and_counted(seed in any::<u64>(), p in 0.0f64..=1.0, labels in prop::collection::vec(0u8..4, 12)) {
        let h = random_hypergraph(3, 12, p, seed).unwrap();
        // label 0 drops the vertex; 1, 2, 3 place it in X, Y or Z
        let part = |l: u8| VertexSet::new((0..12).filter(|&v| labels[v] == l).collect(), 12).unwrap();
        let (x, y, z) = (part(1), part(2), part(3));
        let shapes = [(x.clone(), y.clone(), z.clone()), (x.clone(), x.clone(), y.clone()), (x.clone(), x.clone(), x.clone())];
        for (a, b, c) in shapes {
            let perms = [(&a, &b, &c), (&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)];
            let vals: Vec<Result<_, String>> = perms.iter().map(|(p, q, r)| density_exact(&h, p, q, r).map_err(|e| e.to_string())).collect();
            prop_assert!(vals.windows(2).all(|w| w[0] == w[1]));
        }
        // disjoint shape against a direct triple count
        let total = (x.len() * y.len() * z.len()) as u64;
        let mut hits = 0u64;
        for a in x.iter() { for b in y.iter() { for c in z.iter() {
            if h.has_edge_unordered(&[a, b, c]) { hits += 1; }
        }}}
        match density_exact(&h, &x, &y, &z) {
            Ok(d) => {
                prop_assert!(total > 0);
                prop_assert_eq!(d, ordsize::Rational::new(hits.into(), total.into()));
            }
            Err(Error::EmptyDenominator) => prop_assert_eq!(total, 0),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}

#[test]
fn partial_overlap_is_unsupported() {
    let h = Hypergraph::complete(3, 6).unwrap();
    let x = VertexSet::new(vec![0, 1], 6).unwrap();
    let y = VertexSet::new(vec![1, 2], 6).unwrap();
    let z = VertexSet::new(vec![4, 5], 6).unwrap();
    assert!(matches!(density_exact(&h, &x, &y, &z), Err(Error::UnsupportedShape)));
}
