use crate::error::{Error, Result};
use crate::hg::{Hypergraph, Tournament};

/// The 3-graph of directed triangles of `t`.
pub fn cyclic_triangles(t: &Tournament) -> Result<Hypergraph> {
    Hypergraph::from_predicate(3, t.n(), |e| t.is_cyclic(e[0], e[1], e[2]))
}

/// Cyclic triangles of a seeded uniform random tournament on `n` vertices.
pub fn cyclic_triangle_3graph(n: usize, seed: u64) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::invalid(format!("need n >= 3, got {n}")));
    }
    cyclic_triangles(&Tournament::random(n, seed))
}

/// floor(m(m²−1)/24), the most cyclic triangles any m-vertex tournament has.
pub fn cyclic_bound(m: u64) -> u64 {
    m * (m * m).saturating_sub(1) / 24
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::for_each_subset;

    #[test]
    fn transitive_is_empty() {
        assert_eq!(cyclic_triangles(&Tournament::transitive(9)).unwrap().num_edges(), 0);
    }

    #[test]
    fn single_cycle() {
        let t = Tournament::from_fn(3, |i, j| !(i == 0 && j == 2));
        let h = cyclic_triangles(&t).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn bound_values() {
        assert_eq!(cyclic_bound(6), 8);
        assert_eq!(cyclic_bound(3), 1);
        assert_eq!(cyclic_bound(5), 5);
    }

    #[test]
    fn n10_seed1_six_sets() {
        let h = cyclic_triangle_3graph(10, 1).unwrap();
        let c = h.complement();
        let verts: Vec<usize> = (0..10).collect();
        for_each_subset(&verts, 6, |s| {
            assert!(h.edge_count_sorted(s) <= 8);
            assert!(c.edge_count_sorted(s) >= 12);
            true
        });
    }

    #[test]
    fn tiny_rejected() {
        assert!(cyclic_triangle_3graph(2, 0).is_err());
    }
}
