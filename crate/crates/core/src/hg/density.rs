//! Triple densities d(X, Y, Z) for 3-graphs in the three admissible shapes.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::hg::{Hypergraph, VertexSet};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Disjoint,
    /// two of the arguments equal; (doubled, single) positions
    Pair(usize, usize),
    Same,
}

fn shape(sets: [&VertexSet; 3]) -> Result<Shape> {
    let [x, y, z] = sets;
    if x == y && y == z {
        return Ok(Shape::Same);
    }
    for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        if sets[a] == sets[b] && sets[a].is_disjoint(sets[c]) {
            return Ok(Shape::Pair(a, c));
        }
    }
    if x.is_disjoint(y) && x.is_disjoint(z) && y.is_disjoint(z) {
        return Ok(Shape::Disjoint);
    }
    Err(Error::UnsupportedShape)
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// e(X,Y,Z) for pairwise disjoint sets.
pub(crate) fn count_xyz(h: &Hypergraph, x: &[usize], y: &[usize], z: &[usize]) -> u64 {
    let mut e = 0;
    for &a in x {
        for &b in y {
            for &c in z {
                if h.has_edge(&sorted3(a, b, c)) {
                    e += 1;
                }
            }
        }
    }
    e
}

/// e(X,X,Z) for disjoint X, Z: triples with two vertices in X and one in Z.
pub(crate) fn count_xxz(h: &Hypergraph, x: &[usize], z: &[usize]) -> u64 {
    let mut e = 0;
    for (p, &a) in x.iter().enumerate() {
        for &b in &x[p + 1..] {
            for &c in z {
                if h.has_edge(&sorted3(a, b, c)) {
                    e += 1;
                }
            }
        }
    }
    e
}

/// Edge count and number of admissible triples for d(X, Y, Z).
pub fn density_counts(h: &Hypergraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<(u64, u64)> {
    if h.r() != 3 {
        return Err(Error::precondition("density is defined for 3-graphs"));
    }
    for s in [x, y, z] {
        h.check_set(s)?;
    }
    let sets = [x, y, z];
    let (e, total) = match shape(sets)? {
        Shape::Same => {
            let k = x.len() as u64;
            (h.edge_count_sorted(x), k * k.saturating_sub(1) * k.saturating_sub(2) / 6)
        }
        Shape::Pair(d, s) => {
            let (p, q) = (sets[d], sets[s]);
            let k = p.len() as u64;
            (count_xxz(h, p, q), k * k.saturating_sub(1) / 2 * q.len() as u64)
        }
        Shape::Disjoint => (count_xyz(h, x, y, z), (x.len() * y.len() * z.len()) as u64),
    };
    if total == 0 {
        return Err(Error::EmptyDenominator);
    }
    Ok((e, total))
}

pub fn density<T: Scalar>(h: &Hypergraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<T> {
    let (e, t) = density_counts(h, x, y, z)?;
    Ok(T::from_i64(e as i64) / T::from_i64(t as i64))
}

pub fn density_exact(h: &Hypergraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<BigRational> {
    let (e, t) = density_counts(h, x, y, z)?;
    Ok(BigRational::new(BigInt::from(e), BigInt::from(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec(), 10).unwrap()
    }

    #[test]
    fn spec_examples() {
        let h = Hypergraph::from_edges(3, 5, vec![vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        let d: f64 = density(&h, &vs(&[0]), &vs(&[1]), &vs(&[3, 4])).unwrap();
        assert_eq!(d, 1.0);
        let d = density_exact(&h, &vs(&[0]), &vs(&[1]), &vs(&[2, 3])).unwrap();
        assert_eq!(d, BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn shapes() {
        let k = Hypergraph::complete(3, 6).unwrap();
        let a = vs(&[0, 1]);
        let b = vs(&[2, 3, 4]);
        let one: f64 = density(&k, &a, &a, &b).unwrap();
        assert_eq!(one, 1.0);
        let same: f64 = density(&k, &b, &b, &b).unwrap();
        assert_eq!(same, 1.0);
        assert!(matches!(density_counts(&k, &a, &vs(&[1, 2]), &b), Err(Error::UnsupportedShape)));
        assert!(matches!(density_counts(&k, &a, &a, &a), Err(Error::EmptyDenominator)));
        // permuting a Pair shape keeps the value
        let h = Hypergraph::from_edges(3, 6, vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 3, 4]]).unwrap();
        let d1 = density_exact(&h, &a, &a, &b).unwrap();
        let d2 = density_exact(&h, &b, &a, &a).unwrap();
        let d3 = density_exact(&h, &a, &b, &a).unwrap();
        assert_eq!(d1, d2);
        assert_eq!(d1, d3);
    }
}
