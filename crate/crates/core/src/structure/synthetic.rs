//! Blow-ups with prescribed type constants. Parts are laid out
//! consecutively in index order.

use serde::{Deserialize, Serialize};

use crate::hg::{Hypergraph, VertexSet};

/// Densities by triple type: a for i<j=k, b for i=j<k, c for i<j<k, d for i=j=k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeConstants {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl TypeConstants {
    pub fn from_bits(bits: u8) -> Self {
        TypeConstants { a: bits & 8 != 0, b: bits & 4 != 0, c: bits & 2 != 0, d: bits & 1 != 0 }
    }

    pub fn all_equal(&self) -> bool {
        self.a == self.b && self.b == self.c && self.c == self.d
    }

    pub fn complement(&self) -> Self {
        TypeConstants { a: !self.a, b: !self.b, c: !self.c, d: !self.d }
    }
}

/// Constants of a pair family (A_i, B_i): a1 = d(A_i,A_j,B_j), a2 = d(B_i,A_j,B_j),
/// b1 = d(A_i,B_i,A_j), b2 = d(A_i,B_i,B_j) for i < j, and c[0..8] = c1..c8 for
/// i<j<k with side patterns AAB, ABA, ABB, BAA, BAB, BBA, AAA, BBB.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairConstants {
    pub a1: bool,
    pub a2: bool,
    pub b1: bool,
    pub b2: bool,
    pub c: [bool; 8],
}

impl PairConstants {
    pub fn from_bits(bits: u16) -> Self {
        let bit = |i: u32| bits >> i & 1 == 1;
        PairConstants { a1: bit(0), a2: bit(1), b1: bit(2), b2: bit(3), c: std::array::from_fn(|i| bit(4 + i as u32)) }
    }

    /// c-index for sides (false = A, true = B) at indices i < j < k.
    pub fn c_index(sides: [bool; 3]) -> usize {
        match sides {
            [false, false, true] => 0,
            [false, true, false] => 1,
            [false, true, true] => 2,
            [true, false, false] => 3,
            [true, false, true] => 4,
            [true, true, false] => 5,
            [false, false, false] => 6,
            [true, true, true] => 7,
        }
    }
}

fn part_of(bounds: &[usize], v: usize) -> usize {
    bounds.partition_point(|&b| b <= v) - 1
}

fn layout(sizes: &[usize]) -> (Vec<usize>, Vec<VertexSet>) {
    let mut bounds = vec![0];
    let mut sets = Vec::new();
    for &s in sizes {
        let lo = *bounds.last().unwrap();
        sets.push(VertexSet::range(lo, lo + s));
        bounds.push(lo + s);
    }
    (bounds, sets)
}

/// Item-(a) style blow-up: every triple's membership is its type constant.
pub fn blowup_types(k: &TypeConstants, sizes: &[usize]) -> (Hypergraph, Vec<VertexSet>) {
    let (bounds, sets) = layout(sizes);
    let n = *bounds.last().unwrap();
    let h = Hypergraph::from_predicate(3, n, |t| {
        let [i, j, l] = [0, 1, 2].map(|p| part_of(&bounds, t[p]));
        match (i == j, j == l) {
            (true, true) => k.d,
            (true, false) => k.b,
            (false, true) => k.a,
            (false, false) => k.c,
        }
    })
    .expect("3-graph");
    (h, sets)
}

/// Pair-family blow-up laid out A_1, B_1, A_2, B_2, ...; `sizes[i]` is the
/// common size of A_i and B_i. Triples meeting a set twice are non-edges.
pub fn blowup_pairs(k: &PairConstants, sizes: &[usize]) -> (Hypergraph, Vec<(VertexSet, VertexSet)>) {
    let doubled: Vec<usize> = sizes.iter().flat_map(|&s| [s, s]).collect();
    let (bounds, sets) = layout(&doubled);
    let n = *bounds.last().unwrap();
    let h = Hypergraph::from_predicate(3, n, |t| {
        let p = [0, 1, 2].map(|q| part_of(&bounds, t[q]));
        if p[0] == p[1] || p[1] == p[2] {
            return false;
        }
        let (idx, side) = (p.map(|x| x / 2), p.map(|x| x % 2 == 1));
        if idx[0] == idx[1] {
            // A_i, B_i, X_j
            if side[2] {
                k.b2
            } else {
                k.b1
            }
        } else if idx[1] == idx[2] {
            // X_i, A_j, B_j
            if side[0] {
                k.a2
            } else {
                k.a1
            }
        } else {
            k.c[PairConstants::c_index(side)]
        }
    })
    .expect("3-graph");
    let pairs = sets.chunks(2).map(|c| (c[0].clone(), c[1].clone())).collect();
    (h, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_blowup_counts() {
        let (h, sets) = blowup_types(&TypeConstants { a: true, b: false, c: false, d: false }, &[2, 2]);
        assert_eq!(sets.len(), 2);
        // one vertex from part 0, two from part 1
        assert_eq!(h.num_edges(), 2);
        let (h, _) = blowup_types(&TypeConstants::from_bits(0b1111), &[3, 3]);
        assert_eq!(h.num_edges(), 20);
    }

    #[test]
    fn pair_blowup_counts() {
        let k = PairConstants { a1: true, a2: true, b1: false, b2: false, c: [false; 8] };
        let (h, pairs) = blowup_pairs(&k, &[1, 1]);
        assert_eq!(pairs.len(), 2);
        // A1 A2 B2 and B1 A2 B2
        assert_eq!(h.edges(), &[vec![0, 2, 3], vec![1, 2, 3]]);
    }
}
