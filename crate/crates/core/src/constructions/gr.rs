use crate::combin::{binom_sat, for_each_subset};
use crate::error::{Error, Result};
use crate::hg::{pair_index, Hypergraph, PalettedColoring, MAX_R};

/// Largest C(n, r) for which the edge set is materialized.
pub const MATERIALIZE_CAP: u64 = 100_000_000;

/// Pair coloring of `0..n` with C(r, 2) colors; an increasing r-tuple is an
/// edge iff its p-th and q-th entries get color `pair_index(p, q)` for all p < q.
#[derive(Clone, Debug)]
pub struct GrInstance {
    pub r: usize,
    pub coloring: PalettedColoring,
    /// present when C(n, r) <= [`MATERIALIZE_CAP`]
    pub graph: Option<Hypergraph>,
    pub seed: Option<u64>,
}

fn pattern_edge(c: &PalettedColoring, t: &[usize]) -> bool {
    for q in 1..t.len() {
        for p in 0..q {
            if c.color(t[p], t[q]) as usize != pair_index(p, q) {
                return false;
            }
        }
    }
    true
}

impl GrInstance {
    pub fn from_coloring(r: usize, coloring: PalettedColoring, seed: Option<u64>) -> Result<Self> {
        if !(3..=MAX_R).contains(&r) {
            return Err(Error::invalid(format!("r = {r} outside 3..={MAX_R}")));
        }
        let palette = r * (r - 1) / 2;
        if coloring.palette() != palette {
            return Err(Error::invalid(format!("G_{r} needs {palette} colors, coloring has {}", coloring.palette())));
        }
        let n = coloring.n();
        if n < r {
            return Err(Error::invalid(format!("need n >= r, got n = {n}")));
        }
        let graph = if binom_sat(n, r) <= MATERIALIZE_CAP {
            Some(Hypergraph::from_predicate(r, n, |t| pattern_edge(&coloring, t))?)
        } else {
            None
        };
        Ok(GrInstance { r, coloring, graph, seed })
    }

    pub fn n(&self) -> usize {
        self.coloring.n()
    }

    /// Membership straight from the coloring, never from the stored edges.
    pub fn is_pattern_copy(&self, t: &[usize]) -> bool {
        t.len() == self.r && t.windows(2).all(|w| w[0] < w[1]) && pattern_edge(&self.coloring, t)
    }

    /// `t` strictly increasing and in range.
    pub fn is_edge(&self, t: &[usize]) -> bool {
        match &self.graph {
            Some(g) => g.has_edge(t),
            None => self.is_pattern_copy(t),
        }
    }

    /// Edges inside a strictly increasing vertex list.
    pub fn edges_in(&self, s: &[usize]) -> u64 {
        if let Some(g) = &self.graph {
            return g.edge_count_sorted(s);
        }
        let mut count = 0;
        for_each_subset(s, self.r, |t| {
            if pattern_edge(&self.coloring, t) {
                count += 1;
            }
            true
        });
        count
    }

    /// The materialized graph, or one built on demand (subject to the usual limits).
    pub fn hypergraph(&self) -> Result<Hypergraph> {
        match &self.graph {
            Some(g) => Ok(g.clone()),
            None => Hypergraph::from_predicate(self.r, self.n(), |t| pattern_edge(&self.coloring, t)),
        }
    }
}

/// iid uniform pair colors on `0..n`.
pub fn build_gr(n: usize, r: usize, seed: u64) -> Result<GrInstance> {
    if r < 3 {
        return Err(Error::invalid(format!("r = {r} outside 3..={MAX_R}")));
    }
    let coloring = PalettedColoring::random(n, r * (r - 1) / 2, seed)?;
    GrInstance::from_coloring(r, coloring, Some(seed))
}

/// The six-vertex coloring with seven copies for r = 3.
///
/// Vertices 0..5 stand for x_1..x_6. Colors: pairs inside {x_1, x_2, x_3} get
/// their own index, {x_1,x_2,x_3}×{x_4,x_5} gets c_12, {x_1,x_2,x_3}×{x_6}
/// gets c_13, {x_4,x_5}×{x_6} gets c_23. The pair x_4x_5 is left open in the
/// source; it lies in no triple that can be an edge here, so c_12 is used.
pub fn footnote_example_r3() -> GrInstance {
    let (c12, c13, c23) = (pair_index(0, 1) as u16, pair_index(0, 2) as u16, pair_index(1, 2) as u16);
    let coloring = PalettedColoring::from_fn(6, 3, |i, j| match (i, j) {
        (i, j) if j < 3 => pair_index(i, j) as u16,
        (i, 3 | 4) if i < 3 => c12,
        (3, 4) => c12,
        (i, 5) if i < 3 => c13,
        _ => c23,
    })
    .expect("palette of three");
    GrInstance::from_coloring(3, coloring, None).expect("valid six-vertex instance")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::binom_sat;
    use crate::rng;
    use rand::seq::index::sample;

    #[test]
    fn canonical_pattern_one_edge() {
        for r in 3..=6 {
            let c = PalettedColoring::from_fn(r, r * (r - 1) / 2, |i, j| pair_index(i, j) as u16).unwrap();
            let g = GrInstance::from_coloring(r, c, None).unwrap();
            assert_eq!(g.graph.as_ref().unwrap().num_edges(), 1);
        }
    }

    #[test]
    fn monochromatic_empty() {
        for r in 3..=5 {
            let c = PalettedColoring::from_fn(9, r * (r - 1) / 2, |_, _| pair_index(0, 1) as u16).unwrap();
            let g = GrInstance::from_coloring(r, c, None).unwrap();
            assert_eq!(g.graph.as_ref().unwrap().num_edges(), 0);
        }
    }

    #[test]
    fn dual_evaluation_n20_r4() {
        let g = build_gr(20, 4, 3).unwrap();
        let h = g.graph.as_ref().unwrap();
        let mut rng = rng::seeded(99);
        for _ in 0..10_000 {
            let mut t = sample(&mut rng, 20, 4).into_vec();
            t.sort_unstable();
            assert_eq!(h.has_edge(&t), g.is_pattern_copy(&t));
            // independent recheck of the rule
            let mut want = true;
            for q in 1..4 {
                for p in 0..q {
                    want &= g.coloring.color(t[p], t[q]) as usize == q * (q - 1) / 2 + p;
                }
            }
            assert_eq!(h.has_edge(&t), want);
        }
    }

    #[test]
    fn footnote_counts() {
        let g = footnote_example_r3();
        let h = g.graph.clone().unwrap();
        assert_eq!(h.num_edges(), 7);
        assert_eq!(h.complement().num_edges() as u64, binom_sat(6, 3) - 7);
        assert!(h.edge_count_sorted(&[0, 1, 2, 3, 4]) < 7);
        // x_4x_5 never matters
        for c in 0..3u16 {
            let col = PalettedColoring::from_fn(6, 3, |i, j| if (i, j) == (3, 4) { c } else { g.coloring.color(i, j) }).unwrap();
            assert_eq!(GrInstance::from_coloring(3, col, None).unwrap().graph.unwrap().num_edges(), 7);
        }
    }

    #[test]
    fn bad_palette_rejected() {
        let c = PalettedColoring::random(6, 4, 0).unwrap();
        assert!(GrInstance::from_coloring(3, c, None).is_err());
        assert!(build_gr(2, 3, 0).is_err());
    }
}
