use fixedbitset::FixedBitSet;
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hg::Hypergraph;
use crate::rng;

/// A {0,1}-coloring of the r-subsets of an ordered vertex range.
///
/// Tuples passed to `color` are strictly increasing.
pub trait Coloring {
    fn arity(&self) -> usize;
    fn order(&self) -> usize;
    fn color(&self, t: &[usize]) -> bool;
}

impl Coloring for Hypergraph {
    fn arity(&self) -> usize {
        self.r()
    }
    fn order(&self) -> usize {
        self.n()
    }
    fn color(&self, t: &[usize]) -> bool {
        self.has_edge(t)
    }
}

/// Coloring given by a closure.
pub struct FnColoring<F> {
    pub arity: usize,
    pub order: usize,
    pub f: F,
}

impl<F: Fn(&[usize]) -> bool> Coloring for FnColoring<F> {
    fn arity(&self) -> usize {
        self.arity
    }
    fn order(&self) -> usize {
        self.order
    }
    fn color(&self, t: &[usize]) -> bool {
        (self.f)(t)
    }
}

/// Pseudo-random coloring obtained by hashing the tuple with a seed. Needs no
/// storage, so it stands in for r-graphs far too large to materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HashColoring {
    pub arity: usize,
    pub order: usize,
    pub seed: u64,
}

impl Coloring for HashColoring {
    fn arity(&self) -> usize {
        self.arity
    }
    fn order(&self) -> usize {
        self.order
    }
    fn color(&self, t: &[usize]) -> bool {
        let h = t.iter().fold(self.seed, |acc, &v| rng::sub_seed(acc, v as u64));
        h & 1 == 1
    }
}

/// Index of the pair (i, j), i < j, in colex order.
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Total map from pairs to palette indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalettedColoring {
    n: usize,
    palette: usize,
    colors: Vec<u16>,
}

impl PalettedColoring {
    /// `colors` is indexed by [`pair_index`].
    pub fn new(n: usize, palette: usize, colors: Vec<u16>) -> Result<Self> {
        if colors.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::invalid("pair color table has the wrong length"));
        }
        if palette == 0 || palette > u16::MAX as usize {
            return Err(Error::invalid("palette size out of range"));
        }
        if let Some(c) = colors.iter().find(|&&c| c as usize >= palette) {
            return Err(Error::invalid(format!("color {c} outside palette of size {palette}")));
        }
        Ok(PalettedColoring { n, palette, colors })
    }

    pub fn from_fn(n: usize, palette: usize, mut f: impl FnMut(usize, usize) -> u16) -> Result<Self> {
        let mut colors = vec![0; n * n.saturating_sub(1) / 2];
        for j in 0..n {
            for i in 0..j {
                colors[pair_index(i, j)] = f(i, j);
            }
        }
        Self::new(n, palette, colors)
    }

    /// iid uniform colors from the seeded generator.
    pub fn random(n: usize, palette: usize, seed: u64) -> Result<Self> {
        let mut rng = rng::seeded(seed);
        Self::from_fn(n, palette, |_, _| rng.gen_range(0..palette) as u16)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn color(&self, i: usize, j: usize) -> u16 {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.colors[pair_index(a, b)]
    }
}

/// Orientation of every pair of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    n: usize,
    /// bit set at pair_index(i, j) means i -> j (for i < j)
    forward: FixedBitSet,
}

impl Tournament {
    pub fn from_fn(n: usize, mut i_beats_j: impl FnMut(usize, usize) -> bool) -> Self {
        let mut forward = FixedBitSet::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 0..n {
            for i in 0..j {
                forward.set(pair_index(i, j), i_beats_j(i, j));
            }
        }
        Tournament { n, forward }
    }

    /// Every pair oriented from the smaller index to the larger.
    pub fn transitive(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn random(n: usize, seed: u64) -> Self {
        let mut rng = rng::seeded(seed);
        Self::from_fn(n, |_, _| rng.gen_bool(0.5))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff the pair is oriented a -> b.
    pub fn beats(&self, a: usize, b: usize) -> bool {
        if a < b {
            self.forward.contains(pair_index(a, b))
        } else {
            !self.forward.contains(pair_index(b, a))
        }
    }

    /// Whether i < j < k form a directed 3-cycle.
    pub fn is_cyclic(&self, i: usize, j: usize, k: usize) -> bool {
        let ij = self.beats(i, j);
        ij == self.beats(j, k) && ij == self.beats(k, i)
    }
}
