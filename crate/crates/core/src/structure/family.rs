//! Families of vertex sets with prescribed 0/1 densities, and their direct
//! re-verification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hg::density::{count_xxz, count_xyz};
use crate::hg::{density_counts, Hypergraph, VertexSet};
use crate::structure::synthetic::{PairConstants, TypeConstants};

/// Density of a triple of sets, as seen by the searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Dens {
    Zero,
    One,
    Mixed,
    /// no admissible triple (a set too small for its multiplicity)
    Vacuous,
}

impl Dens {
    fn of(e: u64, total: u64) -> Dens {
        if total == 0 {
            Dens::Vacuous
        } else if e == 0 {
            Dens::Zero
        } else if e == total {
            Dens::One
        } else {
            Dens::Mixed
        }
    }

    pub(crate) fn bit(self) -> Option<bool> {
        match self {
            Dens::Zero => Some(false),
            Dens::One => Some(true),
            _ => None,
        }
    }
}

pub(crate) fn dens_xxx(h: &Hypergraph, x: &[usize]) -> Dens {
    let k = x.len() as u64;
    Dens::of(h.edge_count_sorted(x), k * k.saturating_sub(1) * k.saturating_sub(2) / 6)
}

/// d(X, X, Y) for disjoint X, Y.
pub(crate) fn dens_xxy(h: &Hypergraph, x: &[usize], y: &[usize]) -> Dens {
    let k = x.len() as u64;
    Dens::of(count_xxz(h, x, y), k * k.saturating_sub(1) / 2 * y.len() as u64)
}

pub(crate) fn dens_xyz(h: &Hypergraph, x: &[usize], y: &[usize], z: &[usize]) -> Dens {
    Dens::of(count_xyz(h, x, y, z), (x.len() * y.len() * z.len()) as u64)
}

/// Set-triples checked per constraint label; every listed check passed.
pub type Digest = BTreeMap<String, u64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogenizedFamily {
    pub sets: Vec<VertexSet>,
    pub constants: TypeConstants,
    /// constants with no admissible triple in this family ("a", "b", "c", "d")
    pub vacuous: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFamily {
    pub pairs: Vec<(VertexSet, VertexSet)>,
    pub constants: PairConstants,
    /// as for [`HomogenizedFamily::vacuous`]: "a1", "b2", "c3", ...
    pub vacuous: Vec<String>,
}

/// Density through the public counting API, `None` when vacuous.
fn exact_bit(h: &Hypergraph, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<Option<Option<bool>>> {
    match density_counts(h, x, y, z) {
        Ok((e, t)) => Ok(Some(if e == 0 {
            Some(false)
        } else if e == t {
            Some(true)
        } else {
            None
        })),
        Err(Error::EmptyDenominator) => Ok(None),
        Err(e) => Err(e),
    }
}

struct Checker<'a> {
    h: &'a Hypergraph,
    digest: Digest,
    seen: BTreeMap<String, bool>,
}

impl<'a> Checker<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        Checker { h, digest: Digest::new(), seen: BTreeMap::new() }
    }

    fn check(&mut self, label: &str, want: bool, x: &VertexSet, y: &VertexSet, z: &VertexSet) -> Result<()> {
        match exact_bit(self.h, x, y, z)? {
            None => Ok(()),
            Some(got) => {
                if got != Some(want) {
                    return Err(Error::Verification(format!(
                        "constraint {label}: density of ({:?}, {:?}, {:?}) is not {}",
                        x.as_slice(),
                        y.as_slice(),
                        z.as_slice(),
                        want as u8
                    )));
                }
                *self.digest.entry(label.to_string()).or_default() += 1;
                self.seen.insert(label.to_string(), true);
                Ok(())
            }
        }
    }
}

fn check_disjoint(sets: &[&VertexSet]) -> Result<()> {
    for (i, x) in sets.iter().enumerate() {
        for y in &sets[i + 1..] {
            if !x.is_disjoint(y) {
                return Err(Error::Verification(format!("sets {:?} and {:?} overlap", x.as_slice(), y.as_slice())));
            }
        }
    }
    Ok(())
}

impl HomogenizedFamily {
    /// Counts every (not necessarily distinct) index triple against its type.
    pub fn verify(&self, h: &Hypergraph) -> Result<Digest> {
        if h.r() != 3 {
            return Err(Error::precondition("families live in 3-graphs"));
        }
        check_disjoint(&self.sets.iter().collect::<Vec<_>>())?;
        let k = &self.constants;
        let s = &self.sets;
        let mut ch = Checker::new(h);
        for i in 0..s.len() {
            ch.check("d", k.d, &s[i], &s[i], &s[i])?;
            for j in i + 1..s.len() {
                ch.check("a", k.a, &s[i], &s[j], &s[j])?;
                ch.check("b", k.b, &s[i], &s[i], &s[j])?;
                for l in j + 1..s.len() {
                    ch.check("c", k.c, &s[i], &s[j], &s[l])?;
                }
            }
        }
        let vac: Vec<String> =
            ["a", "b", "c", "d"].iter().filter(|l| !ch.seen.contains_key(**l)).map(|l| l.to_string()).collect();
        if vac != self.vacuous {
            return Err(Error::Verification(format!("vacuous constants {vac:?}, family claims {:?}", self.vacuous)));
        }
        Ok(ch.digest)
    }

    /// Not-all-equal over the constants that some triple actually pins down.
    pub fn not_all_equal(&self) -> bool {
        let k = &self.constants;
        let vals: Vec<bool> = [("a", k.a), ("b", k.b), ("c", k.c), ("d", k.d)]
            .into_iter()
            .filter(|(l, _)| !self.vacuous.iter().any(|v| v == l))
            .map(|(_, b)| b)
            .collect();
        vals.iter().any(|&b| b != vals[0])
    }
}

pub(crate) const PAIR_LABELS: [&str; 12] = ["a1", "a2", "b1", "b2", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"];

fn side(p: &(VertexSet, VertexSet), b: bool) -> &VertexSet {
    if b {
        &p.1
    } else {
        &p.0
    }
}

impl PairFamily {
    /// Checks the thirteen density patterns of the pair lemma.
    pub fn verify(&self, h: &Hypergraph) -> Result<Digest> {
        if h.r() != 3 {
            return Err(Error::precondition("families live in 3-graphs"));
        }
        let all: Vec<&VertexSet> = self.pairs.iter().flat_map(|(a, b)| [a, b]).collect();
        check_disjoint(&all)?;
        let k = &self.constants;
        let p = &self.pairs;
        let mut ch = Checker::new(h);
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                ch.check("a1", k.a1, &p[i].0, &p[j].0, &p[j].1)?;
                ch.check("a2", k.a2, &p[i].1, &p[j].0, &p[j].1)?;
                ch.check("b1", k.b1, &p[i].0, &p[i].1, &p[j].0)?;
                ch.check("b2", k.b2, &p[i].0, &p[i].1, &p[j].1)?;
                for l in j + 1..p.len() {
                    for bits in 0..8u8 {
                        let sides = [bits & 4 != 0, bits & 2 != 0, bits & 1 != 0];
                        let idx = PairConstants::c_index(sides);
                        ch.check(
                            PAIR_LABELS[4 + idx],
                            k.c[idx],
                            side(&p[i], sides[0]),
                            side(&p[j], sides[1]),
                            side(&p[l], sides[2]),
                        )?;
                    }
                }
            }
        }
        let vac: Vec<String> = PAIR_LABELS.iter().filter(|l| !ch.seen.contains_key(**l)).map(|l| l.to_string()).collect();
        if vac != self.vacuous {
            return Err(Error::Verification(format!("vacuous constants {vac:?}, family claims {:?}", self.vacuous)));
        }
        Ok(ch.digest)
    }

    /// The extra constraints of item (b): a1 = a2 = 1, c7 = c8 = 0, and
    /// density 0 on every triple of sets that are not pairwise distinct.
    pub fn verify_item_b(&self, h: &Hypergraph) -> Result<Digest> {
        let mut digest = self.verify(h)?;
        let k = &self.constants;
        if !(k.a1 && k.a2) {
            return Err(Error::Verification("item (b) needs a1 = a2 = 1".into()));
        }
        if k.c[6] || k.c[7] {
            return Err(Error::Verification("item (b) needs c7 = c8 = 0".into()));
        }
        let all: Vec<&VertexSet> = self.pairs.iter().flat_map(|(a, b)| [a, b]).collect();
        let mut ch = Checker::new(h);
        for (i, x) in all.iter().enumerate() {
            ch.check("xxx", false, x, x, x)?;
            for (j, y) in all.iter().enumerate() {
                if i != j {
                    ch.check("xxy", false, x, x, y)?;
                }
            }
        }
        digest.extend(ch.digest);
        Ok(digest)
    }
}

/// Labels of the constants no triple of a family with `len` members reaches,
/// given that every member has `size` vertices.
pub(crate) fn vacuous_types(len: usize, size: usize) -> Vec<String> {
    let mut out = Vec::new();
    if len < 2 || size < 2 {
        out.push("a".to_string());
        out.push("b".to_string());
    }
    if len < 3 {
        out.push("c".to_string());
    }
    if size < 3 || len == 0 {
        out.push("d".to_string());
    }
    out.sort();
    out
}

pub(crate) fn vacuous_pairs(len: usize) -> Vec<String> {
    let mut out = Vec::new();
    if len < 2 {
        out.extend(PAIR_LABELS[..4].iter().map(|s| s.to_string()));
    }
    if len < 3 {
        out.extend(PAIR_LABELS[4..].iter().map(|s| s.to_string()));
    }
    out
}
