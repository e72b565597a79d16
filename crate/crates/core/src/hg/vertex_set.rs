use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Strictly increasing list of vertex indices, checked against an owner size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Sorts the input; duplicates and out-of-range entries are errors.
    pub fn new(mut items: Vec<usize>, n: usize) -> Result<Self> {
        items.sort_unstable();
        if let Some(w) = items.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate vertex {}", w[0])));
        }
        if let Some(&v) = items.last() {
            if v >= n {
                return Err(Error::OutOfRange { vertex: v, n });
            }
        }
        Ok(VertexSet(items))
    }

    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet((lo..hi).collect())
    }

    pub(crate) fn from_sorted(items: Vec<usize>) -> Self {
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        VertexSet(items)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn truncated(&self, k: usize) -> VertexSet {
        VertexSet(self.0[..k.min(self.0.len())].to_vec())
    }
}

impl std::ops::Deref for VertexSet {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}
