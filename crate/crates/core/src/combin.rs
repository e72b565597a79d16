//! Binomial coefficients and lexicographic subset enumeration.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Checked binomial in u128; `None` on overflow.
pub fn binom_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        // acc * (n - i) / (i + 1) is always exact
        let g = num_integer::gcd(acc, i + 1);
        let q = (n as u128 - i) / ((i + 1) / g);
        acc = (acc / g).checked_mul(q)?;
    }
    Some(acc)
}

/// Saturating u64 binomial, used for caps and counters.
pub fn binom_sat(n: usize, k: usize) -> u64 {
    binom_u128(n as u64, k as u64).map(|v| v.min(u64::MAX as u128) as u64).unwrap_or(u64::MAX)
}

/// Advance `c` (strictly increasing, entries < n) to the next k-subset in
/// lexicographic order. Returns false when `c` was the last one.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every k-subset of `items` (in lexicographic order of
/// positions). Stops early when `f` returns false; returns whether the scan
/// completed.
pub fn for_each_subset<T: Copy>(items: &[T], k: usize, mut f: impl FnMut(&[T]) -> bool) -> bool {
    let n = items.len();
    if k > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = idx.iter().map(|&i| items[i]).collect();
    loop {
        if !f(&buf) {
            return false;
        }
        if !next_combination(&mut idx, n) {
            return true;
        }
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = items[i];
        }
    }
}

/// All k-subsets of `items`, collected.
pub fn subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for_each_subset(items, k, |s| {
        out.push(s.to_vec());
        true
    });
    out
}

/// Table of small binomials for colex ranking: `t[v][j] = C(v, j)`, saturating.
#[derive(Clone, Debug)]
pub struct BinomTable {
    rows: Vec<Vec<u64>>,
}

impl BinomTable {
    pub fn new(n: usize, kmax: usize) -> Self {
        let rows = (0..=n).map(|v| (0..=kmax).map(|j| binom_sat(v, j)).collect()).collect();
        BinomTable { rows }
    }

    pub fn get(&self, v: usize, j: usize) -> u64 {
        self.rows[v][j]
    }

    /// Colex rank of a strictly increasing tuple.
    pub fn colex_rank(&self, t: &[usize]) -> u64 {
        t.iter().enumerate().map(|(i, &v)| self.rows[v][i + 1]).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_agree() {
        for n in 0..40u64 {
            for k in 0..=n + 1 {
                let big = binom(n, k);
                assert_eq!(BigUint::from(binom_u128(n, k).unwrap()), big);
            }
        }
        assert_eq!(binom(80, 4), BigUint::from(1_581_580u32));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all = subsets(&[0usize, 1, 2, 3, 4], 3);
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(subsets(&[7usize], 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn colex_rank_is_a_bijection() {
        let t = BinomTable::new(9, 4);
        let mut ranks: Vec<u64> = subsets(&(0..9).collect::<Vec<usize>>(), 4).iter().map(|s| t.colex_rank(s)).collect();
        ranks.sort();
        assert_eq!(ranks, (0..126).collect::<Vec<u64>>());
    }
}
