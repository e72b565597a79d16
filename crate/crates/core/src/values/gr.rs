use num_bigint::BigUint;
use num_traits::{One, Zero};

/// g_r(m) for every m in 0..=mmax, with an optimal partition for each
/// (empty below r).
pub fn g_r_table(r: usize, mmax: usize) -> Vec<(BigUint, Vec<usize>)> {
    assert!(r >= 2, "g_r needs r >= 2");
    let mut table: Vec<(BigUint, Vec<usize>)> = Vec::with_capacity(mmax + 1);
    for m in 0..=mmax {
        if m < r {
            table.push((BigUint::zero(), Vec::new()));
            continue;
        }
        let mut best: Option<(BigUint, Vec<usize>)> = None;
        for_each_partition(m, r, m, &mut Vec::new(), &mut |parts| {
            let mut v = BigUint::one();
            for &p in parts {
                v *= p;
            }
            for &p in parts {
                v += &table[p].0;
            }
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                best = Some((v, parts.to_vec()));
            }
        });
        table.push(best.expect("m >= r has a partition"));
    }
    table
}

/// g_r(m): the recursive complete r-partite edge count.
pub fn g_r(r: usize, m: usize) -> BigUint {
    g_r_table(r, m).swap_remove(m).0
}

/// Partitions of `m` into exactly `k` positive parts, each at most `cap`,
/// as nonincreasing lists.
pub fn for_each_partition(m: usize, k: usize, cap: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if k == 0 {
        if m == 0 {
            f(cur);
        }
        return;
    }
    if m < k || m > k * cap {
        return;
    }
    let hi = cap.min(m - (k - 1));
    let lo = m.div_ceil(k);
    for p in (lo..=hi).rev() {
        cur.push(p);
        for_each_partition(m - p, k - 1, p, cur, f);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(g_r(3, 2), BigUint::zero());
        assert_eq!(g_r(3, 3), BigUint::one());
        assert_eq!(g_r(3, 4), BigUint::from(2u32));
        for r in 3..=6 {
            assert_eq!(g_r(r, 2 * r), BigUint::from(1u32 << r));
        }
        let mut n = 0;
        for_each_partition(7, 3, 7, &mut Vec::new(), &mut |_| n += 1);
        assert_eq!(n, 4); // 511 421 331 322
    }
}
