//! Slow reference computations. Nothing here calls into the code it checks.

use std::collections::HashMap;

/// C(n, k) by Pascal's rule.
pub fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

/// g_r(m) from the recursion over ordered compositions into r positive parts.
pub fn g_r_brute(r: usize, m: usize) -> u128 {
    fn go(r: usize, m: usize, memo: &mut HashMap<usize, u128>) -> u128 {
        if m < r {
            return 0;
        }
        if let Some(&v) = memo.get(&m) {
            return v;
        }
        let mut best = 0;
        let mut parts = vec![1usize; r];
        // odometer over compositions: parts[0..r-1] free, last part determined
        loop {
            let used: usize = parts[..r - 1].iter().sum();
            if used < m {
                parts[r - 1] = m - used;
                let prod: u128 = parts.iter().map(|&p| p as u128).product();
                let rec: u128 = parts.clone().into_iter().map(|p| go(r, p, memo)).sum();
                best = best.max(prod + rec);
            }
            let mut i = 0;
            loop {
                if i == r - 1 {
                    memo.insert(m, best);
                    return best;
                }
                parts[i] += 1;
                if parts[..r - 1].iter().sum::<usize>() < m {
                    break;
                }
                parts[i] = 1;
                i += 1;
            }
        }
    }
    go(r, m, &mut HashMap::new())
}

/// Visit all x in N^len with Σ x = m.
pub fn weak_compositions(m: usize, len: usize, f: &mut impl FnMut(&[u64])) {
    fn rec(left: usize, slots: usize, cur: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if slots == 1 {
            cur.push(left as u64);
            f(cur);
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v as u64);
            rec(left - v, slots - 1, cur, f);
            cur.pop();
        }
    }
    if len == 0 {
        if m == 0 {
            f(&[]);
        }
        return;
    }
    rec(m, len, &mut Vec::new(), f)
}

/// The five monomial sums (Σ_{i<j} x_i x_j², Σ_{i<j} x_i² x_j,
/// Σ_{i<j<k} x_i x_j x_k, Σ x_i², Σ_{i<j} x_i x_j) by literal loops.
pub fn cubic_monomials(x: &[u64]) -> [i128; 5] {
    let x: Vec<i128> = x.iter().map(|&v| v as i128).collect();
    let n = x.len();
    let mut s = [0i128; 5];
    for i in 0..n {
        s[3] += x[i] * x[i];
        for j in i + 1..n {
            s[0] += x[i] * x[j] * x[j];
            s[1] += x[i] * x[i] * x[j];
            s[4] += x[i] * x[j];
            for k in j + 1..n {
                s[2] += x[i] * x[j] * x[k];
            }
        }
    }
    s
}

/// a Σ_{i<j} x_i x_j² + b Σ_{i<j} x_i² x_j + c Σ_{i<j<k} x_i x_j x_k + d Σ x_i² + e Σ_{i<j} x_i x_j.
pub fn cubic_direct(p: [i64; 5], x: &[u64]) -> i128 {
    cubic_monomials(x).iter().zip(p).map(|(s, c)| s * c as i128).sum()
}

/// (Σa) Σ_{i<j} b_i b_j + (Σb) Σ_{i<j} a_i a_j by direct loops.
pub fn lemma33_direct(a: &[u64], b: &[u64]) -> u128 {
    let pairs = |v: &[u64]| -> u128 {
        let mut s = 0u128;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                s += v[i] as u128 * v[j] as u128;
            }
        }
        s
    };
    let sa: u128 = a.iter().map(|&v| v as u128).sum();
    let sb: u128 = b.iter().map(|&v| v as u128).sum();
    sa * pairs(b) + sb * pairs(a)
}

/// All positive compositions of m (2^{m−1} of them, m ≥ 1; one empty for m = 0).
pub fn positive_compositions(m: usize) -> Vec<Vec<u64>> {
    if m == 0 {
        return vec![vec![]];
    }
    (0u64..1 << (m - 1))
        .map(|cuts| {
            let mut out = Vec::new();
            let mut run = 1u64;
            for b in 0..m - 1 {
                if cuts >> b & 1 == 1 {
                    out.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            out.push(run);
            out
        })
        .collect()
}

/// Largest homogeneous set of a 3-graph given by `edge`, over all 2^n subsets.
pub fn max_homogeneous_brute(n: usize, edge: &dyn Fn(usize, usize, usize) -> bool) -> usize {
    assert!(n <= 20);
    let mut best = n.min(2);
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let (mut any, mut all) = (false, true);
        'outer: for a in 0..size {
            for b in a + 1..size {
                for c in b + 1..size {
                    let e = edge(verts[a], verts[b], verts[c]);
                    any |= e;
                    all &= e;
                    if any && !all {
                        break 'outer;
                    }
                }
            }
        }
        if !any || all {
            best = size;
        }
    }
    best
}

/// Directed triangles among `set` from out-degrees: C(k,3) − Σ C(s_v, 2).
pub fn cyclic_by_scores(set: &[usize], beats: &dyn Fn(usize, usize) -> bool) -> u64 {
    let k = set.len() as u64;
    let transitive: u64 = set
        .iter()
        .map(|&v| {
            let s = set.iter().filter(|&&u| u != v && beats(v, u)).count() as u64;
            s * s.saturating_sub(1) / 2
        })
        .sum();
    k * k.saturating_sub(1) * k.saturating_sub(2) / 6 - transitive
}

/// Edge count of a type blow-up restricted to x_i vertices of part i,
/// counting vertex triples by the parts they hit.
pub fn type_blowup_direct(abcd: [bool; 4], x: &[u64]) -> u128 {
    let [a, b, c, d] = abcd;
    let labels: Vec<usize> = x.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize)).collect();
    let n = labels.len();
    let mut count = 0;
    for p in 0..n {
        for q in p + 1..n {
            for s in q + 1..n {
                let (i, j, k) = (labels[p], labels[q], labels[s]);
                let hit = if i == j && j == k {
                    d
                } else if i == j {
                    b
                } else if j == k {
                    a
                } else {
                    c
                };
                count += hit as u128;
            }
        }
    }
    count
}

/// Item-(b) count: x_i vertices from each of A_i and B_i for i < t, plus
/// one extra vertex of A_t when `eps`; pairs (A_i,B_i) of constants
/// a1=a2=1, b1, b2 and c1..c6 (c7=c8=0), all same-set triples 0.
pub fn pair_blowup_direct(b1: bool, b2: bool, c: [bool; 6], x: &[u64], eps: bool) -> u128 {
    // vertex = (pair index, side) with side false = A
    let mut verts: Vec<(usize, bool)> = Vec::new();
    for (i, &k) in x.iter().enumerate() {
        for _ in 0..k {
            verts.push((i, false));
        }
        for _ in 0..k {
            verts.push((i, true));
        }
    }
    if eps {
        verts.push((x.len(), false));
    }
    let n = verts.len();
    let mut count = 0u128;
    for p in 0..n {
        for q in p + 1..n {
            for s in q + 1..n {
                let mut t = [verts[p], verts[q], verts[s]];
                t.sort();
                let [(i, si), (j, sj), (k, sk)] = t;
                let hit = if i == j && j == k {
                    false
                } else if i == j {
                    // two from pair i, one from a later pair k
                    si != sj && if sk { b2 } else { b1 }
                } else if j == k {
                    // one from pair i, both sides of pair j: a1 / a2
                    sj != sk
                } else {
                    match (si, sj, sk) {
                        (false, false, true) => c[0],
                        (false, true, false) => c[1],
                        (false, true, true) => c[2],
                        (true, false, false) => c[3],
                        (true, false, true) => c[4],
                        (true, true, false) => c[5],
                        _ => false,
                    }
                };
                count += hit as u128;
            }
        }
    }
    count
}

/// Visit the k-subsets of `items` in lexicographic order.
pub fn k_subsets<T: Copy>(items: &[T], k: usize, f: &mut impl FnMut(&[T])) {
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), f)
}

/// (edges, triples) for the index triple `idx` of a family of disjoint sets:
/// indices that repeat draw distinct vertices from the same set.
pub fn family_triple(edge: &dyn Fn(usize, usize, usize) -> bool, sets: &[&[usize]], mut idx: [usize; 3]) -> (u64, u64) {
    idx.sort_unstable();
    let mut hits = 0;
    let mut total = 0;
    let mut tally = |t: [usize; 3]| {
        let mut t = t;
        t.sort_unstable();
        total += 1;
        hits += edge(t[0], t[1], t[2]) as u64;
    };
    let [i, j, l] = idx;
    if i == j && j == l {
        k_subsets(sets[i], 3, &mut |t| tally([t[0], t[1], t[2]]));
    } else if i == j || j == l {
        let (pair, single) = if i == j { (i, l) } else { (j, i) };
        k_subsets(sets[pair], 2, &mut |t| {
            for &z in sets[single] {
                tally([t[0], t[1], z]);
            }
        });
    } else {
        for &x in sets[i] {
            for &y in sets[j] {
                for &z in sets[l] {
                    tally([x, y, z]);
                }
            }
        }
    }
    (hits, total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binom(6, 3), 20);
        assert_eq!(binom(125, 5), 234_531_275);
        assert_eq!(g_r_brute(3, 4), 2);
        assert_eq!(g_r_brute(3, 6), 8);
        assert_eq!(positive_compositions(4).len(), 8);
        let mut k = 0;
        weak_compositions(3, 3, &mut |_| k += 1);
        assert_eq!(k, 10);
        assert_eq!(cubic_direct([0, 0, 1, 0, 0], &[1, 1, 1]), 1);
        assert_eq!(type_blowup_direct([false, false, false, true], &[3, 3]), 2);
    }
}
