//! Edge counts of blow-ups: closed forms against direct counting.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hg::Hypergraph;
use crate::structure::synthetic::{blowup_pairs, blowup_types, PairConstants, TypeConstants};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupCount {
    pub closed_form: u128,
    pub direct: u64,
}

impl BlowupCount {
    pub fn agrees(&self) -> bool {
        self.closed_form == self.direct as u128
    }
}

fn c2(x: u128) -> u128 {
    x * x.saturating_sub(1) / 2
}

/// a Σ_{i<j} x_i C(x_j,2) + b Σ_{i<j} C(x_i,2) x_j + c Σ_{i<j<k} x_i x_j x_k (+ d Σ C(x_i,3)).
pub fn type_closed_form(k: &TypeConstants, x: &[u64]) -> u128 {
    let x: Vec<u128> = x.iter().map(|&v| v as u128).collect();
    let m = x.len();
    let mut total = 0;
    for i in 0..m {
        if k.d {
            total += x[i] * x[i].saturating_sub(1) * x[i].saturating_sub(2) / 6;
        }
        for j in i + 1..m {
            if k.a {
                total += x[i] * c2(x[j]);
            }
            if k.b {
                total += c2(x[i]) * x[j];
            }
            if k.c {
                total += x[i] * x[j] * x[j + 1..].iter().sum::<u128>();
            }
        }
    }
    total
}

/// Build the blow-up, take the first x_i vertices of each part and count.
pub fn blowup_edge_count(k: &TypeConstants, sizes: &[usize], x: &[u64]) -> Result<BlowupCount> {
    if x.len() != sizes.len() {
        return Err(Error::invalid("x and the part list differ in length"));
    }
    if let Some(i) = (0..x.len()).find(|&i| x[i] as usize > sizes[i]) {
        return Err(Error::invalid(format!("x_{} = {} exceeds part size {}", i + 1, x[i], sizes[i])));
    }
    let (h, sets) = blowup_types(k, sizes);
    let chosen: Vec<usize> = sets.iter().zip(x).flat_map(|(s, &xi)| s.iter().take(xi as usize)).collect();
    Ok(BlowupCount { closed_form: type_closed_form(k, x), direct: h.edge_count_sorted(&chosen) })
}

/// The mixed count for item (b): x_i vertices from each of A_i and B_i
/// (i ≤ t = |x|) plus ε vertices from the last A set:
/// 2 Σ x_i x_j² + b Σ x_i² x_j + c Σ x_i x_j x_k + ε b1 Σ x_i² + ε (c2 + c4 + c6) Σ x_i x_j,
/// with b = b1 + b2 and c = c1 + … + c6.
pub fn pair_closed_form(k: &PairConstants, x: &[u64], eps: bool) -> u128 {
    let x: Vec<u128> = x.iter().map(|&v| v as u128).collect();
    let t = x.len();
    let b = k.b1 as u128 + k.b2 as u128;
    let c: u128 = k.c[..6].iter().map(|&v| v as u128).sum();
    let e = eps as u128;
    let mut total = 0;
    for i in 0..t {
        total += e * k.b1 as u128 * x[i] * x[i];
        for j in i + 1..t {
            total += 2 * x[i] * x[j] * x[j] + b * x[i] * x[i] * x[j];
            total += e * (k.c[1] as u128 + k.c[3] as u128 + k.c[5] as u128) * x[i] * x[j];
            total += c * x[i] * x[j] * x[j + 1..].iter().sum::<u128>();
        }
    }
    total
}

/// Item-(b) blow-up with `pairs` pairs of the given part size; a1 = a2 = 1 and
/// c7 = c8 = 0 are forced.
pub fn pair_blowup_edge_count(k: &PairConstants, pairs: usize, part: usize, x: &[u64], eps: bool) -> Result<BlowupCount> {
    let needed = x.len() + eps as usize;
    if pairs < needed.max(1) {
        return Err(Error::invalid("not enough pairs for x and the extra vertex"));
    }
    if x.iter().any(|&v| v as usize > part) {
        return Err(Error::invalid("x exceeds the part size"));
    }
    let mut k = *k;
    k.a1 = true;
    k.a2 = true;
    k.c[6] = false;
    k.c[7] = false;
    let (h, sets): (Hypergraph, _) = blowup_pairs(&k, &vec![part; pairs]);
    let mut chosen: Vec<usize> = Vec::new();
    for (i, &xi) in x.iter().enumerate() {
        chosen.extend(sets[i].0.iter().take(xi as usize));
        chosen.extend(sets[i].1.iter().take(xi as usize));
    }
    if eps {
        chosen.push(sets[pairs - 1].0[0]);
    }
    chosen.sort_unstable();
    Ok(BlowupCount { closed_form: pair_closed_form(&k, x, eps), direct: h.edge_count_sorted(&chosen) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let k = TypeConstants { a: true, b: true, c: true, d: false };
        let r = blowup_edge_count(&k, &[2, 2, 2], &[2, 2, 2]).unwrap();
        assert!(r.agrees());
        let r = blowup_edge_count(&k, &[3, 3], &[3, 0]).unwrap();
        assert_eq!(r.direct, 0);
        assert!(blowup_edge_count(&k, &[1, 1], &[2, 0]).is_err());
        let p = PairConstants::from_bits(0b1010_1101_0110);
        let r = pair_blowup_edge_count(&p, 4, 3, &[2, 3, 1], true).unwrap();
        assert!(r.agrees(), "{r:?}");
    }
}
