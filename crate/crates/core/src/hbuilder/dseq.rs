//! The greedy backward-degree sequence and its four properties.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combin::binom_u128;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DSequence {
    pub r: usize,
    pub m: usize,
    pub f: u128,
    /// d[0] = d_1, ..., d[m−r+1] = d_{m−r+2}
    pub d: Vec<u64>,
    /// first i ≥ 2 (1-based) with d_i ≤ i − 2
    pub i_star: Option<usize>,
    /// (k, ℓ) from item (d), 1-based
    pub gap: Option<(usize, usize)>,
    /// backward-degree sum of u_{m−2r+6}..u_{m−r+2}
    pub tail_sum: u64,
    /// Σ d_i w_i
    pub weight: u128,
}

impl DSequence {
    /// d_i, 1-based.
    pub fn at(&self, i: usize) -> u64 {
        self.d[i - 1]
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// Last index before the tail, m − 2r + 5 (may be < 1 for small m).
    pub fn last_body(&self) -> isize {
        self.m as isize - 2 * self.r as isize + 5
    }
}

/// w_i = C(m−i, r−2), 1-based.
pub fn vertex_weight(r: usize, m: usize, i: usize) -> u128 {
    binom_u128((m - i) as u64, (r - 2) as u64).expect("fits u128")
}

pub fn d_sequence(r: usize, m: usize, f: u128) -> Result<DSequence> {
    if r < 3 {
        return Err(Error::invalid("d-sequence needs r ≥ 3"));
    }
    if m < r + 1 || m > crate::hg::MAX_N {
        return Err(Error::invalid(format!("m = {m} must be at least r + 1 = {}", r + 1)));
    }
    let total = binom_u128(m as u64, r as u64).expect("fits u128");
    if f > total / 2 {
        return Err(Error::invalid(format!("f = {f} exceeds ⌊C({m},{r})/2⌋ = {}", total / 2)));
    }
    let len = m - r + 2;
    let mut d = vec![0u64; len];
    let mut sum = 0u128;
    for i in 2..=len {
        let w = vertex_weight(r, m, i);
        let di = ((f - sum) / w).min(i as u128 - 1);
        d[i - 1] = di as u64;
        sum += di * w;
    }
    let i_star = (2..=len).find(|&i| d[i - 1] + 2 <= i as u64);
    let body = m as isize - 2 * r as isize + 5;
    let tail_sum = d.iter().enumerate().filter(|(p, _)| (*p as isize + 1) > body).map(|(_, &x)| x).sum();
    let mut seq = DSequence { r, m, f, d, i_star, gap: None, tail_sum, weight: sum };
    seq.gap = claim_gap(&seq, &threshold_upper(r));
    Ok(seq)
}

/// Bounds (lo, hi) on ln x for an integer x ≥ 1, via atanh series with an
/// explicit remainder bound.
pub fn ln_bounds(x: u64) -> (BigRational, BigRational) {
    assert!(x >= 1);
    let e = 63 - x.leading_zeros() as i64;
    let y = BigRational::new(BigInt::from(x), BigInt::from(1u64) << e);
    let (l2lo, l2hi) = atanh2_bounds(&BigRational::new(1.into(), 3.into()));
    let z = (&y - BigRational::one()) / (&y + BigRational::one());
    let (lylo, lyhi) = atanh2_bounds(&z);
    let eq = BigRational::from_integer(e.into());
    (&eq * l2lo + lylo, &eq * l2hi + lyhi)
}

/// Bounds on 2·atanh(z) for 0 ≤ z ≤ 1/3.
fn atanh2_bounds(z: &BigRational) -> (BigRational, BigRational) {
    const TERMS: i64 = 40;
    let two = BigRational::from_integer(2.into());
    let z2 = z * z;
    let mut pow = z.clone();
    let mut sum = BigRational::zero();
    for n in 0..TERMS {
        sum += &pow / BigRational::from_integer((2 * n + 1).into());
        pow = &pow * &z2;
    }
    // remainder ≤ z^{2N+1} / ((2N+1)(1 − z²)) with N = TERMS
    let rem = &pow / (BigRational::from_integer((2 * TERMS + 1).into()) * (BigRational::one() - &z2));
    (&two * &sum, two * (sum + rem))
}

/// Upper bound on 2(r−2)·ln(2(r−2)).
pub fn threshold_upper(r: usize) -> BigRational {
    let x = 2 * (r as u64 - 2);
    BigRational::from_integer(x.into()) * ln_bounds(x).1
}

/// Lower bound on 2(r−2)·ln(2(r−2)).
pub fn threshold_lower(r: usize) -> BigRational {
    let x = 2 * (r as u64 - 2);
    BigRational::from_integer(x.into()) * ln_bounds(x).0
}

/// Largest ℓ ≤ body with d zero strictly between k and ℓ (1-based).
pub(crate) fn gap_end(seq: &DSequence, k: usize, body: usize) -> usize {
    (k + 1..body).find(|&i| seq.at(i) != 0).unwrap_or(body)
}

/// First k ≥ i* whose zero run reaches the (conservative) threshold.
fn claim_gap(seq: &DSequence, threshold: &BigRational) -> Option<(usize, usize)> {
    let i_star = seq.i_star?;
    let body = usize::try_from(seq.last_body()).ok()?.min(seq.len());
    (i_star..body).map(|k| (k, gap_end(seq, k, body))).find(|&(k, l)| BigRational::from_integer((l - k).into()) >= *threshold)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    /// false when m < 5r² or r < 4; the items are then evaluated for information only
    pub in_range: bool,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub gap: Option<(usize, usize)>,
    /// indices i > i* where item (b) fails; nonempty would contradict the claim
    pub b_violations: Vec<usize>,
    /// D ≤ 2(r−2)ln(2(r−2)) − 2
    pub tail_sum_ok: bool,
}

impl ClaimReport {
    pub fn all_pass(&self) -> bool {
        self.a && self.b && self.c && self.d && self.tail_sum_ok
    }
}

pub fn verify_claim_d(seq: &DSequence) -> ClaimReport {
    let (r, m) = (seq.r, seq.m);
    let in_range = r >= 4 && m >= 5 * r * r;
    let len = seq.len();
    let a = seq.i_star.is_some_and(|i| 2 * i <= m + r);
    let mut b_violations = Vec::new();
    if let Some(i_star) = seq.i_star {
        for i in i_star + 1..=len {
            let di = seq.at(i) as i128;
            // d_i < (r−2)/(m−r+3−i) + 1  ⇔  (d_i − 1)(m−r+3−i) < r − 2
            let slack = (m + 3 - r - i) as i128;
            if (di - 1) * slack >= r as i128 - 2 || di > i as i128 - 2 {
                b_violations.push(i);
            }
        }
    }
    let b = seq.i_star.is_some() && b_violations.is_empty();
    let c = seq.weight == seq.f;
    let gap = claim_gap(seq, &threshold_upper(r));
    let d = gap.is_some();
    let tail_sum_ok = BigRational::from_integer((seq.tail_sum + 2).into()) <= threshold_lower(r);
    ClaimReport { in_range, a, b, c, d, gap, b_violations, tail_sum_ok }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let s = d_sequence(4, 80, 0).unwrap();
        assert!(s.d.iter().all(|&x| x == 0));
        assert_eq!(s.i_star, Some(2));
        let s = d_sequence(4, 80, 1).unwrap();
        assert_eq!(s.d.iter().sum::<u64>(), 1);
        assert_eq!(*s.d.last().unwrap(), 1);
        assert!(d_sequence(4, 80, 790_791).is_err());
        let s = d_sequence(4, 80, 790_000).unwrap();
        assert_eq!(s.weight, 790_000);
        assert!(verify_claim_d(&s).all_pass());
    }

    #[test]
    fn ln_is_bracketed() {
        for x in [1u64, 2, 3, 4, 6, 8, 12, 1000] {
            let (lo, hi) = ln_bounds(x);
            let t = (x as f64).ln();
            let to_f = |q: &BigRational| {
                use num_traits::ToPrimitive;
                q.to_f64().unwrap()
            };
            assert!(to_f(&lo) <= t + 1e-12 && t - 1e-12 <= to_f(&hi), "x={x}");
            assert!(lo <= hi);
        }
    }
}
