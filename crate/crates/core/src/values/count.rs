//! Distinct-value counts of the cubic forms over vectors with Σ x = m.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::values::cubic::{eval_general, CubicParams, GeneralParams, Sums};
use crate::Rational;

pub const COMPOSITION_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    FullCompositions,
    PositiveCompositions,
    DpStates,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueWitness {
    pub value: String,
    pub x: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueCountReport {
    pub m: usize,
    pub params: Vec<String>,
    pub count: u64,
    pub mode: EnumerationMode,
    pub min: Option<ValueWitness>,
    pub max: Option<ValueWitness>,
}

/// Visit every composition of m into positive parts (2^{m-1} of them), in
/// lexicographic order, with the running sums.
pub fn for_each_composition(m: usize, f: &mut impl FnMut(&[u64], &Sums)) {
    fn rec(left: usize, cur: &mut Vec<u64>, s: Sums, f: &mut impl FnMut(&[u64], &Sums)) {
        if left == 0 {
            f(cur, &s);
            return;
        }
        for y in 1..=left {
            let mut t = s;
            t.push(y as i64);
            cur.push(y as u64);
            rec(left - y, cur, t, f);
            cur.pop();
        }
    }
    rec(m, &mut Vec::new(), Sums::default(), f)
}

/// Integer coefficients with a common denominator, so distinct values can be
/// compared as i128 keys.
fn scale(params: &[&Rational]) -> Result<(Vec<i128>, BigInt)> {
    let den = params.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
    let coeffs = params
        .iter()
        .map(|p| (p.numer() * (&den / p.denom())).to_i128().ok_or_else(|| Error::invalid("parameter too large")))
        .collect::<Result<Vec<_>>>()?;
    Ok((coeffs, den))
}

fn witness(key: i128, den: &BigInt, x: Vec<u64>) -> ValueWitness {
    ValueWitness { value: Rational::new(BigInt::from(key), den.clone()).to_string(), x }
}

struct Tally {
    keys: HashSet<i128>,
    min: Option<(i128, Vec<u64>)>,
    max: Option<(i128, Vec<u64>)>,
}

impl Tally {
    fn new() -> Self {
        Tally { keys: HashSet::new(), min: None, max: None }
    }

    fn add(&mut self, key: i128, x: &[u64]) {
        if self.keys.insert(key) {
            if self.min.as_ref().is_none_or(|(k, _)| key < *k) {
                self.min = Some((key, x.to_vec()));
            }
            if self.max.as_ref().is_none_or(|(k, _)| key > *k) {
                self.max = Some((key, x.to_vec()));
            }
        }
    }

    /// Merge in prefix order; first witness by enumeration order wins ties.
    fn merge(mut self, other: Tally) -> Tally {
        self.keys.extend(other.keys);
        if let Some((k, x)) = other.min {
            if self.min.as_ref().is_none_or(|(s, _)| k < *s) {
                self.min = Some((k, x));
            }
        }
        if let Some((k, x)) = other.max {
            if self.max.as_ref().is_none_or(|(s, _)| k > *s) {
                self.max = Some((k, x));
            }
        }
        self
    }
}

/// Split the composition tree on the first part and reduce in order.
fn tally_compositions(m: usize, key: impl Fn(&Sums) -> i128 + Sync) -> Tally {
    if m == 0 {
        let mut t = Tally::new();
        t.add(key(&Sums::default()), &[]);
        return t;
    }
    let parts: Vec<Tally> = (1..=m)
        .into_par_iter()
        .map(|first| {
            let mut t = Tally::new();
            let mut s0 = Sums::default();
            s0.push(first as i64);
            let mut x = vec![first as u64];
            for_each_composition(m - first, &mut |rest, s| {
                let mut s = *s;
                // re-base the suffix sums onto the fixed first part
                s = rebase(&s0, &s);
                x.truncate(1);
                x.extend_from_slice(rest);
                t.add(key(&s), &x);
            });
            t
        })
        .collect();
    parts.into_iter().fold(Tally::new(), Tally::merge)
}

/// Sums of the concatenation (prefix, suffix) from the sums of each part.
fn rebase(p: &Sums, q: &Sums) -> Sums {
    Sums {
        e1: p.e1 + q.e1,
        e2: p.e2 + q.e2 + p.e1 * q.e1,
        e3: p.e3 + q.e3 + p.e2 * q.e1 + p.e1 * q.e2,
        p2: p.p2 + q.p2,
        p3: p.p3 + q.p3,
        s12: p.s12 + q.s12 + p.e1 * q.p2,
        s21: p.s21 + q.s21 + p.p2 * q.e1,
    }
}

fn report(m: usize, params: Vec<String>, t: Tally, den: &BigInt, mode: EnumerationMode) -> ValueCountReport {
    ValueCountReport {
        m,
        params,
        count: t.keys.len() as u64,
        mode,
        min: t.min.map(|(k, x)| witness(k, den, x)),
        max: t.max.map(|(k, x)| witness(k, den, x)),
    }
}

/// Exact number of distinct values of the first form over x ≥ 0, Σx = m.
/// Zero coordinates never change the value, so positive compositions suffice.
pub fn count_values_lemma32(p: &CubicParams<Rational>, m: usize) -> Result<ValueCountReport> {
    if m > COMPOSITION_CAP {
        return Err(Error::CapExceeded(format!("m = {m} above the composition cap {COMPOSITION_CAP}")));
    }
    let (c, den) = scale(&[&p.a, &p.b, &p.c, &p.d, &p.e])?;
    let t = tally_compositions(m, |s| {
        c[0] * s.s12 as i128 + c[1] * s.s21 as i128 + c[2] * s.e3 as i128 + c[3] * s.p2 as i128 + c[4] * s.e2 as i128
    });
    let params = [&p.a, &p.b, &p.c, &p.d, &p.e].iter().map(|v| v.to_string()).collect();
    Ok(report(m, params, t, &den, EnumerationMode::PositiveCompositions))
}

/// Distinct values of the general form, collected as canonical rationals.
pub fn count_values_general(g: &GeneralParams<Rational>, m: usize) -> Result<ValueCountReport> {
    if m > COMPOSITION_CAP {
        return Err(Error::CapExceeded(format!("m = {m} above the composition cap {COMPOSITION_CAP}")));
    }
    let mut seen: BTreeSet<Rational> = BTreeSet::new();
    let mut min: Option<(Rational, Vec<u64>)> = None;
    let mut max: Option<(Rational, Vec<u64>)> = None;
    for_each_composition(m, &mut |x, s| {
        let v = eval_general(g, m as u64, s);
        if seen.insert(v.clone()) {
            if min.as_ref().is_none_or(|(k, _)| v < *k) {
                min = Some((v.clone(), x.to_vec()));
            }
            if max.as_ref().is_none_or(|(k, _)| v > *k) {
                max = Some((v, x.to_vec()));
            }
        }
    });
    let w = |o: Option<(Rational, Vec<u64>)>| o.map(|(v, x)| ValueWitness { value: v.to_string(), x });
    Ok(ValueCountReport {
        m,
        params: [&g.a, &g.b, &g.c, &g.d, &g.e].iter().map(|v| v.to_string()).collect(),
        count: seen.len() as u64,
        mode: EnumerationMode::PositiveCompositions,
        min: w(min),
        max: w(max),
    })
}

/// (Σa) Σ_{i<j} b_i b_j + (Σb) Σ_{i<j} a_i a_j.
pub fn f_lemma33(a: &[u64], b: &[u64]) -> u128 {
    let e2 = |v: &[u64]| {
        let s: u128 = v.iter().map(|&x| x as u128).sum();
        let q: u128 = v.iter().map(|&x| (x * x) as u128).sum();
        (s * s - q) / 2
    };
    let sa: u128 = a.iter().map(|&x| x as u128).sum();
    let sb: u128 = b.iter().map(|&x| x as u128).sum();
    sa * e2(b) + sb * e2(a)
}

/// Achievable Σ v_i² over multisets of positive integers summing to n, for
/// every n ≤ m (at most n ≤ m parts are ever used, so m coordinates suffice).
pub fn square_sums(m: usize) -> Vec<BTreeSet<u64>> {
    let mut dp: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); m + 1];
    dp[0].insert(0);
    for part in 1..=m {
        for s in part..=m {
            let add: Vec<u64> = dp[s - part].iter().map(|q| q + (part * part) as u64).collect();
            dp[s].extend(add);
        }
    }
    dp
}

/// Distinct values of the second form over a, b ≥ 0 with Σ(a_i + b_i) = m,
/// via the reachable (A, Σa², B, Σb²) states.
pub fn count_values_lemma33(m: usize) -> ValueCountReport {
    let dp = square_sums(m);
    let mut keys: HashSet<u64> = HashSet::new();
    for big_a in 0..=m {
        let big_b = m - big_a;
        for &sa in &dp[big_a] {
            let e2a = ((big_a * big_a) as u64 - sa) / 2;
            for &sb in &dp[big_b] {
                let e2b = ((big_b * big_b) as u64 - sb) / 2;
                keys.insert(big_a as u64 * e2b + big_b as u64 * e2a);
            }
        }
    }
    let min = keys.iter().min().map(|v| ValueWitness { value: v.to_string(), x: Vec::new() });
    let max = keys.iter().max().map(|v| ValueWitness { value: v.to_string(), x: Vec::new() });
    ValueCountReport { m, params: Vec::new(), count: keys.len() as u64, mode: EnumerationMode::DpStates, min, max }
}
