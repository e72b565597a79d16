//! The explicit ordered graph H of prescribed total weight, with its
//! substitution certificate.

use serde::{Deserialize, Serialize};

use super::cert::{
    beside, clique_opt, empty_opt, expand_certificate, join, leaves_are_primitive, monotone_forest, nested_forest,
    SubstitutionTree,
};
use super::dseq::{d_sequence, gap_end, verify_claim_d, ClaimReport, DSequence};
use crate::combin::binom_u128;
use crate::error::{Error, Result};
use crate::hg::OrderedGraph;
use crate::order_size::WeightFrame;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HConstruction {
    pub r: usize,
    pub m: usize,
    /// the requested weight
    pub f: u128,
    /// H realizes C(m,r) − f instead of f; the requested pattern is its complement
    pub complemented: bool,
    pub d: DSequence,
    pub h: OrderedGraph,
    pub cert: SubstitutionTree,
    /// (k, ℓ) used to place the tail leaves, 1-based
    pub gap: (usize, usize),
    pub claims: ClaimReport,
    /// m < 5r²: built anyway, guarantees do not apply
    pub advisory: bool,
}

impl HConstruction {
    /// Weight H is supposed to carry.
    pub fn target_weight(&self) -> u128 {
        if self.complemented {
            binom_u128(self.m as u64, self.r as u64).unwrap() - self.f
        } else {
            self.f
        }
    }

    /// The ordered graph of weight f.
    pub fn pattern(&self) -> OrderedGraph {
        if self.complemented {
            self.h.complement()
        } else {
            self.h.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HChecks {
    pub weight: u128,
    pub weight_ok: bool,
    pub degrees_ok: bool,
    pub cert_ok: bool,
    pub leaves_ok: bool,
}

impl HChecks {
    pub fn all_pass(&self) -> bool {
        self.weight_ok && self.degrees_ok && self.cert_ok && self.leaves_ok
    }
}

/// Recheck weight, backward degrees and the certificate from scratch.
pub fn check_h(hc: &HConstruction) -> Result<HChecks> {
    let frame = WeightFrame::new(hc.r, hc.m, 1)?;
    let weight = frame.weight_of_pattern(&hc.h);
    let degrees_ok = (0..hc.h.n()).all(|v| hc.h.backward_degree(v) as u64 == hc.d.d[v]);
    let cert_ok = expand_certificate(&hc.cert).map(|g| g == hc.h).unwrap_or(false);
    Ok(HChecks {
        weight,
        weight_ok: weight == hc.target_weight(),
        degrees_ok,
        cert_ok,
        leaves_ok: leaves_are_primitive(&hc.cert),
    })
}

/// Star sizes of the monotone forest on the 1-based interval lo..=hi: a
/// star starts at every index with d = 0.
fn star_sizes(d: &DSequence, lo: usize, hi: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = Vec::new();
    for i in lo..=hi {
        if d.at(i) == 0 {
            sizes.push(0);
        } else {
            *sizes.last_mut().expect("interval starts at a center") += 1;
        }
    }
    sizes
}

pub fn build_h(r: usize, m: usize, f: u128) -> Result<HConstruction> {
    if r < 4 {
        return Err(Error::invalid("the explicit construction needs r ≥ 4"));
    }
    let total = binom_u128(m as u64, r as u64).ok_or_else(|| Error::invalid("m too large"))?;
    if f > total {
        return Err(Error::invalid(format!("f = {f} exceeds C({m},{r}) = {total}")));
    }
    let complemented = 2 * f > total;
    let fn_ = if complemented { total - f } else { f };
    let d = d_sequence(r, m, fn_)?;
    let claims = verify_claim_d(&d);
    let len = d.len();
    let body = d.last_body();
    let i_star = d.i_star.ok_or_else(|| Error::precondition("no index with d_i ≤ i − 2"))?;
    if body < i_star as isize + 1 {
        return Err(Error::precondition(format!("m = {m} too small: the body ends before i* = {i_star}")));
    }
    let body = body as usize;
    if let Some(&i) = claims.b_violations.first() {
        return Err(Error::precondition(format!("d_{i} = {} breaks the degree bound", d.at(i))));
    }
    let big_d = d.tail_sum as usize;
    let (k, l) = (i_star..body)
        .map(|k| (k, gap_end(&d, k, body)))
        .find(|&(k, l)| l - k >= big_d + 2)
        .ok_or_else(|| Error::precondition(format!("no zero run of length {} after i*", big_d + 1)))?;

    let mut h = OrderedGraph::empty(len);
    // 0-based vertex of u_i
    let u = |i: usize| i - 1;
    for j in 2..i_star {
        for i in 1..j {
            h.add_edge(u(i), u(j));
        }
    }
    for i in 1..=d.at(i_star) as usize {
        h.add_edge(u(i), u(i_star));
    }
    let mut last_zero = 1;
    for i in 2..=body {
        if i > i_star && d.at(i) == 1 {
            h.add_edge(u(last_zero), u(i));
        }
        if d.at(i) == 0 {
            last_zero = i;
        }
    }
    let mut next = k + 1;
    let tail: Vec<usize> = (body + 1..=len).rev().collect();
    for &i in &tail {
        for _ in 0..d.at(i) {
            h.add_edge(u(next), u(i));
            next += 1;
        }
    }

    // certificate: V1 = u_1..u_{i1−1}, V2 = u_{i1}..u_k, V3 = u_{k+1}..u_len
    let i1 = (i_star..=len).find(|&i| d.at(i) == 0).expect("d_{k+1} = 0");
    let d_star = d.at(i_star) as usize;
    let v1 = if d_star == 0 {
        clique_opt(i_star - 1)
    } else {
        // u_2..u_{i*}: S2 with {u_2..u_{d*}}, {u_{d*+1}..u_{i*−1}}, u_{i*}
        let inner = join(clique_opt(d_star - 1), beside(clique_opt(i_star - 1 - d_star), Some(SubstitutionTree::single())));
        join(Some(SubstitutionTree::single()), beside(inner, empty_opt(i1 - 1 - i_star)))
    };
    let v2 = if i1 <= k { monotone_forest(&star_sizes(&d, i1, k)) } else { None };
    let u2 = monotone_forest(&star_sizes(&d, k + big_d + 1, body));
    let leaves: Vec<usize> = tail.iter().map(|&i| d.at(i) as usize).collect();
    let v3 = nested_forest(&leaves, u2);
    let parts: Vec<SubstitutionTree> = [v1, v2, v3].into_iter().flatten().collect();
    let cert = match parts.len() {
        1 => parts.into_iter().next().unwrap(),
        n => SubstitutionTree::host(SubstitutionTree::Empty { size: n }, parts),
    }
    .simplify();

    let advisory = !claims.in_range;
    let hc = HConstruction { r, m, f, complemented, d, h, cert, gap: (k, l), claims, advisory };
    let checks = check_h(&hc)?;
    if !checks.all_pass() {
        return Err(Error::Verification(format!("construction failed its own checks: {checks:?}")));
    }
    Ok(hc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_weights() {
        let hc = build_h(4, 80, 0).unwrap();
        assert_eq!(hc.h.num_edges(), 0);
        assert_eq!(hc.cert, SubstitutionTree::Empty { size: 78 });
        let hc = build_h(4, 80, 1).unwrap();
        assert_eq!(hc.h.num_edges(), 1);
        assert_eq!(hc.h.edges()[0].1, 77);
        let total = binom_u128(80, 4).unwrap();
        let hc = build_h(4, 80, total).unwrap();
        assert!(hc.complemented);
        assert_eq!(hc.h.num_edges(), 0);
        assert_eq!(WeightFrame::new(4, 80, 1).unwrap().weight_of_pattern(&hc.pattern()), total);
    }

    #[test]
    fn spread_of_weights() {
        let total = binom_u128(80, 4).unwrap();
        for q in 0..=40u128 {
            let f = total * q / 40;
            let hc = build_h(4, 80, f).unwrap();
            assert!(hc.claims.all_pass(), "f={f}");
            assert!(!hc.advisory);
        }
    }
}
