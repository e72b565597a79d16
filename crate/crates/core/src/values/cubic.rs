//! The two cubic forms and the parameter map between them.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Coefficients (a, b, c, d, e) of
/// a Σ_{i<j} x_i x_j² + b Σ_{i<j} x_i² x_j + c Σ_{i<j<k} x_i x_j x_k + d Σ x_i² + e Σ_{i<j} x_i x_j.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    pub e: T,
}

/// Coefficients (A, B, C, D, E) of
/// (A m + D) Σ x_i² + B Σ x_i³ + C Σ_{i<j} x_i x_j (x_i − x_j) + E.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneralParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
    pub e: T,
}

impl<T: Scalar> CubicParams<T> {
    pub fn new(a: T, b: T, c: T, d: T, e: T) -> Self {
        CubicParams { a, b, c, d, e }
    }

    pub fn from_ints(p: [i64; 5]) -> Self {
        let [a, b, c, d, e] = p.map(T::from_i64);
        CubicParams { a, b, c, d, e }
    }

    /// a = b = c/3: the value only depends on Σ x_i².
    pub fn degenerate_equal(&self) -> bool {
        let three = T::from_i64(3);
        self.a == self.b && self.a.clone() * three == self.c
    }

    /// a = −b and c = 0.
    pub fn degenerate_anti(&self) -> bool {
        self.a == -self.b.clone() && self.c == T::zero()
    }
}

impl<T: Scalar> GeneralParams<T> {
    /// B ≠ 0, or A ≠ 0 and C ≠ 0.
    pub fn admissible(&self) -> bool {
        self.b != T::zero() || (self.a != T::zero() && self.c != T::zero())
    }
}

/// The symmetric and ordered power sums a composition feeds into the forms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sums {
    pub e1: i64,
    pub e2: i64,
    pub e3: i64,
    pub p2: i64,
    pub p3: i64,
    /// Σ_{i<j} x_i x_j²
    pub s12: i64,
    /// Σ_{i<j} x_i² x_j
    pub s21: i64,
}

impl Sums {
    pub fn push(&mut self, y: i64) {
        self.s12 += self.e1 * y * y;
        self.s21 += self.p2 * y;
        self.e3 += self.e2 * y;
        self.e2 += self.e1 * y;
        self.p2 += y * y;
        self.p3 += y * y * y;
        self.e1 += y;
    }

    pub fn of(x: &[u64]) -> Sums {
        let mut s = Sums::default();
        for &v in x {
            s.push(v as i64);
        }
        s
    }
}

pub fn f_lemma32<T: Scalar>(p: &CubicParams<T>, x: &[u64]) -> T {
    eval_lemma32(p, &Sums::of(x))
}

pub(crate) fn eval_lemma32<T: Scalar>(p: &CubicParams<T>, s: &Sums) -> T {
    let f = T::from_i64;
    p.a.clone() * f(s.s12) + p.b.clone() * f(s.s21) + p.c.clone() * f(s.e3) + p.d.clone() * f(s.p2) + p.e.clone() * f(s.e2)
}

pub fn f_general<T: Scalar>(g: &GeneralParams<T>, m: u64, x: &[u64]) -> T {
    eval_general(g, m, &Sums::of(x))
}

pub(crate) fn eval_general<T: Scalar>(g: &GeneralParams<T>, m: u64, s: &Sums) -> T {
    let f = T::from_i64;
    (g.a.clone() * f(m as i64) + g.d.clone()) * f(s.p2) + g.b.clone() * f(s.p3) + g.c.clone() * f(s.s21 - s.s12) + g.e.clone()
}

pub fn transform_params<T: Scalar>(p: &CubicParams<T>, m: u64) -> GeneralParams<T> {
    let f = T::from_i64;
    let mm = f(m as i64);
    let ab = p.a.clone() + p.b.clone();
    GeneralParams {
        a: (ab.clone() - p.c.clone()) / f(2),
        b: p.c.clone() / f(3) - ab / f(2),
        c: (p.b.clone() - p.a.clone()) / f(2),
        d: p.d.clone() - p.e.clone() / f(2),
        e: p.c.clone() / f(6) * mm.clone() * mm.clone() * mm.clone() + p.e.clone() / f(2) * mm.clone() * mm,
    }
}
