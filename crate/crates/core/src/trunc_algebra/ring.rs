use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::field::PrimeField;
use crate::monomials::{total_degree, MonomialBasis};

/// `A(q, s, n) = k[t]/t^q ⊗ k[x_1, …, x_n]/𝔪^s` over a prime field.
///
/// The monomial basis is `t^b x^a` with `b < q` and `|a| < s`; basis index is
/// `b * (#x-monomials) + index(a)`.
#[derive(Clone)]
pub struct TruncRing {
    data: Arc<RingData>,
}

struct RingData {
    n: usize,
    q: u32,
    s: u32,
    field: PrimeField,
    xs: MonomialBasis,
}

impl TruncRing {
    pub fn new(n: usize, q: u32, s: u32, field: PrimeField) -> Self {
        assert!(
            n >= 1 && q >= 1 && s >= 1,
            "ring parameters must be positive"
        );
        TruncRing {
            data: Arc::new(RingData {
                n,
                q,
                s,
                field,
                xs: MonomialBasis::below(n, s),
            }),
        }
    }

    pub fn n(&self) -> usize {
        self.data.n
    }

    pub fn q(&self) -> u32 {
        self.data.q
    }

    pub fn s(&self) -> u32 {
        self.data.s
    }

    pub fn field(&self) -> &PrimeField {
        &self.data.field
    }

    pub fn x_monomials(&self) -> &MonomialBasis {
        &self.data.xs
    }

    /// Vector-space dimension, `q · C(n + s - 1, n)`.
    pub fn dim(&self) -> usize {
        self.data.q as usize * self.data.xs.len()
    }

    pub fn index(&self, b: u32, a: &[u32]) -> Option<usize> {
        if b >= self.q() {
            return None;
        }
        let ai = self.data.xs.index_of(a)?;
        Some(b as usize * self.data.xs.len() + ai)
    }

    /// `(b, a)` for a basis index.
    pub fn monomial(&self, idx: usize) -> (u32, &[u32]) {
        let nx = self.data.xs.len();
        ((idx / nx) as u32, self.data.xs.exponent(idx % nx))
    }

    /// Index of the product of two basis monomials, `None` if it vanishes.
    pub fn product_index(&self, i: usize, j: usize) -> Option<usize> {
        let nx = self.data.xs.len();
        let b = i / nx + j / nx;
        if b >= self.q() as usize {
            return None;
        }
        let a = self.data.xs.product_index(i % nx, j % nx)?;
        Some(b * nx + a)
    }

    /// Index of `x_var · m` for the basis monomial `m`.
    pub fn times_x(&self, var: usize, idx: usize) -> Option<usize> {
        let (b, a) = self.monomial(idx);
        let mut a = a.to_vec();
        a[var] += 1;
        self.index(b, &a)
    }

    /// Index of `t · m` for the basis monomial `m`.
    pub fn times_t(&self, idx: usize) -> Option<usize> {
        let (b, a) = self.monomial(idx);
        self.index(b + 1, a)
    }

    /// Product of a dense vector with the basis monomial `m`.
    pub fn shift(&self, v: &[u64], m: usize) -> Vec<u64> {
        let mut out = vec![0; self.dim()];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                if let Some(j) = self.product_index(i, m) {
                    out[j] = c;
                }
            }
        }
        out
    }

    pub fn same_as(&self, other: &TruncRing) -> bool {
        self.n() == other.n()
            && self.q() == other.q()
            && self.s() == other.s()
            && self.field() == other.field()
    }
}

impl fmt::Debug for TruncRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A(q={}, s={}, n={}, p={})",
            self.q(),
            self.s(),
            self.n(),
            self.field().modulus()
        )
    }
}

impl PartialEq for TruncRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for TruncRing {}

/// An element of a truncated ring, as a sparse map `(b, a) ↦ coefficient`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncElement {
    ring: TruncRing,
    coeffs: BTreeMap<(u32, Vec<u32>), u64>,
}

impl TruncElement {
    pub fn zero(ring: &TruncRing) -> Self {
        TruncElement {
            ring: ring.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// `c · t^b x^a`; zero if the monomial is truncated away.
    pub fn monomial(ring: &TruncRing, c: u64, b: u32, a: &[u32]) -> Self {
        let mut e = TruncElement::zero(ring);
        e.add_term(b, a, c);
        e
    }

    pub fn one(ring: &TruncRing) -> Self {
        TruncElement::monomial(ring, 1, 0, &vec![0; ring.n()])
    }

    pub fn x(ring: &TruncRing, var: usize) -> Self {
        let mut a = vec![0; ring.n()];
        a[var] = 1;
        TruncElement::monomial(ring, 1, 0, &a)
    }

    pub fn t(ring: &TruncRing) -> Self {
        TruncElement::monomial(ring, 1, 1, &vec![0; ring.n()])
    }

    /// `x_1 - t`, the image of `x_1` under the translation morphism.
    pub fn translated_x1(ring: &TruncRing) -> Self {
        TruncElement::x(ring, 0).sub(&TruncElement::t(ring))
    }

    pub fn ring(&self) -> &TruncRing {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &[u32], u64)> {
        self.coeffs.iter().map(|((b, a), &c)| (*b, a.as_slice(), c))
    }

    pub fn coeff(&self, b: u32, a: &[u32]) -> u64 {
        self.coeffs.get(&(b, a.to_vec())).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · t^b x^a`, silently dropping monomials outside the ring.
    pub fn add_term(&mut self, b: u32, a: &[u32], c: u64) {
        if b >= self.ring.q() || total_degree(a) >= self.ring.s() {
            return;
        }
        let f = *self.ring.field();
        let c = f.reduce(c);
        if c == 0 {
            return;
        }
        let key = (b, a.to_vec());
        let entry = self.coeffs.entry(key.clone()).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.ring.same_as(&other.ring));
        let mut out = self.clone();
        for (b, a, c) in other.terms() {
            out.add_term(b, a, c);
        }
        out
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = *self.ring.field();
        let mut out = TruncElement::zero(&self.ring);
        for (b, a, v) in self.terms() {
            out.add_term(b, a, f.mul(v, c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = *self.ring.field();
        self.add(&other.scale(f.neg(1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.ring.same_as(&other.ring));
        let f = *self.ring.field();
        let mut out = TruncElement::zero(&self.ring);
        for (b1, a1, c1) in self.terms() {
            for (b2, a2, c2) in other.terms() {
                let a: Vec<u32> = a1.iter().zip(a2).map(|(x, y)| x + y).collect();
                out.add_term(b1 + b2, &a, f.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(TruncElement::one(&self.ring), |acc, _| acc.mul(self))
    }

    pub fn to_dense(&self) -> Vec<u64> {
        let mut v = vec![0; self.ring.dim()];
        for (b, a, c) in self.terms() {
            let i = self.ring.index(b, a).expect("term inside ring");
            v[i] = c;
        }
        v
    }

    pub fn from_dense(ring: &TruncRing, v: &[u64]) -> Self {
        let mut e = TruncElement::zero(ring);
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                let (b, a) = ring.monomial(i);
                e.add_term(b, a, c);
            }
        }
        e
    }
}

impl fmt::Debug for TruncElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms()
            .map(|(b, a, c)| format!("{c}·t^{b}·x^{a:?}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Coefficients are printed in `(-p/2, p/2]`.
impl fmt::Display for TruncElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let p = self.ring.field().modulus();
        let n = self.ring.n();
        let mut first = true;
        for (b, a, c) in self.terms() {
            let (neg, mag) = if c > p / 2 { (true, p - c) } else { (false, c) };
            let mut factors = Vec::new();
            if b > 0 {
                factors.push(if b == 1 {
                    "t".to_string()
                } else {
                    format!("t^{b}")
                });
            }
            for (j, &k) in a.iter().enumerate() {
                let var = if n == 1 {
                    "x".to_string()
                } else {
                    format!("x{}", j + 1)
                };
                match k {
                    0 => {}
                    1 => factors.push(var),
                    _ => factors.push(format!("{var}^{k}")),
                }
            }
            let body = match (mag, factors.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => factors.join("*"),
                _ => format!("{mag}*{}", factors.join("*")),
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Debug dump format: a list of `(b, a, coefficient)` triples.
impl Serialize for TruncElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let triples: Vec<(u32, &[u32], u64)> = self.terms().collect();
        triples.serialize(serializer)
    }
}
