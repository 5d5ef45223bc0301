use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::ring::{TruncElement, TruncRing};
use super::AlgebraError;
use crate::field::PrimeField;
use crate::linalg::{Matrix, Span};
use crate::monomials::{exponents_of_degree, total_degree};
use crate::staircase::Staircase;

/// An ideal of a truncated ring, kept as the echelon basis of its underlying
/// vector space. Equality and inclusion are decided on that basis only.
#[derive(Clone)]
pub struct TruncIdeal {
    ring: TruncRing,
    generators: Vec<TruncElement>,
    span: Span,
}

impl TruncIdeal {
    /// The ideal generated by `generators`: the span of all their monomial
    /// multiples.
    pub fn generated(ring: &TruncRing, generators: Vec<TruncElement>) -> Self {
        let field = *ring.field();
        let dense: Vec<Vec<u64>> = generators.iter().map(TruncElement::to_dense).collect();
        let multiples = dense
            .iter()
            .flat_map(|g| (0..ring.dim()).map(move |m| ring.shift(g, m)));
        let span = Span::from_vectors(&field, ring.dim(), multiples);
        TruncIdeal {
            ring: ring.clone(),
            generators,
            span,
        }
    }

    /// Wraps a span already known to be stable under multiplication.
    pub(crate) fn from_span(ring: &TruncRing, span: Span) -> Self {
        let generators = span
            .basis()
            .iter()
            .map(|v| TruncElement::from_dense(ring, v))
            .collect();
        let ideal = TruncIdeal {
            ring: ring.clone(),
            generators,
            span,
        };
        debug_assert!(ideal.is_closed());
        ideal
    }

    pub fn ring(&self) -> &TruncRing {
        &self.ring
    }

    pub fn generators(&self) -> &[TruncElement] {
        &self.generators
    }

    pub fn span(&self) -> &Span {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn contains(&self, e: &TruncElement) -> bool {
        self.span.contains(self.ring.field(), &e.to_dense())
    }

    pub fn contains_one(&self) -> bool {
        self.contains(&TruncElement::one(&self.ring))
    }

    pub fn is_subset_of(&self, other: &TruncIdeal) -> bool {
        self.ring.same_as(&other.ring) && self.span.is_subspace_of(self.ring.field(), &other.span)
    }

    /// Checks that the span is stable under every `x_i` and under `t`.
    pub fn is_closed(&self) -> bool {
        let ring = &self.ring;
        let field = ring.field();
        self.span.basis().iter().all(|v| {
            let mut images = Vec::with_capacity(ring.n() + 1);
            for var in 0..ring.n() {
                images.push(map_basis(v, ring.dim(), |i| ring.times_x(var, i)));
            }
            images.push(map_basis(v, ring.dim(), |i| ring.times_t(i)));
            images.iter().all(|w| self.span.contains(field, w))
        })
    }
}

impl PartialEq for TruncIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.span == other.span
    }
}

impl Eq for TruncIdeal {}

impl fmt::Debug for TruncIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncIdeal")
            .field("ring", &self.ring)
            .field("dim", &self.dim())
            .field("generators", &self.generators)
            .finish()
    }
}

fn map_basis<F>(v: &[u64], dim: usize, f: F) -> Vec<u64>
where
    F: Fn(usize) -> Option<usize>,
{
    let mut out = vec![0; dim];
    for (i, &c) in v.iter().enumerate() {
        if c != 0 {
            if let Some(j) = f(i) {
                out[j] = c;
            }
        }
    }
    out
}

/// `I^E`: the ideal spanned by the monomials `t^b x^a` with `a ∉ E`.
pub fn monomial_ideal(e: &Staircase, q: u32, s: u32, field: PrimeField) -> TruncIdeal {
    let ring = TruncRing::new(e.dim(), q, s, field);
    monomial_ideal_in(&ring, e)
}

pub(crate) fn monomial_ideal_in(ring: &TruncRing, e: &Staircase) -> TruncIdeal {
    assert_eq!(ring.n(), e.dim(), "staircase and ring dimensions differ");
    let field = *ring.field();
    let vectors = (0..ring.dim()).filter_map(|i| {
        let (_, a) = ring.monomial(i);
        (!e.contains(a)).then(|| {
            let mut v = vec![0; ring.dim()];
            v[i] = 1;
            v
        })
    });
    let span = Span::from_vectors(&field, ring.dim(), vectors);
    TruncIdeal::from_span(ring, span)
}

/// `J(E, q, s)`, the image of the translated ideal `T(I^E)`.
///
/// Generated by `(x_1 - t)^{h_E(α)} x_2^{α_2} … x_n^{α_n}` for every tail `α`
/// with `|α| < s`; tails outside the support give pure monomials.
pub fn translated_ideal(e: &Staircase, q: u32, s: u32, field: PrimeField) -> TruncIdeal {
    let ring = TruncRing::new(e.dim(), q, s, field);
    let shifted = TruncElement::translated_x1(&ring);
    let mut generators = Vec::new();
    for deg in 0..s {
        for tail in exponents_of_degree(e.dim() - 1, deg) {
            let mut a = vec![0];
            a.extend_from_slice(&tail);
            let x_tail = TruncElement::monomial(&ring, 1, 0, &a);
            generators.push(shifted.pow(e.height(&tail)).mul(&x_tail));
        }
    }
    TruncIdeal::generated(&ring, generators)
}

/// `(I : x_1)`, computed as the preimage of `I` under multiplication by `x_1`.
pub fn colon_x1(ideal: &TruncIdeal) -> TruncIdeal {
    let ring = ideal.ring();
    let field = *ring.field();
    let dim = ring.dim();
    // rows [residue(x_1 e_j) | e_j]; rows with vanishing residue part span the preimage
    let mut m = Matrix::zeros(dim, 2 * dim);
    for j in 0..dim {
        if let Some(k) = ring.times_x(0, j) {
            let mut v = vec![0; dim];
            v[k] = 1;
            let residue = ideal.span().reduce(&field, &v);
            m.row_mut(j)[..dim].copy_from_slice(&residue);
        }
        m.set(j, dim + j, 1);
    }
    let pivots = m.eliminate(&field);
    let kernel = pivots
        .iter()
        .enumerate()
        .filter(|(_, &p)| p >= dim)
        .map(|(i, _)| m.row(i)[dim..].to_vec());
    let span = Span::from_vectors(&field, dim, kernel);
    TruncIdeal::from_span(ring, span)
}

/// Image of `I` under the projection `r_{q p}^{s u}` onto `A(p, u, n)`.
pub fn restrict(ideal: &TruncIdeal, p: u32, u: u32) -> Result<TruncIdeal, AlgebraError> {
    let ring = ideal.ring();
    if p == 0 || u == 0 || p > ring.q() || u > ring.s() {
        return Err(AlgebraError::BadTruncation {
            p,
            u,
            q: ring.q(),
            s: ring.s(),
        });
    }
    let small = TruncRing::new(ring.n(), p, u, *ring.field());
    let targets: Vec<Option<usize>> = (0..ring.dim())
        .map(|i| {
            let (b, a) = ring.monomial(i);
            small.index(b, a)
        })
        .collect();
    let images = ideal.span().basis().iter().map(|v| {
        let mut w = vec![0; small.dim()];
        for (i, &c) in v.iter().enumerate() {
            if let Some(j) = targets[i] {
                w[j] = c;
            }
        }
        w
    });
    let span = Span::from_vectors(small.field(), small.dim(), images);
    Ok(TruncIdeal::from_span(&small, span))
}

/// Decides the recursive "ideal of staircase `E`" property:
///
/// * for `q = 1`, `J = I^E`;
/// * for `q > 1`, `J ⊆ I^{T(E, q)}` and, for all `0 < p < q`, `0 < u < s`,
///   `r_{qp}^{su}(J : x_1)` is an ideal of staircase `S(E, q)`.
///
/// Every pair `(p, u)` is checked. The recursion is memoized on echelon
/// spans; it is meant for small rings (`q · s ≤ 25`).
pub fn is_staircase_ideal(j: &TruncIdeal, e: &Staircase) -> bool {
    StaircaseIdealChecker::default().check(j, e)
}

/// Memo table for [`is_staircase_ideal`], reusable across many queries.
#[derive(Default)]
pub struct StaircaseIdealChecker {
    memo: HashMap<(u32, u32, Span, Staircase), bool>,
}

impl StaircaseIdealChecker {
    pub fn check(&mut self, j: &TruncIdeal, e: &Staircase) -> bool {
        let ring = j.ring();
        if ring.n() != e.dim() {
            return false;
        }
        let key = (ring.q(), ring.s(), j.span().clone(), e.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let verdict = self.evaluate(j, e);
        self.memo.insert(key, verdict);
        verdict
    }

    fn evaluate(&mut self, j: &TruncIdeal, e: &Staircase) -> bool {
        let ring = j.ring();
        let (q, s) = (ring.q(), ring.s());
        if q == 1 {
            return *j == monomial_ideal_in(ring, e);
        }
        if !j.is_subset_of(&monomial_ideal_in(ring, &e.slice(q))) {
            return false;
        }
        let colon = colon_x1(j);
        let residual = e.remove_slice(q);
        for p in 1..q {
            for u in 1..s {
                let restricted = restrict(&colon, p, u).expect("p < q and u < s");
                if !self.check(&restricted, &residual) {
                    return false;
                }
            }
        }
        true
    }
}

/// Splits `J(E, q, s)` into its graded parts: for each tail `α` with
/// `|α| < s`, the ideal of `k[x_1]/x_1^{s-|α|} ⊗ k[t]/t^q` generated by
/// `(x_1 - t)^{h_E(α)}`.
///
/// For `n = 1` the only tail is the empty one and the single part is `J`.
pub fn graded_decomposition(
    e: &Staircase,
    q: u32,
    s: u32,
    field: PrimeField,
) -> BTreeMap<Vec<u32>, TruncIdeal> {
    let mut parts = BTreeMap::new();
    for deg in 0..s {
        for tail in exponents_of_degree(e.dim() - 1, deg) {
            let part = translated_ideal(&Staircase::segment(e.height(&tail)), q, s - deg, field);
            parts.insert(tail, part);
        }
    }
    parts
}

/// Embeds graded parts into `A(q, s, n)` by `m ↦ m · x_2^{α_2} … x_n^{α_n}`
/// and returns the span of the direct sum.
pub fn assemble_graded(ring: &TruncRing, parts: &BTreeMap<Vec<u32>, TruncIdeal>) -> Span {
    let mut vectors = Vec::new();
    for (tail, part) in parts {
        let pr = part.ring();
        for v in part.span().basis() {
            let mut w = vec![0; ring.dim()];
            for (i, &c) in v.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (b, a1) = pr.monomial(i);
                let mut a = vec![a1[0]];
                a.extend_from_slice(tail);
                debug_assert!(total_degree(&a) < ring.s());
                let k = ring.index(b, &a).expect("graded part embeds into the ring");
                w[k] = c;
            }
            vectors.push(w);
        }
    }
    Span::from_vectors(ring.field(), ring.dim(), vectors)
}
