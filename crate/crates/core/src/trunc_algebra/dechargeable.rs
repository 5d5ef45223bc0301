//! Dechargeable ideals of `k[x_1]/x_1^s ⊗ k[t]/t^q` and their closed-form
//! colon and restriction rules.
//!
//! Generators have the shape `t^α (x_1 - t)^h / x_1^β`. The quotient is taken
//! in `k[x_1, t]/t^q` before truncating `x_1`-degrees at `s`, which makes the
//! notation stable under restriction.

use super::ideal::TruncIdeal;
use super::ring::{TruncElement, TruncRing};
use super::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DechargeableIdeal {
    ring: TruncRing,
    h: u32,
    /// `β_1, …, β_r`
    betas: Vec<u32>,
    /// `α_2, …, α_r`
    alphas: Vec<u32>,
}

impl DechargeableIdeal {
    pub fn new(
        ring: &TruncRing,
        h: u32,
        betas: Vec<u32>,
        alphas: Vec<u32>,
    ) -> Result<Self, AlgebraError> {
        let invalid = |why: String| Err(AlgebraError::InvalidDechargeable(why));
        if ring.n() != 1 {
            return invalid(format!("ring has {} x-variables, expected 1", ring.n()));
        }
        if betas.is_empty() || alphas.len() + 1 != betas.len() {
            return invalid(format!(
                "need r ≥ 1 betas and r - 1 alphas, got {} and {}",
                betas.len(),
                alphas.len()
            ));
        }
        if betas[0] > h {
            return invalid(format!("β_1 = {} exceeds h = {h}", betas[0]));
        }
        let ideal = DechargeableIdeal {
            ring: ring.clone(),
            h,
            betas,
            alphas,
        };
        if ring.q() > ideal.height() && ideal.betas[0] != 0 {
            return invalid(format!(
                "β_1 = {} must vanish when q = {} > H = {}",
                ideal.betas[0],
                ring.q(),
                ideal.height()
            ));
        }
        if let Some(&a) = ideal.alphas.iter().find(|&&a| a == 0) {
            return invalid(format!("α_i = {a} must be at least 1"));
        }
        let gens = ideal.generators()?;
        let q = ring.q();
        for (i, e) in gens.iter().enumerate().skip(1) {
            for p in 1..=q {
                let need = q - p + 1;
                if e.terms().any(|(b, a, _)| b < p && a[0] < need) {
                    return invalid(format!(
                        "x_1^{need} does not divide the t^{p}-restriction of generator {}",
                        i + 1
                    ));
                }
            }
        }
        Ok(ideal)
    }

    /// The principal ideal `((x_1 - t)^h)`, dechargeable of height `h`.
    pub fn principal(ring: &TruncRing, h: u32) -> Result<Self, AlgebraError> {
        DechargeableIdeal::new(ring, h, vec![0], Vec::new())
    }

    pub fn ring(&self) -> &TruncRing {
        &self.ring
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn betas(&self) -> &[u32] {
        &self.betas
    }

    pub fn alphas(&self) -> &[u32] {
        &self.alphas
    }

    /// `H = h - β_1`
    pub fn height(&self) -> u32 {
        self.h - self.betas[0]
    }

    /// `e_1 = (x_1 - t)^h / x_1^{β_1}` and `e_i = t^{α_i} (x_1 - t)^h / x_1^{β_i}`.
    pub fn generators(&self) -> Result<Vec<TruncElement>, AlgebraError> {
        let mut gens = vec![shifted_quotient(&self.ring, 0, self.h, self.betas[0])?];
        for (&alpha, &beta) in self.alphas.iter().zip(&self.betas[1..]) {
            gens.push(shifted_quotient(&self.ring, alpha, self.h, beta)?);
        }
        Ok(gens)
    }

    pub fn ideal(&self) -> Result<TruncIdeal, AlgebraError> {
        Ok(TruncIdeal::generated(&self.ring, self.generators()?))
    }
}

/// `t^α (x_1 - t)^h / x_1^β`, divided in `k[x_1, t]/t^q`, then truncated at
/// `x_1^s`.
pub fn shifted_quotient(
    ring: &TruncRing,
    alpha: u32,
    h: u32,
    beta: u32,
) -> Result<TruncElement, AlgebraError> {
    let field = *ring.field();
    let mut out = TruncElement::zero(ring);
    for k in 0..=h {
        let b = h - k + alpha;
        if b >= ring.q() {
            continue;
        }
        let mut c = field.binomial(h, k);
        if (h - k) % 2 == 1 {
            c = field.neg(c);
        }
        if c == 0 {
            continue;
        }
        if k < beta {
            return Err(AlgebraError::NotDivisible {
                beta,
                detail: format!("term x_1^{k} t^{b} of t^{alpha}(x_1 - t)^{h}"),
            });
        }
        out.add_term(b, &[k - beta], c);
    }
    Ok(out)
}

/// Closed form of `(I : x_1)` for a dechargeable ideal of height `H`:
///
/// * if `q ≤ H`: `(x_1^{s-1}, e_1/x_1, …, e_r/x_1)`;
/// * if `q > H`: `(x_1^{s-1}, e_1, t^{q-h} e_1/x_1, e_2/x_1, …, e_r/x_1)`.
pub fn dechargeable_colon(ideal: &DechargeableIdeal) -> Result<Vec<TruncElement>, AlgebraError> {
    let ring = ideal.ring();
    let q = ring.q();
    let h = ideal.h();
    let mut out = vec![TruncElement::monomial(ring, 1, 0, &[ring.s() - 1])];
    if q <= ideal.height() {
        out.push(shifted_quotient(ring, 0, h, ideal.betas[0] + 1)?);
    } else {
        out.push(shifted_quotient(ring, 0, h, ideal.betas[0])?);
        out.push(shifted_quotient(ring, q - h, h, 1)?);
    }
    for (&alpha, &beta) in ideal.alphas.iter().zip(&ideal.betas[1..]) {
        out.push(shifted_quotient(ring, alpha, h, beta + 1)?);
    }
    Ok(out)
}

/// Dechargeable presentation of `r_{qp}^{su}(I : x_1)` in `A(p, u, 1)`: of
/// height `H - 1` when `q ≤ H`, of height `H` when `q > H`.
pub fn dechargeable_restrict_colon(
    ideal: &DechargeableIdeal,
    p: u32,
    u: u32,
) -> Result<DechargeableIdeal, AlgebraError> {
    let ring = ideal.ring();
    let (q, s) = (ring.q(), ring.s());
    if p == 0 || u == 0 || p >= q || u >= s {
        return Err(AlgebraError::BadTruncation { p, u, q, s });
    }
    let small = TruncRing::new(1, p, u, *ring.field());
    let h = ideal.h();
    if q <= ideal.height() {
        let betas = ideal.betas.iter().map(|b| b + 1).collect();
        DechargeableIdeal::new(&small, h, betas, ideal.alphas.clone())
    } else {
        let mut betas = vec![ideal.betas[0]];
        betas.extend(ideal.betas[1..].iter().map(|b| b + 1));
        betas.push(1);
        let mut alphas = ideal.alphas.clone();
        alphas.push(q - h);
        DechargeableIdeal::new(&small, h, betas, alphas)
    }
}
