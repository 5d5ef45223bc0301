//! Taylor expansion of dehomogenized forms in a local frame.
//!
//! With affine coordinates `u_i = X_i / X_0` and a placement `u = c + A x`,
//! the form `F` becomes `f(c + A x)`; its coefficient on `x^a` is the local
//! functional attached to the lattice point `a`. Everything is polynomial
//! arithmetic over `F_p`, truncated above the cutoff degree.

use std::collections::BTreeMap;

use super::spec::RealizedPlacement;
use super::GeometryError;
use crate::field::PrimeField;
use crate::monomials::MonomialBasis;

/// A homogeneous form of degree `d` in `X_0, …, X_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    n: usize,
    d: u32,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl Form {
    pub fn new<I>(n: usize, terms: I) -> Result<Self, GeometryError>
    where
        I: IntoIterator<Item = (Vec<u32>, u64)>,
    {
        let terms: BTreeMap<Vec<u32>, u64> = terms.into_iter().filter(|(_, c)| *c != 0).collect();
        let mut degrees = terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degrees.next().unwrap_or(0);
        if terms.keys().any(|e| e.len() != n + 1) || degrees.any(|k| k != d) {
            return Err(GeometryError::NotHomogeneous);
        }
        Ok(Form { n, d, terms })
    }

    pub fn monomial(exponent: Vec<u32>) -> Self {
        let n = exponent.len() - 1;
        Form::new(n, [(exponent, 1)]).expect("a monomial is homogeneous")
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.terms
    }
}

/// Precomputed powers of the local linear forms `c_i + Σ_j A_ij x_j`.
pub struct LocalChart {
    field: PrimeField,
    basis: MonomialBasis,
    table: Vec<u32>,
    /// `powers[i][k]` is the dense expansion of `u_{i+1}^k`.
    powers: Vec<Vec<Vec<u64>>>,
}

const OUTSIDE: u32 = u32::MAX;

impl LocalChart {
    pub fn new(field: PrimeField, point: &[u64], frame: &[Vec<u64>], d: u32, cutoff: u32) -> Self {
        let n = point.len();
        let basis = MonomialBasis::below(n, cutoff + 1);
        let len = basis.len();
        let mut table = vec![OUTSIDE; len * len];
        for i in 0..len {
            for j in 0..len {
                if let Some(k) = basis.product_index(i, j) {
                    table[i * len + j] = k as u32;
                }
            }
        }
        let mut chart = LocalChart {
            field,
            basis,
            table,
            powers: Vec::with_capacity(n),
        };
        for i in 0..n {
            let mut linear = vec![0; len];
            linear[0] = point[i];
            if cutoff >= 1 {
                for j in 0..n {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    let idx = chart
                        .basis
                        .index_of(&e)
                        .expect("degree one is in the basis");
                    linear[idx] = frame[i][j];
                }
            }
            let mut pows = Vec::with_capacity(d as usize + 1);
            let mut one = vec![0; len];
            one[0] = 1;
            pows.push(one);
            for k in 1..=d as usize {
                let next = chart.mul(&pows[k - 1], &linear);
                pows.push(next);
            }
            chart.powers.push(pows);
        }
        chart
    }

    pub fn for_placement(field: PrimeField, placement: &RealizedPlacement, d: u32) -> Self {
        let cutoff = placement
            .exponents
            .iter()
            .map(|a| a.iter().sum::<u32>())
            .max()
            .unwrap_or(0);
        LocalChart::new(field, &placement.point, &placement.frame, d, cutoff)
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let len = self.basis.len();
        let mut out = vec![0u64; len];
        for (i, &ca) in a.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            let row = &self.table[i * len..(i + 1) * len];
            for (j, &cb) in b.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                let k = row[j];
                if k != OUTSIDE {
                    let k = k as usize;
                    out[k] = self.field.mul_add(out[k], ca, cb);
                }
            }
        }
        out
    }

    /// Dense expansion of the dehomogenized monomial `X^e`,
    /// `e = (e_0, e_1, …, e_n)`.
    pub fn expand_monomial(&self, e: &[u32]) -> Vec<u64> {
        let mut acc: Option<Vec<u64>> = None;
        for (i, &k) in e[1..].iter().enumerate() {
            if k == 0 {
                continue;
            }
            let p = &self.powers[i][k as usize];
            acc = Some(match acc {
                None => p.clone(),
                Some(a) => self.mul(&a, p),
            });
        }
        acc.unwrap_or_else(|| self.powers[0][0].clone())
    }
}

/// Exact Taylor coefficients of `form` at a realized placement, up to total
/// degree `cutoff`. Zero coefficients are omitted.
pub fn local_expansion(
    field: PrimeField,
    form: &Form,
    placement: &RealizedPlacement,
    cutoff: u32,
) -> BTreeMap<Vec<u32>, u64> {
    let chart = LocalChart::new(
        field,
        &placement.point,
        &placement.frame,
        form.degree(),
        cutoff,
    );
    let mut dense = vec![0u64; chart.basis().len()];
    for (e, &c) in form.terms() {
        for (acc, v) in dense.iter_mut().zip(chart.expand_monomial(e)) {
            *acc = field.mul_add(*acc, c, v);
        }
    }
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c != 0)
        .map(|(i, c)| (chart.basis().exponent(i).to_vec(), c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn placement(point: Vec<u64>, frame: Vec<Vec<u64>>) -> RealizedPlacement {
        RealizedPlacement {
            scheme: 0,
            point,
            frame,
            exponents: Vec::new(),
        }
    }

    fn id2() -> Vec<Vec<u64>> {
        vec![vec![1, 0], vec![0, 1]]
    }

    #[test]
    fn linear_form_at_origin() {
        let f = PrimeField::default();
        let form = Form::monomial(vec![1, 0, 1]);
        let exp = local_expansion(f, &form, &placement(vec![0, 0], id2()), 3);
        assert_eq!(exp, BTreeMap::from([(vec![0, 1], 1)]));
    }

    #[test]
    fn square_of_divisor_equation() {
        let f = PrimeField::default();
        let form = Form::monomial(vec![0, 2, 0]);
        let exp = local_expansion(f, &form, &placement(vec![0, 5], id2()), 4);
        assert_eq!(exp, BTreeMap::from([(vec![2, 0], 1)]));
    }

    #[test]
    fn translation_shifts_constant_term() {
        let f = PrimeField::default();
        let form = Form::monomial(vec![0, 0, 1]);
        let exp = local_expansion(f, &form, &placement(vec![0, 7], id2()), 2);
        assert_eq!(exp, BTreeMap::from([(vec![0, 0], 7), (vec![0, 1], 1)]));
    }

    #[test]
    fn frame_mixes_coordinates() {
        let f = PrimeField::new(101).unwrap();
        // u2 = 3 x1 + x2 at the origin; X2^2 -> 9 x1^2 + 6 x1 x2 + x2^2
        let frame = vec![vec![1, 0], vec![3, 1]];
        let form = Form::monomial(vec![0, 0, 2]);
        let exp = local_expansion(f, &form, &placement(vec![0, 0], frame), 2);
        assert_eq!(
            exp,
            BTreeMap::from([(vec![2, 0], 9), (vec![1, 1], 6), (vec![0, 2], 1)])
        );
    }

    #[test]
    fn rejects_inhomogeneous_forms() {
        assert_eq!(
            Form::new(1, [(vec![1, 0], 1), (vec![2, 0], 1)]),
            Err(GeometryError::NotHomogeneous)
        );
    }
}
