//! Enumeration and indexing of monomials `x^a` with bounded total degree.

use std::collections::HashMap;

/// All exponent vectors in `ℕ^n` with total degree `< bound`, ordered by
/// total degree and then lexicographically.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    nvars: usize,
    bound: u32,
    exps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl MonomialBasis {
    pub fn below(nvars: usize, bound: u32) -> Self {
        let mut exps = Vec::new();
        for deg in 0..bound {
            exps.extend(exponents_of_degree(nvars, deg));
        }
        let index = exps
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        MonomialBasis {
            nvars,
            bound,
            exps,
            index,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: usize) -> &[u32] {
        &self.exps[i]
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exps
    }

    pub fn index_of(&self, a: &[u32]) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Index of `x^a * x^b`, or `None` if the product leaves the basis.
    pub fn product_index(&self, a: usize, b: usize) -> Option<usize> {
        let prod: Vec<u32> = self.exps[a]
            .iter()
            .zip(&self.exps[b])
            .map(|(x, y)| x + y)
            .collect();
        self.index_of(&prod)
    }
}

/// Exponent vectors of `nvars` variables with total degree exactly `deg`,
/// in lexicographically decreasing order of the first coordinate first.
pub fn exponents_of_degree(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if deg == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in exponents_of_degree(nvars - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn total_degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
