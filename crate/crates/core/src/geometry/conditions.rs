use serde::{Deserialize, Serialize};

use super::expansion::LocalChart;
use super::spec::SystemSpec;
use super::GeometryError;
use crate::field::PrimeField;
use crate::linalg::Matrix;
use crate::monomials::{binomial, exponents_of_degree};

/// Identifies a row: Taylor coefficient `exponent` at scheme `scheme`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowLabel {
    pub scheme: usize,
    pub exponent: Vec<u32>,
}

/// Conditions imposed on degree-`d` forms divisible by `X_1^r`.
///
/// Columns are the monomials `X^e` with `e_1 ≥ r`; row `(i, a)` is the
/// coefficient of `x^a` in the local expansion at scheme `i`.
#[derive(Debug, Clone)]
pub struct ConditionsMatrix {
    pub field: PrimeField,
    pub columns: Vec<Vec<u32>>,
    pub rows: Vec<RowLabel>,
    pub entries: Matrix,
}

impl ConditionsMatrix {
    pub fn rank(&self) -> usize {
        self.entries.clone().rank(&self.field)
    }
}

/// `{columns, rows, rank, dimension, virtual_dimension}` for a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub columns: usize,
    pub rows: usize,
    pub rank: usize,
    /// Projective dimension; `-1` for the empty system.
    pub dimension: i64,
    pub virtual_dimension: i64,
}

/// Degree-`d` monomials in `X_0, …, X_n` with `X_1`-exponent at least `r`.
pub fn column_monomials(n: usize, d: u32, r: u32) -> Vec<Vec<u32>> {
    exponents_of_degree(n + 1, d)
        .into_iter()
        .filter(|e| e[1] >= r)
        .collect()
}

pub fn column_count(n: usize, d: u32, r: u32) -> usize {
    if r > d {
        0
    } else {
        binomial(n as u64 + (d - r) as u64, n as u64) as usize
    }
}

pub fn conditions_matrix(spec: &SystemSpec) -> Result<ConditionsMatrix, GeometryError> {
    let field = spec.prime;
    let columns = column_monomials(spec.n, spec.d, spec.r);
    let realized = spec.realize()?;
    let total_rows: usize = realized.iter().map(|p| p.exponents.len()).sum();
    let mut entries = Matrix::zeros(total_rows, columns.len());
    let mut rows = Vec::with_capacity(total_rows);
    let mut next = 0;
    for placement in &realized {
        if placement.exponents.is_empty() {
            continue;
        }
        let chart = LocalChart::for_placement(field, placement, spec.d);
        let row_idx: Vec<usize> = placement
            .exponents
            .iter()
            .map(|a| {
                chart
                    .basis()
                    .index_of(a)
                    .expect("cutoff covers the staircase")
            })
            .collect();
        for (j, col) in columns.iter().enumerate() {
            let expansion = chart.expand_monomial(col);
            for (k, &idx) in row_idx.iter().enumerate() {
                entries.set(next + k, j, expansion[idx]);
            }
        }
        for a in &placement.exponents {
            rows.push(RowLabel {
                scheme: placement.scheme,
                exponent: a.clone(),
            });
        }
        next += placement.exponents.len();
    }
    Ok(ConditionsMatrix {
        field,
        columns,
        rows,
        entries,
    })
}

/// `#columns - 1 - Σ degree(E_i)`: a lower bound for the dimension.
pub fn virtual_dimension(spec: &SystemSpec) -> i64 {
    column_count(spec.n, spec.d, spec.r) as i64 - 1 - spec.condition_count() as i64
}

/// Projective dimension of the system at the placements drawn from `seed`.
///
/// Randomly placed schemes are special only on a proper closed subset, so
/// this is the generic dimension except with probability `O(deg / p)`; the
/// computed value is never below the generic one.
pub fn dimension(spec: &SystemSpec) -> Result<DimensionReport, GeometryError> {
    let m = conditions_matrix(spec)?;
    let rank = m.rank();
    Ok(DimensionReport {
        columns: m.columns.len(),
        rows: m.rows.len(),
        rank,
        dimension: m.columns.len() as i64 - 1 - rank as i64,
        virtual_dimension: virtual_dimension(spec),
    })
}
