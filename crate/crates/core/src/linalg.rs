//! Dense linear algebra over a prime field: rank and canonical row-echelon spans.

use crate::field::PrimeField;

/// Row-major dense matrix over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            m.row_mut(i).copy_from_slice(row);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Rank by Gaussian elimination. The matrix is consumed as scratch space.
    pub fn rank(mut self, field: &PrimeField) -> usize {
        self.eliminate(field).len()
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    ///
    /// After the call, rows `0..pivots.len()` hold the nonzero echelon rows
    /// with unit pivots, and the remaining rows are zero.
    pub fn eliminate(&mut self, field: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(found) = (rank..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            self.swap_rows(rank, found);
            let inv = field.inv(self.get(rank, col));
            for v in self.row_mut(rank)[col..].iter_mut() {
                *v = field.mul(*v, inv);
            }
            let pivot_row: Vec<u64> = self.row(rank)[col..].to_vec();
            for i in 0..self.rows {
                if i == rank {
                    continue;
                }
                let factor = self.get(i, col);
                if factor == 0 {
                    continue;
                }
                let neg = field.neg(factor);
                let row = &mut self.row_mut(i)[col..];
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    if pv != 0 {
                        *v = field.mul_add(*v, neg, pv);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * cols);
        head[lo * cols..(lo + 1) * cols].swap_with_slice(&mut tail[..cols]);
    }
}

/// A linear subspace of `F_p^ambient`, stored in reduced row-echelon form.
///
/// Reduced echelon form is canonical, so two spans are equal exactly when
/// their stored rows are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Span {
    ambient: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn zero(ambient: usize) -> Self {
        Span {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<I>(field: &PrimeField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let vectors: Vec<Vec<u64>> = vectors.into_iter().collect();
        let mut m = Matrix::from_rows(ambient, &vectors);
        let pivots = m.eliminate(field);
        let rows = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Span {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` modulo the span; zero iff `v` lies in the span.
    pub fn reduce(&self, field: &PrimeField, v: &[u64]) -> Vec<u64> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p];
            if c == 0 {
                continue;
            }
            let neg = field.neg(c);
            for (o, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *o = field.mul_add(*o, neg, r);
                }
            }
        }
        out
    }

    pub fn contains(&self, field: &PrimeField, v: &[u64]) -> bool {
        self.reduce(field, v).iter().all(|&c| c == 0)
    }

    pub fn is_subspace_of(&self, field: &PrimeField, other: &Span) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(field, r))
    }

    pub fn sum(&self, field: &PrimeField, other: &Span) -> Span {
        Span::from_vectors(
            field,
            self.ambient,
            self.rows.iter().chain(&other.rows).cloned(),
        )
    }
}
