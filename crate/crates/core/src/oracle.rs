//! Slow, independent reimplementations used to cross-check the main path.
//!
//! Nothing here calls the span or expansion code of [`crate::trunc_algebra`]
//! or [`crate::geometry`]; only ring indexing and field arithmetic are shared.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::field::PrimeField;
use crate::geometry::{column_monomials, GeometryError, Position, SystemSpec};
use crate::staircase::Staircase;
use crate::trunc_algebra::TruncRing;

/// Row echelon form with pivots searched from the last column down.
/// Returns the pivot columns in the order they were found.
fn echelon_from_right(field: &PrimeField, rows: &mut Vec<Vec<u64>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in (0..ncols).rev() {
        let Some(pr) = (next..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(next, pr);
        let inv = field.inv(rows[next][col]);
        for v in rows[next].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[col] == 0 {
                continue;
            }
            let c = row[col];
            for (v, &p) in row.iter_mut().zip(&pivot_row) {
                *v = field.sub(*v, field.mul(c, p));
            }
        }
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

pub fn rank(field: &PrimeField, vectors: &[Vec<u64>], ncols: usize) -> usize {
    let mut rows = vectors.to_vec();
    echelon_from_right(field, &mut rows, ncols).len()
}

/// Whether two families of vectors span the same subspace of `F_p^ambient`.
pub fn same_span(field: &PrimeField, a: &[Vec<u64>], b: &[Vec<u64>], ambient: usize) -> bool {
    let ra = rank(field, a, ambient);
    let rb = rank(field, b, ambient);
    let both: Vec<Vec<u64>> = a.iter().chain(b).cloned().collect();
    ra == rb && rank(field, &both, ambient) == ra
}

/// `(I : x_1)` for the ideal spanned by `basis`, as the preimage of `I`
/// under multiplication by `x_1`.
pub fn brute_colon(ring: &TruncRing, basis: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let field = ring.field();
    let dim = ring.dim();
    let k = basis.len();
    let ncols = dim + k;
    // Equations: x_1 f - Σ c_j g_j = 0, one per ring monomial.
    let mut eqs = vec![vec![0u64; ncols]; dim];
    let targets: Vec<Option<usize>> = (0..dim)
        .map(|idx| {
            let (b, a) = ring.monomial(idx);
            let mut up = a.to_vec();
            up[0] += 1;
            ring.index(b, &up)
        })
        .collect();
    for (idx, target) in targets.into_iter().enumerate() {
        if let Some(target) = target {
            eqs[target][idx] = 1;
        }
    }
    for (j, g) in basis.iter().enumerate() {
        for (row, &v) in eqs.iter_mut().zip(g) {
            row[dim + j] = field.neg(v);
        }
    }
    let pivots = echelon_from_right(field, &mut eqs, ncols);
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut kernel = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (row, &p) in eqs.iter().zip(&pivots) {
            v[p] = field.neg(row[free]);
        }
        kernel.push(v[..dim].to_vec());
    }
    echelon_from_right(field, &mut kernel, dim);
    kernel
}

/// Every staircase in `ℕ^n` with at most `max_degree` boxes, each once.
pub fn enumerate_staircases(n: usize, max_degree: usize) -> Vec<Staircase> {
    let mut seen: BTreeSet<BTreeSet<Vec<u32>>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(BTreeSet::new());
    queue.push_back(BTreeSet::new());
    let mut out = Vec::new();
    while let Some(boxes) = queue.pop_front() {
        if boxes.len() < max_degree {
            for corner in addable(n, &boxes) {
                let mut bigger = boxes.clone();
                bigger.insert(corner);
                if seen.insert(bigger.clone()) {
                    queue.push_back(bigger);
                }
            }
        }
        out.push(Staircase::from_points(n, boxes).expect("boxes are added at corners"));
    }
    out
}

fn addable(n: usize, boxes: &BTreeSet<Vec<u32>>) -> Vec<Vec<u32>> {
    let mut candidates: BTreeSet<Vec<u32>> = BTreeSet::new();
    candidates.insert(vec![0; n]);
    for b in boxes {
        for j in 0..n {
            let mut c = b.clone();
            c[j] += 1;
            candidates.insert(c);
        }
    }
    candidates
        .into_iter()
        .filter(|c| !boxes.contains(c))
        .filter(|c| {
            (0..n).all(|j| {
                if c[j] == 0 {
                    return true;
                }
                let mut below = c.clone();
                below[j] -= 1;
                boxes.contains(&below)
            })
        })
        .collect()
}

type Poly = BTreeMap<Vec<u32>, u64>;

fn poly_mul(field: &PrimeField, a: &Poly, b: &Poly, cutoff: u32) -> Poly {
    let mut out = Poly::new();
    for (ea, &ca) in a {
        let da: u32 = ea.iter().sum();
        for (eb, &cb) in b {
            if da + eb.iter().sum::<u32>() > cutoff {
                continue;
            }
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert(0);
            *slot = field.add(*slot, field.mul(ca, cb));
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn draw(rng: &mut StdRng, field: &PrimeField) -> u64 {
    rng.gen_range(0..field.modulus())
}

/// Recomputes the projective dimension of `spec` with placements drawn from
/// `seed` by a separate generator, expanding each column by substitution
/// and ranking it in reverse order.
pub fn recompute_dimension(spec: &SystemSpec, seed: u64) -> Result<i64, GeometryError> {
    spec.validate()?;
    let field = spec.prime;
    let n = spec.n;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut columns = column_monomials(n, spec.d, spec.r);
    columns.reverse();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (idx, s) in spec.schemes.iter().enumerate().rev() {
        let mut point: Vec<u64> = match &s.position {
            Position::Explicit(c) if c.len() == n + 1 => {
                let x0 = field.from_i64(c[0]);
                if x0 == 0 {
                    return Err(GeometryError::ChartViolation { scheme: idx });
                }
                let inv = field.inv(x0);
                c[1..]
                    .iter()
                    .map(|&v| field.mul(field.from_i64(v), inv))
                    .collect()
            }
            Position::Explicit(c) => c.iter().map(|&v| field.from_i64(v)).collect(),
            _ => (0..n).map(|_| draw(&mut rng, &field)).collect(),
        };
        if s.position == Position::GenericOnDivisor {
            point[0] = 0;
        }
        let frame: Vec<Vec<u64>> = match (&s.frame, &s.position) {
            (Some(f), _) => f
                .iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
            (None, Position::Explicit(_)) => (0..n)
                .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
                .collect(),
            (None, _) => loop {
                let mut f: Vec<Vec<u64>> = (0..n)
                    .map(|_| (0..n).map(|_| draw(&mut rng, &field)).collect())
                    .collect();
                if s.position == Position::GenericOnDivisor {
                    f[0][1..].iter_mut().for_each(|v| *v = 0);
                }
                if rank(&field, &f, n) == n {
                    break f;
                }
            },
        };
        let exponents: Vec<Vec<u32>> = s
            .staircase
            .points()
            .into_iter()
            .rev()
            .map(|mut a| {
                a[0] += s.offset;
                a
            })
            .collect();
        let cutoff = exponents.iter().map(|a| a.iter().sum()).max().unwrap_or(0);
        // u_i = point_i + Σ_j frame[i][j] x_j
        let linear: Vec<Poly> = (0..n)
            .map(|i| {
                let mut p = Poly::new();
                p.insert(vec![0; n], point[i]);
                for j in 0..n {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    p.insert(e, frame[i][j]);
                }
                p.retain(|_, v| *v != 0);
                p
            })
            .collect();
        let mut cols_expanded = Vec::with_capacity(columns.len());
        for col in &columns {
            let mut acc: Poly = Poly::from([(vec![0; n], 1)]);
            for (i, &k) in col[1..].iter().enumerate() {
                for _ in 0..k {
                    acc = poly_mul(&field, &acc, &linear[i], cutoff);
                }
            }
            cols_expanded.push(acc);
        }
        for a in &exponents {
            rows.push(
                cols_expanded
                    .iter()
                    .map(|p| p.get(a).copied().unwrap_or(0))
                    .collect(),
            );
        }
    }
    let rk = rank(&field, &rows, columns.len());
    Ok(columns.len() as i64 - 1 - rk as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Preset;

    #[test]
    fn staircase_counts() {
        assert_eq!(enumerate_staircases(1, 3).len(), 4);
        let by_degree = |n, d| {
            enumerate_staircases(n, d)
                .iter()
                .filter(|e| e.degree() == d)
                .count()
        };
        assert_eq!(by_degree(2, 2), 2);
        assert_eq!(by_degree(2, 4), 5);
        assert_eq!(by_degree(3, 3), 6);
    }

    #[test]
    fn colon_in_one_variable() {
        let ring = TruncRing::new(1, 1, 3, PrimeField::default());
        let x2 = vec![0, 0, 1];
        let colon = brute_colon(&ring, &[x2]);
        assert!(same_span(
            ring.field(),
            &colon,
            &[vec![0, 1, 0], vec![0, 0, 1]],
            3
        ));
        let unit = brute_colon(&ring, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(unit.len(), 3);
    }

    #[test]
    fn preset_dimensions() {
        let f = PrimeField::default();
        assert_eq!(
            recompute_dimension(&Preset::QuinticIntro.spec(f, 0), 77).unwrap(),
            11
        );
        assert_eq!(
            recompute_dimension(&Preset::SexticIntro.spec(f, 0), 77).unwrap(),
            12
        );
        assert_eq!(
            recompute_dimension(&Preset::ConicSpecial.spec(f, 0), 77).unwrap(),
            0
        );
        assert_eq!(recompute_dimension(&SystemSpec::new(2, 0), 1).unwrap(), 0);
    }
}
