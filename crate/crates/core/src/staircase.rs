//! Finite staircases in `ℕ^n` and their slice calculus.
//!
//! A staircase is a finite subset `E ⊂ ℕ^n` whose complement is stable under
//! adding `ℕ^n`. It is stored through its height function along the first
//! axis: for a tail `(a_2, …, a_n)`, `h_E(tail)` counts the points of `E`
//! with that tail, and `(a_1, tail) ∈ E` iff `a_1 < h_E(tail)`.
//!
//! Slices are indexed from 1: slice `k` is the layer `a_1 = k - 1` moved into
//! the hyperplane `a_1 = 0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StaircaseError {
    #[error("point set is not downward closed: {point:?} is present but {missing:?} is not")]
    NotAStaircase { point: Vec<u32>, missing: Vec<u32> },
    #[error("point {point:?} does not have {expected} coordinates")]
    WrongDimension { point: Vec<u32>, expected: usize },
    #[error("slice indices {0:?} are not strictly decreasing positive integers")]
    BadSliceSequence(Vec<u32>),
    #[error("lattice dimension must be at least 1")]
    ZeroDimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase {
    dim: usize,
    /// Only strictly positive heights are stored.
    heights: BTreeMap<Vec<u32>, u32>,
}

impl Staircase {
    pub fn empty(dim: usize) -> Self {
        assert!(dim >= 1, "staircases live in ℕ^n with n ≥ 1");
        Staircase {
            dim,
            heights: BTreeMap::new(),
        }
    }

    /// Builds the staircase with exactly the given points.
    pub fn from_points<I>(dim: usize, points: I) -> Result<Self, StaircaseError>
    where
        I: IntoIterator<Item = Vec<u32>>,
    {
        if dim == 0 {
            return Err(StaircaseError::ZeroDimension);
        }
        let set: BTreeSet<Vec<u32>> = points.into_iter().collect();
        for p in &set {
            if p.len() != dim {
                return Err(StaircaseError::WrongDimension {
                    point: p.clone(),
                    expected: dim,
                });
            }
            for j in 0..dim {
                if p[j] > 0 {
                    let mut below = p.clone();
                    below[j] -= 1;
                    if !set.contains(&below) {
                        return Err(StaircaseError::NotAStaircase {
                            point: p.clone(),
                            missing: below,
                        });
                    }
                }
            }
        }
        let mut heights = BTreeMap::new();
        for p in &set {
            *heights.entry(p[1..].to_vec()).or_insert(0) += 1;
        }
        Ok(Staircase { dim, heights })
    }

    /// Builds a staircase from a height function given on tails in `ℕ^{n-1}`.
    /// Zero heights may be omitted.
    pub fn from_heights<I>(dim: usize, heights: I) -> Result<Self, StaircaseError>
    where
        I: IntoIterator<Item = (Vec<u32>, u32)>,
    {
        let mut points = Vec::new();
        for (tail, h) in heights {
            if tail.len() + 1 != dim {
                return Err(StaircaseError::WrongDimension {
                    point: tail,
                    expected: dim - 1,
                });
            }
            for a1 in 0..h {
                let mut p = Vec::with_capacity(dim);
                p.push(a1);
                p.extend_from_slice(&tail);
                points.push(p);
            }
        }
        Staircase::from_points(dim, points)
    }

    /// The fat point of size `m`: all `a` with `a_1 + … + a_n < m`.
    pub fn big_point(dim: usize, m: u32) -> Self {
        let mut heights = BTreeMap::new();
        if m > 0 {
            for deg in 0..m {
                for tail in crate::monomials::exponents_of_degree(dim - 1, deg) {
                    heights.insert(tail, m - deg);
                }
            }
        }
        Staircase { dim, heights }
    }

    /// The one-dimensional staircase `{0, …, h - 1}`.
    pub fn segment(h: u32) -> Self {
        let mut heights = BTreeMap::new();
        if h > 0 {
            heights.insert(Vec::new(), h);
        }
        Staircase { dim: 1, heights }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn height(&self, tail: &[u32]) -> u32 {
        self.heights.get(tail).copied().unwrap_or(0)
    }

    /// Nonzero part of the height function.
    pub fn heights(&self) -> &BTreeMap<Vec<u32>, u32> {
        &self.heights
    }

    pub fn max_height(&self) -> u32 {
        self.heights.values().copied().max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        a.len() == self.dim && a[0] < self.height(&a[1..])
    }

    /// Number of lattice points.
    pub fn degree(&self) -> usize {
        self.heights.values().map(|&h| h as usize).sum()
    }

    /// Largest total degree of a point, or `None` when empty.
    pub fn max_total_degree(&self) -> Option<u32> {
        self.heights
            .iter()
            .map(|(tail, h)| h - 1 + tail.iter().sum::<u32>())
            .max()
    }

    /// The points of total degree below `bound`.
    pub fn below_degree(&self, bound: u32) -> Staircase {
        let heights = self
            .heights
            .iter()
            .filter_map(|(tail, &h)| {
                let t: u32 = tail.iter().sum();
                let nh = h.min(bound.saturating_sub(t));
                (nh > 0).then(|| (tail.clone(), nh))
            })
            .collect();
        Staircase {
            dim: self.dim,
            heights,
        }
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> Vec<Vec<u32>> {
        let mut pts: Vec<Vec<u32>> = self
            .heights
            .iter()
            .flat_map(|(tail, &h)| {
                (0..h).map(move |a1| {
                    let mut p = vec![a1];
                    p.extend_from_slice(tail);
                    p
                })
            })
            .collect();
        pts.sort();
        pts
    }

    /// `T(E, k)`: the points `(0, tail)` such that `(k - 1, tail) ∈ E`.
    pub fn slice(&self, k: u32) -> Staircase {
        assert!(k >= 1, "slices are indexed from 1");
        let heights = self
            .heights
            .iter()
            .filter(|(_, &h)| h >= k)
            .map(|(tail, _)| (tail.clone(), 1))
            .collect();
        Staircase {
            dim: self.dim,
            heights,
        }
    }

    /// `S(E, k)`: delete slice `k` and push the boxes above it down.
    pub fn remove_slice(&self, k: u32) -> Staircase {
        assert!(k >= 1, "slices are indexed from 1");
        let heights = self
            .heights
            .iter()
            .filter_map(|(tail, &h)| {
                let nh = if k <= h { h - 1 } else { h };
                (nh > 0).then(|| (tail.clone(), nh))
            })
            .collect();
        Staircase {
            dim: self.dim,
            heights,
        }
    }

    /// `S(E, n_1, …, n_r)` for `n_1 > … > n_r > 0`, removing slices in order.
    pub fn remove_slices(&self, ns: &[u32]) -> Result<Staircase, StaircaseError> {
        validate_slice_sequence(ns)?;
        Ok(ns.iter().fold(self.clone(), |e, &k| e.remove_slice(k)))
    }

    /// Checks `h(a + e_j) ≤ h(a)` on the support and its boundary.
    pub fn is_monotone(&self) -> bool {
        self.heights.iter().all(|(tail, &h)| {
            (0..tail.len()).all(|j| {
                if tail[j] == 0 {
                    return true;
                }
                let mut below = tail.clone();
                below[j] -= 1;
                self.height(&below) >= h
            })
        })
    }

    /// ASCII picture of a planar staircase, first axis horizontal.
    pub fn render(&self) -> String {
        if self.dim != 2 {
            return format!("{self}");
        }
        let rows = self.heights.keys().map(|t| t[0] + 1).max().unwrap_or(0);
        let mut out = String::new();
        for a2 in (0..rows).rev() {
            let h = self.height(&[a2]);
            out.push_str(&"[]".repeat(h as usize));
            out.push('\n');
        }
        out
    }
}

pub fn validate_slice_sequence(ns: &[u32]) -> Result<(), StaircaseError> {
    let ok = ns.iter().all(|&k| k > 0) && ns.windows(2).all(|w| w[0] > w[1]);
    if ok {
        Ok(())
    } else {
        Err(StaircaseError::BadSliceSequence(ns.to_vec()))
    }
}

impl Serialize for Staircase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.points().serialize(serializer)
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points()
            .iter()
            .map(|p| {
                let coords: Vec<String> = p.iter().map(u32::to_string).collect();
                format!("({})", coords.join(","))
            })
            .collect();
        write!(f, "{{{}}}", pts.join(", "))
    }
}
