//! Upper bounds for dimensions of linear systems by specializing one monomial
//! scheme onto `D = {X_1 = 0}` and trading slices of its staircase for
//! copies of `D`.
//!
//! A step moves the generic scheme `X(E)` to a generic point of `D`. If for
//! every `i` the system `L(-(i-1)D - Z_{n_i})` equals `L(-iD)`, where
//! `Z_k` is the slice `T(E, k)` placed on `D`, then
//!
//! ```text
//! dim L(-X(E)) ≤ dim L(-rD - X(S(E, n_1, …, n_r)))
//! ```
//!
//! The residual scheme is read on `F / X_1^r`, which is what a placement
//! offset of `r` encodes. Each equality is decided by two rank computations
//! at a random placement and holds generically once it holds there. Every
//! randomized dimension is at least the generic dimension, so the leaf of a
//! chain of steps is an upper bound, and `max(virtual_dimension, -1)` is the
//! lower bound it is compared against.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    column_count, dimension, virtual_dimension, GeometryError, Position, SchemePlacement,
    SystemSpec,
};
use crate::staircase::{validate_slice_sequence, Staircase, StaircaseError};

/// Slice sequences tried by [`Strategy::Auto`] use slice indices up to this.
pub const AUTO_MAX_SLICE: u32 = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HoraceError {
    #[error("hypothesis {i} fails for slice {n_i}: dim L(-(i-1)D - Z) = {dim_lhs} but dim L(-iD) = {dim_rhs}")]
    HypothesisFailed {
        i: u32,
        n_i: u32,
        dim_lhs: i64,
        dim_rhs: i64,
    },
    #[error(
        "slices must be a non-empty strictly decreasing sequence of positive integers, got {0:?}"
    )]
    BadSliceSequence(Vec<u32>),
    #[error("scheme {index} is not in generic position and cannot be moved")]
    NotGeneric { index: usize },
    #[error("no scheme with index {index}")]
    NoSuchScheme { index: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl From<StaircaseError> for HoraceError {
    fn from(e: StaircaseError) -> Self {
        match e {
            StaircaseError::BadSliceSequence(ns) => HoraceError::BadSliceSequence(ns),
            other => HoraceError::Geometry(other.into()),
        }
    }
}

/// The two dimensions compared by one slice hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisEvidence {
    pub i: u32,
    pub n_i: u32,
    pub dim_lhs: i64,
    pub dim_rhs: i64,
    pub holds: bool,
    pub seed: u64,
}

/// Condition and column counts before and after a step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bookkeeping {
    pub conditions_before: usize,
    pub conditions_after: usize,
    pub slice_conditions: usize,
    pub columns_before: usize,
    pub columns_after: usize,
    pub virtual_dimension_before: i64,
    pub virtual_dimension_after: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoraceStep {
    pub moving_index: usize,
    pub slices: Vec<u32>,
    pub hypotheses: Vec<HypothesisEvidence>,
    pub residual_spec: SystemSpec,
    pub bookkeeping: Bookkeeping,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leaf {
    pub dimension: i64,
    pub rank: usize,
    pub columns: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Proven,
    UpperBoundOnly,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub initial_spec: SystemSpec,
    pub steps: Vec<HoraceStep>,
    pub leaf: Leaf,
    pub virtual_dimension: i64,
    pub lower_bound: i64,
    pub claimed_dimension: i64,
    pub status: Status,
    pub prime: u64,
    pub seeds: Vec<u64>,
    pub caveat: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// Apply these `(moving_index, slices)` steps in order.
    Explicit(Vec<(usize, Vec<u32>)>),
    /// Search slice sequences of every generic scheme, fewest slices first.
    Auto,
}

const CAVEAT: &str = "dimensions are ranks over F_p at random placements; each is at least the \
generic characteristic-zero dimension, and equal to it outside a set of probability O(deg/p)";

/// splitmix64 finalizer, used to derive independent stage seeds.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn derive_seed(seed: u64, tag: u64, i: u64) -> u64 {
    mix(mix(seed ^ mix(tag)) ^ i)
}

const TAG_HYPOTHESIS: u64 = 1;
const TAG_RESIDUAL: u64 = 2;

fn moving_scheme(spec: &SystemSpec, index: usize) -> Result<&SchemePlacement, HoraceError> {
    let s = spec
        .schemes
        .get(index)
        .ok_or(HoraceError::NoSuchScheme { index })?;
    if !s.is_generic() || s.offset != 0 {
        return Err(HoraceError::NotGeneric { index });
    }
    Ok(s)
}

/// `spec` without the moving scheme, every other random placement fixed.
fn pinned_base(spec: &SystemSpec, index: usize) -> Result<SystemSpec, HoraceError> {
    let mut base = spec.pinned_except(Some(index))?;
    base.schemes.remove(index);
    Ok(base)
}

fn hypothesis_on_base(
    base: &SystemSpec,
    e: &Staircase,
    i: u32,
    n_i: u32,
    seed: u64,
) -> Result<HypothesisEvidence, HoraceError> {
    let mut lhs = base.clone();
    lhs.r = base.r.max(i - 1);
    lhs.seed = seed;
    lhs.schemes
        .push(SchemePlacement::generic_on_divisor(e.slice(n_i)).with_offset(i - 1));
    let mut rhs = base.clone();
    rhs.r = base.r.max(i);
    rhs.seed = seed;
    let dim_lhs = dimension(&lhs)?.dimension;
    let dim_rhs = dimension(&rhs)?.dimension;
    Ok(HypothesisEvidence {
        i,
        n_i,
        dim_lhs,
        dim_rhs,
        holds: dim_lhs == dim_rhs,
        seed,
    })
}

/// Compares `dim L(-(i-1)D - Z_{n_i})` with `dim L(-iD)`, where `L` is the
/// system of `spec` without the moving scheme.
pub fn check_hypothesis(
    spec: &SystemSpec,
    moving_index: usize,
    i: u32,
    n_i: u32,
) -> Result<HypothesisEvidence, HoraceError> {
    if i == 0 || n_i == 0 {
        return Err(HoraceError::BadSliceSequence(vec![n_i]));
    }
    let e = moving_scheme(spec, moving_index)?.staircase.clone();
    let base = pinned_base(spec, moving_index)?;
    let seed = derive_seed(spec.seed, TAG_HYPOTHESIS, ((i as u64) << 32) | n_i as u64);
    hypothesis_on_base(&base, &e, i, n_i, seed)
}

fn residual_of(
    spec: &SystemSpec,
    moving_index: usize,
    slices: &[u32],
) -> Result<SystemSpec, HoraceError> {
    let e = &spec.schemes[moving_index].staircase;
    let mut residual = spec.pinned_except(Some(moving_index))?;
    let r = slices.len() as u32;
    residual.r = spec.r.max(r);
    residual.seed = derive_seed(spec.seed, TAG_RESIDUAL, moving_index as u64);
    residual.schemes[moving_index] = SchemePlacement {
        staircase: e.remove_slices(slices)?,
        position: Position::GenericOnDivisor,
        frame: None,
        offset: r,
    };
    Ok(residual)
}

fn bookkeeping(
    spec: &SystemSpec,
    residual: &SystemSpec,
    slices: &[u32],
    e: &Staircase,
) -> Bookkeeping {
    Bookkeeping {
        conditions_before: spec.condition_count(),
        conditions_after: residual.condition_count(),
        slice_conditions: slices.iter().map(|&k| e.slice(k).degree()).sum(),
        columns_before: column_count(spec.n, spec.d, spec.r),
        columns_after: column_count(residual.n, residual.d, residual.r),
        virtual_dimension_before: virtual_dimension(spec),
        virtual_dimension_after: virtual_dimension(residual),
    }
}

/// One application of the theorem, checking every hypothesis first.
pub fn horace_step(
    spec: &SystemSpec,
    moving_index: usize,
    slices: &[u32],
) -> Result<HoraceStep, HoraceError> {
    if slices.is_empty() {
        return Err(HoraceError::BadSliceSequence(Vec::new()));
    }
    validate_slice_sequence(slices)?;
    let e = moving_scheme(spec, moving_index)?.staircase.clone();
    let base = pinned_base(spec, moving_index)?;
    let mut hypotheses = Vec::with_capacity(slices.len());
    for (k, &n_i) in slices.iter().enumerate() {
        let i = k as u32 + 1;
        let seed = derive_seed(spec.seed, TAG_HYPOTHESIS, ((i as u64) << 32) | n_i as u64);
        let ev = hypothesis_on_base(&base, &e, i, n_i, seed)?;
        if !ev.holds {
            return Err(HoraceError::HypothesisFailed {
                i,
                n_i,
                dim_lhs: ev.dim_lhs,
                dim_rhs: ev.dim_rhs,
            });
        }
        hypotheses.push(ev);
    }
    let residual_spec = residual_of(spec, moving_index, slices)?;
    Ok(HoraceStep {
        moving_index,
        slices: slices.to_vec(),
        hypotheses,
        bookkeeping: bookkeeping(spec, &residual_spec, slices, &e),
        residual_spec,
    })
}

/// Strictly decreasing sequences drawn from `1..=max`, shortest first.
fn slice_sequences(max: u32) -> Vec<Vec<u32>> {
    let mut all: Vec<Vec<u32>> = (1u32..1 << max)
        .map(|mask| {
            (1..=max)
                .rev()
                .filter(|k| mask & (1 << (k - 1)) != 0)
                .collect()
        })
        .collect();
    all.sort_by(|a: &Vec<u32>, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    all
}

/// Best step from `spec` over all generic schemes, by residual dimension.
fn best_step(spec: &SystemSpec, target: i64) -> Result<Option<(HoraceStep, i64)>, HoraceError> {
    let mut best: Option<(HoraceStep, i64)> = None;
    for index in 0..spec.schemes.len() {
        let Ok(s) = moving_scheme(spec, index) else {
            continue;
        };
        if s.staircase.is_empty() {
            continue;
        }
        let e = s.staircase.clone();
        let base = pinned_base(spec, index)?;
        let mut memo: HashMap<(u32, u32), bool> = HashMap::new();
        for slices in slice_sequences(e.max_height().min(AUTO_MAX_SLICE)) {
            let mut ok = true;
            for (k, &n_i) in slices.iter().enumerate() {
                let i = k as u32 + 1;
                let holds = match memo.get(&(i, n_i)) {
                    Some(&h) => h,
                    None => {
                        let seed =
                            derive_seed(spec.seed, TAG_HYPOTHESIS, ((i as u64) << 32) | n_i as u64);
                        let h = hypothesis_on_base(&base, &e, i, n_i, seed)?.holds;
                        memo.insert((i, n_i), h);
                        h
                    }
                };
                if !holds {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let step = horace_step(spec, index, &slices)?;
            let dim = dimension(&step.residual_spec)?.dimension;
            if best.as_ref().is_none_or(|(_, d)| dim < *d) {
                best = Some((step, dim));
            }
            if dim <= target {
                return Ok(best);
            }
        }
    }
    Ok(best)
}

/// Runs Horace steps and a direct computation at the leaf.
pub fn certify(spec: &SystemSpec, strategy: &Strategy) -> Result<Certificate, HoraceError> {
    spec.validate()?;
    let vdim = virtual_dimension(spec);
    let lower = vdim.max(-1);
    let mut steps = Vec::new();
    let mut current = spec.clone();
    match strategy {
        Strategy::Explicit(plan) => {
            for (index, slices) in plan {
                let step = horace_step(&current, *index, slices)?;
                current = step.residual_spec.clone();
                steps.push(step);
            }
        }
        Strategy::Auto => {
            let mut direct = dimension(&current)?.dimension;
            while direct > lower || steps.is_empty() {
                let Some((step, dim)) = best_step(&current, lower)? else {
                    break;
                };
                if dim > direct {
                    break;
                }
                current = step.residual_spec.clone();
                steps.push(step);
                direct = dim;
            }
        }
    }
    let report = dimension(&current)?;
    let leaf = Leaf {
        dimension: report.dimension,
        rank: report.rank,
        columns: report.columns,
    };
    let status = if leaf.dimension == lower {
        Status::Proven
    } else if steps.is_empty() {
        Status::Inconclusive
    } else {
        Status::UpperBoundOnly
    };
    let mut seeds = vec![spec.seed];
    for step in &steps {
        seeds.extend(step.hypotheses.iter().map(|h| h.seed));
        seeds.push(step.residual_spec.seed);
    }
    Ok(Certificate {
        initial_spec: spec.clone(),
        steps,
        claimed_dimension: leaf.dimension,
        leaf,
        virtual_dimension: vdim,
        lower_bound: lower,
        status,
        prime: spec.prime.modulus(),
        seeds,
        caveat: CAVEAT.to_string(),
    })
}

/// A number in a replayed certificate that differs from the stored one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub location: String,
    pub stored: String,
    pub recomputed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub reproduced: bool,
    pub mismatches: Vec<Mismatch>,
    pub certificate: Certificate,
}

/// Recomputes a certificate from its initial spec and recorded steps.
pub fn replay(stored: &Certificate) -> Result<ReplayReport, HoraceError> {
    let plan = stored
        .steps
        .iter()
        .map(|s| (s.moving_index, s.slices.clone()))
        .collect();
    let fresh = certify(&stored.initial_spec, &Strategy::Explicit(plan))?;
    let mut mismatches = Vec::new();
    let mut cmp = |location: String, a: String, b: String| {
        if a != b {
            mismatches.push(Mismatch {
                location,
                stored: a,
                recomputed: b,
            });
        }
    };
    for (k, (a, b)) in stored.steps.iter().zip(&fresh.steps).enumerate() {
        for (ha, hb) in a.hypotheses.iter().zip(&b.hypotheses) {
            cmp(
                format!("steps[{k}].hypotheses[{}]", ha.i),
                format!("{}={}", ha.dim_lhs, ha.dim_rhs),
                format!("{}={}", hb.dim_lhs, hb.dim_rhs),
            );
        }
        cmp(
            format!("steps[{k}].residual_spec"),
            serde_json::to_string(&a.residual_spec).unwrap_or_default(),
            serde_json::to_string(&b.residual_spec).unwrap_or_default(),
        );
    }
    cmp(
        "steps.len".into(),
        stored.steps.len().to_string(),
        fresh.steps.len().to_string(),
    );
    cmp(
        "leaf".into(),
        format!("{:?}", stored.leaf),
        format!("{:?}", fresh.leaf),
    );
    cmp(
        "status".into(),
        format!("{:?}", stored.status),
        format!("{:?}", fresh.status),
    );
    cmp(
        "claimed_dimension".into(),
        stored.claimed_dimension.to_string(),
        fresh.claimed_dimension.to_string(),
    );
    cmp(
        "seeds".into(),
        format!("{:?}", stored.seeds),
        format!("{:?}", fresh.seeds),
    );
    let reproduced = mismatches.is_empty() && fresh == *stored;
    Ok(ReplayReport {
        reproduced,
        mismatches,
        certificate: fresh,
    })
}
