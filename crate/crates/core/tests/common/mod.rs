#![allow(dead_code)]

use horace::trunc_algebra::{
    dechargeable_colon, dechargeable_restrict_colon, DechargeableIdeal, TruncRing,
};
use horace::PrimeField;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dechargeable ideals with `h ≤ 5`, `s ≤ 6`, `q ≤ 5`: random presentations
/// that pass validation, mixed with chains of restricted colons of
/// principal ideals. Returns `count` ideals whose closed-form colon exists.
pub fn random_dechargeable(count: usize, seed: u64, field: PrimeField) -> Vec<DechargeableIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = rng.gen_range(1..=5);
        let s = rng.gen_range(2..=6);
        let h = rng.gen_range(1..=5);
        let ring = TruncRing::new(1, q, s, field);
        let candidate = if rng.gen_bool(0.5) {
            let r = rng.gen_range(1..=3);
            let betas: Vec<u32> = (0..r).map(|_| rng.gen_range(0..=h)).collect();
            let alphas: Vec<u32> = (1..r).map(|_| rng.gen_range(1..=q.max(1))).collect();
            DechargeableIdeal::new(&ring, h, betas, alphas).ok()
        } else {
            let mut ideal = DechargeableIdeal::principal(&ring, h).ok();
            for _ in 0..rng.gen_range(0..3) {
                let Some(cur) = &ideal else { break };
                let (cq, cs) = (cur.ring().q(), cur.ring().s());
                if cq < 2 || cs < 2 {
                    break;
                }
                let p = rng.gen_range(1..cq);
                let u = rng.gen_range(1..cs);
                ideal = dechargeable_restrict_colon(cur, p, u).ok();
            }
            ideal
        };
        if let Some(ideal) = candidate {
            if ideal.ring().s() >= 2 && dechargeable_colon(&ideal).is_ok() {
                out.push(ideal);
            }
        }
    }
    out
}

pub fn branch_is_low(ideal: &DechargeableIdeal) -> bool {
    ideal.ring().q() <= ideal.height()
}

use horace::geometry::{Position, SchemePlacement, SystemSpec};
use horace::Staircase;

/// A random staircase in `ℕ^n` with at most `max_boxes` boxes, grown one
/// addable corner at a time.
pub fn random_staircase(rng: &mut ChaCha8Rng, n: usize, max_boxes: usize) -> Staircase {
    let target = rng.gen_range(0..=max_boxes);
    let mut pts: Vec<Vec<u32>> = Vec::new();
    while pts.len() < target {
        let mut corners: Vec<Vec<u32>> = Vec::new();
        let mut cands = vec![vec![0u32; n]];
        for p in &pts {
            for j in 0..n {
                let mut c = p.clone();
                c[j] += 1;
                cands.push(c);
            }
        }
        for c in cands {
            let inside = |a: &Vec<u32>| pts.contains(a);
            let ok = !inside(&c)
                && (0..n).all(|j| {
                    c[j] == 0 || {
                        let mut b = c.clone();
                        b[j] -= 1;
                        inside(&b)
                    }
                });
            if ok && !corners.contains(&c) {
                corners.push(c);
            }
        }
        let pick = rng.gen_range(0..corners.len());
        pts.push(corners.swap_remove(pick));
    }
    Staircase::from_points(n, pts).unwrap()
}

/// Small random systems mixing generic, on-divisor and explicit placements.
pub fn random_spec(rng: &mut ChaCha8Rng) -> SystemSpec {
    let n = rng.gen_range(1..=3);
    let d = rng.gen_range(1..=if n == 3 { 4 } else { 6 });
    let r = rng.gen_range(0..=2.min(d));
    let mut spec = SystemSpec::new(n, d)
        .with_divisor_multiplicity(r)
        .with_seed(rng.gen());
    for _ in 0..rng.gen_range(0..=4) {
        let e = random_staircase(rng, n, 5);
        let placement = match rng.gen_range(0..3) {
            0 => SchemePlacement::generic(e),
            1 => SchemePlacement::generic_on_divisor(e).with_offset(rng.gen_range(0..=r)),
            _ => {
                let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
                if rng.gen_bool(0.3) {
                    c[0] = 0;
                }
                let on_d = c[0] == 0;
                let p = SchemePlacement::explicit(e, c);
                if on_d {
                    p.with_offset(rng.gen_range(0..=r))
                } else {
                    p
                }
            }
        };
        spec = spec.with_scheme(placement);
    }
    spec
}

pub fn on_divisor(s: &SchemePlacement) -> bool {
    match &s.position {
        Position::GenericOnDivisor => true,
        Position::Explicit(c) => c[0] == 0,
        Position::Generic => false,
    }
}
