//! One line per acceptance criterion; runs without the test harness so the
//! report is always printed.

mod common;

use std::time::{Duration, Instant};

use horace::geometry::{dimension, specialize_onto_divisor, Preset, SchemePlacement, SystemSpec};
use horace::horace_engine::{certify, horace_step, HoraceError, Status, Strategy};
use horace::oracle::{brute_colon, enumerate_staircases, same_span};
use horace::trunc_algebra::{
    assemble_graded, colon_x1, dechargeable_colon, graded_decomposition, is_staircase_ideal,
    monomial_ideal, translated_ideal, TruncIdeal,
};
use horace::{PrimeField, Staircase};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DIRECT_BUDGET: Duration = Duration::from_secs(1);
const GRID_BUDGET: Duration = Duration::from_secs(300);
const QUINTIC_SEEDS: u64 = 5;
const DECHARGEABLE_SAMPLES: usize = 100;
const THEOREM_SAMPLES: usize = 50;

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn field() -> PrimeField {
    PrimeField::default()
}

fn c1_quintic() -> Outcome {
    let start = Instant::now();
    let dims: Vec<i64> = (0..QUINTIC_SEEDS)
        .map(|seed| {
            dimension(&Preset::QuinticIntro.spec(field(), seed))
                .unwrap()
                .dimension
        })
        .collect();
    let per_run = start.elapsed() / QUINTIC_SEEDS as u32;
    let pass = dims.iter().all(|&d| d == 11) && per_run < DIRECT_BUDGET;
    outcome(pass, format!("dimensions {dims:?}, {per_run:?} per run"))
}

fn c2_sextic_direct() -> Outcome {
    let start = Instant::now();
    let spec = Preset::SexticIntro.spec(field(), 0);
    let direct = dimension(&spec).unwrap().dimension;
    let special = dimension(&specialize_onto_divisor(&spec, 3).unwrap())
        .unwrap()
        .dimension;
    let elapsed = start.elapsed();
    outcome(
        direct == 12 && special == 14 && elapsed < DIRECT_BUDGET,
        format!("generic {direct}, on D {special}, {elapsed:?}"),
    )
}

fn c3_sextic_certificate() -> Outcome {
    let spec = Preset::SexticIntro.spec(field(), 0);
    let cert = certify(&spec, &Strategy::Explicit(vec![(3, vec![3, 1])])).unwrap();
    let step = &cert.steps[0];
    let h = &step.hypotheses;
    let res = &step.residual_spec;
    let leaf_ok = res.d == 6
        && res.r == 2
        && res.schemes[3].staircase.points() == vec![vec![0, 0], vec![0, 1]]
        && cert.leaf.dimension == 12;
    let pass = cert.status == Status::Proven
        && cert.claimed_dimension == 12
        && h.len() == 2
        && (h[0].dim_lhs, h[0].dim_rhs) == (17, 17)
        && h[1].dim_lhs == h[1].dim_rhs
        && leaf_ok;
    outcome(
        pass,
        format!(
            "{:?}, hypotheses {}={} and {}={}, leaf d={} r={} {} dim {}",
            cert.status,
            h[0].dim_lhs,
            h[0].dim_rhs,
            h[1].dim_lhs,
            h[1].dim_rhs,
            res.d,
            res.r,
            res.schemes[3].staircase,
            cert.leaf.dimension
        ),
    )
}

fn staircase_grid() -> Vec<Staircase> {
    (1..=2).flat_map(|n| enumerate_staircases(n, 5)).collect()
}

fn c4_staircase_ideal_grid() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut failed = 0;
    for e in staircase_grid() {
        for q in 2..=4 {
            for s in 2..=4 {
                total += 1;
                if !is_staircase_ideal(&translated_ideal(&e, q, s, field()), &e) {
                    failed += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failed == 0 && elapsed < GRID_BUDGET,
        format!("{} of {total} cases, {elapsed:?}", total - failed),
    )
}

fn c5_dechargeable() -> Outcome {
    let ideals = common::random_dechargeable(DECHARGEABLE_SAMPLES, 2024, field());
    let low = ideals.iter().filter(|i| common::branch_is_low(i)).count();
    let mismatches = ideals
        .iter()
        .filter(|ideal| {
            let ring = ideal.ring();
            let closed = TruncIdeal::generated(ring, dechargeable_colon(ideal).unwrap());
            let brute = brute_colon(ring, ideal.ideal().unwrap().span().basis());
            !same_span(&field(), closed.span().basis(), &brute, ring.dim())
        })
        .count();
    outcome(
        mismatches == 0 && low > 0 && low < ideals.len(),
        format!(
            "{mismatches} mismatches over {} ideals ({low} with q ≤ H, {} with q > H)",
            ideals.len(),
            ideals.len() - low
        ),
    )
}

fn c6_graded() -> Outcome {
    let mut total = 0;
    let mut failed = 0;
    for e in enumerate_staircases(2, 5) {
        for q in 1..=4 {
            for s in 1..=4 {
                total += 1;
                let j = translated_ideal(&e, q, s, field());
                let parts = graded_decomposition(&e, q, s, field());
                if &assemble_graded(j.ring(), &parts) != j.span() {
                    failed += 1;
                }
            }
        }
    }
    outcome(failed == 0, format!("{} of {total} cases", total - failed))
}

fn c7_combinatorics() -> Outcome {
    let mut total = 0;
    let mut failed = 0;
    for n in 1..=3 {
        for e in enumerate_staircases(n, 8) {
            let top = e.max_height() + 1;
            for mask in 0u32..1 << top {
                let ns: Vec<u32> = (1..=top)
                    .rev()
                    .filter(|k| mask & (1 << (k - 1)) != 0)
                    .collect();
                let taken: usize = ns.iter().map(|&k| e.slice(k).degree()).sum();
                total += 1;
                if e.remove_slices(&ns).unwrap().degree() + taken != e.degree() {
                    failed += 1;
                }
            }
            for n1 in 2..=top {
                for n2 in 1..n1 {
                    total += 1;
                    if e.remove_slice(n1).slice(n2).degree() != e.slice(n2).degree() {
                        failed += 1;
                    }
                }
            }
        }
    }
    outcome(
        failed == 0,
        format!("{} of {total} identities", total - failed),
    )
}

fn c8_theorem_inequality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    let mut failed = 0;
    while checked < THEOREM_SAMPLES {
        let mut spec = common::random_spec(&mut rng);
        let e = common::random_staircase(&mut rng, spec.n, 6);
        if e.is_empty() {
            continue;
        }
        let index = spec.schemes.len();
        spec = spec.with_scheme(SchemePlacement::generic(e.clone()));
        let top = e.max_height();
        for mask in 1u32..1 << top {
            let ns: Vec<u32> = (1..=top)
                .rev()
                .filter(|k| mask & (1 << (k - 1)) != 0)
                .collect();
            match horace_step(&spec, index, &ns) {
                Ok(step) => {
                    let fresh: u64 = rng.gen();
                    let generic = dimension(&spec.clone().with_seed(fresh)).unwrap().dimension;
                    let residual = dimension(&step.residual_spec.clone().with_seed(fresh))
                        .unwrap()
                        .dimension;
                    checked += 1;
                    if generic > residual {
                        failed += 1;
                    }
                    break;
                }
                Err(HoraceError::HypothesisFailed { .. }) => {}
                Err(err) => panic!("{err}"),
            }
        }
    }
    outcome(
        failed == 0,
        format!("{} of {checked} steps", checked - failed),
    )
}

fn c9_residue_law() -> Outcome {
    let mut total = 0;
    let mut failed = 0;
    let mut literal = 0;
    for e in staircase_grid() {
        for q in 2..=4 {
            for s in 2..=4 {
                total += 1;
                let colon = colon_x1(&monomial_ideal(&e, q, s, field()));
                let residual = e.remove_slice(1);
                if colon != monomial_ideal(&residual.below_degree(s - 1), q, s, field()) {
                    failed += 1;
                }
                if colon == monomial_ideal(&residual, q, s, field()) {
                    literal += 1;
                }
            }
        }
    }
    outcome(
        failed == 0,
        format!(
            "{} of {total} cases modulo 𝔪^(s-1); untruncated equality in {literal}",
            total - failed
        ),
    )
}

fn c10_special_conics() -> Outcome {
    let spec = Preset::ConicSpecial.spec(field(), 0);
    let report = dimension(&spec).unwrap();
    let cert = certify(&spec, &Strategy::Auto).unwrap();
    let double_points = SystemSpec::new(2, 2)
        .with_scheme(SchemePlacement::generic(Staircase::big_point(2, 2)))
        .with_scheme(SchemePlacement::generic(Staircase::big_point(2, 2)));
    let same = dimension(&double_points).unwrap().dimension == report.dimension;
    outcome(
        report.dimension == 0
            && report.virtual_dimension == -1
            && cert.status != Status::Proven
            && same,
        format!(
            "dim {} vs virtual {}, certificate {:?}",
            report.dimension, report.virtual_dimension, cert.status
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            1,
            "quintic through three collinear points and a triple point",
            c1_quintic,
        ),
        (
            2,
            "sextic direct and specialized dimensions",
            c2_sextic_direct,
        ),
        (
            3,
            "sextic certificate with slices [3,1]",
            c3_sextic_certificate,
        ),
        (
            4,
            "translated ideals are staircase ideals",
            c4_staircase_ideal_grid,
        ),
        (5, "dechargeable colon closed forms", c5_dechargeable),
        (6, "graded decomposition", c6_graded),
        (7, "slice identities", c7_combinatorics),
        (8, "theorem inequality spot-check", c8_theorem_inequality),
        (9, "monomial residue law", c9_residue_law),
        (10, "special system detection", c10_special_conics),
    ];
    let mut failures = Vec::new();
    for (id, name, check) in criteria {
        let result = check();
        println!(
            "criterion {id:>2} {}: {name} ({})",
            if result.pass { "PASS" } else { "FAIL" },
            result.detail
        );
        if !result.pass {
            failures.push(id);
        }
    }
    println!("criterion 11 N/A: degree-174 computation with ten 55-fold points is outside the desk-scale scope");
    if !failures.is_empty() {
        eprintln!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
}
