//! Certify the dimension of sextics with three collinear double points and a
//! generic triple point, first with the slices `[3, 1]`, then by search.

use horace::geometry::{dimension, specialize_onto_divisor, Preset};
use horace::horace_engine::{certify, Strategy};
use horace::PrimeField;

fn main() {
    let spec = Preset::SexticIntro.spec(PrimeField::default(), 0);
    let moving = Preset::SexticIntro.moving_index();

    let direct = dimension(&spec).unwrap();
    let special = dimension(&specialize_onto_divisor(&spec, moving).unwrap()).unwrap();
    println!("generic triple point: dim {}", direct.dimension);
    println!("triple point on D:    dim {}", special.dimension);

    let cert = certify(&spec, &Strategy::Explicit(vec![(moving, vec![3, 1])])).unwrap();
    for step in &cert.steps {
        for h in &step.hypotheses {
            println!("  i={} n_i={}: {} = {}", h.i, h.n_i, h.dim_lhs, h.dim_rhs);
        }
        let res = &step.residual_spec;
        println!(
            "  residual: d={} r={} moving staircase {}",
            res.d, res.r, res.schemes[moving].staircase
        );
    }
    println!(
        "slices [3,1]: {:?}, dimension {}",
        cert.status, cert.claimed_dimension
    );

    let auto = certify(&spec, &Strategy::Auto).unwrap();
    let found: Vec<_> = auto.steps.iter().map(|s| s.slices.clone()).collect();
    println!(
        "auto: slices {found:?}, {:?}, dimension {}",
        auto.status, auto.claimed_dimension
    );
}
