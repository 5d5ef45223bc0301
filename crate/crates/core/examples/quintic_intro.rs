//! Quintics through three collinear points and one generic triple point.
//!
//! Run with `cargo run --example quintic_intro`.

use horace::geometry::{dimension, specialize_onto_divisor, Preset};
use horace::PrimeField;

fn main() {
    let field = PrimeField::default();
    for seed in 0..5 {
        let spec = Preset::QuinticIntro.spec(field, seed);
        let report = dimension(&spec).expect("preset is valid");
        println!(
            "seed {seed}: {} columns, rank {}, dim {} (virtual {})",
            report.columns, report.rank, report.dimension, report.virtual_dimension
        );
    }

    // Sliding the triple point onto the line of the three points keeps the
    // dimension here: the line is forced either way.
    let spec = Preset::QuinticIntro.spec(field, 0);
    let special = specialize_onto_divisor(&spec, Preset::QuinticIntro.moving_index()).unwrap();
    println!(
        "triple point on the line: dim {}",
        dimension(&special).unwrap().dimension
    );
}
