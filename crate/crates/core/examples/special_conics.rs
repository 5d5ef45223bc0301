//! Two double points impose dependent conditions on conics: the double line
//! through them survives although the count of conditions says it should not.

use horace::geometry::{dimension, Preset};
use horace::horace_engine::{certify, Strategy};
use horace::oracle::recompute_dimension;
use horace::PrimeField;

fn main() {
    let spec = Preset::ConicSpecial.spec(PrimeField::default(), 0);
    let report = dimension(&spec).unwrap();
    println!(
        "dim {} against virtual {}; oracle says {}",
        report.dimension,
        report.virtual_dimension,
        recompute_dimension(&spec, 99).unwrap()
    );

    let cert = certify(&spec, &Strategy::Auto).unwrap();
    println!(
        "certificate: {:?} with {} steps, upper bound {} above lower bound {}",
        cert.status,
        cert.steps.len(),
        cert.claimed_dimension,
        cert.lower_bound
    );
}
