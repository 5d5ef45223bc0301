//! Serialize a certificate, read it back and recompute every number in it.

use horace::geometry::Preset;
use horace::horace_engine::{certify, replay, Certificate, Strategy};
use horace::PrimeField;

fn main() {
    let spec = Preset::SexticIntro.spec(PrimeField::default(), 42);
    let cert = certify(&spec, &Strategy::Explicit(vec![(3, vec![3, 1])])).unwrap();
    let json = serde_json::to_string_pretty(&cert).unwrap();
    println!(
        "certificate is {} bytes, seeds {:?}",
        json.len(),
        cert.seeds
    );

    let stored: Certificate = serde_json::from_str(&json).unwrap();
    let report = replay(&stored).unwrap();
    println!("replay reproduced: {}", report.reproduced);

    let mut tampered = stored;
    tampered.steps[0].hypotheses[0].dim_lhs += 1;
    let report = replay(&tampered).unwrap();
    for m in &report.mismatches {
        println!(
            "tampered {}: stored {}, recomputed {}",
            m.location, m.stored, m.recomputed
        );
    }
}
