use std::fmt;
use std::str::FromStr;

use super::spec::{SchemePlacement, SystemSpec};
use crate::field::PrimeField;
use crate::staircase::Staircase;

/// Named configurations of plane curves.
///
/// The fixed points of the first two presets sit at `(0, 0)`, `(0, 1)` and
/// `(0, 2)` in the chart `X_0 = 1`, on the line `D = {X_1 = 0}`; the moving
/// triple point is generic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Quintics through three collinear points and a generic triple point.
    QuinticIntro,
    /// Sextics with three collinear double points and a generic triple point.
    SexticIntro,
    /// Conics singular at two generic points.
    ConicSpecial,
}

impl Preset {
    pub const ALL: [Preset; 3] = [
        Preset::QuinticIntro,
        Preset::SexticIntro,
        Preset::ConicSpecial,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::QuinticIntro => "quintic_intro",
            Preset::SexticIntro => "sextic_intro",
            Preset::ConicSpecial => "conic_special",
        }
    }

    /// Index of the scheme a Horace step should move.
    pub fn moving_index(&self) -> usize {
        match self {
            Preset::QuinticIntro | Preset::SexticIntro => 3,
            Preset::ConicSpecial => 0,
        }
    }

    pub fn spec(&self, prime: PrimeField, seed: u64) -> SystemSpec {
        let collinear = |m: u32, d: u32| {
            (0..3).fold(SystemSpec::new(2, d), |spec, y| {
                spec.with_scheme(SchemePlacement::explicit(
                    Staircase::big_point(2, m),
                    vec![0, y],
                ))
            })
        };
        let spec =
            match self {
                Preset::QuinticIntro => collinear(1, 5)
                    .with_scheme(SchemePlacement::generic(Staircase::big_point(2, 3))),
                Preset::SexticIntro => collinear(2, 6)
                    .with_scheme(SchemePlacement::generic(Staircase::big_point(2, 3))),
                Preset::ConicSpecial => SystemSpec::new(2, 2)
                    .with_scheme(SchemePlacement::generic(Staircase::big_point(2, 2)))
                    .with_scheme(SchemePlacement::generic(Staircase::big_point(2, 2))),
            };
        spec.with_prime(prime).with_seed(seed)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Preset::ALL.iter().map(Preset::name).collect();
                format!(
                    "unknown preset `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}
