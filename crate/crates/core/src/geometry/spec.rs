use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::GeometryError;
use crate::field::{PrimeField, DEFAULT_PRIME};
use crate::linalg::Matrix;
use crate::staircase::Staircase;

/// Where a monomial scheme sits in `ℙ^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Position {
    /// A random point of `ℙ^n` with a random local frame.
    Generic,
    /// A random point of `D = {X_1 = 0}` with a random frame whose first
    /// coordinate cuts out `D`.
    GenericOnDivisor,
    /// Affine coordinates `(X_1/X_0, …, X_n/X_0)`, or `n + 1` projective ones.
    Explicit(Vec<i64>),
}

/// A monomial scheme `X_φ(E)` placed in `ℙ^n`.
///
/// The frame is an `n × n` matrix `A`: the local coordinates `x` at the point
/// `c` are related to the affine coordinates by `u = c + A x`. On `D` the
/// frame must satisfy `A[0][j] = 0` for `j ≥ 1`, so that `u_1` is a multiple
/// of `x_1`.
///
/// `offset` shifts the scheme along `x_1`: the conditions are imposed on
/// `F / X_1^offset` rather than on `F`. This is how the residual scheme of
/// `rD + X_φ(S)` is encoded, and it requires the point to lie on `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemePlacement {
    pub staircase: Staircase,
    pub position: Position,
    pub frame: Option<Vec<Vec<i64>>>,
    pub offset: u32,
}

impl SchemePlacement {
    pub fn generic(staircase: Staircase) -> Self {
        SchemePlacement {
            staircase,
            position: Position::Generic,
            frame: None,
            offset: 0,
        }
    }

    pub fn generic_on_divisor(staircase: Staircase) -> Self {
        SchemePlacement {
            staircase,
            position: Position::GenericOnDivisor,
            frame: None,
            offset: 0,
        }
    }

    pub fn explicit(staircase: Staircase, coords: Vec<i64>) -> Self {
        SchemePlacement {
            staircase,
            position: Position::Explicit(coords),
            frame: None,
            offset: 0,
        }
    }

    pub fn with_frame(mut self, frame: Vec<Vec<i64>>) -> Self {
        self.frame = Some(frame);
        self
    }

    pub fn with_offset(mut self, offset: u32) -> Self {
        self.offset = offset;
        self
    }

    pub fn is_generic(&self) -> bool {
        self.position == Position::Generic
    }
}

/// A linear system `|O(d)|(-rD - Σ X_i)` on `ℙ^n`, with `D = {X_1 = 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct SystemSpec {
    pub n: usize,
    pub d: u32,
    pub r: u32,
    pub prime: PrimeField,
    pub seed: u64,
    pub schemes: Vec<SchemePlacement>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    n: usize,
    d: u32,
    #[serde(default)]
    r: u32,
    #[serde(default = "default_prime")]
    prime: u64,
    #[serde(default)]
    seed: u64,
    #[serde(default)]
    schemes: Vec<RawScheme>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScheme {
    staircase: Vec<Vec<u32>>,
    position: Position,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    frame: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "is_zero")]
    offset: u32,
}

fn default_prime() -> u64 {
    DEFAULT_PRIME
}

fn is_zero(v: &u32) -> bool {
    *v == 0
}

impl TryFrom<RawSpec> for SystemSpec {
    type Error = GeometryError;

    fn try_from(raw: RawSpec) -> Result<Self, Self::Error> {
        if raw.n == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        let prime = PrimeField::new(raw.prime)?;
        let schemes = raw
            .schemes
            .into_iter()
            .map(|s| {
                Ok(SchemePlacement {
                    staircase: Staircase::from_points(raw.n, s.staircase)?,
                    position: s.position,
                    frame: s.frame,
                    offset: s.offset,
                })
            })
            .collect::<Result<Vec<_>, GeometryError>>()?;
        let spec = SystemSpec {
            n: raw.n,
            d: raw.d,
            r: raw.r,
            prime,
            seed: raw.seed,
            schemes,
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl From<SystemSpec> for RawSpec {
    fn from(spec: SystemSpec) -> Self {
        RawSpec {
            n: spec.n,
            d: spec.d,
            r: spec.r,
            prime: spec.prime.modulus(),
            seed: spec.seed,
            schemes: spec
                .schemes
                .into_iter()
                .map(|s| RawScheme {
                    staircase: s.staircase.points(),
                    position: s.position,
                    frame: s.frame,
                    offset: s.offset,
                })
                .collect(),
        }
    }
}

/// A placement with concrete coordinates: affine point, frame, and the
/// exponents `a + offset·e_1` whose Taylor coefficients must vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedPlacement {
    pub scheme: usize,
    pub point: Vec<u64>,
    pub frame: Vec<Vec<u64>>,
    pub exponents: Vec<Vec<u32>>,
}

impl RealizedPlacement {
    pub fn on_divisor(&self) -> bool {
        self.point[0] == 0
    }
}

impl SystemSpec {
    pub fn new(n: usize, d: u32) -> Self {
        SystemSpec {
            n,
            d,
            r: 0,
            prime: PrimeField::default(),
            seed: 0,
            schemes: Vec::new(),
        }
    }

    pub fn with_scheme(mut self, scheme: SchemePlacement) -> Self {
        self.schemes.push(scheme);
        self
    }

    pub fn with_divisor_multiplicity(mut self, r: u32) -> Self {
        self.r = r;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_prime(mut self, prime: PrimeField) -> Self {
        self.prime = prime;
        self
    }

    pub fn field(&self) -> &PrimeField {
        &self.prime
    }

    /// Number of linear conditions, `Σ degree(E_i)`.
    pub fn condition_count(&self) -> usize {
        self.schemes.iter().map(|s| s.staircase.degree()).sum()
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        if self.n == 0 {
            return Err(GeometryError::ZeroDimension);
        }
        for (i, s) in self.schemes.iter().enumerate() {
            if s.staircase.dim() != self.n {
                return Err(GeometryError::StaircaseDimension {
                    scheme: i,
                    found: s.staircase.dim(),
                    expected: self.n,
                });
            }
            if let Position::Explicit(c) = &s.position {
                if c.len() != self.n && c.len() != self.n + 1 {
                    return Err(GeometryError::BadCoordinates {
                        scheme: i,
                        len: c.len(),
                    });
                }
            }
            if let Some(frame) = &s.frame {
                if frame.len() != self.n || frame.iter().any(|row| row.len() != self.n) {
                    return Err(GeometryError::BadFrame {
                        scheme: i,
                        reason: format!("expected a {0}×{0} matrix", self.n),
                    });
                }
            }
            if s.offset > self.r {
                return Err(GeometryError::BadOffset {
                    scheme: i,
                    offset: s.offset,
                    r: self.r,
                });
            }
        }
        Ok(())
    }

    /// Draws concrete coordinates for every placement, deterministically
    /// from `seed`.
    pub fn realize(&self) -> Result<Vec<RealizedPlacement>, GeometryError> {
        self.validate()?;
        let field = self.prime;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::with_capacity(self.schemes.len());
        for (i, s) in self.schemes.iter().enumerate() {
            let (point, random_frame) = match &s.position {
                Position::Generic => {
                    let point = random_vector(&mut rng, &field, self.n);
                    (point, Some(random_frame(&mut rng, &field, self.n, false)))
                }
                Position::GenericOnDivisor => {
                    let mut point = random_vector(&mut rng, &field, self.n);
                    point[0] = 0;
                    (point, Some(random_frame(&mut rng, &field, self.n, true)))
                }
                Position::Explicit(coords) => (affine_point(&field, coords, self.n, i)?, None),
            };
            let frame = match (&s.frame, random_frame) {
                (Some(given), _) => {
                    let frame: Vec<Vec<u64>> = given
                        .iter()
                        .map(|row| row.iter().map(|&v| field.from_i64(v)).collect())
                        .collect();
                    if Matrix::from_rows(self.n, &frame).rank(&field) != self.n {
                        return Err(GeometryError::BadFrame {
                            scheme: i,
                            reason: "frame is singular".into(),
                        });
                    }
                    frame
                }
                (None, Some(random)) => random,
                (None, None) => identity(self.n),
            };
            let on_divisor = point[0] == 0;
            if on_divisor && frame[0][1..].iter().any(|&v| v != 0) {
                return Err(GeometryError::FrameNotAligned { scheme: i });
            }
            if s.offset > 0 && !on_divisor {
                return Err(GeometryError::OffsetOffDivisor { scheme: i });
            }
            let exponents = s
                .staircase
                .points()
                .into_iter()
                .map(|mut a| {
                    a[0] += s.offset;
                    a
                })
                .collect();
            out.push(RealizedPlacement {
                scheme: i,
                point,
                frame,
                exponents,
            });
        }
        Ok(out)
    }

    /// Replaces every random placement by the explicit point and frame drawn
    /// from `seed`, except the scheme at `keep`, which stays as it is.
    pub fn pinned_except(&self, keep: Option<usize>) -> Result<SystemSpec, GeometryError> {
        let realized = self.realize()?;
        let mut out = self.clone();
        for (s, real) in out.schemes.iter_mut().zip(realized) {
            if Some(real.scheme) == keep || matches!(s.position, Position::Explicit(_)) {
                continue;
            }
            s.position = Position::Explicit(real.point.iter().map(|&v| v as i64).collect());
            s.frame = Some(
                real.frame
                    .iter()
                    .map(|row| row.iter().map(|&v| v as i64).collect())
                    .collect(),
            );
        }
        Ok(out)
    }

    pub fn pinned(&self) -> Result<SystemSpec, GeometryError> {
        self.pinned_except(None)
    }
}

/// Moves a generic scheme to a generic point of `D`, with a frame whose first
/// coordinate is the equation of `D`.
pub fn specialize_onto_divisor(
    spec: &SystemSpec,
    index: usize,
) -> Result<SystemSpec, GeometryError> {
    let scheme = spec
        .schemes
        .get(index)
        .ok_or(GeometryError::NoSuchScheme { index })?;
    if !scheme.is_generic() {
        return Err(GeometryError::AlreadySpecial { index });
    }
    let mut out = spec.clone();
    out.schemes[index].position = Position::GenericOnDivisor;
    out.schemes[index].frame = None;
    Ok(out)
}

/// Affine coordinates of an explicit point given with `n` affine or `n + 1`
/// projective coordinates.
fn affine_point(
    field: &PrimeField,
    coords: &[i64],
    n: usize,
    scheme: usize,
) -> Result<Vec<u64>, GeometryError> {
    let reduced: Vec<u64> = coords.iter().map(|&c| field.from_i64(c)).collect();
    if reduced.len() == n {
        return Ok(reduced);
    }
    let x0 = reduced[0];
    if x0 == 0 {
        return Err(GeometryError::ChartViolation { scheme });
    }
    let inv = field.inv(x0);
    Ok(reduced[1..].iter().map(|&c| field.mul(c, inv)).collect())
}

fn random_vector(rng: &mut ChaCha8Rng, field: &PrimeField, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.gen_range(0..field.modulus())).collect()
}

fn random_frame(
    rng: &mut ChaCha8Rng,
    field: &PrimeField,
    n: usize,
    aligned: bool,
) -> Vec<Vec<u64>> {
    loop {
        let mut frame: Vec<Vec<u64>> = (0..n).map(|_| random_vector(rng, field, n)).collect();
        if aligned {
            for v in frame[0][1..].iter_mut() {
                *v = 0;
            }
        }
        if Matrix::from_rows(n, &frame).rank(field) == n {
            return frame;
        }
    }
}

fn identity(n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema_roundtrip() {
        let json = r#"{
            "n": 2, "d": 4, "r": 1, "prime": 101, "seed": 9,
            "schemes": [
                {"staircase": [[0,0],[0,1]], "position": "generic_on_divisor", "offset": 1},
                {"staircase": [[0,0]], "position": {"explicit": [0, 3]}},
                {"staircase": [[0,0],[1,0]], "position": "generic",
                 "frame": [[1,2],[0,1]]}
            ]
        }"#;
        let spec: SystemSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec.schemes[0].offset, 1);
        assert_eq!(spec.schemes[1].position, Position::Explicit(vec![0, 3]));
        let back: SystemSpec =
            serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn json_rejects_non_staircases_and_bad_primes() {
        let bad_points =
            r#"{"n": 2, "d": 2, "schemes": [{"staircase": [[1,1]], "position": "generic"}]}"#;
        assert!(serde_json::from_str::<SystemSpec>(bad_points).is_err());
        let bad_prime = r#"{"n": 2, "d": 2, "prime": 100}"#;
        assert!(serde_json::from_str::<SystemSpec>(bad_prime).is_err());
        let defaults: SystemSpec = serde_json::from_str(r#"{"n": 1, "d": 3}"#).unwrap();
        assert_eq!(defaults.prime.modulus(), DEFAULT_PRIME);
        assert_eq!((defaults.r, defaults.seed), (0, 0));
    }

    #[test]
    fn projective_coordinates_and_chart() {
        let e = Staircase::big_point(2, 1);
        let spec =
            SystemSpec::new(2, 2).with_scheme(SchemePlacement::explicit(e.clone(), vec![2, 4, 6]));
        assert_eq!(spec.realize().unwrap()[0].point, vec![2, 3]);
        let spec = SystemSpec::new(2, 2).with_scheme(SchemePlacement::explicit(e, vec![0, 1, 1]));
        assert_eq!(
            spec.realize(),
            Err(GeometryError::ChartViolation { scheme: 0 })
        );
    }

    #[test]
    fn divisor_frames_are_aligned() {
        let e = Staircase::big_point(2, 2);
        let spec = SystemSpec::new(2, 3)
            .with_scheme(SchemePlacement::generic_on_divisor(e.clone()))
            .with_seed(4);
        let real = spec.realize().unwrap();
        assert_eq!(real[0].point[0], 0);
        assert_eq!(real[0].frame[0][1], 0);
        assert_ne!(real[0].frame[0][0], 0);
        let skew = SystemSpec::new(2, 3).with_scheme(
            SchemePlacement::explicit(e, vec![0, 5]).with_frame(vec![vec![1, 1], vec![0, 1]]),
        );
        assert_eq!(
            skew.realize(),
            Err(GeometryError::FrameNotAligned { scheme: 0 })
        );
    }

    #[test]
    fn offsets_need_the_divisor() {
        let e = Staircase::big_point(2, 1);
        let off = SystemSpec::new(2, 3)
            .with_divisor_multiplicity(1)
            .with_scheme(SchemePlacement::explicit(e.clone(), vec![1, 1]).with_offset(1));
        assert_eq!(
            off.realize(),
            Err(GeometryError::OffsetOffDivisor { scheme: 0 })
        );
        let too_big = SystemSpec::new(2, 3)
            .with_scheme(SchemePlacement::explicit(e, vec![0, 1]).with_offset(1));
        assert!(matches!(
            too_big.validate(),
            Err(GeometryError::BadOffset { .. })
        ));
    }

    #[test]
    fn pinning_freezes_the_realization() {
        let spec = crate::geometry::Preset::ConicSpecial.spec(PrimeField::default(), 3);
        let pinned = spec.pinned().unwrap();
        assert!(pinned
            .schemes
            .iter()
            .all(|s| matches!(s.position, Position::Explicit(_))));
        assert_eq!(pinned.realize().unwrap(), spec.realize().unwrap());
        let partial = spec.pinned_except(Some(1)).unwrap();
        assert!(partial.schemes[1].is_generic());
    }

    #[test]
    fn specialization_errors() {
        let spec = SystemSpec::new(2, 2).with_scheme(SchemePlacement::explicit(
            Staircase::big_point(2, 1),
            vec![0, 0],
        ));
        assert_eq!(
            specialize_onto_divisor(&spec, 0),
            Err(GeometryError::AlreadySpecial { index: 0 })
        );
        assert_eq!(
            specialize_onto_divisor(&spec, 3),
            Err(GeometryError::NoSuchScheme { index: 3 })
        );
    }
}
