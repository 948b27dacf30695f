//! Uniform random sampling from unit-volume convex bodies with deterministic
//! seeding.
//!
//! Each point index gets its own ChaCha substream derived from the seed, so
//! the output is identical regardless of how sampling is scheduled. Sampled
//! coordinates are exact dyadic rationals (the drawn f64 values converted
//! exactly), and membership in the closed body is re-checked exactly.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::pointset::{find_general_position_violation, PointSet};
use crate::rational::{factorial, from_f64_exact, Rational};

/// Full general-position validation is quadratic-to-quartic in n; above this
/// size the sampler skips it (degeneracies of snapped uniform samples are
/// astronomically unlikely and validation stays available via `PointSet`).
pub const GENERAL_POSITION_CHECK_MAX: usize = 64;

const MAX_RESAMPLES: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BodyKind {
    /// The unit cube [0,1]^d; volume exactly 1.
    UnitCube,
    /// The standard simplex with its first coordinate stretched by d!, so the
    /// volume is exactly 1.
    UnitSimplexScaled,
    /// A ball with rational radius chosen so the volume is within 1e-9
    /// relative of 1.
    BallScaled,
}

#[derive(Debug, Clone)]
pub struct ConvexBody {
    kind: BodyKind,
    dim: usize,
    /// Rational radius for the ball; unused otherwise.
    radius: Option<Rational>,
}

/// Volume of the unit ball in dimension d.
fn unit_ball_volume(d: usize) -> f64 {
    match d {
        0 => 1.0,
        1 => 2.0,
        _ => unit_ball_volume(d - 2) * 2.0 * std::f64::consts::PI / d as f64,
    }
}

impl ConvexBody {
    pub fn new(kind: BodyKind, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Unsupported("dimension must be positive".into()));
        }
        let radius = match kind {
            BodyKind::BallScaled => {
                if dim > 16 {
                    return Err(Error::Unsupported(format!(
                        "ball body not supported in dimension {dim}"
                    )));
                }
                // r = V_d(1)^(-1/d), rounded to 40 fractional bits; the volume
                // error this introduces is well below 1e-9 relative.
                let r = unit_ball_volume(dim).powf(-1.0 / dim as f64);
                let scaled = (r * (1u64 << 40) as f64).round();
                Some(Rational::new(
                    (scaled as i64).into(),
                    (1i64 << 40).into(),
                ))
            }
            _ => None,
        };
        Ok(ConvexBody { kind, dim, radius })
    }

    pub fn from_name(name: &str, dim: usize) -> Result<Self> {
        let kind = match name {
            "cube" => BodyKind::UnitCube,
            "simplex" => BodyKind::UnitSimplexScaled,
            "ball" => BodyKind::BallScaled,
            other => {
                return Err(Error::Unsupported(format!(
                    "unknown body {other:?}; expected cube, simplex or ball"
                )))
            }
        };
        ConvexBody::new(kind, dim)
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            BodyKind::UnitCube => "cube",
            BodyKind::UnitSimplexScaled => "simplex",
            BodyKind::BallScaled => "ball",
        }
    }

    pub fn kind(&self) -> BodyKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Exact membership in the closed body.
    pub fn contains(&self, p: &Point) -> bool {
        if p.dim() != self.dim {
            return false;
        }
        match self.kind {
            BodyKind::UnitCube => p
                .coords()
                .iter()
                .all(|c| !c.is_negative() && *c <= Rational::one()),
            BodyKind::UnitSimplexScaled => {
                if p.coords().iter().any(|c| c.is_negative()) {
                    return false;
                }
                let scale = Rational::from_integer(factorial(self.dim));
                let mut sum = p.coord(0) / scale;
                for c in &p.coords()[1..] {
                    sum += c;
                }
                sum <= Rational::one()
            }
            BodyKind::BallScaled => {
                let r = self.radius.as_ref().expect("ball radius");
                let norm2: Rational = p.coords().iter().map(|c| c * c).sum();
                norm2 <= r * r
            }
        }
    }
}

/// RNG substream for one point: derived from (seed, point index), so points
/// can be drawn in any order or in parallel with identical results.
fn point_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng
}

fn draw_point(body: &ConvexBody, rng: &mut ChaCha8Rng) -> Point {
    let d = body.dim;
    loop {
        let coords: Option<Vec<Rational>> = match body.kind {
            BodyKind::UnitCube => (0..d)
                .map(|_| from_f64_exact(rng.gen::<f64>()))
                .collect(),
            BodyKind::UnitSimplexScaled => {
                // Gaps of sorted uniforms are uniform in the standard solid
                // simplex; the differences of exact dyadics stay exact, so the
                // simplex constraints hold exactly. The first coordinate is
                // then stretched by d!.
                let mut us: Vec<Rational> = match (0..d)
                    .map(|_| from_f64_exact(rng.gen::<f64>()))
                    .collect()
                {
                    Some(v) => v,
                    None => continue,
                };
                us.sort();
                let mut gaps = Vec::with_capacity(d);
                let mut prev = Rational::zero();
                for u in us {
                    gaps.push(&u - &prev);
                    prev = u;
                }
                gaps[0] *= Rational::from_integer(factorial(d));
                Some(gaps)
            }
            BodyKind::BallScaled => {
                let r = body.radius.as_ref().expect("ball radius");
                let z: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
                let norm = z.iter().map(|v| v * v).sum::<f64>().sqrt();
                if norm == 0.0 || !norm.is_finite() {
                    continue;
                }
                let u: f64 = rng.gen();
                // Small inward margin keeps the dyadic snapping from pushing
                // boundary samples outside the exact ball.
                let radius_f = crate::rational::to_f64(r);
                let scale = radius_f * u.powf(1.0 / d as f64) * (1.0 - 1e-12) / norm;
                z.iter().map(|v| from_f64_exact(v * scale)).collect()
            }
        };
        if let Some(coords) = coords {
            let p = Point::new(coords);
            if body.contains(&p) {
                return p;
            }
        }
    }
}

/// Draws `n` points i.i.d. uniform in `body`, deterministically in
/// `(body, n, seed)`.
///
/// For n up to [`GENERAL_POSITION_CHECK_MAX`] the output is validated to be
/// in general position; an offending point is resampled from its own
/// substream until the check passes.
pub fn sample_set(body: &ConvexBody, n: usize, seed: u64) -> Result<PointSet> {
    let mut rngs: Vec<ChaCha8Rng> = (0..n).map(|i| point_rng(seed, i as u64)).collect();
    let mut points: Vec<Point> = rngs
        .iter_mut()
        .map(|rng| draw_point(body, rng))
        .collect();
    let mut retries = 0usize;
    loop {
        // Duplicates are a (measure-zero) failure of general position too.
        let offender = duplicate_index(&points).or_else(|| {
            if n <= GENERAL_POSITION_CHECK_MAX {
                find_general_position_violation(&points, body.dim)
                    .map(|witness| *witness.last().expect("nonempty witness"))
            } else {
                None
            }
        });
        match offender {
            None => break,
            Some(idx) => {
                retries += 1;
                if retries > MAX_RESAMPLES {
                    return Err(Error::RetryLimit(format!(
                        "general-position resampling did not converge after {MAX_RESAMPLES} tries"
                    )));
                }
                points[idx] = draw_point(body, &mut rngs[idx]);
            }
        }
    }
    PointSet::new(
        body.dim,
        points,
        Some(format!("{}-d{}-n{}-seed{}", body.name(), body.dim, n, seed)),
    )
}

fn duplicate_index(points: &[Point]) -> Option<usize> {
    for i in 1..points.len() {
        if points[..i].contains(&points[i]) {
            return Some(i);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::to_f64;

    #[test]
    fn deterministic_in_seed() {
        let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
        let a = sample_set(&body, 5, 42).unwrap();
        let b = sample_set(&body, 5, 42).unwrap();
        assert_eq!(a, b);
        let c = sample_set(&body, 5, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn all_points_inside_each_body() {
        for (kind, dim) in [
            (BodyKind::UnitCube, 2),
            (BodyKind::UnitCube, 3),
            (BodyKind::UnitSimplexScaled, 2),
            (BodyKind::UnitSimplexScaled, 3),
            (BodyKind::BallScaled, 2),
            (BodyKind::BallScaled, 3),
        ] {
            let body = ConvexBody::new(kind, dim).unwrap();
            let set = sample_set(&body, 40, 7).unwrap();
            for p in set.points() {
                assert!(body.contains(p), "{p:?} outside {}", body.name());
            }
        }
    }

    #[test]
    fn sampled_sets_are_general_position() {
        for seed in 0..5 {
            let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
            let set = sample_set(&body, 20, seed).unwrap();
            assert!(set.is_general_position());
        }
        let body = ConvexBody::new(BodyKind::UnitCube, 3).unwrap();
        let set = sample_set(&body, 12, 9).unwrap();
        assert!(set.is_general_position());
    }

    #[test]
    fn cube_mean_first_coordinate_clt() {
        let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
        let n = 10_000;
        let set = sample_set(&body, n, 1234).unwrap();
        let mean: f64 = set.points().iter().map(|p| to_f64(p.coord(0))).sum::<f64>() / n as f64;
        // CLT bound: 0.5 +- 4 * sqrt(1/12/n)
        let margin = 4.0 / (12.0 * n as f64).sqrt();
        assert!((mean - 0.5).abs() < margin, "mean {mean} outside CLT bound");
    }

    #[test]
    fn ball_radius_volume_tolerance() {
        for dim in [2usize, 3, 4] {
            let body = ConvexBody::new(BodyKind::BallScaled, dim).unwrap();
            let r = to_f64(body.radius.as_ref().unwrap());
            let volume = unit_ball_volume(dim) * r.powi(dim as i32);
            assert!((volume - 1.0).abs() < 1e-9, "volume {volume} in dim {dim}");
        }
    }

    #[test]
    fn unknown_body_rejected() {
        assert!(ConvexBody::from_name("torus", 2).is_err());
    }
}
