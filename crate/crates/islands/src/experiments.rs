//! Monte Carlo estimation of hole/island counts and growth-law experiments.
//!
//! Trials are independent and parallelized; every trial derives its own seed
//! from (seed, trial index) and results are aggregated in trial order, so
//! reports are byte-identical across runs and worker counts.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use rayon::prelude::*;
use serde_json::json;

use crate::bounds::{
    bound_planar4_improved, bound_theorem1, bound_theorem2, lower_bound_empty_simplices,
    lower_bound_islands,
};
use crate::enumerate::{count_all_islands, count_k_subsets, AllIslandsMethod, SubsetKind};
use crate::error::{Error, Result};
use crate::horton::{horton_d, HortonParams};
use crate::rational::{to_f64, Rational};
use crate::sampler::{sample_set, ConvexBody};

fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(trial as u64)
        .rotate_left(17)
}

#[derive(Debug, Clone)]
pub struct EstimateReport {
    pub body: String,
    pub d: usize,
    pub k: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub kind: SubsetKind,
    pub counts: Vec<BigInt>,
    pub mean: f64,
    pub stderr: f64,
    pub min: BigInt,
    pub max: BigInt,
    /// Applicable closed-form values; None where preconditions fail.
    pub bound_t1: Option<Rational>,
    pub bound_t2: Option<Rational>,
    pub bound_c3: Option<Rational>,
    pub lower_bound: Option<Rational>,
    /// mean + 4 stderr stays within the applicable upper bound.
    pub upper_ok: Option<bool>,
    /// Every single trial meets the deterministic lower bound.
    pub lower_ok: Option<bool>,
}

impl EstimateReport {
    pub fn pass(&self) -> bool {
        self.upper_ok.unwrap_or(true) && self.lower_ok.unwrap_or(true)
    }

    pub fn to_csv(&self) -> String {
        let fmt_bound = |b: &Option<Rational>| match b {
            Some(v) => format!("{}", to_f64(v)),
            None => String::new(),
        };
        let mut out = String::from(
            "body,d,k,n,trials,seed,kind,mean,stderr,min,max,bound_t1,bound_t2,bound_c3,lower_bound,pass\n",
        );
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            self.body,
            self.d,
            self.k,
            self.n,
            self.trials,
            self.seed,
            self.kind.name(),
            self.mean,
            self.stderr,
            self.min,
            self.max,
            fmt_bound(&self.bound_t1),
            fmt_bound(&self.bound_t2),
            fmt_bound(&self.bound_c3),
            fmt_bound(&self.lower_bound),
            self.pass(),
        ));
        out
    }

    pub fn to_json(&self) -> String {
        let bound = |b: &Option<Rational>| b.as_ref().map(to_f64);
        serde_json::to_string_pretty(&json!({
            "body": self.body,
            "d": self.d,
            "k": self.k,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "kind": self.kind.name(),
            "mean": self.mean,
            "stderr": self.stderr,
            "min": self.min.to_string(),
            "max": self.max.to_string(),
            "bound_t1": bound(&self.bound_t1),
            "bound_t2": bound(&self.bound_t2),
            "bound_c3": bound(&self.bound_c3),
            "lower_bound": bound(&self.lower_bound),
            "upper_ok": self.upper_ok,
            "lower_ok": self.lower_ok,
            "pass": self.pass(),
        }))
        .expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {}s, d={}, k={}, n={}, {} trials (seed {})\n\
             mean {:.4} +- {:.4} (stderr), range [{}, {}]\n",
            self.body,
            self.kind.name(),
            self.d,
            self.k,
            self.n,
            self.trials,
            self.seed,
            self.mean,
            self.stderr,
            self.min,
            self.max
        );
        if let Some(b) = &self.bound_t1 {
            out.push_str(&format!("  island bound (theorem1): {:.4}\n", to_f64(b)));
        }
        if let Some(b) = &self.bound_t2 {
            out.push_str(&format!("  hole bound (theorem2):   {:.4}\n", to_f64(b)));
        }
        if let Some(b) = &self.lower_bound {
            out.push_str(&format!("  lower bound:             {:.4}\n", to_f64(b)));
        }
        out.push_str(&format!("  pass: {}\n", self.pass()));
        out
    }
}

/// Samples `trials` point sets and counts k-holes or k-islands exactly on
/// each, then compares the sample mean against the closed-form bounds.
pub fn monte_carlo(
    body: &ConvexBody,
    k: usize,
    n: usize,
    trials: usize,
    seed: u64,
    kind: SubsetKind,
) -> Result<EstimateReport> {
    if kind == SubsetKind::Convex {
        return Err(Error::InvalidArgument(
            "estimation covers holes and islands".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    let d = body.dim();
    let counts: Vec<BigInt> = (0..trials)
        .into_par_iter()
        .map(|t| -> Result<BigInt> {
            let set = sample_set(body, n, trial_seed(seed, t))?;
            Ok(count_k_subsets(&set, k, kind)?.value)
        })
        .collect::<Result<Vec<_>>>()?;

    let mean_exact: Rational = counts
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .sum::<Rational>()
        / Rational::from_integer(BigInt::from(trials));
    let mean = to_f64(&mean_exact);
    let variance: f64 = if trials > 1 {
        counts
            .iter()
            .map(|c| {
                let x = c.to_f64().unwrap_or(f64::NAN);
                (x - mean) * (x - mean)
            })
            .sum::<f64>()
            / (trials as f64 - 1.0)
    } else {
        0.0
    };
    let stderr = (variance / trials as f64).sqrt();
    let min = counts.iter().min().cloned().expect("nonempty");
    let max = counts.iter().max().cloned().expect("nonempty");

    let valid_upper = k >= d + 1 && n >= k && d >= 2;
    let bound_t1 = valid_upper.then(|| bound_theorem1(d, k, n).map(|b| b.value)).transpose()?;
    let bound_t2 = valid_upper.then(|| bound_theorem2(d, k, n).map(|b| b.value)).transpose()?;
    let bound_c3 = (k == d + 1 && n >= k && d >= 2)
        .then(|| bound_corollary3_value(d, n))
        .transpose()?;
    let planar4 = (d == 2 && k == 4 && n >= 4)
        .then(|| bound_planar4_improved(n).map(|b| b.value))
        .transpose()?;

    let upper = match kind {
        SubsetKind::Island => bound_t1.clone(),
        SubsetKind::Hole => match (&bound_t2, &planar4) {
            (Some(t2), Some(p4)) => Some(t2.clone().min(p4.clone())),
            (Some(t2), None) => Some(t2.clone()),
            _ => None,
        },
        SubsetKind::Convex => unreachable!(),
    };
    let upper_ok = upper
        .as_ref()
        .map(|b| mean + 4.0 * stderr <= to_f64(b));

    let lower_bound = match kind {
        SubsetKind::Hole if k == d + 1 => Some(lower_bound_empty_simplices(d, n)?.value),
        SubsetKind::Island if k >= d && n >= k => Some(lower_bound_islands(d, k, n)?.value),
        _ => None,
    };
    let lower_ok = lower_bound.as_ref().map(|lb| {
        counts
            .iter()
            .all(|c| Rational::from_integer(c.clone()) >= *lb)
    });

    Ok(EstimateReport {
        body: body.name().to_string(),
        d,
        k,
        n,
        trials,
        seed,
        kind,
        counts,
        mean,
        stderr,
        min,
        max,
        bound_t1,
        bound_t2,
        bound_c3,
        lower_bound,
        upper_ok,
        lower_ok,
    })
}

fn bound_corollary3_value(d: usize, n: usize) -> Result<Rational> {
    Ok(crate::bounds::bound_corollary3(d, n)?.value)
}

/// What the growth experiment runs on.
#[derive(Debug, Clone)]
pub enum GrowthSource {
    /// Random sets from a body; counts all islands (sizes are capped).
    RandomBody(ConvexBody),
    /// Horton sets with a fixed island size k.
    Horton { d: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthTransform {
    /// log2(count) against n^((d-1)/(d+1)).
    Log2VsPow,
    /// ln(count) against ln(n).
    LogLog,
}

impl GrowthTransform {
    pub fn name(&self) -> &'static str {
        match self {
            GrowthTransform::Log2VsPow => "log2_vs_pow",
            GrowthTransform::LogLog => "loglog",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GrowthReport {
    pub source: String,
    pub d: usize,
    pub k: Option<usize>,
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Mean count per size (exact for Horton sources).
    pub means: Vec<f64>,
    pub transform: GrowthTransform,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub fitted_slope: Option<f64>,
    pub intercept: Option<f64>,
    pub r_squared: Option<f64>,
    pub residuals: Vec<f64>,
}

impl GrowthReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("source,d,k,n,trials,seed,transform,mean_count,x,y,slope,r_squared\n");
        let slope = self
            .fitted_slope
            .map(|s| s.to_string())
            .unwrap_or_default();
        let r2 = self.r_squared.map(|r| r.to_string()).unwrap_or_default();
        let k = self.k.map(|k| k.to_string()).unwrap_or_else(|| "all".into());
        for (i, &n) in self.sizes.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                self.source,
                self.d,
                k,
                n,
                self.trials,
                self.seed,
                self.transform.name(),
                self.means[i],
                self.xs[i],
                self.ys[i],
                slope,
                r2,
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&json!({
            "source": self.source,
            "d": self.d,
            "k": self.k,
            "sizes": self.sizes,
            "trials": self.trials,
            "seed": self.seed,
            "means": self.means,
            "transform": self.transform.name(),
            "xs": self.xs,
            "ys": self.ys,
            "fitted_slope": self.fitted_slope,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "residuals": self.residuals,
        }))
        .expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "growth on {} (d={}, k={}, transform {})\n",
            self.source,
            self.d,
            self.k.map(|k| k.to_string()).unwrap_or_else(|| "all".into()),
            self.transform.name()
        );
        for (i, &n) in self.sizes.iter().enumerate() {
            out.push_str(&format!(
                "  n={:>4}  mean count {:>14.2}  x {:.4}  y {:.4}\n",
                n, self.means[i], self.xs[i], self.ys[i]
            ));
        }
        match (self.fitted_slope, self.r_squared) {
            (Some(s), Some(r2)) => {
                out.push_str(&format!("  fitted slope {s:.4}, R^2 {r2:.4}\n"));
            }
            _ => out.push_str("  single size: slope undefined\n"),
        }
        out
    }
}

/// Ordinary least squares: slope, intercept, R^2.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Option<(f64, f64, f64)> {
    if xs.len() < 2 {
        return None;
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Some((slope, intercept, r2))
}

/// Counts islands across a range of sizes and fits the predicted growth
/// shape: all-island counts of random sets against n^((d-1)/(d+1)), or
/// fixed-k counts on Horton sets on a log-log scale.
pub fn growth_experiment(
    source: &GrowthSource,
    sizes: &[usize],
    trials: usize,
    seed: u64,
    cap: Option<usize>,
) -> Result<GrowthReport> {
    if sizes.is_empty() {
        return Err(Error::InvalidArgument("need at least one size".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("sizes must be strictly increasing".into()));
    }
    let mut means = Vec::with_capacity(sizes.len());
    let (source_name, d, k, transform) = match source {
        GrowthSource::RandomBody(body) => {
            if trials == 0 {
                return Err(Error::InvalidArgument("need at least one trial".into()));
            }
            for &n in sizes {
                let counts: Vec<BigInt> = (0..trials)
                    .into_par_iter()
                    .map(|t| -> Result<BigInt> {
                        let set = sample_set(body, n, trial_seed(seed, t))?;
                        Ok(count_all_islands(&set, AllIslandsMethod::ConvexBijection, cap)?.value)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let mean = counts
                    .iter()
                    .map(|c| c.to_f64().unwrap_or(f64::NAN))
                    .sum::<f64>()
                    / trials as f64;
                means.push(mean);
            }
            (
                body.name().to_string(),
                body.dim(),
                None,
                GrowthTransform::Log2VsPow,
            )
        }
        GrowthSource::Horton { d, k } => {
            for &n in sizes {
                let set = horton_d(*d, n, &HortonParams::new(*d, n))?;
                let count = count_k_subsets(&set, *k, SubsetKind::Island)?.value;
                if count.is_zero() {
                    return Err(Error::Degenerate(format!(
                        "no {k}-islands at n = {n}; growth transform undefined"
                    )));
                }
                means.push(count.to_f64().unwrap_or(f64::NAN));
            }
            (
                "horton".to_string(),
                *d,
                Some(*k),
                GrowthTransform::LogLog,
            )
        }
    };

    let (xs, ys): (Vec<f64>, Vec<f64>) = sizes
        .iter()
        .zip(&means)
        .map(|(&n, &m)| match transform {
            GrowthTransform::Log2VsPow => {
                let exponent = (d as f64 - 1.0) / (d as f64 + 1.0);
                ((n as f64).powf(exponent), m.log2())
            }
            GrowthTransform::LogLog => ((n as f64).ln(), m.ln()),
        })
        .unzip();

    let fit = least_squares(&xs, &ys);
    let residuals = match fit {
        Some((slope, intercept, _)) => xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| y - (slope * x + intercept))
            .collect(),
        None => Vec::new(),
    };
    Ok(GrowthReport {
        source: source_name,
        d,
        k,
        sizes: sizes.to_vec(),
        trials,
        seed,
        means,
        transform,
        xs,
        ys,
        fitted_slope: fit.map(|f| f.0),
        intercept: fit.map(|f| f.1),
        r_squared: fit.map(|f| f.2),
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::BodyKind;

    #[test]
    fn trivial_pair_counts_are_exact() {
        let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
        let report = monte_carlo(&body, 2, 10, 5, 7, SubsetKind::Island).unwrap();
        assert_eq!(report.mean, 45.0);
        assert_eq!(report.stderr, 0.0);
        assert_eq!(report.min, BigInt::from(45));
        assert_eq!(report.max, BigInt::from(45));
        assert!(report.pass());
    }

    #[test]
    fn determinism_across_runs() {
        let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
        let a = monte_carlo(&body, 3, 12, 4, 99, SubsetKind::Hole).unwrap();
        let b = monte_carlo(&body, 3, 12, 4, 99, SubsetKind::Hole).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn hole_counts_never_exceed_island_counts() {
        let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
        let holes = monte_carlo(&body, 4, 11, 6, 3, SubsetKind::Hole).unwrap();
        let islands = monte_carlo(&body, 4, 11, 6, 3, SubsetKind::Island).unwrap();
        for (h, i) in holes.counts.iter().zip(&islands.counts) {
            assert!(h <= i);
        }
    }

    #[test]
    fn empty_simplex_lower_bound_holds_per_trial() {
        let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
        let report = monte_carlo(&body, 3, 12, 10, 5, SubsetKind::Hole).unwrap();
        assert_eq!(report.lower_ok, Some(true));
        for c in &report.counts {
            assert!(c >= &BigInt::from(55));
        }
    }

    #[test]
    fn least_squares_recovers_a_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [3.0, 5.0, 7.0, 9.0];
        let (slope, intercept, r2) = least_squares(&xs, &ys).unwrap();
        assert!((slope - 2.0).abs() < 1e-12);
        assert!((intercept - 1.0).abs() < 1e-12);
        assert!((r2 - 1.0).abs() < 1e-12);
        assert!(least_squares(&[1.0], &[2.0]).is_none());
    }

    #[test]
    fn horton_growth_has_superlinear_slope() {
        let source = GrowthSource::Horton { d: 2, k: 4 };
        let report = growth_experiment(&source, &[8, 16, 32], 1, 0, None).unwrap();
        let slope = report.fitted_slope.unwrap();
        assert!(slope > 1.0, "slope {slope}");
    }

    #[test]
    fn random_growth_shape() {
        let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
        let source = GrowthSource::RandomBody(body);
        let report = growth_experiment(&source, &[8, 12], 3, 11, None).unwrap();
        assert_eq!(report.transform, GrowthTransform::Log2VsPow);
        assert!(report.fitted_slope.unwrap() > 0.0);
        let single = growth_experiment(&source, &[10], 3, 11, None).unwrap();
        assert!(single.fitted_slope.is_none());
    }
}
