//! Construction and exact certification of d-dimensional Horton sets.
//!
//! A planar Horton set interleaves two recursively built halves, one placed
//! far above the other; the d-dimensional generalization splits by index
//! residue modulo a per-dimension prime and demands that residue classes can
//! be separated by "deep below" relations, that each class is again Horton,
//! and that dropping the last coordinate leaves a (d-1)-dimensional Horton
//! set.
//!
//! The defining properties say nothing about coordinates, so the constructor
//! works by recipe and proof-by-checking: write each coordinate as a digit
//! expansion of the point index over a tower of rapidly growing scales, add a
//! moment-curve term (i, i^2, ..., i^d) to rule out structural degeneracies,
//! then run the exact verifier and double the scale base until it certifies.
//! The verifier shares only the exact kernel with the constructor.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use itertools::Itertools;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{self, Point};
use crate::pointset::PointSet;
use crate::rational::Rational;

/// Default size cap for verification (clause checks are exponential in the
/// per-dimension prime and quadratic-plus in n).
pub const VERIFY_DEFAULT_CAP: usize = 256;

const SCALE_RETRY_CAP: usize = 20;

#[derive(Debug, Clone)]
pub struct HortonParams {
    pub dim: usize,
    pub n: usize,
    /// Initial scale base for the verify-then-double loop; at least 2.
    pub scale_seed: u64,
}

impl HortonParams {
    pub fn new(dim: usize, n: usize) -> Self {
        HortonParams {
            dim,
            n,
            scale_seed: 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HortonReport {
    pub strongly_general: bool,
    pub projection_ok: bool,
    pub classes_ok: bool,
    pub partitions_ok: bool,
    pub witnesses: Vec<String>,
}

impl HortonReport {
    pub fn all_ok(&self) -> bool {
        self.strongly_general && self.projection_ok && self.classes_ok && self.partitions_ok
    }
}

/// The prime governing the residue classes in dimension d: 2, 3, 5, ...
fn prime_for_dim(d: usize) -> Result<usize> {
    const PRIMES: [usize; 6] = [2, 3, 5, 7, 11, 13];
    PRIMES
        .get(d.checked_sub(2).ok_or_else(|| {
            Error::InvalidArgument("residue classes start at dimension 2".into())
        })?)
        .copied()
        .ok_or_else(|| Error::Unsupported(format!("dimension {d} is beyond the supported range")))
}

fn digits_needed(n: usize, p: usize) -> usize {
    let mut levels = 1usize;
    let mut reach = p;
    while reach < n {
        reach *= p;
        levels += 1;
    }
    levels
}

/// One candidate point set for the scale base `base`.
fn build_candidate(d: usize, n: usize, base: &BigInt) -> Result<PointSet> {
    let mut points = Vec::with_capacity(n);
    // Exponent plan: within a coordinate, scales fall in an arithmetic
    // ladder whose gap dominates (d+2 times over) everything the previous
    // coordinates can span, so hyperplane slopes from finer structure stay
    // far below every class separation once the base is large enough.
    let mut gaps = Vec::with_capacity(d + 1);
    let mut levels = Vec::with_capacity(d + 1);
    let mut prev_top: usize = 1;
    for j in 2..=d {
        let p = prime_for_dim(j)?;
        let l = digits_needed(n, p);
        let gap = (d + 2) * (prev_top + 2);
        gaps.push(gap);
        levels.push(l);
        prev_top = l * (p - 1) * gap;
    }
    for i in 0..n {
        let mut coords = Vec::with_capacity(d);
        coords.push(Rational::from_integer(BigInt::from(i)));
        for j in 2..=d {
            let p = prime_for_dim(j)?;
            let l = levels[j - 2];
            let gap = gaps[j - 2];
            let mut value = BigInt::from(i).pow(j as u32);
            let mut rest = i;
            for level in 0..l {
                let digit = rest % p;
                rest /= p;
                if digit > 0 {
                    // Digit values get exponentially staggered offsets, so
                    // within any group of residue classes the topmost class
                    // is separated by far more than the rest spread; splits
                    // nearer the least significant digit dwarf finer ones.
                    let rung = (l - 1 - level) * (p - 1) + digit;
                    value += base.pow((rung * gap) as u32);
                }
            }
            coords.push(Rational::from_integer(value));
        }
        points.push(Point::new(coords));
    }
    PointSet::new(d, points, Some(format!("horton-d{d}-n{n}")))
}

/// Builds a certified d-Horton set on n points.
pub fn horton_d(d: usize, n: usize, params: &HortonParams) -> Result<PointSet> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    if params.scale_seed < 2 {
        return Err(Error::InvalidArgument("scale seed must be at least 2".into()));
    }
    if d == 1 {
        let points = (0..n)
            .map(|i| Point::new(vec![Rational::from_integer(BigInt::from(i))]))
            .collect();
        return PointSet::new(1, points, Some(format!("horton-d1-n{n}")));
    }
    prime_for_dim(d)?;
    let mut base = BigInt::from(params.scale_seed);
    for _ in 0..SCALE_RETRY_CAP {
        let candidate = build_candidate(d, n, &base)?;
        let report = verify_horton_capped(&candidate, usize::MAX)?;
        if report.all_ok() {
            return Ok(candidate);
        }
        base *= 2;
    }
    Err(Error::RetryLimit(format!(
        "no certified scale base found for d = {d}, n = {n} within {SCALE_RETRY_CAP} doublings"
    )))
}

/// The classic planar construction.
pub fn horton_planar(n: usize) -> Result<PointSet> {
    horton_d(2, n, &HortonParams::new(2, n))
}

/// Normal vector of the hyperplane through `pts` (d points in R^d) via the
/// generalized cross product of the difference vectors, or None if the
/// points do not span a hyperplane. The last component is the coefficient of
/// the vertical direction.
fn hyperplane_normal(pts: &[&Point]) -> Option<Vec<Rational>> {
    let d = pts[0].dim();
    debug_assert_eq!(pts.len(), d);
    let rows: Vec<Vec<Rational>> = pts[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(pts[0].coords())
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    let mut normal = Vec::with_capacity(d);
    let mut sign = if d % 2 == 0 { -1 } else { 1 };
    for skip in 0..d {
        let minor: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != skip)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut v = geom::determinant(minor);
        if sign < 0 {
            v = -v;
        }
        normal.push(v);
        sign = -sign;
    }
    if normal.iter().all(|v| v.is_zero()) {
        None
    } else {
        Some(normal)
    }
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Side {
    Below,
    Above,
}

/// True iff every point of `query` lies strictly on `side` of every
/// hyperplane spanned by d points of `spanning`.
fn all_on_side(query: &[Point], spanning: &[Point], side: Side) -> Result<bool> {
    if spanning.is_empty() {
        return Ok(true);
    }
    let d = spanning[0].dim();
    for combo in spanning.iter().combinations(d) {
        let normal = match hyperplane_normal(&combo) {
            Some(nv) => nv,
            None => continue,
        };
        let vertical = &normal[d - 1];
        if vertical.is_zero() {
            return Err(Error::Degenerate(
                "a spanning tuple determines a vertical hyperplane; below/above is undefined"
                    .into(),
            ));
        }
        for q in query {
            let offset: Rational = q
                .coords()
                .iter()
                .zip(combo[0].coords())
                .zip(&normal)
                .map(|((qc, ac), nc)| (qc - ac) * nc)
                .sum();
            // offset / vertical is the signed height of q over the plane.
            let above = offset.is_positive() == vertical.is_positive();
            if offset.is_zero()
                || (side == Side::Above) != above
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact deep-below test for sets of size at least d each.
pub fn is_deep_below(below: &[Point], above: &[Point]) -> Result<bool> {
    if below.is_empty() || above.is_empty() {
        return Err(Error::InvalidArgument("deep-below needs nonempty sets".into()));
    }
    let d = below[0].dim();
    if below.len() < d || above.len() < d {
        return Err(Error::InvalidArgument(format!(
            "deep-below is defined for sets of at least d = {d} points; \
             use deep_below_ext for smaller sets"
        )));
    }
    Ok(all_on_side(below, above, Side::Below)? && all_on_side(above, below, Side::Above)?)
}

/// Strict feasibility of a system of strict linear inequalities
/// `sum_i c_i x_i + c_last < 0` by Fourier-Motzkin elimination.
fn fm_strict_feasible(mut rows: Vec<Vec<Rational>>, nvars: usize) -> bool {
    for var in 0..nvars {
        let mut pos: Vec<Vec<Rational>> = Vec::new();
        let mut neg: Vec<Vec<Rational>> = Vec::new();
        let mut next: Vec<Vec<Rational>> = Vec::new();
        for row in rows {
            if row[var].is_positive() {
                pos.push(row);
            } else if row[var].is_negative() {
                neg.push(row);
            } else {
                next.push(row);
            }
        }
        for p in &pos {
            for q in &neg {
                let pc = &p[var];
                let qc = &q[var];
                let mut combined: Vec<Rational> = p
                    .iter()
                    .zip(q)
                    .map(|(a, b)| a * (-qc) + b * pc)
                    .collect();
                // Normalize so duplicates collapse.
                let lead = combined
                    .iter()
                    .find(|v| !v.is_zero())
                    .cloned();
                if let Some(lead) = lead {
                    let scale = if lead.is_negative() { -lead } else { lead };
                    for v in &mut combined {
                        *v /= &scale;
                    }
                }
                next.push(combined);
            }
        }
        let mut seen = HashSet::new();
        next.retain(|row| seen.insert(row.clone()));
        rows = next;
    }
    rows.iter().all(|row| row[nvars].is_negative())
}

/// Is there a nonvertical hyperplane with `below` strictly under it and
/// `above` strictly over it?
fn strictly_separable(below: &[Point], above: &[Point], d: usize) -> bool {
    // Unknowns: slopes w_1..w_{d-1} and intercept c of the hyperplane
    // x_d = w . (x_1..x_{d-1}) + c.
    let nvars = d;
    let mut rows = Vec::new();
    for a in above {
        // w . pi(a) + c - a_d < 0
        let mut row: Vec<Rational> = a.coords()[..d - 1].to_vec();
        row.push(Rational::one());
        row.push(-a.coord(d - 1));
        rows.push(row);
    }
    for b in below {
        let mut row: Vec<Rational> = b.coords()[..d - 1].iter().map(|c| -c).collect();
        row.push(-Rational::one());
        row.push(b.coord(d - 1).clone());
        rows.push(row);
    }
    fm_strict_feasible(rows, nvars)
}

/// Deep-below for sets of arbitrary size: when both sides have at least d
/// points this is the exact test; smaller sides are handled through the
/// superset clause, which reduces to the hyperplane conditions against the
/// large side plus strict separability by a nonvertical hyperplane.
pub fn deep_below_ext(below: &[Point], above: &[Point]) -> Result<bool> {
    if below.is_empty() || above.is_empty() {
        return Ok(true);
    }
    let d = below[0].dim();
    if below.len() >= d && above.len() >= d {
        return is_deep_below(below, above);
    }
    if above.len() >= d && !all_on_side(below, above, Side::Below)? {
        return Ok(false);
    }
    if below.len() >= d && !all_on_side(above, below, Side::Above)? {
        return Ok(false);
    }
    Ok(strictly_separable(below, above, d))
}

/// Certifies the full recursive definition with the default size cap.
pub fn verify_horton(set: &PointSet) -> Result<HortonReport> {
    verify_horton_capped(set, VERIFY_DEFAULT_CAP)
}

pub fn verify_horton_capped(set: &PointSet, cap: usize) -> Result<HortonReport> {
    if set.len() > cap {
        return Err(Error::CapExceeded {
            n: set.len(),
            cap,
            hint: "raise the verification cap (--cap); the partition clause is exponential in the class prime".into(),
        });
    }
    let mut report = HortonReport {
        strongly_general: set.is_strongly_general_position(),
        projection_ok: true,
        classes_ok: true,
        partitions_ok: true,
        witnesses: Vec::new(),
    };
    if !report.strongly_general {
        report.projection_ok = false;
        report.classes_ok = false;
        report.partitions_ok = false;
        report
            .witnesses
            .push("H: not in strongly general position".into());
        return Ok(report);
    }
    let mut pts = set.points().to_vec();
    // Strong general position gives distinct first coordinates, so the
    // lexicographic order is the first-coordinate order.
    pts.sort_by(|a, b| a.lex_cmp(b));
    check_rec(&mut report, &pts, set.dim(), "H")?;
    Ok(report)
}

fn check_rec(report: &mut HortonReport, pts: &[Point], d: usize, path: &str) -> Result<bool> {
    if d == 1 || pts.len() <= 1 {
        return Ok(true);
    }
    let mut ok = true;
    if d > 2 {
        let projected: Vec<Point> = pts.iter().map(|p| p.project()).collect();
        if !check_rec(report, &projected, d - 1, &format!("{path}.pi"))? {
            report.projection_ok = false;
            ok = false;
        }
    }
    let p = prime_for_dim(d)?;
    let mut classes: Vec<Vec<Point>> = vec![Vec::new(); p];
    for (idx, pt) in pts.iter().enumerate() {
        classes[idx % p].push(pt.clone());
    }
    for (i, class) in classes.iter().enumerate() {
        if !check_rec(report, class, d, &format!("{path}[{i}]"))? {
            report.classes_ok = false;
            ok = false;
        }
    }
    for mask in 1u32..(1 << p) {
        if mask.count_ones() < 2 {
            continue;
        }
        let members: Vec<usize> = (0..p).filter(|i| mask & (1 << i) != 0).collect();
        let mut found = false;
        'partition: for j_mask in 1u32..(1 << members.len()) {
            if j_mask == (1 << members.len()) - 1 {
                break;
            }
            let mut below = Vec::new();
            let mut above = Vec::new();
            for (slot, &class_idx) in members.iter().enumerate() {
                let target = if j_mask & (1 << slot) != 0 {
                    &mut below
                } else {
                    &mut above
                };
                target.extend(classes[class_idx].iter().cloned());
            }
            if deep_below_ext(&below, &above)? {
                found = true;
                break 'partition;
            }
        }
        if !found {
            report.partitions_ok = false;
            report.witnesses.push(format!(
                "{path}: classes {members:?} admit no deep-below partition"
            ));
            ok = false;
        }
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_k_subsets, largest_hole_size, SubsetKind};
    use crate::rational::int;

    fn pt(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn single_point_and_one_dim() {
        let s = horton_planar(1).unwrap();
        assert_eq!(s.len(), 1);
        assert!(verify_horton(&s).unwrap().all_ok());
        let line = horton_d(1, 7, &HortonParams::new(1, 7)).unwrap();
        assert_eq!(line.len(), 7);
        assert_eq!(line.point(3), &pt(&[3]));
        assert!(verify_horton(&line).unwrap().all_ok());
    }

    #[test]
    fn planar_powers_of_two_certify() {
        for n in [2usize, 4, 8, 16] {
            let s = horton_planar(n).unwrap();
            assert!(verify_horton(&s).unwrap().all_ok(), "n = {n}");
        }
    }

    #[test]
    fn planar_odd_size_certifies() {
        let s = horton_planar(11).unwrap();
        assert!(verify_horton(&s).unwrap().all_ok());
    }

    #[test]
    fn planar_sixteen_has_no_seven_hole() {
        let s = horton_planar(16).unwrap();
        let count = count_k_subsets(&s, 7, SubsetKind::Hole).unwrap();
        assert!(count.value.is_zero());
        assert!(largest_hole_size(&s, None).unwrap() <= 6);
    }

    #[test]
    fn three_dimensional_horton_certifies() {
        let s = horton_d(3, 18, &HortonParams::new(3, 18)).unwrap();
        assert_eq!(s.len(), 18);
        let report = verify_horton(&s).unwrap();
        assert!(report.all_ok(), "{report:?}");
        // Dropping the last coordinate leaves a certified planar set.
        let projected = s.project_drop_last().unwrap();
        assert!(verify_horton(&projected).unwrap().all_ok());
    }

    #[test]
    fn grid_is_not_strongly_general() {
        let mut pts = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                pts.push(pt(&[x, y]));
            }
        }
        let s = PointSet::new(2, pts, None).unwrap();
        let report = verify_horton(&s).unwrap();
        assert!(!report.strongly_general);
        assert!(!report.all_ok());
    }

    #[test]
    fn random_sets_fail_partition_clause() {
        use crate::sampler::{sample_set, BodyKind, ConvexBody};
        let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
        let mut failures = 0;
        for seed in 0..3 {
            let s = sample_set(&body, 16, seed).unwrap();
            let report = verify_horton(&s).unwrap();
            if !report.partitions_ok {
                failures += 1;
                assert!(!report.witnesses.is_empty());
            }
        }
        assert!(failures >= 2, "uniform sets should almost never verify");
    }

    #[test]
    fn deep_below_examples() {
        let a = vec![pt(&[0, 100]), pt(&[1, 101])];
        let b = vec![pt(&[0, 0]), pt(&[1, 1])];
        assert!(is_deep_below(&b, &a).unwrap());
        assert!(!is_deep_below(&a, &a).unwrap());
        let steep = vec![pt(&[0, 0]), pt(&[1, 10])];
        let crossed = vec![pt(&[0, 1]), pt(&[1, 2])];
        assert!(!is_deep_below(&crossed, &steep).unwrap());
    }

    #[test]
    fn deep_below_rejects_small_sets_and_vertical_planes() {
        let a = vec![pt(&[0, 100])];
        let b = vec![pt(&[0, 0]), pt(&[1, 1])];
        assert!(is_deep_below(&b, &a).is_err());
        let vertical = vec![pt(&[0, 0]), pt(&[0, 5])];
        assert!(matches!(
            is_deep_below(&b, &vertical),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn extended_deep_below_uses_separability() {
        // Tiny sets are separable in either direction by a tilted plane;
        // only coincident points defeat strict separation.
        let a = vec![pt(&[0, 50])];
        let b = vec![pt(&[1, 0])];
        assert!(deep_below_ext(&b, &a).unwrap());
        assert!(deep_below_ext(&a, &b).unwrap());
        assert!(!deep_below_ext(&a, &a).unwrap());
        // Against a full-size side the hyperplane conditions bind: a point
        // above a chord of the high set cannot be deep below it.
        let high = vec![pt(&[0, 100]), pt(&[2, 100]), pt(&[1, 1000])];
        let low = vec![pt(&[1, 0])];
        assert!(deep_below_ext(&low, &high).unwrap());
        let mid = vec![pt(&[1, 150])];
        assert!(!deep_below_ext(&mid, &high).unwrap());
    }

    #[test]
    fn fm_detects_infeasible_systems() {
        // x < 0 and -x + 1 < 0 (x > 1) cannot hold together.
        let rows = vec![
            vec![int(1), int(0)],
            vec![int(-1), int(1)],
        ];
        assert!(!fm_strict_feasible(rows, 1));
        // x < 0 and -x - 1 < 0 (x > -1) is satisfiable.
        let rows = vec![
            vec![int(1), int(0)],
            vec![int(-1), int(-1)],
        ];
        assert!(fm_strict_feasible(rows, 1));
    }
}
