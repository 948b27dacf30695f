//! Exact-arithmetic geometric kernel: orientations, simplex volumes, distances
//! to affine and convex hulls, and hull membership.
//!
//! Every predicate here works on exact rationals; there are no epsilon
//! tolerances anywhere. Distances are kept squared so that all quantities stay
//! rational. Hull queries use Caratheodory-style subset enumeration, which is
//! exponential in the subset size but fine for the small subsets this crate
//! deals with.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// An immutable point with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    /// Coordinatewise lexicographic order; the tie-break order used everywhere.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        self.coords.cmp(&other.coords)
    }

    /// Drops the last coordinate.
    pub fn project(&self) -> Point {
        Point::new(self.coords[..self.coords.len() - 1].to_vec())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_rational(c))?;
        }
        write!(f, ")")
    }
}

/// Classification of a query point against a convex hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullPosition {
    Interior,
    Boundary,
    Outside,
}

fn check_dims(points: &[Point], d: usize) -> Result<()> {
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: p.dim(),
            });
        }
    }
    Ok(())
}

/// Determinant by fraction-based Gaussian elimination. Consumes the matrix.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::from_integer(1.into());
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => return Rational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col + 1..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
            m[r][col] = Rational::zero();
        }
    }
    det
}

/// Rank of a set of vectors (rows).
fn row_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        m.swap(pivot, row);
        let pv = m[row][col].clone();
        for r in row + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..cols {
                let sub = &factor * &m[row][c];
                m[r][c] -= sub;
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

fn diff(a: &Point, b: &Point) -> Vec<Rational> {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| x - y)
        .collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dimension of the affine hull of `points`.
pub fn affine_rank(points: &[Point]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = points[1..].iter().map(|p| diff(p, &points[0])).collect();
    row_rank(rows)
}

/// True iff the points span an affine subspace of dimension `len - 1`.
pub fn affinely_independent(points: &[Point]) -> bool {
    affine_rank(points) + 1 == points.len()
}

/// Sign of the orientation determinant of `d + 1` points in dimension `d`.
///
/// Zero iff the points are affinely dependent. The sign flips under any
/// transposition of two input points.
pub fn orientation(simplex: &[Point]) -> Result<i8> {
    if simplex.is_empty() {
        return Err(Error::InvalidArgument("empty simplex".into()));
    }
    let d = simplex[0].dim();
    check_dims(simplex, d)?;
    if simplex.len() != d + 1 {
        return Err(Error::InvalidArgument(format!(
            "orientation needs {} points in dimension {}, got {}",
            d + 1,
            d,
            simplex.len()
        )));
    }
    let m: Vec<Vec<Rational>> = simplex[1..].iter().map(|p| diff(p, &simplex[0])).collect();
    let det = determinant(m);
    Ok(if det.is_zero() {
        0
    } else if det.is_positive() {
        1
    } else {
        -1
    })
}

/// Exact d-dimensional volume |det| / d! of a simplex on `d + 1` points.
pub fn simplex_volume(simplex: &[Point]) -> Result<Rational> {
    if simplex.is_empty() {
        return Err(Error::InvalidArgument("empty simplex".into()));
    }
    let d = simplex[0].dim();
    check_dims(simplex, d)?;
    if simplex.len() != d + 1 {
        return Err(Error::InvalidArgument(format!(
            "volume needs {} points in dimension {}, got {}",
            d + 1,
            d,
            simplex.len()
        )));
    }
    let m: Vec<Vec<Rational>> = simplex[1..].iter().map(|p| diff(p, &simplex[0])).collect();
    let det = determinant(m);
    Ok(det.abs() / Rational::from_integer(crate::rational::factorial(d)))
}

fn gram(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    vectors
        .iter()
        .map(|v| vectors.iter().map(|w| dot(v, w)).collect())
        .collect()
}

/// Exact squared Euclidean distance from `q` to the affine hull of `a`.
///
/// Computed as a Gram-determinant ratio, which stays rational. Errors if `a`
/// is affinely dependent.
pub fn squared_distance_to_affine_hull(q: &Point, a: &[Point]) -> Result<Rational> {
    if a.is_empty() {
        return Err(Error::InvalidArgument("empty affine basis".into()));
    }
    let d = q.dim();
    check_dims(a, d)?;
    if !affinely_independent(a) {
        return Err(Error::Degenerate(
            "affinely dependent basis for affine hull distance".into(),
        ));
    }
    let w = diff(q, &a[0]);
    if a.len() == 1 {
        return Ok(dot(&w, &w));
    }
    let vs: Vec<Vec<Rational>> = a[1..].iter().map(|p| diff(p, &a[0])).collect();
    let g_base = determinant(gram(&vs));
    let mut all = vs;
    all.push(w);
    let g_ext = determinant(gram(&all));
    Ok(g_ext / g_base)
}

/// Solves the square linear system `m x = rhs`. Errors if singular.
fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let pivot = pivot.ok_or_else(|| Error::Degenerate("singular linear system".into()))?;
        m.swap(pivot, col);
        rhs.swap(pivot, col);
        let pv = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
            let sub = &factor * &rhs[col];
            rhs[r] -= sub;
        }
    }
    Ok((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

/// Barycentric coordinates of `q` with respect to an affinely independent
/// tuple `t`, provided `q` lies in the affine hull of `t`.
fn barycentric(q: &Point, t: &[Point]) -> Option<Vec<Rational>> {
    let vs: Vec<Vec<Rational>> = t[1..].iter().map(|p| diff(p, &t[0])).collect();
    let w = diff(q, &t[0]);
    if vs.is_empty() {
        return if w.iter().all(|x| x.is_zero()) {
            Some(vec![Rational::from_integer(1.into())])
        } else {
            None
        };
    }
    // q must lie in aff(t): the normal-equation solution must reproduce w.
    let g: Vec<Vec<Rational>> = vs.iter().map(|v| vs.iter().map(|u| dot(v, u)).collect()).collect();
    let rhs: Vec<Rational> = vs.iter().map(|v| dot(v, &w)).collect();
    let lambda = solve(g, rhs).ok()?;
    // residual check: w == sum lambda_i v_i
    for c in 0..w.len() {
        let mut acc = Rational::zero();
        for (l, v) in lambda.iter().zip(&vs) {
            acc += l * &v[c];
        }
        if acc != w[c] {
            return None;
        }
    }
    let mut coords = Vec::with_capacity(t.len());
    let sum: Rational = lambda.iter().sum();
    coords.push(Rational::from_integer(1.into()) - sum);
    coords.extend(lambda);
    Some(coords)
}

/// Orthogonal projection of `q` onto the affine hull of an affinely
/// independent tuple `t`, as barycentric coordinates over `t`.
fn project_barycentric(q: &Point, t: &[Point]) -> Vec<Rational> {
    let vs: Vec<Vec<Rational>> = t[1..].iter().map(|p| diff(p, &t[0])).collect();
    let w = diff(q, &t[0]);
    if vs.is_empty() {
        return vec![Rational::from_integer(1.into())];
    }
    let g: Vec<Vec<Rational>> = vs.iter().map(|v| vs.iter().map(|u| dot(v, u)).collect()).collect();
    let rhs: Vec<Rational> = vs.iter().map(|v| dot(v, &w)).collect();
    let lambda = solve(g, rhs).expect("affinely independent tuple");
    let mut coords = Vec::with_capacity(t.len());
    let sum: Rational = lambda.iter().sum();
    coords.push(Rational::from_integer(1.into()) - sum);
    coords.extend(lambda);
    coords
}

fn combine(t: &[Point], coords: &[Rational]) -> Point {
    let d = t[0].dim();
    let mut out = vec![Rational::zero(); d];
    for (p, l) in t.iter().zip(coords) {
        for (o, c) in out.iter_mut().zip(p.coords()) {
            *o += l * c;
        }
    }
    Point::new(out)
}

/// True iff `q` lies in the convex hull of `p` (boundary included).
pub fn in_hull(q: &Point, p: &[Point]) -> Result<bool> {
    Ok(point_in_hull(q, p)? != HullPosition::Outside)
}

/// Classifies `q` against conv(p) as interior, boundary or outside.
///
/// Membership is decided by Caratheodory: `q` is in the hull iff it lies in
/// the hull of some affinely independent subset of at most `d + 1` points.
pub fn point_in_hull(q: &Point, p: &[Point]) -> Result<HullPosition> {
    if p.is_empty() {
        return Err(Error::InvalidArgument("empty point list".into()));
    }
    let d = q.dim();
    check_dims(p, d)?;
    let mut member = false;
    'outer: for size in 1..=(d + 1).min(p.len()) {
        for t in p.iter().combinations(size) {
            let t: Vec<Point> = t.into_iter().cloned().collect();
            if !affinely_independent(&t) {
                continue;
            }
            if let Some(coords) = barycentric(q, &t) {
                if coords.iter().all(|c| !c.is_negative()) {
                    member = true;
                    break 'outer;
                }
            }
        }
    }
    if !member {
        return Ok(HullPosition::Outside);
    }
    if affine_rank(p) < d {
        // Hull has empty interior in ambient dimension.
        return Ok(HullPosition::Boundary);
    }
    // q is on the boundary iff some supporting hyperplane spanned by d points
    // of p passes through q.
    for f in p.iter().combinations(d) {
        let f: Vec<Point> = f.into_iter().cloned().collect();
        if affine_rank(&f) != d - 1 {
            continue;
        }
        let mut with_q = f.clone();
        with_q.push(q.clone());
        if affine_rank(&with_q) != d - 1 {
            continue; // q not on this hyperplane
        }
        let mut pos = false;
        let mut neg = false;
        for s in p {
            let mut simplex = f.clone();
            simplex.push(s.clone());
            if simplex.len() != d + 1 {
                continue;
            }
            match orientation(&simplex)? {
                1 => pos = true,
                -1 => neg = true,
                _ => {}
            }
            if pos && neg {
                break;
            }
        }
        if !(pos && neg) {
            return Ok(HullPosition::Boundary);
        }
    }
    Ok(HullPosition::Interior)
}

/// Exact squared Euclidean distance from `q` to conv(p); zero iff `q` is in
/// the hull.
///
/// The minimum is taken over affinely independent subsets whose affine hull
/// receives the orthogonal projection of `q` inside the subset's convex hull.
pub fn squared_distance_to_convex_hull(q: &Point, p: &[Point]) -> Result<Rational> {
    if p.is_empty() {
        return Err(Error::InvalidArgument("empty point list".into()));
    }
    let d = q.dim();
    check_dims(p, d)?;
    let mut best: Option<Rational> = None;
    for size in 1..=(d + 1).min(p.len()) {
        for t in p.iter().combinations(size) {
            let t: Vec<Point> = t.into_iter().cloned().collect();
            if !affinely_independent(&t) {
                continue;
            }
            let coords = project_barycentric(q, &t);
            if coords.iter().any(|c| c.is_negative()) {
                continue;
            }
            let proj = combine(&t, &coords);
            let w = diff(q, &proj);
            let dist2 = dot(&w, &w);
            if best.as_ref().map_or(true, |b| dist2 < *b) {
                best = Some(dist2);
            }
        }
    }
    // Singleton subsets are always admissible, so a minimum exists.
    Ok(best.expect("nonempty candidate set"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn pt(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn orientation_planar() {
        assert_eq!(orientation(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]).unwrap(), 1);
        assert_eq!(orientation(&[pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])]).unwrap(), 0);
        assert_eq!(orientation(&[pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0])]).unwrap(), -1);
    }

    #[test]
    fn orientation_standard_3simplex() {
        let s = [pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])];
        assert_eq!(orientation(&s).unwrap(), 1);
    }

    #[test]
    fn orientation_dimension_mismatch() {
        let r = orientation(&[pt(&[0, 0]), pt(&[1, 0, 0]), pt(&[0, 1])]);
        assert!(r.is_err());
    }

    #[test]
    fn volumes() {
        assert_eq!(
            simplex_volume(&[pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]).unwrap(),
            rat(1, 2)
        );
        assert_eq!(
            simplex_volume(&[pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])])
                .unwrap(),
            rat(1, 6)
        );
        assert_eq!(
            simplex_volume(&[pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])]).unwrap(),
            int(0)
        );
    }

    #[test]
    fn affine_distance() {
        let line = [pt(&[0, 0]), pt(&[1, 0])];
        assert_eq!(
            squared_distance_to_affine_hull(&pt(&[0, 1]), &line).unwrap(),
            int(1)
        );
        assert_eq!(
            squared_distance_to_affine_hull(&pt(&[5, 0]), &line).unwrap(),
            int(0)
        );
        assert_eq!(
            squared_distance_to_affine_hull(&pt(&[1, 1, 1]), &[pt(&[0, 0, 0])]).unwrap(),
            int(3)
        );
        assert!(squared_distance_to_affine_hull(
            &pt(&[0, 1]),
            &[pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])]
        )
        .is_err());
    }

    #[test]
    fn hull_distance() {
        let seg = [pt(&[0, 0]), pt(&[1, 0])];
        assert_eq!(squared_distance_to_convex_hull(&pt(&[2, 0]), &seg).unwrap(), int(1));
        let mid = Point::new(vec![rat(1, 2), int(0)]);
        assert_eq!(squared_distance_to_convex_hull(&mid, &seg).unwrap(), int(0));
        assert_eq!(squared_distance_to_convex_hull(&pt(&[2, 2]), &seg).unwrap(), int(5));
    }

    #[test]
    fn hull_membership_triangle() {
        let tri = [pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])];
        let inside = Point::new(vec![rat(1, 4), rat(1, 4)]);
        assert_eq!(point_in_hull(&inside, &tri).unwrap(), HullPosition::Interior);
        assert_eq!(point_in_hull(&pt(&[0, 0]), &tri).unwrap(), HullPosition::Boundary);
        assert_eq!(point_in_hull(&pt(&[2, 2]), &tri).unwrap(), HullPosition::Outside);
    }

    #[test]
    fn square_center_is_interior() {
        // No triangle of the square strictly contains its center, so the
        // boundary test must go through supporting hyperplanes.
        let sq = [pt(&[0, 0]), pt(&[1, 0]), pt(&[1, 1]), pt(&[0, 1])];
        let center = Point::new(vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(point_in_hull(&center, &sq).unwrap(), HullPosition::Interior);
        let edge_mid = Point::new(vec![rat(1, 2), int(0)]);
        assert_eq!(point_in_hull(&edge_mid, &sq).unwrap(), HullPosition::Boundary);
    }

    #[test]
    fn distance_zero_iff_member() {
        let tri = [pt(&[0, 0]), pt(&[4, 0]), pt(&[0, 4])];
        for (coords, outside) in [([1i64, 1], false), ([4, 4], true), ([0, 0], false)] {
            let q = pt(&coords);
            let dist = squared_distance_to_convex_hull(&q, &tri).unwrap();
            let member = in_hull(&q, &tri).unwrap();
            assert_eq!(dist.is_zero(), member);
            assert_eq!(!member, outside);
        }
    }
}
