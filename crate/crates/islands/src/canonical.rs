//! The canonical (k,a)-ordering of a k-point set and its certificates.
//!
//! The ordering starts with a maximum-volume simplex (longest edge first,
//! then a farthest-point sweep), continues with the points inside that
//! simplex in lexicographic order, and finishes with the outside points
//! greedily by distance to the hull of the prefix. All comparisons are exact:
//! squared distances and exact simplex volumes, with lexicographic
//! tie-breaks, make the ordering total.

use std::collections::HashMap;

use num_traits::One;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::geom::{self, HullPosition, Point};
use crate::pointset::PointSet;
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct OrderingReport {
    /// Indices into Q, giving q_1, ..., q_k.
    pub permutation: Vec<usize>,
    /// Number of points of Q strictly inside the maximal simplex.
    pub a: usize,
    /// Pass flags for the five defining conditions.
    pub condition_flags: [bool; 5],
    pub delta_volume: Rational,
}

#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub flags: [bool; 5],
    /// First violated condition (1-based) with a short witness description.
    pub first_violation: Option<(usize, String)>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.flags.iter().all(|&f| f)
    }
}

/// Reusable checker for one set Q; caches the maximal simplex volume and
/// per-simplex classifications so that scanning many orderings of the same
/// set stays cheap.
pub struct CanonicalChecker<'a> {
    q: &'a PointSet,
    d: usize,
    k: usize,
    max_volume: Rational,
    volume_cache: HashMap<Vec<usize>, Rational>,
    inside_cache: HashMap<Vec<usize>, Vec<HullPosition>>,
    // distances depend only on the participating sets, not the ordering, so
    // scans over many permutations of the same Q share them
    aff_dist_cache: HashMap<(Vec<usize>, usize), Rational>,
    hull_dist_cache: HashMap<(Vec<usize>, usize), Rational>,
}

fn sq_dist(a: &Point, b: &Point) -> Rational {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| {
            let diff = x - y;
            &diff * &diff
        })
        .sum()
}

impl<'a> CanonicalChecker<'a> {
    pub fn new(q: &'a PointSet) -> Result<Self> {
        let d = q.dim();
        let k = q.len();
        if k < d + 1 {
            return Err(Error::InvalidArgument(format!(
                "need at least d+1 = {} points, got {k}",
                d + 1
            )));
        }
        if !q.is_general_position() {
            return Err(Error::Degenerate(
                "canonical ordering requires general position".into(),
            ));
        }
        let mut volume_cache = HashMap::new();
        let mut max_volume = None;
        for tuple in (0..k).combinations(d + 1) {
            let vol = geom::simplex_volume(&q.subset(&tuple))?;
            if max_volume.as_ref().map_or(true, |m| &vol > m) {
                max_volume = Some(vol.clone());
            }
            volume_cache.insert(tuple, vol);
        }
        Ok(CanonicalChecker {
            q,
            d,
            k,
            max_volume: max_volume.expect("at least one simplex"),
            volume_cache,
            inside_cache: HashMap::new(),
            aff_dist_cache: HashMap::new(),
            hull_dist_cache: HashMap::new(),
        })
    }

    /// Squared distance from point `i` to the affine hull of `base` (indices
    /// into Q), cached on the unordered base.
    fn aff_dist(&mut self, base: &[usize], i: usize) -> Result<Rational> {
        let mut key: Vec<usize> = base.to_vec();
        key.sort_unstable();
        if let Some(v) = self.aff_dist_cache.get(&(key.clone(), i)) {
            return Ok(v.clone());
        }
        let v = geom::squared_distance_to_affine_hull(self.q.point(i), &self.q.subset(&key))?;
        self.aff_dist_cache.insert((key, i), v.clone());
        Ok(v)
    }

    /// Squared distance from point `i` to the convex hull of `set`, cached on
    /// the unordered set.
    fn hull_dist(&mut self, set: &[usize], i: usize) -> Result<Rational> {
        let mut key: Vec<usize> = set.to_vec();
        key.sort_unstable();
        if let Some(v) = self.hull_dist_cache.get(&(key.clone(), i)) {
            return Ok(v.clone());
        }
        let v = geom::squared_distance_to_convex_hull(self.q.point(i), &self.q.subset(&key))?;
        self.hull_dist_cache.insert((key, i), v.clone());
        Ok(v)
    }

    pub fn max_volume(&self) -> &Rational {
        &self.max_volume
    }

    fn volume_of(&mut self, tuple: &[usize]) -> Result<Rational> {
        let mut key: Vec<usize> = tuple.to_vec();
        key.sort_unstable();
        if let Some(v) = self.volume_cache.get(&key) {
            return Ok(v.clone());
        }
        let vol = geom::simplex_volume(&self.q.subset(&key))?;
        self.volume_cache.insert(key, vol.clone());
        Ok(vol)
    }

    /// Position of every point of Q relative to the simplex on `tuple`.
    fn classify(&mut self, tuple: &[usize]) -> Result<&[HullPosition]> {
        let mut key: Vec<usize> = tuple.to_vec();
        key.sort_unstable();
        if !self.inside_cache.contains_key(&key) {
            let simplex = self.q.subset(&key);
            let mut positions = Vec::with_capacity(self.k);
            for i in 0..self.k {
                if key.contains(&i) {
                    positions.push(HullPosition::Boundary);
                } else {
                    positions.push(geom::point_in_hull(self.q.point(i), &simplex)?);
                }
            }
            self.inside_cache.insert(key.clone(), positions);
        }
        Ok(self.inside_cache.get(&key).expect("just inserted"))
    }

    /// Evaluates the five conditions on `perm` (a bijection on 0..k).
    pub fn check(&mut self, perm: &[usize]) -> Result<ConditionReport> {
        let d = self.d;
        let k = self.k;
        if perm.len() != k {
            return Err(Error::InvalidArgument(format!(
                "permutation length {} does not match k = {k}",
                perm.len()
            )));
        }
        let mut seen = vec![false; k];
        for &i in perm {
            if i >= k || seen[i] {
                return Err(Error::InvalidArgument(
                    "permutation is not a bijection on the point indices".into(),
                ));
            }
            seen[i] = true;
        }
        let mut flags = [true; 5];
        let mut first: Option<(usize, String)> = None;
        let mut record = |flags: &mut [bool; 5], idx: usize, witness: String| {
            flags[idx - 1] = false;
            if first.is_none() {
                first = Some((idx, witness));
            }
        };

        let delta: Vec<usize> = perm[..=d].to_vec();
        let q = self.q;
        let pt = |pos: usize| q.point(perm[pos]);

        // 1: the leading simplex has maximal volume.
        let vol = self.volume_of(&delta)?;
        if vol != self.max_volume {
            record(
                &mut flags,
                1,
                format!("simplex volume {vol} is below the maximum {}", self.max_volume),
            );
        }

        // 2: q1 q2 is the longest edge of the simplex (lexicographically
        // smallest endpoint pair among ties, lex-smaller endpoint first),
        // then the farthest-point sweep inside the simplex vertices.
        if pt(0).lex_cmp(pt(1)) != std::cmp::Ordering::Less {
            record(&mut flags, 2, "q1 is not lexicographically below q2".into());
        }
        let edge = sq_dist(pt(0), pt(1));
        for pair in (0..=d).combinations(2) {
            if pair == [0, 1] {
                continue;
            }
            let (mut x, mut y) = (perm[pair[0]], perm[pair[1]]);
            if q.point(x).lex_cmp(q.point(y)) == std::cmp::Ordering::Greater {
                std::mem::swap(&mut x, &mut y);
            }
            let len = sq_dist(q.point(x), q.point(y));
            if len > edge || (len == edge && tuple_lex_below(q, &[x, y], &[perm[0], perm[1]])) {
                record(
                    &mut flags,
                    2,
                    format!("edge q_{} q_{} beats q_1 q_2 as the longest edge", pair[0] + 1, pair[1] + 1),
                );
                break;
            }
        }
        for i in 1..d {
            let here = self.aff_dist(&perm[..i], perm[i])?;
            for j in i + 1..d {
                let other = self.aff_dist(&perm[..i], perm[j])?;
                if other > here {
                    record(
                        &mut flags,
                        2,
                        format!("position {} is farther than position {} from aff(q_1..q_{i})", j + 1, i + 1),
                    );
                }
            }
        }

        // 3: the apex q_{d+1} is distance-dominated.
        let apex = pt(d);
        for i in 1..d {
            let here = self.aff_dist(&perm[..i], perm[i])?;
            let apex_dist = self.aff_dist(&perm[..i], perm[d])?;
            if apex_dist > here {
                record(
                    &mut flags,
                    3,
                    format!("q_{} is farther from aff(q_1..q_{i}) than q_{}", d + 1, i + 1),
                );
            }
        }
        for i in 0..d {
            if sq_dist(apex, pt(i)) > edge {
                record(
                    &mut flags,
                    3,
                    format!("|q_{} q_{}| exceeds |q_1 q_2|", d + 1, i + 1),
                );
            }
        }

        // Classify all points against the leading simplex for 4 and 5.
        let positions: Vec<HullPosition> = self.classify(&delta)?.to_vec();
        let a = positions
            .iter()
            .filter(|&&p| p == HullPosition::Interior)
            .count();

        // 4: positions d+2..d+a+1 hold the inside points, lexicographically.
        for pos in d + 1..(d + 1 + a).min(k) {
            if positions[perm[pos]] != HullPosition::Interior {
                record(
                    &mut flags,
                    4,
                    format!("position {} should hold a point inside the simplex", pos + 1),
                );
            }
        }
        for pos in d + 2..(d + 1 + a).min(k) {
            if pt(pos - 1).lex_cmp(pt(pos)) != std::cmp::Ordering::Less {
                record(
                    &mut flags,
                    4,
                    format!("inside points at positions {} and {} are out of lexicographic order", pos, pos + 1),
                );
            }
        }

        // 5: the tail lies outside and follows the greedy closest-to-hull rule.
        for pos in d + 1 + a..k {
            if positions[perm[pos]] == HullPosition::Interior {
                record(
                    &mut flags,
                    5,
                    format!("position {} should hold a point outside the simplex", pos + 1),
                );
            }
        }
        if flags[4] {
            for i in 0..k.saturating_sub(d + a + 1) {
                let prefix = &perm[..d + a + 1 + i];
                let chosen = self.hull_dist(prefix, perm[d + a + 1 + i])?;
                for later in d + a + 2 + i..k {
                    let other = self.hull_dist(prefix, perm[later])?;
                    if other < chosen {
                        record(
                            &mut flags,
                            5,
                            format!("position {} is closer to the hull of the prefix than position {}", later + 1, d + a + 2 + i),
                        );
                        break;
                    }
                }
                if !flags[4] {
                    break;
                }
            }
        }

        Ok(ConditionReport {
            flags,
            first_violation: first,
        })
    }

    /// Constructs the canonical ordering directly.
    pub fn ordering(&mut self) -> Result<OrderingReport> {
        let d = self.d;
        let k = self.k;

        // Maximal simplex; ties resolved toward the lexicographically
        // smallest sorted vertex tuple.
        let mut best: Option<Vec<usize>> = None;
        for tuple in (0..k).combinations(d + 1) {
            if self.volume_cache[&tuple] != self.max_volume {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => tuple_lex_below(self.q, &tuple, b),
            };
            if better {
                best = Some(tuple);
            }
        }
        let delta = best.expect("maximal simplex exists");

        // Longest edge, lex-smaller endpoint first.
        let mut edge: Option<(Rational, usize, usize)> = None;
        for pair in delta.iter().combinations(2) {
            let (&x, &y) = (pair[0], pair[1]);
            let (x, y) = if self.q.point(x).lex_cmp(self.q.point(y)) == std::cmp::Ordering::Less {
                (x, y)
            } else {
                (y, x)
            };
            let len = sq_dist(self.q.point(x), self.q.point(y));
            let better = match &edge {
                None => true,
                Some((best_len, bx, by)) => {
                    len > *best_len
                        || (len == *best_len
                            && tuple_lex_below(self.q, &[x, y], &[*bx, *by]))
                }
            };
            if better {
                edge = Some((len, x, y));
            }
        }
        let (_, q1, q2) = edge.expect("simplex has an edge");

        let mut perm = vec![q1, q2];
        let mut remaining: Vec<usize> = delta.iter().copied().filter(|&i| i != q1 && i != q2).collect();
        while !remaining.is_empty() {
            let base: Vec<Point> = perm.iter().map(|&i| self.q.point(i).clone()).collect();
            let mut pick = 0usize;
            let mut pick_dist: Option<Rational> = None;
            for (slot, &cand) in remaining.iter().enumerate() {
                let dist = geom::squared_distance_to_affine_hull(self.q.point(cand), &base)?;
                let better = match &pick_dist {
                    None => true,
                    Some(best_dist) => {
                        dist > *best_dist
                            || (dist == *best_dist
                                && self
                                    .q
                                    .point(cand)
                                    .lex_cmp(self.q.point(remaining[pick]))
                                    == std::cmp::Ordering::Less)
                    }
                };
                if better {
                    pick = slot;
                    pick_dist = Some(dist);
                }
            }
            perm.push(remaining.swap_remove(pick));
        }

        // Inside points, lexicographically; then the greedy outside sweep.
        let positions: Vec<HullPosition> = self.classify(&delta)?.to_vec();
        let mut inside: Vec<usize> = (0..k)
            .filter(|&i| positions[i] == HullPosition::Interior)
            .collect();
        inside.sort_by(|&x, &y| self.q.point(x).lex_cmp(self.q.point(y)));
        let a = inside.len();
        perm.extend(inside);

        let mut outside: Vec<usize> = (0..k)
            .filter(|&i| !perm.contains(&i))
            .collect();
        while !outside.is_empty() {
            let prefix: Vec<Point> = perm.iter().map(|&i| self.q.point(i).clone()).collect();
            let mut pick = 0usize;
            let mut pick_dist: Option<Rational> = None;
            for (slot, &cand) in outside.iter().enumerate() {
                let dist = geom::squared_distance_to_convex_hull(self.q.point(cand), &prefix)?;
                let better = match &pick_dist {
                    None => true,
                    Some(best_dist) => {
                        dist < *best_dist
                            || (dist == *best_dist
                                && self
                                    .q
                                    .point(cand)
                                    .lex_cmp(self.q.point(outside[pick]))
                                    == std::cmp::Ordering::Less)
                    }
                };
                if better {
                    pick = slot;
                    pick_dist = Some(dist);
                }
            }
            perm.push(outside.swap_remove(pick));
        }

        let flags = self.check(&perm)?.flags;
        Ok(OrderingReport {
            permutation: perm,
            a,
            condition_flags: flags,
            delta_volume: self.max_volume.clone(),
        })
    }
}

fn tuple_lex_below(q: &PointSet, a: &[usize], b: &[usize]) -> bool {
    for (&x, &y) in a.iter().zip(b) {
        match q.point(x).lex_cmp(q.point(y)) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

/// The unique ordering satisfying the five conditions.
pub fn canonical_ordering(q: &PointSet) -> Result<OrderingReport> {
    CanonicalChecker::new(q)?.ordering()
}

/// Evaluates the five conditions independently for an arbitrary permutation.
pub fn check_canonical_conditions(q: &PointSet, permutation: &[usize]) -> Result<ConditionReport> {
    CanonicalChecker::new(q)?.check(permutation)
}

fn signed_volume_det(facet: &[Point], apex: &Point) -> Rational {
    let base = &facet[0];
    let mut rows: Vec<Vec<Rational>> = facet[1..]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(base.coords())
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    rows.push(
        apex.coords()
            .iter()
            .zip(base.coords())
            .map(|(a, b)| a - b)
            .collect(),
    );
    geom::determinant(rows)
}

/// True iff every point of Q lies in the enlarged simplex bounded, for each
/// vertex of the leading simplex, by the hyperplane through that vertex
/// parallel to the opposite facet. Requires the leading simplex to be
/// volume-maximal.
pub fn delta_star_contains_all(q: &PointSet, permutation: &[usize]) -> Result<bool> {
    let mut checker = CanonicalChecker::new(q)?;
    let d = q.dim();
    if permutation.len() < d + 1 {
        return Err(Error::InvalidArgument("permutation shorter than d+1".into()));
    }
    let delta: Vec<usize> = permutation[..=d].to_vec();
    if checker.volume_of(&delta)? != *checker.max_volume() {
        return Err(Error::InvalidArgument(
            "leading simplex is not volume-maximal; the enlarged-simplex claim \
             is only valid for maximal simplices"
                .into(),
        ));
    }
    delta_star_contains_all_unchecked(q, permutation)
}

/// As [`delta_star_contains_all`] but without the maximality precondition,
/// for probing non-maximal simplices.
pub fn delta_star_contains_all_unchecked(q: &PointSet, permutation: &[usize]) -> Result<bool> {
    let d = q.dim();
    if permutation.len() < d + 1 {
        return Err(Error::InvalidArgument("permutation shorter than d+1".into()));
    }
    let delta = q.subset(&permutation[..=d]);
    for j in 0..=d {
        let facet: Vec<Point> = delta
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, p)| p.clone())
            .collect();
        let apex_value = signed_volume_det(&facet, &delta[j]);
        if apex_value == Rational::from_integer(0.into()) {
            return Err(Error::Degenerate("leading simplex is degenerate".into()));
        }
        for p in q.points() {
            // x lies in the slab side containing the simplex iff the signed
            // height over the facet does not exceed the vertex height.
            let value = signed_volume_det(&facet, p);
            let ratio = value / &apex_value;
            if ratio > Rational::one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Coordinate-free form of the box-containment certificate: clause (a) is
/// the distance dominance of the apex, clause (b) bounds the simplex volume
/// by 1 when the point set came from a unit-volume body.
pub fn check_box_containment(
    q: &PointSet,
    permutation: &[usize],
    unit_volume_context: bool,
) -> Result<bool> {
    let d = q.dim();
    if permutation.len() < d + 1 {
        return Err(Error::InvalidArgument("permutation shorter than d+1".into()));
    }
    let pt = |pos: usize| q.point(permutation[pos]);
    let apex = pt(d);
    for i in 1..d {
        let base: Vec<Point> = (0..i).map(|j| pt(j).clone()).collect();
        let here = geom::squared_distance_to_affine_hull(pt(i), &base)?;
        let apex_dist = geom::squared_distance_to_affine_hull(apex, &base)?;
        if apex_dist > here {
            return Ok(false);
        }
    }
    let edge = sq_dist(pt(0), pt(1));
    for i in 0..d {
        if sq_dist(apex, pt(i)) > edge {
            return Ok(false);
        }
    }
    if unit_volume_context {
        let delta = q.subset(&permutation[..=d]);
        if geom::simplex_volume(&delta)? > Rational::one() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn pt(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    fn set2(coords: &[[i64; 2]]) -> PointSet {
        PointSet::new(2, coords.iter().map(|c| pt(&c[..])).collect(), None).unwrap()
    }

    #[test]
    fn worked_example() {
        let q = set2(&[[0, 3], [4, 0], [0, 0], [1, 1]]);
        let report = canonical_ordering(&q).unwrap();
        assert_eq!(report.permutation, vec![0, 1, 2, 3]);
        assert_eq!(report.a, 1);
        assert_eq!(report.delta_volume, int(6));
        assert!(report.condition_flags.iter().all(|&f| f));
    }

    #[test]
    fn simplex_alone_has_a_zero() {
        let q = set2(&[[0, 0], [5, 1], [2, 6]]);
        let report = canonical_ordering(&q).unwrap();
        assert_eq!(report.a, 0);
        assert!(report.condition_flags.iter().all(|&f| f));
    }

    #[test]
    fn exterior_point_comes_last() {
        let q = set2(&[[0, 0], [4, 0], [0, 4], [5, 5]]);
        let report = canonical_ordering(&q).unwrap();
        assert_eq!(report.a, 0);
        // Every triangle here has area 8; the maximal simplex tie-break picks
        // vertices, and the remaining point lands in the final slot.
        assert_eq!(report.permutation.len(), 4);
        assert!(report.condition_flags.iter().all(|&f| f));
    }

    #[test]
    fn swapping_leading_pair_breaks_the_lex_clause() {
        let q = set2(&[[0, 3], [4, 0], [0, 0], [1, 1]]);
        let report = canonical_ordering(&q).unwrap();
        let mut perm = report.permutation.clone();
        perm.swap(0, 1);
        let check = check_canonical_conditions(&q, &perm).unwrap();
        assert!(!check.flags[1], "condition 2 should fail: {check:?}");
    }

    #[test]
    fn too_few_points_rejected() {
        let q = set2(&[[0, 0], [1, 0]]);
        assert!(canonical_ordering(&q).is_err());
    }

    #[test]
    fn degenerate_rejected() {
        let q = set2(&[[0, 0], [1, 1], [2, 2], [4, 0]]);
        assert!(canonical_ordering(&q).is_err());
    }

    #[test]
    fn unique_among_all_orderings() {
        use itertools::Itertools;
        let q = set2(&[[0, 3], [4, 0], [0, 0], [1, 1]]);
        let mut checker = CanonicalChecker::new(&q).unwrap();
        let canonical = checker.ordering().unwrap().permutation;
        let mut passing = Vec::new();
        for perm in (0..4).permutations(4) {
            if checker.check(&perm).unwrap().all_pass() {
                passing.push(perm);
            }
        }
        assert_eq!(passing, vec![canonical]);
    }

    #[test]
    fn delta_star_holds_for_canonical() {
        let q = set2(&[[0, 3], [4, 0], [0, 0], [1, 1]]);
        let report = canonical_ordering(&q).unwrap();
        assert!(delta_star_contains_all(&q, &report.permutation).unwrap());
    }

    #[test]
    fn delta_star_fails_for_a_non_maximal_simplex() {
        // Leading with the small triangle (0,0),(1,0),(0,1) leaves (10,10)
        // far beyond its enlargement.
        let q = set2(&[[0, 0], [1, 0], [0, 1], [10, 10]]);
        assert!(!delta_star_contains_all_unchecked(&q, &[0, 1, 2, 3]).unwrap());
        assert!(delta_star_contains_all(&q, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn delta_star_trivial_for_simplex_alone() {
        let q = set2(&[[0, 0], [7, 1], [2, 5]]);
        let report = canonical_ordering(&q).unwrap();
        assert!(delta_star_contains_all(&q, &report.permutation).unwrap());
    }

    #[test]
    fn box_containment_clauses() {
        let q = set2(&[[0, 3], [4, 0], [0, 0], [1, 1]]);
        let report = canonical_ordering(&q).unwrap();
        assert!(check_box_containment(&q, &report.permutation, false).unwrap());
        // The maximal triangle has area 6, so the unit-volume clause fails.
        assert!(!check_box_containment(&q, &report.permutation, true).unwrap());

        let small = PointSet::new(
            2,
            vec![
                Point::new(vec![rat(0, 1), rat(0, 1)]),
                Point::new(vec![rat(1, 2), rat(0, 1)]),
                Point::new(vec![rat(0, 1), rat(1, 2)]),
            ],
            None,
        )
        .unwrap();
        let report = canonical_ordering(&small).unwrap();
        assert!(check_box_containment(&small, &report.permutation, true).unwrap());
    }

    #[test]
    fn three_dimensional_ordering_certifies() {
        let q = PointSet::new(
            3,
            vec![
                pt(&[0, 0, 0]),
                pt(&[7, 1, 0]),
                pt(&[1, 6, 1]),
                pt(&[2, 2, 5]),
                pt(&[2, 2, 1]),
            ],
            None,
        )
        .unwrap();
        let report = canonical_ordering(&q).unwrap();
        assert!(report.condition_flags.iter().all(|&f| f), "{report:?}");
        assert!(delta_star_contains_all(&q, &report.permutation).unwrap());
        assert!(check_box_containment(&q, &report.permutation, false).unwrap());
    }
}
