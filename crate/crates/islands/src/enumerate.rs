//! Exact detection and counting of convex-position subsets, k-islands,
//! k-holes, all islands, and largest holes.
//!
//! The standalone predicates (`is_convex_position`, `is_island`, `is_hole`)
//! go through the generic kernel in [`crate::geom`]. The counting routines
//! run on a per-set orientation sign cache: every membership question about
//! points of the same set reduces to sign lookups of (d+1)-tuples, so the
//! exact arithmetic is paid once per tuple instead of once per query. The
//! cached fast path assumes general position; counting falls back to the
//! generic predicates otherwise.

use num_bigint::BigInt;
use num_traits::Zero;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::geom::{self, HullPosition, Point};
use crate::pointset::PointSet;
use crate::rational::binomial;

/// Default cap for all-islands counting (2^n subsets in the direct method).
pub const ALL_ISLANDS_DEFAULT_CAP: usize = 20;
/// Default cap for largest-hole search.
pub const LARGEST_HOLE_DEFAULT_CAP: usize = 64;

/// A sorted subset of point indices into a `PointSet`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subset {
    indices: Vec<usize>,
}

impl Subset {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        for w in indices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidArgument(format!(
                    "duplicate index {} in subset",
                    w[0]
                )));
            }
        }
        Ok(Subset { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.indices.last() {
            Some(&last) if last >= n => Err(Error::InvalidArgument(format!(
                "subset index {last} out of range for n = {n}"
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetKind {
    Hole,
    Island,
    Convex,
}

impl SubsetKind {
    pub fn name(&self) -> &'static str {
        match self {
            SubsetKind::Hole => "hole",
            SubsetKind::Island => "island",
            SubsetKind::Convex => "convex",
        }
    }
}

/// Method for counting all islands at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AllIslandsMethod {
    /// Test every nonempty subset with the island predicate.
    Direct,
    /// Count nonempty subsets in convex position; by the hull
    /// correspondence this equals the number of islands.
    ConvexBijection,
}

#[derive(Debug, Clone)]
pub struct CountResult {
    pub value: BigInt,
    pub n: usize,
    pub k: Option<usize>,
    pub kind: SubsetKind,
}

/// True iff no point of `p` lies in the hull of the others.
pub fn is_convex_position(p: &[Point]) -> Result<bool> {
    if p.len() <= 1 {
        return Ok(true);
    }
    for i in 0..p.len() {
        let rest: Vec<Point> = p
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        if geom::in_hull(&p[i], &rest)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff conv(I) contains no point of S outside I.
pub fn is_island(set: &PointSet, subset: &Subset) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::InvalidArgument("island subset must be nonempty".into()));
    }
    subset.check_range(set.len())?;
    let hull_points = set.subset(subset.indices());
    for (i, p) in set.points().iter().enumerate() {
        if subset.indices().binary_search(&i).is_ok() {
            continue;
        }
        if geom::in_hull(p, &hull_points)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff H is in convex position and is an island; requires S in general
/// position (under which this equals the interior-emptiness definition).
pub fn is_hole(set: &PointSet, subset: &Subset) -> Result<bool> {
    if !set.is_general_position() {
        return Err(Error::Degenerate(
            "point set is not in general position; use is_hole_raw for the \
             interior-emptiness definition"
                .into(),
        ));
    }
    Ok(is_convex_position(&set.subset(subset.indices()))? && is_island(set, subset)?)
}

/// The raw definition: H in convex position and no point of S in the open
/// interior of conv(H). Valid for degenerate sets too.
pub fn is_hole_raw(set: &PointSet, subset: &Subset) -> Result<bool> {
    if subset.is_empty() {
        return Err(Error::InvalidArgument("hole subset must be nonempty".into()));
    }
    subset.check_range(set.len())?;
    let hull_points = set.subset(subset.indices());
    if !is_convex_position(&hull_points)? {
        return Ok(false);
    }
    for (i, p) in set.points().iter().enumerate() {
        if subset.indices().binary_search(&i).is_ok() {
            continue;
        }
        if geom::point_in_hull(p, &hull_points)? == HullPosition::Interior {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Orientation sign cache over all (d+1)-tuples of one point set.
pub(crate) struct SignCache<'a> {
    set: &'a PointSet,
    d: usize,
    n: usize,
    binom: Vec<Vec<usize>>,
    signs: Vec<i8>,
}

impl<'a> SignCache<'a> {
    pub fn new(set: &'a PointSet) -> Result<Self> {
        let d = set.dim();
        let n = set.len();
        if n < d + 1 {
            return Ok(SignCache {
                set,
                d,
                n,
                binom: binom_table(n, d + 1),
                signs: Vec::new(),
            });
        }
        let binom = binom_table(n, d + 1);
        let total = binom[n][d + 1];
        let mut signs = vec![0i8; total];
        let mut tuple_points: Vec<Point> = Vec::with_capacity(d + 1);
        for tuple in (0..n).combinations(d + 1) {
            tuple_points.clear();
            tuple_points.extend(tuple.iter().map(|&i| set.point(i).clone()));
            let rank = colex_rank(&binom, &tuple);
            signs[rank] = geom::orientation(&tuple_points)?;
        }
        Ok(SignCache {
            set,
            d,
            n,
            binom,
            signs,
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Orientation sign of an arbitrary (d+1)-tuple of indices.
    pub fn orient(&self, tuple: &[usize]) -> i8 {
        debug_assert_eq!(tuple.len(), self.d + 1);
        let mut sorted: Vec<usize> = tuple.to_vec();
        let mut sign = 1i8;
        // insertion sort, tracking parity
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return 0;
            }
        }
        sign * self.signs[colex_rank(&self.binom, &sorted)]
    }
}

fn binom_table(n: usize, k_max: usize) -> Vec<Vec<usize>> {
    let mut t = vec![vec![0usize; k_max + 1]; n + 1];
    for (i, row) in t.iter_mut().enumerate() {
        row[0] = 1;
        for k in 1..=k_max.min(i) {
            row[k] = binomial(i, k)
                .try_into()
                .expect("binomial fits in usize at desk scale");
        }
    }
    t
}

fn colex_rank(binom: &[Vec<usize>], sorted: &[usize]) -> usize {
    sorted
        .iter()
        .enumerate()
        .map(|(j, &i)| binom[i][j + 1])
        .sum()
}

/// Counting engine over one point set; assumes general position.
pub(crate) struct Engine<'a> {
    cache: SignCache<'a>,
}

impl<'a> Engine<'a> {
    pub fn new(set: &'a PointSet) -> Result<Self> {
        Ok(Engine {
            cache: SignCache::new(set)?,
        })
    }

    fn d(&self) -> usize {
        self.cache.dim()
    }

    fn n(&self) -> usize {
        self.cache.len()
    }

    /// Convex hull of a subset in counterclockwise order (planar only).
    fn hull2(&self, subset: &[usize]) -> Vec<usize> {
        debug_assert_eq!(self.d(), 2);
        let mut pts: Vec<usize> = subset.to_vec();
        pts.sort_by(|&a, &b| self.cache.set.point(a).lex_cmp(self.cache.set.point(b)));
        if pts.len() <= 2 {
            return pts;
        }
        let mut lower: Vec<usize> = Vec::with_capacity(pts.len());
        for &p in &pts {
            while lower.len() >= 2
                && self
                    .cache
                    .orient(&[lower[lower.len() - 2], lower[lower.len() - 1], p])
                    <= 0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<usize> = Vec::with_capacity(pts.len());
        for &p in pts.iter().rev() {
            while upper.len() >= 2
                && self
                    .cache
                    .orient(&[upper[upper.len() - 2], upper[upper.len() - 1], p])
                    <= 0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        lower
    }

    /// Strict membership of point `p` in the hull of `subset` (planar).
    /// Under general position a non-member point is never on the boundary.
    fn contains2(&self, hull_ccw: &[usize], p: usize) -> bool {
        if hull_ccw.len() < 3 {
            return false;
        }
        for i in 0..hull_ccw.len() {
            let a = hull_ccw[i];
            let b = hull_ccw[(i + 1) % hull_ccw.len()];
            if self.cache.orient(&[a, b, p]) <= 0 {
                return false;
            }
        }
        true
    }

    /// Strict membership by Caratheodory over cached simplex signs.
    fn contains_generic(&self, subset: &[usize], p: usize) -> bool {
        let d = self.d();
        if subset.len() <= d {
            return false;
        }
        let mut tuple = vec![0usize; d + 1];
        for t in subset.iter().combinations(d + 1) {
            for (slot, &&idx) in tuple.iter_mut().zip(t.iter()) {
                *slot = idx;
            }
            let base = self.cache.orient(&tuple);
            if base == 0 {
                continue;
            }
            let mut inside = true;
            let mut probe = tuple.clone();
            for j in 0..=d {
                probe[j] = p;
                if self.cache.orient(&probe) != base {
                    inside = false;
                }
                probe[j] = tuple[j];
                if !inside {
                    break;
                }
            }
            if inside {
                return true;
            }
        }
        false
    }

    pub fn is_island(&self, subset: &[usize]) -> bool {
        if self.d() == 2 {
            let hull = self.hull2(subset);
            for p in 0..self.n() {
                if subset.contains(&p) {
                    continue;
                }
                if self.contains2(&hull, p) {
                    return false;
                }
            }
            true
        } else {
            for p in 0..self.n() {
                if subset.contains(&p) {
                    continue;
                }
                if self.contains_generic(subset, p) {
                    return false;
                }
            }
            true
        }
    }

    pub fn is_convex(&self, subset: &[usize]) -> bool {
        if subset.len() <= 2 {
            return true;
        }
        if self.d() == 2 {
            self.hull2(subset).len() == subset.len()
        } else {
            let mut rest: Vec<usize> = Vec::with_capacity(subset.len() - 1);
            for (i, &m) in subset.iter().enumerate() {
                rest.clear();
                rest.extend(subset.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
                if self.contains_generic(&rest, m) {
                    return false;
                }
                // Under general position a member of conv(rest) of lower
                // affine dimension cannot occur, so the strict test suffices.
            }
            true
        }
    }

    pub fn is_hole(&self, subset: &[usize]) -> bool {
        if self.d() == 2 {
            let hull = self.hull2(subset);
            if hull.len() != subset.len() {
                return false;
            }
            for p in 0..self.n() {
                if subset.contains(&p) {
                    continue;
                }
                if self.contains2(&hull, p) {
                    return false;
                }
            }
            true
        } else {
            self.is_convex(subset) && self.is_island(subset)
        }
    }

    /// Depth-first enumeration over holes (holes are closed under taking
    /// subsets in general position, so pruning on non-holes is exact).
    /// Calls `visit` for every nonempty hole, largest index last, while
    /// `visit` returns true for descending.
    fn walk_holes(&self, max_size: Option<usize>, visit: &mut impl FnMut(&[usize]) -> bool) {
        let mut stack: Vec<usize> = Vec::new();
        for start in 0..self.n() {
            stack.push(start);
            self.walk_holes_rec(&mut stack, max_size, visit);
            stack.pop();
        }
    }

    fn walk_holes_rec(
        &self,
        stack: &mut Vec<usize>,
        max_size: Option<usize>,
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) {
        if !visit(stack) {
            return;
        }
        if let Some(cap) = max_size {
            if stack.len() >= cap {
                return;
            }
        }
        let last = *stack.last().expect("nonempty stack");
        for next in last + 1..self.n() {
            stack.push(next);
            if self.is_hole(stack) {
                self.walk_holes_rec(stack, max_size, visit);
            }
            stack.pop();
        }
    }

    /// Depth-first enumeration over nonempty convex-position subsets
    /// (also closed under taking subsets).
    fn count_convex_position_subsets(&self) -> BigInt {
        let mut count = BigInt::zero();
        let mut stack: Vec<usize> = Vec::new();
        for start in 0..self.n() {
            stack.push(start);
            self.count_convex_rec(&mut stack, &mut count);
            stack.pop();
        }
        count
    }

    fn count_convex_rec(&self, stack: &mut Vec<usize>, count: &mut BigInt) {
        *count += 1;
        let last = *stack.last().expect("nonempty stack");
        for next in last + 1..self.n() {
            stack.push(next);
            if self.is_convex(stack) {
                self.count_convex_rec(stack, count);
            }
            stack.pop();
        }
    }
}

/// Exact count of k-subsets of the given kind over all C(n, k) subsets.
pub fn count_k_subsets(set: &PointSet, k: usize, kind: SubsetKind) -> Result<CountResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = set.len();
    let mut value = BigInt::zero();
    if k > n {
        return Ok(CountResult {
            value,
            n,
            k: Some(k),
            kind,
        });
    }
    let general = set.is_general_position();
    if kind == SubsetKind::Hole && !general {
        return Err(Error::Degenerate(
            "hole counting requires general position; use is_hole_raw per subset \
             for the interior-emptiness definition"
                .into(),
        ));
    }
    if general {
        let engine = Engine::new(set)?;
        match kind {
            SubsetKind::Hole => {
                engine.walk_holes(Some(k), &mut |stack: &[usize]| {
                    if stack.len() == k {
                        value += 1;
                        false
                    } else {
                        true
                    }
                });
            }
            SubsetKind::Island => {
                for subset in (0..n).combinations(k) {
                    if engine.is_island(&subset) {
                        value += 1;
                    }
                }
            }
            SubsetKind::Convex => {
                for subset in (0..n).combinations(k) {
                    if engine.is_convex(&subset) {
                        value += 1;
                    }
                }
            }
        }
    } else {
        for subset in (0..n).combinations(k) {
            let ok = match kind {
                SubsetKind::Island => is_island(set, &Subset::new(subset.clone())?)?,
                SubsetKind::Convex => is_convex_position(&set.subset(&subset))?,
                SubsetKind::Hole => unreachable!(),
            };
            if ok {
                value += 1;
            }
        }
    }
    Ok(CountResult {
        value,
        n,
        k: Some(k),
        kind,
    })
}

/// Counts all nonempty islands; the two methods must agree for general
/// position sets by the hull correspondence.
pub fn count_all_islands(
    set: &PointSet,
    method: AllIslandsMethod,
    cap: Option<usize>,
) -> Result<CountResult> {
    let cap = cap.unwrap_or(ALL_ISLANDS_DEFAULT_CAP);
    let n = set.len();
    if n > cap {
        return Err(Error::CapExceeded {
            n,
            cap,
            hint: "raise the all-islands cap (--cap) to enumerate larger sets".into(),
        });
    }
    if !set.is_general_position() {
        return Err(Error::Degenerate(
            "all-islands counting requires general position".into(),
        ));
    }
    let engine = Engine::new(set)?;
    let value = match method {
        AllIslandsMethod::Direct => {
            let mut count = BigInt::zero();
            let mut subset: Vec<usize> = Vec::with_capacity(n);
            for mask in 1u64..(1u64 << n) {
                subset.clear();
                for i in 0..n {
                    if mask & (1 << i) != 0 {
                        subset.push(i);
                    }
                }
                if engine.is_island(&subset) {
                    count += 1;
                }
            }
            count
        }
        AllIslandsMethod::ConvexBijection => engine.count_convex_position_subsets(),
    };
    Ok(CountResult {
        value,
        n,
        k: None,
        kind: SubsetKind::Island,
    })
}

/// The largest k with a k-hole, by pruned enumeration over holes.
pub fn largest_hole_size(set: &PointSet, cap: Option<usize>) -> Result<usize> {
    let cap = cap.unwrap_or(LARGEST_HOLE_DEFAULT_CAP);
    let n = set.len();
    if n > cap {
        return Err(Error::CapExceeded {
            n,
            cap,
            hint: "raise the largest-hole cap (--cap) to search larger sets".into(),
        });
    }
    if !set.is_general_position() {
        return Err(Error::Degenerate(
            "largest-hole search requires general position".into(),
        ));
    }
    let engine = Engine::new(set)?;
    let mut best = 0usize;
    engine.walk_holes(None, &mut |stack: &[usize]| {
        best = best.max(stack.len());
        true
    });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use num_traits::One;

    fn pt(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    fn set2(coords: &[[i64; 2]]) -> PointSet {
        PointSet::new(
            2,
            coords.iter().map(|c| pt(&c[..])).collect(),
            None,
        )
        .unwrap()
    }

    fn sel(indices: &[usize]) -> Subset {
        Subset::new(indices.to_vec()).unwrap()
    }

    #[test]
    fn convex_position_basics() {
        let square = [pt(&[0, 0]), pt(&[1, 0]), pt(&[1, 1]), pt(&[0, 1])];
        assert!(is_convex_position(&square).unwrap());
        let tri_centroid = [pt(&[0, 0]), pt(&[3, 0]), pt(&[0, 3]), pt(&[1, 1])];
        assert!(!is_convex_position(&tri_centroid).unwrap());
        assert!(is_convex_position(&[pt(&[0, 0]), pt(&[1, 5])]).unwrap());
        let simplex3 = [pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])];
        assert!(is_convex_position(&simplex3).unwrap());
    }

    #[test]
    fn island_examples() {
        let s = set2(&[[0, 0], [4, 0], [0, 4], [1, 1]]);
        assert!(is_island(&s, &sel(&[0, 1, 3])).unwrap());
        assert!(!is_island(&s, &sel(&[0, 1, 2])).unwrap());
        assert!(is_island(&s, &sel(&[0, 1, 2, 3])).unwrap());
        assert!(is_island(&s, &sel(&[3])).unwrap());
    }

    #[test]
    fn hole_examples() {
        let s = set2(&[[0, 0], [4, 0], [0, 4], [1, 1]]);
        assert!(is_hole(&s, &sel(&[0, 1, 3])).unwrap());
        assert!(!is_hole(&s, &sel(&[0, 1, 2])).unwrap());
        assert!(is_hole(&s, &sel(&[2])).unwrap());
    }

    #[test]
    fn hole_errors_on_degenerate_sets() {
        let s = set2(&[[0, 0], [1, 1], [2, 2], [5, 0]]);
        assert!(is_hole(&s, &sel(&[0, 3])).is_err());
        assert!(is_hole_raw(&s, &sel(&[0, 3])).is_ok());
    }

    #[test]
    fn count_pairs_is_trivial() {
        let s = set2(&[[0, 0], [7, 1], [3, 9], [5, 4], [1, 6], [8, 7]]);
        assert!(s.is_general_position());
        let c = count_k_subsets(&s, 2, SubsetKind::Island).unwrap();
        assert_eq!(c.value, BigInt::from(15));
    }

    #[test]
    fn count_convex_pentagon_holes() {
        // 5 points in convex position: every triple is a hole.
        let s = set2(&[[0, 0], [4, 1], [5, 4], [2, 7], [-1, 3]]);
        let c = count_k_subsets(&s, 3, SubsetKind::Hole).unwrap();
        assert_eq!(c.value, BigInt::from(10));
        assert_eq!(largest_hole_size(&s, None).unwrap(), 5);
    }

    #[test]
    fn count_above_n_is_zero() {
        let s = set2(&[[0, 0], [1, 0], [0, 1]]);
        for kind in [SubsetKind::Hole, SubsetKind::Island, SubsetKind::Convex] {
            assert_eq!(count_k_subsets(&s, 5, kind).unwrap().value, BigInt::zero());
        }
    }

    #[test]
    fn all_islands_triangle_plus_center() {
        let s = set2(&[[0, 0], [4, 0], [0, 4], [1, 1]]);
        let direct = count_all_islands(&s, AllIslandsMethod::Direct, None).unwrap();
        let bij = count_all_islands(&s, AllIslandsMethod::ConvexBijection, None).unwrap();
        assert_eq!(direct.value, BigInt::from(14));
        assert_eq!(bij.value, BigInt::from(14));
    }

    #[test]
    fn all_islands_square() {
        let s = set2(&[[0, 0], [9, 1], [10, 9], [1, 8]]);
        let direct = count_all_islands(&s, AllIslandsMethod::Direct, None).unwrap();
        assert_eq!(direct.value, BigInt::from(15));
    }

    #[test]
    fn all_islands_single_point() {
        let s = set2(&[[3, 4]]);
        let c = count_all_islands(&s, AllIslandsMethod::Direct, None).unwrap();
        assert_eq!(c.value, BigInt::one());
    }

    #[test]
    fn largest_hole_triangle_plus_center() {
        let s = set2(&[[0, 0], [4, 0], [0, 4], [1, 1]]);
        assert_eq!(largest_hole_size(&s, None).unwrap(), 3);
    }

    #[test]
    fn cap_is_enforced() {
        let s = set2(&[[0, 0], [1, 2], [2, 1]]);
        assert!(matches!(
            count_all_islands(&s, AllIslandsMethod::Direct, Some(2)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn engine_agrees_with_generic_predicates() {
        use crate::sampler::{sample_set, BodyKind, ConvexBody};
        for (d, n, seed) in [(2usize, 8usize, 1u64), (2, 9, 2), (3, 7, 3)] {
            let body = ConvexBody::new(BodyKind::UnitCube, d).unwrap();
            let s = sample_set(&body, n, seed).unwrap();
            let engine = Engine::new(&s).unwrap();
            for k in 1..=(d + 2) {
                for subset in (0..n).combinations(k) {
                    let sub = Subset::new(subset.clone()).unwrap();
                    assert_eq!(
                        engine.is_island(&subset),
                        is_island(&s, &sub).unwrap(),
                        "island mismatch d={d} subset {subset:?}"
                    );
                    assert_eq!(
                        engine.is_convex(&subset),
                        is_convex_position(&s.subset(&subset)).unwrap(),
                        "convex mismatch d={d} subset {subset:?}"
                    );
                    assert_eq!(
                        engine.is_hole(&subset),
                        is_hole(&s, &sub).unwrap(),
                        "hole mismatch d={d} subset {subset:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn hole_dfs_agrees_with_brute_force() {
        use crate::sampler::{sample_set, BodyKind, ConvexBody};
        for seed in [11u64, 12, 13] {
            let body = ConvexBody::new(BodyKind::UnitCube, 2).unwrap();
            let s = sample_set(&body, 10, seed).unwrap();
            for k in 3..=5 {
                let dfs = count_k_subsets(&s, k, SubsetKind::Hole).unwrap().value;
                let mut brute = BigInt::zero();
                for subset in (0..s.len()).combinations(k) {
                    if is_hole(&s, &Subset::new(subset).unwrap()).unwrap() {
                        brute += 1;
                    }
                }
                assert_eq!(dfs, brute, "k={k} seed={seed}");
            }
        }
    }
}
