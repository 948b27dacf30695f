//! Property-based checks of the exact kernel and the serialization layer.

use islands::enumerate::{count_k_subsets, SubsetKind};
use islands::geom::{
    affinely_independent, in_hull, orientation, simplex_volume, squared_distance_to_convex_hull,
    Point,
};
use islands::pointset::{parse_pointset, pointset_from_json, pointset_to_json, serialize_pointset, PointSet};
use islands::rational::{binomial, rat, Rational};
use num_traits::Zero;
use proptest::prelude::*;

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
}

fn point_strategy(dim: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(rational_strategy(), dim).prop_map(Point::new)
}

fn distinct_points(dim: usize, count: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(point_strategy(dim), count)
        .prop_filter("points must be distinct", |pts| {
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    if pts[i] == pts[j] {
                        return false;
                    }
                }
            }
            true
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orientation_flips_under_transposition(
        pts in distinct_points(2, 3),
        swap in 0usize..3,
    ) {
        let before = orientation(&pts).unwrap();
        let mut swapped = pts.clone();
        swapped.swap(swap, (swap + 1) % 3);
        let after = orientation(&swapped).unwrap();
        prop_assert_eq!(before, -after);
    }

    #[test]
    fn volume_zero_iff_dependent(pts in distinct_points(3, 4)) {
        let vol = simplex_volume(&pts).unwrap();
        prop_assert_eq!(vol.is_zero(), !affinely_independent(&pts));
        prop_assert_eq!(vol.is_zero(), orientation(&pts).unwrap() == 0);
    }

    #[test]
    fn hull_distance_zero_iff_member(
        hull in distinct_points(2, 4),
        q in point_strategy(2),
    ) {
        let dist = squared_distance_to_convex_hull(&q, &hull).unwrap();
        prop_assert_eq!(dist.is_zero(), in_hull(&q, &hull).unwrap());
    }

    #[test]
    fn text_round_trip(pts in distinct_points(2, 5)) {
        let set = PointSet::new(2, pts, None).unwrap();
        let back = parse_pointset(&serialize_pointset(&set)).unwrap();
        prop_assert_eq!(back.points(), set.points());
    }

    #[test]
    fn json_round_trip(pts in distinct_points(3, 4)) {
        let set = PointSet::new(3, pts, None).unwrap();
        let back = pointset_from_json(&pointset_to_json(&set)).unwrap();
        prop_assert_eq!(back, set);
    }

    #[test]
    fn counts_are_sane(pts in distinct_points(2, 7), k in 3usize..6) {
        let set = PointSet::new(2, pts, None).unwrap();
        if !set.is_general_position() {
            return Ok(());
        }
        let holes = count_k_subsets(&set, k, SubsetKind::Hole).unwrap().value;
        let islands = count_k_subsets(&set, k, SubsetKind::Island).unwrap().value;
        let convex = count_k_subsets(&set, k, SubsetKind::Convex).unwrap().value;
        // every hole is an island in convex position, and everything lives
        // inside the C(n,k) universe
        prop_assert!(holes <= islands);
        prop_assert!(holes <= convex);
        prop_assert!(islands <= binomial(set.len(), k));
        prop_assert!(convex <= binomial(set.len(), k));
    }
}
