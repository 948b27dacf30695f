//! The total number of islands of a set in general position equals its
//! number of nonempty convex-position subsets. This example counts both ways
//! and checks they agree; the convex route prunes much harder because convex
//! position is hereditary while being an island is not.

use std::time::Instant;

use islands::enumerate::{count_all_islands, AllIslandsMethod};
use islands::sampler::{sample_set, BodyKind, ConvexBody};

fn main() -> islands::Result<()> {
    let body = ConvexBody::new(BodyKind::BallScaled, 2)?;
    for n in [8, 11, 14] {
        let set = sample_set(&body, n, 7)?;

        let t = Instant::now();
        let direct = count_all_islands(&set, AllIslandsMethod::Direct, None)?;
        let direct_time = t.elapsed();

        let t = Instant::now();
        let via_convex = count_all_islands(&set, AllIslandsMethod::ConvexBijection, None)?;
        let convex_time = t.elapsed();

        assert_eq!(direct.value, via_convex.value);
        println!(
            "n={:>2}: {} islands  (direct {:?}, via convex subsets {:?})",
            n, direct.value, direct_time, convex_time
        );
    }
    Ok(())
}
