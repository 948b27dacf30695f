//! Count k-holes, k-islands and convex-position k-subsets of one sampled
//! point set, for a range of k.

use islands::enumerate::{count_k_subsets, SubsetKind};
use islands::sampler::{sample_set, BodyKind, ConvexBody};

fn main() -> islands::Result<()> {
    let body = ConvexBody::new(BodyKind::UnitCube, 2)?;
    let set = sample_set(&body, 12, 42)?;
    println!("12 uniform points in the unit square (seed 42)\n");
    println!("{:>3} {:>8} {:>8} {:>8}", "k", "holes", "islands", "convex");
    for k in 3..=7 {
        let holes = count_k_subsets(&set, k, SubsetKind::Hole)?;
        let islands = count_k_subsets(&set, k, SubsetKind::Island)?;
        let convex = count_k_subsets(&set, k, SubsetKind::Convex)?;
        println!(
            "{:>3} {:>8} {:>8} {:>8}",
            k, holes.value, islands.value, convex.value
        );
        // a hole is an island in convex position, so both columns dominate it
        assert!(holes.value <= islands.value);
        assert!(holes.value <= convex.value);
    }
    Ok(())
}
