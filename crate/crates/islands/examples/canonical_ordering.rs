//! Compute the canonical ordering of a small planar set, show that it is the
//! unique ordering satisfying all five defining conditions, and check both
//! containment certificates.

use islands::canonical::{
    canonical_ordering, check_box_containment, check_canonical_conditions, delta_star_contains_all,
};
use islands::pointset::parse_pointset;
use islands::rational::format_rational;
use itertools::Itertools;

fn main() -> islands::Result<()> {
    let q = parse_pointset("2 4\n0 3\n4 0\n0 0\n1 1\n")?;

    let report = canonical_ordering(&q)?;
    println!("canonical ordering: {:?}", report.permutation);
    println!("points inside the maximal simplex: a = {}", report.a);
    println!("simplex volume: {}", format_rational(&report.delta_volume));

    // scanning all k! orderings finds exactly the canonical one
    let mut passing = Vec::new();
    for perm in (0..q.len()).permutations(q.len()) {
        if check_canonical_conditions(&q, &perm)?.all_pass() {
            passing.push(perm);
        }
    }
    assert_eq!(passing, vec![report.permutation.clone()]);
    println!("unique among all {} orderings", (1..=q.len()).product::<usize>());

    // the enlarged simplex around the maximal one already holds all of Q,
    // and the apex of the ordering satisfies the distance-dominance box form
    println!(
        "enlarged simplex contains Q: {}",
        delta_star_contains_all(&q, &report.permutation)?
    );
    println!(
        "box containment: {}",
        check_box_containment(&q, &report.permutation, false)?
    );
    Ok(())
}
