//! Monte Carlo check of the expectation bounds: sample many sets, count
//! holes and islands exactly on each, and compare the sample mean against
//! the closed forms.

use islands::enumerate::SubsetKind;
use islands::experiments::monte_carlo;
use islands::sampler::{BodyKind, ConvexBody};

fn main() -> islands::Result<()> {
    let body = ConvexBody::new(BodyKind::UnitCube, 2)?;

    let holes = monte_carlo(&body, 3, 20, 50, 1, SubsetKind::Hole)?;
    print!("{}", holes.to_text());

    let islands = monte_carlo(&body, 4, 20, 50, 1, SubsetKind::Island)?;
    print!("{}", islands.to_text());

    assert!(holes.pass() && islands.pass());

    // same seeds, so hole counts are dominated trial by trial
    let holes4 = monte_carlo(&body, 4, 20, 50, 1, SubsetKind::Hole)?;
    for (h, i) in holes4.counts.iter().zip(&islands.counts) {
        assert!(h <= i);
    }
    println!("per-trial 4-hole counts never exceed 4-island counts");
    Ok(())
}
