//! Two growth experiments: the all-island count of random planar sets grows
//! like 2^(c n^(1/3)) in the exponent scale, while 4-island counts of Horton
//! sets grow polynomially, visible as a straight log-log line.

use islands::experiments::{growth_experiment, GrowthSource};
use islands::sampler::{BodyKind, ConvexBody};

fn main() -> islands::Result<()> {
    let body = ConvexBody::new(BodyKind::UnitCube, 2)?;
    let random = growth_experiment(
        &GrowthSource::RandomBody(body),
        &[8, 12, 16, 20],
        10,
        5,
        None,
    )?;
    print!("{}", random.to_text());
    assert!(random.fitted_slope.unwrap() > 0.0);

    let horton = growth_experiment(&GrowthSource::Horton { d: 2, k: 4 }, &[8, 16, 32, 64], 1, 0, None)?;
    print!("{}", horton.to_text());
    assert!(horton.fitted_slope.unwrap() > 1.0);
    Ok(())
}
