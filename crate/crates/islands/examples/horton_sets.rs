//! Build Horton sets in the plane and in R^3, certify them against the
//! recursive definition, and show the planar hallmark: no 7-holes no matter
//! how many points.

use islands::enumerate::{count_k_subsets, largest_hole_size, SubsetKind};
use islands::horton::{horton_d, horton_planar, verify_horton, HortonParams};

fn main() -> islands::Result<()> {
    for n in [8, 16, 32] {
        let h = horton_planar(n)?;
        let report = verify_horton(&h)?;
        assert!(report.all_ok());
        let seven = count_k_subsets(&h, 7, SubsetKind::Hole)?;
        let largest = largest_hole_size(&h, None)?;
        println!(
            "planar n={:>2}: certified, 7-holes = {}, largest hole = {}",
            n, seven.value, largest
        );
    }

    let h3 = horton_d(3, 12, &HortonParams::new(3, 12))?;
    let report = verify_horton(&h3)?;
    assert!(report.all_ok());
    // the projection dropping the last coordinate is again Horton
    let projected = h3.project_drop_last()?;
    assert!(verify_horton(&projected)?.all_ok());
    println!("d=3 n=12: certified, projection certified too");
    Ok(())
}
