//! Evaluate the closed-form expectation bounds exactly and print a small
//! table, including the identity tying the general island bound to the
//! hole bound and the empty-simplex specialization.

use islands::bounds::{
    bound_corollary3, bound_planar4_improved, bound_theorem1, bound_theorem2,
    lower_bound_empty_simplices, lower_bound_islands,
};
use islands::rational::to_f64;

fn main() -> islands::Result<()> {
    println!(
        "{:>3} {:>3} {:>4} {:>14} {:>14} {:>12}",
        "d", "k", "n", "island upper", "hole upper", "island lower"
    );
    for (d, k, n) in [(2, 4, 20), (2, 5, 30), (2, 6, 40), (3, 4, 20), (3, 5, 30), (4, 6, 40)] {
        let t1 = bound_theorem1(d, k, n)?;
        let t2 = bound_theorem2(d, k, n)?;
        let lo = lower_bound_islands(d, k, n)?;
        println!(
            "{:>3} {:>3} {:>4} {:>14.4e} {:>14.4e} {:>12.4}",
            d,
            k,
            n,
            to_f64(&t1.value),
            to_f64(&t2.value),
            to_f64(&lo.value)
        );
    }

    // k = d+1 collapses the hole bound to 2^(d-1) d! C(n,d)
    let t2 = bound_theorem2(3, 4, 25)?;
    let c3 = bound_corollary3(3, 25)?;
    assert_eq!(t2.value, c3.value);
    println!("\nempty simplices, d=3 n=25: upper {} = 2^2 3! C(25,3)", c3.value);
    println!(
        "deterministic lower bound C(24,3) = {}",
        lower_bound_empty_simplices(3, 25)?.value
    );

    let p4 = bound_planar4_improved(30)?;
    println!("planar 4-holes at n=30: sharpened upper {:.2}", to_f64(&p4.value));
    Ok(())
}
