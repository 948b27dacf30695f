//! Closed-form bound evaluators, all exact rationals.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, Rational};

#[derive(Debug, Clone)]
pub struct BoundValue {
    pub value: Rational,
    pub formula_id: &'static str,
    pub d: usize,
    pub k: Option<usize>,
    pub n: usize,
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg.to_string()))
    }
}

/// Falling factorial n(n-1)...(n-k+2), a product of exactly k-1 terms.
fn falling_product(n: usize, k: usize) -> BigInt {
    let mut result = BigInt::one();
    for t in 0..k - 1 {
        result *= BigInt::from(n - t);
    }
    result
}

fn island_prefactor(d: usize, k: usize) -> BigInt {
    // 2^(d-1) * (2 d^(2d-1) C(k, floor(d/2)))^(k-d-1)
    let inner = BigInt::from(2) * BigInt::from(d).pow(2 * d as u32 - 1) * binomial(k, d / 2);
    BigInt::from(2).pow(d as u32 - 1) * inner.pow((k - d - 1) as u32)
}

/// Upper bound on the expected number of k-islands among n uniform points in
/// a unit-volume convex body.
pub fn bound_theorem1(d: usize, k: usize, n: usize) -> Result<BoundValue> {
    require(d >= 2, "dimension must be at least 2")?;
    require(k >= d + 1, "k must be at least d+1")?;
    require(n >= k, "n must be at least k")?;
    let numer = island_prefactor(d, k) * BigInt::from(k - d) * falling_product(n, k);
    let denom = BigInt::from(n - k + 1).pow((k - d - 1) as u32);
    Ok(BoundValue {
        value: Rational::new(numer, denom),
        formula_id: "theorem1",
        d,
        k: Some(k),
        n,
    })
}

/// Upper bound on the expected number of k-holes; the island bound with the
/// (k-d) factor removed and an extra (k-d-1)! in the denominator.
pub fn bound_theorem2(d: usize, k: usize, n: usize) -> Result<BoundValue> {
    require(d >= 2, "dimension must be at least 2")?;
    require(k >= d + 1, "k must be at least d+1")?;
    require(n >= k, "n must be at least k")?;
    let numer = island_prefactor(d, k) * falling_product(n, k);
    let denom = factorial(k - d - 1) * BigInt::from(n - k + 1).pow((k - d - 1) as u32);
    Ok(BoundValue {
        value: Rational::new(numer, denom),
        formula_id: "theorem2",
        d,
        k: Some(k),
        n,
    })
}

/// Upper bound 2^(d-1) d! C(n,d) on the expected number of empty simplices
/// ((d+1)-holes).
pub fn bound_corollary3(d: usize, n: usize) -> Result<BoundValue> {
    require(d >= 2, "dimension must be at least 2")?;
    require(n >= d + 1, "n must be at least d+1")?;
    let value = BigInt::from(2).pow(d as u32 - 1) * factorial(d) * binomial(n, d);
    Ok(BoundValue {
        value: Rational::from_integer(value),
        formula_id: "corollary3",
        d,
        k: Some(d + 1),
        n,
    })
}

/// Sharpened planar bound 12 n(n-1)(n-2)/(n-3) on expected 4-holes.
pub fn bound_planar4_improved(n: usize) -> Result<BoundValue> {
    require(n >= 4, "n must be at least 4")?;
    let numer = BigInt::from(12) * BigInt::from(n) * BigInt::from(n - 1) * BigInt::from(n - 2);
    let denom = BigInt::from(n - 3);
    Ok(BoundValue {
        value: Rational::new(numer, denom),
        formula_id: "planar4_improved",
        d: 2,
        k: Some(4),
        n,
    })
}

/// Every n-point set in general position contains at least C(n-1, d) empty
/// simplices; this holds per instance, not just in expectation.
pub fn lower_bound_empty_simplices(d: usize, n: usize) -> Result<BoundValue> {
    require(n >= d + 1, "n must be at least d+1")?;
    Ok(BoundValue {
        value: Rational::from_integer(binomial(n - 1, d)),
        formula_id: "lower_empty_simplices",
        d,
        k: Some(d + 1),
        n,
    })
}

/// Deterministic lower bound C(n,d)/C(k,d) on the number of k-islands in any
/// n-point set in general position.
pub fn lower_bound_islands(d: usize, k: usize, n: usize) -> Result<BoundValue> {
    require(k >= d, "k must be at least d")?;
    require(n >= k, "n must be at least k")?;
    Ok(BoundValue {
        value: Rational::new(binomial(n, d), binomial(k, d)),
        formula_id: "lower_islands",
        d,
        k: Some(k),
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn theorem1_collapses_at_k_equals_d_plus_one() {
        for n in 3..=50 {
            let b = bound_theorem1(2, 3, n).unwrap();
            assert_eq!(b.value, int(2 * (n as i64) * (n as i64 - 1)));
            assert_eq!(b.value, int(4) * Rational::from_integer(binomial(n, 2)));
        }
    }

    #[test]
    fn theorem2_specializes_to_corollary3() {
        for d in 2..=4 {
            for n in (d + 1)..=50 {
                let t2 = bound_theorem2(d, d + 1, n).unwrap();
                let c3 = bound_corollary3(d, n).unwrap();
                assert_eq!(t2.value, c3.value, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn theorem1_is_theorem2_times_island_factors() {
        for (d, k) in [(2, 4), (2, 5), (2, 7), (3, 5), (3, 6), (4, 6)] {
            for n in [k, k + 1, k + 10, 40] {
                let t1 = bound_theorem1(d, k, n).unwrap();
                let t2 = bound_theorem2(d, k, n).unwrap();
                let factor = Rational::from_integer(
                    num_bigint::BigInt::from(k - d) * factorial(k - d - 1),
                );
                assert_eq!(t1.value, t2.value * factor, "d={d} k={k} n={n}");
            }
        }
    }

    #[test]
    fn planar_four_hole_coefficients() {
        for n in 4..=40 {
            let t2 = bound_theorem2(2, 4, n).unwrap();
            let ratio = t2.value.clone() * int(n as i64 - 3)
                / (int(n as i64) * int(n as i64 - 1) * int(n as i64 - 2));
            assert_eq!(ratio, int(128));
            let improved = bound_planar4_improved(n).unwrap();
            assert_eq!(improved.value / t2.value, rat(12, 128));
        }
        assert_eq!(bound_planar4_improved(4).unwrap().value, int(288));
    }

    #[test]
    fn corollary3_values() {
        assert_eq!(bound_corollary3(3, 10).unwrap().value, int(2880));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lower_bound_empty_simplices(2, 12).unwrap().value, int(55));
        assert_eq!(lower_bound_empty_simplices(2, 3).unwrap().value, int(1));
        assert_eq!(lower_bound_empty_simplices(3, 5).unwrap().value, int(4));
        assert_eq!(lower_bound_islands(2, 4, 10).unwrap().value, rat(45, 6));
    }

    #[test]
    fn denominator_is_one_at_the_edge() {
        let b = bound_theorem1(2, 5, 5).unwrap();
        assert!(b.value.is_integer());
    }

    #[test]
    fn bounds_increase_in_n() {
        for n in 10..30 {
            for (d, k) in [(2usize, 4usize), (3, 5)] {
                assert!(
                    bound_theorem1(d, k, n + 1).unwrap().value
                        > bound_theorem1(d, k, n).unwrap().value
                );
                assert!(
                    bound_theorem2(d, k, n + 1).unwrap().value
                        > bound_theorem2(d, k, n).unwrap().value
                );
            }
        }
    }

    #[test]
    fn preconditions_enforced() {
        assert!(bound_theorem1(1, 3, 10).is_err());
        assert!(bound_theorem1(2, 2, 10).is_err());
        assert!(bound_theorem1(2, 5, 4).is_err());
        assert!(bound_planar4_improved(3).is_err());
    }
}
