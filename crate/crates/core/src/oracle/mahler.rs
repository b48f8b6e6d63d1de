use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::dense::DensePoly;
use crate::bigmath::ln_interval;
use crate::{Error, Result};

fn ln_hi(v: &BigInt) -> BigRational {
    ln_interval(&BigRational::from_integer(v.clone()), 64)
        .expect("positive")
        .hi()
        .to_rational()
}

/// `ln` of the classical dense separation bound
/// `√3·(d+1)^(−(2d+1)/2)·H^(−d+1)` for degree `d` and height `H`.
///
/// Every logarithm is rounded so that the result stays a lower bound.
pub fn mahler_log_bound_for(d: &BigUint, h: &BigInt) -> Result<BigRational> {
    if d < &BigUint::from(2u8) {
        return Err(Error::domain("the dense bound needs degree at least 2"));
    }
    if !h.is_positive() {
        return Err(Error::domain("height must be positive"));
    }
    let d = BigInt::from(d.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let ln3_lo = ln_interval(&BigRational::from_integer(3.into()), 64)?.lo().to_rational();
    let degree_term = BigRational::new(2 * &d + 1, BigInt::from(2)) * ln_hi(&(&d + 1));
    let height_term = BigRational::from_integer(&d - 1) * ln_hi(h);
    Ok(half * ln3_lo - degree_term - height_term)
}

/// The dense bound for an integer polynomial.
pub fn mahler_log_bound(p: &DensePoly) -> Result<BigRational> {
    if p.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(Error::domain("the dense bound needs integer coefficients"));
    }
    let h = p.height().to_integer();
    mahler_log_bound_for(&BigUint::from(p.degree()), &h)
}
