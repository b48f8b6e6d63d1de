//! Arbitrary-precision dyadic arithmetic with directed rounding, interval
//! enclosures of elementary functions and an adaptive refinement driver.

mod dyadic;
mod elementary;
mod interval;
mod refine;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

pub use dyadic::{Dyadic, Round};
pub use elementary::{cos_interval, exp_interval, ln_interval, pi_interval};
pub use interval::DyadicInterval;
pub use refine::{refine, RefineTarget};


use crate::{Error, Result};

/// Precision and size limits shared by every adaptive computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// First working precision, in bits.
    pub start_precision: u64,
    /// Largest precision used when certifying a linear form in logarithms.
    pub precision_cap: u64,
    /// Largest precision used when evaluating a sign at a rational point.
    pub sign_eval_cap: u64,
    /// Largest exact expansion, in bits, allowed as a last resort.
    pub exact_cap_bits: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            start_precision: 64,
            precision_cap: 1 << 20,
            sign_eval_cap: 1 << 14,
            exact_cap_bits: 1 << 24,
        }
    }
}

impl Budget {
    /// Same limits with `precision_cap` replaced.
    pub fn with_precision_cap(mut self, cap: u64) -> Self {
        self.precision_cap = cap;
        self
    }
}

/// Parse a decimal integer, allowing a leading sign and `_` separators.
pub fn parse_int(s: &str) -> Result<BigInt> {
    let t: String = s.trim().chars().filter(|&c| c != '_').collect();
    let t = t.strip_prefix('+').unwrap_or(&t);
    t.parse::<BigInt>()
        .map_err(|_| Error::parse(format!("invalid integer `{}`", s.trim())))
}

/// Parse `p` or `p/q` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::parse(format!("zero denominator in `{}`", s.trim())));
            }
            Ok(BigRational::new(parse_int(p)?, q))
        }
    }
}

/// Exact `x^e`.
pub fn pow_rat(x: &BigRational, e: &BigUint) -> Result<BigRational> {
    if x.is_zero() {
        if e.is_zero() {
            return Err(Error::domain("0^0 is undefined"));
        }
        return Ok(BigRational::zero());
    }
    if e.is_zero() {
        return Ok(BigRational::one());
    }
    let n: BigInt = Pow::pow(x.numer(), e);
    let d: BigInt = Pow::pow(x.denom(), e);
    Ok(BigRational::new_raw(n, d))
}
