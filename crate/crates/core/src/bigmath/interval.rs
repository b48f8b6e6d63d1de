use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::dyadic::{Dyadic, Round};
use crate::{Error, Result};

/// A closed interval `[lo, hi]` with dyadic endpoints.
///
/// Arithmetic rounds outward to `precision` significant bits, so the result
/// of every operation contains the exact result for all points of the
/// operands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DyadicInterval {
    #[serde(with = "crate::serde_str")]
    lo: Dyadic,
    #[serde(with = "crate::serde_str")]
    hi: Dyadic,
    precision: u64,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic, precision: u64) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        DyadicInterval { lo, hi, precision }
    }

    pub fn point(d: Dyadic, precision: u64) -> Self {
        DyadicInterval {
            lo: d.clone(),
            hi: d,
            precision,
        }
    }

    pub fn zero(precision: u64) -> Self {
        Self::point(Dyadic::zero(), precision)
    }

    pub fn from_int(n: &BigInt, precision: u64) -> Self {
        let d = Dyadic::from_int(n.clone());
        Self::new(
            d.round(precision, Round::Down),
            d.round(precision, Round::Up),
            precision,
        )
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, precision: u64) -> Self {
        Self::new(
            Dyadic::from_ratio(num, den, precision, Round::Down),
            Dyadic::from_ratio(num, den, precision, Round::Up),
            precision,
        )
    }

    pub fn from_rational(q: &BigRational, precision: u64) -> Self {
        Self::from_ratio(q.numer(), q.denom(), precision)
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u64 {
        self.precision
    }

    pub fn with_precision(mut self, precision: u64) -> Self {
        self.precision = precision;
        self
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub_exact(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        Dyadic::midpoint(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn contains_interval(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Sign of every point of the interval, or `None` when it straddles 0.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.sign() == Sign::Plus {
            Some(Sign::Plus)
        } else if self.hi.sign() == Sign::Minus {
            Some(Sign::Minus)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::NoSign)
        } else {
            None
        }
    }

    /// `max(|lo|, |hi|)`.
    pub fn abs_max(&self) -> Dyadic {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    fn prec_with(&self, other: &DyadicInterval) -> u64 {
        self.precision.max(other.precision)
    }

    pub fn neg(&self) -> Self {
        DyadicInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            precision: self.precision,
        }
    }

    pub fn add(&self, other: &DyadicInterval) -> Self {
        let p = self.prec_with(other);
        DyadicInterval {
            lo: self.lo.add_round(&other.lo, p, Round::Down),
            hi: self.hi.add_round(&other.hi, p, Round::Up),
            precision: p,
        }
    }

    pub fn sub(&self, other: &DyadicInterval) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &DyadicInterval) -> Self {
        let p = self.prec_with(other);
        let products = [
            self.lo.mul_exact(&other.lo),
            self.lo.mul_exact(&other.hi),
            self.hi.mul_exact(&other.lo),
            self.hi.mul_exact(&other.hi),
        ];
        let lo = products.iter().min().unwrap();
        let hi = products.iter().max().unwrap();
        DyadicInterval {
            lo: lo.round(p, Round::Down),
            hi: hi.round(p, Round::Up),
            precision: p,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        self.mul(&DyadicInterval::point(Dyadic::from_int(k.clone()), self.precision))
    }

    /// Exact multiplication by `2^k`.
    pub fn shl(&self, k: i64) -> Self {
        DyadicInterval {
            lo: self.lo.shl(k),
            hi: self.hi.shl(k),
            precision: self.precision,
        }
    }

    pub fn div(&self, other: &DyadicInterval) -> Result<Self> {
        if other.sign().is_none() || other.sign() == Some(Sign::NoSign) {
            return Err(Error::domain("interval division by an interval containing 0"));
        }
        let p = self.prec_with(other);
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| a.div_round(b, p, Round::Down))
            .min()
            .unwrap();
        let hi = pairs
            .iter()
            .map(|(a, b)| a.div_round(b, p, Round::Up))
            .max()
            .unwrap();
        Ok(DyadicInterval {
            lo,
            hi,
            precision: p,
        })
    }

    /// Division by a nonzero integer.
    pub fn div_int(&self, n: &BigInt) -> Self {
        assert!(!n.is_zero(), "interval division by zero");
        let p = self.precision;
        let d = Dyadic::from_int(n.clone());
        if n.sign() == Sign::Plus {
            DyadicInterval {
                lo: self.lo.div_round(&d, p, Round::Down),
                hi: self.hi.div_round(&d, p, Round::Up),
                precision: p,
            }
        } else {
            DyadicInterval {
                lo: self.hi.div_round(&d, p, Round::Down),
                hi: self.lo.div_round(&d, p, Round::Up),
                precision: p,
            }
        }
    }

    /// Smallest interval containing both operands.
    pub fn hull(&self, other: &DyadicInterval) -> Self {
        DyadicInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
            precision: self.prec_with(other),
        }
    }

    /// Clamps both endpoints into `[lo, hi]`; the caller guarantees the
    /// exact value lies there.
    pub fn clamp(&self, lo: &Dyadic, hi: &Dyadic) -> Self {
        let new_lo = self.lo.clone().max(lo.clone());
        let new_hi = self.hi.clone().min(hi.clone());
        DyadicInterval::new(new_lo.clone().min(new_hi.clone()), new_hi.max(new_lo), self.precision)
    }

    /// Integer power by binary powering with outward rounding.
    ///
    /// Fails with a budget error when the result's binary exponent would not
    /// fit the dyadic exponent range.
    pub fn powi(&self, e: &BigUint) -> Result<Self> {
        let p = self.precision;
        if e.is_zero() {
            return Ok(DyadicInterval::point(Dyadic::one(), p));
        }
        let odd = e.bit(0);
        let lo_abs = self.lo.abs();
        let hi_abs = self.hi.abs();
        let (small, large) = if self.lo.sign() != Sign::Minus {
            (self.lo.clone(), self.hi.clone())
        } else if self.hi.sign() != Sign::Plus {
            (hi_abs.clone(), lo_abs.clone())
        } else {
            (Dyadic::zero(), lo_abs.clone().max(hi_abs.clone()))
        };
        let up = pow_dir(&large, e, p, Round::Up)?;
        let down = pow_dir(&small, e, p, Round::Down)?;
        let (lo, hi) = if self.lo.sign() != Sign::Minus {
            (down, up)
        } else if self.hi.sign() != Sign::Plus {
            if odd {
                (up.neg(), down.neg())
            } else {
                (down, up)
            }
        } else if odd {
            (pow_dir(&lo_abs, e, p, Round::Up)?.neg(), pow_dir(&hi_abs, e, p, Round::Up)?)
        } else {
            (Dyadic::zero(), up)
        };
        Ok(DyadicInterval { lo, hi, precision: p })
    }
}

/// `x^e` for `x ≥ 0`, rounded in direction `dir` at every step.
fn pow_dir(x: &Dyadic, e: &BigUint, prec: u64, dir: Round) -> Result<Dyadic> {
    if x.is_zero() {
        return Ok(Dyadic::zero());
    }
    let msb = x.msb().unwrap();
    let lsb = x.exponent();
    let span = msb.unsigned_abs().max(lsb.unsigned_abs()).max(1) as u128;
    let e_small = u128::try_from(e).unwrap_or(u128::MAX);
    if span.saturating_mul(e_small) >= (1u128 << 61) {
        return Err(Error::budget("power exceeds the dyadic exponent range"));
    }
    let mut result = Dyadic::one();
    let mut base = x.round(prec, dir);
    let nbits = e.bits();
    for i in 0..nbits {
        if e.bit(i) {
            result = result.mul_round(&base, prec, dir);
        }
        if i + 1 < nbits {
            base = base.mul_round(&base, prec, dir);
        }
    }
    Ok(result)
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Default for DyadicInterval {
    fn default() -> Self {
        DyadicInterval::zero(0)
    }
}

pub(crate) fn one_interval(precision: u64) -> DyadicInterval {
    DyadicInterval::point(Dyadic::one(), precision)
}

pub(crate) fn symmetric(radius: &Dyadic, precision: u64) -> DyadicInterval {
    let r = radius.abs();
    DyadicInterval::new(r.neg(), r, precision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn powi_signs() {
        let x = DyadicInterval::from_rational(&rat(-3, 2), 64);
        let cube = x.powi(&BigUint::from(3u32)).unwrap();
        assert!(cube.contains_rational(&rat(-27, 8)));
        let sq = x.powi(&BigUint::from(2u32)).unwrap();
        assert!(sq.contains_rational(&rat(9, 4)));
        let straddle = DyadicInterval::new(Dyadic::from(-1), Dyadic::from(2), 32);
        let sq = straddle.powi(&BigUint::from(2u32)).unwrap();
        assert_eq!(sq.lo(), &Dyadic::zero());
        assert_eq!(sq.hi(), &Dyadic::from(4));
    }

    #[test]
    fn huge_power_is_a_budget_error() {
        let x = DyadicInterval::from_int(&BigInt::from(1u64 << 40), 64);
        let e = BigUint::from(10u64).pow(18);
        assert!(matches!(x.powi(&e), Err(Error::Budget { .. })));
    }

    #[test]
    fn division_by_straddling_interval_fails() {
        let one = one_interval(32);
        let z = DyadicInterval::new(Dyadic::from(-1), Dyadic::from(1), 32);
        assert!(one.div(&z).is_err());
    }

    proptest! {
        #[test]
        fn arithmetic_contains_exact_result(
            a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000,
            p in 8u64..80,
        ) {
            let x = rat(a, b);
            let y = rat(c, d);
            let xi = DyadicInterval::from_rational(&x, p);
            let yi = DyadicInterval::from_rational(&y, p);
            prop_assert!(xi.add(&yi).contains_rational(&(&x + &y)));
            prop_assert!(xi.sub(&yi).contains_rational(&(&x - &y)));
            prop_assert!(xi.mul(&yi).contains_rational(&(&x * &y)));
            if c != 0 {
                prop_assert!(xi.div(&yi).unwrap().contains_rational(&(&x / &y)));
            }
            let e = (a.unsigned_abs() % 13) as u32;
            let pw = xi.powi(&BigUint::from(e)).unwrap();
            prop_assert!(pw.contains_rational(&num_traits::pow(x.clone(), e as usize)));
        }

        #[test]
        fn doubling_precision_halves_width(a in 1i64..100_000, b in 1i64..100_000, p in 16u64..64) {
            let x = rat(a, b);
            let f = |p: u64| {
                let xi = DyadicInterval::from_rational(&x, p);
                xi.mul(&xi).add(&xi).powi(&BigUint::from(3u32)).unwrap()
            };
            let w1 = f(p).width().to_rational();
            let w2 = f(2 * p).width().to_rational();
            prop_assert!(w2 <= w1);
        }
    }
}
