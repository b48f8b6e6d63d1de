use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::SparsePoly;
use crate::bigmath::{pow_rat, refine, Budget, DyadicInterval, RefineTarget};
use crate::{Error, Result};

/// Which path decided a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "route")]
pub enum SignRoute {
    /// Decided without evaluation: `x = 0`, `x = ±1`, or a single term.
    Trivial,
    /// Interval evaluation at the given precision excluded zero.
    Interval { precision: u64 },
    /// The value was obtained without rounding: dyadic evaluation collapsed
    /// to exactly zero, or the rational fallback ran after the interval cap.
    Exact,
}

/// Exact sign of `f(x)` under the default budget.
pub fn sign_at_rational(f: &SparsePoly, x: &BigRational) -> Result<Sign> {
    sign_at_rational_with(f, x, &Budget::default()).map(|(s, _)| s)
}

/// Exact sign of `f(x)` and the route that decided it.
///
/// Interval evaluation runs at doubling precision up to `sign_eval_cap`.
/// If zero is still enclosed, the value is expanded exactly when that needs
/// at most `exact_cap_bits`; otherwise a budget error is returned. The exact
/// path is exponential in the bit size of the exponents.
pub fn sign_at_rational_with(f: &SparsePoly, x: &BigRational, budget: &Budget) -> Result<(Sign, SignRoute)> {
    let terms = f.terms();
    if x.is_zero() {
        let s = match terms.first() {
            Some(t) if t.exp.is_zero() => t.coeff.sign(),
            _ => Sign::NoSign,
        };
        return Ok((s, SignRoute::Trivial));
    }
    if x.abs() == BigRational::from_integer(1.into()) {
        let negative = x.is_negative();
        let sum: BigInt = terms
            .iter()
            .map(|t| if negative && t.exp.is_odd() { -&t.coeff } else { t.coeff.clone() })
            .sum();
        return Ok((sum.sign(), SignRoute::Trivial));
    }
    if terms.len() == 1 {
        let t = &terms[0];
        let flip = x.is_negative() && t.exp.is_odd();
        let s = if flip { -t.coeff.sign() } else { t.coeff.sign() };
        return Ok((s, SignRoute::Trivial));
    }

    let max_exp_bits = terms.iter().map(|t| t.exp.bits()).max().unwrap_or(0);
    let ax = x.abs();
    let eval = |p: u64| -> Result<DyadicInterval> {
        let w = p + max_exp_bits + 8;
        let base = DyadicInterval::from_rational(&ax, w);
        let mut acc = DyadicInterval::zero(p);
        for t in terms {
            let mut coeff = t.coeff.clone();
            if x.is_negative() && t.exp.is_odd() {
                coeff = -coeff;
            }
            let term = base.powi(&t.exp)?.mul_int(&coeff);
            acc = acc.add(&term);
        }
        Ok(acc.with_precision(p))
    };
    let start = budget.start_precision.max(8);
    match refine(eval, &RefineTarget::SignDetermined, start, budget.sign_eval_cap) {
        Ok(iv) => match iv.sign().expect("determined") {
            Sign::NoSign => Ok((Sign::NoSign, SignRoute::Exact)),
            s => Ok((s, SignRoute::Interval { precision: iv.precision() })),
        },
        Err(Error::Budget { last, .. }) => exact_sign(f, x, budget).map_err(|e| match e {
            Error::Budget { reason, .. } => Error::Budget { reason, last },
            other => other,
        }),
        Err(other) => Err(other),
    }
}

/// Bits needed to expand every term over the common denominator.
fn exact_size(f: &SparsePoly, x: &BigRational) -> Option<u64> {
    let per = x.numer().bits().max(x.denom().bits());
    let deg = f.degree().to_u64()?;
    deg.checked_mul(per)?.checked_add(f.max_coeff().bits() + 2)
}

fn exact_sign(f: &SparsePoly, x: &BigRational, budget: &Budget) -> Result<(Sign, SignRoute)> {
    match exact_size(f, x) {
        Some(bits) if bits <= budget.exact_cap_bits => {}
        _ => {
            return Err(Error::budget(format!(
                "sign undetermined at {} bits and exact expansion exceeds {} bits",
                budget.sign_eval_cap, budget.exact_cap_bits
            )))
        }
    }
    let mut acc = BigRational::zero();
    for t in f.terms() {
        acc += pow_rat(x, &t.exp)? * BigRational::from_integer(t.coeff.clone());
    }
    let s = if acc.is_zero() {
        Sign::NoSign
    } else if acc.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Ok((s, SignRoute::Exact))
}
