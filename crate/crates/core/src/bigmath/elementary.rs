//! Interval enclosures of `ln`, `exp`, `π` and `cos`.
//!
//! All series are summed in outward-rounded interval arithmetic and closed
//! with an explicit tail bound, so the returned intervals always contain
//! the exact value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::dyadic::Dyadic;
use super::interval::{one_interval, symmetric, DyadicInterval};
use crate::{Error, Result};

fn bit_len(v: u64) -> u64 {
    64 - v.leading_zeros() as u64
}

/// Stop once a term magnitude drops below `2^-(w+4)`.
fn negligible(d: &Dyadic, w: u64) -> bool {
    match d.msb() {
        None => true,
        Some(m) => m < -(w as i64) - 4,
    }
}

/// `Σ_{j≥0} z^(2j+1)/(2j+1)`, valid for `|z| ≤ 1/3`.
fn atanh_series(z: &DyadicInterval, w: u64) -> DyadicInterval {
    let z2 = z.mul(z);
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut j: u64 = 1;
    loop {
        power = power.mul(&z2);
        sum = sum.add(&power.div_int(&BigInt::from(2 * j + 1)));
        j += 1;
        if negligible(&power.abs_max(), w) {
            break;
        }
    }
    // Remaining terms are bounded by |power|·|z²|/(1 − z²) ≤ |power|·|z²|·9/8.
    let tail = power
        .abs_max()
        .mul_exact(&z2.abs_max())
        .mul_exact(&Dyadic::from(9))
        .shl(-3);
    sum.add(&symmetric(&tail, w))
}

/// Enclosure of `ln 2` at working precision `w`.
pub fn ln2(w: u64) -> DyadicInterval {
    let third = DyadicInterval::from_ratio(&BigInt::one(), &BigInt::from(3), w);
    atanh_series(&third, w).shl(1)
}

/// Interval containing `ln(x)` for rational `x > 0`.
///
/// The argument is reduced to `y = x / 2^k ∈ (1/2, 2)` and
/// `ln y = 2·atanh((y−1)/(y+1))` is summed to a tail bound. The width is at
/// most `2^(2−precision)·max(1, |ln x|)`.
pub fn ln_interval(x: &BigRational, precision: u64) -> Result<DyadicInterval> {
    if !x.is_positive() {
        return Err(Error::domain(format!("ln of non-positive number {x}")));
    }
    let precision = precision.max(4);
    if x.is_one() {
        return Ok(DyadicInterval::zero(precision));
    }
    let (n, d) = (x.numer(), x.denom());
    let k = n.bits() as i64 - d.bits() as i64;
    let w = precision + 16 + bit_len(k.unsigned_abs()) + bit_len(precision);
    let (num, den) = if k >= 0 {
        (n.clone(), d << k as u64)
    } else {
        (n << k.unsigned_abs(), d.clone())
    };
    let y = DyadicInterval::from_ratio(&num, &den, w);
    let one = one_interval(w);
    let z = y.sub(&one).div(&y.add(&one))?;
    let mut acc = atanh_series(&z, w).shl(1);
    if k != 0 {
        acc = acc.add(&ln2(w).mul_int(&BigInt::from(k)));
    }
    Ok(acc.with_precision(precision))
}

/// Interval containing `exp(d)` for a single dyadic point.
fn exp_point(d: &Dyadic, precision: u64) -> Result<DyadicInterval> {
    if d.is_zero() {
        return Ok(one_interval(precision));
    }
    let approx = d.to_f64();
    if !approx.is_finite() || approx.abs() > 2f64.powi(40) {
        return Err(Error::budget("exp argument out of supported range"));
    }
    let k = (approx / std::f64::consts::LN_2).round() as i64;
    let w = precision + 16 + bit_len(k.unsigned_abs()) + bit_len(precision);
    let r = DyadicInterval::point(d.clone(), w).sub(&ln2(w).mul_int(&BigInt::from(k)));
    debug_assert!(r.abs_max() <= Dyadic::one());
    let mut sum = one_interval(w);
    let mut term = one_interval(w);
    let mut j: u64 = 1;
    loop {
        term = term.mul(&r).div_int(&BigInt::from(j));
        sum = sum.add(&term);
        j += 1;
        if j > 3 && negligible(&term.abs_max(), w) {
            break;
        }
    }
    // Lagrange remainder for |r| ≤ 1: |r|^(N+1)/(N+1)!·e ≤ 3·|term|·|r|.
    let tail = term
        .abs_max()
        .mul_exact(&r.abs_max())
        .mul_exact(&Dyadic::from(3));
    Ok(sum.add(&symmetric(&tail, w)).shl(k).with_precision(precision))
}

/// Interval containing `exp(x)` for every `x` in the argument interval.
pub fn exp_interval(x: &DyadicInterval, precision: u64) -> Result<DyadicInterval> {
    let lo = exp_point(x.lo(), precision)?;
    let hi = if x.lo() == x.hi() {
        lo.clone()
    } else {
        exp_point(x.hi(), precision)?
    };
    Ok(DyadicInterval::new(lo.lo().clone(), hi.hi().clone(), precision))
}

/// `atan(1/k)` by its alternating series.
fn atan_recip(k: u64, w: u64) -> DyadicInterval {
    let z = DyadicInterval::from_ratio(&BigInt::one(), &BigInt::from(k), w);
    let z2 = z.mul(&z);
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut j: u64 = 1;
    loop {
        power = power.mul(&z2);
        let term = power.div_int(&BigInt::from(2 * j + 1));
        sum = if j % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
        j += 1;
        if negligible(&power.abs_max(), w) {
            break;
        }
    }
    let tail = power.abs_max().mul_exact(&z2.abs_max());
    sum.add(&symmetric(&tail, w))
}

/// Enclosure of `π` by Machin's formula.
pub fn pi_interval(precision: u64) -> DyadicInterval {
    let w = precision + 16;
    let a = atan_recip(5, w).shl(4);
    let b = atan_recip(239, w).shl(2);
    a.sub(&b).with_precision(precision)
}

/// Interval containing `cos(x)` for every `x` in the argument interval.
pub fn cos_interval(x: &DyadicInterval, precision: u64) -> DyadicInterval {
    let mag = x.abs_max();
    let extra = mag.msb().map_or(0, |m| m.max(0) as u64 * 2);
    let w = precision + 16 + extra;
    let x = x.clone().with_precision(w);
    let x2 = x.mul(&x);
    let x2_max = x2.abs_max();
    let mut sum = one_interval(w);
    let mut term = one_interval(w);
    let mut j: u64 = 1;
    loop {
        term = term
            .mul(&x2)
            .div_int(&BigInt::from((2 * j - 1) * (2 * j)))
            .neg();
        sum = sum.add(&term);
        // Lagrange remainder bound: |x|^(2j+2)/(2j+2)!.
        let next = term
            .abs_max()
            .mul_exact(&x2_max)
            .div_round(&Dyadic::from(((2 * j + 1) * (2 * j + 2)) as i64), w, super::Round::Up);
        j += 1;
        if negligible(&next, w) && negligible(&term.abs_max(), w) {
            sum = sum.add(&symmetric(&next, w));
            break;
        }
    }
    sum.clamp(&Dyadic::from(-1), &Dyadic::one())
        .with_precision(precision)
}
