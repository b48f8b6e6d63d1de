use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Rounding direction for inexact dyadic operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// An exact number `mantissa · 2^exponent`.
///
/// The mantissa is kept odd (or zero, with exponent 0), so structural
/// equality coincides with numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

fn exp_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("dyadic exponent overflow")
}

/// Shifts `m` right by `s` bits, rounding in direction `dir`.
fn shift_right(m: &BigInt, s: u64, dir: Round) -> BigInt {
    if s == 0 || m.is_zero() {
        return m.clone();
    }
    let mag = m.magnitude();
    let (q, inexact) = if s >= mag.bits() {
        (BigInt::zero(), true)
    } else {
        let inexact = mag.trailing_zeros().is_some_and(|tz| tz < s);
        (BigInt::from(mag >> s), inexact)
    };
    let negative = m.sign() == Sign::Minus;
    let q = if negative { -q } else { q };
    if !inexact {
        return q;
    }
    match (dir, negative) {
        (Round::Down, true) => q - 1,
        (Round::Up, false) => q + 1,
        _ => q,
    }
}

fn div_dir(n: &BigInt, d: &BigInt, dir: Round) -> BigInt {
    let (q, r) = n.div_mod_floor(d);
    if dir == Round::Up && !r.is_zero() {
        q + 1
    } else {
        q
    }
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        let mut d = Dyadic { mantissa, exponent };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        match self.mantissa.trailing_zeros() {
            None => self.exponent = 0,
            Some(0) => {}
            Some(tz) => {
                self.mantissa >>= tz;
                self.exponent = exp_add(self.exponent, tz as i64);
            }
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: 0,
        }
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: k,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.mantissa.sign()
    }

    /// Bit length of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Smallest `k` with `|self| < 2^k`, or `None` for zero.
    pub fn msb(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(exp_add(self.exponent, self.bits() as i64))
        }
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Exact multiplication by `2^k`.
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: exp_add(self.exponent, k),
        }
    }

    pub fn add_exact(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as u64;
        let b = &other.mantissa << (other.exponent - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub_exact(&self, other: &Dyadic) -> Dyadic {
        self.add_exact(&other.neg())
    }

    pub fn mul_exact(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(
            &self.mantissa * &other.mantissa,
            exp_add(self.exponent, other.exponent),
        )
    }

    /// Exact midpoint `(a + b) / 2`.
    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        a.add_exact(b).shl(-1)
    }

    /// Rounds to at most `prec` significant bits.
    pub fn round(&self, prec: u64, dir: Round) -> Dyadic {
        let prec = prec.max(1);
        let bits = self.bits();
        if bits <= prec {
            return self.clone();
        }
        let s = bits - prec;
        Dyadic::new(
            shift_right(&self.mantissa, s, dir),
            exp_add(self.exponent, s as i64),
        )
    }

    /// Rounds to a multiple of `2^e`.
    pub fn round_to_exponent(&self, e: i64, dir: Round) -> Dyadic {
        if self.exponent >= e {
            return self.clone();
        }
        let s = (e as i128 - self.exponent as i128) as u64;
        Dyadic::new(shift_right(&self.mantissa, s, dir), e)
    }

    /// Directed-rounding addition. Operands whose exponents differ wildly
    /// are handled without materializing the aligned mantissa.
    pub fn add_round(&self, other: &Dyadic, prec: u64, dir: Round) -> Dyadic {
        if self.is_zero() {
            return other.round(prec, dir);
        }
        if other.is_zero() {
            return self.round(prec, dir);
        }
        let top = self.msb().unwrap().max(other.msb().unwrap());
        let cut = top.saturating_sub(prec as i64 + 4);
        let a = self.round_to_exponent(cut, dir);
        let b = other.round_to_exponent(cut, dir);
        a.add_exact(&b).round(prec, dir)
    }

    pub fn mul_round(&self, other: &Dyadic, prec: u64, dir: Round) -> Dyadic {
        self.mul_exact(other).round(prec, dir)
    }

    /// Directed-rounding quotient. Panics when `other` is zero.
    pub fn div_round(&self, other: &Dyadic, prec: u64, dir: Round) -> Dyadic {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let s = (prec + other.bits() + 2).saturating_sub(self.bits());
        let num = &self.mantissa << s;
        let q = div_dir(&num, &other.mantissa, dir);
        let e = exp_add(exp_add(self.exponent, -other.exponent), -(s as i64));
        Dyadic::new(q, e).round(prec, dir)
    }

    /// `num / den` rounded to `prec` bits in direction `dir`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u64, dir: Round) -> Dyadic {
        Dyadic::from_int(num.clone()).div_round(&Dyadic::from_int(den.clone()), prec, dir)
    }

    pub fn from_rational(q: &BigRational, prec: u64, dir: Round) -> Dyadic {
        Dyadic::from_ratio(q.numer(), q.denom(), prec, dir)
    }

    /// Exact conversion. The caller is responsible for the size of
    /// `2^exponent` when the exponent is large.
    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as u64)
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << self.exponent.unsigned_abs(),
            )
        }
    }

    /// Nearest-ish `f64`; saturates to ±inf or 0 outside the `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let shift = self.bits().saturating_sub(62);
        let top = (&self.mantissa >> shift).to_f64().unwrap_or(0.0);
        ldexp(top, self.exponent.saturating_add(shift as i64))
    }

    /// Smallest power of two `2^k` with `2^k ≥ |self|`.
    pub fn ceil_pow2(&self) -> Dyadic {
        match self.msb() {
            None => Dyadic::zero(),
            Some(m) => {
                if self.mantissa.magnitude().is_one() {
                    self.abs()
                } else {
                    Dyadic::pow2(m)
                }
            }
        }
    }
}

pub(crate) fn ldexp(mut v: f64, e: i64) -> f64 {
    let mut e = e.clamp(-4000, 4000);
    while e > 500 {
        v *= 2f64.powi(500);
        e -= 500;
    }
    while e < -500 {
        v *= 2f64.powi(-500);
        e += 500;
    }
    v * 2f64.powi(e as i32)
}

fn sign_rank(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.sign(), other.sign());
        if sa != sb {
            return sign_rank(sa).cmp(&sign_rank(sb));
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        let (ma, mb) = (self.msb().unwrap(), other.msb().unwrap());
        if ma != mb {
            let c = ma.cmp(&mb);
            return if sa == Sign::Plus { c } else { c.reverse() };
        }
        match self.sub_exact(other).sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

impl From<BigInt> for Dyadic {
    fn from(v: BigInt) -> Self {
        Dyadic::from_int(v)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `m*2^e`, `2^e`, an integer, or a rational with a power-of-two
    /// denominator.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(format!("invalid dyadic number {s:?}"));
        if let Some((m, e)) = s.split_once("*2^") {
            let m: BigInt = m.trim().parse().map_err(|_| bad())?;
            let e: i64 = e.trim().parse().map_err(|_| bad())?;
            return Ok(Dyadic::new(m, e));
        }
        if let Some(e) = s.strip_prefix("2^") {
            let e: i64 = e.trim().parse().map_err(|_| bad())?;
            return Ok(Dyadic::pow2(e));
        }
        let q = super::parse_rational(s).map_err(|_| bad())?;
        let den = q.denom();
        if den.magnitude().count_ones() != 1 {
            return Err(bad());
        }
        let k = den.bits() as i64 - 1;
        Ok(Dyadic::new(q.numer().clone(), -k))
    }
}
