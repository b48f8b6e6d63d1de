//! Exact comparison of integers given as signed power products, and exact
//! signs of linear forms in logarithms of rationals.
//!
//! Equality is always decided over a coprime basis. A nonzero sign is
//! found by interval refinement whose termination is guaranteed by the
//! Baker–Wüstholz lower bound `ln|Λ| ≥ −C(n)·t·s^n`.

mod basis;
mod linear_form;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

pub use basis::coprime_basis;
pub use linear_form::{
    baker_constant, sign_linear_form, sign_linear_form_with, BakerFloor, Certificate,
    LinearFormInLogs,
};

#[allow(unused_imports)]
pub(crate) use linear_form::{ln2_lo, ln2_up, log_size};

use crate::bigmath::{parse_int, Budget};
use crate::{Error, Result};

/// `sign · Π base_i^exp_i` with `base_i ≥ 2` and `exp_i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuccinctInt {
    #[serde(with = "crate::serde_str")]
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Repr {
    sign: Sign,
    factors: Vec<(BigInt, BigUint)>,
}

impl SuccinctInt {
    pub fn zero() -> Self {
        Self::from_parts(Sign::NoSign, Vec::new()).expect("zero is valid")
    }

    /// Factors with base 1 or exponent 0 are dropped; a zero base or zero
    /// sign yields zero. Negative bases are rejected.
    pub fn from_parts(sign: Sign, factors: Vec<(BigInt, BigUint)>) -> Result<Self> {
        let mut kept = Vec::new();
        let mut zero = sign == Sign::NoSign;
        for (b, e) in factors {
            if b.sign() == Sign::Minus {
                return Err(Error::domain(format!("negative base {b}; put the sign in front")));
            }
            if e.is_zero() || b.is_one() {
                continue;
            }
            if b.is_zero() {
                zero = true;
            }
            kept.push((b, e));
        }
        let repr = if zero {
            Repr { sign: Sign::NoSign, factors: Vec::new() }
        } else {
            Repr { sign, factors: kept }
        };
        Ok(SuccinctInt { repr })
    }

    pub fn sign(&self) -> Sign {
        self.repr.sign
    }

    pub fn factors(&self) -> &[(BigInt, BigUint)] {
        &self.repr.factors
    }

    /// Product of two values by concatenating factor lists.
    pub fn mul(&self, other: &SuccinctInt) -> SuccinctInt {
        let sign = self.sign() * other.sign();
        let factors = self.factors().iter().chain(other.factors()).cloned().collect();
        Self::from_parts(sign, factors).expect("factors already valid")
    }

    /// Upper bound on the bit length of the expanded value.
    pub fn bit_size(&self) -> BigUint {
        self.factors()
            .iter()
            .map(|(b, e)| BigUint::from(b.bits()) * e)
            .sum()
    }

    /// Expand to a big integer, refusing when more than `max_bits` would be needed.
    pub fn expand(&self, max_bits: u64) -> Result<BigInt> {
        if self.bit_size() > BigUint::from(max_bits) {
            return Err(Error::budget(format!("expansion exceeds {max_bits} bits")));
        }
        let mag = self
            .factors()
            .iter()
            .fold(BigInt::one(), |acc, (b, e)| acc * Pow::pow(b, e));
        Ok(match self.sign() {
            Sign::NoSign => BigInt::zero(),
            Sign::Plus => mag,
            Sign::Minus => -mag,
        })
    }
}

impl fmt::Display for Repr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::NoSign => return write!(f, "0"),
            Sign::Minus => write!(f, "-")?,
            Sign::Plus => {}
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (b, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{b}^{e}")?;
        }
        Ok(())
    }
}

impl FromStr for Repr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<SuccinctInt>().map(|v| v.repr)
    }
}

impl fmt::Display for SuccinctInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.repr.fmt(f)
    }
}

impl FromStr for SuccinctInt {
    type Err = Error;

    /// `[-]b1^e1*b2^e2*...`; a bare `b` means `b^1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest),
            None => (Sign::Plus, s.strip_prefix('+').unwrap_or(s)),
        };
        if body.is_empty() {
            return Err(Error::parse("empty succinct integer"));
        }
        let mut factors = Vec::new();
        for part in body.split('*') {
            let (b, e) = match part.split_once('^') {
                Some((b, e)) => (b, e),
                None => (part, "1"),
            };
            if b.trim().starts_with(['-', '+']) {
                return Err(Error::parse(format!("signed base in `{part}`")));
            }
            let b = parse_int(b)?;
            let e = parse_int(e)?;
            let e = e
                .to_biguint()
                .ok_or_else(|| Error::parse(format!("negative exponent in `{part}`")))?;
            factors.push((b, e));
        }
        SuccinctInt::from_parts(sign, factors)
    }
}

fn sign_rank(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Order of the exact values of `x` and `y`.
pub fn compare_succinct(x: &SuccinctInt, y: &SuccinctInt) -> Result<Ordering> {
    compare_succinct_with(x, y, &Budget::default()).map(|(o, _)| o)
}

/// `ln|x| − ln|y|` as a linear form, grouping factors by exponent.
pub fn magnitude_form(x: &SuccinctInt, y: &SuccinctInt) -> Result<LinearFormInLogs> {
    let mut groups: BTreeMap<&BigUint, (BigInt, BigInt)> = BTreeMap::new();
    for (b, e) in x.factors() {
        groups.entry(e).or_insert_with(|| (BigInt::one(), BigInt::one())).0 *= b;
    }
    for (b, e) in y.factors() {
        groups.entry(e).or_insert_with(|| (BigInt::one(), BigInt::one())).1 *= b;
    }
    let terms = groups
        .into_iter()
        .map(|(e, (n, d))| (BigRational::new(n, d), BigInt::from(e.clone())))
        .collect();
    LinearFormInLogs::new(terms)
}

/// Order of `x` and `y` together with how it was certified.
pub fn compare_succinct_with(
    x: &SuccinctInt,
    y: &SuccinctInt,
    budget: &Budget,
) -> Result<(Ordering, Certificate)> {
    let (sx, sy) = (sign_rank(x.sign()), sign_rank(y.sign()));
    if sx != sy || sx == 0 {
        return Ok((sx.cmp(&sy), Certificate::Structural));
    }
    let form = magnitude_form(x, y)?;
    let (s, cert) = sign_linear_form_with(&form, budget)?;
    let mag = match s {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    };
    Ok((if sx < 0 { mag.reverse() } else { mag }, cert))
}
